#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kc/diagram.hpp"
#include "kc/models.hpp"

namespace kc {

struct Rational {
    long long num = 0;
    long long den = 1;
    static Rational make(long long n, long long d);
    std::string to_string() const;
};

struct KnotTable {
    // name -> crossing number, with a provenance note per entry
    std::map<std::string, int> entries;
    std::map<std::string, std::string> provenance;
    int crossing_number(const std::string& name) const;
};

// CSV records "name,crossing_number[,provenance]"; '#' starts a comment.
KnotTable load_knot_table(const std::string& text);

struct BoundReport {
    std::vector<std::string> components;
    long long component_sum = 0;  // S
    long long diagram_crossings = 0;  // c
    Rational lower_bound;  // S/16
    bool c_exceeds_bound = false;  // c > S/16
    bool c_within_sum = false;     // c <= S
    bool verdict = false;
    std::string to_string() const;
};

// Pure arithmetic over exact integers; the verdict compares 16c against S.
BoundReport make_bound_report(const std::vector<std::string>& names, long long S, long long c);

using DiagramProvider = std::function<Diagram(const std::string& name)>;

BoundReport check_bound(const std::vector<std::string>& components, const KnotTable& table,
                        const std::optional<Diagram>& diagram, const DiagramProvider& fixtures);

struct BudgetCertificate {
    std::vector<CrossingBudget> budgets;
    AggregateBound aggregate;
    bool degenerate = false;
    std::string to_string() const;
};

BudgetCertificate budget_certificate(const Diagram& d,
                                     const std::map<int, ModelSet>& assignment);

}  // namespace kc
