#include "kc/bound.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kc {

Rational Rational::make(long long n, long long d) {
    if (d == 0) throw std::runtime_error("zero denominator");
    long long g = std::gcd(n < 0 ? -n : n, d < 0 ? -d : d);
    if (g == 0) g = 1;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational{n / g, d / g};
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

int KnotTable::crossing_number(const std::string& name) const {
    auto it = entries.find(name);
    if (it == entries.end()) throw std::runtime_error("unknown knot name: " + name);
    return it->second;
}

KnotTable load_knot_table(const std::string& text) {
    KnotTable t;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string name, value, note;
        if (!std::getline(ls, name, ',') || !std::getline(ls, value, ','))
            throw std::runtime_error("bad table record at line " + std::to_string(lineno));
        std::getline(ls, note);
        if (t.entries.count(name))
            throw std::runtime_error("duplicate knot name: " + name);
        size_t pos = 0;
        int c = 0;
        try {
            c = std::stoi(value, &pos);
        } catch (const std::exception&) {
            throw std::runtime_error("non-integer crossing number for " + name);
        }
        if (pos != value.size())
            throw std::runtime_error("non-integer crossing number for " + name);
        if (c < 0) throw std::runtime_error("crossing number out of range for " + name);
        t.entries[name] = c;
        t.provenance[name] = note;
    }
    return t;
}

std::string BoundReport::to_string() const {
    std::ostringstream os;
    os << "components:";
    for (const auto& n : components) os << ' ' << n;
    os << "\nS = " << component_sum << "  c = " << diagram_crossings
       << "  S/16 = " << lower_bound.to_string() << "\n";
    os << "c > S/16: " << (c_exceeds_bound ? "yes" : "no") << "\n";
    os << "c <= S:   " << (c_within_sum ? "yes" : "no") << "\n";
    os << "verdict:  " << (verdict ? "true" : "false") << "\n";
    return os.str();
}

BoundReport make_bound_report(const std::vector<std::string>& names, long long S, long long c) {
    BoundReport r;
    r.components = names;
    r.component_sum = S;
    r.diagram_crossings = c;
    r.lower_bound = Rational::make(S, 16);
    r.c_exceeds_bound = 16 * c > S;
    r.c_within_sum = c <= S;
    r.verdict = r.c_exceeds_bound && r.c_within_sum;
    return r;
}

BoundReport check_bound(const std::vector<std::string>& components, const KnotTable& table,
                        const std::optional<Diagram>& diagram, const DiagramProvider& fixtures) {
    if (components.empty()) throw std::runtime_error("no components given");
    long long S = 0;
    for (const auto& name : components) S += table.crossing_number(name);

    Diagram d = Diagram::unknot();
    if (diagram) {
        d = *diagram;
    } else {
        if (!fixtures) throw std::runtime_error("missing bundled diagram provider");
        bool first = true;
        for (const auto& name : components) {
            Diagram part = fixtures(name);
            d = first ? part : Diagram::connected_sum(d, part);
            first = false;
        }
    }
    return make_bound_report(components, S, d.crossings());
}

std::string BudgetCertificate::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < budgets.size(); ++i) {
        os << "crossing " << i << ": ";
        for (size_t j = 0; j < budgets[i].models.size(); ++j)
            os << (j ? "," : "") << model_name(budgets[i].models[j]);
        os << " -> " << budgets[i].total << "\n";
    }
    os << aggregate.inequality << "\n";
    return os.str();
}

BudgetCertificate budget_certificate(const Diagram& d,
                                     const std::map<int, ModelSet>& assignment) {
    BudgetCertificate cert;
    if (d.is_unknot()) {
        cert.degenerate = true;
        cert.aggregate = aggregate_bound({}, 0);
        cert.aggregate.inequality = "degenerate: the 0-crossing sentinel has no crossings";
        return cert;
    }
    for (int c = 0; c < d.crossings(); ++c) {
        auto it = assignment.find(c);
        if (it == assignment.end())
            throw std::runtime_error("uncovered crossing " + std::to_string(c));
        cert.budgets.push_back(per_crossing_bound(it->second));
    }
    cert.aggregate = aggregate_bound(cert.budgets, d.crossings());
    cert.degenerate = cert.aggregate.degenerate;
    return cert;
}

}  // namespace kc
