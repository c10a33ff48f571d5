// Acceptance suite. Each criterion prints one PASS/FAIL line with its
// measured runtime; the process exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "kc/blocks.hpp"
#include "kc/compat.hpp"
#include "kc/enumerate.hpp"
#include "kc/fixtures.hpp"
#include "kc/models.hpp"
#include "kc/moves.hpp"

using namespace kc;

namespace {

struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<bool(std::string&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Table fidelity: params() and derived() reproduce the 9x7 and 9x6 tables.
bool criterion_tables(std::string& detail) {
    int checked = 0;
    for (int t = 0; t < kNumBlockTypes; ++t) {
        ParamVector p = params(BlockVector::unit(t));
        for (int r = 0; r < 7; ++r, ++checked)
            if (p[r] != kParamTable[r][t]) {
                detail = "parameter table mismatch";
                return false;
            }
        DerivedVector d = derived(p);
        int vals[6] = {d.a_plus, d.a_minus, d.h_plus, d.h_minus, d.eta, d.sigma};
        for (int r = 0; r < 6; ++r, ++checked)
            if (vals[r] != kDerivedTable[r][t]) {
                detail = "derived table mismatch";
                return false;
            }
    }
    detail = std::to_string(checked) + " entries exact";
    return true;
}

// 2. Reconstruction equivalence over all admissible vectors with sum <= 8,
//    plus one collision pair proving the restriction necessary.
bool criterion_reconstruction(std::string& detail) {
    RoundTripReport rep = roundtrip_admissible_parallel(8);
    RoundTripReport ser = roundtrip_admissible_serial(8);
    if (!(rep == ser)) {
        detail = "parallel and serial enumerations disagree";
        return false;
    }
    if (rep.failures != 0) {
        detail = std::to_string(rep.failures) + " round-trip failures";
        return false;
    }
    CollisionReport col = param_collision_search(8);
    if (!col.example.found || col.admissible_collisions != 0) {
        detail = "collision search failed";
        return false;
    }
    detail = std::to_string(rep.admissible) + " admissible vectors of " +
             std::to_string(rep.vectors) + " round-trip exactly; collision pair " +
             col.example.a.to_string() + " vs " + col.example.b.to_string();
    return true;
}

// 3. Generator identities on 1e5 random vectors, integer arithmetic.
bool criterion_identities(std::string& detail) {
    IdentityReport rep = identity_suite_parallel(100000, 0x5eed, 64);
    IdentityReport ser = identity_suite_serial(100000, 0x5eed, 64);
    if (!(rep == ser)) {
        detail = "parallel and serial sweeps disagree";
        return false;
    }
    if (rep.violations != 0) {
        detail = std::to_string(rep.violations) + " identity violations";
        return false;
    }
    detail = "kappa/eta/sigma and eta=a+ + a- - Iv0 hold on 100000 vectors";
    return true;
}

// 4. Move-system closure over the eight types plus direction duality.
bool criterion_moves(std::string& detail) {
    std::vector<TauType> all;
    for (int b = 1; b <= 4; ++b)
        for (bool p : {true, false}) all.push_back(TauType{b, p});

    std::set<TauType> terminals;
    for (TauType t : all)
        if (applicable_moves(t, Direction::Up).empty()) terminals.insert(t);
    if (terminals != std::set<TauType>{TauType{1, true}, TauType{2, true}}) {
        detail = "terminal set is wrong";
        return false;
    }
    // every maximal path ends in a terminal: every type reaches one, and the
    // per-move measures exclude infinite descent, so check reachability from
    // every vertex and every successor
    for (TauType t : all) {
        std::set<TauType> seen;
        std::vector<TauType> queue = {t};
        bool reached = false;
        while (!queue.empty()) {
            TauType cur = queue.back();
            queue.pop_back();
            if (!seen.insert(cur).second) continue;
            if (terminals.count(cur)) reached = true;
            for (MoveKind k : applicable_moves(cur, Direction::Up))
                for (TauType nx : transition(cur, k, Direction::Up)) queue.push_back(nx);
        }
        if (!reached) {
            detail = "type " + t.to_string() + " cannot reach the terminals";
            return false;
        }
    }
    // duality
    for (TauType t : all)
        for (MoveKind k : {MoveKind::Zero, MoveKind::OneS, MoveKind::OneD}) {
            auto has = [&](Direction d) {
                auto ks = applicable_moves(t, d);
                return std::find(ks.begin(), ks.end(), k) != ks.end();
            };
            auto has_up_flipped = [&] {
                auto ks = applicable_moves(t.flipped(), Direction::Up);
                return std::find(ks.begin(), ks.end(), k) != ks.end();
            };
            if (has(Direction::Down) != has_up_flipped()) {
                detail = "duality applicability mismatch";
                return false;
            }
            if (!has(Direction::Down)) continue;
            auto down = transition(t, k, Direction::Down);
            auto up = transition(t.flipped(), k, Direction::Up);
            std::set<TauType> ds(down.begin(), down.end()), us;
            for (TauType u : up) us.insert(u.flipped());
            if (ds != us) {
                detail = "duality transition mismatch";
                return false;
            }
        }
    detail = "terminals {1+,2+}, closure and duality verified over all eight types";
    return true;
}

// 5. Per-crossing caps over all expanded rows and their mutation closure.
bool criterion_counting(std::string& detail) {
    if (max_crossings(Model::X3) != 5) {
        detail = "enumerator gives X3 != 5";
        return false;
    }
    size_t checked = 0;
    for (const auto& t : cooccurrence_closure()) {
        CrossingBudget b;
        try {
            b = per_crossing_bound(t);
        } catch (const std::exception& e) {
            detail = std::string("budget failure: ") + e.what();
            return false;
        }
        if (b.total > 16 || (!b.z_only && b.total > 11)) {
            detail = "cap exceeded for " + t.to_string();
            return false;
        }
        checked++;
    }
    detail = std::to_string(checked) + " closed model sets within 16/11; X3 budget = 5";
    return true;
}

// 6. Desk check over all pairs and triples of the bundled table.
bool criterion_desk_check(std::string& detail) {
    SweepInput in = sweep_input_from_fixtures();
    SweepReport rep = bound_sweep_parallel(in, true);
    if (rep.verdict_failures || rep.crossing_sum_failures || rep.face_identity_failures) {
        detail = "failures: verdict " + std::to_string(rep.verdict_failures) + ", sums " +
                 std::to_string(rep.crossing_sum_failures) + ", faces " +
                 std::to_string(rep.face_identity_failures);
        return false;
    }
    detail = std::to_string(in.names.size()) + " table entries, " + std::to_string(rep.tuples) +
             " pair/triple sums verified with exact rationals";
    return true;
}

// 7. Compatibility consistency across modules.
bool criterion_compat(std::string& detail) {
    CompatGraph g;
    try {
        g = block_type_graph();
    } catch (const std::exception& e) {
        detail = std::string("oracle conflict: ") + e.what();
        return false;
    }
    for (int mask = 0; mask < (1 << kNumBlockTypes); ++mask) {
        BlockVector v;
        std::vector<int> support;
        for (int t = 0; t < kNumBlockTypes; ++t)
            if (mask & (1 << t)) {
                v[t] = 1;
                support.push_back(t);
            }
        if (!is_admissible(v)) continue;
        if (!g.is_clique(support)) {
            detail = "admissible support is not a clique";
            return false;
        }
    }
    std::set<std::pair<int, int>> non_universal;
    for (const auto& e : g.edges)
        if (!is_universal_type(e.a) && !is_universal_type(e.b))
            non_universal.insert({std::min(e.a, e.b), std::max(e.a, e.b)});
    std::set<std::pair<int, int>> reconstruction_cases;
    for (const auto& [a, b] : kAdmissibleEdges)
        reconstruction_cases.insert({std::min(a, b), std::max(a, b)});
    if (non_universal != reconstruction_cases) {
        detail = "non-universal edges do not match the six reconstruction cases";
        return false;
    }
    CompatGraph sub = subclass_graph();
    std::vector<std::vector<int>> supports = {
        {SC_Fp, SC_Fm, SC_Cp, SC_Cm, SC_F0},
        {SC_Fp, SC_Fm, SC_Tm, SC_Cp, SC_Cm},
        {SC_Fp, SC_Fm, SC_Cm, SC_CmP, SC_FmP},
        {SC_Fp, SC_Fm, SC_Cm, SC_Tm, SC_FmP},
    };
    for (const auto& s : supports)
        if (!sub.is_clique(s)) {
            detail = "pasting-case support is not a clique of the subclass graph";
            return false;
        }
    detail = "admissible supports are cliques; six non-universal edges; case supports are "
             "subclass cliques";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"table fidelity", 1.0, criterion_tables},
        {"reconstruction oracle equivalence", 60.0, criterion_reconstruction},
        {"identity suite", 60.0, criterion_identities},
        {"move-system closure", 1.0, criterion_moves},
        {"per-crossing budget caps", 300.0, criterion_counting},
        {"bound inequality desk check", 120.0, criterion_desk_check},
        {"compatibility consistency", 60.0, criterion_compat},
    };

    bool all_ok = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double dt = seconds_since(t0);
        if (dt > criteria[i].limit_seconds) {
            ok = false;
            detail += " [over the " + std::to_string(criteria[i].limit_seconds) + "s limit]";
        }
        std::printf("%s  criterion %zu: %s (%.2fs): %s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, dt, detail.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
