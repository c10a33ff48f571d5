// Regenerates the six-edge co-occurrence constant two ways and reports:
// once from the case analysis behind reconstruct(), once from an exhaustive
// parameter-collision search. Exits nonzero on any discrepancy.

#include <iostream>
#include <set>

#include "kc/compat.hpp"
#include "kc/enumerate.hpp"

using namespace kc;

int main() {
    std::cout << "admissibility graph derivation\n\n";

    std::cout << "route 1: case analysis supports (five types each)\n";
    static const char* kCaseNames[6] = {
        "kappa=0, eta<0", "kappa=0, eta>0", "kappa=0, eta=0",
        "kappa>0, a+>0",  "kappa>0, h+>0",  "kappa>0, a+=h+=0",
    };
    for (size_t i = 0; i < kAdmissibleEdges.size(); ++i) {
        auto [a, b] = kAdmissibleEdges[i];
        std::cout << "  " << kCaseNames[i] << ": {I+, I-, II-, " << kBlockTypeNames[a] << ", "
                  << kBlockTypeNames[b] << "}\n";
    }

    std::cout << "\nroute 2: collision search over entry sums <= 8\n";
    CollisionReport rep = param_collision_search(8);
    std::cout << "  collision classes: " << rep.collision_classes << "\n";
    std::cout << "  classes with two admissible members: " << rep.admissible_collisions << "\n";
    if (rep.example.found) {
        std::cout << "  example pair with equal parameters:\n";
        std::cout << "    " << rep.example.a.to_string()
                  << (is_admissible(rep.example.a) ? "  (admissible)" : "  (not admissible)")
                  << "\n";
        std::cout << "    " << rep.example.b.to_string()
                  << (is_admissible(rep.example.b) ? "  (admissible)" : "  (not admissible)")
                  << "\n";
    }

    std::cout << "\nroute 3: boundary pattern oracle\n";
    bool ok = rep.admissible_collisions == 0 && rep.example.found;
    try {
        CompatGraph g = block_type_graph();  // throws on oracle/text conflicts
        std::set<std::pair<int, int>> non_universal;
        for (const auto& e : g.edges)
            if (!is_universal_type(e.a) && !is_universal_type(e.b))
                non_universal.insert({e.a, e.b});
        std::cout << "  non-universal edges: " << non_universal.size() << "\n";
        for (auto [a, b] : non_universal)
            std::cout << "    " << kBlockTypeNames[a] << " -- " << kBlockTypeNames[b] << "\n";
        ok = ok && non_universal.size() == kAdmissibleEdges.size();
    } catch (const std::exception& e) {
        std::cout << "  CONFLICT: " << e.what() << "\n";
        ok = false;
    }

    std::cout << "\n" << (ok ? "routes agree" : "ROUTES DISAGREE") << "\n";
    return ok ? 0 : 1;
}
