#include "doctest.h"
#include <stdexcept>
#include "kc/compat.hpp"

#include <set>

using namespace kc;

TEST_SUITE("compat") {

TEST_CASE("every pattern closes up through the face complex") {
    // consecutive word entries must share a unique face, cyclically; this
    // validates the hand-derived words against the complex
    for (int t = 0; t < kNumBlockTypes; ++t) {
        const auto& pat = block_boundary_pattern(t);
        CHECK(pat.word.size() >= 3);
        CHECK(disjoint_realizable(t, t));  // exercises the face lookup fully
        // no edge is crossed twice by one canonical curve
        std::set<int> seen(pat.word.begin(), pat.word.end());
        CHECK(seen.size() == pat.word.size());
    }
}

TEST_CASE("canonical patterns carry the table counts") {
    for (int t = 0; t < kNumBlockTypes; ++t) {
        const auto& pat = block_boundary_pattern(t);
        int axis[3] = {0, 0, 0};
        int h1p = 0, h1m = 0, h2 = 0, kappa = 0;
        for (int e : pat.word) {
            switch (e) {
                case BE_AXIS_P: axis[0]++; break;
                case BE_AXIS_0: axis[1]++; break;
                case BE_AXIS_M: axis[2]++; break;
                case BE_H1P_A:
                case BE_H1P_B: h1p++; break;
                case BE_H1M_A:
                case BE_H1M_B: h1m++; break;
                case BE_H2: h2++; break;
                case BE_KU:
                case BE_KL: kappa++; break;
            }
        }
        CHECK(axis[0] == kParamTable[0][t]);
        CHECK(axis[1] == kParamTable[1][t]);
        CHECK(axis[2] == kParamTable[2][t]);
        CHECK(h1p == kParamTable[3][t]);
        CHECK(h1m == kParamTable[4][t]);
        CHECK(h2 == kParamTable[5][t]);
        CHECK(kappa == kParamTable[6][t]);
    }
}

TEST_CASE("disjointness is symmetric") {
    for (int a = 0; a < kNumBlockTypes; ++a)
        for (int b = a + 1; b < kNumBlockTypes; ++b)
            CHECK(disjoint_realizable(a, b) == disjoint_realizable(b, a));
}

TEST_CASE("headline disjointness facts") {
    for (int t = 0; t < kNumBlockTypes; ++t) {
        CHECK(disjoint_realizable(TY_I_PLUS, t));   // I+ next to anything
        CHECK(disjoint_realizable(TY_I_MINUS, t));  // and I-
        CHECK(disjoint_realizable(TY_II_MINUS, t));
        CHECK(disjoint_realizable(t, t));  // parallel copies always exist
    }
    CHECK_FALSE(disjoint_realizable(TY_I, TY_III));
    CHECK(disjoint_realizable(TY_TAU1, TY_TAU2));
}

TEST_CASE("the oracle reproduces the stated graph exactly") {
    CompatGraph g = block_type_graph();  // throws on any mismatch
    CompatGraph want = expected_block_type_graph();
    for (int a = 0; a < kNumBlockTypes; ++a)
        for (int b = a + 1; b < kNumBlockTypes; ++b)
            CHECK(g.has_edge(a, b) == want.has_edge(a, b));
}

TEST_CASE("six non-universal edges match the reconstruction cases") {
    CompatGraph g = block_type_graph();
    std::set<std::pair<int, int>> non_universal;
    for (const auto& e : g.edges) {
        if (is_universal_type(e.a) || is_universal_type(e.b)) continue;
        non_universal.insert({std::min(e.a, e.b), std::max(e.a, e.b)});
    }
    CHECK(non_universal.size() == 6);
    for (const auto& [a, b] : kAdmissibleEdges)
        CHECK(non_universal.count({std::min(a, b), std::max(a, b)}) == 1);
}

TEST_CASE("admissible supports are cliques of the block type graph") {
    CompatGraph g = block_type_graph();
    for (const auto& clique : g.realizable_cliques) CHECK(g.is_clique(clique));
    // each admissibility edge plus the universal triple is a realizable clique
    for (const auto& [a, b] : kAdmissibleEdges)
        CHECK(g.is_clique({TY_I_PLUS, TY_I_MINUS, TY_II_MINUS, a, b}));
}

TEST_CASE("subclass graph carries the pasting-case supports as cliques") {
    CompatGraph g = subclass_graph();
    CHECK(g.is_clique({SC_Fp, SC_Fm, SC_Cp, SC_Cm, SC_F0}));
    CHECK(g.is_clique({SC_Fp, SC_Fm, SC_Cm, SC_Tm, SC_FmP}));
    CHECK(g.is_clique({SC_Fp, SC_Fm, SC_Cm, SC_CmP, SC_FmP}));
    CHECK(g.is_clique({SC_Fp, SC_Fm, SC_Tm, SC_Cp, SC_Cm}));
    bool found = false;
    for (const auto& c : g.realizable_cliques) {
        std::set<int> s(c.begin(), c.end());
        if (s == std::set<int>{SC_Fp, SC_Fm, SC_Cm, SC_Tm, SC_FmP}) found = true;
    }
    CHECK(found);
}

TEST_CASE("subclass universality and derived non-edges") {
    CompatGraph g = subclass_graph();
    for (int v = 0; v < kNumSubclasses; ++v) {
        if (v != SC_Fp) CHECK(g.has_edge(SC_Fp, v));
        if (v != SC_Fm) CHECK(g.has_edge(SC_Fm, v));
    }
    // no case support contains both twisted signs
    CHECK_FALSE(g.has_edge(SC_Tm, SC_Tp));
}

TEST_CASE("edge provenance is tagged and reported") {
    CompatGraph g = subclass_graph();
    for (const auto& e : g.edges) {
        bool universal = e.a == SC_Fp || e.a == SC_Fm || e.b == SC_Fp || e.b == SC_Fm;
        CHECK(e.provenance == (universal ? "stated" : "derived"));
    }
    std::string rep = g.provenance_report();
    CHECK(rep.find("[stated]") != std::string::npos);
    CHECK(rep.find("[derived]") != std::string::npos);
    std::string dot = g.to_dot();
    CHECK(dot.find("T-") != std::string::npos);
}

TEST_CASE("smaller-class refinement is metadata only") {
    CompatGraph g = subclass_graph();
    REQUIRE(g.smaller_classes.size() == kNumSubclasses);
    int total = 0;
    for (int n : g.smaller_classes) total += n;
    CHECK(total == 19);
    CHECK(g.provenance_report().find("total 19") != std::string::npos);
}

TEST_CASE("cross-module: admissible supports are cliques here too") {
    CompatGraph g = block_type_graph();
    // enumerate all supports allowed by is_admissible over indicator vectors
    for (int mask = 0; mask < (1 << kNumBlockTypes); ++mask) {
        BlockVector v;
        std::vector<int> support;
        for (int t = 0; t < kNumBlockTypes; ++t)
            if (mask & (1 << t)) {
                v[t] = 1;
                support.push_back(t);
            }
        if (!is_admissible(v)) continue;
        CHECK(g.is_clique(support));
    }
}

}  // TEST_SUITE
