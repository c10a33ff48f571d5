#pragma once

#include <string>
#include <vector>

#include "kc/blocks.hpp"

namespace kc {

// Marked edges of the block boundary sphere. The axis splits at the two
// knot points into plus/zero/minus intervals; the two skeleton rectangles
// meet their 1-handles in the h1 edges, split by the knot into above/below
// parts; h2 is the corner edge on the 2-handle; ku/kl are the knot arcs.
enum BoundaryEdge : int {
    BE_AXIS_P = 0,
    BE_AXIS_0 = 1,
    BE_AXIS_M = 2,
    BE_H1P_A = 3,
    BE_H1P_B = 4,
    BE_H1M_A = 5,
    BE_H1M_B = 6,
    BE_H2 = 7,
    BE_KU = 8,
    BE_KL = 9,
};
constexpr int kNumBoundaryEdges = 10;
extern const char* const kBoundaryEdgeNames[kNumBoundaryEdges];

// Canonical boundary curve of one block type: the cyclic sequence of marked
// edges it crosses. Each type crosses each edge at most once.
struct BoundaryPattern {
    int type = -1;
    std::vector<int> word;
    std::string to_string() const;
};

const BoundaryPattern& block_boundary_pattern(int type);

// Whether two (possibly equal) types admit disjoint parallel placements:
// exhaustive search over per-edge point orders, requiring a non-crossing
// chord system inside every face of the block boundary complex.
bool disjoint_realizable(int type_a, int type_b);

struct CompatEdge {
    int a = 0;
    int b = 0;
    std::string provenance;  // "stated" or "derived"
};

struct CompatGraph {
    std::vector<std::string> vertices;
    std::vector<CompatEdge> edges;
    std::vector<std::vector<int>> realizable_cliques;
    std::vector<std::vector<int>> unwitnessed_triangles;
    // smaller-class multiplicity per vertex (metadata only; the refined
    // graph carries no derived edge set)
    std::vector<int> smaller_classes;

    bool has_edge(int a, int b) const;
    bool is_clique(const std::vector<int>& vs) const;
    std::string to_dot() const;
    std::string provenance_report() const;
};

// The nine-vertex block type graph, computed by the disjointness oracle.
CompatGraph block_type_graph();

// The expected block type graph: I+, I- and II- universal plus the six
// reconstruction-case edges. block_type_graph() must agree; the acceptance
// suite fails loudly otherwise.
CompatGraph expected_block_type_graph();

// The eleven 0-handle subclasses of the band-free taxonomy.
enum SubclassVertex : int {
    SC_F0 = 0,
    SC_Fp = 1,
    SC_Fm = 2,
    SC_Cp = 3,
    SC_Cm = 4,
    SC_Tp = 5,
    SC_Tm = 6,
    SC_FpM = 7,
    SC_FmP = 8,
    SC_CpM = 9,
    SC_CmP = 10,
};
constexpr int kNumSubclasses = 11;
extern const char* const kSubclassNames[kNumSubclasses];

// Subclass graph: F+/F- universality plus the symmetric closure of the four
// pasting-case supports under the mirror (Tm <-> Tp) and vertical-direction
// (F-^+ <-> F+^-, C-^+ <-> C+^-) swaps. Case supports are recorded as
// realizable cliques; triangles not inside any witnessed support are listed.
CompatGraph subclass_graph();

}  // namespace kc
