#include "kc/compat.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kc {

const char* const kBoundaryEdgeNames[kNumBoundaryEdges] = {
    "axis+", "axis0", "axis-", "h1+a", "h1+b", "h1-a", "h1-b", "h2", "Ku", "Kl"};

namespace {

// Faces of the block boundary complex with directed edge cycles. Every edge
// appears in exactly two faces with opposite directions.
struct FaceCycle {
    std::vector<std::pair<int, bool>> edges;  // (edge, traversed forward)
};

const std::array<FaceCycle, 6>& face_cycles() {
    static const std::array<FaceCycle, 6> faces = [] {
        std::array<FaceCycle, 6> f = {{
            {{{BE_KU, true}, {BE_H1P_A, true}, {BE_AXIS_P, false}}},                       // upper quad of the upper rectangle
            {{{BE_H1P_B, true}, {BE_KU, false}, {BE_AXIS_0, false}, {BE_AXIS_M, false}}},  // lower quad of the upper rectangle
            {{{BE_AXIS_0, true}, {BE_AXIS_P, true}, {BE_H1M_A, false}, {BE_KL, false}}},   // upper quad of the lower rectangle
            {{{BE_KL, true}, {BE_H1M_B, false}, {BE_AXIS_M, true}}},                       // lower quad of the lower rectangle
            {{{BE_H1P_A, false}, {BE_H1P_B, false}, {BE_H2, true}}},                       // outer wall at the upper rectangle
            {{{BE_H2, false}, {BE_H1M_B, true}, {BE_H1M_A, true}}},                        // outer wall at the lower rectangle
        }};
        // closed surface: every marked edge lies in exactly two faces,
        // traversed in opposite directions
        int fwd[kNumBoundaryEdges] = {};
        int bwd[kNumBoundaryEdges] = {};
        for (const auto& fc : f)
            for (const auto& [e, forward] : fc.edges) (forward ? fwd[e] : bwd[e])++;
        for (int e = 0; e < kNumBoundaryEdges; ++e)
            if (fwd[e] != 1 || bwd[e] != 1)
                throw std::logic_error("block boundary complex is inconsistent");
        return f;
    }();
    return faces;
}

int face_between(int e1, int e2) {
    const auto& fs = face_cycles();
    int found = -1;
    for (int f = 0; f < 6; ++f) {
        bool has1 = false, has2 = false;
        for (const auto& [e, fwd] : fs[f].edges) {
            has1 |= (e == e1);
            has2 |= (e == e2);
        }
        if (has1 && has2) {
            if (found >= 0) throw std::runtime_error("ambiguous face between edges");
            found = f;
        }
    }
    if (found < 0) throw std::runtime_error("no face between consecutive pattern edges");
    return found;
}

const std::array<BoundaryPattern, kNumBlockTypes>& patterns() {
    static const std::array<BoundaryPattern, kNumBlockTypes> pats = {{
        {TY_I_PLUS, {BE_AXIS_P, BE_H1P_A, BE_H2, BE_H1M_A}},
        {TY_I, {BE_AXIS_0, BE_H1P_B, BE_H2, BE_H1M_A}},
        {TY_I_MINUS, {BE_AXIS_M, BE_H1P_B, BE_H2, BE_H1M_B}},
        {TY_II_PLUS, {BE_AXIS_P, BE_H1P_A, BE_H1P_B, BE_AXIS_0}},
        {TY_II, {BE_AXIS_P, BE_H1P_A, BE_H1P_B, BE_AXIS_M, BE_H1M_B, BE_H1M_A}},
        {TY_II_MINUS, {BE_AXIS_M, BE_H1M_B, BE_H1M_A, BE_AXIS_0}},
        {TY_III, {BE_AXIS_P, BE_H1P_A, BE_H2, BE_H1M_B, BE_AXIS_M, BE_AXIS_0}},
        {TY_TAU1, {BE_KU, BE_AXIS_M, BE_H1M_B, BE_H2, BE_H1P_A}},
        {TY_TAU2, {BE_KU, BE_AXIS_P, BE_H1M_A, BE_H1M_B, BE_AXIS_M}},
    }};
    return pats;
}

// One curve's chord inside a face: its points on two marked edges.
struct Chord {
    int curve;
    int edge1, edge2;
};

bool chords_cross(int n, const std::array<int, 2>& a, const std::array<int, 2>& b) {
    auto inside = [&](int lo, int hi, int x) {
        // open arc from lo to hi going forward on a circle of n positions
        for (int p = (lo + 1) % n; p != hi; p = (p + 1) % n)
            if (p == x) return true;
        return false;
    };
    bool in1 = inside(a[0], a[1], b[0]);
    bool in2 = inside(a[0], a[1], b[1]);
    return in1 != in2;
}

}  // namespace

std::string BoundaryPattern::to_string() const {
    std::ostringstream os;
    os << kBlockTypeNames[type] << ": [";
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) os << ' ';
        os << kBoundaryEdgeNames[word[i]];
    }
    os << ']';
    return os.str();
}

const BoundaryPattern& block_boundary_pattern(int type) {
    if (type < 0 || type >= kNumBlockTypes) throw std::runtime_error("bad block type");
    return patterns()[type];
}

bool disjoint_realizable(int type_a, int type_b) {
    const BoundaryPattern& A = block_boundary_pattern(type_a);
    const BoundaryPattern& B = block_boundary_pattern(type_b);

    // Which edges each curve crosses (at most once each).
    std::array<int, kNumBoundaryEdges> a_hits{}, b_hits{};
    a_hits.fill(0);
    b_hits.fill(0);
    for (int e : A.word) a_hits[e] = 1;
    for (int e : B.word) b_hits[e] = 1;

    std::vector<int> shared;
    for (int e = 0; e < kNumBoundaryEdges; ++e)
        if (a_hits[e] && b_hits[e]) shared.push_back(e);

    // chords per face, per curve
    std::array<std::vector<Chord>, 6> chords;
    auto add_chords = [&](const BoundaryPattern& P, int curve) {
        const int m = static_cast<int>(P.word.size());
        for (int i = 0; i < m; ++i) {
            int e1 = P.word[i];
            int e2 = P.word[(i + 1) % m];
            chords[face_between(e1, e2)].push_back({curve, e1, e2});
        }
    };
    add_chords(A, 0);
    add_chords(B, 1);

    const int k = static_cast<int>(shared.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
        // order[e]: 0 when curve A's point comes first along the edge
        std::array<int, kNumBoundaryEdges> order{};
        order.fill(0);
        for (int i = 0; i < k; ++i) order[shared[i]] = (mask >> i) & 1;

        bool ok = true;
        for (int f = 0; f < 6 && ok; ++f) {
            if (chords[f].size() < 2) continue;
            // positions of every curve point around the face boundary circle
            std::map<std::pair<int, int>, int> pos;  // (curve, edge) -> position
            int n = 0;
            for (const auto& [e, fwd] : face_cycles()[f].edges) {
                std::vector<int> curves_here;
                if (a_hits[e]) curves_here.push_back(0);
                if (b_hits[e]) curves_here.push_back(1);
                if (curves_here.size() == 2 && order[e] == 1)
                    std::swap(curves_here[0], curves_here[1]);
                if (!fwd) std::reverse(curves_here.begin(), curves_here.end());
                for (int c : curves_here) pos[{c, e}] = n++;
            }
            for (size_t i = 0; i < chords[f].size() && ok; ++i) {
                for (size_t j = i + 1; j < chords[f].size() && ok; ++j) {
                    const Chord& ci = chords[f][i];
                    const Chord& cj = chords[f][j];
                    std::array<int, 2> pi = {pos.at({ci.curve, ci.edge1}),
                                             pos.at({ci.curve, ci.edge2})};
                    std::array<int, 2> pj = {pos.at({cj.curve, cj.edge1}),
                                             pos.at({cj.curve, cj.edge2})};
                    if (chords_cross(n, pi, pj)) ok = false;
                }
            }
        }
        if (ok) return true;
    }
    return false;
}

bool CompatGraph::has_edge(int a, int b) const {
    for (const auto& e : edges)
        if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return true;
    return false;
}

bool CompatGraph::is_clique(const std::vector<int>& vs) const {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] != vs[j] && !has_edge(vs[i], vs[j])) return false;
    return true;
}

std::string CompatGraph::to_dot() const {
    std::ostringstream os;
    os << "graph compat {\n";
    for (size_t i = 0; i < vertices.size(); ++i)
        os << "  n" << i << " [label=\"" << vertices[i] << "\"];\n";
    for (const auto& e : edges) {
        os << "  n" << e.a << " -- n" << e.b;
        if (e.provenance == "derived") os << " [style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string CompatGraph::provenance_report() const {
    std::ostringstream os;
    for (const auto& e : edges)
        os << vertices[e.a] << " -- " << vertices[e.b] << " [" << e.provenance << "]\n";
    for (const auto& t : unwitnessed_triangles) {
        os << "triangle {";
        for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << vertices[t[i]];
        os << "} unwitnessed\n";
    }
    if (!smaller_classes.empty()) {
        int total = 0;
        os << "smaller classes:";
        for (size_t v = 0; v < vertices.size(); ++v) {
            os << ' ' << vertices[v] << ':' << smaller_classes[v];
            total += smaller_classes[v];
        }
        os << " (total " << total << ")\n";
    }
    return os.str();
}

CompatGraph expected_block_type_graph() {
    CompatGraph g;
    for (int t = 0; t < kNumBlockTypes; ++t) g.vertices.push_back(kBlockTypeNames[t]);
    auto add = [&](int a, int b, const char* prov) {
        if (a > b) std::swap(a, b);
        if (!g.has_edge(a, b)) g.edges.push_back({a, b, prov});
    };
    for (int u : kUniversalTypes)
        for (int t = 0; t < kNumBlockTypes; ++t)
            if (t != u) add(u, t, "stated");
    for (const auto& [a, b] : kAdmissibleEdges) add(a, b, "stated");
    // the six case supports are realizable five-cliques
    for (const auto& [a, b] : kAdmissibleEdges)
        g.realizable_cliques.push_back({TY_I_PLUS, TY_I_MINUS, TY_II_MINUS, a, b});
    return g;
}

CompatGraph block_type_graph() {
    CompatGraph g = expected_block_type_graph();
    CompatGraph oracle;
    oracle.vertices = g.vertices;
    for (int a = 0; a < kNumBlockTypes; ++a)
        for (int b = a + 1; b < kNumBlockTypes; ++b)
            if (disjoint_realizable(a, b)) oracle.edges.push_back({a, b, "derived"});
    // The oracle must agree with the stated graph; a mismatch is a build error.
    for (const auto& e : oracle.edges)
        if (!g.has_edge(e.a, e.b))
            throw std::runtime_error(std::string("block type graph conflict: oracle admits ") +
                                     kBlockTypeNames[e.a] + "--" + kBlockTypeNames[e.b]);
    for (const auto& e : g.edges)
        if (!oracle.has_edge(e.a, e.b))
            throw std::runtime_error(std::string("block type graph conflict: oracle rejects ") +
                                     kBlockTypeNames[e.a] + "--" + kBlockTypeNames[e.b]);
    oracle.realizable_cliques = g.realizable_cliques;
    for (auto& e : oracle.edges) {
        if (g.has_edge(e.a, e.b)) {
            for (const auto& ge : g.edges)
                if ((ge.a == e.a && ge.b == e.b) || (ge.a == e.b && ge.b == e.a))
                    e.provenance = ge.provenance + "+oracle";
        }
    }
    return oracle;
}

const char* const kSubclassNames[kNumSubclasses] = {"F0",   "F+",   "F-",   "C+",
                                                    "C-",   "T+",   "T-",   "F+^-",
                                                    "F-^+", "C+^-", "C-^+"};

CompatGraph subclass_graph() {
    CompatGraph g;
    for (int i = 0; i < kNumSubclasses; ++i) g.vertices.push_back(kSubclassNames[i]);
    // two smaller classes per curved/twisted/marked subclass, one per flat
    g.smaller_classes = {1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2};

    // the four pasting-case supports
    std::vector<std::vector<int>> supports = {
        {SC_Fp, SC_Fm, SC_Cp, SC_Cm, SC_F0},
        {SC_Fp, SC_Fm, SC_Tm, SC_Cp, SC_Cm},
        {SC_Fp, SC_Fm, SC_Cm, SC_CmP, SC_FmP},
        {SC_Fp, SC_Fm, SC_Cm, SC_Tm, SC_FmP},
    };
    auto apply = [](const std::vector<int>& s, int (*f)(int)) {
        std::vector<int> out;
        for (int v : s) out.push_back(f(v));
        std::sort(out.begin(), out.end());
        return out;
    };
    auto mirror = [](int v) { return v == SC_Tm ? SC_Tp : (v == SC_Tp ? SC_Tm : v); };
    auto updown = [](int v) {
        switch (v) {
            case SC_FmP: return static_cast<int>(SC_FpM);
            case SC_FpM: return static_cast<int>(SC_FmP);
            case SC_CmP: return static_cast<int>(SC_CpM);
            case SC_CpM: return static_cast<int>(SC_CmP);
            default: return v;
        }
    };
    std::set<std::vector<int>> closed;
    for (auto s : supports) {
        std::sort(s.begin(), s.end());
        closed.insert(s);
        closed.insert(apply(s, mirror));
        closed.insert(apply(s, updown));
        closed.insert(apply(apply(s, mirror), updown));
    }

    std::set<std::pair<int, int>> derived_edges;
    for (const auto& s : closed)
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                derived_edges.insert({std::min(s[i], s[j]), std::max(s[i], s[j])});

    std::set<std::pair<int, int>> stated_edges;
    for (int u : {SC_Fp, SC_Fm})
        for (int v = 0; v < kNumSubclasses; ++v)
            if (v != u) stated_edges.insert({std::min(u, v), std::max(u, v)});

    for (const auto& [a, b] : stated_edges) g.edges.push_back({a, b, "stated"});
    for (const auto& [a, b] : derived_edges)
        if (!stated_edges.count({a, b})) g.edges.push_back({a, b, "derived"});
    std::sort(g.edges.begin(), g.edges.end(), [](const CompatEdge& x, const CompatEdge& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });

    for (const auto& s : closed) g.realizable_cliques.push_back(s);

    // triangles of the graph not contained in any witnessed support
    for (int a = 0; a < kNumSubclasses; ++a)
        for (int b = a + 1; b < kNumSubclasses; ++b)
            for (int c = b + 1; c < kNumSubclasses; ++c) {
                if (!(g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c))) continue;
                bool witnessed = false;
                for (const auto& s : closed) {
                    bool ia = std::find(s.begin(), s.end(), a) != s.end();
                    bool ib = std::find(s.begin(), s.end(), b) != s.end();
                    bool ic = std::find(s.begin(), s.end(), c) != s.end();
                    if (ia && ib && ic) {
                        witnessed = true;
                        break;
                    }
                }
                if (!witnessed) g.unwitnessed_triangles.push_back({a, b, c});
            }
    return g;
}

}  // namespace kc
