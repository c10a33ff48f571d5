#include "kc/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kc {

namespace {

// Builders produce the map as mate[] pairs over compass-slot crossings:
// slots ccw are (top-left, bottom-left, bottom-right, top-right), so the
// strands run top-left<->bottom-right and bottom-left<->top-right.
constexpr int TL = 0, BL = 1, BR = 2, TR = 3;

struct MapBuilder {
    std::vector<HalfEdge> mate;
    int crossings = 0;

    int add_crossing() {
        crossings++;
        mate.resize(4 * crossings, -1);
        return crossings - 1;
    }
    void join(HalfEdge a, HalfEdge b) {
        if (mate[a] != -1 || mate[b] != -1) throw std::runtime_error("builder: slot reused");
        mate[a] = b;
        mate[b] = a;
    }
};

// Checkerboard over/under assignment: 2-color the faces and put the over
// strand on the slot pair whose corner 0 face is colored black. The face
// walk below does not need orientation data.
std::vector<int> alternating_parities(const MapBuilder& mb) {
    const int darts = 4 * mb.crossings;
    std::vector<int> face_of(darts, -1);
    int nf = 0;
    for (int start = 0; start < darts; ++start) {
        if (face_of[start] != -1) continue;
        int h = start;
        do {
            face_of[h] = nf;
            HalfEdge m = mb.mate[h];
            h = make_he(he_crossing(m), (he_slot(m) + 1) & 3);
        } while (h != start);
        nf++;
    }
    // color faces by BFS over shared edges
    std::vector<int> color(nf, -1);
    std::vector<std::vector<int>> adj(nf);
    for (int h = 0; h < darts; ++h) {
        int f1 = face_of[h];
        int f2 = face_of[mb.mate[h]];
        adj[f1].push_back(f2);
        adj[f2].push_back(f1);
    }
    for (int f0 = 0; f0 < nf; ++f0) {
        if (color[f0] != -1) continue;
        color[f0] = 0;
        std::vector<int> queue = {f0};
        while (!queue.empty()) {
            int f = queue.back();
            queue.pop_back();
            for (int g : adj[f]) {
                if (color[g] == -1) {
                    color[g] = 1 - color[f];
                    queue.push_back(g);
                } else if (color[g] == color[f]) {
                    throw std::runtime_error("map is not checkerboard colorable");
                }
            }
        }
    }
    std::vector<int> parity(mb.crossings);
    for (int c = 0; c < mb.crossings; ++c) {
        // face at corner 0 = face of dart (c,0)
        parity[c] = color[face_of[make_he(c, 0)]] == 0 ? 1 : 0;
    }
    return parity;
}

Diagram finish(const MapBuilder& mb) {
    std::vector<int> parity = alternating_parities(mb);
    // Diagram convention wants the under strand on slots {0,2}; rotate the
    // crossings whose over strand sits there by one slot.
    std::vector<HalfEdge> mate(4 * mb.crossings);
    auto shift = [&](HalfEdge h) {
        int c = he_crossing(h);
        if (parity[c] == 1) return h;  // over strand already on {1,3}
        return make_he(c, (he_slot(h) + 1) & 3);
    };
    for (HalfEdge h = 0; h < 4 * mb.crossings; ++h) mate[shift(h)] = shift(mb.mate[h]);

    // Orient by a strand walk seeded as an arrival at (0,0); any crossing
    // whose under arrival lands on slot 2 is rotated by two slots, which
    // swaps the under in/out labels and keeps everything else fixed.
    std::vector<char> rotate2(mb.crossings, 0);
    HalfEdge at = make_he(0, 0);
    for (int steps = 0; steps < 2 * mb.crossings; ++steps) {
        HalfEdge out = make_he(he_crossing(at), opposite_slot(he_slot(at)));
        HalfEdge dst = mate[out];
        if (he_slot(dst) == 2) rotate2[he_crossing(dst)] = 1;
        at = dst;
        if (at == make_he(0, 0)) break;  // shorter walks fail in from_map
    }
    std::vector<HalfEdge> m2(4 * mb.crossings);
    auto rot2 = [&](HalfEdge h) {
        int c = he_crossing(h);
        return rotate2[c] ? make_he(c, opposite_slot(he_slot(h))) : h;
    };
    for (HalfEdge h = 0; h < 4 * mb.crossings; ++h) m2[rot2(h)] = rot2(mate[h]);
    return Diagram::from_map(mb.crossings, m2, std::vector<int>(mb.crossings, 1));
}

}  // namespace

Diagram rational_diagram(const std::vector<int>& twists) {
    if (twists.empty()) throw std::runtime_error("empty twist list");
    for (int t : twists)
        if (t < 1) throw std::runtime_error("twist counts must be positive");

    MapBuilder mb;
    // open tangle ends
    HalfEdge nw = -1, ne = -1, sw = -1, se = -1;
    bool horizontal = true;
    for (size_t i = 0; i < twists.size(); ++i) {
        for (int k = 0; k < twists[i]; ++k) {
            int c = mb.add_crossing();
            if (horizontal) {
                // crossing appended on the right: TL/BL attach to ne/se
                if (ne < 0) {
                    nw = make_he(c, TL);
                    sw = make_he(c, BL);
                } else {
                    mb.join(make_he(c, TL), ne);
                    mb.join(make_he(c, BL), se);
                }
                ne = make_he(c, TR);
                se = make_he(c, BR);
            } else {
                // crossing appended below: TL/TR attach to sw/se
                mb.join(make_he(c, TL), sw);
                mb.join(make_he(c, TR), se);
                sw = make_he(c, BL);
                se = make_he(c, BR);
            }
        }
        horizontal = !horizontal;
    }
    // numerator closure
    mb.join(nw, ne);
    mb.join(sw, se);
    return finish(mb);
}

Diagram pretzel_diagram(const std::vector<int>& twists) {
    if (twists.size() < 2) throw std::runtime_error("need at least two strands");
    for (int t : twists)
        if (t < 1) throw std::runtime_error("twist counts must be positive");

    MapBuilder mb;
    std::vector<HalfEdge> top_l, top_r, bot_l, bot_r;
    for (int t : twists) {
        HalfEdge tl = -1, tr = -1, pl = -1, pr = -1;
        for (int k = 0; k < t; ++k) {
            int c = mb.add_crossing();
            if (k == 0) {
                tl = make_he(c, TL);
                tr = make_he(c, TR);
            } else {
                mb.join(make_he(c, TL), pl);
                mb.join(make_he(c, TR), pr);
            }
            pl = make_he(c, BL);
            pr = make_he(c, BR);
        }
        top_l.push_back(tl);
        top_r.push_back(tr);
        bot_l.push_back(pl);
        bot_r.push_back(pr);
    }
    const size_t n = twists.size();
    for (size_t i = 0; i + 1 < n; ++i) {
        mb.join(top_r[i], top_l[i + 1]);
        mb.join(bot_r[i], bot_l[i + 1]);
    }
    mb.join(top_r[n - 1], top_l[0]);
    mb.join(bot_r[n - 1], bot_l[0]);
    return finish(mb);
}

namespace {

struct Candidate {
    std::string construction;
    Diagram diagram;
};

// deterministic enumeration: rational twist lists of odd length (so the
// numerator closure ends on a horizontal block), then pretzels with three
// and four strands; links and unreduced closures are filtered out
std::vector<Candidate> candidates_with(int n) {
    std::vector<Candidate> out;
    auto try_add = [&](const std::string& kind, const std::vector<int>& tw) {
        Diagram d;
        try {
            d = kind == "rational" ? rational_diagram(tw) : pretzel_diagram(tw);
        } catch (const std::runtime_error&) {
            return;  // a link, or otherwise rejected
        }
        if (d.crossings() != n) return;
        if (!d.validate_minimal_adjacency().ok()) return;
        std::ostringstream os;
        os << kind << '[';
        for (size_t i = 0; i < tw.size(); ++i) os << (i ? "," : "") << tw[i];
        os << ']';
        out.push_back({os.str(), d});
    };

    for (int len = 1; len <= n; len += 2) {
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int left, int pos) {
            if (pos == len) {
                if (left == 0) try_add("rational", cur);
                return;
            }
            for (int v = 1; v <= left; ++v) {
                cur.push_back(v);
                rec(left - v, pos + 1);
                cur.pop_back();
            }
        };
        rec(n, 0);
    }
    for (int strands : {3, 4}) {
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int left, int pos) {
            if (pos == strands) {
                if (left == 0) try_add("pretzel", cur);
                return;
            }
            for (int v = 1; v <= left; ++v) {
                cur.push_back(v);
                rec(left - v, pos + 1);
                cur.pop_back();
            }
        };
        rec(n, 0);
    }
    return out;
}

const std::map<int, int> kCatalogCounts = {{3, 1}, {4, 1}, {5, 2}, {6, 3},
                                           {7, 7}, {8, 21}, {9, 49}};

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> out;
    for (const auto& [n, want] : kCatalogCounts) {
        auto cands = candidates_with(n);
        std::set<std::string> seen_pd;
        int made = 0;
        for (const auto& c : cands) {
            if (made == want) break;
            std::string pd = c.diagram.to_pd();
            if (!seen_pd.insert(pd).second) continue;
            Fixture f;
            f.name = std::to_string(n) + "_" + std::to_string(made + 1);
            f.crossings = n;
            f.construction = c.construction;
            f.diagram = c.diagram;
            out.push_back(std::move(f));
            made++;
        }
        if (made != want)
            throw std::runtime_error("fixture generation shortfall at " + std::to_string(n) +
                                     " crossings: " + std::to_string(made) + " of " +
                                     std::to_string(want));
    }
    return out;
}

}  // namespace

const std::vector<Fixture>& bundled_fixtures() {
    static const std::vector<Fixture> fx = build_fixtures();
    return fx;
}

const KnotTable& bundled_table() {
    static const KnotTable t = [] {
        KnotTable table;
        for (const auto& f : bundled_fixtures()) {
            table.entries[f.name] = f.crossings;
            table.provenance[f.name] = "standard catalog count; diagram " + f.construction;
        }
        return table;
    }();
    return t;
}

Diagram bundled_diagram(const std::string& name) {
    for (const auto& f : bundled_fixtures())
        if (f.name == name) return f.diagram;
    throw std::runtime_error("missing bundled diagram for " + name);
}

std::string bundled_table_csv() {
    std::ostringstream os;
    os << "# name,crossing_number,provenance\n";
    for (const auto& f : bundled_fixtures())
        os << f.name << ',' << f.crossings << ',' << "standard catalog count; diagram "
           << f.construction << '\n';
    return os.str();
}

namespace {

std::string data_dir() {
    const char* env = std::getenv("KNOTCOMB_DATA");
    if (env && *env) return env;
    return "";
}

}  // namespace

Diagram fixture_diagram(const std::string& name) {
    std::string dir = data_dir();
    if (!dir.empty()) {
        std::ifstream in(dir + "/pd/" + name + ".pd");
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            return Diagram::from_pd(ss.str());
        }
    }
    return bundled_diagram(name);
}

KnotTable fixture_table() {
    std::string dir = data_dir();
    if (!dir.empty()) {
        std::ifstream in(dir + "/knots.csv");
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            return load_knot_table(ss.str());
        }
    }
    return bundled_table();
}

}  // namespace kc
