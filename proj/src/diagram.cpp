#include "kc/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kc {

namespace {

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    bool comment = false;
    for (char ch : text) {
        if (ch == '#') comment = true;
        if (ch == '\n') comment = false;
        if (comment) continue;
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    if (issues.empty()) {
        os << "ok\n";
        return os.str();
    }
    for (const auto& v : issues) os << v.text << "\n";
    return os.str();
}

Diagram Diagram::unknot() { return Diagram(); }

void Diagram::finish_build(const char* planarity_error) {
    const int darts = 4 * n_;
    edge_at_.assign(darts, -1);
    outgoing_.assign(darts, 0);
    edges_.clear();
    if (n_ == 0) return;

    for (HalfEdge h = 0; h < darts; ++h) {
        if (mate_[h] < 0 || mate_[h] >= darts || mate_[mate_[h]] != h || mate_[h] == h)
            throw std::runtime_error("malformed diagram: bad half-edge pairing");
    }

    // Strand walk from (0,0). Slot 0 is the incoming under-strand, so the
    // first traversed edge leaves through slot 2.
    int visited = 0;
    HalfEdge at = make_he(0, 0);  // arrival half-edge
    do {
        HalfEdge out = make_he(he_crossing(at), opposite_slot(he_slot(at)));
        if (edge_at_[out] != -1) throw std::runtime_error("malformed diagram: strand revisits an edge");
        HalfEdge dst = mate_[out];
        EdgeRec rec;
        rec.id = visited;
        rec.tail = out;
        rec.head = dst;
        edges_.push_back(rec);
        edge_at_[out] = rec.id;
        edge_at_[dst] = rec.id;
        outgoing_[out] = 1;
        const int s = he_slot(dst);
        if (s == 2) throw std::runtime_error("malformed diagram: strand enters an under-out slot");
        if (s != 0 && ((s & 1) != over_parity_[he_crossing(dst)]))
            throw std::runtime_error("malformed diagram: strand enters crossing off the marked strands");
        ++visited;
        at = dst;
    } while (at != make_he(0, 0) && visited <= 2 * n_);

    if (visited != 2 * n_ || at != make_he(0, 0))
        throw std::runtime_error("multiple components: diagram is not a single closed strand");
    for (int c = 0; c < n_; ++c) {
        if (edge_at_[make_he(c, 0)] == -1)
            throw std::runtime_error("multiple components: crossing not reached by the strand");
    }

    if (static_cast<int>(faces().size()) != n_ + 2) throw std::runtime_error(planarity_error);
}

Diagram Diagram::from_map(int crossings, const std::vector<HalfEdge>& mate,
                          const std::vector<int>& over_parity) {
    Diagram d;
    d.n_ = crossings;
    d.mate_ = mate;
    d.over_parity_ = over_parity;
    if (static_cast<int>(mate.size()) != 4 * crossings ||
        static_cast<int>(over_parity.size()) != crossings)
        throw std::runtime_error("malformed diagram: size mismatch");
    d.finish_build("not planar: rotation system has positive genus");
    return d;
}

Diagram Diagram::from_pd(const std::string& text) {
    auto tokens = split_tokens(text);
    if (tokens.empty()) throw std::runtime_error("no crossings");

    std::vector<std::array<long, 4>> tuples;
    for (const auto& tok : tokens) {
        if (tok.size() < 3 || (tok[0] != 'X' && tok[0] != 'x'))
            throw std::runtime_error("malformed tuple: " + tok);
        const char open = tok[1];
        const char close = tok.back();
        if (!((open == '(' && close == ')') || (open == '[' && close == ']')))
            throw std::runtime_error("malformed tuple: " + tok);
        std::array<long, 4> vals{};
        std::string body = tok.substr(2, tok.size() - 3);
        std::istringstream is(body);
        std::string field;
        int k = 0;
        while (std::getline(is, field, ',')) {
            if (k >= 4) throw std::runtime_error("malformed tuple: " + tok);
            size_t pos = 0;
            long v = 0;
            try {
                v = std::stol(field, &pos);
            } catch (const std::exception&) {
                throw std::runtime_error("malformed tuple: " + tok);
            }
            if (pos != field.size()) throw std::runtime_error("malformed tuple: " + tok);
            vals[k++] = v;
        }
        if (k != 4) throw std::runtime_error("malformed tuple: " + tok);
        tuples.push_back(vals);
    }

    const int n = static_cast<int>(tuples.size());
    std::map<long, std::vector<HalfEdge>> where;
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) where[tuples[c][s]].push_back(make_he(c, s));

    for (const auto& [label, hs] : where) {
        if (hs.size() == 1)
            throw std::runtime_error("open strand: label " + std::to_string(label) + " used once");
        if (hs.size() > 2)
            throw std::runtime_error("label " + std::to_string(label) + " used more than twice");
    }

    Diagram d;
    d.n_ = n;
    d.mate_.assign(4 * n, -1);
    d.over_parity_.assign(n, 1);  // PD convention: over strand on slots 1,3
    for (const auto& [label, hs] : where) {
        d.mate_[hs[0]] = hs[1];
        d.mate_[hs[1]] = hs[0];
    }
    d.finish_build("non-planar PD code");
    return d;
}

Diagram Diagram::from_gauss(const std::string& text) {
    auto tokens = split_tokens(text);
    if (tokens.empty()) throw std::runtime_error("no crossings");

    struct Visit {
        long label;
        bool over;
        bool positive;
    };
    std::vector<Visit> visits;
    for (const auto& tok : tokens) {
        if (tok.size() < 3) throw std::runtime_error("malformed gauss token: " + tok);
        char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
        if (kind != 'O' && kind != 'U') throw std::runtime_error("malformed gauss token: " + tok);
        char sign = tok.back();
        if (sign != '+' && sign != '-') throw std::runtime_error("malformed gauss token: " + tok);
        std::string num = tok.substr(1, tok.size() - 2);
        size_t pos = 0;
        long label = 0;
        try {
            label = std::stol(num, &pos);
        } catch (const std::exception&) {
            throw std::runtime_error("malformed gauss token: " + tok);
        }
        if (pos != num.size()) throw std::runtime_error("malformed gauss token: " + tok);
        visits.push_back({label, kind == 'O', sign == '+'});
    }
    if (visits.size() % 2 != 0) throw std::runtime_error("odd number of gauss tokens");
    const int n = static_cast<int>(visits.size()) / 2;

    std::map<long, std::pair<int, int>> occurrence;  // label -> (over index, under index)
    std::map<long, std::pair<bool, bool>> seen;
    for (int i = 0; i < 2 * n; ++i) {
        auto& s = seen[visits[i].label];
        auto& o = occurrence[visits[i].label];
        if (visits[i].over) {
            if (s.first) throw std::runtime_error("gauss label passes over twice");
            s.first = true;
            o.first = i;
        } else {
            if (s.second) throw std::runtime_error("gauss label passes under twice");
            s.second = true;
            o.second = i;
        }
    }
    for (const auto& [label, s] : seen) {
        if (!s.first || !s.second)
            throw std::runtime_error("gauss label " + std::to_string(label) + " appears once");
    }
    // Handedness must agree between the two visits of one crossing.
    for (const auto& [label, o] : occurrence) {
        if (visits[o.first].positive != visits[o.second].positive)
            throw std::runtime_error("gauss label " + std::to_string(label) +
                                     " has inconsistent handedness");
    }

    // Edge t runs from token t to token t+1 (mod 2n). Each crossing:
    // under-in on slot 0, counterclockwise rotation decided by the sign.
    Diagram d;
    d.n_ = n;
    d.mate_.assign(4 * n, -1);
    d.over_parity_.assign(n, 1);

    std::map<long, int> cid;
    for (const auto& [label, o] : occurrence) {
        int c = static_cast<int>(cid.size());
        cid[label] = c;
    }
    const auto prev = [&](int i) { return (i + 2 * n - 1) % (2 * n); };
    // endpoint half-edges per edge id: [tail, head]
    std::vector<std::array<HalfEdge, 2>> ends(2 * n, {-1, -1});
    for (const auto& [label, o] : occurrence) {
        int c = cid[label];
        int i = o.first;   // over visit
        int j = o.second;  // under visit
        bool pos = visits[i].positive;
        // slots: 0 under-in, 2 under-out; '+': (under-in, over-out, under-out, over-in)
        ends[prev(j)][1] = make_he(c, 0);
        ends[j][0] = make_he(c, 2);
        if (pos) {
            ends[i][0] = make_he(c, 1);
            ends[prev(i)][1] = make_he(c, 3);
        } else {
            ends[prev(i)][1] = make_he(c, 1);
            ends[i][0] = make_he(c, 3);
        }
    }
    for (int e = 0; e < 2 * n; ++e) {
        d.mate_[ends[e][0]] = ends[e][1];
        d.mate_[ends[e][1]] = ends[e][0];
    }
    d.finish_build("non-realizable gauss code: rotation system is not planar");
    return d;
}

std::vector<Face> Diagram::faces() const {
    std::vector<Face> out;
    if (n_ == 0) {
        out.push_back(Face{0, {}, {}});
        out.push_back(Face{1, {}, {}});
        return out;
    }
    const int darts = 4 * n_;
    std::vector<char> used(darts, 0);
    for (HalfEdge start = 0; start < darts; ++start) {
        if (used[start]) continue;
        Face f;
        f.id = static_cast<int>(out.size());
        HalfEdge h = start;
        do {
            used[h] = 1;
            f.corners.emplace_back(he_crossing(h), he_slot(h));
            HalfEdge m = mate_[h];
            f.boundary_edges.push_back(edge_at_[h]);
            h = make_he(he_crossing(m), (he_slot(m) + 1) & 3);
        } while (h != start);
        out.push_back(std::move(f));
    }
    return out;
}

ValidationReport Diagram::validate_minimal_adjacency() const {
    ValidationReport rep;
    if (n_ == 0) return rep;

    for (const auto& e : edges_) {
        if (he_crossing(e.tail) == he_crossing(e.head)) {
            ValidationIssue v;
            v.kind = ValidationIssue::EdgeMeetsCrossingTwice;
            v.edge = e.id;
            v.crossing = he_crossing(e.tail);
            v.text = "edge region " + std::to_string(e.id) + " meets crossing region " +
                     std::to_string(v.crossing) + " twice";
            rep.issues.push_back(std::move(v));
        }
    }
    for (const auto& f : faces()) {
        std::map<int, int> cr;
        for (const auto& [c, k] : f.corners) cr[c]++;
        for (const auto& [c, cnt] : cr) {
            if (cnt > 1) {
                ValidationIssue v;
                v.kind = ValidationIssue::FaceMeetsCrossingTwice;
                v.face = f.id;
                v.crossing = c;
                v.text = "face " + std::to_string(f.id) + " meets crossing region " +
                         std::to_string(c) + " twice";
                rep.issues.push_back(std::move(v));
            }
        }
        std::map<int, int> ed;
        for (int e : f.boundary_edges) ed[e]++;
        for (const auto& [e, cnt] : ed) {
            if (cnt > 1) {
                ValidationIssue v;
                v.kind = ValidationIssue::FaceMeetsEdgeTwice;
                v.face = f.id;
                v.edge = e;
                v.text = "face " + std::to_string(f.id) + " meets edge region " +
                         std::to_string(e) + " twice";
                rep.issues.push_back(std::move(v));
            }
        }
    }
    return rep;
}

std::string Diagram::to_pd() const {
    std::ostringstream os;
    for (int c = 0; c < n_; ++c) {
        if (c) os << ' ';
        os << 'X' << '(';
        for (int s = 0; s < 4; ++s) {
            if (s) os << ',';
            os << edge_at_[make_he(c, s)] + 1;
        }
        os << ')';
    }
    os << '\n';
    return os.str();
}

DiagramFingerprint Diagram::fingerprint() const {
    DiagramFingerprint fp;
    fp.crossings = n_;
    auto fs = faces();
    fp.faces = static_cast<int>(fs.size());
    for (const auto& f : fs) fp.face_degrees.push_back(f.degree());
    std::sort(fp.face_degrees.begin(), fp.face_degrees.end());
    return fp;
}

Diagram Diagram::with_flipped_crossing(int c) const {
    // The old over strand (slots {1,3}) becomes the under strand. Rotate the
    // crossing so its incoming end lands on slot 0, keeping ccw order.
    int o_in = outgoing_[make_he(c, 1)] ? 3 : 1;
    int k = (4 - o_in) & 3;
    std::vector<HalfEdge> m2(4 * n_);
    auto shift = [&](HalfEdge h) {
        if (he_crossing(h) != c) return h;
        return make_he(c, (he_slot(h) + k) & 3);
    };
    for (HalfEdge h = 0; h < 4 * n_; ++h) m2[shift(h)] = shift(mate_[h]);
    std::vector<int> parity = over_parity_;
    parity[c] = 1;  // old under strand, now over, sits on slots {1,3}
    return Diagram::from_map(n_, m2, parity);
}

int Diagram::default_sum_edge() const {
    auto fs = faces();
    int best_deg = -1;
    for (const auto& f : fs) best_deg = std::max(best_deg, f.degree());
    int best_edge = -1;
    for (const auto& f : fs) {
        if (f.degree() != best_deg) continue;
        for (int e : f.boundary_edges)
            if (best_edge < 0 || e < best_edge) best_edge = e;
    }
    return best_edge;
}

Diagram Diagram::connected_sum(const Diagram& a, const Diagram& b,
                               std::optional<std::pair<int, int>> sites) {
    if (a.is_unknot() && b.is_unknot()) return unknot();
    if (a.is_unknot()) return b;
    if (b.is_unknot()) return a;

    int ea = sites ? sites->first : a.default_sum_edge();
    int eb = sites ? sites->second : b.default_sum_edge();
    if (ea < 0 || ea >= a.edge_count() || eb < 0 || eb >= b.edge_count())
        throw std::runtime_error("connected_sum: bad splice edge");

    auto splice = [&](const Diagram& bb) -> Diagram {
        const int n = a.n_ + bb.n_;
        std::vector<HalfEdge> mate(4 * n, -1);
        std::vector<int> parity(n, 1);
        auto offs = [&](HalfEdge h) { return make_he(a.n_ + he_crossing(h), he_slot(h)); };
        for (HalfEdge h = 0; h < 4 * a.n_; ++h) mate[h] = a.mate_[h];
        for (HalfEdge h = 0; h < 4 * bb.n_; ++h) mate[offs(h)] = offs(bb.mate_[h]);
        for (int c = 0; c < a.n_; ++c) parity[c] = a.over_parity_[c];
        for (int c = 0; c < bb.n_; ++c) parity[a.n_ + c] = bb.over_parity_[c];
        // cut edge ea (ta -> ha) and eb (tb -> hb); rejoin ta->hb and tb->ha
        const EdgeRec& ra = a.edge(ea);
        const EdgeRec& rb = bb.edge(eb);
        HalfEdge ta = ra.tail, ha = ra.head;
        HalfEdge tb = offs(rb.tail), hb = offs(rb.head);
        mate[ta] = hb;
        mate[hb] = ta;
        mate[tb] = ha;
        mate[ha] = tb;
        return Diagram::from_map(n, mate, parity);
    };

    try {
        return splice(b);
    } catch (const std::runtime_error&) {
        // incompatible sphere orientations; mirror the second summand
        Diagram bm = b;
        std::vector<HalfEdge> m2(4 * b.n_);
        auto refl = [&](HalfEdge h) {
            return make_he(he_crossing(h), (4 - he_slot(h)) & 3);
        };
        for (HalfEdge h = 0; h < 4 * b.n_; ++h) m2[refl(h)] = refl(b.mate_[h]);
        bm.mate_ = m2;
        bm.finish_build("connected_sum: mirrored summand not planar");
        return splice(bm);
    }
}

}  // namespace kc
