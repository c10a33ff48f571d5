#include "kc/moves.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kc {

std::string TauType::to_string() const {
    return std::to_string(base) + (plus ? "+" : "-");
}

TauType TauType::parse(const std::string& s) {
    if (s.size() != 2 || s[0] < '1' || s[0] > '4' || (s[1] != '+' && s[1] != '-'))
        throw std::runtime_error("bad tau type: " + s);
    return {s[0] - '0', s[1] == '+'};
}

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::Zero: return "0";
        case MoveKind::OneS: return "1s";
        case MoveKind::OneD: return "1d";
    }
    return "?";
}

namespace {

// Up-direction rules; down is the sign-interchanged image.
bool zero_applicable_up(TauType t) {
    return t == TauType{3, true} || t == TauType{2, false} || t == TauType{4, false};
}
bool one_applicable_up(TauType t) {
    return t == TauType{4, true} || t == TauType{1, false} || t == TauType{3, false};
}

std::vector<TauType> transition_up(TauType t, MoveKind k) {
    if (k == MoveKind::Zero) {
        if (t == TauType{3, true}) return {{2, true}, {4, true}};
        if (t == TauType{2, false}) return {{3, false}};
        if (t == TauType{4, false}) return {{3, false}};
    } else if (k == MoveKind::OneS) {
        if (t == TauType{4, true}) return {{1, true}, {3, true}};
        if (t == TauType{1, false}) return {{4, false}};
        if (t == TauType{3, false}) return {{4, false}};
    } else {
        if (t == TauType{4, true}) return {{4, false}};
        if (t == TauType{1, false}) return {{1, true}, {3, true}};
        if (t == TauType{3, false}) return {{1, true}, {3, true}};
    }
    throw std::runtime_error("inapplicable move: " + t.to_string() + " kind " +
                             move_kind_name(k));
}

}  // namespace

std::vector<MoveKind> applicable_moves(TauType tau, Direction dir) {
    TauType t = dir == Direction::Up ? tau : tau.flipped();
    std::vector<MoveKind> out;
    if (zero_applicable_up(t)) out.push_back(MoveKind::Zero);
    if (one_applicable_up(t)) {
        out.push_back(MoveKind::OneS);
        out.push_back(MoveKind::OneD);
    }
    return out;
}

std::vector<TauType> transition(TauType tau, MoveKind kind, Direction dir) {
    if (dir == Direction::Up) return transition_up(tau, kind);
    auto flipped = transition_up(tau.flipped(), kind);
    for (auto& t : flipped) t = t.flipped();
    return flipped;
}

bool is_terminal_up(TauType tau) {
    return tau == TauType{1, true} || tau == TauType{2, true};
}

int TauState::total_points() const {
    int n = 0;
    for (const auto& [pos, m] : points)
        for (const auto& [t, c] : m) n += c;
    return n;
}

void TauState::add_point(int crossing, int slot, TauType t, int count) {
    if (count == 0) return;
    auto& m = points[{crossing, slot}];
    m[t] += count;
    if (m[t] == 0) m.erase(t);
    if (m.empty()) points.erase({crossing, slot});
}

bool TauState::operator==(const TauState& o) const {
    return points == o.points && down_capacity == o.down_capacity;
}

std::string TauState::to_string() const {
    std::ostringstream os;
    for (const auto& [pos, m] : points) {
        os << "crossing " << pos.first << " slot " << pos.second << " types";
        for (const auto& [t, c] : m)
            for (int i = 0; i < c; ++i) os << ' ' << t.to_string();
        os << '\n';
    }
    os << "down_capacity " << down_capacity << '\n';
    return os.str();
}

TauState TauState::parse(const std::string& text, const Diagram& d) {
    TauState st;
    st.diagram = &d;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "down_capacity") {
            ls >> st.down_capacity;
            continue;
        }
        if (word != "crossing") throw std::runtime_error("bad state line: " + line);
        int c, s;
        std::string kw1, kw2;
        ls >> c >> kw1 >> s >> kw2;
        if (kw1 != "slot" || kw2 != "types") throw std::runtime_error("bad state line: " + line);
        if (c < 0 || c >= d.crossings() || s < 0 || s > 3)
            throw std::runtime_error("state references a missing rectangle");
        std::string t;
        while (ls >> t) st.add_point(c, s, TauType::parse(t));
    }
    return st;
}

MovePolicy first_successor_policy() {
    return [](int, int, TauType, const std::vector<MoveOption>&) -> size_t { return 0; };
}

MovePolicy default_policy() {
    return [](int, int, TauType, const std::vector<MoveOption>& opts) -> size_t {
        for (size_t i = 0; i < opts.size(); ++i)
            if (is_terminal_up(opts[i].successor) || is_terminal_up(opts[i].successor.flipped()))
                return i;
        for (size_t i = 0; i < opts.size(); ++i)
            if (opts[i].kind == MoveKind::Zero) return i;
        return 0;
    };
}

std::string TraceStep::to_string() const {
    std::ostringstream os;
    os << step << " crossing " << crossing << " slot " << slot << " move " << move_kind_name(kind)
       << " " << before.to_string() << "->" << after.to_string() << " at (" << to_crossing << ","
       << to_slot << ") " << measure << "=" << measure_value;
    return os.str();
}

NormalizeResult normalize(const TauState& state, Direction dir, const MovePolicy& policy) {
    if (!state.diagram) throw std::runtime_error("tau state has no diagram");
    const Diagram& d = *state.diagram;

    NormalizeResult res;
    res.state = state;
    res.state.context = dir;

    // Replacing neighbour disks when a move passes a 1-handle is excluded by
    // assumption, so a point's evolution only depends on its own type and the
    // edge kinds it meets. Measures are tracked as explicit counters.
    std::map<int, long> axis_measure;
    std::map<int, long> edge_measure;
    const long cap = static_cast<long>(res.state.total_points()) * 8 * 4 *
                         std::max(1, d.crossings()) +
                     16;
    auto axis_left = [&](int v) {
        auto it = axis_measure.find(v);
        return it == axis_measure.end() ? cap : it->second;
    };
    auto edge_left = [&](int e) {
        auto it = edge_measure.find(e);
        return it == edge_measure.end() ? cap : it->second;
    };

    auto edge_is_same_level = [&](int c, int s) {
        // 1s when the two strand ends of the facing edge are both upper or
        // both lower arcs of their crossings
        HalfEdge h = make_he(c, s);
        HalfEdge m = d.mate(h);
        bool up1 = d.slot_on_over_strand(c, s);
        bool up2 = d.slot_on_over_strand(he_crossing(m), he_slot(m));
        return up1 == up2;
    };

    if (dir == Direction::Down && res.state.down_capacity <= 0) return res;

    int step = 0;
    // process point classes in deterministic position/type order; a point
    // whose abstract walk cycled is parked so later passes skip it
    std::set<std::tuple<int, int, TauType>> stuck;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        auto snapshot = res.state.points;
        for (const auto& [pos, types] : snapshot) {
            for (const auto& [t0, count0] : types) {
                if (count0 <= 0) continue;
                if (stuck.count({pos.first, pos.second, t0})) continue;
                // move one point of this class to completion
                int c = pos.first, s = pos.second;
                TauType t = t0;
                if (res.state.points.count(pos) == 0 ||
                    res.state.points[pos].count(t) == 0 || res.state.points[pos][t] <= 0)
                    continue;
                std::set<std::tuple<int, int, TauType>> visited;
                bool moved_any = false;
                bool default_mode = false;
                while (true) {
                    TauType eff = dir == Direction::Up ? t : t.flipped();
                    if (is_terminal_up(eff)) break;
                    if (dir == Direction::Down && res.state.down_capacity <= 0) break;
                    std::vector<MoveOption> opts;
                    if (zero_applicable_up(eff))
                        for (TauType nx : transition(t, MoveKind::Zero, dir))
                            opts.push_back({MoveKind::Zero, nx});
                    if (one_applicable_up(eff)) {
                        MoveKind k = edge_is_same_level(c, s) ? MoveKind::OneS : MoveKind::OneD;
                        for (TauType nx : transition(t, k, dir)) opts.push_back({k, nx});
                    }
                    if (opts.empty()) break;
                    if (!visited.insert({c, s, t}).second) {
                        // a revisit means the walk is cycling; restart it under
                        // the default policy, and park the point if even that
                        // cycles (a configuration the measures exclude)
                        if (default_mode) {
                            res.fixpoint_reached = false;
                            break;
                        }
                        default_mode = true;
                        visited.clear();
                        visited.insert({c, s, t});
                    }
                    size_t pick = default_mode ? default_policy()(c, s, t, opts)
                                               : policy(c, s, t, opts);
                    if (pick >= opts.size()) pick = 0;
                    const MoveOption& mo = opts[pick];
                    TraceStep tr;
                    tr.step = step++;
                    tr.crossing = c;
                    tr.slot = s;
                    tr.kind = mo.kind;
                    tr.before = t;
                    tr.after = mo.successor;
                    res.state.add_point(c, s, t, -1);
                    int nc, ns;
                    if (mo.kind == MoveKind::Zero) {
                        nc = c;
                        ns = opposite_slot(s);
                        axis_measure[c] = axis_left(c) - 1;
                        tr.measure = "axis@" + std::to_string(c);
                        tr.measure_value = axis_measure[c];
                    } else {
                        int e = d.edge_at(make_he(c, s));
                        HalfEdge m = d.mate(make_he(c, s));
                        nc = he_crossing(m);
                        ns = he_slot(m);
                        edge_measure[e] = edge_left(e) - 1;
                        tr.measure = "arcs@" + std::to_string(e);
                        tr.measure_value = edge_measure[e];
                    }
                    if (dir == Direction::Down) res.state.down_capacity--;
                    tr.to_crossing = nc;
                    tr.to_slot = ns;
                    res.state.add_point(nc, ns, mo.successor, 1);
                    res.trace.push_back(tr);
                    c = nc;
                    s = ns;
                    t = mo.successor;
                    moved_any = true;
                }
                TauType eff_final = dir == Direction::Up ? t : t.flipped();
                if (!is_terminal_up(eff_final) &&
                    !(dir == Direction::Down && res.state.down_capacity <= 0))
                    stuck.insert({c, s, t});
                if (moved_any) progressed = true;
            }
        }
    }
    return res;
}

bool is_standard_form(const TauState& state) {
    if (state.down_capacity != 0) return false;
    std::map<int, int> rects_used;
    for (const auto& [pos, types] : state.points) {
        bool nonempty = false;
        for (const auto& [t, c] : types) {
            if (c <= 0) continue;
            nonempty = true;
            if (!is_terminal_up(t)) return false;
        }
        if (nonempty) rects_used[pos.first]++;
    }
    for (const auto& [c, n] : rects_used)
        if (n > 1) return false;
    return true;
}

}  // namespace kc
