#include "kc/models.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kc {

namespace {

struct ModelRow {
    Model m;
    const char* name;
    bool one_handle_like;
    int sheets;
    int knot_arcs;
    bool final15;
    const char* note;
    // forced-unlinked connector pairs (indices among the connector arcs),
    // from the stacked-sheet boundary patterns
    std::vector<std::pair<int, int>> unlinked;
};

// Connector count equals the sheet count except where a piece is pinned
// between parallel disks and carries none.
const std::vector<ModelRow>& rows() {
    static const std::vector<ModelRow> r = {
        {Model::Z1, "Z1", true, 1, 0, false, "edge piece joining flat and curved disks", {}},
        {Model::Z2, "Z2", true, 2, 1, false, "edge slab between flat disks", {}},
        {Model::Z3, "Z3", true, 3, 1, false, "edge piece split by a curved disk", {{0, 2}}},
        {Model::Zbar3, "Zbar3", true, 3, 0, false,
         "band-sum variant, essentially the same as Z3; carries no connector arcs", {}},
        {Model::XZ3, "XZ3", false, 3, 1, true, "between opposite curved stacks", {{0, 2}}},
        {Model::YZ3, "YZ3", false, 3, 1, true, "between a curved stack and a twisted disk",
         {{0, 2}}},
        {Model::YZ1, "YZ1", true, 1, 1, false, "twisted-band edge piece", {}},
        {Model::X1, "X1", false, 1, 2, true, "innermost piece holding both strands", {}},
        {Model::X2, "X2", false, 2, 2, true, "slab holding both strands", {}},
        {Model::X3, "X3", false, 3, 1, true, "curved stack over one strand", {{0, 2}}},
        {Model::X4, "X4", false, 4, 0, true, "between curved stacks of both signs",
         {{0, 2}, {0, 3}, {1, 3}}},
        {Model::XY2, "XY2", false, 2, 1, true, "between banded and curved disks", {}},
        {Model::Y2, "Y2", false, 2, 1, true, "piece at a twisted disk", {}},
        {Model::X1pY, "X1'Y", false, 1, 2, true, "X1 after the knot point moves up", {}},
        {Model::X2pY, "X2'Y", false, 2, 2, true, "X2 variant meeting the cut sphere", {}},
        {Model::X3pY, "X3'Y", false, 3, 1, true, "X3 variant meeting the cut sphere", {{0, 2}}},
        {Model::Y3p, "Y3'", false, 3, 1, true, "twisted piece with a marked point", {{0, 2}}},
        {Model::YZ2p, "YZ2'", false, 2, 1, true, "banded piece at a marked curved disk", {}},
        {Model::Y2pZ, "Y2'Z", false, 2, 1, true, "Y2' after the knot point moves down", {}},
        {Model::X2ppZ, "X2''Z", false, 2, 2, true, "X2'Y after a second move", {}},
        {Model::O2pp, "O2''", false, 2, 0, false,
         "pinned between parallel disks; absorbed into the 2-handles", {}},
        {Model::Y3ppZ, "Y3''Z", false, 3, 1, false, "a combination of Z3 and O2''", {{0, 2}}},
        {Model::GZ1, "GZ1", true, 1, 0, false, "generalized 1-handle from Z1/YZ1 pieces", {}},
        {Model::GZ2, "GZ2", true, 2, 1, false, "generalized 1-handle from Z2 pieces", {}},
        {Model::GZ3, "GZ3", true, 3, 1, false, "generalized 1-handle from Z3/Zbar3 pieces",
         {{0, 2}}},
    };
    return r;
}

const ModelRow& row(Model m) {
    for (const auto& r : rows())
        if (r.m == m) return r;
    throw std::runtime_error("unknown model");
}

}  // namespace

const char* model_name(Model m) { return row(m).name; }

std::optional<Model> model_from_name(const std::string& s) {
    for (const auto& r : rows())
        if (s == r.name) return r.m;
    return std::nullopt;
}

const std::vector<ModelInfo>& model_catalog() {
    static const std::vector<ModelInfo> cat = [] {
        std::vector<ModelInfo> out;
        for (const auto& r : rows()) {
            ModelInfo mi;
            mi.model = r.m;
            mi.one_handle_like = r.one_handle_like;
            mi.boundary_sheets = r.sheets;
            mi.knot_arcs = r.knot_arcs;
            mi.in_final_fifteen = r.final15;
            mi.note = r.note;
            out.push_back(mi);
        }
        return out;
    }();
    return cat;
}

const ModelInfo& model_info(Model m) {
    for (const auto& mi : model_catalog())
        if (mi.model == m) return mi;
    throw std::runtime_error("unknown model");
}

bool is_z_like(Model m) {
    return m == Model::Z1 || m == Model::Z2 || m == Model::Z3 || m == Model::YZ1 ||
           m == Model::Zbar3;
}

std::vector<std::optional<Model>> mutate_model(Model m) {
    switch (m) {
        case Model::X1: return {Model::X1pY};
        case Model::X2: return {Model::X2pY, Model::Z2};
        case Model::X3: return {Model::X3pY, Model::Y3p, Model::Z3};
        case Model::Z2: return {std::nullopt};
        case Model::Y2: return {Model::Y2pZ};
        case Model::Y3p: return {Model::Z3};
        case Model::XY2: return {Model::YZ2p};
        case Model::X2pY: return {Model::X2ppZ, Model::Z2};
        case Model::X3pY: return {Model::Z3};
        default: return {};
    }
}

std::string ModelSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < models.size(); ++i) os << (i ? "," : "") << model_name(models[i]);
    os << '}';
    return os.str();
}

bool ModelSet::operator<(const ModelSet& o) const {
    return std::tie(case_tag, models) < std::tie(o.case_tag, o.models);
}

namespace {

ModelSet make_set(int tag, std::vector<Model> ms) {
    std::sort(ms.begin(), ms.end());
    return ModelSet{tag, std::move(ms)};
}

}  // namespace

const std::vector<ModelSet>& cooccurrence_sets() {
    static const std::vector<ModelSet> sets = [] {
        std::vector<ModelSet> out;
        using M = Model;
        auto expand = [&](int tag, const std::vector<std::vector<M>>& slots) {
            std::vector<std::vector<M>> acc = {{}};
            for (const auto& alts : slots) {
                std::vector<std::vector<M>> next;
                for (const auto& partial : acc)
                    for (M alt : alts) {
                        auto p = partial;
                        p.push_back(alt);
                        next.push_back(std::move(p));
                    }
                acc = std::move(next);
            }
            for (auto& ms : acc) out.push_back(make_set(tag, ms));
        };
        // Case 1
        expand(1, {{M::Z2, M::Z1, M::Z3}, {M::Z2, M::Z1, M::Z3}});
        expand(1, {{M::X4}, {M::Z1}, {M::Z1}});
        expand(1, {{M::X3}, {M::Z1}});
        expand(1, {{M::X2}});
        // Case 2
        expand(2, {{M::Y2, M::YZ3, M::Z1}, {M::Y2, M::YZ3, M::Z1}});
        // Case 3
        expand(3, {{M::X2pY}});
        expand(3, {{M::Y3p}, {M::Z1}});
        expand(3, {{M::X3pY, M::Z3}, {M::Z1}});
        // Case 4
        expand(4, {{M::Y2pZ}, {M::Y2, M::YZ3, M::Z1}});
        // Case 5
        expand(5, {{M::XZ3}, {M::Z1}, {M::Z1}});
        expand(5, {{M::XY2}, {M::Z1}});
        expand(5, {{M::X1}});
        // Case 6
        expand(6, {{M::YZ1}, {M::Y2, M::YZ3, M::Z1, M::YZ1}});
        // Case 7
        expand(7, {{M::YZ2p}, {M::Z1}});
        expand(7, {{M::X1pY}});
        // Case 8
        expand(8, {{M::Y2pZ}, {M::YZ1}});
        return out;
    }();
    return sets;
}

const std::vector<ModelSet>& cooccurrence_closure() {
    static const std::vector<ModelSet> closure = [] {
        std::set<ModelSet> seen(cooccurrence_sets().begin(), cooccurrence_sets().end());
        std::vector<ModelSet> queue(seen.begin(), seen.end());
        while (!queue.empty()) {
            ModelSet ms = queue.back();
            queue.pop_back();
            for (size_t i = 0; i < ms.models.size(); ++i) {
                for (const auto& target : mutate_model(ms.models[i])) {
                    ModelSet next = ms;
                    next.models.erase(next.models.begin() + static_cast<long>(i));
                    if (target) next.models.push_back(*target);
                    std::sort(next.models.begin(), next.models.end());
                    if (seen.insert(next).second) queue.push_back(next);
                }
            }
        }
        return std::vector<ModelSet>(seen.begin(), seen.end());
    }();
    return closure;
}

namespace {

// Arc-arrangement enumerator. Arcs live in a disk: the strand arcs have
// fixed interleaved endpoints on the boundary circle, one connector arc per
// boundary sheet may end anywhere. Minimal crossings of an arrangement =
// number of interleaved endpoint pairs; unlinked sheet pairs must stay
// non-interleaved. The budget is the maximum over arrangements.
struct ArcSystem {
    int connectors = 0;
    int strand_arcs = 0;
    std::vector<std::pair<int, int>> unlinked;
};

int count_interleaved(const std::vector<int>& circle, int arcs) {
    int cnt = 0;
    for (int a = 0; a < arcs; ++a)
        for (int b = a + 1; b < arcs; ++b) {
            bool inside = false;
            int seen_between = 0;
            for (int x : circle) {
                if (x == a) inside = !inside;
                else if (x == b && inside) seen_between++;
            }
            if (seen_between == 1) cnt++;
        }
    return cnt;
}

int max_forced_crossings(const ArcSystem& sys) {
    const int arcs = sys.connectors + sys.strand_arcs;
    if (arcs <= 1) return 0;

    // Strand arcs first, pre-placed pairwise interleaved; connector endpoints
    // inserted in every cyclic arrangement.
    std::vector<int> base;
    for (int k = 0; k < sys.strand_arcs; ++k) base.push_back(sys.connectors + k);
    for (int k = 0; k < sys.strand_arcs; ++k) base.push_back(sys.connectors + k);
    if (sys.strand_arcs == 2) {  // the two strands cross once
        base = {sys.connectors, sys.connectors + 1, sys.connectors, sys.connectors + 1};
    }

    int best = 0;
    // place connector endpoints one at a time into all gap positions
    std::vector<std::vector<int>> partial = {base};
    for (int c = 0; c < sys.connectors; ++c) {
        std::vector<std::vector<int>> next;
        for (const auto& circ : partial) {
            const int n = static_cast<int>(circ.size());
            for (int i = 0; i <= n; ++i) {
                for (int j = i; j <= n; ++j) {
                    auto copy = circ;
                    copy.insert(copy.begin() + j, c);
                    copy.insert(copy.begin() + i, c);
                    next.push_back(std::move(copy));
                }
            }
        }
        partial = std::move(next);
    }
    for (const auto& circ : partial) {
        bool ok = true;
        for (const auto& [a, b] : sys.unlinked) {
            bool inside = false;
            int between = 0;
            for (int x : circ) {
                if (x == a) inside = !inside;
                else if (x == b && inside) between++;
            }
            if (between == 1) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        best = std::max(best, count_interleaved(circ, sys.connectors + sys.strand_arcs));
    }
    return best;
}

}  // namespace

int max_crossings(Model m) {
    static std::map<Model, int> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    const ModelRow& r = row(m);
    ArcSystem sys;
    sys.strand_arcs = r.knot_arcs;
    // Zbar3 and O2'' are pinned between parallel disks; Z1-family pieces
    // carry a single arc in total. None of them admit connector arcs.
    const bool no_connectors =
        m == Model::Zbar3 || m == Model::O2pp || m == Model::YZ1 || m == Model::GZ1;
    sys.connectors = no_connectors ? 0 : r.sheets;
    sys.unlinked = r.unlinked;
    int value = max_forced_crossings(sys);
    // single-arc pieces carry no crossings at all
    if (sys.connectors + sys.strand_arcs <= 1) value = 0;
    cache[m] = value;
    return value;
}

CrossingBudget per_crossing_bound(const ModelSet& ms) {
    ModelSet key = ms;
    // Zbar3 is omitted from the tables because it contributes no crossings;
    // strip it before matching. A crossing of parallel pieces only is fine.
    key.models.erase(std::remove(key.models.begin(), key.models.end(), Model::Zbar3),
                     key.models.end());
    std::sort(key.models.begin(), key.models.end());
    bool found = key.models.empty();
    for (const auto& t : cooccurrence_closure()) {
        if (t.models == key.models) {
            found = true;
            break;
        }
    }
    if (!found)
        throw std::runtime_error("model set " + ms.to_string() +
                                 " matches no co-occurrence template");
    key.models = ms.models;
    std::sort(key.models.begin(), key.models.end());

    CrossingBudget b;
    b.models = key.models;
    int non_z = 0;
    int allowance_members = 0;
    for (Model m : key.models) {
        b.per_model[m] = max_crossings(m);
        b.total += b.per_model[m];
        if (!is_z_like(m)) non_z++;
        if (m == Model::Y2 || m == Model::YZ3 || m == Model::Y2pZ) allowance_members++;
    }
    b.z_only = (non_z == 0);
    if (allowance_members >= 2) b.inter_model_allowance = 1;
    b.total += b.inter_model_allowance;

    if (b.total > 16)
        throw std::runtime_error("per-crossing budget exceeds 16 for " + ms.to_string() +
                                 "; the enumerator model needs review");
    if (!b.z_only && b.total > 11)
        throw std::runtime_error("per-crossing budget exceeds 11 for " + ms.to_string() +
                                 "; the enumerator model needs review");
    return b;
}

GeneralizedHandles merge_generalized(const std::vector<Model>& pieces,
                                     const std::vector<std::pair<int, int>>& contacts) {
    auto family = [](Model m) -> int {
        switch (m) {
            case Model::Z1:
            case Model::YZ1: return 0;
            case Model::Z2: return 1;
            case Model::Z3:
            case Model::Zbar3: return 2;
            default: return -1;
        }
    };
    const int n = static_cast<int>(pieces.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& [a, b] : contacts) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::runtime_error("contact references a missing piece");
        int fa = family(pieces[a]);
        if (fa < 0 || fa != family(pieces[b])) continue;
        int ra = find(a), rb = find(b);
        if (ra == rb)
            throw std::runtime_error(
                "generalized 1-handle contraction closes a cycle (solid torus)");
        parent[ra] = rb;
    }
    std::map<int, std::vector<int>> comps;
    for (int i = 0; i < n; ++i)
        if (family(pieces[i]) >= 0) comps[find(i)].push_back(i);
    GeneralizedHandles out;
    for (auto& [root, members] : comps) {
        out.components.push_back(members);
        static const Model gz[3] = {Model::GZ1, Model::GZ2, Model::GZ3};
        out.models.push_back(gz[family(pieces[members.front()])]);
    }
    return out;
}

AggregateBound aggregate_bound(const std::vector<CrossingBudget>& budgets, int c_total) {
    if (static_cast<int>(budgets.size()) != c_total)
        throw std::runtime_error("need one budget per crossing");
    AggregateBound ab;
    ab.cap = 16L * c_total;
    bool all_zero = true;
    for (size_t i = 0; i < budgets.size(); ++i) {
        ab.total_budget += budgets[i].total;
        if (budgets[i].total != 0) all_zero = false;
        if (ab.strictness_witness < 0 && budgets[i].total < 16)
            ab.strictness_witness = static_cast<int>(i);
    }
    ab.within_cap = ab.total_budget <= ab.cap;
    ab.degenerate = all_zero && c_total > 0;
    std::ostringstream os;
    os << "sum of summand crossings <= " << ab.total_budget << " <= " << ab.cap << " = 16*"
       << c_total;
    if (ab.strictness_witness >= 0)
        os << "; crossing " << ab.strictness_witness << " is below 16, giving the strict bound";
    if (ab.degenerate) os << "; degenerate: all budgets vanish, so every summand is trivial";
    ab.inequality = os.str();
    return ab;
}

std::string models_table_text() {
    std::ostringstream os;
    os << "model      1h  sheets  K-arcs  budget  note\n";
    for (const auto& mi : model_catalog()) {
        std::string n = model_name(mi.model);
        os << n << std::string(11 - n.size(), ' ') << (mi.one_handle_like ? "y" : "n") << "   "
           << mi.boundary_sheets << "       " << mi.knot_arcs << "       "
           << max_crossings(mi.model) << "       " << mi.note << "\n";
    }
    os << "\nco-occurrence templates (" << cooccurrence_sets().size() << "), mutation closure ("
       << cooccurrence_closure().size() << ")\n";
    for (const auto& t : cooccurrence_sets()) {
        os << "case " << t.case_tag << ": " << t.to_string() << "  total "
           << per_crossing_bound(t).total << "\n";
    }
    return os.str();
}

}  // namespace kc
