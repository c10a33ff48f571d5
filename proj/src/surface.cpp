#include "kc/surface.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kc {

std::string ComplexityTriple::to_string() const {
    return "(" + std::to_string(i2) + "," + std::to_string(i1) + "," + std::to_string(i0) + ")";
}

int compare_complexity(const ComplexityTriple& a, const ComplexityTriple& b) {
    if (a == b) return 0;
    return a < b ? -1 : 1;
}

std::string NormalSurfaceVector::serialize() const {
    std::ostringstream os;
    os << "surface-vector v1\n";
    for (const auto& [f, n] : face_disks) os << "face " << f << ' ' << n << '\n';
    for (const auto& [e, d] : edge_disks)
        os << "edge " << e << " flat-above " << d.flat_above << " flat-below " << d.flat_below
           << " curved " << d.curved_side[0] << ' ' << d.curved_side[1] << '\n';
    for (const auto& [c, data] : crossing_data) {
        if (std::holds_alternative<BlockQuadData>(data)) {
            const auto& q = std::get<BlockQuadData>(data);
            os << "crossing " << c << " blocks";
            for (const auto& b : q.blocks)
                for (int i = 0; i < kNumBlockTypes; ++i) os << ' ' << b[i];
            os << '\n';
        } else {
            const auto& cfg = std::get<ZeroHandleConfig>(data);
            os << "crossing " << c << " config " << cfg.case_tag;
            for (const auto& [dc, n] : cfg.counts)
                if (n) os << ' ' << disk_class_name(dc) << '=' << n;
            for (const auto& [rs, n] : cfg.twisted_minus)
                if (n) os << " Tm(" << rs.first << ',' << rs.second << ")=" << n;
            os << '\n';
        }
    }
    return os.str();
}

NormalSurfaceVector NormalSurfaceVector::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "surface-vector v1")
        throw std::runtime_error("surface vector: bad header");
    NormalSurfaceVector s;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "face") {
            int f, n;
            ls >> f >> n;
            s.face_disks[f] = n;
        } else if (kw == "edge") {
            int e;
            std::string k1, k2, k3;
            EdgeDisks d;
            ls >> e >> k1 >> d.flat_above >> k2 >> d.flat_below >> k3 >> d.curved_side[0] >>
                d.curved_side[1];
            if (k1 != "flat-above" || k2 != "flat-below" || k3 != "curved")
                throw std::runtime_error("surface vector: bad edge line: " + line);
            s.edge_disks[e] = d;
        } else if (kw == "crossing") {
            int c;
            std::string mode;
            ls >> c >> mode;
            if (mode == "blocks") {
                BlockQuadData q;
                for (auto& b : q.blocks)
                    for (int i = 0; i < kNumBlockTypes; ++i) ls >> b[i];
                if (!ls) throw std::runtime_error("surface vector: bad blocks line: " + line);
                s.crossing_data[c] = q;
            } else if (mode == "config") {
                ZeroHandleConfig cfg;
                ls >> cfg.case_tag;
                std::string item;
                while (ls >> item) {
                    auto eq = item.find('=');
                    if (eq == std::string::npos)
                        throw std::runtime_error("surface vector: bad config item: " + item);
                    std::string name = item.substr(0, eq);
                    int n = std::stoi(item.substr(eq + 1));
                    if (name.rfind("Tm(", 0) == 0) {
                        auto comma = name.find(',');
                        int r = std::stoi(name.substr(3, comma - 3));
                        int ss = std::stoi(name.substr(comma + 1));
                        cfg.add_tm(r, ss, n);
                    } else {
                        bool ok = false;
                        for (DiskClass dc :
                             {DiskClass::F0, DiskClass::Fp, DiskClass::Fm, DiskClass::C0,
                              DiskClass::Cp, DiskClass::Cm, DiskClass::FmP, DiskClass::FpM,
                              DiskClass::CmP, DiskClass::CpM, DiskClass::C0P, DiskClass::C0M}) {
                            if (name == disk_class_name(dc)) {
                                cfg.add(dc, n);
                                ok = true;
                                break;
                            }
                        }
                        if (!ok)
                            throw std::runtime_error("surface vector: unknown disk class " + name);
                    }
                }
                s.crossing_data[c] = cfg;
            } else {
                throw std::runtime_error("surface vector: bad crossing line: " + line);
            }
        } else {
            throw std::runtime_error("surface vector: bad line: " + line);
        }
    }
    return s;
}

BlockQuadData blocks_from_config(const ZeroHandleConfig& cfg) {
    int x_plus = 0, x = 0, x_minus = 0, y_plus = 0, y_minus = 0, t = 0;
    switch (cfg.case_tag) {
        case 1: {
            y_plus = cfg.get(DiskClass::Cp);
            y_minus = cfg.get(DiskClass::Cm);
            x_plus = cfg.get(DiskClass::Fp) + y_plus;
            x_minus = cfg.get(DiskClass::Fm) + y_minus;
            x = cfg.get(DiskClass::F0) + y_plus + y_minus;
            break;
        }
        case 2: {
            const int T = cfg.get_tm(0, 0);
            const int P = cfg.get(DiskClass::Cp);
            const int M = cfg.get(DiskClass::Cm);
            x = T + M + P;
            y_plus = T + P;
            y_minus = T + M;
            x_plus = cfg.get(DiskClass::Fp) + y_plus;
            x_minus = cfg.get(DiskClass::Fm) + y_minus;
            break;
        }
        case 3: {
            x = cfg.get(DiskClass::Cm);
            y_minus = cfg.get(DiskClass::CmP) + x;
            t = cfg.get(DiskClass::FmP) + cfg.get(DiskClass::CmP);
            x_minus = cfg.get(DiskClass::Fm) + x + t;
            x_plus = cfg.get(DiskClass::Fp) + cfg.get(DiskClass::CmP);
            y_plus = 0;
            break;
        }
        case 4: {
            y_plus = cfg.get_tm(0, 0);
            x = cfg.get(DiskClass::Cm) + y_plus;
            t = cfg.get(DiskClass::FmP);
            x_minus = cfg.get(DiskClass::Fm) + x + t;
            x_plus = cfg.get(DiskClass::Fp) + y_plus;
            y_minus = x;
            break;
        }
        default:
            throw std::runtime_error(
                "blocks_from_config: banded configurations carry no block data");
    }
    BlockQuad q = blocks_for_case(x_plus, x, x_minus, y_plus, y_minus, t);
    for (const BlockVector* v : {&q.xi1, &q.xi2, &q.xi3, &q.xi4})
        if (!v->nonnegative())
            throw std::runtime_error("configuration does not invert to valid blocks");
    BlockQuadData out;
    out.blocks = {q.xi1, q.xi2, q.xi3, q.xi4};
    return out;
}

namespace {

// Matching for the four blocks of one crossing against its surroundings.
// Block labels are only fixed up to the reflections used while pasting, so
// all dihedral assignments of labels to quadrants are tried.
bool blocks_match_crossing(const DStructure& ds, int c, const BlockQuadData& q,
                           const NormalSurfaceVector& s, std::string* why) {
    const Diagram& d = ds.diagram();
    auto arcs_at_edge = [&](int e) -> int {
        auto it = s.edge_disks.find(e);
        return it == s.edge_disks.end() ? 0 : it->second.skeleton_arcs();
    };
    auto face_count = [&](int f) -> int {
        auto it = s.face_disks.find(f);
        return it == s.face_disks.end() ? 0 : it->second;
    };

    ParamVector ps[4];
    for (int i = 0; i < 4; ++i) ps[i] = params(q.blocks[i]);
    for (int i = 1; i < 4; ++i) {
        if (ps[i].iv_plus != ps[0].iv_plus || ps[i].iv_zero != ps[0].iv_zero ||
            ps[i].iv_minus != ps[0].iv_minus) {
            if (why) *why = "blocks disagree on axis counts";
            return false;
        }
    }

    // quadrant k sits between rotation slots k and k+1
    int upper_edge[4], lower_edge[4], corner_face[4];
    for (int k = 0; k < 4; ++k) {
        int s1 = k, s2 = (k + 1) & 3;
        int up_slot = d.slot_on_over_strand(c, s1) ? s1 : s2;
        int lo_slot = up_slot == s1 ? s2 : s1;
        upper_edge[k] = d.edge_at(make_he(c, up_slot));
        lower_edge[k] = d.edge_at(make_he(c, lo_slot));
        corner_face[k] = ds.face_at_corner(c, k);
    }

    // blocks pair (1,3) and (2,4) across the upper rectangle; try the
    // dihedral assignments of (xi1..xi4) to quadrants 0..3
    static const int assigns[8][4] = {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2},
                                      {3, 2, 1, 0}, {2, 1, 0, 3}, {1, 0, 3, 2}, {0, 3, 2, 1}};
    for (const auto& as : assigns) {
        bool ok = true;
        for (int k = 0; k < 4 && ok; ++k) {
            const ParamVector& p = ps[as[k]];
            if (p.h1_plus != arcs_at_edge(upper_edge[k])) ok = false;
            if (p.h1_minus != arcs_at_edge(lower_edge[k])) ok = false;
            if (p.h2 != face_count(corner_face[k])) ok = false;
        }
        if (ok) return true;
    }
    if (why) *why = "no block assignment matches the incident handles";
    return false;
}

}  // namespace

std::vector<MatchingIssue> check_matching(const NormalSurfaceVector& s, const DStructure& ds) {
    std::vector<MatchingIssue> issues;
    const Diagram& d = ds.diagram();

    auto face_count = [&](int f) -> int {
        auto it = s.face_disks.find(f);
        return it == s.face_disks.end() ? 0 : it->second;
    };

    // face counts against every incident 1-handle side
    for (int e = 0; e < d.edge_count(); ++e) {
        EdgeDisks ed;
        auto it = s.edge_disks.find(e);
        if (it != s.edge_disks.end()) ed = it->second;
        auto [fl, fr] = ds.edge_sides(e);
        int want_l = ed.flats() + 2 * ed.curved_side[0];
        int want_r = ed.flats() + 2 * ed.curved_side[1];
        if (face_count(fl) != want_l)
            issues.push_back({"face " + std::to_string(fl) + " disk count " +
                              std::to_string(face_count(fl)) + " != " + std::to_string(want_l) +
                              " from edge " + std::to_string(e)});
        if (face_count(fr) != want_r)
            issues.push_back({"face " + std::to_string(fr) + " disk count " +
                              std::to_string(face_count(fr)) + " != " + std::to_string(want_r) +
                              " from edge " + std::to_string(e)});
    }

    for (int c = 0; c < d.crossings(); ++c) {
        auto it = s.crossing_data.find(c);
        std::optional<BlockQuadData> q;
        if (it == s.crossing_data.end()) {
            q = BlockQuadData{};  // empty crossing: all-zero blocks
        } else if (std::holds_alternative<BlockQuadData>(it->second)) {
            q = std::get<BlockQuadData>(it->second);
        } else {
            const auto& cfg = std::get<ZeroHandleConfig>(it->second);
            if (cfg.case_tag >= 1 && cfg.case_tag <= 4) {
                q = blocks_from_config(cfg);
            } else {
                // banded configuration: only axis bookkeeping is available
                continue;
            }
        }
        std::string why;
        if (!blocks_match_crossing(ds, c, *q, s, &why))
            issues.push_back({"crossing " + std::to_string(c) + ": " + why});
    }
    return issues;
}

ComplexityTriple complexity(const NormalSurfaceVector& s, const DStructure& ds) {
    auto issues = check_matching(s, ds);
    if (!issues.empty()) {
        std::string msg = "matching failure:";
        for (const auto& i : issues) msg += "\n  " + i.text;
        throw std::runtime_error(msg);
    }
    ComplexityTriple t;
    for (const auto& [f, n] : s.face_disks) t.i2 += n;
    for (const auto& [e, d] : s.edge_disks) t.i1 += d.skeleton_arcs();
    for (const auto& [c, data] : s.crossing_data) {
        if (std::holds_alternative<BlockQuadData>(data)) {
            const auto& q = std::get<BlockQuadData>(data);
            ParamVector p = params(q.blocks[0]);
            t.i0 += p.iv_plus + p.iv_zero + p.iv_minus;
        } else {
            t.i0 += std::get<ZeroHandleConfig>(data).total_axis_points();
        }
    }
    return t;
}

}  // namespace kc
