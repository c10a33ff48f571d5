#include "kc/pasting.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kc {

const char* disk_class_name(DiskClass c) {
    switch (c) {
        case DiskClass::F0: return "F0";
        case DiskClass::Fp: return "F+";
        case DiskClass::Fm: return "F-";
        case DiskClass::C0: return "C0";
        case DiskClass::Cp: return "C+";
        case DiskClass::Cm: return "C-";
        case DiskClass::FmP: return "F-^+";
        case DiskClass::FpM: return "F+^-";
        case DiskClass::CmP: return "C-^+";
        case DiskClass::CpM: return "C+^-";
        case DiskClass::C0P: return "C0^+";
        case DiskClass::C0M: return "C0^-";
    }
    return "?";
}

int ZeroHandleConfig::get(DiskClass c) const {
    auto it = counts.find(c);
    return it == counts.end() ? 0 : it->second;
}

int ZeroHandleConfig::get_tm(int r, int s) const {
    auto it = twisted_minus.find({r, s});
    return it == twisted_minus.end() ? 0 : it->second;
}

void ZeroHandleConfig::add(DiskClass c, int n) {
    if (n == 0) return;
    counts[c] += n;
    if (counts[c] == 0) counts.erase(c);
}

void ZeroHandleConfig::add_tm(int r, int s, int n) {
    if (n == 0) return;
    twisted_minus[{r, s}] += n;
    if (twisted_minus[{r, s}] == 0) twisted_minus.erase({r, s});
}

bool ZeroHandleConfig::empty() const { return counts.empty() && twisted_minus.empty() && twisted_plus.empty(); }

int ZeroHandleConfig::kinds() const {
    int k = 0;
    for (const auto& [c, n] : counts) k += (n != 0);
    for (const auto& [rs, n] : twisted_minus) k += (n != 0);
    for (const auto& [rs, n] : twisted_plus) k += (n != 0);
    return k;
}

int ZeroHandleConfig::total_axis_points() const {
    auto weight = [](DiskClass c) {
        switch (c) {
            case DiskClass::F0:
            case DiskClass::Fp:
            case DiskClass::Fm:
            case DiskClass::FmP:
            case DiskClass::FpM: return 1;
            default: return 2;  // all curved classes, banded or not
        }
    };
    int total = 0;
    for (const auto& [c, n] : counts) total += weight(c) * n;
    for (const auto& [rs, n] : twisted_minus) total += (3 + rs.first + rs.second) * n;
    for (const auto& [rs, n] : twisted_plus) total += (3 + rs.first + rs.second) * n;
    return total;
}

int ZeroHandleConfig::disk_atoms() const {
    auto atoms = [](DiskClass c) {
        switch (c) {
            case DiskClass::C0:
            case DiskClass::C0P:
            case DiskClass::C0M: return 2;  // band sums of two flat disks
            default: return 1;
        }
    };
    int total = 0;
    for (const auto& [c, n] : counts) total += atoms(c) * n;
    for (const auto& [rs, n] : twisted_minus) total += (1 + rs.first + rs.second) * n;
    for (const auto& [rs, n] : twisted_plus) total += (1 + rs.first + rs.second) * n;
    return total;
}

void ZeroHandleConfig::validate() const {
    for (const auto& [c, n] : counts)
        if (n < 0) throw std::runtime_error("negative disk count");
    for (const auto& [rs, n] : twisted_minus) {
        if (n < 0) throw std::runtime_error("negative disk count");
        if (std::abs(rs.first - rs.second) > 1)
            throw std::runtime_error("twisted class violates |r-s| <= 1");
    }
    for (const auto& [rs, n] : twisted_plus) {
        if (n < 0) throw std::runtime_error("negative disk count");
        if (std::abs(rs.first - rs.second) > 1)
            throw std::runtime_error("twisted class violates |r-s| <= 1");
    }
    if (kinds() > 5) throw std::runtime_error("more than five disk kinds in one 0-handle");

    static const std::map<int, std::set<DiskClass>> allowed = {
        {1, {DiskClass::F0, DiskClass::Fp, DiskClass::Fm, DiskClass::Cp, DiskClass::Cm}},
        {2, {DiskClass::Fp, DiskClass::Fm, DiskClass::Cp, DiskClass::Cm}},
        {3, {DiskClass::Fp, DiskClass::Fm, DiskClass::Cm, DiskClass::CmP, DiskClass::FmP}},
        {4, {DiskClass::Fp, DiskClass::Fm, DiskClass::Cm, DiskClass::FmP}},
        {5, {DiskClass::Fp, DiskClass::Fm, DiskClass::Cp, DiskClass::Cm, DiskClass::C0}},
        {6, {DiskClass::Fp, DiskClass::Fm, DiskClass::Cp, DiskClass::Cm, DiskClass::C0}},
        {7,
         {DiskClass::Fp, DiskClass::Fm, DiskClass::Cm, DiskClass::CmP, DiskClass::FmP,
          DiskClass::C0, DiskClass::C0P}},
        {8, {DiskClass::Fp, DiskClass::Fm, DiskClass::FmP, DiskClass::C0P, DiskClass::C0}},
    };
    auto it = allowed.find(case_tag);
    if (it == allowed.end()) throw std::runtime_error("bad case tag");
    for (const auto& [c, n] : counts) {
        if (n != 0 && !it->second.count(c))
            throw std::runtime_error(std::string("disk class ") + disk_class_name(c) +
                                     " not allowed in case " + std::to_string(case_tag));
    }
    const bool tm_allowed = case_tag == 2 || case_tag == 4 || case_tag == 6 || case_tag == 8;
    if (!twisted_minus.empty() && !tm_allowed)
        throw std::runtime_error("twisted disks not allowed in case " + std::to_string(case_tag));
    if (!twisted_plus.empty())
        throw std::runtime_error("right-twisted disks do not arise from pasting");
}

std::string ZeroHandleConfig::to_string() const {
    std::ostringstream os;
    os << "case " << case_tag << ':';
    bool any = false;
    for (const auto& [c, n] : counts) {
        if (!n) continue;
        os << ' ' << disk_class_name(c) << ':' << n;
        any = true;
    }
    for (const auto& [rs, n] : twisted_minus) {
        if (!n) continue;
        os << " T-^{" << rs.first << ',' << rs.second << "}:" << n;
        any = true;
    }
    for (const auto& [rs, n] : twisted_plus) {
        if (!n) continue;
        os << " T+^{" << rs.first << ',' << rs.second << "}:" << n;
        any = true;
    }
    if (!any) os << " (empty)";
    return os.str();
}

namespace {

[[noreturn]] void side_fail(const std::string& why) {
    throw std::runtime_error("side-condition violation: " + why);
}

void require_nonneg(int v, const char* what) {
    if (v < 0) throw std::runtime_error(std::string("negative derived count: ") + what);
}

}  // namespace

BlockQuad blocks_for_case(int x_plus, int x, int x_minus, int y_plus, int y_minus, int t) {
    BlockQuad q;
    BlockVector base;
    base.x_plus = x_plus;
    base.x = x;
    base.x_minus = x_minus;
    q.xi4 = base;

    if (t == 0) {
        // xi2 trades y_plus I/I+ pairs for II+; xi3 trades y_minus for II-.
        q.xi2.x_plus = x_plus - y_plus;
        q.xi2.x = x - y_plus;
        q.xi2.x_minus = x_minus;
        q.xi2.y_plus = y_plus;
        q.xi3.x_plus = x_plus;
        q.xi3.x = x - y_minus;
        q.xi3.x_minus = x_minus - y_minus;
        q.xi3.y_minus = y_minus;
        if (y_plus + y_minus <= x) {
            q.xi1.x_plus = x_plus - y_plus;
            q.xi1.x = x - y_plus - y_minus;
            q.xi1.x_minus = x_minus - y_minus;
            q.xi1.y_plus = y_plus;
            q.xi1.y_minus = y_minus;
        } else {
            q.xi1.x_plus = x_plus - y_plus;
            q.xi1.x_minus = x_minus - y_minus;
            q.xi1.y_plus = x - y_minus;
            q.xi1.y_minus = x - y_plus;
            q.xi1.z = y_plus + y_minus - x;
        }
    } else if (y_plus == 0) {
        // tau case with a+(xi1)=0: xi1 = xi3, xi2 = xi4
        BlockVector v;
        v.x_plus = x_plus - y_minus + x;
        v.x_minus = x_minus - x - t;
        v.y_minus = x;
        v.t1 = t - y_minus + x;
        v.t2 = y_minus - x;
        q.xi1 = v;
        q.xi3 = v;
        q.xi2 = base;
    } else {
        // tau case with a+(xi1)>0; no tau2, so y_minus must equal x
        if (y_minus != x) throw std::runtime_error("blocks_for_case: tau case needs y_minus == x");
        q.xi3.x_plus = x_plus;
        q.xi3.x_minus = x_minus - x - t;
        q.xi3.y_minus = x;
        q.xi3.t1 = t;
        q.xi1.x_plus = x_plus - y_plus;
        q.xi1.x_minus = x_minus - x - t;
        q.xi1.y_minus = x - y_plus;
        q.xi1.z = y_plus;
        q.xi1.t1 = t;
        q.xi2.x_plus = x_plus - y_plus;
        q.xi2.x = x - y_plus;
        q.xi2.x_minus = x_minus;
        q.xi2.y_plus = y_plus;
    }
    return q;
}

ZeroHandleConfig paste_blocks(const BlockVector& xi1, const BlockVector& xi2,
                              const BlockVector& xi3, const BlockVector& xi4,
                              const BandSpec& bands) {
    const BlockVector* xs[4] = {&xi1, &xi2, &xi3, &xi4};
    for (int i = 0; i < 4; ++i) {
        if (!xs[i]->nonnegative()) side_fail("negative block entry");
        if (xs[i]->y != 0)
            side_fail("II-disks must be replaced by explicit bands before pasting");
    }
    ParamVector ps[4];
    DerivedVector ds[4];
    for (int i = 0; i < 4; ++i) {
        ps[i] = params(*xs[i]);
        ds[i] = derived_of(*xs[i]);
    }
    for (int i = 1; i < 4; ++i) {
        if (ps[i].iv_plus != ps[0].iv_plus || ps[i].iv_zero != ps[0].iv_zero ||
            ps[i].iv_minus != ps[0].iv_minus)
            side_fail("blocks disagree on the axis counts");
    }
    if (ds[0].a_plus != ds[1].a_plus) side_fail("a+(xi1) != a+(xi2)");
    if (ds[2].a_plus != ds[3].a_plus) side_fail("a+(xi3) != a+(xi4)");
    if (ds[0].a_minus != ds[2].a_minus) side_fail("a-(xi1) != a-(xi3)");
    if (ds[1].a_minus != ds[3].a_minus) side_fail("a-(xi2) != a-(xi4)");
    if (ds[1].a_minus != 0) side_fail("a-(xi2) must be 0 after reflection normalization");
    if (ds[2].a_plus != 0) side_fail("a+(xi3) must be 0 after reflection normalization");
    if (ps[3].kappa != 0) side_fail("kappa(xi4) must be 0 after reflection normalization");
    if (ps[1].kappa != 0) side_fail("kappa(xi2) must be 0");
    if (ps[0].kappa != ps[2].kappa) side_fail("kappa(xi1) != kappa(xi3)");

    const int x_plus = xi4.x_plus;
    const int x = xi4.x;
    const int x_minus = xi4.x_minus;
    const int y_plus = ds[0].a_plus;
    const int y_minus = ds[0].a_minus;
    const int t = ps[0].kappa;

    BlockQuad expect;
    if (t > 0 && y_plus > 0 && ds[0].a_minus != x)
        side_fail("tau case with a+ > 0 requires a-(xi1) == x");
    try {
        expect = blocks_for_case(x_plus, x, x_minus, y_plus, y_minus, t);
    } catch (const std::runtime_error& e) {
        side_fail(e.what());
    }
    if (!(xi1 == expect.xi1)) side_fail("xi1 is not the pasting form for these parameters");
    if (!(xi2 == expect.xi2)) side_fail("xi2 is not the pasting form for these parameters");
    if (!(xi3 == expect.xi3)) side_fail("xi3 is not the pasting form for these parameters");
    if (!(xi4 == expect.xi4)) side_fail("xi4 is not the pasting form for these parameters");
    for (const BlockVector* v : xs)
        if (!v->nonnegative()) side_fail("negative block entry");

    // Band-free configuration, cases 1-4.
    ZeroHandleConfig cfg;
    if (t == 0 && y_plus + y_minus <= x) {
        cfg.case_tag = 1;
        require_nonneg(x_plus - y_plus, "F+");
        require_nonneg(x_minus - y_minus, "F-");
        cfg.add(DiskClass::Fp, x_plus - y_plus);
        cfg.add(DiskClass::Fm, x_minus - y_minus);
        cfg.add(DiskClass::Cp, y_plus);
        cfg.add(DiskClass::Cm, y_minus);
        cfg.add(DiskClass::F0, x - y_plus - y_minus);
    } else if (t == 0) {
        cfg.case_tag = 2;
        require_nonneg(x_plus - y_plus, "F+");
        require_nonneg(x_minus - y_minus, "F-");
        require_nonneg(x - y_minus, "C+");
        require_nonneg(x - y_plus, "C-");
        cfg.add(DiskClass::Fp, x_plus - y_plus);
        cfg.add(DiskClass::Fm, x_minus - y_minus);
        cfg.add_tm(0, 0, y_plus + y_minus - x);
        cfg.add(DiskClass::Cp, x - y_minus);
        cfg.add(DiskClass::Cm, x - y_plus);
    } else if (y_plus == 0) {
        cfg.case_tag = 3;
        require_nonneg(y_minus - x, "C-^+");
        require_nonneg(t - y_minus + x, "F-^+");
        require_nonneg(x_minus - x - t, "F-");
        require_nonneg(x_plus - y_minus + x, "F+");
        cfg.add(DiskClass::Cm, x);
        cfg.add(DiskClass::Fm, x_minus - x - t);
        cfg.add(DiskClass::Fp, x_plus - y_minus + x);
        cfg.add(DiskClass::CmP, y_minus - x);
        cfg.add(DiskClass::FmP, t - y_minus + x);
    } else {
        cfg.case_tag = 4;
        require_nonneg(x_plus - y_plus, "F+");
        require_nonneg(x_minus - x - t, "F-");
        require_nonneg(x - y_plus, "C-");
        cfg.add(DiskClass::Fp, x_plus - y_plus);
        cfg.add(DiskClass::Fm, x_minus - x - t);
        cfg.add(DiskClass::FmP, t);
        cfg.add_tm(0, 0, y_plus);
        cfg.add(DiskClass::Cm, x - y_plus);
    }

    const int axis_before = cfg.total_axis_points();

    if (bands.b_plus < 0 || bands.b_minus < 0) side_fail("negative band count");
    if (bands.b_plus > 0 || bands.b_minus > 0) {
        const int bp = bands.b_plus;
        const int bm = bands.b_minus;
        switch (cfg.case_tag) {
            case 1: {
                // bands join F+/F- pairs into C0 disks
                if (cfg.get(DiskClass::F0) > 0)
                    throw std::runtime_error("unsupported band pattern: F0 disks block bands");
                if (bp != bm)
                    throw std::runtime_error(
                        "unsupported band pattern: case 5 bands pair F+ with F-");
                require_nonneg(cfg.get(DiskClass::Fp) - bp, "F+ after bands");
                require_nonneg(cfg.get(DiskClass::Fm) - bm, "F- after bands");
                cfg.add(DiskClass::Fp, -bp);
                cfg.add(DiskClass::Fm, -bm);
                cfg.add(DiskClass::C0, bp);
                cfg.case_tag = 5;
                break;
            }
            case 2: {
                const int t0 = cfg.get_tm(0, 0);
                const int cp = cfg.get(DiskClass::Cp);
                const int cm = cfg.get(DiskClass::Cm);
                const int fp = cfg.get(DiskClass::Fp);
                const int fm = cfg.get(DiskClass::Fm);
                if (t0 <= 0) throw std::runtime_error("unsupported band pattern: no twisted disks");
                if (cp > 0 && cm > 0)
                    throw std::runtime_error(
                        "unsupported band pattern: both C+ and C- present");
                cfg.twisted_minus.clear();
                if (cp == 0 && cm == 0) {
                    // full band-distribution arithmetic
                    require_nonneg(fp - bp, "F+ after bands");
                    require_nonneg(fm - bm, "F- after bands");
                    const int qp = bp / t0, rp = bp % t0;
                    const int qm = bm / t0, rm = bm % t0;
                    const int q = std::min(qp, qm);
                    cfg.add(DiskClass::Fp, -bp);
                    if (qp == qm) {
                        cfg.add(DiskClass::Fm, -bm);
                        if (rp + rm <= t0) {
                            cfg.add_tm(q + 1, q, rp);
                            cfg.add_tm(q, q + 1, rm);
                            cfg.add_tm(q, q, t0 - rp - rm);
                        } else {
                            cfg.add_tm(q + 1, q, t0 - rm);
                            cfg.add_tm(q, q + 1, t0 - rp);
                            cfg.add_tm(q + 1, q + 1, rp + rm - t0);
                        }
                    } else if (qp > qm) {
                        cfg.add(DiskClass::Fm, -std::max(bm, bp - t0));
                        require_nonneg(fm - std::max(bm, bp - t0), "F- after bands");
                        const int rpp = (qp - q - 1) * t0 + rp;
                        if (rm >= rpp) {
                            cfg.add_tm(q + 2, q + 1, rpp);
                            cfg.add_tm(q + 1, q + 1, rm - rpp);
                            cfg.add_tm(q + 1, q, t0 - rm);
                        } else {
                            cfg.add_tm(q + 1, q, t0 - rm);
                            cfg.add_tm(q + 2, q + 1, rm);
                            cfg.add(DiskClass::C0, rpp - rm);
                        }
                    } else {  // qm > qp: mirror of the previous branch
                        cfg.add(DiskClass::Fm, -bm);
                        cfg.counts.erase(DiskClass::Fp);
                        cfg.add(DiskClass::Fp, fp - std::max(bp, bm - t0));
                        require_nonneg(fp - std::max(bp, bm - t0), "F+ after bands");
                        const int rmm = (qm - q - 1) * t0 + rm;
                        if (rp >= rmm) {
                            cfg.add_tm(q + 1, q + 2, rmm);
                            cfg.add_tm(q + 1, q + 1, rp - rmm);
                            cfg.add_tm(q, q + 1, t0 - rp);
                        } else {
                            cfg.add_tm(q, q + 1, t0 - rp);
                            cfg.add_tm(q + 1, q + 2, rp);
                            cfg.add(DiskClass::C0, rmm - rp);
                        }
                    }
                } else if (cp > 0) {
                    if (bm != 0)
                        throw std::runtime_error(
                            "unsupported band pattern: C+ blocks the F- side");
                    require_nonneg(fp - bp, "F+ after bands");
                    cfg.add(DiskClass::Fp, -bp);
                    if (bp <= t0) {
                        cfg.add_tm(1, 0, bp);
                        cfg.add_tm(0, 0, t0 - bp);
                    } else {
                        cfg.add_tm(1, 0, t0);
                        require_nonneg(fm - (bp - t0), "F- after bands");
                        cfg.add(DiskClass::Fm, -(bp - t0));
                        cfg.add(DiskClass::C0, bp - t0);
                    }
                } else {  // cm > 0, mirror
                    if (bp != 0)
                        throw std::runtime_error(
                            "unsupported band pattern: C- blocks the F+ side");
                    require_nonneg(fm - bm, "F- after bands");
                    cfg.add(DiskClass::Fm, -bm);
                    if (bm <= t0) {
                        cfg.add_tm(0, 1, bm);
                        cfg.add_tm(0, 0, t0 - bm);
                    } else {
                        cfg.add_tm(0, 1, t0);
                        require_nonneg(fp - (bm - t0), "F+ after bands");
                        cfg.add(DiskClass::Fp, -(bm - t0));
                        cfg.add(DiskClass::C0, bm - t0);
                    }
                }
                cfg.case_tag = 6;
                break;
            }
            case 3: {
                const int cmp = cfg.get(DiskClass::CmP);
                const int fmp = cfg.get(DiskClass::FmP);
                if (cmp > 0 && fmp > 0)
                    throw std::runtime_error(
                        "unsupported band pattern: both C-^+ and F-^+ present");
                if (cmp > 0) {
                    // bands may only join F+/F- pairs into C0
                    if (bp != bm)
                        throw std::runtime_error(
                            "unsupported band pattern: case 7 bands pair F+ with F-");
                    require_nonneg(cfg.get(DiskClass::Fp) - bp, "F+ after bands");
                    require_nonneg(cfg.get(DiskClass::Fm) - bm, "F- after bands");
                    cfg.add(DiskClass::Fp, -bp);
                    cfg.add(DiskClass::Fm, -bm);
                    cfg.add(DiskClass::C0, bp);
                } else {
                    if (cfg.get(DiskClass::Cm) > 0)
                        throw std::runtime_error(
                            "unsupported band pattern: C- disks block bands");
                    if (bm != 0)
                        throw std::runtime_error(
                            "unsupported band pattern: case 7 bands attach on the F+ side");
                    const int made = std::min(bp, fmp);
                    const int extra = bp - made;
                    require_nonneg(cfg.get(DiskClass::Fp) - bp, "F+ after bands");
                    require_nonneg(cfg.get(DiskClass::Fm) - extra, "F- after bands");
                    cfg.add(DiskClass::Fp, -bp);
                    cfg.add(DiskClass::FmP, -made);
                    cfg.add(DiskClass::C0P, made);
                    cfg.add(DiskClass::Fm, -extra);
                    cfg.add(DiskClass::C0, extra);
                }
                cfg.case_tag = 7;
                break;
            }
            case 4: {
                if (cfg.get(DiskClass::Cm) > 0)
                    throw std::runtime_error("unsupported band pattern: C- disks block bands");
                if (bm != 0)
                    throw std::runtime_error(
                        "unsupported band pattern: case 8 bands attach on the F+ side");
                const int t0 = cfg.get_tm(0, 0);
                const int tf = cfg.get(DiskClass::FmP);
                require_nonneg(cfg.get(DiskClass::Fp) - bp, "F+ after bands");
                cfg.add(DiskClass::Fp, -bp);
                cfg.twisted_minus.clear();
                if (bp < t0) {
                    cfg.add_tm(1, 0, bp);
                    cfg.add_tm(0, 0, t0 - bp);
                } else if (bp < t0 + tf) {
                    cfg.add_tm(1, 0, t0);
                    cfg.add(DiskClass::FmP, -(bp - t0));
                    cfg.add(DiskClass::C0P, bp - t0);
                } else {
                    cfg.add_tm(1, 0, t0);
                    cfg.add(DiskClass::FmP, -tf);
                    cfg.add(DiskClass::C0P, tf);
                    const int extra = bp - t0 - tf;
                    require_nonneg(cfg.get(DiskClass::Fm) - extra, "F- after bands");
                    cfg.add(DiskClass::Fm, -extra);
                    cfg.add(DiskClass::C0, extra);
                }
                cfg.case_tag = 8;
                break;
            }
        }
    }

    // Bands merge disks without moving axis intersections.
    if (cfg.total_axis_points() != axis_before)
        throw std::runtime_error("internal pasting error: axis points not conserved");
    if (cfg.total_axis_points() != ps[0].iv_plus + ps[0].iv_zero + ps[0].iv_minus)
        throw std::runtime_error("internal pasting error: axis points disagree with blocks");
    cfg.validate();
    return cfg;
}

}  // namespace kc
