#pragma once

#include <map>
#include <string>
#include <vector>

#include "kc/blocks.hpp"

namespace kc {

// Normal-disk subclasses of a 0-handle. Twisted classes Tm^{r,s} / Tp^{r,s}
// are kept in separate keyed maps; Tm alone is Tm^{0,0}.
enum class DiskClass {
    F0,
    Fp,
    Fm,
    C0,
    Cp,
    Cm,
    FmP,  // flat, axis point low, knot point high
    FpM,
    CmP,
    CpM,
    C0P,
    C0M,
};

const char* disk_class_name(DiskClass c);

struct BandSpec {
    int b_plus = 0;   // bands consuming F+ disks
    int b_minus = 0;  // bands consuming F- disks
};

struct ZeroHandleConfig {
    int case_tag = 1;  // 1..8
    std::map<DiskClass, int> counts;
    std::map<std::pair<int, int>, int> twisted_minus;  // (r,s) -> count
    std::map<std::pair<int, int>, int> twisted_plus;

    int get(DiskClass c) const;
    int get_tm(int r, int s) const;
    void add(DiskClass c, int n);
    void add_tm(int r, int s, int n);

    bool empty() const;
    int kinds() const;  // distinct nonzero disk kinds, each T^{r,s} separate

    // Intersections with the vertical axis of the 0-handle: flat disks cross
    // once, curved twice, twisted 3+r+s.
    int total_axis_points() const;
    // Band-sum constituents: C0-family disks count 2, T^{r,s} counts 1+r+s.
    int disk_atoms() const;

    void validate() const;  // nonnegative, |r-s|<=1, support allowed for the tag
    std::string to_string() const;
};

// Pastes four block vectors (already reflection-normalized and with all
// II-disks replaced by explicit bands) into the 0-handle configuration.
ZeroHandleConfig paste_blocks(const BlockVector& xi1, const BlockVector& xi2,
                              const BlockVector& xi3, const BlockVector& xi4,
                              const BandSpec& bands = {});

// The four block vectors of the band-free configuration with shared axis
// counts (x_plus, x, x_minus), curved counts y_plus/y_minus of block 1, and
// tau-point count t. The case is determined by t, y_plus and the sign of
// y_plus + y_minus - x. For t > 0 with y_plus > 0, y_minus must equal x.
struct BlockQuad {
    BlockVector xi1, xi2, xi3, xi4;
};
BlockQuad blocks_for_case(int x_plus, int x, int x_minus, int y_plus, int y_minus, int t);

}  // namespace kc
