#include "doctest.h"
#include <stdexcept>
#include "kc/pasting.hpp"

using namespace kc;

namespace {

ZeroHandleConfig paste(int xp, int x, int xm, int yp, int ym, int t, BandSpec bands = {}) {
    BlockQuad q = blocks_for_case(xp, x, xm, yp, ym, t);
    return paste_blocks(q.xi1, q.xi2, q.xi3, q.xi4, bands);
}

int axis_total(int xp, int x, int xm) { return xp + x + xm; }

}  // namespace

TEST_SUITE("pasting") {

TEST_CASE("case 1 example") {
    auto cfg = paste(2, 3, 2, 1, 1, 0);
    CHECK(cfg.case_tag == 1);
    CHECK(cfg.get(DiskClass::Fp) == 1);
    CHECK(cfg.get(DiskClass::Fm) == 1);
    CHECK(cfg.get(DiskClass::Cp) == 1);
    CHECK(cfg.get(DiskClass::Cm) == 1);
    CHECK(cfg.get(DiskClass::F0) == 1);
    CHECK(cfg.total_axis_points() == axis_total(2, 3, 2));
}

TEST_CASE("case 2 example") {
    auto cfg = paste(1, 1, 1, 1, 1, 0);
    CHECK(cfg.case_tag == 2);
    CHECK(cfg.get_tm(0, 0) == 1);
    CHECK(cfg.get(DiskClass::Cp) == 0);
    CHECK(cfg.get(DiskClass::Cm) == 0);
    CHECK(cfg.get(DiskClass::Fp) == 0);
    CHECK(cfg.get(DiskClass::Fm) == 0);
    CHECK(cfg.total_axis_points() == 3);
}

TEST_CASE("all-zero blocks give the empty configuration") {
    auto cfg = paste(0, 0, 0, 0, 0, 0);
    CHECK(cfg.empty());
}

TEST_CASE("case 3 and case 4") {
    // kappa > 0 with a+ = 0: x=1, y-=2, t=3, axis (4,1,6)
    auto c3 = paste(4, 1, 6, 0, 2, 3);
    CHECK(c3.case_tag == 3);
    CHECK(c3.get(DiskClass::Cm) == 1);
    CHECK(c3.get(DiskClass::CmP) == 1);
    CHECK(c3.get(DiskClass::FmP) == 2);
    CHECK(c3.get(DiskClass::Fm) == 2);
    CHECK(c3.get(DiskClass::Fp) == 3);
    CHECK(c3.total_axis_points() == axis_total(4, 1, 6));

    // kappa > 0 with a+ > 0: y+ = 1, y- must equal x
    auto c4 = paste(3, 2, 5, 1, 2, 1);
    CHECK(c4.case_tag == 4);
    CHECK(c4.get(DiskClass::Fp) == 2);
    CHECK(c4.get(DiskClass::Fm) == 2);
    CHECK(c4.get(DiskClass::FmP) == 1);
    CHECK(c4.get_tm(0, 0) == 1);
    CHECK(c4.get(DiskClass::Cm) == 1);
    CHECK(c4.total_axis_points() == axis_total(3, 2, 5));
}

TEST_CASE("side conditions are rejected") {
    BlockQuad q = blocks_for_case(2, 3, 2, 1, 1, 0);
    q.xi2.x_plus += 1;  // break the axis agreement
    CHECK_THROWS_WITH_AS(paste_blocks(q.xi1, q.xi2, q.xi3, q.xi4, {}),
                         doctest::Contains("side-condition"), std::runtime_error);

    BlockQuad q2 = blocks_for_case(2, 3, 2, 1, 1, 0);
    q2.xi3.y_minus += 1;
    q2.xi3.x_minus -= 1;
    CHECK_THROWS_AS(paste_blocks(q2.xi1, q2.xi2, q2.xi3, q2.xi4, {}), std::runtime_error);

    BlockQuad q3 = blocks_for_case(1, 1, 1, 1, 1, 0);
    q3.xi1.y = 1;  // II-disks must be banded
    CHECK_THROWS_WITH_AS(paste_blocks(q3.xi1, q3.xi2, q3.xi3, q3.xi4, {}),
                         doctest::Contains("bands"), std::runtime_error);
}

TEST_CASE("case 5 bands join flats into C0") {
    auto cfg = paste(3, 2, 3, 1, 1, 0, BandSpec{1, 1});
    CHECK(cfg.case_tag == 5);
    CHECK(cfg.get(DiskClass::C0) == 1);
    CHECK(cfg.get(DiskClass::Fp) == 1);
    CHECK(cfg.get(DiskClass::Fm) == 1);
    CHECK(cfg.total_axis_points() == axis_total(3, 2, 3));
    CHECK(cfg.disk_atoms() == paste(3, 2, 3, 1, 1, 0).disk_atoms());

    // F0 disks block bands
    CHECK_THROWS_WITH_AS(paste(3, 3, 3, 1, 1, 0, BandSpec{1, 1}),
                         doctest::Contains("unsupported band pattern"), std::runtime_error);
    // bands must pair F+ with F-
    CHECK_THROWS_AS(paste(3, 2, 3, 1, 1, 0, BandSpec{2, 1}), std::runtime_error);
}

TEST_CASE("case 6 band distribution, equal quotients") {
    // t0 = 3 twisted disks, generous flats: x=3, y+=y-=3 -> t0 = 3, C+=C-=0
    // fp = fm = 4
    auto base = paste(7, 3, 7, 3, 3, 0);
    REQUIRE(base.get_tm(0, 0) == 3);
    REQUIRE(base.get(DiskClass::Fp) == 4);

    // b+ = 1, b- = 1: q=0, r+=r-=1, r++r- <= t0
    auto cfg = paste(7, 3, 7, 3, 3, 0, BandSpec{1, 1});
    CHECK(cfg.case_tag == 6);
    CHECK(cfg.get_tm(1, 0) == 1);
    CHECK(cfg.get_tm(0, 1) == 1);
    CHECK(cfg.get_tm(0, 0) == 1);
    CHECK(cfg.get(DiskClass::Fp) == 3);
    CHECK(cfg.get(DiskClass::Fm) == 3);
    CHECK(cfg.total_axis_points() == base.total_axis_points());
    CHECK(cfg.disk_atoms() == base.disk_atoms());

    // r+ + r- > t0: b+ = b- = 2 gives r+=r-=2, sum 4 > 3
    auto cfg2 = paste(7, 3, 7, 3, 3, 0, BandSpec{2, 2});
    CHECK(cfg2.get_tm(1, 0) == 1);
    CHECK(cfg2.get_tm(0, 1) == 1);
    CHECK(cfg2.get_tm(1, 1) == 1);
    CHECK(cfg2.total_axis_points() == base.total_axis_points());
}

TEST_CASE("case 6 band distribution, unequal quotients") {
    // q+ = 1 (b+ = 4 = 1*3+1), q- = 0 (b- = 1): r+' = 1, r- = 1 >= r+'
    auto cfg = paste(7, 3, 7, 3, 3, 0, BandSpec{4, 1});
    CHECK(cfg.case_tag == 6);
    CHECK(cfg.get_tm(2, 1) == 1);
    CHECK(cfg.get_tm(1, 1) == 0);
    CHECK(cfg.get_tm(1, 0) == 2);
    CHECK(cfg.get(DiskClass::Fp) == 0);
    CHECK(cfg.get(DiskClass::Fm) == 3);  // fm = 4 minus max(b-, b+ - t0) = 1
    CHECK(cfg.total_axis_points() == 17);

    // overflow into C0: q+ = 2 (b+ = 7 = 2*3+1), b- = 0 -> r+' = 4, r- = 0
    auto cfg2 = paste(10, 3, 8, 3, 3, 0, BandSpec{7, 0});
    CHECK(cfg2.get(DiskClass::C0) == 4);
    CHECK(cfg2.get_tm(1, 0) == 3);
    CHECK(cfg2.get(DiskClass::Fp) == 0);
    CHECK(cfg2.get(DiskClass::Fm) == 1);
    CHECK(cfg2.total_axis_points() == 21);
    CHECK(cfg2.disk_atoms() == paste(10, 3, 8, 3, 3, 0).disk_atoms());
}

TEST_CASE("case 6 with curved disks present") {
    // y+=3, y-=2, x=3: C+ = x-y- = 1, C- = x-y+ = 0, t0 = 2
    auto base = paste(8, 3, 8, 3, 2, 0);
    REQUIRE(base.get(DiskClass::Cp) == 1);
    REQUIRE(base.get_tm(0, 0) == 2);

    auto cfg = paste(8, 3, 8, 3, 2, 0, BandSpec{1, 0});
    CHECK(cfg.case_tag == 6);
    CHECK(cfg.get_tm(1, 0) == 1);
    CHECK(cfg.get_tm(0, 0) == 1);
    CHECK(cfg.get(DiskClass::Cp) == 1);

    auto cfg2 = paste(8, 3, 8, 3, 2, 0, BandSpec{3, 0});
    CHECK(cfg2.get_tm(1, 0) == 2);
    CHECK(cfg2.get(DiskClass::C0) == 1);
    CHECK(cfg2.total_axis_points() == base.total_axis_points());

    // bands on the blocked side
    CHECK_THROWS_AS(paste(8, 3, 8, 3, 2, 0, BandSpec{0, 1}), std::runtime_error);
}

TEST_CASE("case 7 bands") {
    // C-^+ present, F-^+ absent: x=1, y-=3, t=2 -> CmP=2, FmP=0
    auto c7a = paste(5, 1, 7, 0, 3, 2, BandSpec{1, 1});
    CHECK(c7a.case_tag == 7);
    CHECK(c7a.get(DiskClass::C0) == 1);
    CHECK(c7a.get(DiskClass::CmP) == 2);

    // F-^+ present, C-^+ absent, C- = 0: x=0, y-=0, t=2
    auto base = paste(5, 0, 7, 0, 0, 2);
    REQUIRE(base.get(DiskClass::FmP) == 2);
    REQUIRE(base.get(DiskClass::Cm) == 0);
    auto c7b = paste(5, 0, 7, 0, 0, 2, BandSpec{1, 0});
    CHECK(c7b.get(DiskClass::C0P) == 1);
    CHECK(c7b.get(DiskClass::FmP) == 1);
    auto c7c = paste(5, 0, 7, 0, 0, 2, BandSpec{3, 0});
    CHECK(c7c.get(DiskClass::C0P) == 2);
    CHECK(c7c.get(DiskClass::C0) == 1);
    CHECK(c7c.get(DiskClass::Fm) == 7 - 2 - 1);
    CHECK(c7c.total_axis_points() == base.total_axis_points());

    // both marked classes present: no bands allowed
    CHECK_THROWS_AS(paste(5, 1, 7, 0, 3, 3, BandSpec{1, 1}), std::runtime_error);
}

TEST_CASE("case 8 bands") {
    // case 4 with C- = 0: x = y+ = 2, t0 = 2, t = 1
    auto base = paste(6, 2, 7, 2, 2, 1);
    REQUIRE(base.case_tag == 4);
    REQUIRE(base.get(DiskClass::Cm) == 0);
    REQUIRE(base.get_tm(0, 0) == 2);
    REQUIRE(base.get(DiskClass::FmP) == 1);

    auto c8a = paste(6, 2, 7, 2, 2, 1, BandSpec{1, 0});
    CHECK(c8a.case_tag == 8);
    CHECK(c8a.get_tm(1, 0) == 1);
    CHECK(c8a.get_tm(0, 0) == 1);

    auto c8b = paste(6, 2, 7, 2, 2, 1, BandSpec{2, 0});
    CHECK(c8b.get_tm(1, 0) == 2);
    CHECK(c8b.get(DiskClass::FmP) == 1);
    CHECK(c8b.get(DiskClass::C0P) == 0);

    auto c8c = paste(6, 2, 7, 2, 2, 1, BandSpec{3, 0});
    CHECK(c8c.get_tm(1, 0) == 2);
    CHECK(c8c.get(DiskClass::C0P) == 1);
    CHECK(c8c.get(DiskClass::FmP) == 0);

    auto c8d = paste(6, 2, 7, 2, 2, 1, BandSpec{4, 0});
    CHECK(c8d.get(DiskClass::C0) == 1);
    CHECK(c8d.get(DiskClass::Fm) == 7 - 2 - 1 - 1);
    CHECK(c8d.total_axis_points() == base.total_axis_points());
    CHECK(c8d.disk_atoms() == base.disk_atoms());

    // C- present blocks bands
    auto blocked = blocks_for_case(6, 3, 8, 2, 3, 1);
    CHECK_THROWS_AS(paste_blocks(blocked.xi1, blocked.xi2, blocked.xi3, blocked.xi4,
                                 BandSpec{1, 0}),
                    std::runtime_error);
}

TEST_CASE("atom counts follow the per-case closed forms") {
    // case 1 and 2: atoms = x+ + x + x- - y+ - y-
    CHECK(paste(2, 3, 2, 1, 1, 0).disk_atoms() == 2 + 3 + 2 - 1 - 1);
    CHECK(paste(7, 3, 7, 3, 3, 0).disk_atoms() == 7 + 3 + 7 - 3 - 3);
    // case 3: atoms = x+ + x + x- - y-
    CHECK(paste(4, 1, 6, 0, 2, 3).disk_atoms() == 4 + 1 + 6 - 2);
    // case 4: atoms = x+ + x- - y+
    CHECK(paste(3, 2, 5, 1, 2, 1).disk_atoms() == 3 + 5 - 1);
    // bands merge disks but never change the atom count
    CHECK(paste(3, 2, 3, 1, 1, 0, BandSpec{1, 1}).disk_atoms() == 3 + 2 + 3 - 1 - 1);
}

TEST_CASE("twisted classes keep |r-s| <= 1 and at most five kinds appear") {
    for (int bp = 0; bp <= 6; ++bp)
        for (int bm = 0; bm <= 6; ++bm) {
            ZeroHandleConfig cfg;
            try {
                cfg = paste(8, 3, 8, 3, 3, 0, BandSpec{bp, bm});
            } catch (const std::runtime_error&) {
                continue;
            }
            CHECK(cfg.kinds() <= 5);
            for (const auto& [rs, n] : cfg.twisted_minus) {
                CHECK(std::abs(rs.first - rs.second) <= 1);
                CHECK(n >= 0);
            }
            CHECK(cfg.total_axis_points() == 19);
        }
}

}  // TEST_SUITE
