#include "doctest.h"
#include <stdexcept>
#include "kc/surface.hpp"

using namespace kc;

namespace {
const char* kTrefoilPd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

// one horizontal sheet above the strand: every face once, every 1-handle one
// flat above, every 0-handle one F+ disk (each block an I+)
NormalSurfaceVector sheet_above(const DStructure& ds) {
    NormalSurfaceVector s;
    for (int f = 0; f < ds.two_handles(); ++f) s.face_disks[f] = 1;
    for (int e = 0; e < ds.one_handles(); ++e) {
        EdgeDisks d;
        d.flat_above = 1;
        s.edge_disks[e] = d;
    }
    for (int c = 0; c < ds.zero_handles(); ++c) {
        BlockQuadData q;
        for (auto& b : q.blocks) b = BlockVector::unit(TY_I_PLUS);
        s.crossing_data[c] = q;
    }
    return s;
}
}  // namespace

TEST_SUITE("surface") {

TEST_CASE("complexity ordering") {
    CHECK(compare_complexity({1, 9, 9}, {2, 0, 0}) == -1);
    CHECK(compare_complexity({1, 2, 3}, {1, 2, 3}) == 0);
    CHECK(compare_complexity({0, 5, 0}, {0, 4, 99}) == 1);
}

TEST_CASE("empty surface has zero complexity") {
    DStructure ds = DStructure::build(Diagram::from_pd(kTrefoilPd));
    NormalSurfaceVector s;
    CHECK(complexity(s, ds) == ComplexityTriple{0, 0, 0});
}

TEST_CASE("single sheet above the diagram") {
    DStructure ds = DStructure::build(Diagram::from_pd(kTrefoilPd));
    NormalSurfaceVector s = sheet_above(ds);
    CHECK(check_matching(s, ds).empty());
    ComplexityTriple t = complexity(s, ds);
    CHECK(t.i2 == 5);
    CHECK(t.i1 == 6);
    CHECK(t.i0 == 3);  // one axis point per crossing
}

TEST_CASE("two parallel sheets glued through flats") {
    DStructure ds = DStructure::build(Diagram::from_pd(kTrefoilPd));
    NormalSurfaceVector s;
    for (int f = 0; f < ds.two_handles(); ++f) s.face_disks[f] = 2;
    for (int e = 0; e < ds.one_handles(); ++e) {
        EdgeDisks d;
        d.flat_above = 1;
        d.flat_below = 1;
        s.edge_disks[e] = d;
    }
    for (int c = 0; c < ds.zero_handles(); ++c) {
        BlockQuadData q;
        for (auto& b : q.blocks) {
            b = BlockVector::unit(TY_I_PLUS);
            b.x_minus = 1;
        }
        s.crossing_data[c] = q;
    }
    ComplexityTriple t = complexity(s, ds);
    CHECK(t.i2 == 10);
    CHECK(t.i1 == 12);
    CHECK(t.i0 == 6);
}

TEST_CASE("matching failures are reported") {
    DStructure ds = DStructure::build(Diagram::from_pd(kTrefoilPd));
    NormalSurfaceVector s = sheet_above(ds);
    s.face_disks[0] = 2;  // break one face count
    auto issues = check_matching(s, ds);
    CHECK_FALSE(issues.empty());
    CHECK_THROWS_WITH_AS(complexity(s, ds), doctest::Contains("matching failure"),
                         std::runtime_error);
}

TEST_CASE("blocks disagreeing on the axis are rejected") {
    DStructure ds = DStructure::build(Diagram::from_pd(kTrefoilPd));
    NormalSurfaceVector s = sheet_above(ds);
    auto& q = std::get<BlockQuadData>(s.crossing_data[1]);
    q.blocks[2] = BlockVector::unit(TY_I_MINUS);  // axis point in the wrong interval
    auto issues = check_matching(s, ds);
    bool axis_issue = false;
    for (const auto& i : issues)
        axis_issue |= i.text.find("axis") != std::string::npos;
    CHECK(axis_issue);
}

TEST_CASE("curved disks weigh twice in the skeleton counts") {
    DStructure ds = DStructure::build(Diagram::from_pd(kTrefoilPd));
    NormalSurfaceVector s = sheet_above(ds);
    // add a curved disk pair wrapping one edge: both incident faces gain 0,
    // the curved side gains 2 boundary arcs, so the counts must break
    s.edge_disks[0].curved_side[0] += 1;
    CHECK_FALSE(check_matching(s, ds).empty());
}

TEST_CASE("config crossings are inverted for matching") {
    DStructure ds = DStructure::build(Diagram::from_pd(kTrefoilPd));
    NormalSurfaceVector s = sheet_above(ds);
    ZeroHandleConfig cfg;
    cfg.case_tag = 1;
    cfg.add(DiskClass::Fp, 1);
    s.crossing_data[0] = cfg;  // same surface, compact form
    CHECK(check_matching(s, ds).empty());
    CHECK(complexity(s, ds).i0 == 3);
}

TEST_CASE("blocks_from_config inverts the pasting formulas") {
    BlockQuad q = blocks_for_case(2, 3, 2, 1, 1, 0);
    ZeroHandleConfig cfg = paste_blocks(q.xi1, q.xi2, q.xi3, q.xi4, {});
    BlockQuadData back = blocks_from_config(cfg);
    CHECK(back.blocks[0] == q.xi1);
    CHECK(back.blocks[1] == q.xi2);
    CHECK(back.blocks[2] == q.xi3);
    CHECK(back.blocks[3] == q.xi4);

    BlockQuad q3 = blocks_for_case(4, 1, 6, 0, 2, 3);
    ZeroHandleConfig cfg3 = paste_blocks(q3.xi1, q3.xi2, q3.xi3, q3.xi4, {});
    BlockQuadData back3 = blocks_from_config(cfg3);
    CHECK(back3.blocks[0] == q3.xi1);
    CHECK(back3.blocks[3] == q3.xi4);
}

TEST_CASE("serialization round trip") {
    DStructure ds = DStructure::build(Diagram::from_pd(kTrefoilPd));
    NormalSurfaceVector s = sheet_above(ds);
    ZeroHandleConfig cfg;
    cfg.case_tag = 2;
    cfg.add(DiskClass::Fp, 2);
    cfg.add_tm(1, 0, 3);
    s.crossing_data[2] = cfg;

    std::string text = s.serialize();
    NormalSurfaceVector back = NormalSurfaceVector::parse(text);
    CHECK(back.serialize() == text);
    CHECK(back.face_disks == s.face_disks);
    REQUIRE(back.crossing_data.count(2));
    const auto& c2 = std::get<ZeroHandleConfig>(back.crossing_data[2]);
    CHECK(c2.get_tm(1, 0) == 3);

    CHECK_THROWS_AS(NormalSurfaceVector::parse("bogus"), std::runtime_error);
}

}  // TEST_SUITE
