#include "doctest.h"
#include <stdexcept>
#include "kc/handles.hpp"

using namespace kc;

namespace {
const char* kTrefoilPd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kFig8Pd = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
const char* kKinkedTrefoilPd = "X(9,4,2,5) X(3,6,4,7) X(5,2,6,3) X(7,8,8,9)";
}  // namespace

TEST_SUITE("handles") {

TEST_CASE("handle counts from the diagram") {
    DStructure s = DStructure::build(Diagram::from_pd(kTrefoilPd));
    CHECK(s.three_handles() == 2);
    CHECK(s.two_handles() == 5);
    CHECK(s.one_handles() == 6);
    CHECK(s.zero_handles() == 3);

    DStructure f8 = DStructure::build(Diagram::from_pd(kFig8Pd));
    CHECK(f8.two_handles() == 6);
    CHECK(f8.one_handles() == 8);
    CHECK(f8.zero_handles() == 4);
}

TEST_CASE("kinked diagram is rejected with the violation attached") {
    CHECK_THROWS_WITH_AS(DStructure::build(Diagram::from_pd(kKinkedTrefoilPd)),
                         doctest::Contains("meets crossing region"), std::runtime_error);
}

TEST_CASE("contact counts") {
    DStructure s = DStructure::build(Diagram::from_pd(kTrefoilPd));
    const Diagram& d = s.diagram();

    // every 1-handle touches exactly its two endpoint crossings
    for (int e = 0; e < s.one_handles(); ++e) {
        int touched = 0;
        for (int v = 0; v < s.zero_handles(); ++v)
            touched += s.contact_count({HandleKind::One, e}, {HandleKind::Zero, v});
        CHECK(touched == 2);
        int v0 = he_crossing(d.edge(e).tail);
        CHECK(s.contact_count({HandleKind::One, e}, {HandleKind::Zero, v0}) == 1);
    }
    // handles of one index set are disjoint
    CHECK(s.contact_count({HandleKind::One, 0}, {HandleKind::One, 1}) == 0);
    CHECK(s.contact_count({HandleKind::ThreeTop, 0}, {HandleKind::ThreeBottom, 0}) == 0);
    // a 2-handle misses the crossings away from its boundary
    bool saw_zero = false;
    for (int f = 0; f < s.two_handles() && !saw_zero; ++f)
        for (int v = 0; v < s.zero_handles() && !saw_zero; ++v)
            saw_zero = s.contact_count({HandleKind::Two, f}, {HandleKind::Zero, v}) == 0;
    CHECK(saw_zero);
    // 3-handles touch everything below
    CHECK(s.contact_count({HandleKind::ThreeTop, 0}, {HandleKind::Two, 0}) == 1);
    CHECK(s.contact_count({HandleKind::ThreeBottom, 0}, {HandleKind::Zero, 2}) == 1);
    // symmetric
    CHECK(s.contact_count({HandleKind::Zero, 0}, {HandleKind::One, 0}) ==
          s.contact_count({HandleKind::One, 0}, {HandleKind::Zero, 0}));
    CHECK_THROWS_WITH_AS(s.contact_count({HandleKind::Two, 77}, {HandleKind::Zero, 0}),
                         doctest::Contains("unknown handle"), std::runtime_error);
}

TEST_CASE("contact graph restricted to low handles is the medial incidence") {
    DStructure s = DStructure::build(Diagram::from_pd(kTrefoilPd));
    for (int v = 0; v < s.zero_handles(); ++v) {
        int deg = 0;
        for (int e = 0; e < s.one_handles(); ++e)
            deg += s.contact_count({HandleKind::One, e}, {HandleKind::Zero, v});
        CHECK(deg == 4);
    }
}

TEST_CASE("mainbody walks alternate and have the right lengths") {
    DStructure s = DStructure::build(Diagram::from_pd(kTrefoilPd));
    int h1_entries = 0, h0_entries = 0;
    for (int f = 0; f < s.two_handles(); ++f) {
        auto walk = s.mainbody_walk(f);
        int deg = s.faces()[f].degree();
        CHECK((int)walk.size() == 2 * deg);
        for (size_t i = 0; i < walk.size(); ++i) {
            HandleKind want = (i % 2 == 0) ? HandleKind::Zero : HandleKind::One;
            CHECK(walk[i].kind == want);
            (walk[i].kind == HandleKind::One ? h1_entries : h0_entries)++;
        }
    }
    // each edge region borders two faces, each crossing corner borders one
    CHECK(h1_entries == 4 * s.diagram().crossings());
    CHECK(h0_entries == 4 * s.diagram().crossings());
}

TEST_CASE("bigon walk on the figure eight") {
    DStructure s = DStructure::build(Diagram::from_pd(kFig8Pd));
    bool saw_bigon = false;
    for (int f = 0; f < s.two_handles(); ++f) {
        if (s.faces()[f].degree() == 2) {
            saw_bigon = true;
            CHECK(s.mainbody_walk(f).size() == 4);
        }
    }
    CHECK(saw_bigon);
}

TEST_CASE("dot emission is deterministic and mentions every handle") {
    DStructure s = DStructure::build(Diagram::from_pd(kTrefoilPd));
    std::string dot = s.to_dot();
    CHECK(dot == s.to_dot());
    CHECK(dot.find("H3+") != std::string::npos);
    CHECK(dot.find("v2") != std::string::npos);
    CHECK(dot.find("f4") != std::string::npos);
}

TEST_CASE("building twice from equal diagrams gives identical structures") {
    Diagram d1 = Diagram::from_pd(kTrefoilPd);
    Diagram d2 = Diagram::from_pd(kTrefoilPd);
    CHECK(DStructure::build(d1).to_dot() == DStructure::build(d2).to_dot());
}

}  // TEST_SUITE
