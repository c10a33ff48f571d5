#include "doctest.h"
#include <stdexcept>
#include "kc/models.hpp"

#include <algorithm>
#include <set>

using namespace kc;

TEST_SUITE("models") {

TEST_CASE("catalog size and flagged metadata") {
    const auto& cat = model_catalog();
    CHECK(cat.size() == kNumAllModels);
    int base = 0, generalized = 0, final15 = 0;
    for (const auto& mi : cat) {
        bool gz = mi.model == Model::GZ1 || mi.model == Model::GZ2 || mi.model == Model::GZ3;
        (gz ? generalized : base)++;
        final15 += mi.in_final_fifteen ? 1 : 0;
    }
    CHECK(base == kNumModels);
    CHECK(generalized == 3);
    CHECK(final15 == 15);

    CHECK(model_info(Model::Zbar3).note.find("Z3") != std::string::npos);
    CHECK(max_crossings(Model::Zbar3) == 0);
    CHECK(model_info(Model::X3).boundary_sheets == 3);
    CHECK(model_info(Model::Y3ppZ).note.find("O2''") != std::string::npos);
}

TEST_CASE("model names round trip") {
    for (const auto& mi : model_catalog()) {
        auto back = model_from_name(model_name(mi.model));
        REQUIRE(back.has_value());
        CHECK(*back == mi.model);
    }
    CHECK_FALSE(model_from_name("Q9").has_value());
}

TEST_CASE("mutation rows") {
    auto x3 = mutate_model(Model::X3);
    REQUIRE(x3.size() == 3);
    CHECK(*x3[0] == Model::X3pY);
    CHECK(*x3[1] == Model::Y3p);
    CHECK(*x3[2] == Model::Z3);

    auto z2 = mutate_model(Model::Z2);
    REQUIRE(z2.size() == 1);
    CHECK(!z2[0].has_value());  // removal

    CHECK(mutate_model(Model::XZ3).empty());

    // every mutation target is itself cataloged
    for (const auto& mi : model_catalog())
        for (const auto& target : mutate_model(mi.model))
            if (target) CHECK_NOTHROW(model_info(*target));
}

TEST_CASE("co-occurrence expansion") {
    const auto& sets = cooccurrence_sets();
    CHECK(sets.size() == 38);

    int nine_way = 0;
    for (const auto& s : sets)
        if (s.case_tag == 1 && s.models.size() == 2) {
            bool all_z = true;
            for (Model m : s.models)
                all_z &= (m == Model::Z1 || m == Model::Z2 || m == Model::Z3);
            if (all_z) nine_way++;
        }
    CHECK(nine_way == 9);  // the bracketed row expands into nine lists

    ModelSet case1 = {1, {Model::X4, Model::Z1, Model::Z1}};
    std::sort(case1.models.begin(), case1.models.end());
    bool found = false;
    for (const auto& s : sets) found |= (s.models == case1.models);
    CHECK(found);

    ModelSet case7 = {7, {Model::YZ2p, Model::Z1}};
    std::sort(case7.models.begin(), case7.models.end());
    found = false;
    for (const auto& s : sets) found |= (s.models == case7.models);
    CHECK(found);
}

TEST_CASE("enumerator budgets") {
    CHECK(max_crossings(Model::X3) == 5);  // the one stated calibration point
    CHECK(max_crossings(Model::Zbar3) == 0);
    CHECK(max_crossings(Model::Z1) == 0);
    CHECK(max_crossings(Model::YZ1) == 0);
    CHECK(max_crossings(Model::Z2) == 3);
    CHECK(max_crossings(Model::X2) == 6);
    CHECK(max_crossings(Model::X4) == 3);
    for (const auto& mi : model_catalog()) CHECK(max_crossings(mi.model) <= 11);
}

TEST_CASE("per-crossing bounds over the whole closure") {
    for (const auto& t : cooccurrence_closure()) {
        CrossingBudget b = per_crossing_bound(t);  // throws when a cap fails
        CHECK(b.total <= 16);
        if (!b.z_only) CHECK(b.total <= 11);
    }
}

TEST_CASE("single model sets") {
    CrossingBudget x2 = per_crossing_bound(ModelSet{0, {Model::X2}});
    CHECK(x2.total <= 11);
    CHECK_FALSE(x2.z_only);

    CrossingBudget pair = per_crossing_bound(ModelSet{0, {Model::Y2, Model::YZ3}});
    CHECK(pair.inter_model_allowance == 1);
    CHECK(pair.total == max_crossings(Model::Y2) + max_crossings(Model::YZ3) + 1);

    // pieces essentially the same as Z3 never carry crossings
    CrossingBudget zbar = per_crossing_bound(ModelSet{0, {Model::Zbar3}});
    CHECK(zbar.total == 0);
    CrossingBudget mixed = per_crossing_bound(ModelSet{0, {Model::Zbar3, Model::X2}});
    CHECK(mixed.total == per_crossing_bound(ModelSet{0, {Model::X2}}).total);

    CHECK_THROWS_WITH_AS(per_crossing_bound(ModelSet{0, {Model::X2, Model::X2}}),
                         doctest::Contains("no co-occurrence template"), std::runtime_error);
}

TEST_CASE("aggregate bound") {
    auto mk = [](int total) {
        CrossingBudget b;
        b.total = total;
        return b;
    };
    auto ab = aggregate_bound({mk(11), mk(16), mk(16)}, 3);
    CHECK(ab.total_budget == 43);
    CHECK(ab.cap == 48);
    CHECK(ab.within_cap);
    CHECK(ab.strictness_witness == 0);
    CHECK_FALSE(ab.degenerate);

    auto zero = aggregate_bound({mk(0), mk(0)}, 2);
    CHECK(zero.degenerate);

    auto one = aggregate_bound({mk(16)}, 1);
    CHECK(one.within_cap);
    CHECK(one.strictness_witness == -1);

    CHECK_THROWS_AS(aggregate_bound({mk(1)}, 2), std::runtime_error);
}

TEST_CASE("tables render") {
    std::string txt = models_table_text();
    CHECK(txt.find("X3") != std::string::npos);
    CHECK(txt.find("case 8") != std::string::npos);
}

TEST_CASE("generalized 1-handle merging") {
    using M = Model;
    // a path of Z2 pieces merges into one GZ2; X2 contacts are ignored
    std::vector<M> pieces = {M::Z2, M::Z2, M::Z2, M::X2, M::Z1, M::YZ1};
    std::vector<std::pair<int, int>> contacts = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    GeneralizedHandles gh = merge_generalized(pieces, contacts);
    REQUIRE(gh.components.size() == 2);
    bool saw_gz2 = false, saw_gz1 = false;
    for (size_t i = 0; i < gh.models.size(); ++i) {
        if (gh.models[i] == M::GZ2) {
            saw_gz2 = true;
            CHECK(gh.components[i].size() == 3);
        }
        if (gh.models[i] == M::GZ1) {
            saw_gz1 = true;
            CHECK(gh.components[i].size() == 2);  // Z1 and YZ1 share a family
        }
    }
    CHECK(saw_gz2);
    CHECK(saw_gz1);

    // closing a cycle would give a solid torus and must fail loudly
    std::vector<M> ring = {M::Z3, M::Zbar3, M::Z3};
    CHECK_THROWS_WITH_AS(merge_generalized(ring, {{0, 1}, {1, 2}, {2, 0}}),
                         doctest::Contains("solid torus"), std::runtime_error);
}

}  // TEST_SUITE
