#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kc {

enum class Model : int {
    Z1,
    Z2,
    Z3,
    Zbar3,
    XZ3,
    YZ3,
    YZ1,
    X1,
    X2,
    X3,
    X4,
    XY2,
    Y2,
    X1pY,
    X2pY,
    X3pY,
    Y3p,
    YZ2p,
    Y2pZ,
    X2ppZ,
    O2pp,
    Y3ppZ,
    // generalized 1-handles obtained by pasting Z-pieces
    GZ1,
    GZ2,
    GZ3,
};

constexpr int kNumModels = 22;       // base catalog
constexpr int kNumAllModels = 25;    // with the generalized 1-handles

const char* model_name(Model m);
std::optional<Model> model_from_name(const std::string& s);

struct ModelInfo {
    Model model;
    bool one_handle_like = false;   // Z-family pieces and their generalizations
    int boundary_sheets = 0;        // components of the piece's cut boundary
    int knot_arcs = 0;              // strand subarcs the piece carries
    bool in_final_fifteen = false;  // survives the 1-handle merging
    std::string note;
};

const std::vector<ModelInfo>& model_catalog();  // 22 entries + 3 generalized
const ModelInfo& model_info(Model m);

// Models that count as plain 1-handle material for the per-crossing bound.
bool is_z_like(Model m);

// Mutation table: alternatives a model can turn into while arcs are pushed
// around; empty when the model has no row. nullopt entries mean removal.
std::vector<std::optional<Model>> mutate_model(Model m);

// Per-crossing co-occurrence templates: each row of the table expanded over
// its bracket alternatives.
struct ModelSet {
    int case_tag = 0;
    std::vector<Model> models;  // multiset, kept sorted
    std::string to_string() const;
    bool operator==(const ModelSet&) const = default;
    bool operator<(const ModelSet&) const;
};
const std::vector<ModelSet>& cooccurrence_sets();

// All multisets reachable from the templates by mutations (finite closure).
const std::vector<ModelSet>& cooccurrence_closure();

// Largest forced crossing count of the model's projected arc system:
// boundary-marked disk, one connector arc per boundary sheet plus the fixed
// strand arcs, maximised over admissible endpoint arrangements and minimised
// over isotopy (chords cross at most once; stacked sheets force unlinked
// pairs). All values except X3 and Zbar3 are derived this way.
int max_crossings(Model m);

struct CrossingBudget {
    std::vector<Model> models;
    std::map<Model, int> per_model;
    int inter_model_allowance = 0;
    int total = 0;
    bool z_only = false;
};

// Budget for one crossing region. Throws when the multiset matches no
// template (up to mutations) or a counting cap fails.
CrossingBudget per_crossing_bound(const ModelSet& ms);

struct AggregateBound {
    long total_budget = 0;
    long cap = 0;  // 16 * crossings
    bool within_cap = false;
    bool degenerate = false;            // all budgets zero
    int strictness_witness = -1;        // index of a crossing with budget < 16
    std::string inequality;             // human-readable statement
};

AggregateBound aggregate_bound(const std::vector<CrossingBudget>& budgets, int c_total);

// Merges adjacent Z-family pieces into generalized 1-handles (Z1/YZ1 -> GZ1,
// Z2 -> GZ2, Z3/Zbar3 -> GZ3). Contacts between pieces of different families
// or with non-Z pieces are ignored. Throws when a merge family contains a
// contact cycle, which would close up into a solid torus.
struct GeneralizedHandles {
    std::vector<std::vector<int>> components;  // piece indices per handle
    std::vector<Model> models;                 // GZ1 / GZ2 / GZ3 per handle
};
GeneralizedHandles merge_generalized(const std::vector<Model>& pieces,
                                     const std::vector<std::pair<int, int>>& contacts);

std::string models_table_text();  // catalog, budgets and tables as aligned text

}  // namespace kc
