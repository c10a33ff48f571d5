#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

namespace kc {

// The nine block boundary types, in fixed coordinate order.
enum BlockType : int {
    TY_I_PLUS = 0,
    TY_I = 1,
    TY_I_MINUS = 2,
    TY_II_PLUS = 3,
    TY_II = 4,
    TY_II_MINUS = 5,
    TY_III = 6,
    TY_TAU1 = 7,
    TY_TAU2 = 8,
};

constexpr int kNumBlockTypes = 9;
extern const char* const kBlockTypeNames[kNumBlockTypes];

// Nonnegative integer vector over the nine block boundary types.
struct BlockVector {
    int x_plus = 0;   // I+
    int x = 0;        // I
    int x_minus = 0;  // I-
    int y_plus = 0;   // II+
    int y = 0;        // II
    int y_minus = 0;  // II-
    int z = 0;        // III
    int t1 = 0;       // tau1
    int t2 = 0;       // tau2

    int& operator[](int i);
    int operator[](int i) const;
    bool operator==(const BlockVector&) const = default;
    BlockVector operator+(const BlockVector& o) const;
    int entry_sum() const;
    bool nonnegative() const;
    std::string to_string() const;  // e.g. "I+:1 II-:2", "0" when zero

    static BlockVector unit(int type);
};

// Counts of boundary intersections with the marked edges of one block.
struct ParamVector {
    int iv_plus = 0;
    int iv_zero = 0;
    int iv_minus = 0;
    int h1_plus = 0;
    int h1_minus = 0;
    int h2 = 0;
    int kappa = 0;

    int& operator[](int i);
    int operator[](int i) const;
    bool operator==(const ParamVector&) const = default;
    ParamVector operator+(const ParamVector& o) const;
    std::string to_string() const;
};

struct DerivedVector {
    int a_plus = 0;
    int a_minus = 0;
    int h_plus = 0;
    int h_minus = 0;
    int eta = 0;    // may be negative
    int sigma = 0;  // may be negative
    bool operator==(const DerivedVector&) const = default;
    std::string to_string() const;
};

// Column tables: parameter and derived-function values of each generator.
extern const int kParamTable[7][kNumBlockTypes];
extern const int kDerivedTable[6][kNumBlockTypes];

ParamVector params(const BlockVector& xi);

// Derived functions computed from the seven parameters. Throws when a
// formula numerator is odd ("non-realizable parameter vector").
DerivedVector derived(const ParamVector& p);

// Derived functions as exact linear forms in the coordinates (always defined).
DerivedVector derived_of(const BlockVector& xi);

// Co-occurrence restriction: besides the universal types I+, I-, II-, the
// support may contain at most one of the six pairs below. The edge list is a
// derived constant regenerated by tools/derive_admissibility from the
// six-case reconstruction analysis and the exhaustive collision search.
constexpr std::array<std::pair<int, int>, 6> kAdmissibleEdges = {{
    {TY_I, TY_II_PLUS},
    {TY_II_PLUS, TY_III},
    {TY_II_PLUS, TY_II},
    {TY_III, TY_TAU1},
    {TY_II, TY_TAU2},
    {TY_TAU1, TY_TAU2},
}};
constexpr std::array<int, 3> kUniversalTypes = {TY_I_PLUS, TY_I_MINUS, TY_II_MINUS};

bool is_universal_type(int type);
bool is_admissible(const BlockVector& xi);

// Inverts params() on admissible vectors via the six-case algorithm; always
// post-verifies params(result) == p. Throws "not realizable" otherwise.
BlockVector reconstruct(const ParamVector& p);

}  // namespace kc
