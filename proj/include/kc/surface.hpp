#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "kc/handles.hpp"
#include "kc/pasting.hpp"

namespace kc {

struct ComplexityTriple {
    long i2 = 0;
    long i1 = 0;
    long i0 = 0;
    bool operator==(const ComplexityTriple&) const = default;
    auto operator<=>(const ComplexityTriple&) const = default;  // dictionary order
    std::string to_string() const;
};

// -1, 0, 1 for less / equal / greater.
int compare_complexity(const ComplexityTriple& a, const ComplexityTriple& b);

// Disks of one 1-handle. Flat disks run from one 2-handle side to the other,
// above or below the strand; curved disks wrap the strand with both feet on
// one side. curved_side[i] counts those bulging toward side i of the edge
// (side 0 left of tail->head).
struct EdgeDisks {
    int flat_above = 0;
    int flat_below = 0;
    std::array<int, 2> curved_side = {0, 0};
    int flats() const { return flat_above + flat_below; }
    int curved() const { return curved_side[0] + curved_side[1]; }
    // horizontal skeleton arcs: one per flat disk, two per curved disk
    int skeleton_arcs() const { return flats() + 2 * curved(); }
};

struct BlockQuadData {
    std::array<BlockVector, 4> blocks;  // indexed by rectangle pairing, see matching
};

// Per-crossing data is either the four block vectors or a pasted
// configuration. Matching is checked block-wise; configurations are inverted
// to blocks when band-free (tags 1-4) and otherwise contribute only their
// axis counts.
using CrossingData = std::variant<BlockQuadData, ZeroHandleConfig>;

struct NormalSurfaceVector {
    std::map<int, int> face_disks;        // face id -> parallel disk count
    std::map<int, EdgeDisks> edge_disks;  // edge id -> disks
    std::map<int, CrossingData> crossing_data;

    std::string serialize() const;
    static NormalSurfaceVector parse(const std::string& text);
};

struct MatchingIssue {
    std::string text;
};

// Verifies the gluing constraints against the handle structure: every block's
// h1 counts equal the skeleton-arc totals of the facing 1-handles, its h2
// count equals the corner face's disk count, all four blocks share the axis
// counts, and every face's disk count matches each incident 1-handle side.
std::vector<MatchingIssue> check_matching(const NormalSurfaceVector& s, const DStructure& ds);

// Throws on matching failure.
ComplexityTriple complexity(const NormalSurfaceVector& s, const DStructure& ds);

// Recovers the four block vectors of a band-free configuration (tags 1-4).
BlockQuadData blocks_from_config(const ZeroHandleConfig& cfg);

}  // namespace kc
