#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kc/diagram.hpp"

namespace kc {

// The eight tau-point types 1+..4+, 1-..4-.
struct TauType {
    int base = 1;      // 1..4
    bool plus = true;  // sign
    bool operator==(const TauType&) const = default;
    auto operator<=>(const TauType&) const = default;
    std::string to_string() const;
    static TauType parse(const std::string& s);
    TauType flipped() const { return {base, !plus}; }
};

enum class MoveKind { Zero, OneS, OneD };
const char* move_kind_name(MoveKind k);

enum class Direction { Up, Down };

// Type-level applicability and transition relation, direction "up" as stated
// and "down" by interchanging the signs.
std::vector<MoveKind> applicable_moves(TauType tau, Direction dir);
std::vector<TauType> transition(TauType tau, MoveKind kind, Direction dir);  // throws if inapplicable

// Terminal types of the up direction.
bool is_terminal_up(TauType tau);

// tau-points placed on the skeleton rectangles of a diagram. Rectangle
// `slot` of crossing c faces the edge attached at that slot; a 0-move sends
// a point to the opposite rectangle, a 1-move through the facing edge. The
// down-direction capacity models how far the complexity can still drop when
// the sweep direction is reversed; fresh states have none.
struct TauState {
    const Diagram* diagram = nullptr;
    std::map<std::pair<int, int>, std::map<TauType, int>> points;  // (crossing, slot) -> type counts
    Direction context = Direction::Up;
    int down_capacity = 0;

    int total_points() const;
    void add_point(int crossing, int slot, TauType t, int count = 1);
    bool operator==(const TauState&) const;

    std::string to_string() const;
    static TauState parse(const std::string& text, const Diagram& d);
};

struct MoveOption {
    MoveKind kind;
    TauType successor;
};

// Chooses among the applicable (kind, successor) options for the point at
// (crossing, slot) with the given type. Index into the options vector.
using MovePolicy = std::function<size_t(int crossing, int slot, TauType type,
                                        const std::vector<MoveOption>& options)>;

MovePolicy first_successor_policy();
// Default: prefer an option whose successor is terminal, then 0-moves, then
// the first option.
MovePolicy default_policy();

struct TraceStep {
    int step = 0;
    int crossing = 0;
    int slot = 0;
    MoveKind kind = MoveKind::Zero;
    TauType before, after;
    int to_crossing = 0, to_slot = 0;
    std::string measure;  // counter the move decreased, e.g. "axis@2"
    long measure_value = 0;
    std::string to_string() const;
};

struct NormalizeResult {
    TauState state;
    std::vector<TraceStep> trace;
    // False only when a point cycled through its whole configuration space,
    // which the surface measures exclude; recorded rather than looped on.
    bool fixpoint_reached = true;
};

NormalizeResult normalize(const TauState& state, Direction dir,
                          const MovePolicy& policy = default_policy());

// Standard form: only 1+/2+ points, at most one rectangle per crossing
// occupied, and no down-direction capacity left.
bool is_standard_form(const TauState& state);

}  // namespace kc
