#pragma once

#include <map>
#include <string>
#include <vector>

#include "kc/diagram.hpp"

namespace kc {

enum class HandleKind { ThreeTop, ThreeBottom, Two, One, Zero };

struct HandleId {
    HandleKind kind;
    int index = 0;  // face / edge / crossing id; 0 for the 3-handles
    bool operator==(const HandleId&) const = default;
    auto operator<=>(const HandleId&) const = default;
    std::string to_string() const;
};

// The handle decomposition induced by a diagram: one 0-handle per crossing,
// one 1-handle per edge, one 2-handle per face, and two 3-handles. Contacts
// are 0/1 because the diagram passed the minimal-adjacency gate.
class DStructure {
public:
    static DStructure build(const Diagram& d);

    const Diagram& diagram() const { return d_; }
    const std::vector<Face>& faces() const { return faces_; }

    int three_handles() const { return 2; }
    int two_handles() const { return static_cast<int>(faces_.size()); }
    int one_handles() const { return d_.edge_count(); }
    int zero_handles() const { return d_.crossings(); }

    int contact_count(const HandleId& a, const HandleId& b) const;

    // Alternating H1/H0 cycle of length 2*deg(f) around a 2-handle.
    std::vector<HandleId> mainbody_walk(int face_id) const;

    // Face at corner k of crossing c (region between slots k and k+1).
    int face_at_corner(int c, int k) const { return face_at_corner_.at({c, k}); }
    // The two faces flanking an edge: side 0 left of tail->head, side 1 right.
    std::pair<int, int> edge_sides(int edge_id) const { return edge_sides_.at(edge_id); }

    // Which of the four skeleton rectangle fragments each 0-handle carries:
    // every crossing carries all four, tagged upper/lower per slot.
    bool rectangle_is_upper(int c, int slot) const { return d_.slot_on_over_strand(c, slot); }

    std::string to_dot() const;

private:
    Diagram d_;
    std::vector<Face> faces_;
    std::map<std::pair<int, int>, int> face_at_corner_;
    std::map<int, std::pair<int, int>> edge_sides_;
};

}  // namespace kc
