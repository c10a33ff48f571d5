#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kc {

// Half-edges are encoded as 4*crossing + slot. Slot 0 carries the incoming
// under-strand; slots 0..3 run counterclockwise around the crossing.
using HalfEdge = int;

inline int he_crossing(HalfEdge h) { return h >> 2; }
inline int he_slot(HalfEdge h) { return h & 3; }
inline HalfEdge make_he(int c, int s) { return 4 * c + s; }
inline int opposite_slot(int s) { return s ^ 2; }

struct EdgeRec {
    int id = -1;
    HalfEdge tail = -1;  // strand leaves a crossing through this half-edge
    HalfEdge head = -1;  // strand enters a crossing through this half-edge
};

struct Face {
    int id = -1;
    // (crossing, corner) pairs in boundary order; corner k is the region
    // between slots k and k+1 of the crossing.
    std::vector<std::pair<int, int>> corners;
    // edge ids along the walk; boundary_edges[i] follows corners[i]
    std::vector<int> boundary_edges;
    int degree() const { return static_cast<int>(corners.size()); }
};

struct ValidationIssue {
    enum Kind {
        FaceMeetsCrossingTwice,
        FaceMeetsEdgeTwice,
        EdgeMeetsCrossingTwice,
    };
    Kind kind;
    int face = -1;
    int crossing = -1;
    int edge = -1;
    std::string text;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string to_string() const;
};

struct DiagramFingerprint {
    int crossings = 0;
    int faces = 0;
    std::vector<int> face_degrees;  // sorted
    bool operator==(const DiagramFingerprint&) const = default;
};

// A connected one-component knot diagram: a 4-valent planar map with a
// rotation system, an over/under mark per crossing, and oriented edges.
// The 0-crossing unknot is a dedicated sentinel (PD codes cannot express it).
class Diagram {
public:
    Diagram() = default;

    static Diagram unknot();
    static Diagram from_pd(const std::string& text);
    static Diagram from_gauss(const std::string& text);
    // Raw constructor used by generators: mate[] pairing plus the slot parity
    // of the over strand per crossing. Orientation and labels are derived.
    static Diagram from_map(int crossings, const std::vector<HalfEdge>& mate,
                            const std::vector<int>& over_parity);

    int crossings() const { return n_; }
    int edge_count() const { return 2 * n_; }
    bool is_unknot() const { return n_ == 0; }

    HalfEdge mate(HalfEdge h) const { return mate_[h]; }
    int edge_at(HalfEdge h) const { return edge_at_[h]; }
    const EdgeRec& edge(int id) const { return edges_[id]; }
    const std::vector<EdgeRec>& edges() const { return edges_; }

    // The over strand occupies slots {p, p+2} where p = over_parity(c).
    int over_parity(int c) const { return over_parity_[c]; }
    bool slot_on_over_strand(int c, int s) const { return (s & 1) == over_parity_[c]; }
    bool outgoing(HalfEdge h) const { return outgoing_[h] != 0; }

    std::vector<Face> faces() const;
    int face_count() const { return n_ == 0 ? 2 : n_ + 2; }

    ValidationReport validate_minimal_adjacency() const;

    std::string to_pd() const;
    DiagramFingerprint fingerprint() const;

    // Copy with one crossing's over/under mark flipped. The planar map is
    // unchanged; used to build non-alternating test inputs.
    Diagram with_flipped_crossing(int c) const;

    // Oriented connected sum. Splice sites default to the lowest-labeled edge
    // on a face of maximal degree in each input.
    static Diagram connected_sum(const Diagram& a, const Diagram& b,
                                 std::optional<std::pair<int, int>> sites = std::nullopt);

    // Default splice site per the rule above.
    int default_sum_edge() const;

private:
    int n_ = 0;
    std::vector<HalfEdge> mate_;    // size 4n
    std::vector<int> edge_at_;      // size 4n
    std::vector<EdgeRec> edges_;    // size 2n
    std::vector<int> over_parity_;  // size n, value 0 or 1
    std::vector<char> outgoing_;    // size 4n

    // Orients the strand, assigns canonical edge labels 0..2n-1 in walk
    // order from half-edge (0,0), and checks planarity. over_parity_ and
    // mate_ must be filled in.
    void finish_build(const char* planarity_error);
};

}  // namespace kc
