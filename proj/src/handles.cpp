#include "kc/handles.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kc {

std::string HandleId::to_string() const {
    switch (kind) {
        case HandleKind::ThreeTop: return "H3+";
        case HandleKind::ThreeBottom: return "H3-";
        case HandleKind::Two: return "H2(" + std::to_string(index) + ")";
        case HandleKind::One: return "H1(" + std::to_string(index) + ")";
        case HandleKind::Zero: return "H0(" + std::to_string(index) + ")";
    }
    return "?";
}

DStructure DStructure::build(const Diagram& d) {
    auto rep = d.validate_minimal_adjacency();
    if (!rep.ok())
        throw std::runtime_error("diagram violates the contact condition:\n" + rep.to_string());

    DStructure s;
    s.d_ = d;
    s.faces_ = d.faces();
    for (const auto& f : s.faces_)
        for (const auto& [c, k] : f.corners) s.face_at_corner_[{c, k}] = f.id;

    // side 0 of an edge is the face seen from its tail dart, side 1 from the head
    std::map<HalfEdge, int> face_of_dart;
    for (const auto& f : s.faces_)
        for (const auto& [c, k] : f.corners) face_of_dart[make_he(c, k)] = f.id;
    for (const auto& e : d.edges())
        s.edge_sides_[e.id] = {face_of_dart.at(e.tail), face_of_dart.at(e.head)};
    return s;
}

int DStructure::contact_count(const HandleId& a, const HandleId& b) const {
    auto check = [&](const HandleId& h) {
        switch (h.kind) {
            case HandleKind::ThreeTop:
            case HandleKind::ThreeBottom:
                if (h.index != 0) throw std::runtime_error("unknown handle " + h.to_string());
                break;
            case HandleKind::Two:
                if (h.index < 0 || h.index >= two_handles())
                    throw std::runtime_error("unknown handle " + h.to_string());
                break;
            case HandleKind::One:
                if (h.index < 0 || h.index >= one_handles())
                    throw std::runtime_error("unknown handle " + h.to_string());
                break;
            case HandleKind::Zero:
                if (h.index < 0 || h.index >= zero_handles())
                    throw std::runtime_error("unknown handle " + h.to_string());
                break;
        }
    };
    check(a);
    check(b);
    if (a == b) return 0;

    const HandleId& lo = std::min(a, b);
    const HandleId& hi = std::max(a, b);
    auto is3 = [](const HandleId& h) {
        return h.kind == HandleKind::ThreeTop || h.kind == HandleKind::ThreeBottom;
    };
    if (is3(lo) && is3(hi)) return 0;
    if (is3(lo) || is3(hi)) return 1;  // each lower handle touches both 3-handles
    if (lo.kind == hi.kind) return 0;  // handles of the same index set are disjoint

    if (lo.kind == HandleKind::Two && hi.kind == HandleKind::One) {
        auto [l, r] = edge_sides_.at(hi.index);
        return (l == lo.index || r == lo.index) ? 1 : 0;
    }
    if (lo.kind == HandleKind::Two && hi.kind == HandleKind::Zero) {
        for (int k = 0; k < 4; ++k)
            if (face_at_corner_.at({hi.index, k}) == lo.index) return 1;
        return 0;
    }
    if (lo.kind == HandleKind::One && hi.kind == HandleKind::Zero) {
        const EdgeRec& e = d_.edge(lo.index);
        return (he_crossing(e.tail) == hi.index || he_crossing(e.head) == hi.index) ? 1 : 0;
    }
    return 0;
}

std::vector<HandleId> DStructure::mainbody_walk(int face_id) const {
    if (face_id < 0 || face_id >= two_handles()) throw std::runtime_error("unknown face");
    const Face& f = faces_[face_id];
    if (f.degree() < 2)
        throw std::runtime_error("monogon face excluded by the contact condition");
    std::vector<HandleId> walk;
    for (size_t i = 0; i < f.corners.size(); ++i) {
        walk.push_back(HandleId{HandleKind::Zero, f.corners[i].first});
        walk.push_back(HandleId{HandleKind::One, f.boundary_edges[i]});
    }
    return walk;
}

std::string DStructure::to_dot() const {
    std::ostringstream os;
    os << "graph contacts {\n";
    os << "  h3p [shape=doublecircle,label=\"H3+\"];\n";
    os << "  h3m [shape=doublecircle,label=\"H3-\"];\n";
    for (int f = 0; f < two_handles(); ++f)
        os << "  f" << f << " [shape=box,label=\"H2(" << f << ")\"];\n";
    for (int e = 0; e < one_handles(); ++e)
        os << "  e" << e << " [shape=ellipse,label=\"H1(" << e << ")\"];\n";
    for (int v = 0; v < zero_handles(); ++v)
        os << "  v" << v << " [shape=diamond,label=\"H0(" << v << ")\"];\n";
    for (int f = 0; f < two_handles(); ++f) {
        os << "  h3p -- f" << f << ";\n";
        os << "  h3m -- f" << f << ";\n";
    }
    for (int e = 0; e < one_handles(); ++e) {
        os << "  h3p -- e" << e << ";\n";
        os << "  h3m -- e" << e << ";\n";
        auto [l, r] = edge_sides_.at(e);
        os << "  f" << l << " -- e" << e << ";\n";
        if (r != l) os << "  f" << r << " -- e" << e << ";\n";
        os << "  e" << e << " -- v" << he_crossing(d_.edge(e).tail) << ";\n";
        os << "  e" << e << " -- v" << he_crossing(d_.edge(e).head) << ";\n";
    }
    for (int v = 0; v < zero_handles(); ++v) {
        os << "  h3p -- v" << v << ";\n";
        os << "  h3m -- v" << v << ";\n";
        for (int k = 0; k < 4; ++k) {
            int f = face_at_corner_.at({v, k});
            os << "  f" << f << " -- v" << v << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace kc
