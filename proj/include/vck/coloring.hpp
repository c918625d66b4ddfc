#pragma once

#include <vector>

#include "vck/algebra.hpp"
#include "vck/diagram.hpp"

namespace vck {

// Colors of all semi-arcs: colors[comp][pos] is the color of the arc
// ENTERING passage pos (a crossing-free component has a single slot).
struct Coloring {
    std::vector<std::vector<Color>> colors;

    bool operator==(const Coloring& o) const { return colors == o.colors; }
    bool operator<(const Coloring& o) const { return colors < o.colors; }
};

// Per-pair crossing maps with the inverse of S precomputed for negative
// crossings.
class CrossingRules {
public:
    CrossingRules(const VirtualPair& vp);

    const VirtualPair& vp() const { return *vp_; }
    int n() const { return vp_->n(); }

    // outgoing colors (left_out, right_out) of a crossing given incoming
    // (left, right): positive S, negative S^-1, virtual beta; the left
    // strand continues as the map's second output.
    std::pair<Color, Color> through(const CrossingInfo& info, Color left, Color right) const;

    // S^-1 lookup: s_inv(u,v) = (x,y) with S(x,y) = (u,v)
    std::pair<Color, Color> s_inv(Color u, Color v) const;

private:
    const VirtualPair* vp_;
    std::vector<std::pair<Color, Color>> sinv_;
};

// All colorings of a validated diagram, in lexicographic order of the
// flattened color vector. DFS over arcs with constraint propagation at
// crossings whose two incoming colors are known.
std::vector<Coloring> colorings(const LinkDiagram& d, const VirtualPair& vp);

long long count_colorings(const LinkDiagram& d, const VirtualPair& vp);

// True if the coloring satisfies every crossing constraint (full re-check).
bool coloring_valid(const LinkDiagram& d, const VirtualPair& vp, const Coloring& c);

}  // namespace vck
