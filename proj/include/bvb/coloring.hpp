#ifndef BVB_COLORING_HPP
#define BVB_COLORING_HPP

#include <utility>
#include <vector>

#include "bvb/biquandle.hpp"
#include "bvb/diagram.hpp"

namespace bvb {

// An assignment of biquandle elements to semiarcs, indexed by semiarc id.
struct Coloring {
    std::vector<int> colors;
    friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Crossing label convention used throughout: a positive crossing is labeled
// by the pair (x, y) = (under-in, over-out) and forces
//     under-out = under(x, y),   over-in = over(y, x);
// a negative crossing is labeled by (x, y) = (under-out, over-in) and forces
//     under-in = under(x, y),    over-out = over(y, x).
// The same pair (x, y) indexes the smoothing coefficients in the state sum.
std::pair<int, int> crossing_labels(const GaussDiagram& d, const Coloring& f, int crossing_id);

// True iff the total assignment satisfies both constraints at every crossing.
bool verify_coloring(const GaussDiagram& d, const Biquandle& bq, const Coloring& f);

// All valid colorings, in a deterministic order: depth-first over semiarcs in
// id order, with forced colors propagated through the crossing relations and
// their inverses before the next free choice.
std::vector<Coloring> enumerate_colorings(const GaussDiagram& d, const Biquandle& bq);

long counting_invariant(const GaussDiagram& d, const Biquandle& bq);

}  // namespace bvb

#endif  // BVB_COLORING_HPP
