#ifndef BVB_STATESUM_HPP
#define BVB_STATESUM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bvb/bracket.hpp"
#include "bvb/coloring.hpp"
#include "bvb/diagram.hpp"

namespace bvb {

// How one classical crossing is resolved in a state: smoothed with the
// orientation, against it, or replaced by a virtual crossing.
enum class Smoothing : unsigned char { Oriented = 0, Disoriented = 1, Virtual = 2 };

// One entry per classical crossing, in crossing_ids() order. A diagram with
// c crossings has 3^c states, enumerated as a ternary counter with the first
// crossing as the most significant digit.
using State = std::vector<Smoothing>;

std::uint64_t state_count(const GaussDiagram& d);
State decode_state(const GaussDiagram& d, std::uint64_t index);

// Closed curves of the state, counted by merging semiarc classes at each
// crossing: the oriented smoothing joins (under-in, over-out) and
// (over-in, under-out); the disoriented one joins (under-in, over-in) and
// (under-out, over-out); virtualization joins (under-in, under-out) and
// (over-in, over-out). A crossing-free component is one closed curve.
int loop_count(const GaussDiagram& d, const State& s);

// Multiset of ring elements with a canonical order, plus its standard
// rendering with multiplicities as coefficients and elements as exponents.
class InvariantValue {
public:
    InvariantValue() = default;
    void add(RingElement e, int multiplicity = 1);
    int cardinality() const { return total_; }
    const std::map<RingElement, int>& counts() const { return counts_; }
    std::string machine_encoding(const Ring& ring) const;  // "3:2 4:2"
    friend bool operator==(const InvariantValue&, const InvariantValue&) = default;

private:
    std::map<RingElement, int> counts_;
    int total_ = 0;
};

// "2u^3 + 2u^4"; a multiplicity of one drops the coefficient, the exponent
// "1" is printed as a bare "u", and the empty multiset is "0".
std::string format_polynomial(const InvariantValue& value, const Ring& ring);

// Product over crossings of the coefficient chosen by the coloring labels and
// the smoothing, times delta^(closed curves). The global writhe correction
// w^(negative - positive crossings) is applied once, in state_sum.
RingElement state_weight(const VirtualBracket& vb, const GaussDiagram& d, const Coloring& f,
                         const State& s);

// The state sum for one coloring: w^(n-p) * sum of state weights over all
// 3^c states. threads > 1 splits the state index range; ring addition is
// commutative, so the result does not depend on the split.
RingElement state_sum(const VirtualBracket& vb, const GaussDiagram& d, const Coloring& f,
                      int threads = 1);

// The invariant: the multiset of state sums over all colorings. Cardinality
// equals the coloring count.
InvariantValue invariant_multiset(const VirtualBracket& vb, const GaussDiagram& d,
                                  int threads = 1);

}  // namespace bvb

#endif  // BVB_STATESUM_HPP
