#ifndef BVB_SYMBOLIC_HPP
#define BVB_SYMBOLIC_HPP

#include <map>
#include <string>
#include <vector>

#include "bvb/bracket.hpp"
#include "bvb/coloring.hpp"
#include "bvb/diagram.hpp"

namespace bvb {

// The state sum left unevaluated: one term per state, each term a product of
// coefficient symbols (letter plus the two crossing labels, carried as opaque
// tokens) and a delta power, with one global w power for the whole sum.

struct SymbolicFactor {
    char letter;  // 'A', 'B', 'V' at positive crossings; 'C', 'D', 'U' at negative ones
    std::string x, y;
    friend bool operator==(const SymbolicFactor&, const SymbolicFactor&) = default;
};

struct SymbolicTerm {
    std::vector<SymbolicFactor> factors;  // one per classical crossing
    int delta_power = 0;
    friend bool operator==(const SymbolicTerm&, const SymbolicTerm&) = default;
};

struct SymbolicExpression {
    std::vector<SymbolicTerm> terms;  // 3^c terms in state order
    int w_power = 0;                  // negative minus positive crossings
    friend bool operator==(const SymbolicExpression&, const SymbolicExpression&) = default;
};

// labels must assign a token to every semiarc.
SymbolicExpression symbolic_expression(const GaussDiagram& d,
                                       const std::vector<std::string>& labels);

// "x0", "x1", ... — one formal generator per semiarc.
std::vector<std::string> generator_labels(const GaussDiagram& d);
// Decimal element indices of a concrete coloring.
std::vector<std::string> coloring_labels(const Coloring& f);

// Substitutes bracket coefficients for the symbols; with labels taken from a
// valid coloring this reproduces state_sum exactly.
RingElement evaluate_symbolic(const SymbolicExpression& expr, const VirtualBracket& vb,
                              const std::map<std::string, int>& assignment);

// Display form grouped by delta power, highest first.
std::string format_symbolic(const SymbolicExpression& expr);

}  // namespace bvb

#endif  // BVB_SYMBOLIC_HPP
