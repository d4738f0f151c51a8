#ifndef BVB_BRACKET_HPP
#define BVB_BRACKET_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bvb/biquandle.hpp"
#include "bvb/ring.hpp"

namespace bvb {

// One failed bracket axiom instance. Axiom tags name the Reidemeister move
// family the equation comes from:
//   "unit.w"              w must be invertible
//   "kink.pos", "kink.neg"   the two curl equations (per element x)
//   "poke.1".."poke.6"       the slide-two-strands equations (per pair x,y)
//   "slide.1".."slide.15"    the triple-strand equations (per triple x,y,z)
struct BracketViolation {
    std::string axiom;
    int x = -1, y = -1, z = -1;
    std::string detail;
};

class BracketAxiomError : public std::runtime_error {
public:
    BracketAxiomError(const std::string& msg, std::vector<BracketViolation> violations);
    const std::vector<BracketViolation>& violations() const { return violations_; }

private:
    std::vector<BracketViolation> violations_;
};

enum class CoeffTable : unsigned char { A, B, V, C, D, U };

// Coefficient tables for positive crossings (A, B, V: smoothing with the
// orientation, against it, or made virtual) and negative crossings (C, D, U),
// with the closed-curve value delta and the writhe correction unit w.
//
// Every instance is verified on construction; all data is immutable.
class VirtualBracket {
public:
    // Tables are n*n row-major over the biquandle index order. When w is
    // absent it is derived from the positive kink equation; when present it
    // must match the derived value.
    static VirtualBracket create(Biquandle bq, Ring ring,
                                 std::vector<RingElement> a, std::vector<RingElement> b,
                                 std::vector<RingElement> v, std::vector<RingElement> c,
                                 std::vector<RingElement> d, std::vector<RingElement> u,
                                 RingElement delta,
                                 std::optional<RingElement> w = std::nullopt);
    // Solves the negative-crossing tables from A, B, V and delta.
    static VirtualBracket derive(Biquandle bq, Ring ring,
                                 std::vector<RingElement> a, std::vector<RingElement> b,
                                 std::vector<RingElement> v, RingElement delta);

    const Biquandle& biquandle() const { return bq_; }
    const Ring& ring() const { return ring_; }
    int n() const { return bq_.size(); }
    RingElement coeff(CoeffTable t, int x, int y) const {
        return tables_[static_cast<int>(t)][x * n() + y];
    }
    const std::vector<RingElement>& table(CoeffTable t) const {
        return tables_[static_cast<int>(t)];
    }
    RingElement delta() const { return delta_; }
    RingElement w() const { return w_; }

    std::vector<BracketViolation> verify() const;
    bool is_classical() const;     // V and U vanish everywhere
    bool is_cocycle_type() const;  // A,B,C,D vanish, w = delta = 1, U = V^-1

    // Bracket file text. biquandle_ref names an external table file; when
    // empty the biquandle is embedded inline.
    std::string format(const std::string& biquandle_ref = "") const;

    friend bool operator==(const VirtualBracket&, const VirtualBracket&);

private:
    VirtualBracket(Biquandle bq, Ring ring, std::array<std::vector<RingElement>, 6> tables,
                   RingElement delta, RingElement w);
    Biquandle bq_;
    Ring ring_;
    std::array<std::vector<RingElement>, 6> tables_;  // A, B, V, C, D, U
    RingElement delta_;
    RingElement w_;
};

// Axiom check over raw tables; shape and range problems throw invalid_argument,
// axiom failures are returned.
std::vector<BracketViolation> verify_bracket_tables(
    const Biquandle& bq, const Ring& ring, const std::vector<RingElement>& a,
    const std::vector<RingElement>& b, const std::vector<RingElement>& v,
    const std::vector<RingElement>& c, const std::vector<RingElement>& d,
    const std::vector<RingElement>& u, RingElement delta, RingElement w);

// The positive kink equation evaluated on the diagonal: returns the common
// value of delta*A(x,x) + B(x,x) + V(x,x) if it is independent of x and a
// unit, otherwise nullopt with the reason in *why.
std::optional<RingElement> derive_writhe_unit(const Ring& ring, int n,
                                              const std::vector<RingElement>& a,
                                              const std::vector<RingElement>& b,
                                              const std::vector<RingElement>& v,
                                              RingElement delta, std::string* why = nullptr);

// Solves the six per-pair poke equations for (c, d, u) given (a, b, v, delta).
// Unique when a^2 - v^2 and b^2 - v^2 are units (a necessary condition for
// solvability); a full scan of R^3 backs the singular case.
bool solve_negative_pair(const Ring& ring, RingElement a, RingElement b, RingElement v,
                         RingElement delta, RingElement& c, RingElement& d, RingElement& u);

struct NegativeTables {
    std::vector<RingElement> c, d, u;
};
std::optional<NegativeTables> solve_negative_tables(const Ring& ring, int n,
                                                    const std::vector<RingElement>& a,
                                                    const std::vector<RingElement>& b,
                                                    const std::vector<RingElement>& v,
                                                    RingElement delta,
                                                    std::string* why = nullptr);

// --- bracket files -------------------------------------------------------
//
//   ring <description>
//   biquandle <path> | biquandle inline   (inline: table body on next lines)
//   delta <element>
//   w <element>            (optional; derived when absent)
//   A: / B: / V:           (each n lines of n element tokens)
//   C: / D: / U:           (optional as a group; solved when absent)

struct BracketFileData {
    Ring ring;
    std::optional<Biquandle> biquandle;
    std::string biquandle_ref;  // as written in the file, empty for inline
    std::optional<std::vector<RingElement>> a, b, v, c, d, u;
    std::optional<RingElement> delta, w;
};

BracketFileData parse_bracket_file(std::string_view text, const std::string& base_dir = "");
VirtualBracket assemble_bracket(const BracketFileData& data);
VirtualBracket load_bracket(const std::string& path);

}  // namespace bvb

#endif  // BVB_BRACKET_HPP
