#ifndef BVB_RING_HPP
#define BVB_RING_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bvb {

// Element of a finite commutative ring, stored as its canonical index:
// the least nonnegative residue for Z_n, or sum c_i * p^i for a quotient
// ring element with reduced coefficient vector (c_0, ..., c_{d-1}).
// Index order is the canonical element order used for multisets and output.
struct RingElement {
    int v = 0;
    friend constexpr auto operator<=>(const RingElement&, const RingElement&) = default;
};

struct RingSpec {
    enum class Kind { Modular, Quotient };
    Kind kind = Kind::Modular;
    int modulus = 0;                // modular: n >= 2
    int char_p = 0;                 // quotient: prime characteristic of the base field
    std::vector<int> poly_modulus;  // quotient: ascending coefficients, leading one nonzero
    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// Exact arithmetic in Z_n or Z_p[t]/<m(t)>. All operations are pure and the
// object is immutable, so a Ring can be shared freely across threads.
class Ring {
public:
    explicit Ring(RingSpec spec);
    static Ring modular(int n);
    static Ring quotient(int p, std::vector<int> poly_modulus);

    // Description grammar: "Z <n>" or "GF <p> [c0,c1,...,cd]".
    static Ring parse(std::string_view description);
    std::string describe() const;

    const RingSpec& spec() const { return spec_; }
    int size() const { return size_; }
    int degree() const;  // quotient only
    bool is_modular() const { return spec_.kind == RingSpec::Kind::Modular; }

    RingElement zero() const { return {0}; }
    RingElement one() const { return {1}; }
    RingElement element(int index) const;
    bool contains(RingElement e) const { return e.v >= 0 && e.v < size_; }

    RingElement add(RingElement a, RingElement b) const;
    RingElement sub(RingElement a, RingElement b) const;
    RingElement neg(RingElement a) const;
    RingElement mul(RingElement a, RingElement b) const;
    std::optional<RingElement> inverse(RingElement a) const;
    bool is_unit(RingElement a) const { return inverse(a).has_value(); }
    // pow(a, 0) is 1 for every a; a negative exponent requires a unit.
    RingElement pow(RingElement a, long long k) const;

    // Element syntax: decimal integer in [0, n) for modular rings,
    // "[c0,c1,...]" with at most degree() coefficients in [0, p) for
    // quotient rings. parse_element(format_element(e)) == e on all elements.
    RingElement parse_element(std::string_view text) const;
    std::string format_element(RingElement e) const;
    std::string pretty_element(RingElement e) const;  // e.g. "1+t+t^2"

    std::vector<int> coefficients(RingElement e) const;
    RingElement from_coefficients(const std::vector<int>& coeffs) const;

    friend bool operator==(const Ring& a, const Ring& b) { return a.spec_ == b.spec_; }

    // Everything in the tool works with tiny rings; sizes beyond the warning
    // threshold still work but make exhaustive unit scans expensive.
    static constexpr int size_warning_threshold = 1 << 16;
    static constexpr long long max_size = 1 << 26;

private:
    void check(RingElement e) const;
    RingElement add_direct(RingElement a, RingElement b) const;
    RingElement neg_direct(RingElement a) const;
    RingElement mul_direct(RingElement a, RingElement b) const;

    RingSpec spec_;
    int size_ = 0;
    int lead_inv_ = 0;  // inverse mod p of the leading modulus coefficient
    // small quotient rings precompute their operation tables; the digitwise
    // paths stay as the fallback for larger ones
    std::vector<int> add_table_, mul_table_, neg_table_;
};

}  // namespace bvb

#endif  // BVB_RING_HPP
