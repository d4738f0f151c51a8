#include "bvb/bracket.hpp"

#include <algorithm>

namespace bvb {

namespace {

void check_table_shape(const Ring& ring, int n, const std::vector<RingElement>& t,
                       const char* name) {
    if (static_cast<int>(t.size()) != n * n)
        throw std::invalid_argument(std::string("table ") + name + " must be n x n");
    for (RingElement e : t)
        if (!ring.contains(e))
            throw std::invalid_argument(std::string("table ") + name +
                                        " has an element outside " + ring.describe());
}

// One product term of a slide equation: an optional delta factor and three
// coefficient letters, one per index slot. Left slots are (x,y), (x^y, z_y),
// (y,z); right slots are (y_x, z_x), (x,z), (x^z, y^z), where ^ is the under
// operation and _ the over operation.
struct SlideTerm {
    bool with_delta;
    char l1, l2, l3;
};

struct SlideEquation {
    const char* tag;
    std::vector<SlideTerm> lhs, rhs;
};

const std::vector<SlideEquation>& slide_equations() {
    static const std::vector<SlideEquation> eqs = {
        {"slide.1", {{0, 'A', 'A', 'A'}, {0, 'V', 'A', 'V'}}, {{0, 'A', 'A', 'A'}, {0, 'V', 'A', 'V'}}},
        {"slide.2",
         {{0, 'A', 'A', 'B'}, {0, 'B', 'A', 'A'}, {1, 'B', 'A', 'B'}, {0, 'B', 'A', 'V'},
          {0, 'B', 'B', 'B'}, {0, 'B', 'V', 'B'}, {0, 'V', 'A', 'B'}},
         {{0, 'A', 'B', 'A'}}},
        {"slide.3",
         {{0, 'A', 'B', 'A'}},
         {{0, 'A', 'A', 'B'}, {0, 'B', 'A', 'A'}, {1, 'B', 'A', 'B'}, {0, 'B', 'A', 'V'},
          {0, 'B', 'B', 'B'}, {0, 'B', 'V', 'B'}, {0, 'V', 'A', 'B'}}},
        {"slide.4", {{0, 'A', 'V', 'A'}}, {{0, 'A', 'A', 'V'}, {0, 'V', 'A', 'A'}}},
        {"slide.5", {{0, 'A', 'A', 'V'}, {0, 'V', 'A', 'A'}}, {{0, 'A', 'V', 'A'}}},
        {"slide.6", {{0, 'B', 'B', 'A'}, {0, 'B', 'V', 'V'}}, {{0, 'A', 'B', 'B'}, {0, 'V', 'V', 'B'}}},
        {"slide.7", {{0, 'A', 'B', 'B'}, {0, 'V', 'V', 'B'}}, {{0, 'B', 'B', 'A'}, {0, 'B', 'V', 'V'}}},
        {"slide.8", {{0, 'B', 'B', 'V'}, {0, 'B', 'V', 'A'}}, {{0, 'A', 'B', 'V'}}},
        {"slide.9", {{0, 'A', 'B', 'V'}}, {{0, 'B', 'B', 'V'}, {0, 'B', 'V', 'A'}}},
        {"slide.10", {{0, 'V', 'B', 'A'}}, {{0, 'A', 'V', 'B'}, {0, 'V', 'B', 'B'}}},
        {"slide.11", {{0, 'A', 'V', 'B'}, {0, 'V', 'B', 'B'}}, {{0, 'V', 'B', 'A'}}},
        {"slide.12", {{0, 'V', 'V', 'A'}}, {{0, 'A', 'V', 'V'}}},
        {"slide.13", {{0, 'A', 'V', 'V'}}, {{0, 'V', 'V', 'A'}}},
        {"slide.14", {{0, 'V', 'B', 'V'}}, {{0, 'V', 'B', 'V'}}},
        {"slide.15", {{0, 'V', 'V', 'V'}}, {{0, 'V', 'V', 'V'}}},
    };
    return eqs;
}

bool poke_equations_hold(const Ring& ring, RingElement a, RingElement b, RingElement v,
                         RingElement delta, RingElement c, RingElement d, RingElement u) {
    const RingElement one = ring.one();
    const RingElement zero = ring.zero();
    if (ring.add(ring.mul(a, c), ring.mul(v, u)) != one) return false;
    if (ring.add(ring.mul(b, d), ring.mul(v, u)) != one) return false;
    if (ring.add(ring.mul(a, u), ring.mul(v, c)) != zero) return false;
    if (ring.add(ring.mul(b, u), ring.mul(v, d)) != zero) return false;
    const RingElement ad_bc = ring.add(ring.mul(a, d), ring.mul(b, c));
    if (ring.add(ring.mul(delta, ring.mul(b, d)), ad_bc) != zero) return false;
    if (ring.add(ring.mul(delta, ring.mul(a, c)), ad_bc) != zero) return false;
    return true;
}

std::string violation_summary(const std::vector<BracketViolation>& v) {
    std::string msg = "bracket axioms fail (" + std::to_string(v.size()) + " violations";
    if (!v.empty()) msg += "; first: " + v.front().axiom + " " + v.front().detail;
    return msg + ")";
}

}  // namespace

BracketAxiomError::BracketAxiomError(const std::string& msg,
                                     std::vector<BracketViolation> violations)
    : std::runtime_error(msg), violations_(std::move(violations)) {}

std::optional<RingElement> derive_writhe_unit(const Ring& ring, int n,
                                              const std::vector<RingElement>& a,
                                              const std::vector<RingElement>& b,
                                              const std::vector<RingElement>& v,
                                              RingElement delta, std::string* why) {
    RingElement w = ring.zero();
    for (int x = 0; x < n; ++x) {
        const int i = x * n + x;
        const RingElement value = ring.add(ring.mul(delta, a[i]), ring.add(b[i], v[i]));
        if (x == 0) {
            w = value;
        } else if (value != w) {
            if (why)
                *why = "kink values disagree on the diagonal: " + ring.format_element(w) +
                       " at x=0 vs " + ring.format_element(value) + " at x=" + std::to_string(x);
            return std::nullopt;
        }
    }
    if (!ring.is_unit(w)) {
        if (why) *why = "kink value " + ring.format_element(w) + " is not a unit";
        return std::nullopt;
    }
    return w;
}

bool solve_negative_pair(const Ring& ring, RingElement a, RingElement b, RingElement v,
                         RingElement delta, RingElement& c, RingElement& d, RingElement& u) {
    const auto inv_a = ring.inverse(ring.sub(ring.mul(a, a), ring.mul(v, v)));
    const auto inv_b = ring.inverse(ring.sub(ring.mul(b, b), ring.mul(v, v)));
    if (inv_a && inv_b) {
        c = ring.mul(a, *inv_a);
        u = ring.neg(ring.mul(v, *inv_a));
        d = ring.mul(b, *inv_b);
        if (ring.neg(ring.mul(v, *inv_b)) != u) return false;
        return poke_equations_hold(ring, a, b, v, delta, c, d, u);
    }
    // singular determinant: scan the whole cube for a solution
    for (int ci = 0; ci < ring.size(); ++ci)
        for (int di = 0; di < ring.size(); ++di)
            for (int ui = 0; ui < ring.size(); ++ui)
                if (poke_equations_hold(ring, a, b, v, delta, {ci}, {di}, {ui})) {
                    c = {ci};
                    d = {di};
                    u = {ui};
                    return true;
                }
    return false;
}

std::optional<NegativeTables> solve_negative_tables(const Ring& ring, int n,
                                                    const std::vector<RingElement>& a,
                                                    const std::vector<RingElement>& b,
                                                    const std::vector<RingElement>& v,
                                                    RingElement delta, std::string* why) {
    NegativeTables out;
    out.c.resize(a.size());
    out.d.resize(a.size());
    out.u.resize(a.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int i = x * n + y;
            if (!solve_negative_pair(ring, a[i], b[i], v[i], delta, out.c[i], out.d[i],
                                     out.u[i])) {
                if (why)
                    *why = "pair (" + std::to_string(x) + "," + std::to_string(y) +
                           "): no negative-crossing coefficients solve the poke equations";
                return std::nullopt;
            }
        }
    return out;
}

std::vector<BracketViolation> verify_bracket_tables(
    const Biquandle& bq, const Ring& ring, const std::vector<RingElement>& a,
    const std::vector<RingElement>& b, const std::vector<RingElement>& v,
    const std::vector<RingElement>& c, const std::vector<RingElement>& d,
    const std::vector<RingElement>& u, RingElement delta, RingElement w) {
    const int n = bq.size();
    check_table_shape(ring, n, a, "A");
    check_table_shape(ring, n, b, "B");
    check_table_shape(ring, n, v, "V");
    check_table_shape(ring, n, c, "C");
    check_table_shape(ring, n, d, "D");
    check_table_shape(ring, n, u, "U");
    if (!ring.contains(delta) || !ring.contains(w))
        throw std::invalid_argument("delta and w must belong to the coefficient ring");

    std::vector<BracketViolation> out;
    const auto w_inv = ring.inverse(w);
    if (!w_inv) {
        out.push_back({"unit.w", -1, -1, -1, ring.format_element(w) + " is not a unit"});
        return out;
    }

    auto fmt = [&ring](RingElement e) { return ring.format_element(e); };

    for (int x = 0; x < n; ++x) {
        const int i = x * n + x;
        const RingElement pos = ring.add(ring.mul(delta, a[i]), ring.add(b[i], v[i]));
        if (pos != w)
            out.push_back({"kink.pos", x, -1, -1, fmt(pos) + " != w = " + fmt(w)});
        const RingElement neg = ring.add(ring.mul(delta, c[i]), ring.add(d[i], u[i]));
        if (neg != *w_inv)
            out.push_back({"kink.neg", x, -1, -1, fmt(neg) + " != w^-1 = " + fmt(*w_inv)});
    }

    const RingElement one = ring.one();
    const RingElement zero = ring.zero();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int i = x * n + y;
            const RingElement vu = ring.mul(v[i], u[i]);
            const RingElement ad_bc = ring.add(ring.mul(a[i], d[i]), ring.mul(b[i], c[i]));
            struct {
                const char* tag;
                RingElement value;
                RingElement want;
            } eqs[] = {
                {"poke.1", ring.add(ring.mul(a[i], c[i]), vu), one},
                {"poke.2", ring.add(ring.mul(b[i], d[i]), vu), one},
                {"poke.3", ring.add(ring.mul(a[i], u[i]), ring.mul(v[i], c[i])), zero},
                {"poke.4", ring.add(ring.mul(b[i], u[i]), ring.mul(v[i], d[i])), zero},
                {"poke.5", ring.add(ring.mul(delta, ring.mul(b[i], d[i])), ad_bc), zero},
                {"poke.6", ring.add(ring.mul(delta, ring.mul(a[i], c[i])), ad_bc), zero},
            };
            for (const auto& eq : eqs)
                if (eq.value != eq.want)
                    out.push_back({eq.tag, x, y, -1, fmt(eq.value) + " != " + fmt(eq.want)});
        }

    auto letter_table = [&](char letter) -> const std::vector<RingElement>& {
        return letter == 'A' ? a : (letter == 'B' ? b : v);
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const int l1 = x * n + y;
                const int l2 = bq.under(x, y) * n + bq.over(z, y);
                const int l3 = y * n + z;
                const int r1 = bq.over(y, x) * n + bq.over(z, x);
                const int r2 = x * n + z;
                const int r3 = bq.under(x, z) * n + bq.under(y, z);
                auto side = [&](const std::vector<SlideTerm>& terms, int s1, int s2, int s3) {
                    RingElement acc = ring.zero();
                    for (const auto& t : terms) {
                        RingElement prod = ring.mul(letter_table(t.l1)[s1],
                                                    ring.mul(letter_table(t.l2)[s2],
                                                             letter_table(t.l3)[s3]));
                        if (t.with_delta) prod = ring.mul(delta, prod);
                        acc = ring.add(acc, prod);
                    }
                    return acc;
                };
                for (const auto& eq : slide_equations()) {
                    const RingElement lhs = side(eq.lhs, l1, l2, l3);
                    const RingElement rhs = side(eq.rhs, r1, r2, r3);
                    if (lhs != rhs)
                        out.push_back({eq.tag, x, y, z, fmt(lhs) + " != " + fmt(rhs)});
                }
            }
    return out;
}

VirtualBracket::VirtualBracket(Biquandle bq, Ring ring,
                               std::array<std::vector<RingElement>, 6> tables,
                               RingElement delta, RingElement w)
    : bq_(std::move(bq)), ring_(std::move(ring)), tables_(std::move(tables)), delta_(delta),
      w_(w) {}

VirtualBracket VirtualBracket::create(Biquandle bq, Ring ring, std::vector<RingElement> a,
                                      std::vector<RingElement> b, std::vector<RingElement> v,
                                      std::vector<RingElement> c, std::vector<RingElement> d,
                                      std::vector<RingElement> u, RingElement delta,
                                      std::optional<RingElement> w) {
    const int n = bq.size();
    check_table_shape(ring, n, a, "A");
    check_table_shape(ring, n, b, "B");
    check_table_shape(ring, n, v, "V");
    std::string why;
    const auto derived = derive_writhe_unit(ring, n, a, b, v, delta, &why);
    if (!derived)
        throw BracketAxiomError("cannot derive w: " + why, {{"kink.pos", -1, -1, -1, why}});
    if (w && *w != *derived)
        throw BracketAxiomError(
            "stored w = " + ring.format_element(*w) + " disagrees with derived w = " +
                ring.format_element(*derived),
            {{"kink.pos", -1, -1, -1, "stored and derived w differ"}});

    auto violations = verify_bracket_tables(bq, ring, a, b, v, c, d, u, delta, *derived);
    if (!violations.empty())
        throw BracketAxiomError(violation_summary(violations), std::move(violations));
    return VirtualBracket(std::move(bq), std::move(ring),
                          {std::move(a), std::move(b), std::move(v), std::move(c), std::move(d),
                           std::move(u)},
                          delta, *derived);
}

VirtualBracket VirtualBracket::derive(Biquandle bq, Ring ring, std::vector<RingElement> a,
                                      std::vector<RingElement> b, std::vector<RingElement> v,
                                      RingElement delta) {
    const int n = bq.size();
    check_table_shape(ring, n, a, "A");
    check_table_shape(ring, n, b, "B");
    check_table_shape(ring, n, v, "V");
    std::string why;
    auto neg = solve_negative_tables(ring, n, a, b, v, delta, &why);
    if (!neg)
        throw BracketAxiomError("cannot solve negative-crossing tables: " + why,
                                {{"poke.1", -1, -1, -1, why}});
    return create(std::move(bq), std::move(ring), std::move(a), std::move(b), std::move(v),
                  std::move(neg->c), std::move(neg->d), std::move(neg->u), delta);
}

std::vector<BracketViolation> VirtualBracket::verify() const {
    return verify_bracket_tables(bq_, ring_, table(CoeffTable::A), table(CoeffTable::B),
                                 table(CoeffTable::V), table(CoeffTable::C),
                                 table(CoeffTable::D), table(CoeffTable::U), delta_, w_);
}

bool VirtualBracket::is_classical() const {
    const RingElement zero = ring_.zero();
    return std::ranges::all_of(table(CoeffTable::V), [&](RingElement e) { return e == zero; }) &&
           std::ranges::all_of(table(CoeffTable::U), [&](RingElement e) { return e == zero; });
}

bool VirtualBracket::is_cocycle_type() const {
    const RingElement zero = ring_.zero();
    for (CoeffTable t : {CoeffTable::A, CoeffTable::B, CoeffTable::C, CoeffTable::D})
        if (!std::ranges::all_of(table(t), [&](RingElement e) { return e == zero; }))
            return false;
    if (w_ != ring_.one() || delta_ != ring_.one()) return false;
    const auto& v = table(CoeffTable::V);
    const auto& u = table(CoeffTable::U);
    for (size_t i = 0; i < v.size(); ++i) {
        const auto inv = ring_.inverse(v[i]);
        if (!inv || *inv != u[i]) return false;
    }
    return true;
}

bool operator==(const VirtualBracket& a, const VirtualBracket& b) {
    return a.bq_ == b.bq_ && a.ring_ == b.ring_ && a.tables_ == b.tables_ &&
           a.delta_ == b.delta_ && a.w_ == b.w_;
}

}  // namespace bvb
