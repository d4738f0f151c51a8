#include "bvb/ring.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bvb/errors.hpp"

namespace bvb {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::string trimmed(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

int parse_int(const std::string& text, const std::string& what) {
    int value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError("bad " + what + ": '" + text + "'");
    return value;
}

// "[c0,c1,...]" with optional spaces after commas
std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw ParseError("expected " + what + " like [c0,c1,...], got '" + text + "'");
    std::vector<int> out;
    std::stringstream body(text.substr(1, text.size() - 2));
    std::string item;
    while (std::getline(body, item, ','))
        out.push_back(parse_int(trimmed(item), "coefficient of " + what));
    if (out.empty()) throw ParseError("empty " + what + ": '" + text + "'");
    return out;
}

// extended gcd; p prime, a in [1, p)
int mod_inverse(int a, int p) {
    long long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return static_cast<int>(t < 0 ? t + p : t);
}

}  // namespace

Ring::Ring(RingSpec spec) : spec_(std::move(spec)) {
    if (spec_.kind == RingSpec::Kind::Modular) {
        if (spec_.modulus < 2)
            throw std::invalid_argument("modular ring requires modulus >= 2");
        if (spec_.modulus > max_size)
            throw std::invalid_argument("ring size exceeds supported maximum");
        size_ = spec_.modulus;
    } else {
        if (!is_prime(spec_.char_p))
            throw std::invalid_argument("quotient ring requires a prime characteristic");
        const auto& m = spec_.poly_modulus;
        if (m.size() < 2)
            throw std::invalid_argument("quotient modulus must have degree >= 1");
        for (int c : m)
            if (c < 0 || c >= spec_.char_p)
                throw std::invalid_argument("quotient modulus coefficients must lie in [0, p)");
        if (m.back() == 0)
            throw std::invalid_argument("quotient modulus has zero leading coefficient");
        long long sz = 1;
        for (size_t i = 0; i + 1 < m.size(); ++i) {
            sz *= spec_.char_p;
            if (sz > max_size)
                throw std::invalid_argument("ring size exceeds supported maximum");
        }
        size_ = static_cast<int>(sz);
        lead_inv_ = mod_inverse(m.back(), spec_.char_p);
        if (size_ <= 256) {
            add_table_.resize(static_cast<size_t>(size_) * size_);
            mul_table_.resize(static_cast<size_t>(size_) * size_);
            neg_table_.resize(size_);
            for (int a = 0; a < size_; ++a) {
                neg_table_[a] = neg_direct({a}).v;
                for (int b = 0; b < size_; ++b) {
                    add_table_[a * size_ + b] = add_direct({a}, {b}).v;
                    mul_table_[a * size_ + b] = mul_direct({a}, {b}).v;
                }
            }
        }
    }
}

Ring Ring::modular(int n) {
    RingSpec s;
    s.kind = RingSpec::Kind::Modular;
    s.modulus = n;
    return Ring(std::move(s));
}

Ring Ring::quotient(int p, std::vector<int> poly_modulus) {
    RingSpec s;
    s.kind = RingSpec::Kind::Quotient;
    s.char_p = p;
    s.poly_modulus = std::move(poly_modulus);
    return Ring(std::move(s));
}

Ring Ring::parse(std::string_view description) {
    std::istringstream in{std::string(description)};
    std::string kind;
    in >> kind;
    if (kind == "Z") {
        std::string n;
        in >> n;
        if (n.empty()) throw ParseError("ring description 'Z' needs a modulus");
        std::string rest;
        if (in >> rest) throw ParseError("trailing text in ring description");
        return modular(parse_int(n, "modulus"));
    }
    if (kind == "GF") {
        std::string p, poly;
        in >> p >> poly;
        if (p.empty() || poly.empty())
            throw ParseError("ring description 'GF' needs a characteristic and a modulus vector");
        std::string rest;
        if (in >> rest) throw ParseError("trailing text in ring description");
        return quotient(parse_int(p, "characteristic"), parse_int_list(poly, "modulus vector"));
    }
    throw ParseError("unknown ring kind '" + kind + "' (expected Z or GF)");
}

std::string Ring::describe() const {
    if (is_modular()) return "Z " + std::to_string(spec_.modulus);
    std::string out = "GF " + std::to_string(spec_.char_p) + " [";
    for (size_t i = 0; i < spec_.poly_modulus.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec_.poly_modulus[i]);
    }
    return out + "]";
}

int Ring::degree() const {
    if (is_modular()) throw std::logic_error("degree() is defined for quotient rings only");
    return static_cast<int>(spec_.poly_modulus.size()) - 1;
}

RingElement Ring::element(int index) const {
    RingElement e{index};
    check(e);
    return e;
}

void Ring::check(RingElement e) const {
    if (!contains(e))
        throw std::invalid_argument("ring element " + std::to_string(e.v) +
                                    " does not belong to " + describe());
}

std::vector<int> Ring::coefficients(RingElement e) const {
    check(e);
    if (is_modular()) return {e.v};
    std::vector<int> d(static_cast<size_t>(degree()));
    int v = e.v;
    for (auto& c : d) {
        c = v % spec_.char_p;
        v /= spec_.char_p;
    }
    return d;
}

RingElement Ring::from_coefficients(const std::vector<int>& coeffs) const {
    if (is_modular()) {
        if (coeffs.size() != 1)
            throw std::invalid_argument("modular element takes a single coefficient");
        return element(coeffs[0]);
    }
    if (coeffs.empty() || coeffs.size() > static_cast<size_t>(degree()))
        throw std::invalid_argument("coefficient vector has the wrong length");
    int v = 0;
    int scale = 1;
    for (int c : coeffs) {
        if (c < 0 || c >= spec_.char_p)
            throw std::invalid_argument("coefficient out of range");
        v += c * scale;
        scale *= spec_.char_p;
    }
    return {v};
}

RingElement Ring::add(RingElement a, RingElement b) const {
    check(a);
    check(b);
    if (is_modular()) return {(a.v + b.v) % size_};
    if (!add_table_.empty()) return {add_table_[a.v * size_ + b.v]};
    return add_direct(a, b);
}

RingElement Ring::add_direct(RingElement a, RingElement b) const {
    const int p = spec_.char_p;
    int out = 0, scale = 1, av = a.v, bv = b.v;
    for (int i = 0; i < degree(); ++i) {
        out += ((av + bv) % p) * scale;
        av /= p;
        bv /= p;
        scale *= p;
    }
    return {out};
}

RingElement Ring::neg(RingElement a) const {
    check(a);
    if (is_modular()) return {(size_ - a.v) % size_};
    if (!neg_table_.empty()) return {neg_table_[a.v]};
    return neg_direct(a);
}

RingElement Ring::neg_direct(RingElement a) const {
    const int p = spec_.char_p;
    int out = 0, scale = 1, av = a.v;
    for (int i = 0; i < degree(); ++i) {
        out += ((p - av % p) % p) * scale;
        av /= p;
        scale *= p;
    }
    return {out};
}

RingElement Ring::sub(RingElement a, RingElement b) const { return add(a, neg(b)); }

RingElement Ring::mul(RingElement a, RingElement b) const {
    check(a);
    check(b);
    if (is_modular())
        return {static_cast<int>(static_cast<long long>(a.v) * b.v % size_)};
    if (!mul_table_.empty()) return {mul_table_[a.v * size_ + b.v]};
    return mul_direct(a, b);
}

RingElement Ring::mul_direct(RingElement a, RingElement b) const {
    const int p = spec_.char_p;
    const int d = degree();
    const auto& m = spec_.poly_modulus;
    auto da = coefficients(a);
    auto db = coefficients(b);
    std::vector<long long> conv(static_cast<size_t>(2 * d - 1), 0);
    for (int i = 0; i < d; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < d; ++j) conv[i + j] += static_cast<long long>(da[i]) * db[j];
    }
    for (auto& c : conv) c %= p;
    for (int i = 2 * d - 2; i >= d; --i) {
        if (conv[i] == 0) continue;
        long long f = conv[i] * lead_inv_ % p;
        for (int j = 0; j <= d; ++j)
            conv[i - d + j] = ((conv[i - d + j] - f * m[j]) % p + p) % p;
    }
    int out = 0, scale = 1;
    for (int i = 0; i < d; ++i) {
        out += static_cast<int>(conv[i]) * scale;
        scale *= p;
    }
    return {out};
}

std::optional<RingElement> Ring::inverse(RingElement a) const {
    check(a);
    if (is_modular()) {
        // extended gcd; composite moduli have non-unit nonzero elements
        long long g = std::gcd(static_cast<long long>(a.v), static_cast<long long>(size_));
        if (a.v == 0 || g != 1) return std::nullopt;
        return RingElement{mod_inverse(a.v, size_)};
    }
    // the modulus need not be irreducible, so scan instead of assuming a field
    for (int b = 0; b < size_; ++b)
        if (mul(a, {b}) == one()) return RingElement{b};
    return std::nullopt;
}

RingElement Ring::pow(RingElement a, long long k) const {
    check(a);
    RingElement base = a;
    unsigned long long e = 0;
    if (k < 0) {
        auto inv = inverse(a);
        if (!inv)
            throw std::domain_error("negative power of a non-unit in " + describe());
        base = *inv;
        e = static_cast<unsigned long long>(-(k + 1)) + 1;
    } else {
        e = static_cast<unsigned long long>(k);
    }
    RingElement acc = one();
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

RingElement Ring::parse_element(std::string_view text) const {
    std::string t = trimmed(text);
    if (t.empty()) throw ParseError("empty ring element");
    if (is_modular()) {
        int v = parse_int(t, "ring element");
        if (v < 0 || v >= size_)
            throw ParseError("ring element " + t + " out of range for " + describe());
        return {v};
    }
    auto coeffs = parse_int_list(t, "ring element");
    if (coeffs.size() > static_cast<size_t>(degree()))
        throw ParseError("ring element " + t + " has too many coefficients for " + describe());
    for (int c : coeffs)
        if (c < 0 || c >= spec_.char_p)
            throw ParseError("ring element " + t + " has coefficients out of range");
    return from_coefficients(coeffs);
}

std::string Ring::format_element(RingElement e) const {
    check(e);
    if (is_modular()) return std::to_string(e.v);
    auto coeffs = coefficients(e);
    std::string out = "[";
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coeffs[i]);
    }
    return out + "]";
}

std::string Ring::pretty_element(RingElement e) const {
    check(e);
    if (is_modular()) return std::to_string(e.v);
    auto coeffs = coefficients(e);
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(coeffs[i]);
        } else {
            if (coeffs[i] != 1) out += std::to_string(coeffs[i]);
            out += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace bvb
