#include "bvb/statesum.hpp"

#include <array>
#include <stdexcept>
#include <thread>
#include <utility>

#include "bvb/union_find.hpp"

namespace bvb {

namespace {

using MergePairs = std::array<std::pair<int, int>, 2>;

MergePairs merge_pairs(const CrossingEnds& e, Smoothing s) {
    switch (s) {
        case Smoothing::Oriented:
            return {{{e.u_in, e.o_out}, {e.o_in, e.u_out}}};
        case Smoothing::Disoriented:
            return {{{e.u_in, e.o_in}, {e.u_out, e.o_out}}};
        default:
            return {{{e.u_in, e.u_out}, {e.o_in, e.o_out}}};
    }
}

// Per-crossing data for one coloring: the coefficient and the semiarc merges
// for each of the three smoothings.
struct CrossingPlan {
    std::array<RingElement, 3> coeff;
    std::array<MergePairs, 3> merges;
};

std::vector<CrossingPlan> make_plans(const VirtualBracket& vb, const GaussDiagram& d,
                                     const Coloring& f) {
    if (static_cast<int>(f.colors.size()) != d.semiarc_count())
        throw std::invalid_argument("coloring must assign every semiarc");
    for (int c : f.colors)
        if (c < 0 || c >= vb.n())
            throw std::invalid_argument("coloring does not fit the bracket's biquandle");
    std::vector<CrossingPlan> plans;
    plans.reserve(d.crossing_ids().size());
    for (int id : d.crossing_ids()) {
        const CrossingEnds& e = d.ends(id);
        const auto [x, y] = crossing_labels(d, f, id);
        CrossingPlan plan;
        if (d.crossing_sign(id) > 0)
            plan.coeff = {vb.coeff(CoeffTable::A, x, y), vb.coeff(CoeffTable::B, x, y),
                          vb.coeff(CoeffTable::V, x, y)};
        else
            plan.coeff = {vb.coeff(CoeffTable::C, x, y), vb.coeff(CoeffTable::D, x, y),
                          vb.coeff(CoeffTable::U, x, y)};
        for (int s = 0; s < 3; ++s)
            plan.merges[s] = merge_pairs(e, static_cast<Smoothing>(s));
        plans.push_back(plan);
    }
    return plans;
}

std::vector<RingElement> delta_powers(const Ring& ring, RingElement delta, int up_to) {
    std::vector<RingElement> powers(static_cast<size_t>(up_to) + 1);
    powers[0] = ring.one();
    for (int k = 1; k <= up_to; ++k) powers[k] = ring.mul(powers[k - 1], delta);
    return powers;
}

RingElement sum_state_range(const Ring& ring, const std::vector<CrossingPlan>& plans,
                            int semiarcs, const std::vector<RingElement>& delta_pow,
                            std::uint64_t lo, std::uint64_t hi) {
    const int c = static_cast<int>(plans.size());
    std::vector<int> digits(c, 0);
    std::uint64_t rest = lo;
    for (int i = c; i-- > 0;) {
        digits[i] = static_cast<int>(rest % 3);
        rest /= 3;
    }
    RingElement acc = ring.zero();
    const RingElement zero = ring.zero();
    UnionFind uf(semiarcs);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        RingElement prod = ring.one();
        for (int i = 0; i < c && prod != zero; ++i)
            prod = ring.mul(prod, plans[i].coeff[digits[i]]);
        if (prod != zero) {
            uf.reset();
            for (int i = 0; i < c; ++i)
                for (const auto& [a, b] : plans[i].merges[digits[i]]) uf.unite(a, b);
            acc = ring.add(acc, ring.mul(prod, delta_pow[uf.groups()]));
        }
        for (int i = c; i-- > 0;) {  // ternary odometer
            if (++digits[i] < 3) break;
            digits[i] = 0;
        }
    }
    return acc;
}

}  // namespace

std::uint64_t state_count(const GaussDiagram& d) {
    const int c = d.crossing_count();
    if (c > 40) throw std::invalid_argument("too many crossings to enumerate states");
    std::uint64_t total = 1;
    for (int i = 0; i < c; ++i) total *= 3;
    return total;
}

State decode_state(const GaussDiagram& d, std::uint64_t index) {
    const int c = d.crossing_count();
    State s(c, Smoothing::Oriented);
    for (int i = c; i-- > 0;) {
        s[i] = static_cast<Smoothing>(index % 3);
        index /= 3;
    }
    return s;
}

int loop_count(const GaussDiagram& d, const State& s) {
    if (static_cast<int>(s.size()) != d.crossing_count())
        throw std::invalid_argument("state must choose a smoothing at every crossing");
    UnionFind uf(d.semiarc_count());
    int i = 0;
    for (int id : d.crossing_ids()) {
        for (const auto& [a, b] : merge_pairs(d.ends(id), s[i])) uf.unite(a, b);
        ++i;
    }
    return uf.groups();
}

void InvariantValue::add(RingElement e, int multiplicity) {
    counts_[e] += multiplicity;
    total_ += multiplicity;
    if (counts_[e] == 0) counts_.erase(e);
}

std::string InvariantValue::machine_encoding(const Ring& ring) const {
    std::string out;
    for (const auto& [element, mult] : counts_) {
        if (!out.empty()) out += ' ';
        out += ring.format_element(element) + ":" + std::to_string(mult);
    }
    return out;
}

std::string format_polynomial(const InvariantValue& value, const Ring& ring) {
    if (value.counts().empty()) return "0";
    std::string out;
    for (const auto& [element, mult] : value.counts()) {
        if (!out.empty()) out += " + ";
        if (mult != 1) out += std::to_string(mult);
        const std::string exponent = ring.format_element(element);
        out += exponent == "1" ? "u" : "u^" + exponent;
    }
    return out;
}

RingElement state_weight(const VirtualBracket& vb, const GaussDiagram& d, const Coloring& f,
                         const State& s) {
    if (static_cast<int>(s.size()) != d.crossing_count())
        throw std::invalid_argument("state must choose a smoothing at every crossing");
    const Ring& ring = vb.ring();
    const auto plans = make_plans(vb, d, f);
    RingElement prod = ring.one();
    for (size_t i = 0; i < plans.size(); ++i)
        prod = ring.mul(prod, plans[i].coeff[static_cast<int>(s[i])]);
    return ring.mul(prod, ring.pow(vb.delta(), loop_count(d, s)));
}

RingElement state_sum(const VirtualBracket& vb, const GaussDiagram& d, const Coloring& f,
                      int threads) {
    const Ring& ring = vb.ring();
    const auto plans = make_plans(vb, d, f);
    const auto delta_pow = delta_powers(ring, vb.delta(), d.semiarc_count());
    const std::uint64_t total = state_count(d);

    RingElement sum = ring.zero();
    threads = std::max(1, threads);
    if (threads == 1 || total < 2 * static_cast<std::uint64_t>(threads)) {
        sum = sum_state_range(ring, plans, d.semiarc_count(), delta_pow, 0, total);
    } else {
        const std::uint64_t chunk = (total + threads - 1) / threads;
        std::vector<RingElement> partial(threads, ring.zero());
        std::vector<std::thread> workers;
        workers.reserve(threads);
        for (int t = 0; t < threads; ++t) {
            const std::uint64_t lo = chunk * t;
            const std::uint64_t hi = std::min(total, lo + chunk);
            workers.emplace_back([&, t, lo, hi] {
                if (lo < hi)
                    partial[t] =
                        sum_state_range(ring, plans, d.semiarc_count(), delta_pow, lo, hi);
            });
        }
        for (auto& w : workers) w.join();
        for (const auto& p : partial) sum = ring.add(sum, p);
    }

    const auto [pos, neg] = d.crossing_counts();
    return ring.mul(ring.pow(vb.w(), neg - pos), sum);
}

InvariantValue invariant_multiset(const VirtualBracket& vb, const GaussDiagram& d,
                                  int threads) {
    const auto colorings = enumerate_colorings(d, vb.biquandle());
    threads = std::max(1, threads);
    InvariantValue out;
    if (threads == 1 || colorings.size() < 2) {
        for (const auto& f : colorings) out.add(state_sum(vb, d, f, threads));
        return out;
    }
    std::vector<RingElement> values(colorings.size(), vb.ring().zero());
    std::vector<std::thread> workers;
    const size_t chunk = (colorings.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const size_t lo = chunk * t;
        const size_t hi = std::min(colorings.size(), lo + chunk);
        workers.emplace_back([&, lo, hi] {
            for (size_t i = lo; i < hi; ++i) values[i] = state_sum(vb, d, colorings[i]);
        });
    }
    for (auto& w : workers) w.join();
    for (const auto& v : values) out.add(v);
    return out;
}

}  // namespace bvb
