#include <limits>
#include <stdexcept>
#include <thread>

#include "bvb/search.hpp"

namespace bvb {

namespace {

struct Digit {
    bool fixed;
    RingElement value;  // meaningful when fixed
};

// digit order: delta, then (a, b, v) per pair in row-major order
std::vector<Digit> make_digits(const Biquandle& bq, const Ring& ring,
                               const BracketSearchOptions& options) {
    const int n = bq.size();
    const size_t nn = static_cast<size_t>(n) * n;
    auto check_mask = [&](const std::vector<std::optional<RingElement>>& mask,
                          const char* name) {
        if (!mask.empty() && mask.size() != nn)
            throw std::invalid_argument(std::string("fix mask for ") + name +
                                        " must have n*n entries");
        for (const auto& e : mask)
            if (e && !ring.contains(*e))
                throw std::invalid_argument("fixed entry outside the ring");
    };
    check_mask(options.fix_a, "A");
    check_mask(options.fix_b, "B");
    check_mask(options.fix_v, "V");

    std::vector<Digit> digits;
    digits.reserve(1 + 3 * nn);
    digits.push_back({options.delta.has_value(),
                      options.delta.value_or(ring.zero())});
    auto entry = [](const std::vector<std::optional<RingElement>>& mask, size_t i) {
        return mask.empty() ? std::nullopt : mask[i];
    };
    for (size_t i = 0; i < nn; ++i)
        for (const auto* mask : {&options.fix_a, &options.fix_b, &options.fix_v}) {
            const auto fixed = entry(*mask, i);
            digits.push_back({fixed.has_value(), fixed.value_or(RingElement{0})});
        }
    return digits;
}

// span[i] = number of candidates under one value choice at digit i
std::vector<std::uint64_t> make_spans(const std::vector<Digit>& digits, int radix,
                                      std::uint64_t* total) {
    std::vector<std::uint64_t> span(digits.size() + 1, 1);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / 2;
    for (size_t i = digits.size(); i-- > 0;) {
        const std::uint64_t below = span[i + 1];
        const std::uint64_t r = digits[i].fixed ? 1 : static_cast<std::uint64_t>(radix);
        if (below > limit / r)
            throw std::runtime_error("bracket search space cannot be indexed in 64 bits");
        span[i] = below * r;
    }
    *total = span[0];
    return span;
}

class Searcher {
public:
    Searcher(const Biquandle& bq, const Ring& ring, const std::vector<Digit>& digits,
             const std::vector<std::uint64_t>& span, std::uint64_t lo, std::uint64_t hi)
        : bq_(bq), ring_(ring), digits_(digits), span_(span), lo_(lo), hi_(hi) {
        const size_t nn = static_cast<size_t>(bq.size()) * bq.size();
        a_.resize(nn);
        b_.resize(nn);
        v_.resize(nn);
        c_.resize(nn);
        d_.resize(nn);
        u_.resize(nn);
    }

    std::vector<BracketSearchHit> run() {
        walk(0, 0);
        return std::move(hits_);
    }

private:
    void assign(size_t depth, RingElement value) {
        if (depth == 0) {
            delta_ = value;
            return;
        }
        const size_t entry = (depth - 1) / 3;
        switch ((depth - 1) % 3) {
            case 0: a_[entry] = value; break;
            case 1: b_[entry] = value; break;
            default: v_[entry] = value; break;
        }
    }

    // after the v digit of a pair the poke equations either pin (c, d, u) or
    // rule the whole subtree out
    bool pair_ok(size_t depth) {
        if (depth == 0 || (depth - 1) % 3 != 2) return true;
        const size_t entry = (depth - 1) / 3;
        return solve_negative_pair(ring_, a_[entry], b_[entry], v_[entry], delta_, c_[entry],
                                   d_[entry], u_[entry]);
    }

    void emit(std::uint64_t index) {
        std::string why;
        const auto w = derive_writhe_unit(ring_, bq_.size(), a_, b_, v_, delta_, &why);
        if (!w) return;
        const auto w_inv = ring_.inverse(*w);
        for (int x = 0; x < bq_.size(); ++x) {
            const size_t i = static_cast<size_t>(x) * bq_.size() + x;
            const RingElement neg =
                ring_.add(ring_.mul(delta_, c_[i]), ring_.add(d_[i], u_[i]));
            if (neg != *w_inv) return;
        }
        if (!verify_bracket_tables(bq_, ring_, a_, b_, v_, c_, d_, u_, delta_, *w).empty())
            return;
        hits_.push_back({index, VirtualBracket::create(bq_, ring_, a_, b_, v_, c_, d_, u_,
                                                       delta_, *w)});
    }

    void walk(size_t depth, std::uint64_t base) {
        if (base >= hi_ || base + span_[depth] <= lo_) return;
        if (depth == digits_.size()) {
            emit(base);
            return;
        }
        const std::uint64_t below = span_[depth + 1];
        if (digits_[depth].fixed) {
            assign(depth, digits_[depth].value);
            if (pair_ok(depth)) walk(depth + 1, base);
            return;
        }
        for (int value = 0; value < ring_.size(); ++value) {
            const std::uint64_t child = base + static_cast<std::uint64_t>(value) * below;
            if (child >= hi_) break;
            if (child + below <= lo_) continue;
            assign(depth, {value});
            if (pair_ok(depth)) walk(depth + 1, child);
        }
    }

    const Biquandle& bq_;
    const Ring& ring_;
    const std::vector<Digit>& digits_;
    const std::vector<std::uint64_t>& span_;
    std::uint64_t lo_, hi_;
    RingElement delta_;
    std::vector<RingElement> a_, b_, v_, c_, d_, u_;
    std::vector<BracketSearchHit> hits_;
};

}  // namespace

std::uint64_t bracket_search_space(const Biquandle& bq, const Ring& ring,
                                   const BracketSearchOptions& options) {
    const auto digits = make_digits(bq, ring, options);
    std::uint64_t total = 0;
    make_spans(digits, ring.size(), &total);
    return total;
}

std::vector<BracketSearchHit> search_brackets(const Biquandle& bq, const Ring& ring,
                                              const BracketSearchOptions& options) {
    const auto digits = make_digits(bq, ring, options);
    std::uint64_t total = 0;
    const auto span = make_spans(digits, ring.size(), &total);
    if (total > options.guard && !options.force)
        throw std::runtime_error("bracket search space has " + std::to_string(total) +
                                 " candidates, above the guard of " +
                                 std::to_string(options.guard) + "; raise it or force the run");

    const std::uint64_t lo = std::min(options.resume, total);
    const std::uint64_t hi = std::min(options.stop.value_or(total), total);
    if (lo >= hi) return {};

    const int threads = std::max(1, options.threads);
    if (threads == 1 || hi - lo < static_cast<std::uint64_t>(threads))
        return Searcher(bq, ring, digits, span, lo, hi).run();

    const std::uint64_t chunk = (hi - lo + threads - 1) / threads;
    std::vector<std::vector<BracketSearchHit>> partial(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        const std::uint64_t wlo = lo + chunk * t;
        const std::uint64_t whi = std::min(hi, wlo + chunk);
        workers.emplace_back([&, t, wlo, whi] {
            if (wlo < whi) partial[t] = Searcher(bq, ring, digits, span, wlo, whi).run();
        });
    }
    for (auto& w : workers) w.join();

    std::vector<BracketSearchHit> hits;
    for (auto& p : partial)
        for (auto& h : p) hits.push_back(std::move(h));
    return hits;
}

}  // namespace bvb
