#include <doctest.h>

#include <algorithm>
#include <random>

#include "bvb/bracket.hpp"
#include "bvb/statesum.hpp"
#include "bvb/symbolic.hpp"

using namespace bvb;

namespace {

const std::string kData = BVB_DATA_DIR;

std::vector<GaussDiagram> corpus() { return load_corpus(kData + "/corpus.gauss"); }

const GaussDiagram& by_name(const std::vector<GaussDiagram>& all, const std::string& name) {
    for (const auto& d : all)
        if (d.name() == name) return d;
    throw std::runtime_error("no link named " + name);
}

std::vector<int> sorted_values(const VirtualBracket& vb, const GaussDiagram& d) {
    std::vector<int> out;
    for (const auto& f : enumerate_colorings(d, vb.biquandle()))
        out.push_back(state_sum(vb, d, f).v);
    std::sort(out.begin(), out.end());
    return out;
}

// Loop counting by walking an explicit adjacency structure instead of the
// production union-find path; test-only oracle.
int walk_loops(const GaussDiagram& d, const std::vector<std::pair<int, int>>& joins) {
    std::vector<std::vector<int>> adj(d.semiarc_count());
    for (auto [a, b] : joins) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> visited(d.semiarc_count(), false);
    int components = 0;
    for (int start = 0; start < d.semiarc_count(); ++start) {
        if (visited[start]) continue;
        ++components;
        std::vector<int> stack = {start};
        visited[start] = true;
        while (!stack.empty()) {
            int at = stack.back();
            stack.pop_back();
            for (int next : adj[at])
                if (!visited[next]) {
                    visited[next] = true;
                    stack.push_back(next);
                }
        }
    }
    return components;
}

// Direct 2^c enumeration of the classical two-smoothing sum for a bracket
// with vanishing virtual coefficients over the one-element biquandle.
RingElement two_smoothing_oracle(const VirtualBracket& vb, const GaussDiagram& d) {
    const Ring& ring = vb.ring();
    const auto& ids = d.crossing_ids();
    const int c = static_cast<int>(ids.size());
    RingElement acc = ring.zero();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
        RingElement prod = ring.one();
        std::vector<std::pair<int, int>> joins;
        for (int i = 0; i < c; ++i) {
            const CrossingEnds& e = d.ends(ids[i]);
            const bool positive = d.crossing_sign(ids[i]) > 0;
            const bool oriented = ((mask >> i) & 1) == 0;
            if (oriented) {
                prod = ring.mul(prod, vb.coeff(positive ? CoeffTable::A : CoeffTable::C, 0, 0));
                joins.push_back({e.u_in, e.o_out});
                joins.push_back({e.o_in, e.u_out});
            } else {
                prod = ring.mul(prod, vb.coeff(positive ? CoeffTable::B : CoeffTable::D, 0, 0));
                joins.push_back({e.u_in, e.o_in});
                joins.push_back({e.u_out, e.o_out});
            }
        }
        acc = ring.add(acc, ring.mul(prod, ring.pow(vb.delta(), walk_loops(d, joins))));
    }
    auto [p, n] = d.crossing_counts();
    return ring.mul(ring.pow(vb.w(), n - p), acc);
}

VirtualBracket cocycle_bracket() {
    Biquandle bq = Biquandle::constant_action({1, 0});
    Ring z5 = Ring::modular(5);
    std::vector<RingElement> zero(4, {0});
    return VirtualBracket::create(bq, z5, zero, zero, {{1}, {2}, {3}, {1}}, zero, zero,
                                  {{1}, {3}, {2}, {1}}, z5.one());
}

}  // namespace

TEST_CASE("state enumeration sizes") {
    auto all = corpus();
    CHECK(state_count(by_name(all, "vtrefoil_r")) == 9);
    CHECK(state_count(by_name(all, "k1")) == 27);
    CHECK(state_count(by_name(all, "unknot")) == 1);
    CHECK(decode_state(by_name(all, "unknot"), 0).empty());
    State s = decode_state(by_name(all, "vtrefoil_r"), 5);  // ternary 12
    CHECK(s == State{Smoothing::Disoriented, Smoothing::Virtual});
}

TEST_CASE("loop counts of simple states") {
    auto all = corpus();
    const GaussDiagram& hopf = by_name(all, "hopf_r");
    CHECK(loop_count(hopf, {Smoothing::Oriented, Smoothing::Oriented}) == 2);
    CHECK(loop_count(hopf, {Smoothing::Disoriented, Smoothing::Disoriented}) == 2);
    CHECK(loop_count(hopf, {Smoothing::Virtual, Smoothing::Virtual}) == 2);
    CHECK(loop_count(hopf, {Smoothing::Oriented, Smoothing::Disoriented}) == 1);
    CHECK(loop_count(hopf, {Smoothing::Virtual, Smoothing::Oriented}) == 1);

    GaussDiagram kink = GaussDiagram::parse("component: O1+ U1+");
    CHECK(loop_count(kink, {Smoothing::Oriented}) == 2);  // the curl closes off a circle
    CHECK(loop_count(kink, {Smoothing::Disoriented}) == 1);
    CHECK(loop_count(kink, {Smoothing::Virtual}) == 1);

    CHECK(loop_count(by_name(all, "unknot"), {}) == 1);
    CHECK(loop_count(by_name(all, "unlink3"), {}) == 3);

    // exactly one state of k1 reaches three loops
    const GaussDiagram& k1 = by_name(all, "k1");
    int deep = 0;
    for (std::uint64_t i = 0; i < state_count(k1); ++i)
        if (loop_count(k1, decode_state(k1, i)) == 3) ++deep;
    CHECK(deep == 1);
}

TEST_CASE("state weights on the Z5 structure") {
    auto all = corpus();
    VirtualBracket vb = load_bracket(kData + "/z5.bracket");

    const GaussDiagram& vt = by_name(all, "vtrefoil_r");
    for (const auto& f : enumerate_colorings(vt, vb.biquandle())) {
        if (f.colors[0] != 0) continue;
        // both crossings smoothed against the orientation: B01 * B10 * delta^2
        CHECK(state_weight(vb, vt, f, {Smoothing::Disoriented, Smoothing::Disoriented}) ==
              RingElement{4});
    }

    const GaussDiagram& hopf = by_name(all, "hopf_r");
    for (const auto& f : enumerate_colorings(hopf, vb.biquandle())) {
        auto [x, y] = crossing_labels(hopf, f, 1);
        if (x != 0 || y != 1) continue;
        // both virtual: V01 * V10 * delta^2 = 2*3*4
        CHECK(state_weight(vb, hopf, f, {Smoothing::Virtual, Smoothing::Virtual}) ==
              RingElement{4});
    }

    const GaussDiagram& unknot = by_name(all, "unknot");
    Coloring f{{0}};
    CHECK(state_weight(vb, unknot, f, {}) == vb.delta());
    CHECK(state_sum(vb, unknot, f) == vb.delta());
}

TEST_CASE("virtual trefoil values match the published table") {
    auto all = corpus();
    VirtualBracket vb = load_bracket(kData + "/z5.bracket");
    CHECK(sorted_values(vb, by_name(all, "vtrefoil_r")) == std::vector<int>{1, 1});
    CHECK(sorted_values(vb, by_name(all, "vtrefoil_l")) == std::vector<int>{4, 4});
    CHECK(format_polynomial(invariant_multiset(vb, by_name(all, "vtrefoil_r")), vb.ring()) ==
          "2u");
    CHECK(format_polynomial(invariant_multiset(vb, by_name(all, "vtrefoil_l")), vb.ring()) ==
          "2u^4");
}

TEST_CASE("Hopf link values match the published table") {
    auto all = corpus();
    VirtualBracket vb = load_bracket(kData + "/z5.bracket");
    CHECK(sorted_values(vb, by_name(all, "hopf_r")) == std::vector<int>{3, 3, 4, 4});
    CHECK(sorted_values(vb, by_name(all, "hopf_l")) == std::vector<int>{2, 2, 4, 4});
    CHECK(format_polynomial(invariant_multiset(vb, by_name(all, "hopf_r")), vb.ring()) ==
          "2u^3 + 2u^4");
    CHECK(format_polynomial(invariant_multiset(vb, by_name(all, "hopf_l")), vb.ring()) ==
          "2u^2 + 2u^4");
    CHECK(format_polynomial(invariant_multiset(vb, by_name(all, "unlink2")), vb.ring()) ==
          "4u^4");
}

TEST_CASE("orientation reversal splits the two three-crossing virtual knots") {
    auto all = corpus();
    VirtualBracket vb = load_bracket(kData + "/z3.bracket");
    CHECK(sorted_values(vb, by_name(all, "k1")) == std::vector<int>{1, 1, 1});
    CHECK(sorted_values(vb, by_name(all, "k2")) == std::vector<int>{2, 2, 2});
    CHECK(invariant_multiset(vb, by_name(all, "k1").reversed()) ==
          invariant_multiset(vb, by_name(all, "k2")));
    // the right virtual trefoil is its own reverse up to the invariant
    VirtualBracket z5 = load_bracket(kData + "/z5.bracket");
    CHECK(invariant_multiset(z5, by_name(all, "vtrefoil_r").reversed()) ==
          invariant_multiset(z5, by_name(all, "vtrefoil_r")));
    // mirroring swaps the virtual trefoil values
    CHECK(invariant_multiset(z5, by_name(all, "vtrefoil_r").mirror()) ==
          invariant_multiset(z5, by_name(all, "vtrefoil_l")));
}

TEST_CASE("polynomial rendering") {
    Ring z5 = Ring::modular(5);
    InvariantValue v;
    CHECK(format_polynomial(v, z5) == "0");
    v.add({1});
    v.add({1});
    CHECK(format_polynomial(v, z5) == "2u");
    InvariantValue w;
    w.add({3}, 2);
    w.add({4}, 2);
    CHECK(format_polynomial(w, z5) == "2u^3 + 2u^4");
    InvariantValue single;
    single.add({0});
    CHECK(format_polynomial(single, z5) == "u^0");
    CHECK(single.machine_encoding(z5) == "0:1");
    CHECK(w.machine_encoding(z5) == "3:2 4:2");
    CHECK(w.cardinality() == 4);
}

TEST_CASE("symbolic expressions expose the state structure") {
    auto all = corpus();
    const GaussDiagram& vt = by_name(all, "vtrefoil_r");
    auto expr = symbolic_expression(vt, generator_labels(vt));
    CHECK(expr.terms.size() == 9);
    CHECK(expr.w_power == -2);
    std::vector<std::string> two_loop_letterings;
    int one_loop = 0;
    for (const auto& term : expr.terms) {
        std::string letters;
        for (const auto& f : term.factors) letters += f.letter;
        if (term.delta_power == 2)
            two_loop_letterings.push_back(letters);
        else if (term.delta_power == 1)
            ++one_loop;
    }
    std::sort(two_loop_letterings.begin(), two_loop_letterings.end());
    CHECK(two_loop_letterings == std::vector<std::string>{"AV", "BB", "VA"});
    CHECK(one_loop == 6);

    const GaussDiagram& hopf = by_name(all, "hopf_r");
    auto hexpr = symbolic_expression(hopf, generator_labels(hopf));
    std::vector<std::string> groups2;
    for (const auto& term : hexpr.terms) {
        std::string letters;
        for (const auto& f : term.factors) letters += f.letter;
        if (term.delta_power == 2) groups2.push_back(letters);
    }
    std::sort(groups2.begin(), groups2.end());
    CHECK(groups2 == std::vector<std::string>{"AA", "BB", "VV"});

    const GaussDiagram& unknot = by_name(all, "unknot");
    auto uexpr = symbolic_expression(unknot, generator_labels(unknot));
    REQUIRE(uexpr.terms.size() == 1);
    CHECK(uexpr.terms[0].factors.empty());
    CHECK(uexpr.terms[0].delta_power == 1);
    CHECK(format_symbolic(uexpr) == "(1)d");
}

TEST_CASE("the k1 expression has a single three-loop term of shape V,A,C") {
    auto all = corpus();
    const GaussDiagram& k1 = by_name(all, "k1");
    Biquandle bq = Biquandle::constant_action({2, 0, 1});
    for (const auto& f : enumerate_colorings(k1, bq)) {
        auto expr = symbolic_expression(k1, coloring_labels(f));
        std::vector<SymbolicTerm> deep;
        for (const auto& term : expr.terms)
            if (term.delta_power == 3) deep.push_back(term);
        REQUIRE(deep.size() == 1);
        std::string letters;
        int xv = -1;
        for (const auto& fac : deep[0].factors) letters += fac.letter;
        std::sort(letters.begin(), letters.end());
        CHECK(letters == "ACV");
        for (const auto& fac : deep[0].factors)
            if (fac.letter == 'V') xv = std::stoi(fac.x);
        for (const auto& fac : deep[0].factors) {
            const int fx = std::stoi(fac.x), fy = std::stoi(fac.y);
            if (fac.letter == 'V') CHECK(fy == (xv + 2) % 3);
            if (fac.letter == 'A') {
                CHECK(fx == (xv + 2) % 3);
                CHECK(fy == (xv + 1) % 3);
            }
            if (fac.letter == 'C') {
                CHECK(fx == xv);
                CHECK(fy == (xv + 1) % 3);
            }
        }
    }
}

TEST_CASE("substituting bracket values into the symbolic expression gives the state sum") {
    auto all = corpus();
    for (const char* bracket : {"/z5.bracket", "/z3.bracket", "/f8.bracket"}) {
        VirtualBracket vb = load_bracket(kData + bracket);
        for (const char* name : {"unknot", "hopf_r", "vtrefoil_l", "k1", "fig8"}) {
            const GaussDiagram& d = by_name(all, name);
            for (const auto& f : enumerate_colorings(d, vb.biquandle())) {
                auto labels = coloring_labels(f);
                auto expr = symbolic_expression(d, labels);
                std::map<std::string, int> assignment;
                for (const auto& label : labels) assignment[label] = std::stoi(label);
                CHECK(evaluate_symbolic(expr, vb, assignment) == state_sum(vb, d, f));
            }
        }
    }
}

TEST_CASE("multiset cardinality equals the coloring count") {
    auto all = corpus();
    for (const char* bracket : {"/z5.bracket", "/z3.bracket", "/f8.bracket"}) {
        VirtualBracket vb = load_bracket(kData + bracket);
        for (const auto& d : all)
            CHECK(invariant_multiset(vb, d).cardinality() ==
                  counting_invariant(d, vb.biquandle()));
    }
}

TEST_CASE("the invariant is unchanged by curls, pokes, relabeling and rotation") {
    auto all = corpus();
    std::mt19937 rng(7);
    for (const char* bracket : {"/z5.bracket", "/z3.bracket", "/f8.bracket"}) {
        VirtualBracket vb = load_bracket(kData + bracket);
        for (const auto& d : all) {
            if (d.crossing_count() > 4) continue;  // the acceptance suite covers the rest
            const InvariantValue base = invariant_multiset(vb, d);
            for (int trial = 0; trial < 4; ++trial) {
                const int arc = static_cast<int>(rng() % d.semiarc_count());
                const int arc2 = static_cast<int>(rng() % d.semiarc_count());
                const int sign = rng() % 2 ? +1 : -1;
                const auto variant =
                    rng() % 2 ? KinkVariant::OverFirst : KinkVariant::UnderFirst;
                CHECK(invariant_multiset(vb, d.with_kink(arc, sign, variant)) == base);
                CHECK(invariant_multiset(vb, d.with_poke(arc, arc2, sign)) == base);
            }
            std::map<int, int> shift;
            for (int id : d.crossing_ids()) shift[id] = id + 10;
            CHECK(invariant_multiset(vb, d.relabeled(shift)) == base);
            if (d.total_passages() > 0)
                CHECK(invariant_multiset(vb, d.rotated(0, 1)) == base);
        }
    }
}

TEST_CASE("classical specialization matches the two-smoothing oracle") {
    auto all = corpus();
    Biquandle one = Biquandle::constant_action({0});
    Ring z5 = Ring::modular(5);
    // Kauffman-style coefficients: B = A^-1, delta = -A^2 - A^-2
    VirtualBracket vb = VirtualBracket::create(one, z5, {{2}}, {{3}}, {{0}}, {{3}}, {{2}},
                                               {{0}}, {2});
    REQUIRE(vb.is_classical());
    for (const auto& d : all) {
        if (d.crossing_count() > 6) continue;
        Coloring f{std::vector<int>(d.semiarc_count(), 0)};
        CHECK(state_sum(vb, d, f) == two_smoothing_oracle(vb, d));
    }
}

TEST_CASE("multiplicative weight specialization matches the product oracle") {
    auto all = corpus();
    VirtualBracket vb = cocycle_bracket();
    REQUIRE(vb.is_cocycle_type());
    const Ring& ring = vb.ring();
    for (const auto& d : all) {
        if (d.crossing_count() > 6) continue;
        for (const auto& f : enumerate_colorings(d, vb.biquandle())) {
            RingElement product = ring.one();
            for (int id : d.crossing_ids()) {
                auto [x, y] = crossing_labels(d, f, id);
                product = ring.mul(product,
                                   vb.coeff(d.crossing_sign(id) > 0 ? CoeffTable::V
                                                                    : CoeffTable::U,
                                            x, y));
            }
            CHECK(state_sum(vb, d, f) == product);
        }
    }
}

TEST_CASE("parallel evaluation is deterministic") {
    auto all = corpus();
    VirtualBracket vb = load_bracket(kData + "/f8.bracket");
    const GaussDiagram& square = by_name(all, "square");
    for (const auto& f : enumerate_colorings(square, vb.biquandle()))
        CHECK(state_sum(vb, square, f, 4) == state_sum(vb, square, f, 1));
    CHECK(invariant_multiset(vb, square, 4) == invariant_multiset(vb, square, 1));
    VirtualBracket z5 = load_bracket(kData + "/z5.bracket");
    const GaussDiagram& u3 = by_name(all, "unlink3");
    CHECK(invariant_multiset(z5, u3, 3) == invariant_multiset(z5, u3));
}

TEST_CASE("mismatched colorings are rejected") {
    auto all = corpus();
    VirtualBracket vb = load_bracket(kData + "/z5.bracket");
    const GaussDiagram& hopf = by_name(all, "hopf_r");
    CHECK_THROWS_AS(state_sum(vb, hopf, Coloring{{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(state_sum(vb, hopf, Coloring{{0, 1, 2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(state_weight(vb, hopf, Coloring{{0, 1, 0, 1}}, {Smoothing::Oriented}),
                    std::invalid_argument);
}
