#include <doctest.h>

#include <set>

#include "bvb/coloring.hpp"
#include "bvb/diagram.hpp"

using namespace bvb;

namespace {

std::vector<GaussDiagram> corpus() {
    return load_corpus(std::string(BVB_DATA_DIR) + "/corpus.gauss");
}

const GaussDiagram& by_name(const std::vector<GaussDiagram>& all, const std::string& name) {
    for (const auto& d : all)
        if (d.name() == name) return d;
    throw std::runtime_error("no link named " + name);
}

// every assignment of elements to semiarcs, filtered by verify_coloring
std::vector<Coloring> brute_force_colorings(const GaussDiagram& d, const Biquandle& bq) {
    std::vector<Coloring> out;
    const int arcs = d.semiarc_count();
    std::vector<int> assign(arcs, 0);
    while (true) {
        Coloring f{assign};
        if (verify_coloring(d, bq, f)) out.push_back(f);
        int i = arcs - 1;
        while (i >= 0 && ++assign[i] == bq.size()) assign[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

}  // namespace

TEST_CASE("Hopf link has four colorings over the two-element constant action") {
    auto all = corpus();
    Biquandle bq = Biquandle::constant_action({1, 0});
    const GaussDiagram& hopf = by_name(all, "hopf_r");
    auto colorings = enumerate_colorings(hopf, bq);
    CHECK(colorings.size() == 4);
    for (const auto& f : colorings) {
        CHECK(verify_coloring(hopf, bq, f));
        // partners within each component are forced to x and x+1
        CHECK(f.colors[1] == (f.colors[0] + 1) % 2);
        CHECK(f.colors[3] == (f.colors[2] + 1) % 2);
    }
    CHECK(counting_invariant(hopf, bq) == 4);
}

TEST_CASE("virtual Hopf link has no colorings over the same biquandle") {
    auto all = corpus();
    Biquandle bq = Biquandle::constant_action({1, 0});
    const GaussDiagram& vhopf = by_name(all, "vhopf");
    CHECK(counting_invariant(vhopf, bq) == 0);
    // and indeed no total assignment passes verification
    CHECK(brute_force_colorings(vhopf, bq).empty());
}

TEST_CASE("right virtual trefoil colorings follow the alternating pattern") {
    auto all = corpus();
    Biquandle bq = Biquandle::constant_action({1, 0});
    auto colorings = enumerate_colorings(by_name(all, "vtrefoil_r"), bq);
    REQUIRE(colorings.size() == 2);
    for (const auto& f : colorings) {
        const int x = f.colors[0];
        CHECK(f.colors == std::vector<int>{x, (x + 1) % 2, x, (x + 1) % 2});
    }
}

TEST_CASE("unknot and unlinks color freely") {
    auto all = corpus();
    for (const Biquandle& bq : {Biquandle::constant_action({1, 0}),
                                Biquandle::constant_action({2, 0, 1}),
                                Biquandle::dihedral(3)}) {
        CHECK(counting_invariant(by_name(all, "unknot"), bq) == bq.size());
        CHECK(counting_invariant(by_name(all, "unlink2"), bq) == bq.size() * bq.size());
        CHECK(counting_invariant(by_name(all, "unlink3"), bq) ==
              bq.size() * bq.size() * bq.size());
    }
}

TEST_CASE("counting invariant values on the corpus") {
    auto all = corpus();
    Biquandle z3 = Biquandle::constant_action({2, 0, 1});
    CHECK(counting_invariant(by_name(all, "k1"), z3) == 3);
    CHECK(counting_invariant(by_name(all, "k2"), z3) == 3);

    // Fox coloring counts of the classical knots match their determinants
    CHECK(counting_invariant(by_name(all, "trefoil_r"), Biquandle::dihedral(3)) == 9);
    CHECK(counting_invariant(by_name(all, "trefoil_r"), Biquandle::dihedral(5)) == 5);
    CHECK(counting_invariant(by_name(all, "fig8"), Biquandle::dihedral(5)) == 25);
    CHECK(counting_invariant(by_name(all, "fig8"), Biquandle::dihedral(3)) == 3);
    CHECK(counting_invariant(by_name(all, "fig8"), Biquandle::dihedral(7)) == 7);
}

TEST_CASE("two-element constant action counts follow the parity closed form") {
    auto all = corpus();
    Biquandle bq = Biquandle::constant_action({1, 0});
    for (const auto& d : all) {
        bool odd_component = false;
        for (const auto& comp : d.components())
            if (comp.size() % 2 == 1) odd_component = true;
        const long expected = odd_component ? 0 : 1L << d.component_count();
        CHECK(counting_invariant(d, bq) == expected);
    }
}

TEST_CASE("enumeration agrees with brute force on small instances") {
    auto all = corpus();
    const std::vector<Biquandle> biquandles = {
        Biquandle::constant_action({1, 0}), Biquandle::constant_action({2, 0, 1}),
        Biquandle::dihedral(3), Biquandle::alexander(3, 1, 2)};
    for (const auto& d : all) {
        if (d.semiarc_count() > 8) continue;
        for (const auto& bq : biquandles) {
            auto fast = enumerate_colorings(d, bq);
            auto slow = brute_force_colorings(d, bq);
            REQUIRE(fast.size() == slow.size());
            std::set<std::vector<int>> fast_set, slow_set;
            for (const auto& f : fast) {
                CHECK(verify_coloring(d, bq, f));
                fast_set.insert(f.colors);
            }
            for (const auto& f : slow) slow_set.insert(f.colors);
            CHECK(fast_set == slow_set);
        }
    }
}

TEST_CASE("counting invariant is stable under diagram moves across the corpus") {
    auto all = corpus();
    for (const Biquandle& bq : {Biquandle::constant_action({1, 0}),
                                Biquandle::constant_action({2, 0, 1})}) {
        for (const auto& d : all) {
            const long base = counting_invariant(d, bq);
            CHECK(counting_invariant(d.mirror(), bq) == base);
            CHECK(counting_invariant(d.reversed(), bq) == base);
            CHECK(counting_invariant(d.with_kink(0, +1, KinkVariant::OverFirst), bq) == base);
            CHECK(counting_invariant(d.with_kink(d.semiarc_count() / 2, -1,
                                                 KinkVariant::UnderFirst), bq) == base);
            CHECK(counting_invariant(d.with_poke(0, d.semiarc_count() - 1, +1), bq) == base);
            CHECK(counting_invariant(d.with_poke(d.semiarc_count() / 2, 0, -1), bq) == base);
        }
    }
}

TEST_CASE("crossing labels follow the sign convention") {
    auto all = corpus();
    const GaussDiagram& hopf = by_name(all, "hopf_r");
    Biquandle bq = Biquandle::constant_action({1, 0});
    for (const auto& f : enumerate_colorings(hopf, bq)) {
        // both crossings are positive: labels are (under-in, over-out)
        for (int id : hopf.crossing_ids()) {
            const CrossingEnds& e = hopf.ends(id);
            auto [x, y] = crossing_labels(hopf, f, id);
            CHECK(x == f.colors[e.u_in]);
            CHECK(y == f.colors[e.o_out]);
        }
    }
    const GaussDiagram& hopf_l = by_name(all, "hopf_l");
    for (const auto& f : enumerate_colorings(hopf_l, bq)) {
        for (int id : hopf_l.crossing_ids()) {
            const CrossingEnds& e = hopf_l.ends(id);
            auto [x, y] = crossing_labels(hopf_l, f, id);
            CHECK(x == f.colors[e.u_out]);
            CHECK(y == f.colors[e.o_in]);
        }
    }
}

TEST_CASE("verify_coloring rejects partial or out-of-range assignments") {
    auto all = corpus();
    Biquandle bq = Biquandle::constant_action({1, 0});
    const GaussDiagram& hopf = by_name(all, "hopf_r");
    CHECK_THROWS_AS(verify_coloring(hopf, bq, Coloring{{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_coloring(hopf, bq, Coloring{{0, 1, 0, 5}}), std::invalid_argument);
}
