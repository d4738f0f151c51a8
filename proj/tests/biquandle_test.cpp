#include <doctest.h>

#include <algorithm>
#include <vector>

#include "bvb/biquandle.hpp"
#include "bvb/errors.hpp"

using namespace bvb;

namespace {

// the standard 3x6 block matrix example (a quandle)
const std::vector<std::vector<int>> kBlock3 = {
    {1, 3, 2, 1, 1, 1}, {3, 2, 1, 2, 2, 2}, {2, 1, 3, 3, 3, 3}};

std::vector<Biquandle> sample_biquandles() {
    return {Biquandle::constant_action({1, 0}),      // x+1 on Z2
            Biquandle::constant_action({2, 0, 1}),   // x+2 on Z3
            Biquandle::dihedral(3),
            Biquandle::dihedral(5),
            Biquandle::alexander(3, 1, 2),
            Biquandle::alexander(5, 2, 3),
            Biquandle::from_matrix(kBlock3)};
}

bool has_axiom(const std::vector<BiquandleViolation>& v, const std::string& prefix) {
    return std::any_of(v.begin(), v.end(), [&](const BiquandleViolation& x) {
        return x.axiom.starts_with(prefix);
    });
}

}  // namespace

TEST_CASE("block matrix example verifies and is a quandle") {
    Biquandle b = Biquandle::from_matrix(kBlock3);
    CHECK(b.verify().empty());
    CHECK(b.is_quandle());
    CHECK(b.under(0, 1) == 2);  // row 1 column 2 of the printed table is x_3
    // the same table arises as the three-element dihedral quandle
    CHECK(b == Biquandle::dihedral(3));
}

TEST_CASE("from_matrix rejects bad input") {
    CHECK_THROWS_AS(Biquandle::from_matrix({{1, 2}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Biquandle::from_matrix({{1, 5, 2, 1, 1, 1}, {3, 2, 1, 2, 2, 2},
                                            {2, 1, 3, 3, 3, 3}}),
                    std::invalid_argument);
    // entry (1,1) changed from 1 to 2 breaks a column bijection
    auto bad = kBlock3;
    bad[0][0] = 2;
    try {
        Biquandle::from_matrix(bad);
        FAIL("axiom failure expected");
    } catch (const BiquandleAxiomError& e) {
        CHECK(has_axiom(e.violations(), "column.under"));
    }
}

TEST_CASE("constant action biquandles") {
    Biquandle b = Biquandle::constant_action({1, 0});
    CHECK(b.verify().empty());
    CHECK_FALSE(b.is_quandle());
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            CHECK(b.under(x, y) == (x + 1) % 2);
            CHECK(b.over(x, y) == (x + 1) % 2);
        }
    // matches the two-element block matrix form
    CHECK(b == Biquandle::from_matrix({{2, 2, 2, 2}, {1, 1, 1, 1}}));

    Biquandle b3 = Biquandle::constant_action({2, 0, 1});
    CHECK(b3.verify().empty());
    for (int x = 0; x < 3; ++x) CHECK(b3.under(x, 0) == (x + 2) % 3);

    // a non-bijective action fails the column axiom
    BiquandleTables t;
    t.n = 2;
    t.under = {0, 0, 0, 0};
    t.over = {0, 0, 0, 0};
    auto violations = verify_biquandle(t);
    CHECK(has_axiom(violations, "column"));
    CHECK_THROWS_AS(Biquandle::from_tables(t), BiquandleAxiomError);
}

TEST_CASE("alexander and dihedral constructions") {
    Biquandle a = Biquandle::alexander(3, 1, 2);
    CHECK(a.verify().empty());
    CHECK_FALSE(a.is_quandle());  // over op is x -> 2x

    Biquandle q = Biquandle::alexander(3, 2, 1);
    CHECK(q.verify().empty());
    CHECK(q.is_quandle());  // s = 1 forces the trivial over op
    CHECK(q == Biquandle::dihedral(3));

    CHECK(Biquandle::dihedral(3).is_quandle());
    CHECK_THROWS_AS(Biquandle::alexander(4, 2, 1), std::invalid_argument);  // t not a unit
    CHECK_THROWS_AS(Biquandle::alexander(4, 1, 2), std::invalid_argument);  // s not a unit
}

TEST_CASE("inverse maps invert") {
    for (const Biquandle& b : sample_biquandles()) {
        const int n = b.size();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                CHECK(b.under_inv(b.under(x, y), y) == x);
                CHECK(b.over_inv(b.over(x, y), y) == x);
                auto [u, v] = b.s_map(x, y);
                CHECK(b.s_inv(u, v) == std::pair<int, int>{x, y});
            }
    }
    // under_inv(0, y) = 1 for the two-element constant action: x+1 = 0 means x = 1
    Biquandle z2 = Biquandle::constant_action({1, 0});
    for (int y = 0; y < 2; ++y) CHECK(z2.under_inv(0, y) == 1);
}

TEST_CASE("pair map is a bijection on all samples") {
    for (const Biquandle& b : sample_biquandles()) {
        const int n = b.size();
        std::vector<bool> seen(static_cast<size_t>(n) * n, false);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                auto [u, v] = b.s_map(x, y);
                CHECK_FALSE(seen[u * n + v]);
                seen[u * n + v] = true;
            }
    }
}

TEST_CASE("single-entry mutations of small tables break an axiom") {
    for (const Biquandle& b : {Biquandle::constant_action({1, 0}),
                               Biquandle::constant_action({2, 0, 1}),
                               Biquandle::from_matrix(kBlock3)}) {
        const int n = b.size();
        for (int i = 0; i < n * n; ++i)
            for (int alt = 0; alt < n; ++alt) {
                if (alt == b.tables().under[i]) continue;
                BiquandleTables t = b.tables();
                t.under[i] = alt;
                CHECK_FALSE(verify_biquandle(t).empty());
            }
    }
}

TEST_CASE("file format round trips") {
    for (const Biquandle& b : sample_biquandles()) {
        CHECK(Biquandle::parse(b.format()) == b);
    }
    CHECK_THROWS_AS(Biquandle::parse("2\n1 1 1 1\n"), ParseError);          // missing row
    CHECK_THROWS_AS(Biquandle::parse("2\n1 1 1\n2 2 2 2\n"), ParseError);   // short row
    CHECK_THROWS_AS(Biquandle::parse("2\n1 1 1 3\n2 2 2 2\n"), ParseError); // out of range
    CHECK_THROWS_AS(Biquandle::load("/nonexistent.bq"), ParseError);
}

TEST_CASE("exchange law violations carry witnesses") {
    // swap two entries of the dihedral table to break the exchange laws
    BiquandleTables t = Biquandle::dihedral(5).tables();
    std::swap(t.under[0 * 5 + 1], t.under[0 * 5 + 2]);
    auto violations = verify_biquandle(t);
    REQUIRE_FALSE(violations.empty());
    bool exchange_seen = false;
    for (const auto& v : violations)
        if (v.axiom.starts_with("exchange.")) {
            exchange_seen = true;
            CHECK(v.x >= 0);
            CHECK(v.y >= 0);
            CHECK(v.z >= 0);
        }
    CHECK(exchange_seen);
}
