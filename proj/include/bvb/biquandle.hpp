#ifndef BVB_BIQUANDLE_HPP
#define BVB_BIQUANDLE_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bvb {

// One failed axiom instance over a pair of operation tables, with the
// witnessing elements (0-based; -1 where the axiom does not use that slot).
struct BiquandleViolation {
    std::string axiom;  // "diagonal", "column.under", "column.over", "pair-map",
                        // "exchange.1", "exchange.2", "exchange.3"
    int x = -1, y = -1, z = -1;
    std::string detail;
};

// Raw operation tables, not yet known to satisfy the axioms.
// under[x*n + y] = result of the under operation, over[x*n + y] likewise.
struct BiquandleTables {
    int n = 0;
    std::vector<int> under;
    std::vector<int> over;
    friend bool operator==(const BiquandleTables&, const BiquandleTables&) = default;
};

// Checks every axiom instance and reports each failure:
//   - diagonal: the two operations must agree on arguments (x, x);
//   - column.under / column.over: for each fixed second argument the table
//     column must be a permutation;
//   - pair-map: (x, y) -> (over(y,x), under(x,y)) must be a bijection of X*X;
//   - exchange.1..3: the three exchange laws, checked over all triples.
// Shape problems (wrong sizes, out-of-range entries) throw invalid_argument.
std::vector<BiquandleViolation> verify_biquandle(const BiquandleTables& t);

class BiquandleAxiomError : public std::runtime_error {
public:
    BiquandleAxiomError(const std::string& msg, std::vector<BiquandleViolation> violations);
    const std::vector<BiquandleViolation>& violations() const { return violations_; }

private:
    std::vector<BiquandleViolation> violations_;
};

// A finite biquandle as verified operation tables with precomputed inverses.
// Immutable after construction; every factory re-checks the axioms and throws
// BiquandleAxiomError (with the full report) if they fail.
class Biquandle {
public:
    static Biquandle from_tables(BiquandleTables t);
    // n rows of 2n entries: left block is the under operation, right block
    // the over operation. one_based matches the usual printed table form.
    static Biquandle from_matrix(const std::vector<std::vector<int>>& block, bool one_based = true);
    static Biquandle constant_action(const std::vector<int>& sigma);
    static Biquandle alexander(int n, int t, int s);  // tx + (s-t)y and sx mod n
    static Biquandle dihedral(int n);                 // 2y - x mod n, over trivial

    static Biquandle parse(std::string_view text);
    static Biquandle load(const std::string& path);

    int size() const { return tables_.n; }
    int under(int x, int y) const { return tables_.under[x * tables_.n + y]; }
    int over(int x, int y) const { return tables_.over[x * tables_.n + y]; }
    // under_inv(z, y) is the unique x with under(x, y) == z; over_inv likewise.
    int under_inv(int z, int y) const { return under_inv_[z * tables_.n + y]; }
    int over_inv(int z, int y) const { return over_inv_[z * tables_.n + y]; }
    std::pair<int, int> s_map(int x, int y) const { return {over(y, x), under(x, y)}; }
    std::pair<int, int> s_inv(int u, int v) const;

    bool is_quandle() const;
    const BiquandleTables& tables() const { return tables_; }
    std::vector<BiquandleViolation> verify() const { return verify_biquandle(tables_); }
    std::string format() const;  // file grammar, 1-based

    friend bool operator==(const Biquandle& a, const Biquandle& b) {
        return a.tables_ == b.tables_;
    }

private:
    explicit Biquandle(BiquandleTables t);
    BiquandleTables tables_;
    std::vector<int> under_inv_, over_inv_, s_inv_;
};

// File grammar: first significant line n, then n lines of 2n 1-based entries.
// '#' starts a comment; blank lines are ignored.
BiquandleTables parse_biquandle_tables(std::string_view text);

}  // namespace bvb

#endif  // BVB_BIQUANDLE_HPP
