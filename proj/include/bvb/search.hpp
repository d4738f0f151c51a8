#ifndef BVB_SEARCH_HPP
#define BVB_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bvb/bracket.hpp"

namespace bvb {

// Exhaustive search for virtual bracket structures over a given biquandle and
// ring. Candidates are the tuples (delta, A, B, V); the negative-crossing
// tables are solved per pair, which prunes most of the space, and survivors
// are filtered by the kink and slide equations. Every emitted bracket is
// re-verified in full.
//
// Candidates are indexed by a mixed-radix odometer: delta first, then the
// (a, b, v) entries of each pair in row-major order. Fixed entries do not
// consume index space, so runs can be resumed or partitioned by index range
// regardless of which entries are frozen.
struct BracketSearchOptions {
    std::optional<RingElement> delta;
    // empty, or n*n entries each of which may freeze that table entry
    std::vector<std::optional<RingElement>> fix_a, fix_b, fix_v;
    std::uint64_t resume = 0;                    // skip candidates below this index
    std::optional<std::uint64_t> stop;           // exclusive upper bound
    std::uint64_t guard = std::uint64_t{1} << 24;  // refuse larger spaces unless forced
    bool force = false;
    int threads = 1;
};

struct BracketSearchHit {
    std::uint64_t index;
    VirtualBracket bracket;
};

// Number of candidates (free entries only). Throws when the space cannot be
// indexed in 64 bits.
std::uint64_t bracket_search_space(const Biquandle& bq, const Ring& ring,
                                   const BracketSearchOptions& options);

// Hits in ascending candidate index order, independent of thread count.
std::vector<BracketSearchHit> search_brackets(const Biquandle& bq, const Ring& ring,
                                              const BracketSearchOptions& options = {});

}  // namespace bvb

#endif  // BVB_SEARCH_HPP
