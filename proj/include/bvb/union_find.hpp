#ifndef BVB_UNION_FIND_HPP
#define BVB_UNION_FIND_HPP

#include <numeric>
#include <vector>

namespace bvb {

// Disjoint-set forest with path halving, reusable across queries via reset().
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { reset(); }

    void reset() {
        std::iota(parent_.begin(), parent_.end(), 0);
        groups_ = static_cast<int>(parent_.size());
    }

    int find(int a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[b] = a;
            --groups_;
        }
    }

    int groups() const { return groups_; }

private:
    std::vector<int> parent_;
    int groups_ = 0;
};

}  // namespace bvb

#endif  // BVB_UNION_FIND_HPP
