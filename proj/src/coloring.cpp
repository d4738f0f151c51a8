#include "bvb/coloring.hpp"

#include <stdexcept>

namespace bvb {

namespace {

// Per-crossing slots in the orientation that makes both signs look alike:
// r = under(p, q) and s = over(q, p), with (p, q) the label pair.
struct Slots {
    int p, q, r, s;
};

Slots slots_of(const GaussDiagram& d, int crossing_id) {
    const CrossingEnds& e = d.ends(crossing_id);
    if (d.crossing_sign(crossing_id) > 0) return {e.u_in, e.o_out, e.u_out, e.o_in};
    return {e.u_out, e.o_in, e.u_in, e.o_out};
}

void check_total(const GaussDiagram& d, const Biquandle& bq, const Coloring& f) {
    if (static_cast<int>(f.colors.size()) != d.semiarc_count())
        throw std::invalid_argument("coloring must assign every semiarc");
    for (int c : f.colors)
        if (c < 0 || c >= bq.size())
            throw std::invalid_argument("coloring uses an element outside the biquandle");
}

class Enumerator {
public:
    Enumerator(const GaussDiagram& d, const Biquandle& bq)
        : d_(d), bq_(bq), colors_(d.semiarc_count(), -1), arc_crossings_(d.semiarc_count()) {
        for (int id : d.crossing_ids()) {
            const Slots s = slots_of(d, id);
            for (int arc : {s.p, s.q, s.r, s.s}) {
                auto& list = arc_crossings_[arc];
                if (list.empty() || list.back() != id) list.push_back(id);
            }
        }
    }

    std::vector<Coloring> run() {
        out_.clear();
        dfs(0);
        return std::move(out_);
    }

private:
    bool set(int arc, int value, std::vector<int>& dirty) {
        if (colors_[arc] == value) return true;
        if (colors_[arc] != -1) return false;
        colors_[arc] = value;
        trail_.push_back(arc);
        for (int id : arc_crossings_[arc]) dirty.push_back(id);
        return true;
    }

    // Derive whatever the relations force at one crossing. Two known slots of
    // the right shape pin the other two; re-derived values double as checks.
    bool apply(int crossing_id, std::vector<int>& dirty) {
        const Slots a = slots_of(d_, crossing_id);
        const int p = colors_[a.p], q = colors_[a.q], r = colors_[a.r], s = colors_[a.s];
        if (p >= 0 && q >= 0)
            return set(a.r, bq_.under(p, q), dirty) && set(a.s, bq_.over(q, p), dirty);
        if (r >= 0 && q >= 0) {
            const int pv = bq_.under_inv(r, q);
            return set(a.p, pv, dirty) && set(a.s, bq_.over(q, pv), dirty);
        }
        if (s >= 0 && p >= 0) {
            const int qv = bq_.over_inv(s, p);
            return set(a.q, qv, dirty) && set(a.r, bq_.under(p, qv), dirty);
        }
        if (s >= 0 && r >= 0) {
            auto [pv, qv] = bq_.s_inv(s, r);
            return set(a.p, pv, dirty) && set(a.q, qv, dirty);
        }
        return true;  // underdetermined, revisited once more slots fill in
    }

    bool propagate(std::vector<int>&& dirty) {
        while (!dirty.empty()) {
            const int id = dirty.back();
            dirty.pop_back();
            if (!apply(id, dirty)) return false;
        }
        return true;
    }

    void dfs(int from) {
        int arc = from;
        while (arc < static_cast<int>(colors_.size()) && colors_[arc] != -1) ++arc;
        if (arc == static_cast<int>(colors_.size())) {
            out_.push_back(Coloring{colors_});
            return;
        }
        for (int value = 0; value < bq_.size(); ++value) {
            const size_t mark = trail_.size();
            std::vector<int> dirty;
            if (set(arc, value, dirty) && propagate(std::move(dirty))) dfs(arc + 1);
            while (trail_.size() > mark) {
                colors_[trail_.back()] = -1;
                trail_.pop_back();
            }
        }
    }

    const GaussDiagram& d_;
    const Biquandle& bq_;
    std::vector<int> colors_;
    std::vector<std::vector<int>> arc_crossings_;
    std::vector<int> trail_;
    std::vector<Coloring> out_;
};

}  // namespace

std::pair<int, int> crossing_labels(const GaussDiagram& d, const Coloring& f, int crossing_id) {
    const Slots s = slots_of(d, crossing_id);
    return {f.colors[s.p], f.colors[s.q]};
}

bool verify_coloring(const GaussDiagram& d, const Biquandle& bq, const Coloring& f) {
    check_total(d, bq, f);
    for (int id : d.crossing_ids()) {
        const Slots a = slots_of(d, id);
        const int p = f.colors[a.p], q = f.colors[a.q];
        if (f.colors[a.r] != bq.under(p, q)) return false;
        if (f.colors[a.s] != bq.over(q, p)) return false;
    }
    return true;
}

std::vector<Coloring> enumerate_colorings(const GaussDiagram& d, const Biquandle& bq) {
    return Enumerator(d, bq).run();
}

long counting_invariant(const GaussDiagram& d, const Biquandle& bq) {
    return static_cast<long>(enumerate_colorings(d, bq).size());
}

}  // namespace bvb
