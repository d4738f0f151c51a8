#ifndef BVB_DIAGRAM_HPP
#define BVB_DIAGRAM_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bvb {

enum class Role : unsigned char { Over, Under };

// One pass of a strand through a classical crossing.
struct Passage {
    int crossing = 0;        // positive id, shared by the over and under passes
    Role role = Role::Over;
    int sign = +1;           // +1 or -1, equal on both passes
    friend bool operator==(const Passage&, const Passage&) = default;
};

// The four strand ends of a classical crossing, as semiarc ids. In a kink the
// same semiarc can fill two slots.
struct CrossingEnds {
    int u_in = -1, u_out = -1, o_in = -1, o_out = -1;
};

enum class KinkVariant : unsigned char { OverFirst, UnderFirst };

// An oriented virtual link as signed Gauss codes, one cyclic passage sequence
// per component. Virtual crossings carry no data: a signed Gauss code presents
// a virtual link up to the purely virtual moves, so they never appear here.
//
// Semiarcs are numbered component-major; within a component, semiarc j is the
// arc that ends at passage j (and starts just after passage j-1, cyclically).
// A crossing-free component is a single closed semiarc.
//
// Diagrams are immutable; all mutating operations return new values and every
// construction path re-validates the crossing pairing.
class GaussDiagram {
public:
    static GaussDiagram make(std::string name, std::vector<std::vector<Passage>> components);
    static GaussDiagram parse(std::string_view text);  // exactly one link stanza

    const std::string& name() const { return name_; }
    const std::vector<std::vector<Passage>>& components() const { return components_; }
    int component_count() const { return static_cast<int>(components_.size()); }
    int total_passages() const;

    int crossing_count() const { return static_cast<int>(ids_.size()); }
    const std::vector<int>& crossing_ids() const { return ids_; }  // ascending
    int crossing_sign(int crossing_id) const;
    const CrossingEnds& ends(int crossing_id) const;
    std::pair<int, int> crossing_counts() const;  // (#positive, #negative)
    int writhe() const;

    int semiarc_count() const { return semiarc_count_; }
    int semiarc_base(int component) const { return semiarc_base_[component]; }
    int semiarc_component(int semiarc) const;
    bool semiarc_is_closed(int semiarc) const;

    GaussDiagram mirror() const;            // swap roles, flip signs
    GaussDiagram reversed() const;          // reverse every component
    GaussDiagram reversed(int component) const;
    GaussDiagram rotated(int component, int offset) const;  // basepoint shift
    GaussDiagram relabeled() const;         // ids -> 1..c in first-appearance order
    GaussDiagram relabeled(const std::map<int, int>& id_map) const;
    GaussDiagram renamed(std::string new_name) const;

    // Reidemeister-style insertions. with_kink adds one crossing of the given
    // sign inside the chosen semiarc; with_poke slides the first arc over the
    // second, adding two crossings with cancelling signs.
    GaussDiagram with_kink(int semiarc, int sign, KinkVariant variant) const;
    GaussDiagram with_poke(int arc_over, int arc_under, int sign) const;

    // Splices two knots into one at the chosen basepoints (positions in the
    // cyclic passage sequence). The second diagram's crossings get fresh ids.
    static GaussDiagram connect_sum(const GaussDiagram& a, const GaussDiagram& b,
                                    int basepoint_a = 0, int basepoint_b = 0);

    std::string format() const;

private:
    GaussDiagram(std::string name, std::vector<std::vector<Passage>> components);
    int max_crossing_id() const { return ids_.empty() ? 0 : ids_.back(); }

    std::string name_;
    std::vector<std::vector<Passage>> components_;
    std::vector<int> semiarc_base_;
    int semiarc_count_ = 0;
    std::vector<int> ids_;
    std::map<int, CrossingEnds> ends_;
    std::map<int, int> signs_;
};

// File grammar (one or more stanzas):
//   link <name>
//   component: O1+ U2+ ...
//   component:
// '#' starts a comment. Names must be unique within a file.
std::vector<GaussDiagram> parse_corpus(std::string_view text);
std::vector<GaussDiagram> load_corpus(const std::string& path);

}  // namespace bvb

#endif  // BVB_DIAGRAM_HPP
