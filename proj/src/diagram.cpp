#include "bvb/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "bvb/errors.hpp"

namespace bvb {

namespace {

std::string passage_text(const Passage& p) {
    return std::string(1, p.role == Role::Over ? 'O' : 'U') + std::to_string(p.crossing) +
           (p.sign > 0 ? '+' : '-');
}

Passage parse_passage(const std::string& token, int line) {
    auto fail = [&]() -> Passage {
        throw ParseError("line " + std::to_string(line) + ": bad passage token '" + token +
                         "' (expected e.g. O3+ or U12-)");
    };
    if (token.size() < 3) return fail();
    Passage p;
    if (token.front() == 'O')
        p.role = Role::Over;
    else if (token.front() == 'U')
        p.role = Role::Under;
    else
        return fail();
    if (token.back() == '+')
        p.sign = +1;
    else if (token.back() == '-')
        p.sign = -1;
    else
        return fail();
    const std::string digits = token.substr(1, token.size() - 2);
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9)
        return fail();
    p.crossing = std::stoi(digits);
    if (p.crossing < 1) return fail();
    return p;
}

std::vector<GaussDiagram> parse_links(std::string_view text, bool allow_anonymous) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;

    std::vector<GaussDiagram> out;
    std::string name;
    std::vector<std::vector<Passage>> components;
    bool open = false;

    auto flush = [&]() {
        if (!open) return;
        if (components.empty())
            throw ParseError("link '" + name + "' has no components");
        out.push_back(GaussDiagram::make(name, std::move(components)));
        components.clear();
        open = false;
    };

    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "link") {
            flush();
            std::string rest;
            std::getline(ls, rest);
            auto b = rest.find_first_not_of(" \t");
            auto e = rest.find_last_not_of(" \t");
            if (b == std::string::npos)
                throw ParseError("line " + std::to_string(line) + ": link needs a name");
            name = rest.substr(b, e - b + 1);
            open = true;
        } else if (head == "component:") {
            if (!open) {
                if (!allow_anonymous)
                    throw ParseError("line " + std::to_string(line) +
                                     ": component before any 'link' header");
                name = "unnamed";
                open = true;
            }
            std::vector<Passage> comp;
            std::string token;
            while (ls >> token) comp.push_back(parse_passage(token, line));
            components.push_back(std::move(comp));
        } else {
            throw ParseError("line " + std::to_string(line) + ": expected 'link' or 'component:'");
        }
    }
    flush();

    std::set<std::string> seen;
    for (const auto& d : out)
        if (!seen.insert(d.name()).second)
            throw ParseError("duplicate link name '" + d.name() + "'");
    return out;
}

}  // namespace

GaussDiagram::GaussDiagram(std::string name, std::vector<std::vector<Passage>> components)
    : name_(std::move(name)), components_(std::move(components)) {
    struct Seen {
        int count = 0;
        int overs = 0;
        int sign = 0;
        bool sign_conflict = false;
    };
    std::map<int, Seen> seen;
    semiarc_base_.reserve(components_.size());
    for (const auto& comp : components_) {
        semiarc_base_.push_back(semiarc_count_);
        semiarc_count_ += comp.empty() ? 1 : static_cast<int>(comp.size());
        for (const auto& p : comp) {
            if (p.crossing < 1)
                throw std::invalid_argument("link '" + name_ + "': crossing ids must be positive");
            auto& s = seen[p.crossing];
            ++s.count;
            if (p.role == Role::Over) ++s.overs;
            if (s.sign == 0)
                s.sign = p.sign;
            else if (s.sign != p.sign)
                s.sign_conflict = true;
        }
    }
    for (const auto& [id, s] : seen) {
        if (s.count != 2)
            throw std::invalid_argument("link '" + name_ + "': crossing " + std::to_string(id) +
                                        " appears " + std::to_string(s.count) +
                                        " times (expected exactly 2)");
        if (s.overs != 1)
            throw std::invalid_argument("link '" + name_ + "': crossing " + std::to_string(id) +
                                        " needs one over and one under passage");
        if (s.sign_conflict)
            throw std::invalid_argument("link '" + name_ + "': crossing " + std::to_string(id) +
                                        " has mismatched signs");
        ids_.push_back(id);
        signs_[id] = s.sign;
    }
    for (size_t c = 0; c < components_.size(); ++c) {
        const auto& comp = components_[c];
        const int k = static_cast<int>(comp.size());
        for (int i = 0; i < k; ++i) {
            const int in_arc = semiarc_base_[c] + i;
            const int out_arc = semiarc_base_[c] + (i + 1) % k;
            auto& e = ends_[comp[i].crossing];
            if (comp[i].role == Role::Over) {
                e.o_in = in_arc;
                e.o_out = out_arc;
            } else {
                e.u_in = in_arc;
                e.u_out = out_arc;
            }
        }
    }
}

GaussDiagram GaussDiagram::make(std::string name, std::vector<std::vector<Passage>> components) {
    return GaussDiagram(std::move(name), std::move(components));
}

GaussDiagram GaussDiagram::parse(std::string_view text) {
    auto links = parse_links(text, true);
    if (links.size() != 1)
        throw ParseError("expected exactly one link, found " + std::to_string(links.size()));
    return links.front();
}

int GaussDiagram::total_passages() const {
    int total = 0;
    for (const auto& comp : components_) total += static_cast<int>(comp.size());
    return total;
}

int GaussDiagram::crossing_sign(int crossing_id) const {
    auto it = signs_.find(crossing_id);
    if (it == signs_.end())
        throw std::invalid_argument("unknown crossing id " + std::to_string(crossing_id));
    return it->second;
}

const CrossingEnds& GaussDiagram::ends(int crossing_id) const {
    auto it = ends_.find(crossing_id);
    if (it == ends_.end())
        throw std::invalid_argument("unknown crossing id " + std::to_string(crossing_id));
    return it->second;
}

std::pair<int, int> GaussDiagram::crossing_counts() const {
    int pos = 0, neg = 0;
    for (const auto& [id, sign] : signs_) (sign > 0 ? pos : neg)++;
    return {pos, neg};
}

int GaussDiagram::writhe() const {
    auto [p, n] = crossing_counts();
    return p - n;
}

int GaussDiagram::semiarc_component(int semiarc) const {
    if (semiarc < 0 || semiarc >= semiarc_count_)
        throw std::invalid_argument("semiarc id out of range");
    int c = static_cast<int>(semiarc_base_.size()) - 1;
    while (semiarc_base_[c] > semiarc) --c;
    return c;
}

bool GaussDiagram::semiarc_is_closed(int semiarc) const {
    return components_[semiarc_component(semiarc)].empty();
}

GaussDiagram GaussDiagram::mirror() const {
    auto comps = components_;
    for (auto& comp : comps)
        for (auto& p : comp) {
            p.role = p.role == Role::Over ? Role::Under : Role::Over;
            p.sign = -p.sign;
        }
    return GaussDiagram(name_, std::move(comps));
}

GaussDiagram GaussDiagram::reversed() const {
    auto comps = components_;
    for (auto& comp : comps) std::reverse(comp.begin(), comp.end());
    return GaussDiagram(name_, std::move(comps));
}

GaussDiagram GaussDiagram::reversed(int component) const {
    if (component < 0 || component >= component_count())
        throw std::invalid_argument("unknown component " + std::to_string(component));
    auto comps = components_;
    std::reverse(comps[component].begin(), comps[component].end());
    return GaussDiagram(name_, std::move(comps));
}

GaussDiagram GaussDiagram::rotated(int component, int offset) const {
    if (component < 0 || component >= component_count())
        throw std::invalid_argument("unknown component " + std::to_string(component));
    auto comps = components_;
    auto& comp = comps[component];
    if (!comp.empty()) {
        const int k = static_cast<int>(comp.size());
        std::rotate(comp.begin(), comp.begin() + ((offset % k) + k) % k, comp.end());
    }
    return GaussDiagram(name_, std::move(comps));
}

GaussDiagram GaussDiagram::relabeled() const {
    std::map<int, int> id_map;
    int next = 1;
    for (const auto& comp : components_)
        for (const auto& p : comp)
            if (id_map.emplace(p.crossing, next).second) ++next;
    return relabeled(id_map);
}

GaussDiagram GaussDiagram::relabeled(const std::map<int, int>& id_map) const {
    auto comps = components_;
    for (auto& comp : comps)
        for (auto& p : comp) {
            auto it = id_map.find(p.crossing);
            if (it == id_map.end())
                throw std::invalid_argument("relabeling misses crossing " +
                                            std::to_string(p.crossing));
            p.crossing = it->second;
        }
    return GaussDiagram(name_, std::move(comps));
}

GaussDiagram GaussDiagram::renamed(std::string new_name) const {
    return GaussDiagram(std::move(new_name), components_);
}

GaussDiagram GaussDiagram::with_kink(int semiarc, int sign, KinkVariant variant) const {
    if (sign != 1 && sign != -1) throw std::invalid_argument("kink sign must be +1 or -1");
    const int c = semiarc_component(semiarc);
    const int j = semiarc - semiarc_base_[c];
    const int id = max_crossing_id() + 1;
    Passage over{id, Role::Over, sign};
    Passage under{id, Role::Under, sign};
    auto comps = components_;
    auto& comp = comps[c];
    auto at = comp.begin() + (comp.empty() ? 0 : j);
    if (variant == KinkVariant::OverFirst)
        comp.insert(at, {over, under});
    else
        comp.insert(at, {under, over});
    return GaussDiagram(name_, std::move(comps));
}

GaussDiagram GaussDiagram::with_poke(int arc_over, int arc_under, int sign) const {
    if (sign != 1 && sign != -1) throw std::invalid_argument("poke sign must be +1 or -1");
    const int ca = semiarc_component(arc_over);
    const int ja = arc_over - semiarc_base_[ca];
    const int cb = semiarc_component(arc_under);
    const int jb = arc_under - semiarc_base_[cb];
    const int k = max_crossing_id() + 1;
    const int l = max_crossing_id() + 2;

    // over strand meets k then l; under strand meets them in reverse order
    std::vector<Passage> over_pair = {{k, Role::Over, sign}, {l, Role::Over, -sign}};
    std::vector<Passage> under_pair = {{l, Role::Under, -sign}, {k, Role::Under, sign}};

    // insert at descending positions so earlier indices stay valid; on the
    // same position the under pair goes in first, which leaves the over pair
    // ahead of it in the final sequence (the strand pokes over itself)
    struct Insertion {
        int comp, pos, priority;
        const std::vector<Passage>* passages;
    };
    std::vector<Insertion> plan = {{ca, ja, 1, &over_pair}, {cb, jb, 0, &under_pair}};
    std::sort(plan.begin(), plan.end(), [](const Insertion& a, const Insertion& b) {
        return a.pos != b.pos ? a.pos > b.pos : a.priority < b.priority;
    });

    auto comps = components_;
    for (const auto& ins : plan) {
        auto& comp = comps[ins.comp];
        auto at = comp.begin() + (comp.empty() ? 0 : ins.pos);
        comp.insert(at, ins.passages->begin(), ins.passages->end());
    }
    return GaussDiagram(name_, std::move(comps));
}

GaussDiagram GaussDiagram::connect_sum(const GaussDiagram& a, const GaussDiagram& b,
                                       int basepoint_a, int basepoint_b) {
    if (a.component_count() != 1 || b.component_count() != 1)
        throw std::invalid_argument("connected sum is defined for knots (one component each)");
    std::map<int, int> id_map;
    int next = a.max_crossing_id() + 1;
    for (const auto& p : b.components_[0])
        if (id_map.emplace(p.crossing, next).second) ++next;

    auto splice_index = [](const std::vector<Passage>& comp, int at) {
        if (comp.empty()) return 0;
        const int k = static_cast<int>(comp.size());
        return ((at % k) + k) % k;
    };
    std::vector<Passage> merged;
    const auto& ca = a.components_[0];
    const auto& cb = b.components_[0];
    const int ia = splice_index(ca, basepoint_a);
    const int ib = splice_index(cb, basepoint_b);
    merged.insert(merged.end(), ca.begin(), ca.begin() + ia);
    for (size_t i = 0; i < cb.size(); ++i) {
        Passage p = cb[(ib + i) % cb.size()];
        p.crossing = id_map.at(p.crossing);
        merged.push_back(p);
    }
    merged.insert(merged.end(), ca.begin() + ia, ca.end());
    return GaussDiagram(a.name_ + "#" + b.name_, {std::move(merged)});
}

std::string GaussDiagram::format() const {
    std::string out = "link " + name_ + "\n";
    for (const auto& comp : components_) {
        out += "component:";
        for (const auto& p : comp) out += " " + passage_text(p);
        out += "\n";
    }
    return out;
}

std::vector<GaussDiagram> parse_corpus(std::string_view text) {
    return parse_links(text, false);
}

std::vector<GaussDiagram> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open link file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_corpus(buf.str());
}

}  // namespace bvb
