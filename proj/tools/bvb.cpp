// command-line front end: verification, coloring counts, invariant values,
// bracket search and randomized move checking over link corpora
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bvb/bracket.hpp"
#include "bvb/coloring.hpp"
#include "bvb/diagram.hpp"
#include "bvb/errors.hpp"
#include "bvb/search.hpp"
#include "bvb/statesum.hpp"
#include "bvb/symbolic.hpp"

using nlohmann::json;
using namespace bvb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw ParseError(std::string("cannot open ") + what + " file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void warn_ring_size(const Ring& ring) {
    if (ring.size() > Ring::size_warning_threshold)
        std::cerr << "warning: ring " << ring.describe() << " has " << ring.size()
                  << " elements; unit scans will be slow\n";
}

struct Options {
    bool machine = false;
    int parallel = 1;
};

void print_biquandle_violations(const std::vector<BiquandleViolation>& violations) {
    for (const auto& v : violations) {
        std::cout << "violation " << v.axiom;
        if (v.x >= 0) std::cout << " x=" << v.x;
        if (v.y >= 0) std::cout << " y=" << v.y;
        if (v.z >= 0) std::cout << " z=" << v.z;
        std::cout << ": " << v.detail << "\n";
    }
}

void print_bracket_violations(const std::vector<BracketViolation>& violations) {
    for (const auto& v : violations) {
        std::cout << "violation " << v.axiom;
        if (v.x >= 0) std::cout << " x=" << v.x;
        if (v.y >= 0) std::cout << " y=" << v.y;
        if (v.z >= 0) std::cout << " z=" << v.z;
        std::cout << ": " << v.detail << "\n";
    }
}

int cmd_biquandle_verify(const std::string& path, const Options& opt) {
    auto tables = parse_biquandle_tables(slurp(path, "biquandle"));
    auto violations = verify_biquandle(tables);
    if (opt.machine) {
        json out = {{"file", path}, {"size", tables.n}, {"violations", json::array()}};
        for (const auto& v : violations)
            out["violations"].push_back(
                {{"axiom", v.axiom}, {"x", v.x}, {"y", v.y}, {"z", v.z}, {"detail", v.detail}});
        std::cout << out.dump() << "\n";
    } else if (violations.empty()) {
        std::cout << "biquandle ok: " << tables.n << " elements, all axioms hold\n";
    } else {
        print_biquandle_violations(violations);
    }
    return violations.empty() ? kExitOk : kExitVerification;
}

VirtualBracket load_checked_bracket(const std::string& bracket_path,
                                    const std::string& biquandle_path) {
    VirtualBracket vb = load_bracket(bracket_path);
    if (!biquandle_path.empty()) {
        Biquandle given = Biquandle::load(biquandle_path);
        if (!(given == vb.biquandle()))
            throw ParseError("bracket file '" + bracket_path +
                             "' references a different biquandle than '" + biquandle_path +
                             "'");
    }
    return vb;
}

int cmd_bracket_verify(const std::string& path, const Options& opt) {
    const std::string dir = std::filesystem::path(path).parent_path().string();
    BracketFileData data = parse_bracket_file(slurp(path, "bracket"), dir);
    warn_ring_size(data.ring);
    std::vector<BracketViolation> violations;
    std::string w_text;
    try {
        VirtualBracket vb = assemble_bracket(data);
        violations = vb.verify();
        w_text = data.ring.format_element(vb.w());
    } catch (const BracketAxiomError& e) {
        violations = e.violations();
    }
    if (opt.machine) {
        json out = {{"file", path}, {"ring", data.ring.describe()},
                    {"violations", json::array()}};
        if (!w_text.empty()) out["w"] = w_text;
        for (const auto& v : violations)
            out["violations"].push_back(
                {{"axiom", v.axiom}, {"x", v.x}, {"y", v.y}, {"z", v.z}, {"detail", v.detail}});
        std::cout << out.dump() << "\n";
    } else if (violations.empty()) {
        std::cout << "bracket ok over " << data.ring.describe() << ", w = " << w_text << "\n";
    } else {
        print_bracket_violations(violations);
    }
    return violations.empty() ? kExitOk : kExitVerification;
}

int cmd_bracket_derive(const std::string& path) {
    const std::string dir = std::filesystem::path(path).parent_path().string();
    BracketFileData data = parse_bracket_file(slurp(path, "bracket"), dir);
    VirtualBracket vb = assemble_bracket(data);
    std::cout << vb.format(data.biquandle_ref);
    return kExitOk;
}

int cmd_bracket_search(const std::string& biquandle_path, const std::string& ring_text,
                       const std::string& template_path, const std::string& delta_text,
                       std::uint64_t resume, std::uint64_t stop, std::uint64_t guard,
                       bool force, const Options& opt) {
    Biquandle bq = Biquandle::load(biquandle_path);
    Ring ring = Ring::parse(ring_text);
    warn_ring_size(ring);
    BracketSearchOptions options;
    options.resume = resume;
    if (stop) options.stop = stop;
    options.guard = guard;
    options.force = force;
    options.threads = opt.parallel;
    if (!template_path.empty()) {
        const std::string dir = std::filesystem::path(template_path).parent_path().string();
        BracketFileData data = parse_bracket_file(slurp(template_path, "template"), dir);
        if (!(data.ring == ring))
            throw ParseError("template ring does not match the requested ring");
        if (data.biquandle && !(*data.biquandle == bq))
            throw ParseError("template biquandle does not match the requested biquandle");
        auto freeze = [](const std::optional<std::vector<RingElement>>& t) {
            std::vector<std::optional<RingElement>> mask;
            if (t) mask.assign(t->begin(), t->end());
            return mask;
        };
        options.fix_a = freeze(data.a);
        options.fix_b = freeze(data.b);
        options.fix_v = freeze(data.v);
        options.delta = data.delta;
    }
    if (!delta_text.empty()) options.delta = ring.parse_element(delta_text);

    std::cerr << "search space: " << bracket_search_space(bq, ring, options)
              << " candidates\n";
    auto hits = search_brackets(bq, ring, options);
    for (const auto& hit : hits) {
        if (opt.machine) {
            json out = {{"index", hit.index}, {"ring", ring.describe()},
                        {"w", ring.format_element(hit.bracket.w())},
                        {"delta", ring.format_element(hit.bracket.delta())},
                        {"text", hit.bracket.format()}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "# candidate " << hit.index << "\n" << hit.bracket.format() << "\n";
        }
    }
    std::cerr << "found " << hits.size() << " bracket structures\n";
    return kExitOk;
}

std::vector<GaussDiagram> load_links(const std::string& path, const std::string& only) {
    auto links = load_corpus(path);
    if (only.empty()) return links;
    for (auto& d : links)
        if (d.name() == only) return {d};
    throw ParseError("no link named '" + only + "' in " + path);
}

int cmd_color(const std::string& mode, const std::string& diagram_path,
              const std::string& biquandle_path, const std::string& only,
              const Options& opt) {
    Biquandle bq = Biquandle::load(biquandle_path);
    for (const auto& d : load_links(diagram_path, only)) {
        auto colorings = enumerate_colorings(d, bq);
        if (opt.machine) {
            json out = {{"name", d.name()}, {"biquandle", biquandle_path},
                        {"count", colorings.size()}};
            if (mode == "list") {
                out["colorings"] = json::array();
                for (const auto& f : colorings) out["colorings"].push_back(f.colors);
            }
            std::cout << out.dump() << "\n";
        } else {
            std::cout << d.name() << ": " << colorings.size() << " colorings\n";
            if (mode == "list")
                for (const auto& f : colorings) {
                    std::cout << " ";
                    for (size_t s = 0; s < f.colors.size(); ++s)
                        std::cout << " s" << s << "=" << f.colors[s];
                    std::cout << "\n";
                }
        }
    }
    return kExitOk;
}

json multiset_json(const InvariantValue& value, const Ring& ring) {
    json out = json::array();
    for (const auto& [element, mult] : value.counts())
        out.push_back({{"element", ring.format_element(element)}, {"multiplicity", mult}});
    return out;
}

int cmd_invariant(const std::string& diagram_path, const std::string& biquandle_path,
                  const std::string& bracket_path, const std::string& only,
                  bool per_coloring, const Options& opt) {
    VirtualBracket vb = load_checked_bracket(bracket_path, biquandle_path);
    const Ring& ring = vb.ring();
    for (const auto& d : load_links(diagram_path, only)) {
        auto colorings = enumerate_colorings(d, vb.biquandle());
        InvariantValue value;
        std::vector<RingElement> values;
        for (const auto& f : colorings) {
            values.push_back(state_sum(vb, d, f, opt.parallel));
            value.add(values.back());
        }
        if (opt.machine) {
            json out = {{"name", d.name()},
                        {"ring", ring.describe()},
                        {"biquandle", biquandle_path},
                        {"bracket", bracket_path},
                        {"colorings", colorings.size()},
                        {"multiset", multiset_json(value, ring)},
                        {"polynomial", format_polynomial(value, ring)}};
            if (per_coloring) {
                out["per_coloring"] = json::array();
                for (size_t i = 0; i < colorings.size(); ++i)
                    out["per_coloring"].push_back(
                        {{"colors", colorings[i].colors},
                         {"value", ring.format_element(values[i])}});
            }
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "link " << d.name() << "\n"
                      << "  ring: " << ring.describe() << "\n"
                      << "  biquandle: " << biquandle_path << "\n"
                      << "  bracket: " << bracket_path << "\n"
                      << "  colorings: " << colorings.size() << "\n"
                      << "  multiset: " << value.machine_encoding(ring) << "\n"
                      << "  polynomial: " << format_polynomial(value, ring) << "\n";
            if (per_coloring)
                for (size_t i = 0; i < colorings.size(); ++i) {
                    std::cout << "  coloring";
                    for (size_t s = 0; s < colorings[i].colors.size(); ++s)
                        std::cout << " s" << s << "=" << colorings[i].colors[s];
                    std::cout << ": " << ring.format_element(values[i]) << "\n";
                }
        }
    }
    return kExitOk;
}

int cmd_table(const std::string& corpus_path, const std::string& biquandle_path,
              const std::string& bracket_path, const Options& opt) {
    VirtualBracket vb = load_checked_bracket(bracket_path, biquandle_path);
    const Ring& ring = vb.ring();
    std::map<std::string, std::pair<InvariantValue, std::vector<std::string>>> groups;
    for (const auto& d : load_corpus(corpus_path)) {
        InvariantValue value = invariant_multiset(vb, d, opt.parallel);
        auto& group = groups[value.machine_encoding(ring)];
        group.first = value;
        group.second.push_back(d.name());
    }
    for (const auto& [key, group] : groups) {
        if (opt.machine) {
            json out = {{"multiset", multiset_json(group.first, ring)},
                        {"polynomial", format_polynomial(group.first, ring)},
                        {"links", group.second}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << format_polynomial(group.first, ring) << "  [" << key << "]\n";
            for (const auto& name : group.second) std::cout << "  " << name << "\n";
        }
    }
    return kExitOk;
}

int cmd_mutate_check(const std::string& corpus_path, const std::string& biquandle_path,
                     const std::string& bracket_path, int count, std::uint64_t seed,
                     const Options& opt) {
    VirtualBracket vb = load_checked_bracket(bracket_path, biquandle_path);
    auto links = load_corpus(corpus_path);
    if (links.empty()) throw ParseError("empty corpus");
    std::mt19937_64 rng(seed);
    std::map<std::string, InvariantValue> base;
    int failures = 0;
    for (int i = 0; i < count; ++i) {
        const GaussDiagram& d = links[rng() % links.size()];
        if (!base.count(d.name())) base[d.name()] = invariant_multiset(vb, d, opt.parallel);
        GaussDiagram mutated = d;
        const int moves = 1 + static_cast<int>(rng() % 2);
        std::string trace;
        for (int m = 0; m < moves; ++m) {
            const int sign = rng() % 2 ? +1 : -1;
            if (rng() % 2) {
                const int arc = static_cast<int>(rng() % mutated.semiarc_count());
                const auto variant =
                    rng() % 2 ? KinkVariant::OverFirst : KinkVariant::UnderFirst;
                mutated = mutated.with_kink(arc, sign, variant);
                trace += " kink(arc=" + std::to_string(arc) +
                         ", sign=" + std::to_string(sign) + ")";
            } else {
                const int a = static_cast<int>(rng() % mutated.semiarc_count());
                const int b = static_cast<int>(rng() % mutated.semiarc_count());
                mutated = mutated.with_poke(a, b, sign);
                trace += " poke(" + std::to_string(a) + "," + std::to_string(b) +
                         ", sign=" + std::to_string(sign) + ")";
            }
        }
        if (!(invariant_multiset(vb, mutated, opt.parallel) == base[d.name()])) {
            ++failures;
            std::cout << "FAIL " << d.name() << ":" << trace << "\n";
        }
    }
    if (opt.machine) {
        std::cout << json{{"checks", count}, {"failures", failures}}.dump() << "\n";
    } else {
        std::cout << "checked " << count << " mutated diagrams, " << failures
                  << " invariant mismatches\n";
    }
    return failures == 0 ? kExitOk : kExitVerification;
}

int cmd_symbolic(const std::string& diagram_path, const std::string& only,
                 const Options& opt) {
    for (const auto& d : load_links(diagram_path, only)) {
        auto expr = symbolic_expression(d, generator_labels(d));
        if (opt.machine) {
            json terms = json::array();
            for (const auto& term : expr.terms) {
                json factors = json::array();
                for (const auto& f : term.factors)
                    factors.push_back(
                        {{"letter", std::string(1, f.letter)}, {"x", f.x}, {"y", f.y}});
                terms.push_back({{"factors", factors}, {"delta_power", term.delta_power}});
            }
            std::cout << json{{"name", d.name()},
                              {"w_power", expr.w_power},
                              {"terms", terms},
                              {"text", format_symbolic(expr)}}
                             .dump()
                      << "\n";
        } else {
            std::cout << d.name() << " (" << expr.terms.size()
                      << " states): " << format_symbolic(expr) << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"biquandle virtual bracket toolkit"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("BVB_THREADS")) opt.parallel = std::max(1, atoi(env));
    app.add_flag("--machine", opt.machine, "emit one JSON record per result line");
    app.add_option("--parallel", opt.parallel, "worker threads for heavy computations")
        ->check(CLI::PositiveNumber);

    std::string path_a, path_b, path_c, only, template_path, delta_text;
    bool per_coloring = false, force = false;
    std::uint64_t resume = 0, stop = 0, guard = std::uint64_t{1} << 24, seed = 1;
    int count = 50;

    auto* biquandle = app.add_subcommand("biquandle", "biquandle table operations");
    auto* bq_verify = biquandle->add_subcommand("verify", "check the axioms of a table file");
    bq_verify->add_option("file", path_a)->required();

    auto* bracket = app.add_subcommand("bracket", "bracket structure operations");
    auto* br_verify = bracket->add_subcommand("verify", "check the axioms of a bracket file");
    br_verify->add_option("file", path_a)->required();
    auto* br_derive =
        bracket->add_subcommand("derive", "complete a bracket file (C, D, U and w)");
    br_derive->add_option("file", path_a)->required();
    auto* br_search = bracket->add_subcommand("search", "enumerate bracket structures");
    br_search->add_option("biquandle", path_a)->required();
    br_search->add_option("ring", path_b, "ring description, e.g. 'Z 5'")->required();
    br_search->add_option("--template", template_path,
                          "bracket file whose present blocks freeze entries");
    br_search->add_option("--delta", delta_text, "freeze delta to this element");
    br_search->add_option("--resume", resume, "first candidate index");
    br_search->add_option("--stop", stop, "candidate index to stop before");
    br_search->add_option("--guard", guard, "refuse larger candidate spaces");
    br_search->add_flag("--force", force, "run despite the guard");

    auto* color = app.add_subcommand("color", "coloring operations");
    auto* color_count = color->add_subcommand("count", "number of colorings");
    color_count->add_option("diagram", path_a)->required();
    color_count->add_option("biquandle", path_b)->required();
    color_count->add_option("--link", only, "restrict to one named link");
    auto* color_list = color->add_subcommand("list", "list all colorings");
    color_list->add_option("diagram", path_a)->required();
    color_list->add_option("biquandle", path_b)->required();
    color_list->add_option("--link", only, "restrict to one named link");

    auto* invariant = app.add_subcommand("invariant", "bracket invariant of links");
    invariant->add_option("diagram", path_a)->required();
    invariant->add_option("biquandle", path_b)->required();
    invariant->add_option("bracket", path_c)->required();
    invariant->add_option("--link", only, "restrict to one named link");
    invariant->add_flag("--per-coloring", per_coloring, "also print each coloring's value");

    auto* table = app.add_subcommand("table", "group corpus links by invariant value");
    table->add_option("corpus", path_a)->required();
    table->add_option("biquandle", path_b)->required();
    table->add_option("bracket", path_c)->required();

    auto* mutate = app.add_subcommand("mutate", "diagram move operations");
    auto* mutate_check =
        mutate->add_subcommand("check", "random curl/poke moves must preserve the invariant");
    mutate_check->add_option("corpus", path_a)->required();
    mutate_check->add_option("biquandle", path_b)->required();
    mutate_check->add_option("bracket", path_c)->required();
    mutate_check->add_option("--count", count, "number of mutated diagrams");
    mutate_check->add_option("--seed", seed, "random seed");

    auto* symbolic = app.add_subcommand("symbolic", "unevaluated state sum of links");
    symbolic->add_option("diagram", path_a)->required();
    symbolic->add_option("--link", only, "restrict to one named link");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (bq_verify->parsed()) return cmd_biquandle_verify(path_a, opt);
        if (br_verify->parsed()) return cmd_bracket_verify(path_a, opt);
        if (br_derive->parsed()) return cmd_bracket_derive(path_a);
        if (br_search->parsed())
            return cmd_bracket_search(path_a, path_b, template_path, delta_text, resume, stop,
                                      guard, force, opt);
        if (color_count->parsed()) return cmd_color("count", path_a, path_b, only, opt);
        if (color_list->parsed()) return cmd_color("list", path_a, path_b, only, opt);
        if (invariant->parsed())
            return cmd_invariant(path_a, path_b, path_c, only, per_coloring, opt);
        if (table->parsed()) return cmd_table(path_a, path_b, path_c, opt);
        if (mutate_check->parsed())
            return cmd_mutate_check(path_a, path_b, path_c, count, seed, opt);
        if (symbolic->parsed()) return cmd_symbolic(path_a, only, opt);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const BiquandleAxiomError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const BracketAxiomError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
