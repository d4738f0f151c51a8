#include <filesystem>
#include <fstream>
#include <sstream>

#include "bvb/bracket.hpp"
#include "bvb/errors.hpp"

namespace bvb {

namespace {

struct FileLine {
    int number;
    std::string text;
};

std::vector<FileLine> significant_lines(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::vector<FileLine> out;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream probe(raw);
        std::string first;
        if (probe >> first) out.push_back({number, raw});
    }
    return out;
}

std::string block_text(CoeffTable t) {
    static const char* names[] = {"A", "B", "V", "C", "D", "U"};
    return names[static_cast<int>(t)];
}

}  // namespace

BracketFileData parse_bracket_file(std::string_view text, const std::string& base_dir) {
    const auto lines = significant_lines(text);
    size_t pos = 0;

    std::optional<Ring> ring;
    std::optional<Biquandle> biquandle;
    std::string biquandle_ref;
    std::optional<RingElement> delta, w;
    std::optional<std::vector<RingElement>> tables[6];

    auto at = [&](size_t i) -> const FileLine& {
        if (i >= lines.size()) throw ParseError("unexpected end of bracket file");
        return lines[i];
    };
    auto fail = [](const FileLine& line, const std::string& msg) -> void {
        throw ParseError("line " + std::to_string(line.number) + ": " + msg);
    };

    while (pos < lines.size()) {
        const FileLine& line = lines[pos];
        std::istringstream ls(line.text);
        std::string head;
        ls >> head;
        std::string rest;
        std::getline(ls, rest);
        if (auto b = rest.find_first_not_of(" \t"); b != std::string::npos)
            rest = rest.substr(b, rest.find_last_not_of(" \t") - b + 1);
        else
            rest.clear();

        if (head == "ring") {
            ring = Ring::parse(rest);
            ++pos;
        } else if (head == "biquandle") {
            if (rest.empty()) fail(line, "biquandle needs a file path or 'inline'");
            if (rest == "inline") {
                // the inline body is a size line plus that many table rows
                ++pos;
                std::istringstream size_line(at(pos).text);
                int n = 0;
                if (!(size_line >> n) || n <= 0) fail(at(pos), "bad biquandle size");
                if (pos + n >= lines.size()) fail(line, "inline biquandle body is truncated");
                std::string body = at(pos).text + "\n";
                for (int i = 1; i <= n; ++i) body += at(pos + i).text + "\n";
                biquandle = Biquandle::parse(body);
                pos += static_cast<size_t>(n) + 1;
            } else {
                std::filesystem::path p(rest);
                if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
                biquandle = Biquandle::load(p.string());
                biquandle_ref = rest;
                ++pos;
            }
        } else if (head == "delta" || head == "w") {
            if (!ring) fail(line, "'" + head + "' must come after the ring line");
            (head == "delta" ? delta : w) = ring->parse_element(rest);
            ++pos;
        } else if (head.size() == 2 && head[1] == ':' && std::string("ABVCDU").find(head[0]) !=
                                                             std::string::npos) {
            if (!ring) fail(line, "coefficient blocks must come after the ring line");
            if (!biquandle) fail(line, "coefficient blocks must come after the biquandle line");
            if (!rest.empty()) fail(line, "unexpected text after '" + head + "'");
            const int n = biquandle->size();
            std::vector<RingElement> table;
            table.reserve(static_cast<size_t>(n) * n);
            for (int row = 0; row < n; ++row) {
                ++pos;
                std::istringstream rs(at(pos).text);
                std::string token;
                int count = 0;
                while (rs >> token) {
                    table.push_back(ring->parse_element(token));
                    ++count;
                }
                if (count != n)
                    fail(at(pos), "expected " + std::to_string(n) + " elements, found " +
                                      std::to_string(count));
            }
            const auto idx = std::string("ABVCDU").find(head[0]);
            if (tables[idx]) fail(line, "duplicate block '" + head + "'");
            tables[idx] = std::move(table);
            ++pos;
        } else {
            fail(line, "unexpected line '" + head + "'");
        }
    }

    if (!ring) throw ParseError("bracket file is missing the ring line");
    if (!biquandle) throw ParseError("bracket file is missing the biquandle line");
    if (!delta) throw ParseError("bracket file is missing delta");
    BracketFileData data{*ring, biquandle, biquandle_ref, tables[0], tables[1], tables[2],
                         tables[3], tables[4], tables[5], delta, w};
    return data;
}

VirtualBracket assemble_bracket(const BracketFileData& data) {
    if (!data.biquandle) throw std::invalid_argument("bracket data has no biquandle");
    if (!data.a || !data.b || !data.v)
        throw ParseError("bracket file is missing one of the A, B, V blocks");
    if (!data.delta) throw ParseError("bracket file is missing delta");
    const int given = int(data.c.has_value()) + int(data.d.has_value()) + int(data.u.has_value());
    if (given != 0 && given != 3)
        throw ParseError("blocks C, D, U must be given together or all omitted");
    if (given == 0) {
        auto vb = VirtualBracket::derive(*data.biquandle, data.ring, *data.a, *data.b, *data.v,
                                         *data.delta);
        if (data.w && *data.w != vb.w())
            throw BracketAxiomError("stored w disagrees with derived w",
                                    {{"kink.pos", -1, -1, -1, "stored and derived w differ"}});
        return vb;
    }
    return VirtualBracket::create(*data.biquandle, data.ring, *data.a, *data.b, *data.v, *data.c,
                                  *data.d, *data.u, *data.delta, data.w);
}

VirtualBracket load_bracket(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open bracket file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return assemble_bracket(
        parse_bracket_file(buf.str(), std::filesystem::path(path).parent_path().string()));
}

std::string VirtualBracket::format(const std::string& biquandle_ref) const {
    std::string out = "ring " + ring_.describe() + "\n";
    if (biquandle_ref.empty())
        out += "biquandle inline\n" + bq_.format();
    else
        out += "biquandle " + biquandle_ref + "\n";
    out += "delta " + ring_.format_element(delta_) + "\n";
    out += "w " + ring_.format_element(w_) + "\n";
    for (CoeffTable t : {CoeffTable::A, CoeffTable::B, CoeffTable::V, CoeffTable::C,
                         CoeffTable::D, CoeffTable::U}) {
        out += block_text(t) + ":\n";
        for (int x = 0; x < n(); ++x) {
            for (int y = 0; y < n(); ++y)
                out += (y ? " " : "") + ring_.format_element(coeff(t, x, y));
            out += "\n";
        }
    }
    return out;
}

}  // namespace bvb
