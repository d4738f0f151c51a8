#include "bvb/biquandle.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "bvb/errors.hpp"

namespace bvb {

namespace {

void check_shape(const BiquandleTables& t) {
    if (t.n <= 0) throw std::invalid_argument("biquandle needs at least one element");
    const size_t nn = static_cast<size_t>(t.n) * t.n;
    if (t.under.size() != nn || t.over.size() != nn)
        throw std::invalid_argument("biquandle tables must be n x n");
    for (int v : t.under)
        if (v < 0 || v >= t.n) throw std::invalid_argument("under table entry out of range");
    for (int v : t.over)
        if (v < 0 || v >= t.n) throw std::invalid_argument("over table entry out of range");
}

std::string violation_summary(const std::vector<BiquandleViolation>& v) {
    std::string msg = "biquandle axioms fail (" + std::to_string(v.size()) + " violations";
    if (!v.empty()) msg += "; first: " + v.front().axiom + " " + v.front().detail;
    return msg + ")";
}

}  // namespace

std::vector<BiquandleViolation> verify_biquandle(const BiquandleTables& t) {
    check_shape(t);
    const int n = t.n;
    auto under = [&](int x, int y) { return t.under[x * n + y]; };
    auto over = [&](int x, int y) { return t.over[x * n + y]; };
    std::vector<BiquandleViolation> out;

    for (int x = 0; x < n; ++x)
        if (under(x, x) != over(x, x))
            out.push_back({"diagonal", x, -1, -1,
                           "under(x,x) = " + std::to_string(under(x, x)) +
                               " but over(x,x) = " + std::to_string(over(x, x))});

    for (int y = 0; y < n; ++y) {
        std::vector<int> seen_under(n, -1), seen_over(n, -1);
        for (int x = 0; x < n; ++x) {
            int zu = under(x, y);
            if (seen_under[zu] >= 0)
                out.push_back({"column.under", x, y, -1,
                               "rows " + std::to_string(seen_under[zu]) + " and " +
                                   std::to_string(x) + " of column " + std::to_string(y) +
                                   " both map to " + std::to_string(zu)});
            else
                seen_under[zu] = x;
            int zo = over(x, y);
            if (seen_over[zo] >= 0)
                out.push_back({"column.over", x, y, -1,
                               "rows " + std::to_string(seen_over[zo]) + " and " +
                                   std::to_string(x) + " of column " + std::to_string(y) +
                                   " both map to " + std::to_string(zo)});
            else
                seen_over[zo] = x;
        }
    }

    std::vector<int> seen_pair(static_cast<size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int image = over(y, x) * n + under(x, y);
            if (seen_pair[image] >= 0)
                out.push_back({"pair-map", x, y, -1,
                               "pairs (" + std::to_string(seen_pair[image] / n) + "," +
                                   std::to_string(seen_pair[image] % n) + ") and (" +
                                   std::to_string(x) + "," + std::to_string(y) +
                                   ") share an image"});
            else
                seen_pair[image] = x * n + y;
        }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int l1 = under(under(x, y), under(z, y));
                int r1 = under(under(x, z), over(y, z));
                if (l1 != r1)
                    out.push_back({"exchange.1", x, y, z,
                                   std::to_string(l1) + " != " + std::to_string(r1)});
                int l2 = over(under(x, y), under(z, y));
                int r2 = under(over(x, z), over(y, z));
                if (l2 != r2)
                    out.push_back({"exchange.2", x, y, z,
                                   std::to_string(l2) + " != " + std::to_string(r2)});
                int l3 = over(over(x, y), over(z, y));
                int r3 = over(over(x, z), under(y, z));
                if (l3 != r3)
                    out.push_back({"exchange.3", x, y, z,
                                   std::to_string(l3) + " != " + std::to_string(r3)});
            }
    return out;
}

BiquandleAxiomError::BiquandleAxiomError(const std::string& msg,
                                         std::vector<BiquandleViolation> violations)
    : std::runtime_error(msg), violations_(std::move(violations)) {}

Biquandle::Biquandle(BiquandleTables t) : tables_(std::move(t)) {
    const int n = tables_.n;
    under_inv_.assign(static_cast<size_t>(n) * n, -1);
    over_inv_.assign(static_cast<size_t>(n) * n, -1);
    s_inv_.assign(static_cast<size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            under_inv_[under(x, y) * n + y] = x;
            over_inv_[over(x, y) * n + y] = x;
            auto [u, v] = s_map(x, y);
            s_inv_[u * n + v] = x * n + y;
        }
}

Biquandle Biquandle::from_tables(BiquandleTables t) {
    auto violations = verify_biquandle(t);
    if (!violations.empty())
        throw BiquandleAxiomError(violation_summary(violations), std::move(violations));
    return Biquandle(std::move(t));
}

Biquandle Biquandle::from_matrix(const std::vector<std::vector<int>>& block, bool one_based) {
    const int n = static_cast<int>(block.size());
    BiquandleTables t;
    t.n = n;
    t.under.resize(static_cast<size_t>(n) * n);
    t.over.resize(static_cast<size_t>(n) * n);
    const int shift = one_based ? 1 : 0;
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(block[x].size()) != 2 * n)
            throw std::invalid_argument("block matrix row " + std::to_string(x + shift) +
                                        " must have 2n entries");
        for (int y = 0; y < n; ++y) {
            t.under[x * n + y] = block[x][y] - shift;
            t.over[x * n + y] = block[x][n + y] - shift;
        }
    }
    return from_tables(std::move(t));
}

Biquandle Biquandle::constant_action(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    if (n == 0) throw std::invalid_argument("empty permutation");
    for (int v : sigma)
        if (v < 0 || v >= n) throw std::invalid_argument("permutation entry out of range");
    BiquandleTables t;
    t.n = n;
    t.under.resize(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t.under[x * n + y] = sigma[x];
    t.over = t.under;
    return from_tables(std::move(t));
}

Biquandle Biquandle::alexander(int n, int t, int s) {
    if (n < 1) throw std::invalid_argument("alexander biquandle needs n >= 1");
    auto norm = [n](long long v) { return static_cast<int>(((v % n) + n) % n); };
    if (std::gcd(norm(t), n) != 1)
        throw std::invalid_argument("alexander biquandle requires t to be a unit mod n");
    if (std::gcd(norm(s), n) != 1)
        throw std::invalid_argument("alexander biquandle requires s to be a unit mod n");
    BiquandleTables tables;
    tables.n = n;
    tables.under.resize(static_cast<size_t>(n) * n);
    tables.over.resize(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            tables.under[x * n + y] = norm(static_cast<long long>(t) * x +
                                           static_cast<long long>(s - t) * y);
            tables.over[x * n + y] = norm(static_cast<long long>(s) * x);
        }
    return from_tables(std::move(tables));
}

Biquandle Biquandle::dihedral(int n) {
    if (n < 1) throw std::invalid_argument("dihedral quandle needs n >= 1");
    BiquandleTables t;
    t.n = n;
    t.under.resize(static_cast<size_t>(n) * n);
    t.over.resize(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            t.under[x * n + y] = ((2 * y - x) % n + n) % n;
            t.over[x * n + y] = x;
        }
    return from_tables(std::move(t));
}

std::pair<int, int> Biquandle::s_inv(int u, int v) const {
    int packed = s_inv_[u * tables_.n + v];
    return {packed / tables_.n, packed % tables_.n};
}

bool Biquandle::is_quandle() const {
    for (int x = 0; x < tables_.n; ++x)
        for (int y = 0; y < tables_.n; ++y)
            if (over(x, y) != x) return false;
    return true;
}

std::string Biquandle::format() const {
    std::string out = std::to_string(tables_.n) + "\n";
    for (int x = 0; x < tables_.n; ++x) {
        for (int y = 0; y < tables_.n; ++y)
            out += (y ? " " : "") + std::to_string(under(x, y) + 1);
        for (int y = 0; y < tables_.n; ++y)
            out += " " + std::to_string(over(x, y) + 1);
        out += "\n";
    }
    return out;
}

BiquandleTables parse_biquandle_tables(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::vector<std::pair<int, std::string>> lines;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream probe(raw);
        std::string first;
        if (probe >> first) lines.emplace_back(number, raw);
    }
    if (lines.empty()) throw ParseError("empty biquandle table");

    auto parse_row = [](const std::pair<int, std::string>& line, int count) {
        std::istringstream row(line.second);
        std::vector<int> out;
        int v;
        while (row >> v) out.push_back(v);
        if (!row.eof())
            throw ParseError("line " + std::to_string(line.first) + ": bad table entry");
        if (static_cast<int>(out.size()) != count)
            throw ParseError("line " + std::to_string(line.first) + ": expected " +
                             std::to_string(count) + " entries, found " +
                             std::to_string(out.size()));
        return out;
    };

    int n = parse_row(lines[0], 1)[0];
    if (n <= 0) throw ParseError("biquandle size must be positive");
    if (static_cast<int>(lines.size()) != n + 1)
        throw ParseError("expected " + std::to_string(n) + " table rows, found " +
                         std::to_string(lines.size() - 1));

    BiquandleTables t;
    t.n = n;
    t.under.resize(static_cast<size_t>(n) * n);
    t.over.resize(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        auto row = parse_row(lines[x + 1], 2 * n);
        for (int y = 0; y < 2 * n; ++y) {
            if (row[y] < 1 || row[y] > n)
                throw ParseError("line " + std::to_string(lines[x + 1].first) +
                                 ": entry " + std::to_string(row[y]) + " out of range 1.." +
                                 std::to_string(n));
            if (y < n)
                t.under[x * n + y] = row[y] - 1;
            else
                t.over[x * n + (y - n)] = row[y] - 1;
        }
    }
    return t;
}

Biquandle Biquandle::parse(std::string_view text) {
    return from_tables(parse_biquandle_tables(text));
}

Biquandle Biquandle::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open biquandle file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

}  // namespace bvb
