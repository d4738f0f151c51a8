#include "bvb/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

#include "bvb/statesum.hpp"

namespace bvb {

SymbolicExpression symbolic_expression(const GaussDiagram& d,
                                       const std::vector<std::string>& labels) {
    if (static_cast<int>(labels.size()) != d.semiarc_count())
        throw std::invalid_argument("labels must cover every semiarc");
    SymbolicExpression expr;
    const auto [pos, neg] = d.crossing_counts();
    expr.w_power = neg - pos;

    const std::uint64_t total = state_count(d);
    expr.terms.reserve(total);
    const auto& ids = d.crossing_ids();
    for (std::uint64_t index = 0; index < total; ++index) {
        const State s = decode_state(d, index);
        SymbolicTerm term;
        term.factors.reserve(ids.size());
        for (size_t i = 0; i < ids.size(); ++i) {
            const CrossingEnds& e = d.ends(ids[i]);
            const bool positive = d.crossing_sign(ids[i]) > 0;
            const char* letters = positive ? "ABV" : "CDU";
            const int xa = positive ? e.u_in : e.u_out;
            const int ya = positive ? e.o_out : e.o_in;
            term.factors.push_back(
                {letters[static_cast<int>(s[i])], labels[xa], labels[ya]});
        }
        term.delta_power = loop_count(d, s);
        expr.terms.push_back(std::move(term));
    }
    return expr;
}

std::vector<std::string> generator_labels(const GaussDiagram& d) {
    std::vector<std::string> labels;
    labels.reserve(d.semiarc_count());
    for (int i = 0; i < d.semiarc_count(); ++i) labels.push_back("x" + std::to_string(i));
    return labels;
}

std::vector<std::string> coloring_labels(const Coloring& f) {
    std::vector<std::string> labels;
    labels.reserve(f.colors.size());
    for (int c : f.colors) labels.push_back(std::to_string(c));
    return labels;
}

RingElement evaluate_symbolic(const SymbolicExpression& expr, const VirtualBracket& vb,
                              const std::map<std::string, int>& assignment) {
    const Ring& ring = vb.ring();
    auto element_of = [&](const std::string& token) {
        auto it = assignment.find(token);
        if (it == assignment.end())
            throw std::invalid_argument("no assignment for label '" + token + "'");
        if (it->second < 0 || it->second >= vb.n())
            throw std::invalid_argument("label '" + token + "' maps outside the biquandle");
        return it->second;
    };
    auto table_of = [](char letter) {
        switch (letter) {
            case 'A': return CoeffTable::A;
            case 'B': return CoeffTable::B;
            case 'V': return CoeffTable::V;
            case 'C': return CoeffTable::C;
            case 'D': return CoeffTable::D;
            case 'U': return CoeffTable::U;
            default: throw std::invalid_argument("unknown coefficient letter");
        }
    };
    RingElement acc = ring.zero();
    for (const auto& term : expr.terms) {
        RingElement prod = ring.pow(vb.delta(), term.delta_power);
        for (const auto& f : term.factors)
            prod = ring.mul(prod, vb.coeff(table_of(f.letter), element_of(f.x), element_of(f.y)));
        acc = ring.add(acc, prod);
    }
    return ring.mul(ring.pow(vb.w(), expr.w_power), acc);
}

std::string format_symbolic(const SymbolicExpression& expr) {
    std::map<int, std::vector<std::string>, std::greater<int>> groups;
    for (const auto& term : expr.terms) {
        std::string text;
        for (const auto& f : term.factors)
            text += std::string(1, f.letter) + "[" + f.x + "," + f.y + "]";
        if (text.empty()) text = "1";
        groups[term.delta_power].push_back(std::move(text));
    }
    std::string out;
    for (const auto& [power, terms] : groups) {
        if (!out.empty()) out += " + ";
        out += "(";
        for (size_t i = 0; i < terms.size(); ++i) {
            if (i) out += " + ";
            out += terms[i];
        }
        out += ")";
        if (power == 1)
            out += "d";
        else if (power != 0)
            out += "d^" + std::to_string(power);
    }
    if (out.empty()) out = "0";
    if (expr.w_power != 0) out = "w^" + std::to_string(expr.w_power) + " * (" + out + ")";
    return out;
}

}  // namespace bvb
