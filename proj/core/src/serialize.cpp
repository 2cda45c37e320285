#include "stratadiv/serialize.hpp"

#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

#include "stratadiv/errors.hpp"

namespace stratadiv {

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream ss;
    ss << r;
    return ss.str();
}

std::string monomial_str(const Monomial& m) {
    std::string out;
    for (const auto& [g, e] : m.factors()) {
        if (!out.empty()) out += "*";
        out += g.name();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace

std::string to_text(const TautExpr& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : e.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string ms = monomial_str(m);
        if (ms.empty()) {
            out += rational_str(mag);
        } else if (mag == 1) {
            out += ms;
        } else {
            out += rational_str(mag) + "*" + ms;
        }
    }
    return out;
}

namespace {

class ExprParser {
public:
    ExprParser(const std::string& text, Ambient amb) : s_(text), amb_(amb) {}

    TautExpr parse() {
        TautExpr out(amb_);
        skip_ws();
        bool first = true;
        while (pos_ < s_.size()) {
            Rational sign = 1;
            if (peek() == '+') {
                ++pos_;
            } else if (peek() == '-') {
                sign = -1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            skip_ws();
            auto [m, c] = parse_term();
            out.add_term(m, sign * c);
            skip_ws();
            first = false;
        }
        return out;
    }

private:
    char peek() const { return s_[pos_]; }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw InputError("parse error at position " + std::to_string(pos_) + ": " + why);
    }

    long parse_int() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected a number");
        return std::stol(s_.substr(start, pos_ - start));
    }

    std::pair<Monomial, Rational> parse_term() {
        Rational coeff = 1;
        Monomial m;
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            const char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                Rational v = parse_int();
                if (pos_ < s_.size() && peek() == '/') {
                    ++pos_;
                    v /= parse_int();
                }
                coeff *= v;
            } else if (std::isalpha(static_cast<unsigned char>(ch))) {
                auto [g, e] = parse_generator_power();
                m.times(g, e);
            } else {
                break;
            }
            saw_factor = true;
            skip_ws();
            if (pos_ < s_.size() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!saw_factor) fail("empty term");
        return {m, coeff};
    }

    std::pair<Generator, int> parse_generator_power() {
        Generator g = parse_generator();
        int e = 1;
        if (pos_ < s_.size() && peek() == '^') {
            ++pos_;
            e = static_cast<int>(parse_int());
        }
        return {g, e};
    }

    Generator parse_generator() {
        if (s_.compare(pos_, 5, "kappa") == 0) {
            pos_ += 5;
            return Generator::kappa(static_cast<int>(parse_int()));
        }
        const char ch = peek();
        ++pos_;
        if (ch == 'L') return Generator::lambda(static_cast<int>(parse_int()));
        if (ch == 'K') return Generator::point(static_cast<int>(parse_int()));
        if (ch == 'D') {
            // D12 (single-digit indices) or D1_12.
            const long v = parse_int();
            if (pos_ < s_.size() && peek() == '_') {
                ++pos_;
                return Generator::diagonal(static_cast<int>(v),
                                           static_cast<int>(parse_int()));
            }
            if (v < 10 || v > 99) fail("diagonal indices need the D<i>_<j> form");
            return Generator::diagonal(static_cast<int>(v / 10),
                                       static_cast<int>(v % 10));
        }
        fail(std::string("unknown generator '") + ch + "'");
    }

    const std::string& s_;
    Ambient amb_;
    std::size_t pos_ = 0;
};

} // namespace

TautExpr parse_expr(const std::string& text, Ambient ambient) {
    std::string trimmed = text;
    if (trimmed == "0") return TautExpr::zero(ambient);
    return ExprParser(text, ambient).parse();
}

nlohmann::json to_json(const TautExpr& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : e.terms()) {
        nlohmann::json mono = nlohmann::json::object();
        for (const auto& [g, exp] : m.factors()) mono[g.name()] = exp;
        terms.push_back({{"coeff", rational_str(c)}, {"mono", mono}});
    }
    return {{"ambient", {{"g", e.ambient().g}, {"d", e.ambient().d}}},
            {"terms", terms}};
}

TautExpr expr_from_json(const nlohmann::json& j) {
    const Ambient amb{j.at("ambient").at("g").get<int>(),
                      j.at("ambient").at("d").get<int>()};
    TautExpr out(amb);
    for (const auto& term : j.at("terms")) {
        std::string text;
        for (const auto& [name, exp] : term.at("mono").items()) {
            if (!text.empty()) text += "*";
            text += name + "^" + std::to_string(exp.get<int>());
        }
        if (text.empty()) text = "1";
        const TautExpr mono = parse_expr(text, amb);
        if (mono.terms().size() != 1)
            throw InputError("expr_from_json: bad monomial");
        out.add_term(mono.terms().begin()->first,
                     Rational(term.at("coeff").get<std::string>()));
    }
    return out;
}

nlohmann::json to_json(const DivisorClass& c) {
    return {{"lambda", rational_str(c.lambda)},
            {"delta0", rational_str(c.delta0)},
            {"delta1", rational_str(c.delta1)},
            {"space", c.space == DivisorClass::Space::stack ? "stack" : "coarse"}};
}

nlohmann::json to_json(const CountReport& r) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"label", e.label}, {"count", e.count}, {"cite", e.citation}});
    return {{"entries", entries}, {"total", r.total}};
}

nlohmann::json to_json(const IntersectionReport& r) {
    nlohmann::json j = to_json(r.cases);
    j["total"] = r.total;
    return j;
}

nlohmann::json to_json(const LambdaReport& r) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& [name, expr] : r.trace)
        trace.push_back({{"stage", name}, {"class", to_text(expr)}});
    return {{"raw", rational_str(r.raw)},
            {"correction", rational_str(r.correction)},
            {"multiplicity", r.multiplicity},
            {"interior", rational_str(r.interior)},
            {"trace", trace}};
}

nlohmann::json to_json(const NonHyperellipticReport& r) {
    return {{"computed", to_json(r.computed)},
            {"published", to_json(r.published)},
            {"discrepancy", r.discrepancy}};
}

} // namespace stratadiv
