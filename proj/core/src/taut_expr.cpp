#include "stratadiv/taut_expr.hpp"

#include "stratadiv/errors.hpp"

namespace stratadiv {

std::string Generator::name() const {
    switch (kind_) {
        case GenKind::Kappa: return "kappa" + std::to_string(i_);
        case GenKind::Lambda: return "L" + std::to_string(i_);
        case GenKind::K: return "K" + std::to_string(i_);
        case GenKind::Delta:
            if (i_ > 9 || j_ > 9)
                return "D" + std::to_string(i_) + "_" + std::to_string(j_);
            return "D" + std::to_string(i_) + std::to_string(j_);
    }
    return {};
}

void TautExpr::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    for (const auto& [g, e] : m.factors()) {
        switch (g.kind()) {
            case GenKind::Lambda:
                if (g.index() > ambient_.g) return; // lambda_i = 0 for i > g
                break;
            case GenKind::K:
                if (g.index() > ambient_.d)
                    throw AmbientError("K index exceeds number of marked points");
                break;
            case GenKind::Delta:
                if (g.second_index() > ambient_.d)
                    throw AmbientError("diagonal index exceeds number of marked points");
                break;
            case GenKind::Kappa:
                break;
        }
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TautExpr TautExpr::graded_part(int k) const {
    TautExpr out(ambient_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == k) out.terms_.emplace(m, c);
    return out;
}

TautExpr TautExpr::truncated(int k) const {
    TautExpr out(ambient_);
    for (const auto& [m, c] : terms_) {
        if (m.degree() > k) break; // graded order
        out.terms_.emplace(m, c);
    }
    return out;
}

TautExpr TautExpr::promoted(Ambient a) const {
    if (a.g != ambient_.g || a.d < ambient_.d)
        throw AmbientError("promotion must keep the genus and may only add points");
    TautExpr out(a);
    out.terms_ = terms_;
    return out;
}

TautExpr operator+(const TautExpr& a, const TautExpr& b) {
    if (a.ambient_ != b.ambient_) throw AmbientError("add: ambient mismatch");
    TautExpr out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

TautExpr operator-(const TautExpr& a) {
    TautExpr out(a.ambient_);
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
}

TautExpr operator-(const TautExpr& a, const TautExpr& b) { return a + (-b); }

TautExpr operator*(const TautExpr& a, const TautExpr& b) {
    if (a.ambient_ != b.ambient_) throw AmbientError("mul: ambient mismatch");
    TautExpr out(a.ambient_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

TautExpr operator*(const Rational& c, const TautExpr& a) {
    TautExpr out(a.ambient_);
    if (c == 0) return out;
    for (const auto& [m, k] : a.terms_) out.terms_.emplace(m, c * k);
    return out;
}

} // namespace stratadiv
