#include "stratadiv/chern.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "stratadiv/errors.hpp"

namespace stratadiv {

Signature::Signature(int g, std::vector<int> zeros, std::vector<int> poles)
    : g_(g), zeros_(std::move(zeros)), poles_(std::move(poles)) {
    if (g_ < 0) throw InputError("signature: genus must be >= 0");
    if (zeros_.empty()) throw InputError("signature: at least one zero required");
    for (int a : zeros_)
        if (a < 1) throw InputError("signature: zero orders must be >= 1");
    for (int b : poles_)
        if (b < 1) throw InputError("signature: pole orders must be >= 1");
    const int sum = std::accumulate(zeros_.begin(), zeros_.end(), 0) -
                    std::accumulate(poles_.begin(), poles_.end(), 0);
    if (sum != 2 * g_ - 2)
        throw InputError("signature: orders do not sum to 2g - 2");
}

namespace {

std::vector<int> parse_int_list(const std::string& s, bool expect_negative) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        int v = std::stoi(cur);
        if (expect_negative) {
            if (v >= 0) throw InputError("signature: pole orders must be negative");
            v = -v;
        } else if (v < 1) {
            throw InputError("signature: zero orders must be positive");
        }
        out.push_back(v);
        cur.clear();
    };
    for (char ch : s) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == ',') {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+') {
            cur.push_back(ch);
        } else {
            throw InputError(std::string("signature: unexpected character '") + ch + "'");
        }
    }
    flush();
    return out;
}

} // namespace

Signature Signature::parse(const std::string& text) {
    const auto semi = text.find(';');
    if (semi == std::string::npos)
        throw InputError("signature: expected \"a1,a2;-b1,-b2\"");
    auto zeros = parse_int_list(text.substr(0, semi), false);
    auto poles = parse_int_list(text.substr(semi + 1), true);
    const int sum = std::accumulate(zeros.begin(), zeros.end(), 0) -
                    std::accumulate(poles.begin(), poles.end(), 0);
    if (sum % 2 != 0 || sum < -2)
        throw InputError("signature: orders do not sum to 2g - 2 for any genus");
    return Signature((sum + 2) / 2, std::move(zeros), std::move(poles));
}

TautExpr chern_E(int n, int g, int d_max) {
    if (n < 1) throw InputError("chern_E: n must be >= 1");
    const Ambient amb{g, 1};
    TautExpr hodge = TautExpr::one(amb);
    for (int i = 1; i <= g; ++i)
        hodge = hodge + TautExpr::gen(amb, Generator::lambda(i));
    TautExpr out = hodge;
    const TautExpr k1 = TautExpr::gen(amb, Generator::point(1));
    for (int i = 1; i <= n - 1; ++i) {
        out = out * (TautExpr::one(amb) - Rational(i) * k1);
        out = out.truncated(d_max);
    }
    return out.truncated(d_max);
}

TautExpr chern_F(const Signature& mu) {
    const Ambient amb{mu.genus(), mu.m()};
    const int p = mu.p();
    TautExpr out = TautExpr::one(amb);
    for (int i = 1; i <= mu.n(); ++i) {
        TautExpr linear = TautExpr::gen(amb, Generator::point(p + i));
        TautExpr polar = TautExpr::zero(amb);
        for (int k = 1; k <= p; ++k)
            polar = polar + Rational(mu.poles()[k - 1]) *
                                TautExpr::gen(amb, Generator::diagonal(k, p + i));
        for (int j = 1; j <= mu.zeros()[i - 1]; ++j)
            out = out * (TautExpr::one(amb) + Rational(j) * linear + polar);
    }
    return out;
}

namespace {

// P_n(x_1..x_n) = sum over i_1 + 2 i_2 + ... + n i_n = n of
//   (i_1+...+i_n)! / (i_1! ... i_n!) * prod (-x_j)^{i_j}
// accumulated directly as a TautExpr with x_k = graded_part(c, k).
void accumulate_Pn(int n, int next, const std::vector<TautExpr>& x,
                   const TautExpr& partial, const Integer& factors,
                   const Integer& total, TautExpr& out) {
    if (n == 0) {
        // multinomial coefficient total! / prod(i_j!) folded into `factors`
        Integer coeff = 1;
        for (Integer t = 2; t <= total; ++t) coeff *= t;
        out = out + Rational(coeff, factors) * partial;
        return;
    }
    for (int j = next; j <= n; ++j) {
        TautExpr acc = partial;
        Integer fact = factors;
        Integer tot = total;
        for (int e = 1; j * e <= n; ++e) {
            acc = acc * (-x[j]);
            fact *= e;
            tot += 1;
            if (j * e == n) {
                accumulate_Pn(0, 0, x, acc, fact, tot, out);
            } else {
                accumulate_Pn(n - j * e, j + 1, x, acc, fact, tot, out);
            }
        }
    }
}

} // namespace

TautExpr chern_invert(const TautExpr& c, int d_max) {
    if (d_max < 0) throw InputError("chern_invert: negative degree");
    const Ambient amb = c.ambient();
    if (c.graded_part(0) != TautExpr::one(amb))
        throw NotUnitalError("chern_invert: constant term must be 1");
    std::vector<TautExpr> x;
    x.reserve(d_max + 1);
    x.push_back(TautExpr::one(amb));
    for (int k = 1; k <= d_max; ++k) x.push_back(c.graded_part(k));

    TautExpr out = TautExpr::one(amb);
    for (int n = 1; n <= d_max; ++n) {
        TautExpr pn = TautExpr::zero(amb);
        accumulate_Pn(n, 1, x, TautExpr::one(amb), 1, 0, pn);
        out = out + pn.graded_part(n);
    }
    return out;
}

TautExpr difference_class(const TautExpr& cF, const TautExpr& cE, int k) {
    TautExpr f = cF, e = cE;
    if (f.ambient() != e.ambient()) {
        if (f.ambient().g != e.ambient().g)
            throw AmbientError("difference_class: genus mismatch");
        const Ambient amb{f.ambient().g, std::max(f.ambient().d, e.ambient().d)};
        f = f.promoted(amb);
        e = e.promoted(amb);
    }
    return (f * chern_invert(e, k)).graded_part(k);
}

} // namespace stratadiv
