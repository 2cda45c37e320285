#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "stratadiv/errors.hpp"

namespace stratadiv {

/// The generators of the ring: kappa_j, lambda_i, the relative cotangent
/// class K_i at the i-th marked point, and the diagonal D_ij (i < j).
/// The declaration order of GenKind fixes the canonical factor ordering
/// inside a monomial: kappa, lambda, K, D.
enum class GenKind : std::uint8_t { Kappa, Lambda, K, Delta };

class Generator {
public:
    static Generator kappa(int j) {
        if (j < 0) throw InputError("kappa index must be >= 0");
        return Generator(GenKind::Kappa, j, 0);
    }
    static Generator lambda(int i) {
        if (i < 1) throw InputError("lambda index must be >= 1");
        return Generator(GenKind::Lambda, i, 0);
    }
    static Generator point(int i) {
        if (i < 1) throw InputError("point index must be >= 1");
        return Generator(GenKind::K, i, 0);
    }
    static Generator diagonal(int i, int j) {
        if (i < 1 || j <= i) throw InputError("diagonal needs 1 <= i < j");
        return Generator(GenKind::Delta, i, j);
    }

    GenKind kind() const { return kind_; }
    int index() const { return i_; }       // kappa/lambda/K index, or lower diagonal index
    int second_index() const { return j_; } // upper diagonal index (Delta only)

    int degree() const {
        switch (kind_) {
            case GenKind::Kappa: return i_;
            case GenKind::Lambda: return i_;
            case GenKind::K: return 1;
            case GenKind::Delta: return 1;
        }
        return 0;
    }

    std::string name() const;

    friend auto operator<=>(const Generator&, const Generator&) = default;

private:
    Generator(GenKind k, int i, int j) : kind_(k), i_(i), j_(j) {}

    GenKind kind_;
    int i_;
    int j_;
};

/// Exponent map with the canonical generator ordering. Exponents are
/// always positive; a generator with exponent zero is absent.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return {}; }

    /// Multiplies by g^e.
    Monomial& times(const Generator& g, int e = 1) {
        if (e < 0) throw InputError("negative exponent");
        if (e == 0) return *this;
        exps_[g] += e;
        return *this;
    }

    Monomial with(const Generator& g, int e = 1) const {
        Monomial m = *this;
        m.times(g, e);
        return m;
    }

    /// Divides out g^e; requires exponent(g) >= e.
    Monomial& divide(const Generator& g, int e = 1) {
        auto it = exps_.find(g);
        if (it == exps_.end() || it->second < e)
            throw InputError("monomial division underflow");
        it->second -= e;
        if (it->second == 0) exps_.erase(it);
        return *this;
    }

    int exponent(const Generator& g) const {
        auto it = exps_.find(g);
        return it == exps_.end() ? 0 : it->second;
    }

    int degree() const {
        int d = 0;
        for (const auto& [g, e] : exps_) d += g.degree() * e;
        return d;
    }

    bool is_one() const { return exps_.empty(); }

    const std::map<Generator, int>& factors() const { return exps_; }

    Monomial operator*(const Monomial& o) const {
        Monomial m = *this;
        for (const auto& [g, e] : o.exps_) m.exps_[g] += e;
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Graded lexicographic: by total degree, then by generator, with the
    /// higher power of the earlier generator first (K2^3 before K2^2*D12).
    friend bool operator<(const Monomial& a, const Monomial& b) {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        auto ia = a.exps_.begin(), ib = b.exps_.begin();
        for (; ia != a.exps_.end() && ib != b.exps_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (ia->second != ib->second) return ia->second > ib->second;
        }
        return ia == a.exps_.end() && ib != b.exps_.end();
    }

private:
    std::map<Generator, int> exps_;
};

} // namespace stratadiv
