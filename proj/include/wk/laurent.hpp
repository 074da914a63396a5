#pragma once

#include "wk/rat.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>

namespace wk {

/// Sparse Laurent polynomial in x and y over Q. Exponents may be negative;
/// zero coefficients are never stored, so structural equality is value
/// equality. The ordered map keeps every traversal deterministic.
class LaurentPoly {
public:
    using Exp = std::pair<int, int>; // (x exponent, y exponent)
    using Map = std::map<Exp, Rat>;

    LaurentPoly() = default;

    static LaurentPoly monomial(int i, int j, Rat c);
    static LaurentPoly constant(Rat c) { return monomial(0, 0, std::move(c)); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    Rat coeff(int i, int j) const;
    void add_term(int i, int j, const Rat& c);

    const Map& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rat& s) const;
    LaurentPoly operator-() const { return *this * Rat(-1); }

    friend bool operator==(const LaurentPoly& l, const LaurentPoly& r) {
        return l.terms_ == r.terms_;
    }
    friend bool operator!=(const LaurentPoly& l, const LaurentPoly& r) { return !(l == r); }

    LaurentPoly mul_monomial(int i, int j, const Rat& c) const;
    /// Applies an exponent substitution monomial-by-monomial, e.g. the
    /// quadrant change of coordinates (k, l) -> (k - l, k).
    LaurentPoly map_exponents(const std::function<Exp(int, int)>& fn) const;
    LaurentPoly swap_xy() const;

    template <class F>
    F eval(const F& x, const F& y) const {
        F acc(0);
        for (const auto& [e, c] : terms_) acc = acc + F(c) * ipow(x, e.first) * ipow(y, e.second);
        return acc;
    }

    std::string str() const;

private:
    template <class F>
    static F ipow(const F& v, int e) {
        F acc(1);
        const F base = e < 0 ? F(1) / v : v;
        for (int k = 0; k < (e < 0 ? -e : e); ++k) acc = acc * base;
        return acc;
    }

    Map terms_;
};

} // namespace wk
