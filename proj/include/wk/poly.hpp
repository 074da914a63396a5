#pragma once

#include "wk/rat.hpp"

#include <string>
#include <vector>

namespace wk {

/// Dense univariate polynomial over Q. Degrees here never exceed four
/// (kernel coefficient polynomials and their discriminants).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Rat coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
        return c_[static_cast<size_t>(k)];
    }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    Poly operator-() const { return *this * Rat(-1); }

    friend bool operator==(const Poly& l, const Poly& r) { return l.c_ == r.c_; }

    template <class F>
    F eval(const F& x) const {
        F acc(0);
        for (size_t k = c_.size(); k-- > 0;) acc = acc * x + F(c_[k]);
        return acc;
    }

    /// Homogenized evaluation sum_k c_k u^k v^(deg-k) at total degree `deg`.
    template <class F>
    F eval_hom(const F& u, const F& v, int deg) const {
        F acc(0);
        F upow(1);
        for (int k = 0; k <= deg; ++k) {
            F vpow(1);
            for (int r = 0; r < deg - k; ++r) vpow = vpow * v;
            acc = acc + F(coeff(k)) * upow * vpow;
            upow = upow * u;
        }
        return acc;
    }

    std::string str(const std::string& var) const;

private:
    void trim() {
        while (!c_.empty() && wk::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<Rat> c_;
};

} // namespace wk
