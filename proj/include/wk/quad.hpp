#pragma once

#include "wk/rat.hpp"

#include <string>
#include <utility>

namespace wk {

/// Writes disc = scale^2 * radicand with radicand an integer carrying the sign
/// of disc. Square factors are pulled out by trial division over small primes
/// plus a perfect-square check on the cofactor, so radicand == 1 exactly when
/// disc is the square of a rational.
struct SqrtDecomp {
    Rat scale;
    mpz_class radicand;
};

SqrtDecomp decompose_sqrt(const Rat& disc);

/// Element a + b*sqrt(D) of the quadratic extension Q(sqrt(D)). D is a
/// nonsquare integer produced by decompose_sqrt; purely rational values are
/// normalized to b == 0, D == 0. Elements from different extensions never mix:
/// arithmetic requires matching D (rationals embed into any extension).
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(Rat a) : a_(std::move(a)), b_(0), d_(0) {} // NOLINT: implicit embed of Q
    QuadExt(int a) : a_(a), b_(0), d_(0) {}            // NOLINT
    QuadExt(Rat a, Rat b, mpz_class d);

    const Rat& base() const { return a_; }
    const Rat& coeff() const { return b_; }
    const mpz_class& radicand() const { return d_; }

    bool is_rational() const { return sgn(b_) == 0; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    QuadExt conj() const { return QuadExt(a_, -b_, d_); }
    /// z * conj(z) = a^2 - b^2 D, always rational.
    Rat norm() const;
    QuadExt inverse() const;

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

    friend QuadExt operator+(QuadExt l, const QuadExt& r) { return l += r; }
    friend QuadExt operator-(QuadExt l, const QuadExt& r) { return l -= r; }
    friend QuadExt operator*(QuadExt l, const QuadExt& r) { return l *= r; }
    friend QuadExt operator/(QuadExt l, const QuadExt& r) { return l /= r; }

    friend bool operator==(const QuadExt& l, const QuadExt& r) {
        return l.a_ == r.a_ && l.b_ == r.b_ && l.d_ == r.d_;
    }
    friend bool operator!=(const QuadExt& l, const QuadExt& r) { return !(l == r); }

    std::string str() const;

private:
    // Shared radicand for a binary operation; throws on a genuine mismatch.
    static const mpz_class& merge_radicand(const QuadExt& x, const QuadExt& y);

    Rat a_, b_;
    mpz_class d_;
};

/// Roots of A y^2 + B y + C over Q(sqrt(B^2 - 4AC)), "+" branch first.
/// A == 0 is a degenerate quadratic and is rejected; callers working on
/// projective fibers handle that case themselves.
std::pair<QuadExt, QuadExt> quad_field_solve(const Rat& A, const Rat& B, const Rat& C);

} // namespace wk
