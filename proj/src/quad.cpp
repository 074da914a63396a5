#include "wk/quad.hpp"

#include <sstream>
#include <stdexcept>

namespace wk {

namespace {

// Largest prime checked when pulling square factors out of a radicand.
constexpr unsigned long kTrialBound = 4096;

} // namespace

SqrtDecomp decompose_sqrt(const Rat& disc) {
    if (is_zero(disc)) return {Rat(0), mpz_class(1)};

    // disc = n/d = (n*d)/d^2, so only the integer n*d needs square extraction.
    mpz_class m = disc.get_num() * disc.get_den();
    const int sign = sgn(m);
    mpz_class mag = abs(m);
    mpz_class root(1);

    auto extract = [&](unsigned long p) {
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), p, 2);
        while (mpz_divisible_p(mag.get_mpz_t(), p2.get_mpz_t())) {
            mag /= p2;
            root *= p;
        }
    };
    extract(2);
    extract(3);
    for (unsigned long p = 5; p <= kTrialBound; p += 6) {
        extract(p);
        extract(p + 2);
    }
    if (mpz_perfect_square_p(mag.get_mpz_t())) {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), mag.get_mpz_t());
        root *= s;
        mag = 1;
    }

    Rat scale(root, disc.get_den());
    scale.canonicalize();
    return {scale, sign < 0 ? mpz_class(-mag) : mag};
}

QuadExt::QuadExt(Rat a, Rat b, mpz_class d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (sgn(b_) == 0) {
        d_ = 0;
    } else if (sgn(d_) == 0) {
        throw std::logic_error("irrational part with zero radicand");
    }
}

const mpz_class& QuadExt::merge_radicand(const QuadExt& x, const QuadExt& y) {
    if (sgn(x.d_) == 0) return y.d_;
    if (sgn(y.d_) == 0 || x.d_ == y.d_) return x.d_;
    throw std::domain_error("mixing elements of distinct quadratic extensions");
}

Rat QuadExt::norm() const {
    Rat n = a_ * a_ - b_ * b_ * Rat(d_);
    n.canonicalize();
    return n;
}

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    const Rat n = norm(); // nonzero: D is not a rational square
    return QuadExt(a_ / n, -b_ / n, d_);
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    const mpz_class d = merge_radicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    d_ = sgn(b_) == 0 ? mpz_class(0) : d;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    const mpz_class d = merge_radicand(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    d_ = sgn(b_) == 0 ? mpz_class(0) : d;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    const mpz_class d = merge_radicand(*this, o);
    Rat a = a_ * o.a_ + b_ * o.b_ * Rat(d);
    Rat b = a_ * o.b_ + b_ * o.a_;
    a.canonicalize();
    b.canonicalize();
    a_ = a;
    b_ = b;
    d_ = sgn(b_) == 0 ? mpz_class(0) : d;
    return *this;
}

std::string QuadExt::str() const {
    if (is_rational()) return rat_str(a_);
    std::ostringstream out;
    out << rat_str(a_) << (sgn(b_) < 0 ? "-" : "+") << rat_str(abs(b_)) << "*sqrt(" << d_.get_str()
        << ")";
    return out.str();
}

std::pair<QuadExt, QuadExt> quad_field_solve(const Rat& A, const Rat& B, const Rat& C) {
    if (is_zero(A)) throw std::domain_error("degenerate quadratic: leading coefficient is zero");
    Rat disc = B * B - 4 * A * C;
    disc.canonicalize();
    const SqrtDecomp dec = decompose_sqrt(disc);
    const Rat two_a = 2 * A;
    if (dec.radicand == 1) {
        // Rational square discriminant: both roots live in Q.
        Rat rp = (-B + dec.scale) / two_a;
        Rat rm = (-B - dec.scale) / two_a;
        rp.canonicalize();
        rm.canonicalize();
        return {QuadExt(rp), QuadExt(rm)};
    }
    Rat base = -B / two_a;
    Rat coeff = dec.scale / two_a;
    base.canonicalize();
    coeff.canonicalize();
    return {QuadExt(base, coeff, dec.radicand), QuadExt(base, -coeff, dec.radicand)};
}

} // namespace wk
