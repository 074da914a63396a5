#pragma once

#include "wk/quad.hpp"
#include "wk/rat.hpp"

#include <stdexcept>
#include <string>

namespace wk {

/// Point [c0 : c1] of the projective line over a field F, kept in canonical
/// form: the last nonzero coordinate is scaled to 1, so equality and hashing
/// reduce to structural comparison. [1 : 0] is the point at infinity.
template <class F>
class ProjPoint {
public:
    ProjPoint(F c0, F c1) : c0_(std::move(c0)), c1_(std::move(c1)) { canonicalize(); }

    static ProjPoint infinity() { return ProjPoint(F(1), F(0)); }
    static ProjPoint affine(F value) { return ProjPoint(std::move(value), F(1)); }

    const F& c0() const { return c0_; }
    const F& c1() const { return c1_; }
    bool is_infinity() const { return c1_ == F(0); }

    /// Affine value c0/c1; only valid away from infinity.
    const F& value() const {
        if (is_infinity()) throw std::domain_error("affine value of the point at infinity");
        return c0_;
    }

    friend bool operator==(const ProjPoint& l, const ProjPoint& r) {
        return l.c0_ == r.c0_ && l.c1_ == r.c1_;
    }
    friend bool operator!=(const ProjPoint& l, const ProjPoint& r) { return !(l == r); }

private:
    void canonicalize() {
        const F zero(0);
        if (c1_ != zero) {
            c0_ = c0_ / c1_;
            c1_ = F(1);
        } else if (c0_ != zero) {
            c0_ = F(1);
        } else {
            throw std::invalid_argument("projective point with both coordinates zero");
        }
    }

    F c0_, c1_;
};

using ProjQ = ProjPoint<Rat>;
using ProjQuad = ProjPoint<QuadExt>;

inline std::string proj_str(const ProjQ& p) {
    return "[" + rat_str(p.c0()) + ":" + rat_str(p.c1()) + "]";
}

inline std::string proj_str(const ProjQuad& p) {
    return "[" + p.c0().str() + ":" + p.c1().str() + "]";
}

} // namespace wk
