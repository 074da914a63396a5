#pragma once

#include "wk/laurent.hpp"
#include "wk/model.hpp"
#include "wk/poly.hpp"
#include "wk/proj.hpp"

#include <array>
#include <string>

namespace wk {

/// The kernel polynomial K(x,y) = xy(t * sum d(i,j) x^i y^j - 1) of a model at
/// a fixed rational 0 < t < 1, stored through both of its quadratic readings
///   K = a(x) y^2 + b(x) y + c(x) = ah(y) x^2 + bh(y) x + ch(y)
/// together with the two discriminants. When `transformed` is set the weights
/// were remapped by phi_transform first, so `weights` always holds the grid
/// the polynomial is actually built from.
struct Kernel {
    StepWeights weights;
    Rat t;
    bool transformed = false;

    Poly a, b, c;    // coefficients in x of y^2, y^1, y^0
    Poly ah, bh, ch; // coefficients in y of x^2, x^1, x^0
    Poly dx;         // b^2 - 4ac
    Poly dy;         // bh^2 - 4*ah*ch
};

Kernel build_kernel(const StepWeights& w, const Rat& t, bool transformed);

/// K as a Laurent polynomial in x, y with t substituted.
LaurentPoly kernel_laurent(const StepWeights& w, const Rat& t);

/// Bihomogenized kernel on P1 x P1: a 3x3 grid where entry (i, j) multiplies
/// x0^i x1^(2-i) y0^j y1^(2-j); it equals t*d(i-1,j-1) except for the
/// correction at (1,1). Fiber slices expose the binary quadratics cut out by
/// freezing one coordinate, which is all the curve dynamics ever needs.
class BihomKernel {
public:
    explicit BihomKernel(const Kernel& k);
    BihomKernel(const StepWeights& w, const Rat& t);

    const Rat& grid(int i, int j) const { return g_[static_cast<size_t>(3 * i + j)]; }
    const Rat& t() const { return t_; }
    const StepWeights& weights() const { return weights_; }

    template <class F>
    F eval(const ProjPoint<F>& x, const ProjPoint<F>& y) const {
        F acc(0);
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j) {
                const Rat& g = grid(i, j);
                if (is_zero(g)) continue;
                acc = acc + F(g) * hom(x, i) * hom(y, j);
            }
        return acc;
    }

    /// Quadratic A y0^2 + B y0 y1 + C y1^2 cut out over a fixed x.
    template <class F>
    std::array<F, 3> x_fiber(const ProjPoint<F>& x) const {
        return {slice(x, 2, true), slice(x, 1, true), slice(x, 0, true)};
    }

    /// Quadratic A x0^2 + B x0 x1 + C x1^2 cut out over a fixed y.
    template <class F>
    std::array<F, 3> y_fiber(const ProjPoint<F>& y) const {
        return {slice(y, 2, false), slice(y, 1, false), slice(y, 0, false)};
    }

private:
    void fill(const StepWeights& w, const Rat& t);

    template <class F>
    static F hom(const ProjPoint<F>& p, int deg) {
        F acc(1);
        for (int k = 0; k < deg; ++k) acc = acc * p.c0();
        for (int k = deg; k < 2; ++k) acc = acc * p.c1();
        return acc;
    }

    template <class F>
    F slice(const ProjPoint<F>& p, int fixed_deg, bool fix_y) const {
        F acc(0);
        for (int k = 0; k <= 2; ++k) {
            const Rat& g = fix_y ? grid(k, fixed_deg) : grid(fixed_deg, k);
            if (is_zero(g)) continue;
            acc = acc + F(g) * hom(p, k);
        }
        return acc;
    }

    std::array<Rat, 9> g_{};
    Rat t_;
    StepWeights weights_;
};

/// f(x) = t d(-1,0) + t x d(-1,-1), the boundary factor of the octant
/// equation, written in the original (untransformed) weights.
Poly f_poly(const Kernel& k);

/// g(x,y) with the 1/y term cleared against the leading -y factor; its t = 0
/// part is y/2. Original weights, like f.
LaurentPoly g_poly(const Kernel& k);

/// The kernel curve is elliptic exactly when the support escapes every closed
/// half-plane through the origin.
bool is_elliptic(const StepWeights& w);

std::string kernel_str(const Kernel& k);

} // namespace wk
