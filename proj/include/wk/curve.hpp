#pragma once

#include "wk/kernel.hpp"
#include "wk/proj.hpp"
#include "wk/quad.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wk {

/// Point ([x0:x1],[y0:y1]) of the kernel curve, coordinates canonical.
template <class F>
struct CurvePoint {
    ProjPoint<F> x;
    ProjPoint<F> y;

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
};

using CurvePointQ = CurvePoint<Rat>;
using CurvePointQuad = CurvePoint<QuadExt>;

template <class F>
std::string curve_point_str(const CurvePoint<F>& p) {
    return "(" + proj_str(p.x) + "," + proj_str(p.y) + ")";
}

template <class F>
bool on_curve(const BihomKernel& k, const CurvePoint<F>& p) {
    return k.eval(p.x, p.y) == F(0);
}

/// Second root of the binary quadratic q = A u0^2 + B u0 u1 + C u1^2 through
/// the known root [u:v]. The Vieta product [Cv : Au] and sum [-Bv - Au : Av]
/// forms agree wherever both are defined; together with the [-C : B] form at
/// v = 0 they cover every point of a nondegenerate fiber, which realizes the
/// involutions as morphisms of the whole curve. Fails only when q vanishes
/// identically.
template <class F>
ProjPoint<F> other_fiber_root(const std::array<F, 3>& q, const ProjPoint<F>& root) {
    const F zero(0);
    const F& A = q[0];
    const F& B = q[1];
    const F& C = q[2];
    if (A == zero && B == zero && C == zero)
        throw std::domain_error("degenerate fiber: quadratic vanishes identically");
    const F& u = root.c0();
    const F& v = root.c1();
    if (v != zero) return ProjPoint<F>(-(B * v) - A * u, A * v);
    return ProjPoint<F>(-C, B);
}

/// Vertical switch: keeps x, exchanges the two curve points above it.
template <class F>
CurvePoint<F> iota1(const BihomKernel& k, const CurvePoint<F>& p) {
    return {p.x, other_fiber_root(k.x_fiber(p.x), p.y)};
}

/// Horizontal switch: keeps y, exchanges the two curve points beside it.
template <class F>
CurvePoint<F> iota2(const BihomKernel& k, const CurvePoint<F>& p) {
    return {other_fiber_root(k.y_fiber(p.y), p.x), p.y};
}

template <class F>
CurvePoint<F> sigma(const BihomKernel& k, const CurvePoint<F>& p) {
    return iota2(k, iota1(k, p));
}

template <class F>
CurvePoint<F> sigma_inv(const BihomKernel& k, const CurvePoint<F>& p) {
    return iota1(k, iota2(k, p));
}

template <class F>
CurvePoint<F> sigma_pow(const BihomKernel& k, CurvePoint<F> p, long n) {
    for (long i = 0; i < (n < 0 ? -n : n); ++i) p = n < 0 ? sigma_inv(k, p) : sigma(k, p);
    return p;
}

/// Both curve points over a rational x, computed in Q(sqrt(D)) for the fiber
/// discriminant D. Exact: each returned point satisfies the curve equation.
std::pair<CurvePointQuad, CurvePointQuad> fiber_points(const BihomKernel& k, const ProjQ& x);

/// Poles of the y coordinate on the transformed curve, with their first and
/// second backward images under sigma.
struct PoleData {
    enum class Case { Simple, Double };
    Case pole_case = Case::Double;
    CurvePointQ p1{ProjQ::infinity(), ProjQ::infinity()};
    std::optional<CurvePointQ> p2;
    std::vector<CurvePointQ> p1_preimages; // sigma^-1(p1), sigma^-2(p1)
    std::vector<CurvePointQ> p2_preimages; // same for p2 when present
};

PoleData poles_of_y(const Kernel& k);

/// Smallest |k| <= k_max with sigma^(2k)(from) == to, signed by direction.
std::optional<long> orbit_relation(const BihomKernel& k, const CurvePointQ& to,
                                   const CurvePointQ& from, long k_max);

/// One bidirectional walk recording both parities: the least even and odd
/// signed sigma-offsets s with sigma^s(from) == to, |s| <= s_max.
struct SigmaOffsets {
    std::optional<long> even; // s = 2k
    std::optional<long> odd;  // s = 2m + 1
};
SigmaOffsets sigma_offsets(const BihomKernel& k, const CurvePointQ& to, const CurvePointQ& from,
                           long s_max);

/// Least n <= n_max with sigma^n(Q) == Q for a deterministically chosen
/// generic point Q (seed_index picks among the candidate fibers). Absence is
/// evidence, not proof, that sigma has infinite order.
///
/// The walk is first scanned in a homomorphic residue image where coordinates
/// stay machine-sized; a candidate period found there is confirmed with exact
/// arithmetic before it is reported, and a clean scan rules out closure
/// outright. The all-exact walk below is the reference it is tested against.
std::optional<long> group_order_probe(const Kernel& k, long n_max, int seed_index = 0);

/// Exact-only twin of group_order_probe.
std::optional<long> group_order_probe_reference(const Kernel& k, long n_max, int seed_index = 0);

/// The generic point the probe starts from; exposed for reporting and tests.
CurvePointQuad probe_seed_point(const BihomKernel& k, int seed_index = 0);

} // namespace wk
