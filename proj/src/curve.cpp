#include "wk/curve.hpp"

#include "modp.hpp"

#include <stdexcept>

namespace wk {

std::pair<CurvePointQuad, CurvePointQuad> fiber_points(const BihomKernel& k, const ProjQ& x) {
    const auto q = k.x_fiber(x);
    const Rat& A = q[0];
    const Rat& B = q[1];
    const Rat& C = q[2];
    const ProjQuad px(QuadExt(x.c0()), QuadExt(x.c1()));

    if (is_zero(A)) {
        if (is_zero(B) && is_zero(C))
            throw std::domain_error("degenerate fiber: quadratic vanishes identically");
        // Linear fiber: one root at infinity, the other at [-C : B] (a double
        // root at infinity when B = 0).
        const ProjQuad inf = ProjQuad::infinity();
        if (is_zero(B)) return {{px, inf}, {px, inf}};
        return {{px, inf}, {px, ProjQuad(QuadExt(-C), QuadExt(B))}};
    }
    auto [rp, rm] = quad_field_solve(A, B, C);
    return {{px, ProjQuad(rp, QuadExt(1))}, {px, ProjQuad(rm, QuadExt(1))}};
}

PoleData poles_of_y(const Kernel& k) {
    if (!is_zero(k.weights.at(-1, 1)) || !is_zero(k.weights.at(1, -1)))
        throw std::invalid_argument("pole analysis needs an anti-diagonal-free kernel");
    const BihomKernel bk(k);
    const Rat& d01 = k.weights.at(0, 1);
    const Rat& d11 = k.weights.at(1, 1);

    PoleData out;
    out.p1 = {ProjQ(Rat(0), Rat(1)), ProjQ::infinity()};
    if (is_zero(d01)) {
        out.pole_case = PoleData::Case::Double;
    } else {
        out.pole_case = PoleData::Case::Simple;
        out.p2 = CurvePointQ{ProjQ(-d01, d11), ProjQ::infinity()};
    }

    const CurvePointQ pre1 = sigma_inv(bk, out.p1);
    out.p1_preimages = {pre1, sigma_inv(bk, pre1)};
    if (out.p2) {
        const CurvePointQ qre1 = sigma_inv(bk, *out.p2);
        out.p2_preimages = {qre1, sigma_inv(bk, qre1)};
    }
    return out;
}

SigmaOffsets sigma_offsets(const BihomKernel& k, const CurvePointQ& to, const CurvePointQ& from,
                           long s_max) {
    SigmaOffsets out;
    auto record = [&](long s) {
        if (s % 2 == 0) {
            if (!out.even) out.even = s;
        } else if (!out.odd) {
            out.odd = s;
        }
    };
    if (from == to) record(0);
    CurvePointQ fwd = from;
    CurvePointQ bwd = from;
    for (long s = 1; s <= s_max && (!out.even || !out.odd); ++s) {
        fwd = sigma(k, fwd);
        bwd = sigma_inv(k, bwd);
        if (fwd == to) record(s);
        if (bwd == to) record(-s);
    }
    return out;
}

std::optional<long> orbit_relation(const BihomKernel& k, const CurvePointQ& to,
                                   const CurvePointQ& from, long k_max) {
    if (k_max < 0) throw std::invalid_argument("negative search bound");
    if (from == to) return 0;
    CurvePointQ fwd = from;
    CurvePointQ bwd = from;
    for (long step = 1; step <= k_max; ++step) {
        fwd = sigma_pow(k, fwd, 2);
        if (fwd == to) return step;
        bwd = sigma_pow(k, bwd, -2);
        if (bwd == to) return -step;
    }
    return std::nullopt;
}

CurvePointQuad probe_seed_point(const BihomKernel& k, int seed_index) {
    if (seed_index < 0) throw std::invalid_argument("negative seed index");
    // Fibonacci-quotient x values 2, 3/2, 5/3, ... never repeat and quickly
    // leave every special fiber.
    mpz_class prev = 1, cur = 2;
    int found = 0;
    for (int attempts = 0; attempts < 64; ++attempts) {
        const ProjQ x{Rat(cur), Rat(prev)};
        const auto q = k.x_fiber(x);
        const Rat disc = q[1] * q[1] - 4 * q[0] * q[2];
        // Want an honest quadratic fiber away from ramification.
        if (!is_zero(q[0]) && !is_zero(disc)) {
            if (found == seed_index) return fiber_points(k, x).first;
            ++found;
        }
        const mpz_class next = prev + cur;
        prev = cur;
        cur = next;
    }
    throw std::runtime_error("no usable probe fiber found");
}

namespace {

std::optional<long> exact_order_walk(const BihomKernel& bk, const CurvePointQuad& start,
                                     long n_max) {
    CurvePointQuad p = start;
    for (long n = 1; n <= n_max; ++n) {
        p = sigma(bk, p);
        if (p == start) return n;
    }
    return std::nullopt;
}

} // namespace

std::optional<long> group_order_probe(const Kernel& k, long n_max, int seed_index) {
    if (!is_elliptic(k.weights))
        throw std::invalid_argument("group probe requires an elliptic kernel curve");
    const BihomKernel bk(k);
    const CurvePointQuad start = probe_seed_point(bk, seed_index);

    for (size_t i = 0; i < modp::kMaxScanPrimes; ++i) {
        const auto scan = modp::order_scan(bk, start, n_max, modp::scan_prime(i));
        if (scan.status == modp::ScanResult::Status::Aborted) continue;
        if (scan.status == modp::ScanResult::Status::NoClosure) return std::nullopt;
        // Exact closure can only happen at multiples of the residue period.
        const long m = scan.period;
        CurvePointQuad q = start;
        for (long n = m; n <= n_max; n += m) {
            q = sigma_pow(bk, q, m);
            if (q == start) return n;
        }
        return std::nullopt;
    }
    return exact_order_walk(bk, start, n_max);
}

std::optional<long> group_order_probe_reference(const Kernel& k, long n_max, int seed_index) {
    if (!is_elliptic(k.weights))
        throw std::invalid_argument("group probe requires an elliptic kernel curve");
    const BihomKernel bk(k);
    return exact_order_walk(bk, probe_seed_point(bk, seed_index), n_max);
}

} // namespace wk
