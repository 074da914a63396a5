#include "modp.hpp"

#include <mutex>
#include <vector>

namespace wk::modp {

std::uint64_t scan_prime(size_t index) {
    static std::mutex mu;
    static std::vector<std::uint64_t> primes;
    std::lock_guard<std::mutex> lock(mu);
    static mpz_class cursor = (mpz_class(1) << 61) + 3;
    while (primes.size() <= index) {
        cursor -= 4; // stay on 3 mod 4
        if (mpz_probab_prime_p(cursor.get_mpz_t(), 40) != 0) primes.push_back(cursor.get_ui());
    }
    return primes[index];
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Fp {
    u64 p;
    u64 mul(u64 a, u64 b) const { return static_cast<u64>(u128(a) * b % p); }
    u64 add(u64 a, u64 b) const {
        const u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
    // Square root for p = 3 mod 4; nullopt when a is a non-residue.
    std::optional<u64> sqrt(u64 a) const {
        if (a == 0) return 0;
        if (pow(a, (p - 1) / 2) != 1) return std::nullopt;
        return pow(a, (p + 1) / 4);
    }
};

u64 reduce_mpz(const mpz_class& z, const Fp& f) {
    mpz_class r = z % mpz_class(f.p);
    if (r < 0) r += mpz_class(f.p);
    return r.get_ui();
}

// a/b mod p; nullopt when p divides b.
std::optional<u64> reduce_rat(const Rat& q, const Fp& f) {
    const u64 den = reduce_mpz(q.get_den(), f);
    if (den == 0) return std::nullopt;
    return f.mul(reduce_mpz(q.get_num(), f), f.inv(den));
}

// Projective-line residue in canonical form: affine value or infinity.
struct PointP {
    bool inf = false;
    u64 value = 0;
    bool operator==(const PointP&) const = default;
};

struct StateP {
    PointP x, y;
    bool operator==(const StateP&) const = default;
};

struct Walker {
    Fp f;
    u64 grid[3][3]; // residues of the bihomogeneous coefficient grid

    // (A, B, C) of the quadratic over a frozen coordinate.
    std::array<u64, 3> x_fiber(const PointP& x) const { return fiber(x, true); }
    std::array<u64, 3> y_fiber(const PointP& y) const { return fiber(y, false); }

    std::array<u64, 3> fiber(const PointP& q, bool fix_y) const {
        std::array<u64, 3> out{};
        for (int deg = 2; deg >= 0; --deg) {
            u64 acc = 0;
            for (int k = 0; k <= 2; ++k) {
                const u64 g = fix_y ? grid[k][deg] : grid[deg][k];
                if (g == 0) continue;
                u64 m = g;
                if (q.inf) {
                    if (k != 2) continue; // u^k v^(2-k) with v = 0
                } else {
                    for (int r = 0; r < k; ++r) m = f.mul(m, q.value);
                }
                acc = f.add(acc, m);
            }
            out[static_cast<size_t>(2 - deg)] = acc;
        }
        return out;
    }

    // Mirrors other_fiber_root on canonical forms. Nullopt = ambiguous
    // canonicalization divisor (residue zero), caller must abort the prime.
    std::optional<PointP> partner(const std::array<u64, 3>& q, const PointP& root) const {
        const u64 A = q[0];
        const u64 B = q[1];
        const u64 C = q[2];
        if (!root.inf) {
            // [-B - A u : A]
            if (A == 0) return std::nullopt;
            const u64 num = f.neg(f.add(B, f.mul(A, root.value)));
            return PointP{false, f.mul(num, f.inv(A))};
        }
        // [-C : B]
        if (B == 0) return std::nullopt;
        return PointP{false, f.mul(f.neg(C), f.inv(B))};
    }

    std::optional<StateP> sigma(const StateP& s) const {
        const auto y = partner(x_fiber(s.x), s.y);
        if (!y) return std::nullopt;
        const auto x = partner(y_fiber(*y), s.x);
        if (!x) return std::nullopt;
        return StateP{*x, *y};
    }
};

std::optional<PointP> reduce_proj(const ProjPoint<QuadExt>& p, const Fp& f,
                                  std::optional<u64> sqrt_d) {
    if (p.is_infinity()) return PointP{true, 0};
    const QuadExt& v = p.c0();
    const auto base = reduce_rat(v.base(), f);
    if (!base) return std::nullopt;
    if (v.is_rational()) return PointP{false, *base};
    if (!sqrt_d) return std::nullopt;
    const auto coeff = reduce_rat(v.coeff(), f);
    if (!coeff) return std::nullopt;
    return PointP{false, f.add(*base, f.mul(*coeff, *sqrt_d))};
}

} // namespace

ScanResult order_scan(const BihomKernel& k, const CurvePointQuad& seed, long n_max, u64 p) {
    Walker w;
    w.f = Fp{p};
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            const auto g = reduce_rat(k.grid(i, j), w.f);
            if (!g) return {};
            w.grid[i][j] = *g;
        }

    // One square root of the seed's radicand serves every coordinate.
    std::optional<u64> sd;
    const mpz_class& rad =
        !seed.y.is_infinity() && !seed.y.c0().is_rational() ? seed.y.c0().radicand()
        : !seed.x.is_infinity() && !seed.x.c0().is_rational() ? seed.x.c0().radicand()
                                                              : mpz_class(0);
    if (sgn(rad) != 0) {
        sd = w.f.sqrt(reduce_mpz(rad, w.f));
        if (!sd) return {};
    }

    const auto x0 = reduce_proj(seed.x, w.f, sd);
    const auto y0 = reduce_proj(seed.y, w.f, sd);
    if (!x0 || !y0) return {};
    const StateP start{*x0, *y0};

    StateP s = start;
    for (long n = 1; n <= n_max; ++n) {
        const auto next = w.sigma(s);
        if (!next) return {};
        s = *next;
        if (s == start) return {ScanResult::Status::Candidate, n};
    }
    return {ScanResult::Status::NoClosure, 0};
}

} // namespace wk::modp
