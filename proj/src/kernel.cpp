#include "wk/kernel.hpp"

#include <sstream>
#include <stdexcept>

namespace wk {

Kernel build_kernel(const StepWeights& w, const Rat& t, bool transformed) {
    if (sgn(t) <= 0 || t >= 1) throw std::invalid_argument("t must satisfy 0 < t < 1");
    Kernel k;
    k.weights = transformed ? phi_transform(w) : w;
    k.t = t;
    k.transformed = transformed;
    const StepWeights& d = k.weights;

    auto row = [&](int j) {
        return Poly({t * d.at(-1, j), t * d.at(0, j), t * d.at(1, j)});
    };
    auto col = [&](int i) {
        return Poly({t * d.at(i, -1), t * d.at(i, 0), t * d.at(i, 1)});
    };
    const Poly minus_x({Rat(0), Rat(-1)});

    k.a = row(1);
    k.b = row(0) + minus_x;
    k.c = row(-1);
    k.ah = col(1);
    k.bh = col(0) + minus_x; // same shape in y
    k.ch = col(-1);
    k.dx = k.b * k.b - k.a * k.c * Rat(4);
    k.dy = k.bh * k.bh - k.ah * k.ch * Rat(4);
    return k;
}

LaurentPoly kernel_laurent(const StepWeights& w, const Rat& t) {
    LaurentPoly out = LaurentPoly::monomial(1, 1, Rat(-1));
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) out.add_term(i + 1, j + 1, t * w.at(i, j));
    return out;
}

BihomKernel::BihomKernel(const Kernel& k) : t_(k.t), weights_(k.weights) { fill(k.weights, k.t); }

BihomKernel::BihomKernel(const StepWeights& w, const Rat& t) : t_(t), weights_(w) { fill(w, t); }

void BihomKernel::fill(const StepWeights& w, const Rat& t) {
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            Rat v = t * w.at(i - 1, j - 1);
            if (i == 1 && j == 1) v -= 1;
            v.canonicalize();
            g_[static_cast<size_t>(3 * i + j)] = v;
        }
}

Poly f_poly(const Kernel& k) {
    if (k.transformed)
        throw std::invalid_argument("f is written in the original weights; pass an untransformed kernel");
    const StepWeights& d = k.weights;
    return Poly({k.t * d.at(-1, 0), k.t * d.at(-1, -1)});
}

LaurentPoly g_poly(const Kernel& k) {
    if (k.transformed)
        throw std::invalid_argument("g is written in the original weights; pass an untransformed kernel");
    const StepWeights& d = k.weights;
    const Rat& t = k.t;
    LaurentPoly g = LaurentPoly::monomial(0, 1, rat(1, 2));
    g.add_term(0, 2, -t * d.at(1, 1) / 2);
    g.add_term(0, 1, -t * d.at(0, 0) / 2);
    g.add_term(0, 0, -t * d.at(-1, -1) / 2);
    g.add_term(1, 1, -t * d.at(0, -1));
    g.add_term(1, 2, -t * d.at(1, 0));
    return g;
}

bool is_elliptic(const StepWeights& w) { return check_a2(w); }

std::string kernel_str(const Kernel& k) {
    std::ostringstream out;
    out << "(" << k.a.str("x") << ")*y^2 + (" << k.b.str("x") << ")*y + (" << k.c.str("x") << ")";
    return out.str();
}

} // namespace wk
