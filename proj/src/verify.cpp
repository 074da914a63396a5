#include "wk/verify.hpp"

#include "wk/kernel.hpp"

#include <sstream>
#include <stdexcept>

namespace wk {

namespace {

// The kernel as a series in the rescaled variable: -xy at order 0 and
// t * sum d(i,j) x^(i+1) y^(j+1) at order 1.
TruncSeries kernel_series(const StepWeights& w, const Rat& t, int order) {
    TruncSeries k(order);
    k.set_coeff(0, LaurentPoly::monomial(1, 1, Rat(-1)));
    if (order >= 1) {
        LaurentPoly s;
        for (int i = -1; i <= 1; ++i)
            for (int j = -1; j <= 1; ++j) s.add_term(i + 1, j + 1, t * w.at(i, j));
        k.set_coeff(1, std::move(s));
    }
    return k;
}

TruncSeries scaled_section(const WalkTable& table, Section which, const Rat& t) {
    return section(table, which).scale_orders(t);
}

// series * (t * poly(x,y)); the polynomial sits at order one.
TruncSeries mul_order1(const TruncSeries& s, const LaurentPoly& p) {
    return s.mul_laurent(p).shift(1);
}

void require_order(const WalkTable& table) {
    if (table.order() < 1) throw std::invalid_argument("order must be at least 1");
}

} // namespace

TruncSeries check_plane_equation(const WalkTable& table, const Rat& t) {
    require_order(table);
    const StepWeights& w = table.weights();
    const int order = table.order();

    // c(x) and ch(y) carry one factor of t.
    LaurentPoly cx;
    cx.add_term(0, 0, t * w.at(-1, -1));
    cx.add_term(1, 0, t * w.at(0, -1));
    cx.add_term(2, 0, t * w.at(1, -1));
    LaurentPoly chy;
    chy.add_term(0, 0, t * w.at(-1, -1));
    chy.add_term(0, 1, t * w.at(-1, 0));
    chy.add_term(0, 2, t * w.at(-1, 1));

    TruncSeries res = series_mul(kernel_series(w, t, order), scaled_section(table, Section::C, t));
    res = res - mul_order1(scaled_section(table, Section::Cminus0, t), cx);
    res = res - mul_order1(scaled_section(table, Section::C0minus, t), chy);
    res = res - scaled_section(table, Section::C00, t).scale(t * w.at(-1, -1)).shift(1);
    res = res + TruncSeries::constant(order, LaurentPoly::monomial(1, 1, Rat(1)));
    return res;
}

TruncSeries check_plane_equation(const StepWeights& w, const Rat& t, int order) {
    return check_plane_equation(enumerate(w, order), t);
}

TruncSeries check_sym_equation(const WalkTable& table, const Rat& t) {
    require_order(table);
    const StepWeights& w = table.weights();
    if (!check_a1(w)) throw std::domain_error("symmetric split needs a diagonally symmetric model");
    const int order = table.order();

    LaurentPoly chy;
    chy.add_term(0, 0, t * w.at(-1, -1));
    chy.add_term(0, 1, t * w.at(-1, 0));

    // Multiplier of the diagonal series: xy/2 at order 0, minus the step
    // terms that stay on or cross the diagonal at order 1.
    TruncSeries diag_mult(order);
    diag_mult.set_coeff(0, LaurentPoly::monomial(1, 1, rat(1, 2)));
    {
        LaurentPoly m1;
        m1.add_term(2, 2, -t * w.at(1, 1) / 2);
        m1.add_term(1, 1, -t * w.at(0, 0) / 2);
        m1.add_term(0, 0, -t * w.at(-1, -1) / 2);
        m1.add_term(1, 0, -t * w.at(0, -1));
        m1.add_term(2, 1, -t * w.at(1, 0));
        diag_mult.set_coeff(1, std::move(m1));
    }

    TruncSeries rhs = TruncSeries::constant(order, LaurentPoly::monomial(1, 1, rat(-1, 2)));
    rhs = rhs + mul_order1(scaled_section(table, Section::C0minus, t), chy);
    rhs = rhs + scaled_section(table, Section::C00, t).scale(t * w.at(-1, -1) / 2).shift(1);
    rhs = rhs + series_mul(diag_mult, scaled_section(table, Section::D, t));

    return series_mul(kernel_series(w, t, order), scaled_section(table, Section::L, t)) - rhs;
}

TruncSeries check_sym_equation(const StepWeights& w, const Rat& t, int order) {
    return check_sym_equation(enumerate(w, order), t);
}

TruncSeries check_octant_equation(const WalkTable& table, const Rat& t) {
    require_order(table);
    const StepWeights& w = table.weights();
    if (!check_a1(w)) throw std::domain_error("quadrant split needs a diagonally symmetric model");
    const int order = table.order();
    const StepWeights wphi = phi_transform(w);

    // f(x) = t (d(-1,0) + d(-1,-1) x). The boundary term is f(x) C_{0-}(x):
    // transporting the symmetric-split equation monomial-by-monomial and
    // multiplying by x lands the x factor on the g and origin terms only,
    // and the counts agree with exactly that placement.
    LaurentPoly f;
    f.add_term(0, 0, t * w.at(-1, 0));
    f.add_term(1, 0, t * w.at(-1, -1));

    // x g(x,y): y/2 gains one x; the order-one part collects the diagonal
    // and crossing step terms.
    TruncSeries xg(order);
    xg.set_coeff(0, LaurentPoly::monomial(1, 1, rat(1, 2)));
    {
        LaurentPoly g1;
        g1.add_term(1, 2, -t * w.at(1, 1) / 2);
        g1.add_term(1, 1, -t * w.at(0, 0) / 2);
        g1.add_term(1, 0, -t * w.at(-1, -1) / 2);
        g1.add_term(2, 1, -t * w.at(0, -1));
        g1.add_term(2, 2, -t * w.at(1, 0));
        xg.set_coeff(1, std::move(g1));
    }

    TruncSeries rhs = TruncSeries::constant(order, LaurentPoly::monomial(1, 1, rat(-1, 2)));
    rhs = rhs + mul_order1(scaled_section(table, Section::C0minus_x, t), f);
    rhs = rhs + series_mul(xg, scaled_section(table, Section::Dphi, t));
    rhs = rhs + scaled_section(table, Section::C00, t)
                    .scale(t * w.at(-1, -1) / 2)
                    .mul_laurent(LaurentPoly::monomial(1, 0, Rat(1)))
                    .shift(1);

    return series_mul(kernel_series(wphi, t, order), scaled_section(table, Section::Lphi, t)) -
           rhs;
}

TruncSeries check_octant_equation(const StepWeights& w, const Rat& t, int order) {
    return check_octant_equation(enumerate(w, order), t);
}

VerifyOutcome verify_model(const StepWeights& w, const Rat& t, int order) {
    VerifyOutcome out;
    const WalkTable table = enumerate(w, order);
    auto inspect = [&](const char* label, const TruncSeries& res) {
        if (!out.all_zero || res.is_zero()) return;
        const auto term = res.first_term();
        std::ostringstream msg;
        const auto& [n, i, j, c] = *term;
        msg << label << " residual at t^" << n << " x^" << i << " y^" << j << ": " << rat_str(c);
        out.all_zero = false;
        out.first_failure = msg.str();
    };
    inspect("plane", check_plane_equation(table, t));
    if (check_a1(w)) {
        inspect("symmetric-split", check_sym_equation(table, t));
        inspect("quadrant-split", check_octant_equation(table, t));
    }
    return out;
}

LaurentPoly quadrant_coordinates(const LaurentPoly& p) {
    return p.map_exponents([](int k, int l) { return LaurentPoly::Exp{k - l, k}; });
}

} // namespace wk
