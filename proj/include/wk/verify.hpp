#pragma once

#include "wk/model.hpp"
#include "wk/series.hpp"
#include "wk/walks.hpp"

namespace wk {

/// Residuals of the functional equations at truncation order N, after the
/// substitution t -> t*u that folds the sample value t into the series
/// variable. Every residual must vanish identically; a nonzero monomial
/// (n, i, j) pinpoints the offending walk count or kernel coefficient.
/// The table overloads accept a precomputed (possibly corrupted) count table,
/// which the residuals are linear in.

/// Full-plane-style equation over the three-quarter region:
/// K C - c(x) C_{-0}(1/x) - ch(y) C_{0-}(1/y) - t d(-1,-1) C00 + xy.
TruncSeries check_plane_equation(const WalkTable& table, const Rat& t);
TruncSeries check_plane_equation(const StepWeights& w, const Rat& t, int order);

/// The symmetric-split equation for diagonal models: K L against the
/// boundary series and the diagonal term. Requires check_a1.
TruncSeries check_sym_equation(const WalkTable& table, const Rat& t);
TruncSeries check_sym_equation(const StepWeights& w, const Rat& t, int order);

/// The quadrant-coordinates equation: K_phi L_phi against x f(x) C_{0-}(x),
/// x g(x,y) D_phi(y) and the origin term. Requires check_a1.
TruncSeries check_octant_equation(const WalkTable& table, const Rat& t);
TruncSeries check_octant_equation(const StepWeights& w, const Rat& t, int order);

/// Runs every check that applies (the split equations only under A1) on one
/// shared count table and reports the first failing monomial.
struct VerifyOutcome {
    bool all_zero = true;
    std::string first_failure; // "<equation> at t^n x^i y^j: coeff"
};
VerifyOutcome verify_model(const StepWeights& w, const Rat& t, int order);

/// Monomial substitution x^k y^l -> x^(k-l) y^k induced by the coordinate
/// change to the quadrant; links the two split equations.
LaurentPoly quadrant_coordinates(const LaurentPoly& p);

} // namespace wk
