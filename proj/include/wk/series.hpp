#pragma once

#include "wk/laurent.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <tuple>
#include <vector>

namespace wk {

/// Power series in t truncated at a fixed inclusive order. Coefficients are
/// Laurent polynomials in x, y; arithmetic truncates at the common order.
class TruncSeries {
public:
    explicit TruncSeries(int order);

    static TruncSeries constant(int order, LaurentPoly c0);

    int order() const { return order_; }
    const LaurentPoly& coeff(int n) const { return c_[static_cast<size_t>(n)]; }
    void set_coeff(int n, LaurentPoly value);

    bool is_zero() const;
    /// Lowest offending monomial (n, i, j, coefficient) of a nonzero series.
    std::optional<std::tuple<int, int, int, Rat>> first_term() const;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator-() const;

    TruncSeries scale(const Rat& s) const;
    TruncSeries mul_laurent(const LaurentPoly& m) const;
    /// Multiplication by t^k (drops the top k coefficients).
    TruncSeries shift(int k) const;
    /// Rescales order n by s^n; substituting t -> s*t.
    TruncSeries scale_orders(const Rat& s) const;

    friend bool operator==(const TruncSeries& l, const TruncSeries& r) {
        return l.order_ == r.order_ && l.c_ == r.c_;
    }

private:
    void require_same_order(const TruncSeries& o) const;

    int order_;
    std::vector<LaurentPoly> c_;

    friend TruncSeries series_mul(const TruncSeries&, const TruncSeries&);
    friend TruncSeries series_mul_reference(const TruncSeries&, const TruncSeries&);
};

/// Truncated Cauchy product, parallel over output orders.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
/// Serial twin of series_mul, kept as the comparison baseline.
TruncSeries series_mul_reference(const TruncSeries& a, const TruncSeries& b);

nlohmann::json series_to_json(const TruncSeries& s);

} // namespace wk
