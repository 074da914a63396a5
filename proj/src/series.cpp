#include "wk/series.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace wk {

TruncSeries::TruncSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    c_.resize(static_cast<size_t>(order) + 1);
}

TruncSeries TruncSeries::constant(int order, LaurentPoly c0) {
    TruncSeries s(order);
    s.c_[0] = std::move(c0);
    return s;
}

void TruncSeries::set_coeff(int n, LaurentPoly value) {
    if (n < 0 || n > order_) throw std::out_of_range("series coefficient index");
    c_[static_cast<size_t>(n)] = std::move(value);
}

bool TruncSeries::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

std::optional<std::tuple<int, int, int, Rat>> TruncSeries::first_term() const {
    for (int n = 0; n <= order_; ++n) {
        const auto& p = c_[static_cast<size_t>(n)];
        if (!p.is_zero()) {
            const auto& [e, v] = *p.terms().begin();
            return std::tuple{n, e.first, e.second, v};
        }
    }
    return std::nullopt;
}

void TruncSeries::require_same_order(const TruncSeries& o) const {
    if (order_ != o.order_) throw std::invalid_argument("series truncation orders differ");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    require_same_order(o);
    TruncSeries out(order_);
    for (int n = 0; n <= order_; ++n) out.c_[n] = c_[n] + o.c_[n];
    return out;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    require_same_order(o);
    TruncSeries out(order_);
    for (int n = 0; n <= order_; ++n) out.c_[n] = c_[n] - o.c_[n];
    return out;
}

TruncSeries TruncSeries::operator-() const { return scale(Rat(-1)); }

TruncSeries TruncSeries::scale(const Rat& s) const {
    TruncSeries out(order_);
    for (int n = 0; n <= order_; ++n) out.c_[n] = c_[n] * s;
    return out;
}

TruncSeries TruncSeries::mul_laurent(const LaurentPoly& m) const {
    TruncSeries out(order_);
    for (int n = 0; n <= order_; ++n) out.c_[n] = c_[n] * m;
    return out;
}

TruncSeries TruncSeries::shift(int k) const {
    if (k < 0) throw std::invalid_argument("negative t-shift");
    TruncSeries out(order_);
    for (int n = k; n <= order_; ++n) out.c_[n] = c_[n - k];
    return out;
}

TruncSeries TruncSeries::scale_orders(const Rat& s) const {
    TruncSeries out(order_);
    Rat pw(1);
    for (int n = 0; n <= order_; ++n) {
        out.c_[n] = c_[n] * pw;
        pw *= s;
    }
    return out;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    a.require_same_order(b);
    const int order = a.order_;
    TruncSeries out(order);
#pragma omp parallel for schedule(dynamic)
    for (int n = 0; n <= order; ++n) {
        LaurentPoly acc;
        for (int k = 0; k <= n; ++k) acc = acc + a.c_[k] * b.c_[n - k];
        out.c_[n] = std::move(acc);
    }
    return out;
}

TruncSeries series_mul_reference(const TruncSeries& a, const TruncSeries& b) {
    a.require_same_order(b);
    const int order = a.order_;
    TruncSeries out(order);
    for (int n = 0; n <= order; ++n) {
        LaurentPoly acc;
        for (int k = 0; k <= n; ++k) acc = acc + a.c_[k] * b.c_[n - k];
        out.c_[n] = std::move(acc);
    }
    return out;
}

nlohmann::json series_to_json(const TruncSeries& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (int n = 0; n <= s.order(); ++n)
        for (const auto& [e, c] : s.coeff(n).terms())
            terms.push_back({{"n", n}, {"i", e.first}, {"j", e.second}, {"coeff", rat_str(c)}});
    return {{"order", s.order()}, {"terms", std::move(terms)}};
}

} // namespace wk
