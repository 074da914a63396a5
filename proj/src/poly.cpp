#include "wk/poly.hpp"

#include <sstream>

namespace wk {

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t k = 0; k < out.size(); ++k)
        out[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t k = 0; k < out.size(); ++k)
        out[k] = coeff(static_cast<int>(k)) - o.coeff(static_cast<int>(k));
    return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(out));
}

Poly Poly::operator*(const Rat& s) const {
    std::vector<Rat> out(c_);
    for (auto& v : out) v *= s;
    return Poly(std::move(out));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat c = coeff(k);
        if (wk::is_zero(c)) continue;
        if (!first) out << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) out << "-";
        first = false;
        const Rat mag = abs(c);
        if (k == 0 || mag != 1) out << rat_str(mag);
        if (k > 0) {
            if (mag != 1) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

} // namespace wk
