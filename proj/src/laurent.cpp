#include "wk/laurent.hpp"

#include <sstream>

namespace wk {

LaurentPoly LaurentPoly::monomial(int i, int j, Rat c) {
    LaurentPoly p;
    if (!wk::is_zero(c)) p.terms_.emplace(Exp{i, j}, std::move(c));
    return p;
}

Rat LaurentPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(int i, int j, const Rat& c) {
    if (wk::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(Exp{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (wk::is_zero(it->second)) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out(*this);
    for (const auto& [e, c] : o.terms_) out.add_term(e.first, e.second, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out(*this);
    for (const auto& [e, c] : o.terms_) out.add_term(e.first, e.second, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::operator*(const Rat& s) const {
    LaurentPoly out;
    if (wk::is_zero(s)) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
}

LaurentPoly LaurentPoly::mul_monomial(int i, int j, const Rat& c) const {
    LaurentPoly out;
    if (wk::is_zero(c)) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(Exp{e.first + i, e.second + j}, v * c);
    return out;
}

LaurentPoly LaurentPoly::map_exponents(const std::function<Exp(int, int)>& fn) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        const Exp m = fn(e.first, e.second);
        out.add_term(m.first, m.second, c);
    }
    return out;
}

LaurentPoly LaurentPoly::swap_xy() const {
    return map_exponents([](int i, int j) { return Exp{j, i}; });
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) out << "-";
        first = false;
        const Rat mag = abs(c);
        const bool has_var = e.first != 0 || e.second != 0;
        if (!has_var || mag != 1) out << rat_str(mag);
        if (e.first != 0) {
            if (mag != 1) out << "*";
            out << "x";
            if (e.first != 1) out << "^" << e.first;
        }
        if (e.second != 0) {
            if (mag != 1 || e.first != 0) out << "*";
            out << "y";
            if (e.second != 1) out << "^" << e.second;
        }
    }
    return out.str();
}

} // namespace wk
