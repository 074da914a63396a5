#include "wk/rat.hpp"

namespace wk {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
}

} // namespace wk
