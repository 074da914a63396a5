#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace wk {

/// Exact rational scalar. GMP keeps it reduced with a positive denominator,
/// which is exactly the canonical form used by every file format here.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p" or "p/q" (q != 0). Throws std::invalid_argument on anything else.
Rat parse_rat(const std::string& text);

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

} // namespace wk
