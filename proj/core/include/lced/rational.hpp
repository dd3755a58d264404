#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace lced {

// All lengths, cut values and distances are exact rationals. Comparisons in
// lemma checks are strict inequalities, so no floating point anywhere on the
// hot path.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "num/den" or a bare integer. Throws ParseError on malformed input
/// or a zero denominator.
Rat parse_rat(const std::string& text);

/// Canonical "num/den" rendering, denominator always explicit.
std::string rat_str(const Rat& value);

/// A possibly-infinite distance; nullopt means unreachable.
using Dist = std::optional<Rat>;

inline bool dist_leq(const Dist& d, const Rat& bound) {
    return d.has_value() && *d <= bound;
}

inline bool dist_greater(const Dist& d, const Rat& bound) {
    return !d.has_value() || *d > bound;
}

/// value^exp for small non-negative integer exponents.
Rat rat_pow(const Rat& value, unsigned exp);

/// Exact conversion; mpq_class lacks a long long constructor.
inline Rat rat_of(long long value) { return Rat(static_cast<long>(value)); }

/// num/den in canonical form. The raw two-argument mpq_class constructor does
/// not canonicalize, which breaks comparisons downstream.
inline Rat rat_frac(long long num, long long den) {
    Rat out(static_cast<long>(num), static_cast<long>(den));
    out.canonicalize();
    return out;
}

}  // namespace lced
