#ifndef SVIR_RATIONAL_HPP
#define SVIR_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace svir {

/// Exact rational scalar. Every coefficient in the engine is one of these;
/// no floating point appears anywhere.
using Rational = mpq_class;

/// p/q with explicit canonicalization (mpq_class does not reduce on
/// construction from a numerator/denominator pair).
inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Reduced "p/q" string, or plain "p" for integers. This is the one
/// serialization used by reports, JSON and the CLI.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p", "p/q", "-p/q". Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace svir

#endif  // SVIR_RATIONAL_HPP
