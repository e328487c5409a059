#pragma once

// Dense univariate polynomials over Z, the integer kernel under the rational
// polynomial types. Coefficients are stored low degree first and trimmed so
// that the last entry is nonzero; the zero polynomial is the empty vector.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace multiplane::zpoly {

using ZPoly = std::vector<mpz_class>;
using ZMatrix = std::vector<std::vector<ZPoly>>;

void trim(ZPoly& p);
int degree(const ZPoly& p);
bool is_zero(const ZPoly& p);

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const mpz_class& c);
ZPoly derivative(const ZPoly& a);

/// Quotient a/b when b divides a in Z[u]; throws std::domain_error otherwise.
ZPoly divexact(const ZPoly& a, const ZPoly& b);

/// True when b divides a in Z[u]. For primitive b this is divisibility in Q[u].
bool divides(const ZPoly& b, const ZPoly& a);

mpz_class content(const ZPoly& a);

/// a / content(a), normalized to a positive leading coefficient.
ZPoly primitive_part(const ZPoly& a);

/// Primitive gcd with positive leading coefficient, computed by CRT over word
/// primes. The result is certified by trial division of both inputs, so the
/// answer is exact regardless of unlucky primes.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Determinant of a square matrix over Z[u] by fraction-free (Bareiss)
/// elimination.
ZPoly determinant(ZMatrix m);

/// Primes just below 2^62 used by the modular routines.
const std::vector<std::uint64_t>& word_primes(std::size_t count);

}  // namespace multiplane::zpoly
