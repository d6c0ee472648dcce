// Riemann-Roch spaces of two-point divisors iP + jQ on the Hermitian curve,
// where P is the point at infinity and Q the origin.
//
// Every such divisor is equivalent to i'P - j'Q with 0 <= j' <= q, by shifting
// along the principal divisor of y, which is (q+1)Q - (q+1)P. Writing
// i' = c(q+1) - a with 0 <= a <= q puts the divisor in the form
// c(q+1)P - aP - bQ, whose Riemann-Roch space has the monomial basis
//   { x^dx y^dy : 0 <= dx <= q, 0 <= dy, dx+dy <= c,
//                 dx >= a when dx+dy = c, dx >= b when dy = 0 }.
// Shifting multiplies functions by powers of y, so dimensions computed here
// apply to the divisor actually passed in.

#pragma once

#include <cstddef>
#include <vector>

namespace hermit2p {

struct TwoPointDivisor {
  long long i = 0;  // coefficient of P (infinity)
  long long j = 0;  // coefficient of Q (origin)
  long long degree() const { return i + j; }
  friend bool operator==(const TwoPointDivisor&, const TwoPointDivisor&) = default;
};

struct CanonicalDivisor {
  long long c = 0;  // represents c(q+1)P - aP - bQ
  int a = 0;        // 0 <= a <= q
  int b = 0;        // 0 <= b <= q
  friend bool operator==(const CanonicalDivisor&, const CanonicalDivisor&) = default;
};

struct Monomial {
  unsigned x_exp = 0;
  unsigned y_exp = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Equivalent divisor i'P - j'Q with 0 <= j' <= q (returned with j = -j').
TwoPointDivisor canonicalize_pq(TwoPointDivisor g, unsigned q);

CanonicalDivisor to_cab(TwoPointDivisor g, unsigned q);

// Basis of L(G), ordered by (y_exp, x_exp) ascending. Empty when l(G) = 0.
std::vector<Monomial> monomial_basis(TwoPointDivisor g, unsigned q);

std::size_t rr_dim(TwoPointDivisor g, unsigned q);

}  // namespace hermit2p
