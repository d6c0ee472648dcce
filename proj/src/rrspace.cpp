#include "hermit2p/rrspace.hpp"

#include <stdexcept>

namespace hermit2p {

namespace {
long long ceil_div(long long num, long long den) {
  long long d = num / den;
  if (num % den != 0 && (num > 0) == (den > 0)) ++d;
  return d;
}

void check_q(unsigned q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
}
}  // namespace

TwoPointDivisor canonicalize_pq(TwoPointDivisor g, unsigned q) {
  check_q(q);
  const long long period = q + 1;
  // Unique s with j - s(q+1) in [-q, 0].
  const long long s = ceil_div(g.j, period);
  return {g.i + s * period, g.j - s * period};
}

CanonicalDivisor to_cab(TwoPointDivisor g, unsigned q) {
  const TwoPointDivisor canon = canonicalize_pq(g, q);
  const long long period = q + 1;
  const long long c = ceil_div(canon.i, period);
  CanonicalDivisor out;
  out.c = c;
  out.a = int(c * period - canon.i);
  out.b = int(-canon.j);
  return out;
}

std::vector<Monomial> monomial_basis(TwoPointDivisor g, unsigned q) {
  const CanonicalDivisor d = to_cab(g, q);
  std::vector<Monomial> basis;
  if (d.c < 0) return basis;
  for (long long dy = 0; dy <= d.c; ++dy) {
    const long long dx_max = d.c - dy < q ? d.c - dy : q;
    for (long long dx = 0; dx <= dx_max; ++dx) {
      if (dx + dy == d.c && dx < d.a) continue;
      if (dy == 0 && dx < d.b) continue;
      basis.push_back({unsigned(dx), unsigned(dy)});
    }
  }
  return basis;
}

std::size_t rr_dim(TwoPointDivisor g, unsigned q) {
  return monomial_basis(g, q).size();
}

}  // namespace hermit2p
