#include "hermit2p/params.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermit2p {

namespace {
long long genus_of(unsigned q) { return (long long)q * (q - 1) / 2; }

void check_range(unsigned q, long long r) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  if (r < 0 || r > (long long)q * (q + 1))
    throw std::invalid_argument("r must lie in [0, q(q+1)]");
}

long long distance(unsigned q, long long r, CodeFamily family) {
  const RDecomposition dec = decompose_r(q, r);
  long long d = r + std::max<long long>(0, (long long)q - dec.c);
  if (dec.a != q) {
    d += std::max<long long>(0, dec.a - dec.c);
    // The one-point code of the same dimension loses max(0, q-c) except in
    // the degenerate cases a = q and a = 0, where the families coincide.
    if (family == CodeFamily::one_point && dec.a != 0)
      d -= std::max<long long>(0, (long long)q - dec.c);
  }
  // The subtraction can reach 0 at r=0; any nonzero code has distance >= 1.
  return std::max<long long>(d, 1);
}
}  // namespace

RDecomposition decompose_r(unsigned q, long long r) {
  check_range(q, r);
  const long long target = r + q;              // = c(q+1) - a
  const long long period = (long long)q + 1;
  const long long c = (target + period - 1) / period;  // smallest c with c*period >= target
  const long long a = c * period - target;
  return {r, c, a};
}

ClassicalParams two_point_params(unsigned q, long long r) {
  check_range(q, r);
  const long long n = (long long)q * q * q - 1;
  return {n, n + 1 - genus_of(q) - r, distance(q, r, CodeFamily::two_point),
          CodeFamily::two_point};
}

ClassicalParams one_point_params(unsigned q, long long r) {
  check_range(q, r);
  const long long n = (long long)q * q * q - 1;
  return {n, n + 1 - genus_of(q) - r, distance(q, r, CodeFamily::one_point),
          CodeFamily::one_point};
}

TwoPointDivisor two_point_code_divisor(unsigned q, long long r) {
  check_range(q, r);
  return {(long long)q * q * q - r + 1, -2};
}

long long dual_distance_omega(unsigned q, TwoPointDivisor b) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  if (b.j != -(long long)q)
    throw std::invalid_argument("divisor must have Q-coefficient -q");
  if (b.degree() < 0) throw std::invalid_argument("divisor degree is negative");
  const long long period = (long long)q + 1;
  const long long c = (b.i + period - 1) / period;
  const long long a = c * period - b.i;
  long long d = b.degree() + std::max<long long>(0, (long long)q - c);
  if (a != q) d += std::max<long long>(0, a - c);
  return d;
}

BestDimension best_dim_for_delta(unsigned q, long long delta, CodeFamily family) {
  if (delta < 2) throw std::invalid_argument("designed distance must be at least 2");
  for (long long r = 0; r <= (long long)q * (q + 1); ++r) {
    const long long d = family == CodeFamily::two_point
                            ? two_point_params(q, r).d
                            : one_point_params(q, r).d;
    if (d >= delta)
      return {(long long)q * q * q - genus_of(q) - r, r};
  }
  throw std::domain_error("designed distance unattainable within the r range");
}

std::vector<TableRow> parameter_table(unsigned q, long long delta_min,
                                      long long delta_max, long long step) {
  if (step < 1) throw std::invalid_argument("step must be positive");
  std::vector<TableRow> rows;
  for (long long delta = delta_min; delta <= delta_max; delta += step) {
    const BestDimension two = best_dim_for_delta(q, delta, CodeFamily::two_point);
    const BestDimension one = best_dim_for_delta(q, delta, CodeFamily::one_point);
    rows.push_back({delta, one.dim, two.dim, two.r});
  }
  return rows;
}

std::vector<TableRow> parameter_table(unsigned q) {
  return parameter_table(q, (long long)q + 1, (long long)q * (q - 1) - 1, 2);
}

}  // namespace hermit2p
