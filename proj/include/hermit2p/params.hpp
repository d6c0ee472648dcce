// Closed-form parameters of the one-point and two-point evaluation codes:
// the (c,a) decomposition of r, distance formulas, and the table generator.
//
// Throughout, r indexes the family C_L(D, (q^3-r+1)P - 2Q) of length
// n = q^3-1 and dimension k(r) = q^3 - q(q-1)/2 - r, for 0 <= r <= q(q+1).

#pragma once

#include <vector>

#include "hermit2p/rrspace.hpp"

namespace hermit2p {

// The unique (c, a) with r + q = c(q+1) - a, c >= 1, 0 <= a <= q.
struct RDecomposition {
  long long r;
  long long c;
  long long a;
  friend bool operator==(const RDecomposition&, const RDecomposition&) = default;
};

enum class CodeFamily { one_point, two_point };

struct ClassicalParams {
  long long n;
  long long k;
  long long d;
  CodeFamily family;
  friend bool operator==(const ClassicalParams&, const ClassicalParams&) = default;
};

// One table row: best dimensions achieving designed distance delta, and the
// r that attains the two-point dimension.
struct TableRow {
  long long delta;
  long long dim_one_point;
  long long dim_two_point;
  long long r;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct BestDimension {
  long long dim;
  long long r;
  friend bool operator==(const BestDimension&, const BestDimension&) = default;
};

RDecomposition decompose_r(unsigned q, long long r);

// [n, k(r), d] with d = r + max(0,q-c), plus max(0,a-c) when a != q.
ClassicalParams two_point_params(unsigned q, long long r);

// The one-point code of the same dimension: distance drops by max(0,q-c)
// unless a is 0 or q, where the two families coincide.
ClassicalParams one_point_params(unsigned q, long long r);

// Divisor of the two-point code at index r: (q^3-r+1)P - 2Q.
TwoPointDivisor two_point_code_divisor(unsigned q, long long r);

// Minimum-distance formula for the residue code with divisor
// B = (c(q+1)-a)P - qQ: deg B + max(0,q-c), plus max(0,a-c) when a != q.
// B must have Q-coefficient exactly -q and nonnegative degree.
long long dual_distance_omega(unsigned q, TwoPointDivisor b);

// Largest dimension whose distance formula reaches delta, with the minimal
// r attaining it; throws std::domain_error when no r in range qualifies.
BestDimension best_dim_for_delta(unsigned q, long long delta, CodeFamily family);

// Rows for delta = delta_min, delta_min+step, ..., up to delta_max.
std::vector<TableRow> parameter_table(unsigned q, long long delta_min,
                                      long long delta_max, long long step = 2);

// Default designed-distance range: q+1, q+3, ..., q(q-1)-1.
std::vector<TableRow> parameter_table(unsigned q);

}  // namespace hermit2p
