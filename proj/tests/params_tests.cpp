#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "hermit2p/params.hpp"
#include "hermit2p/rrspace.hpp"

using namespace hermit2p;

TEST_CASE("r decomposition: frozen values and exhaustive uniqueness") {
  CHECK(decompose_r(4, 3) == RDecomposition{3, 2, 3});    // 7 = 10 - 3
  CHECK(decompose_r(8, 3) == RDecomposition{3, 2, 7});    // 11 = 18 - 7
  CHECK(decompose_r(8, 30) == RDecomposition{30, 5, 7});  // 38 = 45 - 7
  CHECK(decompose_r(2, 0) == RDecomposition{0, 1, 1});

  for (unsigned q : {2u, 3u, 4u, 8u})
    for (long long r = 0; r <= (long long)q * (q + 1); ++r) {
      const RDecomposition dec = decompose_r(q, r);
      CHECK(dec.c >= 1);
      CHECK(dec.a >= 0);
      CHECK(dec.a <= q);
      CHECK(r + q == dec.c * (q + 1) - dec.a);
      // No other (c, a) in range satisfies the identity.
      int solutions = 0;
      for (long long c = 1; c * (q + 1) <= r + 2 * q + 1; ++c)
        for (long long a = 0; a <= q; ++a)
          if (r + q == c * (q + 1) - a) ++solutions;
      CHECK(solutions == 1);
    }

  CHECK_THROWS_AS(decompose_r(4, -1), std::invalid_argument);
  CHECK_THROWS_AS(decompose_r(4, 21), std::invalid_argument);
}

TEST_CASE("two-point parameter formula") {
  CHECK(two_point_params(4, 5) == ClassicalParams{63, 53, 7, CodeFamily::two_point});
  CHECK(two_point_params(8, 3) ==
        ClassicalParams{511, 481, 14, CodeFamily::two_point});
  CHECK(two_point_params(2, 3) == ClassicalParams{7, 4, 3, CodeFamily::two_point});
  CHECK(two_point_params(2, 0).d == 1);  // the full [7,7] space
  CHECK_THROWS_AS(two_point_params(2, 7), std::invalid_argument);
}

TEST_CASE("one-point parameter formula") {
  CHECK(one_point_params(4, 5).d == 5);
  CHECK(one_point_params(4, 6).d == 8);  // a=0: families coincide
  CHECK(one_point_params(8, 9).d == 9);
  CHECK(one_point_params(4, 5).k == 53);
  CHECK(one_point_params(4, 6).k == 52);
  CHECK(one_point_params(8, 9).k == 475);

  for (unsigned q : {2u, 3u, 4u, 8u})
    for (long long r = 0; r <= (long long)q * (q + 1); ++r) {
      const ClassicalParams one = one_point_params(q, r);
      const ClassicalParams two = two_point_params(q, r);
      CHECK(one.k == two.k);
      CHECK(one.d <= two.d);  // the correction term is nonnegative
      CHECK(one.d >= 1);
      CHECK(one.k >= 0);
      CHECK(one.k <= one.n);
      const RDecomposition dec = decompose_r(q, r);
      if (dec.a == 0 || dec.a == q)
        CHECK(one.d == two.d);
      else if (r == 0)
        CHECK(one.d == 1);  // formula result clamped up to the trivial bound
      else
        CHECK(two.d - one.d ==
              std::max<long long>(0, (long long)q - dec.c));
    }
}

TEST_CASE("divisor attached to the two-point family") {
  CHECK(two_point_code_divisor(2, 3) == TwoPointDivisor{6, -2});
  CHECK(two_point_code_divisor(4, 3) == TwoPointDivisor{62, -2});
  CHECK(two_point_code_divisor(8, 3) == TwoPointDivisor{510, -2});
  for (unsigned q : {2u, 3u, 4u})
    for (long long r = 0; r <= (long long)q * (q + 1); ++r)
      CHECK(two_point_code_divisor(q, r).degree() ==
            (long long)q * q * q - 1 - r);
}

TEST_CASE("residue-side distance formula") {
  // (c,a) = (2,1) at q=4: B = 9P-4Q, deg 5, distance 5 + 2 + 0 = 7.
  CHECK(dual_distance_omega(4, {9, -4}) == 7);
  // (c,a) = (2,1) at q=2: B = 5P-2Q, deg 3, distance 3.
  CHECK(dual_distance_omega(2, {5, -2}) == 3);
  // a=q with c >= q: both correction terms vanish.
  CHECK(dual_distance_omega(2, {7, -2}) == 5);   // c=3, a=2=q, deg 5
  CHECK(dual_distance_omega(3, {13, -3}) == 10);  // c=4, a=3=q, deg 10

  CHECK_THROWS_AS(dual_distance_omega(2, {5, -1}), std::invalid_argument);
  CHECK_THROWS_AS(dual_distance_omega(2, {5, 0}), std::invalid_argument);
  CHECK_THROWS_AS(dual_distance_omega(2, {1, -2}), std::invalid_argument);

  // Consistency with the primal formula at r = deg B.
  for (unsigned q : {2u, 3u, 4u, 8u})
    for (long long r = 0; r <= (long long)q * (q + 1); ++r) {
      const RDecomposition dec = decompose_r(q, r);
      const TwoPointDivisor b{dec.c * (q + 1) - dec.a, -(long long)q};
      CHECK(b.degree() == r);
      CHECK(dual_distance_omega(q, b) == two_point_params(q, r).d);
    }
}

TEST_CASE("best dimension for a designed distance") {
  CHECK(best_dim_for_delta(4, 5, CodeFamily::two_point) == BestDimension{55, 3});
  CHECK(best_dim_for_delta(8, 33, CodeFamily::two_point) ==
        BestDimension{454, 30});
  CHECK(best_dim_for_delta(8, 55, CodeFamily::one_point) ==
        BestDimension{429, 55});
  CHECK_THROWS_AS(best_dim_for_delta(2, 7, CodeFamily::two_point),
                  std::domain_error);
  CHECK_THROWS_AS(best_dim_for_delta(2, 1, CodeFamily::two_point),
                  std::invalid_argument);

  // The scan returns the minimal qualifying r, hence the maximal dimension.
  for (unsigned q : {2u, 3u, 4u})
    for (long long delta = 2; delta <= q; ++delta) {
      const BestDimension best = best_dim_for_delta(q, delta, CodeFamily::two_point);
      for (long long r = 0; r < best.r; ++r)
        CHECK(two_point_params(q, r).d < delta);
      CHECK(two_point_params(q, best.r).d >= delta);
    }
}

TEST_CASE("dimension table over GF(16)") {
  const std::vector<TableRow> expected{
      {5, 53, 55, 3},
      {7, 52, 53, 5},
      {9, 49, 50, 8},
      {11, 47, 48, 10},
  };
  CHECK(parameter_table(4) == expected);
}

TEST_CASE("dimension table over GF(64)") {
  const std::vector<TableRow> expected{
      {9, 475, 481, 3},   {11, 474, 481, 3},  {13, 474, 481, 3},
      {15, 474, 475, 9},  {17, 467, 472, 12}, {19, 465, 472, 12},
      {21, 465, 472, 12}, {23, 465, 466, 18}, {25, 459, 463, 21},
      {27, 457, 463, 21}, {29, 456, 459, 25}, {31, 456, 457, 27},
      {33, 451, 454, 30}, {35, 449, 454, 30}, {37, 447, 450, 34},
      {39, 447, 448, 36}, {41, 443, 445, 39}, {43, 441, 443, 41},
      {45, 439, 441, 43}, {47, 438, 439, 45}, {49, 435, 436, 48},
      {51, 433, 434, 50}, {53, 431, 432, 52}, {55, 429, 430, 54},
  };
  CHECK(parameter_table(8) == expected);
}

TEST_CASE("explicit table ranges") {
  // Single row, explicit window.
  const std::vector<TableRow> one = parameter_table(4, 7, 7, 2);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == TableRow{7, 52, 53, 5});
  // Step 1 interleaves even designed distances.
  const std::vector<TableRow> fine = parameter_table(4, 5, 6, 1);
  REQUIRE(fine.size() == 2);
  CHECK(fine[0].delta == 5);
  CHECK(fine[1].delta == 6);
  CHECK(fine[1].dim_two_point <= fine[0].dim_two_point);
  CHECK_THROWS_AS(parameter_table(4, 5, 7, 0), std::invalid_argument);
}
