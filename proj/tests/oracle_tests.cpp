#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "hermit2p/codes.hpp"
#include "hermit2p/curve.hpp"
#include "hermit2p/oracle.hpp"
#include "hermit2p/params.hpp"

using namespace hermit2p;

namespace {

// Independent reference: enumerate every message by plain per-row scaling,
// no incremental stepping. Only for tiny codes.
WeightDistribution slow_distribution(const LinearCode& c) {
  const Field& f = c.field();
  const std::size_t n = c.length(), k = c.dimension();
  std::uint64_t words = 1;
  for (std::size_t i = 0; i < k; ++i) words *= f.order();
  WeightDistribution dist;
  dist.counts.assign(n + 1, 0);
  for (std::uint64_t m = 0; m < words; ++m) {
    std::vector<Elem> word(n, 0);
    std::uint64_t rest = m;
    for (std::size_t i = 0; i < k; ++i) {
      const Elem coeff = f.element(std::uint32_t(rest % f.order()));
      rest /= f.order();
      for (std::size_t t = 0; t < n; ++t)
        word[t] = f.add(word[t], f.mul(coeff, c.row(i)[t]));
    }
    std::size_t w = 0;
    for (Elem e : word) w += e != 0;
    ++dist.counts[w];
  }
  return dist;
}

}  // namespace

TEST_CASE("weight distribution of tiny frozen codes") {
  EvaluationSet d(2);

  LinearCode ones = evaluate_code(d, {0, 0});
  WeightDistribution w = weight_distribution(ones);
  REQUIRE(w.counts.size() == 8);
  CHECK(w.counts[0] == 1);
  CHECK(w.counts[7] == 3);
  for (std::size_t i = 1; i <= 6; ++i) CHECK(w.counts[i] == 0);
  CHECK(w.total() == 4);
  CHECK(w.min_positive() == 7);

  const LinearCode zero(d.field(), 7);
  WeightDistribution wz = weight_distribution(zero);
  CHECK(wz.counts[0] == 1);
  CHECK(wz.total() == 1);
  CHECK_THROWS_AS(wz.min_positive(), std::domain_error);
}

TEST_CASE("distribution via dual + transform matches direct enumeration") {
  EvaluationSet d(2);
  // [7,4]: the library enumerates the [7,3] dual and transforms back;
  // the reference walks all 256 words directly.
  for (TwoPointDivisor g : {TwoPointDivisor{6, -2}, TwoPointDivisor{5, -1},
                            TwoPointDivisor{6, -1}, TwoPointDivisor{4, 0}}) {
    LinearCode c = evaluate_code(d, g);
    CHECK(weight_distribution(c) == slow_distribution(c));
  }
  LinearCode c6 = evaluate_code(d, {6, -2});
  WeightDistribution w = weight_distribution(c6);
  CHECK(w.total() == 256);
  CHECK(w.min_positive() == 3);
  CHECK(w.min_positive() == two_point_params(2, 3).d);
}

TEST_CASE("macwilliams transform: extremes, frozen pair, involution") {
  // Full [7,7] space over GF(4): counts[w] = C(7,w) * 3^w.
  const long long binom7[8] = {1, 7, 21, 35, 35, 21, 7, 1};
  WeightDistribution full;
  full.counts.resize(8);
  long long pow3 = 1;
  for (int i = 0; i <= 7; ++i) {
    full.counts[i] = BigInt(binom7[i]) * pow3;
    pow3 *= 3;
  }
  WeightDistribution zero;
  zero.counts.assign(8, 0);
  zero.counts[0] = 1;
  CHECK(macwilliams(full, 7, 7, 4) == zero);
  CHECK(macwilliams(zero, 7, 0, 4) == full);

  // Repetition code and its sum-zero dual, both enumerated directly.
  EvaluationSet d(2);
  LinearCode ones = evaluate_code(d, {0, 0});
  LinearCode sum_zero = nullspace_dual(ones);
  WeightDistribution w1 = slow_distribution(ones);
  WeightDistribution w6 = slow_distribution(sum_zero);
  CHECK(macwilliams(w1, 7, 1, 4) == w6);
  CHECK(macwilliams(w6, 7, 6, 4) == w1);

  // Double transform is the identity.
  LinearCode c = evaluate_code(d, {5, -1});
  WeightDistribution w = weight_distribution(c);
  CHECK(macwilliams(macwilliams(w, 7, 4, 4), 7, 3, 4) == w);

  // Inconsistent inputs are rejected.
  WeightDistribution bad = w;
  bad.counts[3] += 1;
  CHECK_THROWS_AS(macwilliams(bad, 7, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(macwilliams(w, 6, 4, 4), std::invalid_argument);
}

TEST_CASE("direct-vs-transform equality across every q=2 two-point code") {
  EvaluationSet d(2);
  for (long long deg = 0; deg <= 6; ++deg)
    for (long long j = -2; j <= 0; ++j) {
      LinearCode c = evaluate_code(d, {deg - j, j});
      if (c.dimension() == 0) continue;
      WeightDistribution direct = slow_distribution(c);
      CHECK(weight_distribution(c) == direct);
      LinearCode dual = nullspace_dual(c);
      CHECK(macwilliams(slow_distribution(dual), 7, dual.dimension(), 4) ==
            direct);
    }
}

TEST_CASE("minimum weights at q=2 match the closed-form distance") {
  EvaluationSet d(2);
  for (long long r = 0; r <= 5; ++r) {
    LinearCode c = evaluate_code(d, two_point_code_divisor(2, r));
    CHECK(min_weight(c) == two_point_params(2, r).d);
  }
  // Boundary case r = q(q+1) = 6: the closed form is a strict lower bound
  // here, not the exact distance. The code C_L((3)P - 2Q) is spanned by the
  // single function y, which is nonzero at all 7 evaluation points, so the
  // true minimum weight is 7 while the formula gives 6. This is the only
  // point in the q in {2,3} sweep where the two disagree.
  LinearCode boundary = evaluate_code(d, two_point_code_divisor(2, 6));
  CHECK(boundary.dimension() == 1);
  CHECK(min_weight(boundary) == 7);
  CHECK(two_point_params(2, 6).d == 6);
  CHECK(min_weight(boundary) > two_point_params(2, 6).d);
  CHECK_THROWS_AS(min_weight(LinearCode(d.field(), 7)), std::domain_error);
}

TEST_CASE("q=3 spot checks against the closed-form distance") {
  EvaluationSet d(3);
  for (long long r : {2, 3, 5}) {
    LinearCode c = evaluate_code(d, two_point_code_divisor(3, r));
    CHECK(c.dimension() == (std::size_t)two_point_params(3, r).k);
    CHECK(min_weight(c) == two_point_params(3, r).d);
  }
}

TEST_CASE("budget is enforced, never approximated") {
  EvaluationSet d(3);
  // r=8: [26,16] code, min(k, n-k) = 10 > default budget 9.
  LinearCode c = evaluate_code(d, two_point_code_divisor(3, 8));
  CHECK_THROWS_AS(weight_distribution(c), BudgetExceeded);
  OracleOptions louder;
  louder.budget = 10;
  CHECK_NOTHROW(weight_distribution(c, louder));

  OracleOptions tight;
  tight.budget = 2;
  EvaluationSet d2(2);
  CHECK_THROWS_AS(min_weight(evaluate_code(d2, {6, -2}), tight), BudgetExceeded);
}

TEST_CASE("set-difference minimum weight for nested codes") {
  EvaluationSet d(2);
  LinearCode inner = evaluate_code(d, {5, -1});
  LinearCode outer = evaluate_code(d, {6, -1});
  const long long coset = coset_min_weight(outer, inner);
  CHECK(coset >= min_weight(outer));
  // Subtraction route computed by hand for cross-validation.
  CHECK(coset == distribution_difference(weight_distribution(outer),
                                         weight_distribution(inner))
                     .min_positive());

  // Inner = zero code reduces to the plain minimum weight.
  CHECK(coset_min_weight(outer, LinearCode(d.field(), 7)) == min_weight(outer));

  CHECK_THROWS_AS(coset_min_weight(outer, outer), std::invalid_argument);
  CHECK_THROWS_AS(coset_min_weight(inner, outer), std::invalid_argument);

  // Nonnegativity of the difference at every index.
  WeightDistribution diff = distribution_difference(weight_distribution(outer),
                                                    weight_distribution(inner));
  for (const BigInt& c : diff.counts) CHECK(c >= 0);
  CHECK(diff.total() == weight_distribution(outer).total() -
                            weight_distribution(inner).total());
}

TEST_CASE("both coset routes agree") {
  EvaluationSet d(2);
  // Walk-preferred shape (small k2) and subtraction-preferred shape
  // (large k2) checked against each other via the distribution identity.
  for (auto [gi, go] : {std::pair<TwoPointDivisor, TwoPointDivisor>{{2, -1}, {4, -1}},
                        {{5, -1}, {6, -1}},
                        {{4, 0}, {6, 0}},
                        {{6, -2}, {7, -2}}}) {
    LinearCode inner = evaluate_code(d, gi);
    LinearCode outer = evaluate_code(d, go);
    REQUIRE(is_subcode(inner, outer));
    const long long expected =
        distribution_difference(weight_distribution(outer),
                                weight_distribution(inner))
            .min_positive();
    CHECK(coset_min_weight(outer, inner) == expected);
  }
}

TEST_CASE("dual distance oracle") {
  EvaluationSet d(2);
  LinearCode c = evaluate_code(d, {6, -2});
  CHECK(dual_distance_oracle(c) == min_weight(nullspace_dual(c)));
  CHECK_THROWS_AS(dual_distance_oracle(evaluate_code(d, {7, 0})),
                  std::domain_error);

  // Euclidean and Hermitian dual distances agree over GF(q^2).
  for (long long deg = 1; deg <= 6; ++deg)
    for (long long j = -2; j <= 0; ++j) {
      LinearCode code = evaluate_code(d, {deg - j, j});
      if (code.dimension() == 0 || code.dimension() == 7) continue;
      CHECK(dual_distance_oracle(code) == min_weight(hermitian_dual(code)));
      CHECK(weight_distribution(nullspace_dual(code)) ==
            weight_distribution(hermitian_dual(code)));
    }
}

TEST_CASE("partitioned enumeration is deterministic across thread counts") {
  EvaluationSet d2(2);
  EvaluationSet d3(3);
  OracleOptions one;
  one.threads = 1;
  OracleOptions many;
  many.threads = 3;

  LinearCode a = evaluate_code(d2, {6, -2});
  CHECK(weight_distribution(a, one) == weight_distribution(a, many));

  LinearCode b = evaluate_code(d3, two_point_code_divisor(3, 4));
  CHECK(weight_distribution(b, one) == weight_distribution(b, many));

  LinearCode inner = evaluate_code(d2, {5, -1});
  LinearCode outer = evaluate_code(d2, {6, -1});
  CHECK(coset_min_weight(outer, inner, one) ==
        coset_min_weight(outer, inner, many));
}

TEST_CASE("thread-count resolution") {
  OracleOptions opt;
  opt.threads = 5;
  CHECK(resolve_thread_count(opt) == 5);
  opt.threads = 0;
  CHECK(resolve_thread_count(opt) >= 1);
}
