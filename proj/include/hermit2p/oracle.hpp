// Brute-force ground truth for code parameters: exact weight distributions,
// the MacWilliams transform, minimum weights, and set-difference minimum
// weights wt(C2 \ C1) for nested codes.
//
// Enumeration cost is controlled by a budget counted in message dimensions:
// a code is enumerable when min(k, n-k) <= budget (the dual side is obtained
// with an enumeration plus a MacWilliams transform). Exceeding the budget
// raises BudgetExceeded; results are never approximated.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermit2p/codes.hpp"

namespace hermit2p {

using BigInt = boost::multiprecision::cpp_int;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  unsigned budget = 9;  // max enumerable message dimensions
  unsigned threads = 0;  // 0: HERMIT2P_THREADS, else hardware concurrency
};

struct WeightDistribution {
  std::vector<BigInt> counts;  // counts[w] = number of words of weight w

  std::size_t length() const { return counts.size() - 1; }
  BigInt total() const;
  // Smallest w >= 1 with counts[w] > 0; throws std::domain_error when the
  // distribution has no nonzero-weight words.
  long long min_positive() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) =
      default;
};

// Worker count an oracle call will use after resolving options against the
// HERMIT2P_THREADS environment variable and the machine.
unsigned resolve_thread_count(const OracleOptions& opt);

WeightDistribution weight_distribution(const LinearCode& c,
                                       const OracleOptions& opt = {});

// Distribution of the dual of an [n, k] code over a field of the given order
// whose distribution is w. Exact integer arithmetic throughout.
WeightDistribution macwilliams(const WeightDistribution& w, std::size_t n,
                               std::size_t k, std::uint64_t field_order);

// Indexwise difference of nested distributions; throws std::logic_error if
// any count would go negative.
WeightDistribution distribution_difference(const WeightDistribution& outer,
                                           const WeightDistribution& inner);

long long min_weight(const LinearCode& c, const OracleOptions& opt = {});

// Minimum weight over C2 \ C1 for C1 a strict subcode of C2. Uses the
// difference of the two distributions when both are enumerable, otherwise
// enumerates the words of C2 outside C1 directly (requires dim C2 <= budget).
long long coset_min_weight(const LinearCode& c2, const LinearCode& c1,
                           const OracleOptions& opt = {});

long long dual_distance_oracle(const LinearCode& c, const OracleOptions& opt = {});

}  // namespace hermit2p
