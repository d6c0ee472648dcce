#include "hermit2p/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace hermit2p {

namespace {

// Codeword enumerator over a fixed generator matrix. Messages are walked in
// odometer order (digit 0 fastest); stepping one message adds a precomputed
// per-digit delta row to the running codeword, so each word costs O(n) field
// additions (amortized Q/(Q-1) row additions per word including carries).
class Enumerator {
 public:
  Enumerator(const Field& f, std::size_t n, std::vector<std::vector<Elem>> rows)
      : f_(f), n_(n), k_(rows.size()), q_(f.order()), rows_(std::move(rows)) {
    const bool xor_path = f_.add_table() == nullptr;
    delta_rows_.resize(k_ * q_ * n_);
    for (std::size_t d = 0; d < k_; ++d)
      for (std::uint32_t v = 0; v < q_; ++v) {
        const Elem step = f_.sub(f_.element((v + 1) % q_), f_.element(v));
        Elem* out = delta_rows_.data() + (d * q_ + v) * n_;
        for (std::size_t t = 0; t < n_; ++t) out[t] = f_.mul(step, rows_[d][t]);
      }
    if (!xor_path) {
      // One add-table row pointer per delta entry: apply becomes a single
      // indexed load per position.
      slices_.resize(delta_rows_.size());
      const Elem* add = f_.add_table();
      for (std::size_t idx = 0; idx < delta_rows_.size(); ++idx)
        slices_[idx] = add + std::size_t(delta_rows_[idx]) * q_;
    }
  }

  std::uint64_t words() const {
    std::uint64_t total = 1;
    for (std::size_t d = 0; d < k_; ++d) total *= q_;
    return total;
  }

  // Weight counts over messages with index in [start, stop).
  std::vector<std::uint64_t> count_range(std::uint64_t start,
                                         std::uint64_t stop) const {
    if (slices_.empty()) return count_range_impl<true>(start, stop);
    return count_range_impl<false>(start, stop);
  }

 private:
  template <bool kXor>
  std::vector<std::uint64_t> count_range_impl(std::uint64_t start,
                                              std::uint64_t stop) const {
    std::vector<std::uint64_t> counts(n_ + 1, 0);
    if (start >= stop) return counts;

    std::vector<std::uint32_t> digits(k_, 0);
    std::uint64_t rest = start;
    for (std::size_t d = 0; d < k_; ++d) {
      digits[d] = std::uint32_t(rest % q_);
      rest /= q_;
    }
    std::vector<Elem> cw(n_, 0);
    for (std::size_t d = 0; d < k_; ++d)
      if (digits[d] != 0)
        for (std::size_t t = 0; t < n_; ++t)
          cw[t] = f_.add(cw[t], f_.mul(f_.element(digits[d]), rows_[d][t]));

    std::size_t w = n_ - std::count(cw.begin(), cw.end(), Elem(0));
    ++counts[w];

    Elem* const word = cw.data();
    for (std::uint64_t i = start + 1; i < stop; ++i) {
      std::size_t d = 0;
      while (digits[d] == q_ - 1) {  // carries: update without counting
        apply<kXor, false>(word, d, q_ - 1);
        digits[d++] = 0;
      }
      w = apply<kXor, true>(word, d, digits[d]);
      ++digits[d];
      ++counts[w];
    }
    return counts;
  }

  // Adds delta row (d, v) to the running word; when kCount, returns the new
  // Hamming weight of the whole word.
  template <bool kXor, bool kCount>
  std::size_t apply(Elem* word, std::size_t d, std::uint32_t v) const {
    const std::size_t base = (d * q_ + v) * n_;
    std::size_t w = 0;
    if constexpr (kXor) {
      const Elem* delta = delta_rows_.data() + base;
      for (std::size_t t = 0; t < n_; ++t) {
        word[t] = Elem(word[t] ^ delta[t]);
        if constexpr (kCount) w += word[t] != 0;
      }
    } else {
      const Elem* const* slice = slices_.data() + base;
      for (std::size_t t = 0; t < n_; ++t) {
        word[t] = slice[t][word[t]];
        if constexpr (kCount) w += word[t] != 0;
      }
    }
    return w;
  }

  const Field& f_;
  std::size_t n_, k_;
  std::uint64_t q_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<Elem> delta_rows_;        // (digit, value) -> scaled row
  std::vector<const Elem*> slices_;     // add-table rows, non-XOR fields only
};

std::vector<std::vector<Elem>> generator_rows(const LinearCode& c) {
  std::vector<std::vector<Elem>> rows(c.dimension());
  for (std::size_t r = 0; r < c.dimension(); ++r)
    rows[r].assign(c.row(r).begin(), c.row(r).end());
  return rows;
}

void check_word_bound(std::size_t dims, std::uint32_t order) {
  double bits = 0;
  for (std::size_t d = 0; d < dims; ++d) bits += std::log2(double(order));
  if (bits > 62)
    throw BudgetExceeded("enumeration would exceed 2^62 words");
}

// Merged weight counts over message indices [first, last).
std::vector<std::uint64_t> enumerate_counts(const Enumerator& walker,
                                            std::uint64_t first,
                                            std::uint64_t last,
                                            unsigned threads) {
  const std::uint64_t total = last - first;
  const unsigned workers =
      unsigned(std::min<std::uint64_t>(threads == 0 ? 1 : threads,
                                       std::max<std::uint64_t>(total, 1)));
  if (workers <= 1) return walker.count_range(first, last);

  std::vector<std::vector<std::uint64_t>> partial(workers);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = total / workers, extra = total % workers;
  std::uint64_t cursor = first;
  for (unsigned wk = 0; wk < workers; ++wk) {
    const std::uint64_t size = chunk + (wk < extra ? 1 : 0);
    const std::uint64_t lo = cursor, hi = cursor + size;
    cursor = hi;
    pool.emplace_back([&walker, &partial, wk, lo, hi] {
      partial[wk] = walker.count_range(lo, hi);
    });
  }
  for (std::thread& t : pool) t.join();

  std::vector<std::uint64_t> merged(partial[0].size(), 0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i < merged.size(); ++i) merged[i] += p[i];
  return merged;
}

WeightDistribution to_distribution(const std::vector<std::uint64_t>& counts) {
  WeightDistribution w;
  w.counts.assign(counts.begin(), counts.end());
  return w;
}

BigInt power(std::uint64_t base, std::size_t exponent) {
  BigInt acc = 1;
  for (std::size_t i = 0; i < exponent; ++i) acc *= base;
  return acc;
}

}  // namespace

BigInt WeightDistribution::total() const {
  BigInt sum = 0;
  for (const BigInt& c : counts) sum += c;
  return sum;
}

long long WeightDistribution::min_positive() const {
  for (std::size_t w = 1; w < counts.size(); ++w)
    if (counts[w] > 0) return (long long)w;
  throw std::domain_error("distribution has no nonzero-weight words");
}

unsigned resolve_thread_count(const OracleOptions& opt) {
  if (opt.threads > 0) return opt.threads;
  if (const char* env = std::getenv("HERMIT2P_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1024) return unsigned(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

WeightDistribution weight_distribution(const LinearCode& c,
                                       const OracleOptions& opt) {
  const std::size_t n = c.length(), k = c.dimension();
  if (k == 0) {
    WeightDistribution w;
    w.counts.assign(n + 1, 0);
    w.counts[0] = 1;
    return w;
  }
  const std::size_t dims = std::min(k, n - k);
  if (dims > opt.budget)
    throw BudgetExceeded("weight_distribution: min(k, n-k) = " +
                         std::to_string(dims) + " exceeds budget " +
                         std::to_string(opt.budget));
  check_word_bound(dims, c.field().order());
  const unsigned threads = resolve_thread_count(opt);

  WeightDistribution result;
  if (k <= n - k) {
    Enumerator walker(c.field(), n, generator_rows(c));
    result = to_distribution(enumerate_counts(walker, 0, walker.words(), threads));
  } else {
    const LinearCode dual = nullspace_dual(c);
    Enumerator walker(c.field(), n, generator_rows(dual));
    const WeightDistribution dual_dist =
        to_distribution(enumerate_counts(walker, 0, walker.words(), threads));
    result = macwilliams(dual_dist, n, dual.dimension(), c.field().order());
  }
  if (result.counts[0] != 1 || result.total() != power(c.field().order(), k))
    throw std::logic_error("weight distribution failed its consistency check");
  return result;
}

WeightDistribution macwilliams(const WeightDistribution& w, std::size_t n,
                               std::size_t k, std::uint64_t field_order) {
  if (w.counts.size() != n + 1)
    throw std::invalid_argument("distribution length does not match n");
  const BigInt size = power(field_order, k);
  if (w.total() != size)
    throw std::invalid_argument("distribution sum is not field_order^k");

  std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
  }
  std::vector<BigInt> qm1(n + 1);
  qm1[0] = 1;
  for (std::size_t t = 1; t <= n; ++t) qm1[t] = qm1[t - 1] * (field_order - 1);

  WeightDistribution out;
  out.counts.assign(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (w.counts[i] == 0) continue;
      BigInt kraw = 0;  // Krawtchouk polynomial K_j(i)
      for (std::size_t s = 0; s <= std::min(i, j); ++s) {
        if (j - s > n - i) continue;
        const BigInt term = qm1[j - s] * binom[i][s] * binom[n - i][j - s];
        if (s % 2)
          kraw -= term;
        else
          kraw += term;
      }
      acc += w.counts[i] * kraw;
    }
    const BigInt count = acc / size;
    if (count * size != acc || count < 0)
      throw std::logic_error("MacWilliams transform is not integral");
    out.counts[j] = count;
  }
  return out;
}

WeightDistribution distribution_difference(const WeightDistribution& outer,
                                           const WeightDistribution& inner) {
  if (outer.counts.size() != inner.counts.size())
    throw std::invalid_argument("distribution lengths differ");
  WeightDistribution diff;
  diff.counts.resize(outer.counts.size());
  for (std::size_t i = 0; i < outer.counts.size(); ++i) {
    diff.counts[i] = outer.counts[i] - inner.counts[i];
    if (diff.counts[i] < 0)
      throw std::logic_error("distribution difference went negative");
  }
  return diff;
}

long long min_weight(const LinearCode& c, const OracleOptions& opt) {
  if (c.dimension() == 0)
    throw std::domain_error("the zero code has no nonzero words");
  return weight_distribution(c, opt).min_positive();
}

long long coset_min_weight(const LinearCode& c2, const LinearCode& c1,
                           const OracleOptions& opt) {
  if (!is_subcode(c1, c2))
    throw std::invalid_argument("inner code is not a subcode of the outer");
  const std::size_t n = c2.length(), k1 = c1.dimension(), k2 = c2.dimension();
  if (k1 == k2) throw std::invalid_argument("set difference of equal codes is empty");

  // Two exact routes: subtract the two full distributions, or walk the words
  // of C2 outside C1 directly. Whenever the direct walk fits the budget so
  // does the subtraction (k1 < k2 <= budget bounds both enumerations), so the
  // choice between feasible routes is by estimated enumeration cost.
  const std::size_t dims1 = std::min(k1, n - k1), dims2 = std::min(k2, n - k2);
  const bool can_subtract = dims1 <= opt.budget && dims2 <= opt.budget;
  const bool can_walk = k2 <= opt.budget;
  if (!can_subtract && !can_walk)
    throw BudgetExceeded("coset_min_weight: neither both distributions (dims " +
                         std::to_string(dims1) + ", " + std::to_string(dims2) +
                         ") nor direct enumeration (dim " + std::to_string(k2) +
                         ") fit budget " + std::to_string(opt.budget));
  const double logq = std::log2(double(c2.field().order()));
  const bool prefer_walk =
      can_walk && (!can_subtract ||
                   k2 * logq < 1 + std::max(dims1, dims2) * logq);
  if (!prefer_walk)
    return distribution_difference(weight_distribution(c2, opt),
                                   weight_distribution(c1, opt))
        .min_positive();
  check_word_bound(k2, c2.field().order());

  // Direct route: generators [rows of C1 | extension rows from C2], with the
  // C1 digits cycling fastest. Message indices below order^k1 are exactly the
  // words of C1, so the walk starts just past them.
  std::vector<std::vector<Elem>> rows = generator_rows(c1);
  RowSpace span(c1);
  for (std::size_t r = 0; r < k2; ++r)
    if (span.insert(c2.row(r)))
      rows.emplace_back(c2.row(r).begin(), c2.row(r).end());
  if (rows.size() != k2)
    throw std::logic_error("extension rows do not complete the outer code");

  Enumerator walker(c2.field(), n, std::move(rows));
  std::uint64_t inner_words = 1;
  for (std::size_t d = 0; d < k1; ++d) inner_words *= c2.field().order();
  const auto counts = enumerate_counts(walker, inner_words, walker.words(),
                                       resolve_thread_count(opt));
  return to_distribution(counts).min_positive();
}

long long dual_distance_oracle(const LinearCode& c, const OracleOptions& opt) {
  const LinearCode dual = nullspace_dual(c);
  if (dual.dimension() == 0)
    throw std::domain_error("dual of the full space is the zero code");
  return min_weight(dual, opt);
}

}  // namespace hermit2p
