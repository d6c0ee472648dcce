#include "hermit2p/quantum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace hermit2p {

namespace {

unsigned subfield_root(std::uint64_t order) {
  auto guess = static_cast<std::uint64_t>(std::llround(std::sqrt(double(order))));
  for (std::uint64_t c = guess > 1 ? guess - 1 : 1; c <= guess + 1; ++c)
    if (c * c == order) return static_cast<unsigned>(c);
  throw std::invalid_argument("field order is not a square");
}

void validate_params(const QuantumCodeParams& p) {
  if (p.k < 0 || p.d_x < 1 || p.d_z < p.d_x)
    throw std::logic_error("quantum parameter invariants violated (k >= 0, d_z >= d_x >= 1)");
}

// Exact minimum weights of the two quotients C2 minus dual(C1) and C1 minus
// dual(C2), plus the code distances used by the purity tests. Only called
// when k >= 1, which makes both quotients nonempty and both codes nonzero.
struct QuotientWeights {
  long long w_a;  // over C2 minus dual(C1)
  long long w_b;  // over C1 minus dual(C2)
  long long d1;
  long long d2;
};

QuotientWeights enumerate_quotients(const LinearCode& c1, const LinearCode& c2,
                                    const LinearCode& dual1,
                                    const OracleOptions& opt) {
  QuotientWeights w{};
  w.w_a = coset_min_weight(c2, dual1, opt);
  w.w_b = coset_min_weight(c1, nullspace_dual(c2), opt);
  w.d1 = min_weight(c1, opt);
  w.d2 = min_weight(c2, opt);
  return w;
}

void apply_formula_bounds(QuantumCodeParams& p, DistanceHints hints) {
  if (hints.d1 > 0 && hints.d2 > 0) {
    p.d_z = std::max(hints.d1, hints.d2);
    p.d_x = std::min(hints.d1, hints.d2);
    p.purity_note = "lower bounds from supplied code distances; quotients not enumerated";
  } else {
    p.d_z = 1;
    p.d_x = 1;
    p.purity_note = "no oracle or distance hints; trivial weight bound 1";
  }
  p.purity = Purity::unknown;
}

void apply_empty_quotients(QuantumCodeParams& p) {
  p.d_z = 1;
  p.d_x = 1;
  p.purity = Purity::unknown;
  p.purity_note = "k = 0: both quotient sets are empty; trivial weight bound 1";
}

}  // namespace

QuantumCodeParams css_symmetric(const LinearCode& c1, const LinearCode& c2,
                                const OracleOptions* oracle, DistanceHints hints) {
  LinearCode dual1 = nullspace_dual(c1);
  if (!is_subcode(dual1, c2))
    throw std::invalid_argument("symmetric construction requires dual(C1) inside C2");
  QuantumCodeParams p;
  p.n = static_cast<long long>(c1.length());
  p.k = static_cast<long long>(c1.dimension() + c2.dimension()) - p.n;
  if (p.k < 0)
    throw std::invalid_argument("negative quantum dimension");
  p.field_order = c1.field().order();
  p.construction = QuantumConstruction::css_sym;
  if (!oracle) {
    apply_formula_bounds(p, hints);
    p.d_z = p.d_x = std::min(p.d_z, p.d_x);  // symmetric: one distance
  } else if (p.k == 0) {
    apply_empty_quotients(p);
  } else {
    QuotientWeights w = enumerate_quotients(c1, c2, dual1, *oracle);
    long long d = std::min(w.w_a, w.w_b);
    long long dmin = std::min(w.d1, w.d2);
    p.d_z = p.d_x = d;
    p.purity = d == dmin ? Purity::pure : Purity::impure;
    p.purity_note = "quotient weight " + std::to_string(d) +
                    (d == dmin ? " equals" : " exceeds") +
                    " the smaller code distance " + std::to_string(dmin);
  }
  validate_params(p);
  return p;
}

QuantumCodeParams css_hermitian(const LinearCode& c, const OracleOptions* oracle,
                                long long dual_distance_hint) {
  if (!is_self_orthogonal_hermitian(c))
    throw std::invalid_argument(
        "Hermitian construction requires a Hermitian self-orthogonal code");
  QuantumCodeParams p;
  p.n = static_cast<long long>(c.length());
  p.k = p.n - 2 * static_cast<long long>(c.dimension());
  p.field_order = subfield_root(c.field().order());
  p.construction = QuantumConstruction::css_herm;
  if (!oracle) {
    apply_formula_bounds(p, {dual_distance_hint, dual_distance_hint});
  } else if (p.k == 0) {
    apply_empty_quotients(p);
  } else {
    LinearCode hdual = hermitian_dual(c);
    long long d = coset_min_weight(hdual, c, *oracle);
    long long dual_d = min_weight(hdual, *oracle);
    p.d_z = p.d_x = d;
    p.purity = d == dual_d ? Purity::pure : Purity::impure;
    p.purity_note = "quotient weight " + std::to_string(d) +
                    (d == dual_d ? " equals" : " exceeds") +
                    " the Hermitian dual distance " + std::to_string(dual_d);
  }
  validate_params(p);
  return p;
}

QuantumCodeParams css_asymmetric(const LinearCode& c1, const LinearCode& c2,
                                 const OracleOptions* oracle, DistanceHints hints) {
  LinearCode dual1 = nullspace_dual(c1);
  if (!is_subcode(dual1, c2))
    throw std::invalid_argument("asymmetric construction requires dual(C1) inside C2");
  QuantumCodeParams p;
  p.n = static_cast<long long>(c1.length());
  p.k = static_cast<long long>(c1.dimension() + c2.dimension()) - p.n;
  if (p.k < 0)
    throw std::invalid_argument("negative quantum dimension");
  p.field_order = c1.field().order();
  p.construction = QuantumConstruction::css_asym;
  if (!oracle) {
    apply_formula_bounds(p, hints);
  } else if (p.k == 0) {
    apply_empty_quotients(p);
  } else {
    QuotientWeights w = enumerate_quotients(c1, c2, dual1, *oracle);
    p.d_z = std::max(w.w_a, w.w_b);
    p.d_x = std::min(w.w_a, w.w_b);
    bool pure = std::minmax(w.w_a, w.w_b) == std::minmax(w.d1, w.d2);
    p.purity = pure ? Purity::pure : Purity::impure;
    p.purity_note = "quotient weights {" + std::to_string(p.d_x) + ", " +
                    std::to_string(p.d_z) + "} " +
                    (pure ? "equal" : "differ from") + " the code distances {" +
                    std::to_string(std::min(w.d1, w.d2)) + ", " +
                    std::to_string(std::max(w.d1, w.d2)) + "}";
  }
  validate_params(p);
  return p;
}

AqeccDesign two_point_aqecc(unsigned q, long long r1, long long r2) {
  const long long qc = q;
  const long long rmax = qc * (qc + 1);
  if (q < 2 || r1 < 0 || r1 > r2 || r2 > rmax)
    throw std::invalid_argument("two-point family requires 0 <= r1 <= r2 <= q(q+1)");
  const long long cube = qc * qc * qc;
  if (r1 + r2 > cube - qc * qc + 3)
    throw std::invalid_argument(
        "two-point family requires r1 + r2 <= q^3 - q^2 + 3 for a nested pair");
  AqeccDesign design;
  design.g1 = {cube - r1 + 1 - (qc + 1), qc - 1};
  design.g2 = two_point_code_divisor(q, r2);
  if (!dual_containment_predicate(design.g1, design.g2, q))
    throw std::logic_error("nesting assertion failed for the two-point pair");
  QuantumCodeParams& p = design.params;
  p.n = cube - 1;
  p.k = cube - qc * (qc - 1) - (r1 + r2) + 1;
  p.d_z = two_point_params(q, r2).d;
  p.d_x = two_point_params(q, r1).d;
  p.field_order = static_cast<std::uint64_t>(q) * q;
  p.construction = QuantumConstruction::css_asym;
  p.purity = Purity::unknown;
  p.purity_note =
      "closed-form distances only; purity_check_bigcss gives the per-index criterion";
  validate_params(p);
  return design;
}

QuantumCodeParams one_point_aqecc(unsigned q, long long r1, long long r2) {
  const long long qc = q;
  if (q < 2 || r1 < 0 || r1 > r2 || r2 > qc * (qc + 1))
    throw std::invalid_argument("one-point family requires 0 <= r1 <= r2 <= q(q+1)");
  const long long cube = qc * qc * qc;
  if (r1 + r2 > cube - qc * qc + 3)
    throw std::invalid_argument(
        "one-point family requires r1 + r2 <= q^3 - q^2 + 3 for a nested pair");
  QuantumCodeParams p;
  p.n = cube - 1;
  p.k = cube - qc * (qc - 1) - (r1 + r2) + 1;
  p.d_z = one_point_params(q, r2).d;
  p.d_x = one_point_params(q, r1).d;
  p.field_order = static_cast<std::uint64_t>(q) * q;
  p.construction = QuantumConstruction::css_asym;
  p.purity = Purity::unknown;
  p.purity_note = "one-point distance formulas; no codes are constructed";
  validate_params(p);
  return p;
}

std::pair<LinearCode, LinearCode> aqecc_code_pair(const EvaluationSet& d,
                                                  const AqeccDesign& design) {
  LinearCode c1 = evaluate_code(d, design.g1);
  LinearCode c2 = evaluate_code(d, design.g2);
  if (!is_subcode(nullspace_dual(c1), c2))
    throw std::logic_error("matrix-level nesting check failed for the two-point pair");
  long long k = static_cast<long long>(c1.dimension() + c2.dimension()) -
                static_cast<long long>(c1.length());
  if (k != design.params.k)
    throw std::logic_error("code pair dimensions disagree with the closed form");
  return {std::move(c1), std::move(c2)};
}

BigCssPurity purity_check_bigcss(unsigned q, long long r) {
  const long long qc = q;
  if (q < 2 || r < 0 || r > qc * (qc + 1))
    throw std::invalid_argument("purity check requires 0 <= r <= q(q+1)");
  BigCssPurity out;
  out.dual_side_distance = qc * qc * qc - 1 - r - (qc - 2) * (qc + 1);
  out.code_distance = two_point_params(q, r).d;
  out.pure = out.dual_side_distance > out.code_distance;
  return out;
}

std::vector<SearchRecord> search_nested_pairs(unsigned q, long long max_deg,
                                              const OracleOptions* oracle) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  const long long qc = q;
  const long long full_range = qc * (qc - 1);
  const long long limit = max_deg < 0 ? full_range : max_deg;
  if (limit < 0 || limit > full_range)
    throw std::invalid_argument("max_deg must lie in [0, q(q-1)]");
  const long long n = qc * qc * qc - 1;

  // One representative per divisor class: Q-coefficient in [0, q], degree in
  // [0, limit]. Dimensions are cached up front; the pair loop is integer-only.
  struct Rep {
    TwoPointDivisor g;
    long long dim;
  };
  std::vector<Rep> reps;
  for (long long j = 0; j <= qc; ++j)
    for (long long deg = 0; deg <= limit; ++deg) {
      TwoPointDivisor g{deg - j, j};
      reps.push_back({g, static_cast<long long>(rr_dim(g, q))});
    }

  std::optional<EvaluationSet> points;
  if (oracle) points.emplace(q);

  std::set<std::array<long long, 4>> seen;
  std::vector<SearchRecord> out;
  for (const Rep& a : reps)
    for (const Rep& b : reps) {
      if (a.g.i > b.g.i || a.g.j > b.g.j) continue;
      long long k = b.dim - a.dim;
      if (k <= 0) continue;
      TwoPointDivisor ca = canonicalize_pq(a.g, q);
      TwoPointDivisor cb = canonicalize_pq(b.g, q);
      if (!seen.insert({ca.i, ca.j, cb.i, cb.j}).second) continue;
      SearchRecord rec;
      rec.g1 = a.g;
      rec.g2 = b.g;
      rec.k = k;
      rec.d_z = n - b.g.degree();
      if (oracle) {
        LinearCode inner = evaluate_code(*points, a.g);
        LinearCode outer = evaluate_code(*points, b.g);
        rec.d_x = coset_min_weight(nullspace_dual(inner), nullspace_dual(outer),
                                   *oracle);
      }
      out.push_back(std::move(rec));
    }

  auto key = [](const SearchRecord& r) {
    return std::array<long long, 6>{r.g1.degree(), r.g2.degree(),
                                    r.g1.i, r.g1.j, r.g2.i, r.g2.j};
  };
  std::sort(out.begin(), out.end(),
            [&key](const SearchRecord& x, const SearchRecord& y) {
              return key(x) < key(y);
            });
  return out;
}

}  // namespace hermit2p
