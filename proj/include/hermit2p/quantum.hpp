// Quantum code parameters from nested classical codes: the symmetric and
// asymmetric CSS constructions, the Hermitian self-orthogonal construction,
// the two-point divisor family on the Hermitian curve, and the nested-pair
// search over two-point divisors.
//
// Distances are exact only when an enumeration oracle is supplied; otherwise
// the functions report closed-form lower bounds (or the trivial bound 1) and
// leave purity undecided. Purity is a tri-state for that reason: the
// constructions define it through true minimum distances, which the formula
// layer only bounds.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermit2p/codes.hpp"
#include "hermit2p/oracle.hpp"
#include "hermit2p/params.hpp"

namespace hermit2p {

enum class Purity { pure, impure, unknown };

enum class QuantumConstruction { css_sym, css_herm, css_asym };

// [[n, k, d_z/d_x]] over a field of field_order elements; d_z == d_x for the
// symmetric constructions. field_order is q^2 for the CSS constructions and
// q for the Hermitian one (which descends to the subfield).
struct QuantumCodeParams {
  long long n = 0;
  long long k = 0;
  long long d_z = 1;
  long long d_x = 1;
  std::uint64_t field_order = 0;
  Purity purity = Purity::unknown;
  std::string purity_note;  // one-line justification for the purity value
  QuantumConstruction construction = QuantumConstruction::css_sym;
};

// Known minimum distances of the two classical inputs, when the caller has
// them from a closed form. Used only when no oracle is supplied; a value of
// zero means unknown, and bounds are reported only when both are known.
struct DistanceHints {
  long long d1 = 0;
  long long d2 = 0;
};

// Symmetric CSS code from dual(C1) contained in C2 (Euclidean duals):
// [[n, k1+k2-n, d]] with d = min weight of (C2 minus dual(C1)) and
// (C1 minus dual(C2)). Exact with an oracle, which also decides purity
// (pure exactly when d equals min of the two code distances); without one,
// reports min of the hints (or 1) with purity unknown.
QuantumCodeParams css_symmetric(const LinearCode& c1, const LinearCode& c2,
                                const OracleOptions* oracle = nullptr,
                                DistanceHints hints = {});

// Quantum code over the subfield GF(q) from a Hermitian self-orthogonal
// code C over GF(q^2): [[n, n-2k, d]]_q with d = min weight of the Hermitian
// dual minus C; pure exactly when d equals the dual's minimum distance.
// dual_distance_hint plays the role of DistanceHints for the single input.
QuantumCodeParams css_hermitian(const LinearCode& c,
                                const OracleOptions* oracle = nullptr,
                                long long dual_distance_hint = 0);

// Asymmetric variant of css_symmetric: d_z is the larger and d_x the smaller
// of the two coset minimum weights; pure exactly when {d_z, d_x} equals the
// pair of code distances as a multiset.
QuantumCodeParams css_asymmetric(const LinearCode& c1, const LinearCode& c2,
                                 const OracleOptions* oracle = nullptr,
                                 DistanceHints hints = {});

// The two-point family: divisors of the nested pair plus its parameters.
// C1 = C_L(D, g1) with g1 = (q^3-r1+1-(q+1))P + (q-1)Q, and
// C2 = C_L(D, g2) with g2 = (q^3-r2+1)P - 2Q.
struct AqeccDesign {
  QuantumCodeParams params;
  TwoPointDivisor g1;
  TwoPointDivisor g2;
};

// [[q^3-1, q^3-q(q-1)-(r1+r2)+1, d(r2)/d(r1)]] over GF(q^2), from the nested
// pair above. Requires 0 <= r1 <= r2 <= q(q+1) and r1+r2 <= q^3-q^2+3 (the
// exact condition for the duality-based nesting test to hold). The nesting
// assertion is integer-level; build the codes with aqecc_code_pair.
AqeccDesign two_point_aqecc(unsigned q, long long r1, long long r2);

// One-point counterpart with the same block length and dimension formula but
// the one-point distance formulas: [[q^3-1, same k, d1pt(r2)/d1pt(r1)]].
// Formula-level only; no divisors or codes are attached.
QuantumCodeParams one_point_aqecc(unsigned q, long long r1, long long r2);

// Evaluates the design's code pair and verifies dual(C1) is a subcode of C2
// at the matrix level; throws std::logic_error if that ever fails.
std::pair<LinearCode, LinearCode> aqecc_code_pair(const EvaluationSet& d,
                                                  const AqeccDesign& design);

// Purity criterion for the two-point family at index r: the dual-side
// distance q^3-1-r-(q-2)(q+1) must exceed the code distance d(r).
struct BigCssPurity {
  long long dual_side_distance = 0;
  long long code_distance = 0;
  bool pure = false;
  friend bool operator==(const BigCssPurity&, const BigCssPurity&) = default;
};

BigCssPurity purity_check_bigcss(unsigned q, long long r);

// One nested pair found by the search. Divisors are representatives with
// Q-coefficient in [0, q] and satisfy g1 <= g2 componentwise in that frame;
// k = l(g2) - l(g1) >= 1. d_z is the designed bound n - deg g2; d_x is
// present only when an oracle computed it. improvement is reserved for an
// out-of-scope comparison column and is never populated.
struct SearchRecord {
  TwoPointDivisor g1;
  TwoPointDivisor g2;
  long long k = 0;
  long long d_z = 0;
  std::optional<long long> d_x;
  std::optional<long long> improvement;
  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

// Enumerates all nested pairs of two-point divisors up to equivalence with
// 0 <= deg g1 <= deg g2 <= max_deg (default and maximum: q(q-1)), ordered by
// (deg g1, deg g2, g1.i, g1.j, g2.i, g2.j). With an oracle, d_x is the exact
// minimum weight of dual(C_L(g1)) minus dual(C_L(g2)) — feasible at small q.
std::vector<SearchRecord> search_nested_pairs(unsigned q, long long max_deg = -1,
                                              const OracleOptions* oracle = nullptr);

}  // namespace hermit2p
