// Linear codes from two-point divisors: evaluation, duality, nesting and
// column-scaling equivalence.
//
// evaluate_code(D, G) evaluates a basis of L(G) for the divisor exactly as
// written: the monomial basis belongs to the canonical form G + s((q+1)P-(q+1)Q),
// and multiplying by y^(-s) shifts it back, which scales column t by y_t^(-s).
// Keeping the literal divisor is what makes componentwise-nested divisors give
// nested codes and the closed-form dual below hold as a row-space identity.
//
// The Euclidean dual of C_L(D, iP+jQ) is C_L(D, (X-i)P + (-1-j)Q) with
// X = q^3+q^2-q-2; for the canonical form iP-jQ this reads (X-i)P + (j-1)Q.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hermit2p/curve.hpp"
#include "hermit2p/gf.hpp"
#include "hermit2p/rrspace.hpp"

namespace hermit2p {

class LinearCode {
 public:
  // Zero code of the given length.
  LinearCode(const Field& field, std::size_t length);
  // Row-major k x length generator matrix; rows must be linearly independent.
  LinearCode(const Field& field, std::size_t length, std::vector<Elem> rows,
             std::optional<TwoPointDivisor> divisor = std::nullopt);

  const Field& field() const { return *field_; }
  std::size_t length() const { return n_; }
  std::size_t dimension() const { return rows_.size() / (n_ ? n_ : 1); }
  std::span<const Elem> row(std::size_t r) const {
    return {rows_.data() + r * n_, n_};
  }
  const std::vector<Elem>& storage() const { return rows_; }
  const std::optional<TwoPointDivisor>& divisor() const { return divisor_; }

 private:
  const Field* field_;
  std::size_t n_;
  std::vector<Elem> rows_;
  std::optional<TwoPointDivisor> divisor_;
};

// Reduced row echelon form, pivots chosen lowest-column-first then
// lowest-row-first. The RREF of a row space is unique, so two spaces are
// equal exactly when their RowSpace rows match.
class RowSpace {
 public:
  RowSpace(const Field& field, std::size_t length);
  explicit RowSpace(const LinearCode& code);

  // Reduces the row against the basis and keeps it if independent.
  bool insert(std::span<const Elem> row);
  std::vector<Elem> reduce(std::span<const Elem> row) const;
  bool contains(std::span<const Elem> row) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t length() const { return n_; }
  std::span<const Elem> row(std::size_t r) const {
    return {rows_.data() + r * n_, n_};
  }
  const std::vector<Elem>& storage() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  const Field* field_;
  std::size_t n_;
  std::vector<Elem> rows_;            // pivot-sorted RREF rows
  std::vector<std::size_t> pivots_;   // strictly increasing
};

// Code of the literal divisor G. Degrees above n are rejected; degree
// exactly n is accepted only when no dimension is lost (rank == l(G)),
// otherwise a std::domain_error reports the loss.
LinearCode evaluate_code(const EvaluationSet& d, TwoPointDivisor g);

// Evaluation image without the injectivity requirement: generators are the
// RREF basis of the span, and the dimension is the rank, which may be smaller
// than l(G) when deg G >= n.
LinearCode evaluate_image(const EvaluationSet& d, TwoPointDivisor g);

LinearCode nullspace_dual(const LinearCode& c);

// Euclidean dual divisor of the canonical form of g.
TwoPointDivisor formula_dual(TwoPointDivisor g, unsigned q);

// Sufficient containment test for nullspace_dual(C_L(g)) inside C_L(g2):
// g.i + g2.i >= X and g.j + g2.j >= -1, on the literal coefficients. The
// dual divisor is (X-i)P + (-1-j)Q, so the test says the dual divisor is
// componentwise at most g2, which nests the function spaces.
bool dual_containment_predicate(TwoPointDivisor g, TwoPointDivisor g2, unsigned q);

bool is_subcode(const LinearCode& c1, const LinearCode& c2);
bool same_row_space(const LinearCode& c1, const LinearCode& c2);

bool is_self_orthogonal_euclidean(const LinearCode& c);
// Self-orthogonality under <u,v> = sum u_t v_t^q, where order = q^2.
bool is_self_orthogonal_hermitian(const LinearCode& c);
LinearCode hermitian_dual(const LinearCode& c);

// Multiplies column t by y(P_t)^s; the result is the code of
// divisor(c) + s((q+1)P - (q+1)Q) when c carries divisor provenance.
LinearCode scale_equivalence(const LinearCode& c, long long s, const EvaluationSet& d);

}  // namespace hermit2p
