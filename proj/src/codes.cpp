#include "hermit2p/codes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hermit2p {

namespace {
long long dual_offset(unsigned q) {  // q^3 + q^2 - q - 2
  const long long qq = q;
  return qq * qq * qq + qq * qq - qq - 2;
}

unsigned subfield_size(const Field& f) {
  const unsigned s = unsigned(std::lround(std::sqrt(double(f.order()))));
  if (std::uint64_t(s) * s != f.order())
    throw std::invalid_argument("field order is not a square");
  return s;
}
}  // namespace

LinearCode::LinearCode(const Field& field, std::size_t length)
    : field_(&field), n_(length) {
  if (length == 0) throw std::invalid_argument("code length must be positive");
}

LinearCode::LinearCode(const Field& field, std::size_t length, std::vector<Elem> rows,
                       std::optional<TwoPointDivisor> divisor)
    : field_(&field), n_(length), rows_(std::move(rows)), divisor_(divisor) {
  if (length == 0) throw std::invalid_argument("code length must be positive");
  if (rows_.size() % n_ != 0)
    throw std::invalid_argument("generator storage is not a whole number of rows");
  RowSpace check(field, n_);
  const std::size_t k = rows_.size() / n_;
  for (std::size_t r = 0; r < k; ++r)
    if (!check.insert(row(r)))
      throw std::logic_error("generator rows are linearly dependent");
}

RowSpace::RowSpace(const Field& field, std::size_t length)
    : field_(&field), n_(length) {
  if (length == 0) throw std::invalid_argument("length must be positive");
}

RowSpace::RowSpace(const LinearCode& code) : RowSpace(code.field(), code.length()) {
  for (std::size_t r = 0; r < code.dimension(); ++r) insert(code.row(r));
}

std::vector<Elem> RowSpace::reduce(std::span<const Elem> row) const {
  if (row.size() != n_) throw std::invalid_argument("row length mismatch");
  std::vector<Elem> out(row.begin(), row.end());
  const Field& f = *field_;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Elem factor = out[pivots_[r]];
    if (factor == 0) continue;
    const Elem* basis = rows_.data() + r * n_;
    for (std::size_t t = 0; t < n_; ++t)
      out[t] = f.sub(out[t], f.mul(factor, basis[t]));
  }
  return out;
}

bool RowSpace::contains(std::span<const Elem> row) const {
  const std::vector<Elem> rem = reduce(row);
  return std::all_of(rem.begin(), rem.end(), [](Elem e) { return e == 0; });
}

bool RowSpace::insert(std::span<const Elem> row) {
  std::vector<Elem> rem = reduce(row);
  std::size_t pivot = n_;
  for (std::size_t t = 0; t < n_; ++t)
    if (rem[t] != 0) {
      pivot = t;
      break;
    }
  if (pivot == n_) return false;

  const Field& f = *field_;
  const Elem scale = f.inv(rem[pivot]);
  for (std::size_t t = 0; t < n_; ++t) rem[t] = f.mul(scale, rem[t]);

  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    Elem* basis = rows_.data() + r * n_;
    const Elem factor = basis[pivot];
    if (factor == 0) continue;
    for (std::size_t t = 0; t < n_; ++t)
      basis[t] = f.sub(basis[t], f.mul(factor, rem[t]));
  }

  const std::size_t pos =
      std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos * n_, rem.begin(), rem.end());
  return true;
}

namespace {
std::vector<Elem> evaluation_rows(const EvaluationSet& d, TwoPointDivisor g,
                                  std::size_t* out_k) {
  const unsigned q = d.q();
  const Field& f = d.field();
  const TwoPointDivisor canon = canonicalize_pq(g, q);
  const long long shift = (canon.i - g.i) / (q + 1);
  const std::vector<Monomial> basis = monomial_basis(g, q);
  const std::size_t n = d.length();
  std::vector<Elem> rows(basis.size() * n);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const long long y_exp = (long long)basis[r].y_exp - shift;
    for (std::size_t t = 0; t < n; ++t) {
      const CurvePoint& p = d.points()[t];
      rows[r * n + t] = f.mul(f.pow(p.x, basis[r].x_exp), f.pow(p.y, y_exp));
    }
  }
  *out_k = basis.size();
  return rows;
}
}  // namespace

LinearCode evaluate_code(const EvaluationSet& d, TwoPointDivisor g) {
  const long long n = (long long)d.length();
  if (g.degree() > n)
    throw std::invalid_argument("divisor degree exceeds the code length");
  std::size_t k = 0;
  std::vector<Elem> rows = evaluation_rows(d, g, &k);
  if (g.degree() == n) {
    RowSpace span(d.field(), d.length());
    std::size_t rank = 0;
    for (std::size_t r = 0; r < k; ++r)
      if (span.insert({rows.data() + r * d.length(), d.length()})) ++rank;
    if (rank != k)
      throw std::domain_error("evaluation at degree n loses dimension");
  }
  return LinearCode(d.field(), d.length(), std::move(rows), g);
}

LinearCode evaluate_image(const EvaluationSet& d, TwoPointDivisor g) {
  std::size_t k = 0;
  std::vector<Elem> rows = evaluation_rows(d, g, &k);
  RowSpace span(d.field(), d.length());
  for (std::size_t r = 0; r < k; ++r)
    span.insert({rows.data() + r * d.length(), d.length()});
  return LinearCode(d.field(), d.length(), span.storage(), g);
}

LinearCode nullspace_dual(const LinearCode& c) {
  const RowSpace span(c);
  const std::size_t n = c.length();
  const Field& f = c.field();
  const auto& pivots = span.pivots();
  std::vector<Elem> rows;
  rows.reserve((n - span.rank()) * n);
  for (std::size_t free = 0; free < n; ++free) {
    if (std::binary_search(pivots.begin(), pivots.end(), free)) continue;
    std::vector<Elem> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f.neg(span.row(r)[free]);
    rows.insert(rows.end(), v.begin(), v.end());
  }
  return LinearCode(f, n, std::move(rows));
}

TwoPointDivisor formula_dual(TwoPointDivisor g, unsigned q) {
  const TwoPointDivisor canon = canonicalize_pq(g, q);
  return {dual_offset(q) - canon.i, -1 - canon.j};
}

bool dual_containment_predicate(TwoPointDivisor g, TwoPointDivisor g2, unsigned q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  return g.i + g2.i >= dual_offset(q) && g.j + g2.j >= -1;
}

bool is_subcode(const LinearCode& c1, const LinearCode& c2) {
  if (!c1.field().same_spec(c2.field()) || c1.length() != c2.length())
    throw std::invalid_argument("codes live in different spaces");
  if (c1.dimension() > c2.dimension()) return false;
  const RowSpace span(c2);
  for (std::size_t r = 0; r < c1.dimension(); ++r)
    if (!span.contains(c1.row(r))) return false;
  return true;
}

bool same_row_space(const LinearCode& c1, const LinearCode& c2) {
  if (!c1.field().same_spec(c2.field()) || c1.length() != c2.length())
    throw std::invalid_argument("codes live in different spaces");
  if (c1.dimension() != c2.dimension()) return false;
  return RowSpace(c1).storage() == RowSpace(c2).storage();
}

bool is_self_orthogonal_euclidean(const LinearCode& c) {
  const Field& f = c.field();
  for (std::size_t r = 0; r < c.dimension(); ++r)
    for (std::size_t s = r; s < c.dimension(); ++s) {
      Elem acc = 0;
      for (std::size_t t = 0; t < c.length(); ++t)
        acc = f.add(acc, f.mul(c.row(r)[t], c.row(s)[t]));
      if (acc != 0) return false;
    }
  return true;
}

bool is_self_orthogonal_hermitian(const LinearCode& c) {
  const Field& f = c.field();
  const unsigned q = subfield_size(f);
  for (std::size_t r = 0; r < c.dimension(); ++r)
    for (std::size_t s = 0; s < c.dimension(); ++s) {
      Elem acc = 0;
      for (std::size_t t = 0; t < c.length(); ++t)
        acc = f.add(acc, f.mul(c.row(r)[t], f.conjugate(c.row(s)[t], q)));
      if (acc != 0) return false;
    }
  return true;
}

LinearCode hermitian_dual(const LinearCode& c) {
  const Field& f = c.field();
  const unsigned q = subfield_size(f);
  std::vector<Elem> conj = c.storage();
  for (Elem& e : conj) e = f.conjugate(e, q);
  return nullspace_dual(LinearCode(f, c.length(), std::move(conj)));
}

LinearCode scale_equivalence(const LinearCode& c, long long s, const EvaluationSet& d) {
  if (!c.field().same_spec(d.field()) || c.length() != d.length())
    throw std::invalid_argument("code does not match the evaluation set");
  const Field& f = c.field();
  std::vector<Elem> factors(d.length());
  for (std::size_t t = 0; t < d.length(); ++t)
    factors[t] = f.pow(d.points()[t].y, s);
  std::vector<Elem> rows = c.storage();
  for (std::size_t r = 0; r < c.dimension(); ++r)
    for (std::size_t t = 0; t < c.length(); ++t)
      rows[r * c.length() + t] = f.mul(rows[r * c.length() + t], factors[t]);
  std::optional<TwoPointDivisor> divisor;
  if (c.divisor()) {
    const long long period = d.q() + 1;
    divisor = TwoPointDivisor{c.divisor()->i + s * period, c.divisor()->j - s * period};
  }
  return LinearCode(f, c.length(), std::move(rows), divisor);
}

}  // namespace hermit2p
