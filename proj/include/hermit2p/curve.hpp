// Rational points of the Hermitian curve y^q + y = x^(q+1) over GF(q^2).
//
// The curve has q^3 affine points plus one point at infinity (P). Codes are
// evaluated on the affine points minus the origin (Q), ordered by the integer
// encodings of (x, y); that ordering is part of the external contract, so
// generator matrices are reproducible byte for byte.

#pragma once

#include <cstddef>
#include <vector>

#include "hermit2p/gf.hpp"

namespace hermit2p {

struct CurvePoint {
  Elem x;
  Elem y;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct CurveConstants {
  unsigned q;
  unsigned genus;               // q(q-1)/2
  std::size_t length;           // q^3 - 1 evaluation points
  unsigned hyperplane_degree;   // q + 1
  int canonical_degree;         // (q-2)(q+1)
};

CurveConstants curve_constants(unsigned q);

// All q^3 affine points, sorted by (x encoding, y encoding). Throws if q is
// not a prime power or q^2 exceeds the supported field orders.
std::vector<CurvePoint> affine_points(unsigned q);

class EvaluationSet {
 public:
  explicit EvaluationSet(unsigned q);

  unsigned q() const { return q_; }
  const Field& field() const { return *field_; }  // GF(q^2)
  const std::vector<CurvePoint>& points() const { return points_; }
  std::size_t length() const { return points_.size(); }
  unsigned genus() const { return genus_; }

 private:
  unsigned q_;
  unsigned genus_;
  const Field* field_;
  std::vector<CurvePoint> points_;
};

}  // namespace hermit2p
