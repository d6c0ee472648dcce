#include "hermit2p/curve.hpp"

#include <stdexcept>

namespace hermit2p {

CurveConstants curve_constants(unsigned q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  Field::of_order(std::uint32_t(q) * q);  // validates q as a prime power
  CurveConstants c;
  c.q = q;
  c.genus = q * (q - 1) / 2;
  c.length = std::size_t(q) * q * q - 1;
  c.hyperplane_degree = q + 1;
  c.canonical_degree = int(q - 2) * int(q + 1);
  return c;
}

std::vector<CurvePoint> affine_points(unsigned q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  const Field& f = Field::of_order(std::uint32_t(q) * q);
  std::vector<CurvePoint> points;
  points.reserve(std::size_t(q) * q * q);
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    const Elem rhs = f.pow(Elem(x), q + 1);
    unsigned fiber = 0;
    for (std::uint32_t y = 0; y < f.order(); ++y) {
      if (f.add(f.conjugate(Elem(y), q), Elem(y)) == rhs) {
        points.push_back({Elem(x), Elem(y)});
        ++fiber;
      }
    }
    if (fiber != q) throw std::logic_error("fiber size is not q");
  }
  return points;
}

EvaluationSet::EvaluationSet(unsigned q)
    : q_(q), genus_(q * (q - 1) / 2), field_(&Field::of_order(std::uint32_t(q) * q)) {
  points_ = affine_points(q);
  if (points_.empty() || points_.front().x != 0 || points_.front().y != 0)
    throw std::logic_error("origin is not the first affine point");
  points_.erase(points_.begin());
}

}  // namespace hermit2p
