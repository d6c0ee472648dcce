#include "hermit2p/gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace hermit2p {
namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Little-endian coefficient vectors over GF(p); the leading entry of a
// nonempty vector is nonzero.
using Poly = std::vector<unsigned>;

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

// Remainder of f modulo monic g.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
  f = trim(std::move(f));
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const unsigned lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    if (lead != 0)
      for (std::size_t i = 0; i <= dg; ++i)
        f[shift + i] = (f[shift + i] + (p - 1) * lead % p * g[i]) % p;
    f.pop_back();
    f = trim(std::move(f));
  }
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return out;
}

Poly decode_poly(std::uint32_t enc, unsigned p) {
  Poly out;
  while (enc) {
    out.push_back(enc % p);
    enc /= p;
  }
  return out;
}

std::uint32_t encode_poly(const Poly& f, unsigned p) {
  std::uint32_t enc = 0;
  for (std::size_t i = f.size(); i-- > 0;) enc = enc * p + f[i];
  return enc;
}

// Trial factoring against every monic polynomial of degree <= deg(f)/2.
bool is_irreducible(const Poly& f, unsigned p) {
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return false;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint32_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t low = 0; low < count; ++low) {
      Poly g = decode_poly(low, p);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct ModulusEntry {
  unsigned p, m;
  Poly coeffs;
};

// Fixed moduli for the fields the Hermitian constructions actually run on,
// so encodings stay stable across builds.
const ModulusEntry kModulusTable[] = {
    {2, 2, {1, 1, 1}},              // x^2 + x + 1
    {3, 2, {2, 2, 1}},              // x^2 + 2x + 2
    {2, 4, {1, 1, 0, 0, 1}},        // x^4 + x + 1
    {2, 6, {1, 1, 0, 1, 1, 0, 1}},  // x^6 + x^4 + x^3 + x + 1
};

Poly pick_modulus(unsigned p, unsigned m) {
  for (const auto& e : kModulusTable)
    if (e.p == p && e.m == m) return e.coeffs;
  if (m == 1) return {0, 1};
  std::uint32_t count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  for (std::uint32_t low = 0; low < count; ++low) {
    Poly f = decode_poly(low, p);
    f.resize(m + 1, 0);
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible modulus found");
}

}  // namespace

namespace {
std::uint32_t checked_order(unsigned p, unsigned m) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (m < 1) throw std::invalid_argument("extension degree must be positive");
  std::uint64_t order = 1;
  for (unsigned i = 0; i < m; ++i) {
    order *= p;
    if (order > 65536) throw std::invalid_argument("field order exceeds 2^16");
  }
  return std::uint32_t(order);
}
}  // namespace

Field::Field(unsigned characteristic, unsigned degree)
    : p_(characteristic), m_(degree), order_(checked_order(characteristic, degree)) {
  build(pick_modulus(characteristic, degree));
}

Field::Field(unsigned characteristic, unsigned degree, std::vector<unsigned> modulus)
    : p_(characteristic), m_(degree), order_(checked_order(characteristic, degree)) {
  build(std::move(modulus));
}

void Field::build(std::vector<unsigned> modulus) {
  if (modulus.size() != m_ + 1 || modulus.back() != 1)
    throw std::invalid_argument("modulus must be monic of degree m");
  for (unsigned c : modulus)
    if (c >= p_) throw std::invalid_argument("modulus coefficient out of range");
  if (!is_irreducible(modulus, p_))
    throw std::invalid_argument("modulus is reducible");
  modulus_ = std::move(modulus);

  neg_.resize(order_);
  for (std::uint32_t a = 0; a < order_; ++a) {
    std::uint32_t v = a, out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
      out += (p_ - v % p_) % p_ * scale;
      v /= p_;
      scale *= p_;
    }
    neg_[a] = Elem(out);
  }
  if (p_ != 2 && order_ <= 256) {
    add_.resize(std::size_t(order_) * order_);
    for (std::uint32_t a = 0; a < order_; ++a)
      for (std::uint32_t b = 0; b < order_; ++b)
        add_[std::size_t(a) * order_ + b] = add_digits(Elem(a), Elem(b));
  }

  // Primitive element: the smallest encoding whose order is order-1, checked
  // through the prime factorization of the group order.
  auto slow_pow = [this](Elem base, std::uint32_t e) {
    Elem acc = 1;
    Elem sq = base;
    while (e) {
      if (e & 1) acc = mul_slow(acc, sq);
      sq = mul_slow(sq, sq);
      e >>= 1;
    }
    return acc;
  };
  const std::uint32_t group = order_ - 1;
  generator_ = 1;
  if (group > 1) {
    const auto factors = prime_factors(group);
    for (std::uint32_t g = 2; g < order_; ++g) {
      bool primitive = true;
      for (std::uint32_t f : factors)
        if (slow_pow(Elem(g), group / f) == 1) {
          primitive = false;
          break;
        }
      if (primitive) {
        generator_ = Elem(g);
        break;
      }
    }
  }

  exp_.assign(2 * std::size_t(group), 1);
  log_.assign(order_, 0xffffffffu);
  Elem cur = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    exp_[i] = cur;
    exp_[i + group] = cur;
    if (log_[cur] != 0xffffffffu)
      throw std::logic_error("generator is not primitive");
    log_[cur] = i;
    cur = mul_slow(cur, generator_);
  }
  if (cur != 1) throw std::logic_error("antilog table does not close");
}

Elem Field::add_digits(Elem a, Elem b) const {
  std::uint32_t va = a, vb = b, out = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += (va % p_ + vb % p_) % p_ * scale;
    va /= p_;
    vb /= p_;
    scale *= p_;
  }
  return Elem(out);
}

Elem Field::mul_slow(Elem a, Elem b) const {
  Poly prod = poly_mul(decode_poly(a, p_), decode_poly(b, p_), p_);
  return Elem(encode_poly(poly_mod(std::move(prod), modulus_, p_), p_));
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[(order_ - 1) - log_[a]];
}

Elem Field::div(Elem a, Elem b) const {
  if (b == 0) throw std::domain_error("division by zero");
  if (a == 0) return 0;
  return exp_[log_[a] + (order_ - 1) - log_[b]];
}

Elem Field::pow(Elem a, long long e) const {
  if (a == 0) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const long long group = order_ - 1;
  long long r = e % group;
  if (r < 0) r += group;
  return exp_[std::uint64_t(log_[a]) * std::uint64_t(r) % std::uint64_t(group)];
}

Elem Field::conjugate(Elem a, std::uint32_t subfield_order) const {
  if (std::uint64_t(subfield_order) * subfield_order != order_)
    throw std::invalid_argument("conjugation needs order == subfield_order^2");
  if (a == 0) return 0;
  return exp_[std::uint64_t(log_[a]) * subfield_order % (order_ - 1)];
}

bool Field::in_subfield(Elem a, std::uint32_t subfield_order) const {
  return conjugate(a, subfield_order) == a;
}

std::vector<unsigned> Field::coefficients(Elem a) const {
  std::vector<unsigned> out(m_);
  std::uint32_t v = a;
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  return out;
}

Elem Field::from_coefficients(std::span<const unsigned> coeffs) const {
  if (coeffs.size() != m_) throw std::invalid_argument("expected m coefficients");
  std::uint32_t enc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw std::invalid_argument("coefficient out of range");
    enc = enc * p_ + coeffs[i];
  }
  return Elem(enc);
}

Elem Field::element(std::uint32_t encoded) const {
  if (encoded >= order_) throw std::invalid_argument("encoding out of range");
  return Elem(encoded);
}

const Field& Field::get(unsigned characteristic, unsigned degree) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, Field*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(characteristic, degree);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, new Field(characteristic, degree)).first;
  return *it->second;
}

const Field& Field::of_order(std::uint32_t order) {
  if (order < 2) throw std::invalid_argument("order must be at least 2");
  std::uint32_t p = 2;
  while (order % p != 0) {
    ++p;
    if (std::uint64_t(p) * p > order) {
      p = order;
      break;
    }
  }
  unsigned m = 0;
  std::uint32_t rest = order;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) throw std::invalid_argument("order is not a prime power");
  return get(p, m);
}

FieldElement::FieldElement(const Field& field, Elem value) : field_(&field), value_(value) {
  if (value >= field.order()) throw std::invalid_argument("encoding out of range");
}

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field().same_spec(b.field()))
    throw std::invalid_argument("elements from different fields");
  return a.field();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.add(a.value(), b.value()));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.sub(a.value(), b.value()));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.mul(a.value(), b.value()));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const Field& f = common_field(a, b);
  return FieldElement(f, f.div(a.value(), b.value()));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field().same_spec(b.field()) && a.value() == b.value();
}

}  // namespace hermit2p
