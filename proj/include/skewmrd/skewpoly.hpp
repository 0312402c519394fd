#pragma once

// The twisted polynomial ring R = L[x; sigma] with x a = a^sigma x.
//
// L = F_{p^(n e)}, sigma = Frobenius^sigma_exp of order exactly n, and
// K = F_{p^e} is the fixed field of sigma. The centre of R is K[x^n].

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"
#include "linalg.hpp"

namespace skewmrd {

class SkewRing {
 public:
  /// sigma_exp defaults to e (sigma: a -> a^q with q = p^e).
  static std::shared_ptr<const SkewRing> create(unsigned p, unsigned e, unsigned n,
                                                std::optional<long long> sigma_exp = std::nullopt,
                                                std::optional<std::vector<unsigned>> modulus = std::nullopt) {
    if (e == 0 || n == 0) throw std::invalid_argument("e and n must be positive");
    auto field = FieldCtx::create(p, n * e, std::move(modulus));
    return create(std::move(field), e, sigma_exp.value_or(e));
  }

  static std::shared_ptr<const SkewRing> create(std::shared_ptr<const FieldCtx> field, unsigned e, long long sigma_exp) {
    const unsigned m = field->degree();
    if (e == 0 || m % e != 0) throw std::invalid_argument("e must divide the degree of L");
    const Automorphism sigma{sigma_exp};
    if (sigma.fixed_degree(m) != e)
      throw std::invalid_argument("sigma = Frobenius^" + std::to_string(sigma_exp) + " has order " +
                                  std::to_string(sigma.order(m)) + " on L, expected " + std::to_string(m / e));
    return std::shared_ptr<const SkewRing>(new SkewRing(std::move(field), e, sigma));
  }

  const FieldCtx& field() const noexcept { return *field_; }
  const std::shared_ptr<const FieldCtx>& field_ptr() const noexcept { return field_; }
  unsigned p() const noexcept { return field_->characteristic(); }
  unsigned e() const noexcept { return e_; }
  unsigned n() const noexcept { return n_; }
  /// |K|
  std::uint64_t q() const { return detail::checked_pow(p(), e_); }
  Automorphism sigma() const noexcept { return sigma_; }

  /// a^(sigma^t)
  Elem twist(Elem a, long long t) const noexcept { return field_->frobenius(a, sigma_.frob_exp * t); }

  bool in_fixed_field(Elem a) const { return field_->in_subfield(a, e_); }
  std::vector<Elem> fixed_field_elements() const { return field_->subfield_elements(e_); }

  /// N_{L:K}(a) = a^(1 + sigma + ... + sigma^(n-1)).
  Elem norm(Elem a) const { return field_->norm(a, e_); }

 private:
  SkewRing(std::shared_ptr<const FieldCtx> field, unsigned e, Automorphism sigma)
      : field_(std::move(field)), e_(e), n_(field_->degree() / e), sigma_(sigma) {}

  std::shared_ptr<const FieldCtx> field_;
  unsigned e_;
  unsigned n_;
  Automorphism sigma_;
};

using RingPtr = std::shared_ptr<const SkewRing>;

class SkewPoly {
 public:
  SkewPoly() = default;
  SkewPoly(RingPtr ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
    if (!ring_) throw std::invalid_argument("skew polynomial without a ring");
    for (Elem a : c_)
      if (!ring_->field().contains(a)) throw std::invalid_argument("coefficient " + std::to_string(a) + " is not in L");
    trim();
  }

  static SkewPoly zero(RingPtr ring) { return SkewPoly(std::move(ring), {}); }
  static SkewPoly constant(RingPtr ring, Elem a) { return SkewPoly(std::move(ring), {a}); }
  /// a x^d
  static SkewPoly monomial(RingPtr ring, Elem a, unsigned d) {
    std::vector<Elem> c(d + 1, 0);
    c[d] = a;
    return SkewPoly(std::move(ring), std::move(c));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }

  /// a * this
  SkewPoly scale_left(Elem a) const {
    std::vector<Elem> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field().mul(a, c_[i]);
    return SkewPoly(ring_, std::move(r));
  }

  /// this * a
  SkewPoly scale_right(Elem a) const {
    std::vector<Elem> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field().mul(c_[i], ring_->twist(a, static_cast<long long>(i)));
    return SkewPoly(ring_, std::move(r));
  }

  SkewPoly monic() const {
    if (is_zero()) throw std::domain_error("the zero polynomial has no monic associate");
    return scale_left(field().inv(lead()));
  }

  friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) { return a.combine(b, false); }
  friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a.combine(b, true); }
  friend SkewPoly operator-(const SkewPoly& a) { return SkewPoly::zero(a.ring_) - a; }

  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return zero(a.ring_);
    const auto& f = a.field();
    std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, 0);
    std::vector<Elem> twisted(b.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) twisted[j] = a.ring_->twist(b.c_[j], static_cast<long long>(i));
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a.c_[i], twisted[j]));
    }
    return SkewPoly(a.ring_, std::move(r));
  }

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
    return (a.ring_ == b.ring_ || (a.is_zero() && b.is_zero())) && a.c_ == b.c_;
  }

  void check_same(const SkewPoly& other) const {
    if (ring_ != other.ring_) throw std::invalid_argument("skew polynomials belong to different rings");
  }

 private:
  const FieldCtx& field() const { return ring_->field(); }

  SkewPoly combine(const SkewPoly& b, bool subtract) const {
    check_same(b);
    const auto& f = field();
    std::vector<Elem> r(std::max(c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = subtract ? f.sub(r[i], b.c_[i]) : f.add(r[i], b.c_[i]);
    return SkewPoly(ring_, std::move(r));
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  RingPtr ring_;
  std::vector<Elem> c_;
};

/// x as an element of R.
inline SkewPoly indeterminate(const RingPtr& ring) { return SkewPoly::monomial(ring, 1, 1); }

struct DivMod {
  SkewPoly quotient;
  SkewPoly remainder;
};

/// a = q * b + r with deg r < deg b.
inline DivMod right_divmod(const SkewPoly& a, const SkewPoly& b) {
  a.check_same(b);
  if (b.is_zero()) throw std::domain_error("skew polynomial division by zero");
  const auto& ring = *a.ring();
  const auto& f = ring.field();
  std::vector<Elem> r = a.coeffs();
  const int db = b.degree();
  std::vector<Elem> q(std::max(0, a.degree() - db + 1), 0);
  for (int top = a.degree(); top >= db; --top) {
    if (r[top] == 0) continue;
    const int shift = top - db;
    const Elem c = f.div(r[top], ring.twist(b.lead(), shift));
    q[shift] = c;
    for (int j = 0; j <= db; ++j) r[shift + j] = f.sub(r[shift + j], f.mul(c, ring.twist(b.coeffs()[j], shift)));
  }
  r.resize(std::min<std::size_t>(r.size(), static_cast<std::size_t>(db)));
  return {SkewPoly(a.ring(), std::move(q)), SkewPoly(a.ring(), std::move(r))};
}

/// a = b * q + r with deg r < deg b.
inline DivMod left_divmod(const SkewPoly& a, const SkewPoly& b) {
  a.check_same(b);
  if (b.is_zero()) throw std::domain_error("skew polynomial division by zero");
  const auto& ring = *a.ring();
  const auto& f = ring.field();
  std::vector<Elem> r = a.coeffs();
  const int db = b.degree();
  std::vector<Elem> q(std::max(0, a.degree() - db + 1), 0);
  const Elem lead_inv = f.inv(b.lead());
  for (int top = a.degree(); top >= db; --top) {
    if (r[top] == 0) continue;
    const int shift = top - db;
    const Elem c = ring.twist(f.mul(lead_inv, r[top]), -db);
    q[shift] = c;
    for (int j = 0; j <= db; ++j) r[shift + j] = f.sub(r[shift + j], f.mul(b.coeffs()[j], ring.twist(c, j)));
  }
  r.resize(std::min<std::size_t>(r.size(), static_cast<std::size_t>(db)));
  return {SkewPoly(a.ring(), std::move(q)), SkewPoly(a.ring(), std::move(r))};
}

inline SkewPoly mod_right(const SkewPoly& a, const SkewPoly& b) { return right_divmod(a, b).remainder; }

/// Monic greatest common right divisor.
inline SkewPoly gcrd(SkewPoly a, SkewPoly b) {
  a.check_same(b);
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcrd(0, 0) is undefined");
  while (!b.is_zero()) {
    auto r = mod_right(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

struct Bezout {
  SkewPoly gcrd;  ///< monic
  SkewPoly u;
  SkewPoly v;     ///< gcrd == u*a + v*b
};

inline Bezout extended_gcrd(const SkewPoly& a, const SkewPoly& b) {
  a.check_same(b);
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcrd(0, 0) is undefined");
  const auto& ring = a.ring();
  SkewPoly r0 = a, r1 = b;
  SkewPoly u0 = SkewPoly::constant(ring, 1), u1 = SkewPoly::zero(ring);
  SkewPoly v0 = SkewPoly::zero(ring), v1 = SkewPoly::constant(ring, 1);
  while (!r1.is_zero()) {
    auto [q, r] = right_divmod(r0, r1);
    auto u = u0 - q * u1;
    auto v = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u);
    v0 = std::move(v1);
    v1 = std::move(v);
  }
  const Elem inv = ring->field().inv(r0.lead());
  return {r0.scale_left(inv), u0.scale_left(inv), v0.scale_left(inv)};
}

/// Companion matrix: ones on the first subdiagonal, last column -f_0..-f_{s-1}.
inline Matrix<Elem> companion(const SkewPoly& f) {
  if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("companion matrix needs a monic polynomial of degree >= 1");
  const auto& field = f.ring()->field();
  const std::size_t s = static_cast<std::size_t>(f.degree());
  Matrix<Elem> c(s, s, 0);
  for (std::size_t i = 0; i + 1 < s; ++i) c(i + 1, i) = 1;
  for (std::size_t i = 0; i < s; ++i) c(i, s - 1) = field.neg(f.coeff(i));
  return c;
}

/// A_f = C_f C_f^sigma ... C_f^(sigma^(n-1)), the matrix of v -> x^n v mod_r f.
inline Matrix<Elem> a_matrix(const SkewPoly& f) {
  const auto& ring = *f.ring();
  const auto c = companion(f);
  Matrix<Elem> a = c;
  for (unsigned t = 1; t < ring.n(); ++t) {
    Matrix<Elem> ct = c;
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) ct(i, j) = ring.twist(c(i, j), t);
    a = multiply(ring.field(), a, ct);
  }
  return a;
}

/// Minimal polynomial of a square matrix: the first power of m linearly
/// dependent on the lower ones.
template <FieldLike F>
std::vector<typename F::value_type> minimal_polynomial(const F& f, const Matrix<typename F::value_type>& m) {
  using V = typename F::value_type;
  const std::size_t s = m.rows();
  std::vector<std::vector<V>> powers;
  Matrix<V> power = Matrix<V>::identity(f, s);
  RowEchelon<F> span(f, s * s);
  for (std::size_t d = 0; d <= s; ++d) {
    const auto& flat = power.data();
    if (!span.contains(flat)) {
      span.insert(flat);
      powers.push_back(flat);
      power = multiply(f, power, m);
      continue;
    }
    Matrix<V> cols(s * s, powers.size(), f.zero());
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (std::size_t i = 0; i < s * s; ++i) cols(i, j) = powers[j][i];
    const auto x = solve(f, cols, flat);
    if (!x) throw ArithmeticInvariantError("minimal polynomial solve failed on a dependent power");
    std::vector<V> g(d + 1, f.zero());
    for (std::size_t j = 0; j < d; ++j) g[j] = f.neg((*x)[j]);
    g[d] = f.one();
    return g;
  }
  throw ArithmeticInvariantError("matrix powers stayed independent past the dimension bound");
}

/// Minimal central left multiple F(x^n) of f, returned as F in K[y].
inline KPoly mclm(const SkewPoly& f) {
  if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("mclm needs a monic nonconstant polynomial");
  const auto& ring = *f.ring();
  auto g = minimal_polynomial(ring.field(), a_matrix(f));
  for (Elem c : g)
    if (!ring.in_fixed_field(c))
      throw ArithmeticInvariantError("minimal polynomial of A_f has a coefficient outside the fixed field");
  return KPoly::over(ring.field(), ring.e(), std::move(g));
}

inline bool is_irreducible_skew(const SkewPoly& f) {
  const auto big = mclm(f);
  return big.degree() == f.degree() && kpoly_is_irreducible(f.ring()->field(), big);
}

/// F(x^n) = sum F_j x^(n j).
inline SkewPoly central_expand(const RingPtr& ring, const KPoly& big) {
  for (Elem c : big.coeffs())
    if (!ring->in_fixed_field(c)) throw std::invalid_argument("central polynomial has a coefficient outside K");
  if (big.is_zero()) return SkewPoly::zero(ring);
  std::vector<Elem> c(static_cast<std::size_t>(big.degree()) * ring->n() + 1, 0);
  for (std::size_t j = 0; j < big.coeffs().size(); ++j) c[j * ring->n()] = big.coeffs()[j];
  return SkewPoly(ring, std::move(c));
}

/// Enumerates monic polynomials of the given degree in increasing encoding
/// order (constant coefficient least significant).
class MonicEnumerator {
 public:
  MonicEnumerator(RingPtr ring, unsigned degree) : ring_(std::move(ring)), degree_(degree) {
    count_ = detail::checked_pow(ring_->field().size(), degree_);
  }

  std::uint64_t count() const noexcept { return count_; }

  SkewPoly at(std::uint64_t index) const {
    const Elem size = ring_->field().size();
    std::vector<Elem> c(degree_ + 1);
    for (unsigned i = 0; i < degree_; ++i) {
      c[i] = static_cast<Elem>(index % size);
      index /= size;
    }
    c[degree_] = 1;
    return SkewPoly(ring_, std::move(c));
  }

 private:
  RingPtr ring_;
  unsigned degree_;
  std::uint64_t count_;
};

/// First monic degree-s right divisor of F(x^n) in encoding order.
inline SkewPoly find_irreducible_divisor(const RingPtr& ring, const KPoly& big, std::uint64_t budget) {
  if (big.degree() < 1 || !big.is_monic()) throw std::invalid_argument("divisor search needs a monic nonconstant F");
  if (big.sub_degree() != ring->e()) throw std::invalid_argument("F must be declared over K");
  if (!kpoly_is_irreducible(ring->field(), big)) throw std::invalid_argument("F is reducible over K");
  const auto central = central_expand(ring, big);
  const MonicEnumerator candidates(ring, static_cast<unsigned>(big.degree()));
  std::uint64_t tried = 0;
  for (std::uint64_t i = 0; i < candidates.count(); ++i) {
    if (tried >= budget)
      throw BudgetExceeded("irreducible divisor search gave up after " + std::to_string(tried) + " candidates", tried);
    ++tried;
    auto f = candidates.at(i);
    if (mod_right(central, f).is_zero()) return f;
  }
  throw ArithmeticInvariantError("F(x^n) has no monic right divisor of degree deg F");
}

/// Evaluates f as the linearized map v -> sum f_i v^(sigma^i).
inline Elem linearized_eval(const SkewPoly& f, Elem v) {
  const auto& ring = *f.ring();
  Elem r = 0;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    r = ring.field().add(r, ring.field().mul(f.coeffs()[i], ring.twist(v, static_cast<long long>(i))));
  return r;
}

}  // namespace skewmrd
