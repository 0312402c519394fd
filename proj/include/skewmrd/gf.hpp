#pragma once

// Finite fields F_{p^m} in a fixed power basis.
//
// An element is encoded as the integer whose little-endian base-p digits are
// its coordinates on 1, t, t^2, ..., t^(m-1), where t is a root of the
// modulus. Subfields are never built separately: F_{p^d} is the set of
// elements fixed by a -> a^(p^d).

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"
#include "poly.hpp"

namespace skewmrd {

using Elem = std::uint32_t;

class FieldCtx {
 public:
  using value_type = Elem;

  /// Largest supported field order.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 22;

  /// Builds F_{p^m}. Without a modulus, the least monic irreducible of degree m
  /// (ordered by the integer encoding of its coefficient vector) is used.
  static std::shared_ptr<const FieldCtx> create(unsigned p, unsigned m,
                                                std::optional<std::vector<unsigned>> modulus = std::nullopt) {
    if (!detail::is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw std::invalid_argument("extension degree must be at least 1");
    const std::uint64_t order = detail::checked_pow(p, m);
    if (order > kMaxOrder) throw std::invalid_argument("field of order " + std::to_string(order) + " is too large");

    auto prime = std::shared_ptr<const FieldCtx>(new FieldCtx(p, 1, {0, 1}));
    if (m == 1 && !modulus) return prime;

    std::vector<unsigned> chosen;
    if (modulus) {
      chosen = *modulus;
      if (chosen.size() != m + 1 || chosen.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree " + std::to_string(m));
      for (unsigned c : chosen)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range for F_" + std::to_string(p));
      if (!prime_poly_irreducible(*prime, chosen)) throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));
    } else {
      chosen = least_irreducible(*prime, m);
    }
    if (m == 1 && chosen == std::vector<unsigned>{0, 1}) return prime;
    return std::shared_ptr<const FieldCtx>(new FieldCtx(p, m, std::move(chosen)));
  }

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  Elem size() const noexcept { return size_; }
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  bool contains(Elem a) const noexcept { return a < size_; }
  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  bool is_zero(Elem a) const noexcept { return a == 0; }

  Elem add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) {
      const Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    Elem r = 0;
    for (unsigned i = 0; i < m_; ++i) {
      unsigned d = a % p_ + b % p_;
      if (d >= p_) d -= p_;
      r += d * pow_p_[i];
      a /= p_;
      b /= p_;
    }
    return r;
  }

  Elem neg(Elem a) const noexcept {
    if (p_ == 2) return a;
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    Elem r = 0;
    for (unsigned i = 0; i < m_; ++i) {
      const unsigned d = a % p_;
      r += (d == 0 ? 0 : p_ - d) * pow_p_[i];
      a /= p_;
    }
    return r;
  }

  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
    return exp_[log_[a] + log_[b]];
  }

  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    const Elem order = size_ - 1;
    return exp_[(order - log_[a]) % order];
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t k) const noexcept {
    if (k == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t order = size_ - 1;
    return exp_[detail::mul_mod(log_[a], k % order, order)];
  }

  /// a^(p^i); i is taken modulo m, so negative exponents give inverse maps.
  Elem frobenius(Elem a, long long i) const noexcept {
    if (a == 0 || m_ == 1) return a;
    const std::uint64_t order = size_ - 1;
    return exp_[detail::mul_mod(log_[a], frob_mult_[detail::wrap(i, m_)], order)];
  }

  bool divides_degree(unsigned d) const noexcept { return d >= 1 && m_ % d == 0; }

  /// N_{F_{p^m} : F_{p^d}}(a).
  Elem norm(Elem a, unsigned d) const {
    require_subdegree(d);
    if (a == 0) return 0;
    return pow(a, (size_ - 1) / (detail::checked_pow(p_, d) - 1));
  }

  /// N_{F_{p^from} : F_{p^to}}(a) for a in F_{p^from}.
  Elem relative_norm(Elem a, unsigned from, unsigned to) const {
    require_subdegree(from);
    if (to == 0 || from % to != 0) throw std::invalid_argument("norm target degree must divide source degree");
    if (!in_subfield(a, from)) throw std::invalid_argument("element is not in the source subfield");
    if (a == 0) return 0;
    return pow(a, (detail::checked_pow(p_, from) - 1) / (detail::checked_pow(p_, to) - 1));
  }

  bool in_subfield(Elem a, unsigned d) const {
    require_subdegree(d);
    return frobenius(a, d) == a;
  }

  /// Elements of F_{p^d}, ascending by encoding.
  std::vector<Elem> subfield_elements(unsigned d) const {
    require_subdegree(d);
    const std::uint64_t sub = detail::checked_pow(p_, d);
    std::vector<Elem> out{0};
    const std::uint64_t step = (size_ - 1) / (sub - 1);
    for (std::uint64_t t = 0; t < sub - 1; ++t) out.push_back(exp_[t * step]);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Image of the integer c in the prime field.
  Elem from_int(long long c) const noexcept { return detail::wrap(c, p_); }

  Elem primitive() const noexcept { return exp_[1]; }

  /// Coordinates in the power basis (length m).
  std::vector<Elem> digits(Elem a) const {
    std::vector<Elem> d(m_);
    for (unsigned i = 0; i < m_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }

  Elem from_digits(const std::vector<Elem>& d) const {
    Elem r = 0;
    for (std::size_t i = 0; i < d.size() && i < m_; ++i) r += (d[i] % p_) * pow_p_[i];
    return r;
  }

 private:
  FieldCtx(unsigned p, unsigned m, std::vector<unsigned> modulus)
      : p_(p), m_(m), size_(static_cast<Elem>(detail::checked_pow(p, m))), modulus_(std::move(modulus)) {
    pow_p_.resize(m_);
    for (unsigned i = 0; i < m_; ++i) pow_p_[i] = static_cast<Elem>(detail::checked_pow(p_, i));
    const std::uint64_t order = size_ - 1;
    frob_mult_.resize(m_);
    for (unsigned i = 0; i < m_; ++i) frob_mult_[i] = order == 0 ? 0 : detail::pow_mod(p_, i, order);
    const Elem g = find_primitive();
    exp_.resize(2 * order);
    log_.assign(size_, 0);
    Elem x = 1;
    for (std::uint64_t t = 0; t < order; ++t) {
      exp_[t] = x;
      log_[x] = static_cast<std::uint32_t>(t);
      x = slow_mul(x, g);
    }
    if (x != 1) throw ArithmeticInvariantError("primitive element does not have full order");
    for (std::uint64_t t = order; t < 2 * order; ++t) exp_[t] = exp_[t - order];
  }

  void require_subdegree(unsigned d) const {
    if (!divides_degree(d))
      throw std::invalid_argument("subfield degree " + std::to_string(d) + " does not divide " + std::to_string(m_));
  }

  Elem slow_mul(Elem a, Elem b) const {
    const auto da = digits(a), db = digits(b);
    std::vector<unsigned long long> prod(2 * m_, 0);
    for (unsigned i = 0; i < m_; ++i)
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
    for (int k = static_cast<int>(2 * m_) - 2; k >= static_cast<int>(m_); --k) {
      const auto c = prod[k];
      if (c == 0) continue;
      for (unsigned i = 0; i < m_; ++i) prod[k - m_ + i] = (prod[k - m_ + i] + (p_ - c) * modulus_[i]) % p_;
      prod[k] = 0;
    }
    Elem r = 0;
    for (unsigned i = 0; i < m_; ++i) r += static_cast<Elem>(prod[i]) * pow_p_[i];
    return r;
  }

  Elem slow_pow(Elem a, std::uint64_t k) const {
    Elem r = 1;
    while (k) {
      if (k & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      k >>= 1;
    }
    return r;
  }

  Elem find_primitive() const {
    const std::uint64_t order = size_ - 1;
    const auto primes = detail::prime_factors(order);
    for (Elem g = 1; g < size_; ++g) {
      bool ok = true;
      for (auto r : primes)
        if (slow_pow(g, order / r) == 1) {
          ok = false;
          break;
        }
      if (ok) return g;
    }
    throw std::logic_error("no primitive element; modulus is not irreducible");
  }

  static bool prime_poly_irreducible(const FieldCtx& prime, const std::vector<unsigned>& coeffs) {
    poly::Coeffs<FieldCtx> g(coeffs.begin(), coeffs.end());
    return poly::is_irreducible(prime, g, prime.characteristic());
  }

  static std::vector<unsigned> least_irreducible(const FieldCtx& prime, unsigned m) {
    const unsigned p = prime.characteristic();
    const std::uint64_t count = detail::checked_pow(p, m);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<unsigned> c(m + 1);
      std::uint64_t t = code;
      for (unsigned i = 0; i < m; ++i) {
        c[i] = static_cast<unsigned>(t % p);
        t /= p;
      }
      c[m] = 1;
      if (prime_poly_irreducible(prime, c)) return c;
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  unsigned p_;
  unsigned m_;
  Elem size_;
  std::vector<unsigned> modulus_;
  std::vector<Elem> pow_p_;
  std::vector<std::uint64_t> frob_mult_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

/// x -> x^(p^frob_exp) on F_{p^m}.
struct Automorphism {
  long long frob_exp = 0;

  Elem apply(const FieldCtx& f, Elem a) const noexcept { return f.frobenius(a, frob_exp); }
  Automorphism compose(Automorphism other) const noexcept { return {frob_exp + other.frob_exp}; }
  Automorphism inverse() const noexcept { return {-frob_exp}; }

  /// Degree over F_p of the fixed field inside F_{p^m}.
  unsigned fixed_degree(unsigned m) const noexcept { return detail::gcd(detail::wrap(frob_exp, m), m); }
  unsigned order(unsigned m) const noexcept { return m / fixed_degree(m); }
};

/// Polynomial in K[y] whose coefficients lie in the subfield F_{p^d} of the
/// ambient field. Constant term first; trailing zeros are stripped.
class KPoly {
 public:
  KPoly() = default;

  static KPoly over(const FieldCtx& f, unsigned sub_degree, std::vector<Elem> coeffs) {
    if (!f.divides_degree(sub_degree)) throw std::invalid_argument("declared subfield degree does not divide field degree");
    for (Elem c : coeffs) {
      if (!f.contains(c)) throw std::invalid_argument("coefficient " + std::to_string(c) + " is not a field element");
      if (!f.in_subfield(c, sub_degree))
        throw std::invalid_argument("coefficient " + std::to_string(c) + " is not in the declared subfield");
    }
    KPoly k;
    k.sub_degree_ = sub_degree;
    k.coeffs_ = std::move(coeffs);
    poly::trim(f, k.coeffs_);
    return k;
  }

  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  unsigned sub_degree() const noexcept { return sub_degree_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

  friend bool operator==(const KPoly&, const KPoly&) = default;

 private:
  std::vector<Elem> coeffs_;
  unsigned sub_degree_ = 1;
};

inline bool kpoly_is_irreducible(const FieldCtx& f, const KPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("irreducibility of the zero polynomial is undefined");
  return poly::is_irreducible(f, g.coeffs(), detail::checked_pow(f.characteristic(), g.sub_degree()));
}

/// Monic irreducible polynomials of the given degree over F_{p^d}, in
/// increasing order of their coefficient encodings.
inline std::vector<KPoly> monic_irreducibles(const FieldCtx& f, unsigned d, unsigned degree) {
  const auto sub = f.subfield_elements(d);
  const std::uint64_t count = detail::checked_pow(sub.size(), degree);
  std::vector<KPoly> out;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<Elem> c(degree + 1);
    std::uint64_t t = code;
    for (unsigned i = 0; i < degree; ++i) {
      c[i] = sub[t % sub.size()];
      t /= sub.size();
    }
    c[degree] = 1;
    auto k = KPoly::over(f, d, std::move(c));
    if (kpoly_is_irreducible(f, k)) out.push_back(std::move(k));
  }
  return out;
}

}  // namespace skewmrd
