#pragma once

// Dense univariate polynomials over any FieldLike coefficient domain.
// Coefficients are stored constant term first; the zero polynomial is empty.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace skewmrd::poly {

template <FieldLike F>
using Coeffs = std::vector<typename F::value_type>;

template <FieldLike F>
void trim(const F& f, Coeffs<F>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

template <class V>
int degree(const std::vector<V>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <FieldLike F>
Coeffs<F> add(const F& f, const Coeffs<F>& a, const Coeffs<F>& b) {
  Coeffs<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(f, r);
  return r;
}

template <FieldLike F>
Coeffs<F> sub(const F& f, const Coeffs<F>& a, const Coeffs<F>& b) {
  Coeffs<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(f, r);
  return r;
}

template <FieldLike F>
Coeffs<F> mul(const F& f, const Coeffs<F>& a, const Coeffs<F>& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs<F> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(f, r);
  return r;
}

template <FieldLike F>
Coeffs<F> scale(const F& f, const Coeffs<F>& a, const typename F::value_type& c) {
  Coeffs<F> r(a.size(), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  trim(f, r);
  return r;
}

/// (quotient, remainder) with a = q*b + r and deg r < deg b.
template <FieldLike F>
std::pair<Coeffs<F>, Coeffs<F>> divmod(const F& f, Coeffs<F> a, const Coeffs<F>& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(f, a);
  const int db = degree(b);
  if (degree(a) < db) return {{}, std::move(a)};
  Coeffs<F> q(a.size() - b.size() + 1, f.zero());
  const auto lead_inv = f.inv(b.back());
  for (int i = degree(a); i >= db; --i) {
    if (f.is_zero(a[i])) continue;
    const auto c = f.mul(a[i], lead_inv);
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] = f.sub(a[i - db + j], f.mul(c, b[j]));
  }
  a.resize(db);
  trim(f, a);
  trim(f, q);
  return {std::move(q), std::move(a)};
}

template <FieldLike F>
Coeffs<F> mod(const F& f, const Coeffs<F>& a, const Coeffs<F>& b) {
  return divmod(f, a, b).second;
}

template <FieldLike F>
Coeffs<F> monic(const F& f, const Coeffs<F>& a) {
  if (a.empty()) return a;
  return scale(f, a, f.inv(a.back()));
}

template <FieldLike F>
Coeffs<F> gcd(const F& f, Coeffs<F> a, Coeffs<F> b) {
  trim(f, a);
  trim(f, b);
  while (!b.empty()) {
    auto r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

/// Inverse of a modulo m; throws when gcd(a, m) != 1.
template <FieldLike F>
Coeffs<F> inverse_mod(const F& f, const Coeffs<F>& a, const Coeffs<F>& m) {
  Coeffs<F> r0 = m, r1 = mod(f, a, m);
  Coeffs<F> t0{}, t1{f.one()};
  while (!r1.empty()) {
    auto [q, r] = divmod(f, r0, r1);
    auto t = sub(f, t0, mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (degree(r0) != 0) throw std::domain_error("polynomial is not invertible modulo the given modulus");
  return mod(f, scale(f, t0, f.inv(r0[0])), m);
}

template <FieldLike F>
Coeffs<F> powmod(const F& f, Coeffs<F> base, std::uint64_t exp, const Coeffs<F>& m) {
  Coeffs<F> result = mod(f, Coeffs<F>{f.one()}, m);
  base = mod(f, base, m);
  while (exp) {
    if (exp & 1) result = mod(f, mul(f, result, base), m);
    base = mod(f, mul(f, base, base), m);
    exp >>= 1;
  }
  return result;
}

/// Irreducibility over the subfield of size `subfield_size` containing every
/// coefficient: g is irreducible iff gcd(g, y^(Q^i) - y) = 1 for 1 <= i <= deg/2.
template <FieldLike F>
bool is_irreducible(const F& f, Coeffs<F> g, std::uint64_t subfield_size) {
  trim(f, g);
  if (g.empty()) throw std::invalid_argument("irreducibility of the zero polynomial is undefined");
  const int d = degree(g);
  if (d == 0) return false;
  if (d == 1) return true;
  const Coeffs<F> y{f.zero(), f.one()};
  Coeffs<F> h = y;
  for (int i = 1; i <= d / 2; ++i) {
    h = powmod(f, h, subfield_size, g);
    if (degree(gcd(f, g, sub(f, h, y))) > 0) return false;
  }
  return true;
}

}  // namespace skewmrd::poly
