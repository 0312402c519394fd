#pragma once

// The k = 1 case: semifields from skew polynomials and Albert's twisted fields.

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "codes.hpp"
#include "errors.hpp"
#include "gf.hpp"
#include "quotient.hpp"
#include "skewpoly.hpp"

namespace skewmrd {

/// a o b = a b mod_r f
inline SkewPoly petit_mul(const SkewPoly& a, const SkewPoly& b, const SkewPoly& f) {
  if (a.degree() >= f.degree() || b.degree() >= f.degree())
    throw std::invalid_argument("Petit factors must have degree below deg f");
  return mod_right(a * b, f);
}

/// Element domain shared by the semifields below: skew polynomials of degree
/// < s, indexed by the base-|L| digits of their coefficient tuple.
class SemifieldDomain {
 public:
  SemifieldDomain(RingPtr ring, unsigned s) : ring_(std::move(ring)), s_(s) {}

  const RingPtr& ring() const noexcept { return ring_; }
  unsigned dimension() const noexcept { return s_; }
  std::uint64_t size() const { return detail::checked_pow(ring_->field().size(), s_); }

  std::vector<Elem> tuple(std::uint64_t index) const { return detail::tuple_at(index, s_, ring_->field().size()); }
  SkewPoly element(std::uint64_t index) const { return SkewPoly(ring_, tuple(index)); }
  std::uint64_t index(const SkewPoly& a) const {
    std::uint64_t idx = 0;
    for (int i = static_cast<int>(s_) - 1; i >= 0; --i) idx = idx * ring_->field().size() + a.coeff(i);
    return idx;
  }

 private:
  RingPtr ring_;
  unsigned s_;
};

class PetitSemifield {
 public:
  explicit PetitSemifield(SkewPoly f) : f_(std::move(f)), domain_(f_.ring(), static_cast<unsigned>(f_.degree())) {
    if (!f_.is_monic() || f_.degree() < 1) throw std::invalid_argument("f must be monic of positive degree");
    if (!is_irreducible_skew(f_)) throw std::invalid_argument("f is reducible");
  }

  const SkewPoly& divisor() const noexcept { return f_; }
  const SemifieldDomain& domain() const noexcept { return domain_; }
  SkewPoly mul(const SkewPoly& a, const SkewPoly& b) const { return petit_mul(a, b, f_); }

 private:
  SkewPoly f_;
  SemifieldDomain domain_;
};

/// Semifield of S_{n,s,1}(eta, rho, F) acting on V_f: a o b = c(a) b mod_r f
/// where c(a) is the code element with free coefficients a.
class CodeSemifield {
 public:
  CodeSemifield(CodeSpec spec, SkewPoly f)
      : spec_(std::move(spec)), f_(std::move(f)), domain_(spec_.ctx->ring(), spec_.s()) {
    if (spec_.k != 1) throw std::invalid_argument("a semifield needs k = 1");
    if (!f_.is_monic() || f_.degree() != static_cast<int>(spec_.s()))
      throw std::invalid_argument("f must be monic of degree s");
    if (!mod_right(spec_.ctx->central(), f_).is_zero()) throw std::invalid_argument("f does not right-divide F(x^n)");
  }

  const CodeSpec& spec() const noexcept { return spec_; }
  const SkewPoly& divisor() const noexcept { return f_; }
  const SemifieldDomain& domain() const noexcept { return domain_; }

  SkewPoly mul(const SkewPoly& a, const SkewPoly& b) const {
    std::vector<Elem> t(spec_.s());
    for (unsigned i = 0; i < spec_.s(); ++i) t[i] = a.coeff(i);
    return mod_right(code_element(spec_, t).rep() * b, f_);
  }

 private:
  CodeSpec spec_;
  SkewPoly f_;
  SemifieldDomain domain_;
};

/// a b - eta a^{p^i} b^{p^j}
inline Elem twisted_field_mul(const FieldCtx& f, Elem a, Elem b, Elem eta, long long i, long long j) {
  return f.sub(f.mul(a, b), f.mul(eta, f.mul(f.frobenius(a, i), f.frobenius(b, j))));
}

/// Albert's condition for the twisted field: eta is not a (p^i, p^j) "norm 1"
/// element, i.e. N_{L:F_{p^{(m,i,j)}}}(eta) != 1.
inline bool twisted_field_condition(const FieldCtx& f, Elem eta, long long i, long long j) {
  if (eta == 0) return true;
  const unsigned m = f.degree();
  const unsigned d = detail::gcd(detail::gcd(m, detail::wrap(i, m)), detail::wrap(j, m));
  return f.norm(eta, d) != 1;
}

struct SemifieldReport {
  bool pass = true;
  std::uint64_t pairs_checked = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> counterexample;  ///< indices with a o b = 0
};

/// No zero divisors among nonzero pairs of indices in [1, size). For a
/// finite-dimensional bilinear product this is equivalent to unique
/// solvability of a x = b and y a = b.
inline SemifieldReport verify_no_zero_divisors(std::uint64_t size,
                                               const std::function<bool(std::uint64_t, std::uint64_t)>& product_is_zero,
                                               std::uint64_t budget = std::uint64_t{1} << 20) {
  const std::uint64_t pairs = (size - 1) * (size - 1);
  if (pairs > budget) throw BudgetExceeded("semifield check needs " + std::to_string(pairs) + " pairs", budget);
  SemifieldReport r;
  for (std::uint64_t a = 1; a < size; ++a)
    for (std::uint64_t b = 1; b < size; ++b) {
      ++r.pairs_checked;
      if (product_is_zero(a, b)) {
        r.pass = false;
        r.counterexample = std::make_pair(a, b);
        return r;
      }
    }
  return r;
}

template <class S>
SemifieldReport verify_semifield(const S& sf, std::uint64_t budget = std::uint64_t{1} << 20) {
  const auto& d = sf.domain();
  return verify_no_zero_divisors(
      d.size(), [&](std::uint64_t a, std::uint64_t b) { return sf.mul(d.element(a), d.element(b)).is_zero(); },
      budget);
}

inline SemifieldReport verify_twisted_field(const FieldCtx& f, Elem eta, long long i, long long j,
                                            std::uint64_t budget = std::uint64_t{1} << 20) {
  return verify_no_zero_divisors(
      f.size(), [&](std::uint64_t a, std::uint64_t b) {
        return twisted_field_mul(f, static_cast<Elem>(a), static_cast<Elem>(b), eta, i, j) == 0;
      },
      budget);
}

/// Matrices of every code element in the given basis, in tuple order.
inline std::vector<MatrixRep> spread_matrices(const CodeSpec& spec, const VfBasis& basis) {
  if (spec.k != 1) throw std::invalid_argument("spread sets need k = 1");
  const SemifieldDomain d(spec.ctx->ring(), spec.s());
  const std::uint64_t count = d.size();
  std::vector<MatrixRep> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) out.push_back(matrix_rep(code_element(spec, d.tuple(idx)), basis));
  return out;
}

/// "a,b,a*b" lines over element indices.
template <class S>
std::string multiplication_table_csv(const S& sf) {
  const auto& d = sf.domain();
  std::ostringstream out;
  out << "a,b,product\n";
  for (std::uint64_t a = 0; a < d.size(); ++a)
    for (std::uint64_t b = 0; b < d.size(); ++b)
      out << a << ',' << b << ',' << d.index(sf.mul(d.element(a), d.element(b))) << '\n';
  return out.str();
}

}  // namespace skewmrd
