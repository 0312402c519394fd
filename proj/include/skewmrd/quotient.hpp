#pragma once

// R_F = R / R F(x^n) and its matrix picture M_n(E_F).

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
#include "poly.hpp"
#include "skewpoly.hpp"

namespace skewmrd {

/// F_p-basis of the subfield F_{p^d}, smallest encodings first.
inline std::vector<Elem> prime_basis_of_subfield(const FieldCtx& f, unsigned d) {
  const auto prime = FieldCtx::create(f.characteristic(), 1);
  RowEchelon<FieldCtx> span(*prime, f.degree());
  std::vector<Elem> basis;
  for (Elem a : f.subfield_elements(d)) {
    if (span.insert(f.digits(a))) basis.push_back(a);
    if (basis.size() == d) break;
  }
  return basis;
}

/// The field E_F = K[y]/(F). Values are residues of length s, coefficients
/// being elements of K encoded in L.
class ResidueField {
 public:
  using value_type = std::vector<Elem>;

  ResidueField(std::shared_ptr<const FieldCtx> field, KPoly big) : field_(std::move(field)), big_(std::move(big)) {
    if (big_.degree() < 1) throw std::invalid_argument("residue field modulus must be nonconstant");
  }

  unsigned degree() const noexcept { return static_cast<unsigned>(big_.degree()); }
  const KPoly& modulus() const noexcept { return big_; }
  const FieldCtx& field() const noexcept { return *field_; }

  value_type zero() const { return value_type(degree(), 0); }
  value_type one() const {
    auto v = zero();
    v[0] = 1;
    return v;
  }
  bool is_zero(const value_type& a) const {
    for (Elem c : a)
      if (c != 0) return false;
    return true;
  }
  value_type add(const value_type& a, const value_type& b) const { return pad(poly::add(*field_, a, b)); }
  value_type sub(const value_type& a, const value_type& b) const { return pad(poly::sub(*field_, a, b)); }
  value_type neg(const value_type& a) const { return pad(poly::sub(*field_, {}, a)); }
  value_type mul(const value_type& a, const value_type& b) const { return reduce(poly::mul(*field_, a, b)); }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero in E_F");
    return pad(poly::inverse_mod(*field_, strip(a), big_.coeffs()));
  }

  value_type reduce(std::vector<Elem> c) const { return pad(poly::mod(*field_, strip(std::move(c)), big_.coeffs())); }

  /// Every element, ordered by encoding (first coefficient least significant).
  std::vector<value_type> elements() const {
    const auto k = field_->subfield_elements(big_.sub_degree());
    const std::uint64_t count = detail::checked_pow(k.size(), degree());
    std::vector<value_type> out;
    out.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) {
      value_type v(degree());
      std::uint64_t t = code;
      for (auto& c : v) {
        c = k[t % k.size()];
        t /= k.size();
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  /// Image of z under y -> root, with root a zero of F in L.
  Elem evaluate(const value_type& z, Elem root) const {
    Elem r = 0, power = 1;
    for (Elem c : z) {
      r = field_->add(r, field_->mul(c, power));
      power = field_->mul(power, root);
    }
    return r;
  }

 private:
  value_type pad(value_type v) const {
    v.resize(degree(), 0);
    return v;
  }
  value_type strip(value_type v) const {
    poly::trim(*field_, v);
    return v;
  }

  std::shared_ptr<const FieldCtx> field_;
  KPoly big_;
};

class QuotientRing;
using QuotientPtr = std::shared_ptr<const QuotientRing>;

/// A residue class a + R F(x^n), held by its right remainder of degree < ns.
class QuotientElem {
 public:
  QuotientElem() = default;
  QuotientElem(QuotientPtr ctx, SkewPoly rep) : ctx_(std::move(ctx)), rep_(std::move(rep)) {}

  const QuotientPtr& ctx() const noexcept { return ctx_; }
  const SkewPoly& rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }

  friend QuotientElem operator+(const QuotientElem& a, const QuotientElem& b);
  friend QuotientElem operator-(const QuotientElem& a, const QuotientElem& b);
  friend QuotientElem operator-(const QuotientElem& a);
  friend QuotientElem operator*(const QuotientElem& a, const QuotientElem& b);
  friend bool operator==(const QuotientElem& a, const QuotientElem& b) { return a.ctx_ == b.ctx_ && a.rep_ == b.rep_; }

 private:
  QuotientPtr ctx_;
  SkewPoly rep_;
};

class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  static QuotientPtr create(RingPtr ring, KPoly big) {
    if (!ring) throw std::invalid_argument("quotient ring without a skew ring");
    if (big.sub_degree() != ring->e()) throw std::invalid_argument("F must be declared over K");
    if (!big.is_monic() || big.degree() < 1) throw std::invalid_argument("F must be monic of degree >= 1");
    if (big.coeff(0) == 0) throw std::invalid_argument("F = y (or any F with F_0 = 0) is not supported");
    if (!kpoly_is_irreducible(ring->field(), big)) throw std::invalid_argument("F is reducible over K");
    return QuotientPtr(new QuotientRing(std::move(ring), std::move(big)));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const KPoly& big() const noexcept { return big_; }
  /// F(x^n)
  const SkewPoly& central() const noexcept { return central_; }
  unsigned n() const noexcept { return ring_->n(); }
  unsigned s() const noexcept { return static_cast<unsigned>(big_.degree()); }
  const ResidueField& centre_field() const noexcept { return ef_; }
  const FieldCtx& prime_field() const noexcept { return *prime_; }
  /// dim over F_p, that is ns * ne.
  std::size_t prime_dimension() const noexcept { return std::size_t{n()} * s() * ring_->field().degree(); }
  /// Size of R_F as log_p.
  std::size_t size_log_p() const noexcept { return prime_dimension(); }

  QuotientElem reduce(const SkewPoly& a) const {
    a.check_same(central_);
    if (a.degree() < central_.degree()) return QuotientElem(shared_from_this(), a);
    return QuotientElem(shared_from_this(), mod_right(a, central_));
  }
  QuotientElem element(std::vector<Elem> coeffs) const { return reduce(SkewPoly(ring_, std::move(coeffs))); }
  QuotientElem zero() const { return element({}); }
  QuotientElem one() const { return element({1}); }
  QuotientElem x() const { return reduce(indeterminate(ring_)); }

  QuotientElem mul(const QuotientElem& a, const QuotientElem& b) const { return reduce(own(a).rep() * own(b).rep()); }

  unsigned rank(const QuotientElem& a) const {
    const int d = gcrd(own(a).rep(), central_).degree();
    if (d % static_cast<int>(s()) != 0)
      throw ArithmeticInvariantError("gcrd with F(x^n) has degree " + std::to_string(d) + ", not a multiple of s");
    return n() - static_cast<unsigned>(d) / s();
  }

  bool is_invertible(const QuotientElem& a) const { return rank(a) == n(); }

  QuotientElem inverse(const QuotientElem& a) const {
    const auto bz = extended_gcrd(own(a).rep(), central_);
    if (bz.gcrd.degree() != 0) throw std::domain_error("element of R_F is not invertible");
    return reduce(bz.u);
  }

  /// F_p coordinates: coefficient i contributes digits at [i*m, (i+1)*m).
  std::vector<Elem> coordinates(const QuotientElem& a) const {
    const auto& f = ring_->field();
    const unsigned m = f.degree();
    std::vector<Elem> v(prime_dimension(), 0);
    const auto& c = own(a).rep().coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto d = f.digits(c[i]);
      std::copy(d.begin(), d.end(), v.begin() + static_cast<std::ptrdiff_t>(i * m));
    }
    return v;
  }

  QuotientElem from_coordinates(const std::vector<Elem>& v) const {
    if (v.size() != prime_dimension()) throw std::invalid_argument("coordinate vector has the wrong length");
    const auto& f = ring_->field();
    const unsigned m = f.degree();
    std::vector<Elem> c(n() * s());
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = f.from_digits(std::vector<Elem>(v.begin() + static_cast<std::ptrdiff_t>(i * m),
                                             v.begin() + static_cast<std::ptrdiff_t>((i + 1) * m)));
    return element(std::move(c));
  }

  /// z(x^n) for z in E_F.
  SkewPoly central_lift(const ResidueField::value_type& z) const {
    return central_expand(ring_, KPoly::over(ring_->field(), ring_->e(), z));
  }

 private:
  QuotientRing(RingPtr ring, KPoly big)
      : ring_(std::move(ring)),
        big_(std::move(big)),
        central_(central_expand(ring_, big_)),
        ef_(ring_->field_ptr(), big_),
        prime_(FieldCtx::create(ring_->p(), 1)) {}

  const QuotientElem& own(const QuotientElem& a) const {
    if (a.ctx().get() != this) throw std::invalid_argument("element belongs to a different quotient ring");
    return a;
  }

  RingPtr ring_;
  KPoly big_;
  SkewPoly central_;
  ResidueField ef_;
  std::shared_ptr<const FieldCtx> prime_;
};

inline QuotientElem operator+(const QuotientElem& a, const QuotientElem& b) {
  return QuotientElem(a.ctx_, a.rep_ + b.rep_);
}
inline QuotientElem operator-(const QuotientElem& a, const QuotientElem& b) {
  return QuotientElem(a.ctx_, a.rep_ - b.rep_);
}
inline QuotientElem operator-(const QuotientElem& a) { return QuotientElem(a.ctx_, -a.rep_); }
inline QuotientElem operator*(const QuotientElem& a, const QuotientElem& b) { return a.ctx_->mul(a, b); }

/// An E_f-basis of V_f = R/Rf for a monic degree-s right divisor f of F(x^n).
/// The scalar action of z in E_f is v.z = z(x^n) v mod_r f.
class VfBasis {
 public:
  static constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 16;

  static VfBasis build(QuotientPtr ctx, SkewPoly f, std::uint64_t budget = kDefaultBudget) {
    if (!f.is_monic() || f.degree() != static_cast<int>(ctx->s()))
      throw std::invalid_argument("f must be monic of degree s");
    if (!mod_right(ctx->central(), f).is_zero()) throw std::invalid_argument("f does not right-divide F(x^n)");
    if (!is_irreducible_skew(f)) throw std::invalid_argument("f is not irreducible");
    VfBasis b(std::move(ctx), std::move(f));
    b.select(budget);
    return b;
  }

  const SkewPoly& divisor() const noexcept { return f_; }
  const std::vector<SkewPoly>& vectors() const noexcept { return basis_; }
  const QuotientPtr& ctx() const noexcept { return ctx_; }

  /// E_f coordinates of v mod_r f.
  std::vector<ResidueField::value_type> coordinates(const SkewPoly& v) const {
    const auto w = apply(solver_, ctx_->prime_field(), digits(mod_right(v, f_)));
    const auto& field = ctx_->ring()->field();
    const unsigned e = ctx_->ring()->e(), s = ctx_->s();
    std::vector<ResidueField::value_type> out(basis_.size(), ResidueField::value_type(s, 0));
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (unsigned t = 0; t < s; ++t)
        for (unsigned l = 0; l < e; ++l) {
          const Elem c = w[i * e * s + t * e + l];
          out[i][t] = field.add(out[i][t], field.mul(c, kappa_[l]));
        }
    return out;
  }

  /// sum_i b_i . z_i
  SkewPoly combine(const std::vector<ResidueField::value_type>& z) const {
    if (z.size() != basis_.size()) throw std::invalid_argument("coordinate count must equal n");
    auto acc = SkewPoly::zero(ctx_->ring());
    for (std::size_t i = 0; i < z.size(); ++i) acc = acc + act(basis_[i], z[i]);
    return acc;
  }

  /// v.z
  SkewPoly act(const SkewPoly& v, const ResidueField::value_type& z) const {
    return mod_right(ctx_->central_lift(z) * v, f_);
  }

 private:
  VfBasis(QuotientPtr ctx, SkewPoly f) : ctx_(std::move(ctx)), f_(std::move(f)) {
    kappa_ = prime_basis_of_subfield(ctx_->ring()->field(), ctx_->ring()->e());
  }

  static std::vector<Elem> apply(const Matrix<Elem>& m, const FieldCtx& fp, const std::vector<Elem>& v) {
    return skewmrd::apply(fp, m, v);
  }

  std::vector<Elem> digits(const SkewPoly& v) const {
    const auto& field = ctx_->ring()->field();
    const unsigned m = field.degree();
    std::vector<Elem> out(std::size_t{ctx_->s()} * m, 0);
    for (std::size_t i = 0; i < v.coeffs().size(); ++i) {
      const auto d = field.digits(v.coeffs()[i]);
      std::copy(d.begin(), d.end(), out.begin() + static_cast<std::ptrdiff_t>(i * m));
    }
    return out;
  }

  /// F_p-spanning vectors of the E_f-line through v, in (t, l) order.
  std::vector<std::vector<Elem>> line(const SkewPoly& v) const {
    const unsigned s = ctx_->s();
    std::vector<std::vector<Elem>> out;
    for (unsigned t = 0; t < s; ++t)
      for (Elem k : kappa_) {
        ResidueField::value_type z(s, 0);
        z[t] = k;
        out.push_back(digits(act(v, z)));
      }
    return out;
  }

  void select(std::uint64_t budget) {
    const auto& fp = ctx_->prime_field();
    const auto& ring = ctx_->ring();
    const unsigned n = ctx_->n(), s = ctx_->s();
    const std::size_t width = std::size_t{s} * ring->field().degree();
    RowEchelon<FieldCtx> span(fp, width);
    std::vector<std::vector<Elem>> columns;
    std::uint64_t tried = 0;

    auto consider = [&](const SkewPoly& cand) {
      if (tried >= budget)
        throw BudgetExceeded("V_f basis search gave up after " + std::to_string(tried) + " candidates", tried);
      ++tried;
      const auto vecs = line(cand);
      if (span.contains(vecs.front())) return;
      for (const auto& w : vecs) span.insert(w);
      basis_.push_back(cand);
      columns.insert(columns.end(), vecs.begin(), vecs.end());
    };

    for (unsigned i = 0; i < n * s && basis_.size() < n; ++i)
      consider(mod_right(SkewPoly::monomial(ring, 1, i), f_));
    for (Elem a = 2; a < ring->field().size() && basis_.size() < n; ++a)
      for (unsigned i = 0; i < s && basis_.size() < n; ++i) consider(SkewPoly::monomial(ring, a, i));
    if (basis_.size() < n) throw ArithmeticInvariantError("V_f basis search ran out of candidates");

    Matrix<Elem> b(width, width, 0);
    for (std::size_t j = 0; j < width; ++j)
      for (std::size_t i = 0; i < width; ++i) b(i, j) = columns[j][i];
    auto inv = inverse(fp, b);
    if (!inv) throw ArithmeticInvariantError("selected V_f basis is not F_p-independent");
    solver_ = std::move(*inv);
  }

  QuotientPtr ctx_;
  SkewPoly f_;
  std::vector<Elem> kappa_;
  std::vector<SkewPoly> basis_;
  Matrix<Elem> solver_;
};

using MatrixRep = Matrix<ResidueField::value_type>;

/// Matrix of b -> a b mod_r f in the given basis; column j holds the
/// coordinates of a b_j.
inline MatrixRep matrix_rep(const QuotientElem& a, const VfBasis& basis) {
  if (a.ctx() != basis.ctx()) throw std::invalid_argument("element and basis belong to different quotient rings");
  const std::size_t n = basis.vectors().size();
  MatrixRep m(n, n, a.ctx()->centre_field().zero());
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = basis.coordinates(a.rep() * basis.vectors()[j]);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

inline std::size_t matrix_rank(const QuotientPtr& ctx, const MatrixRep& m) { return rank(ctx->centre_field(), m); }

}  // namespace skewmrd
