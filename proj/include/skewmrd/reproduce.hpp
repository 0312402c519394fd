#pragma once

// Regeneration of the worked spread sets for n = s = 2 and n = s = 3 and of
// the table of new semifield parameters.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "codes.hpp"
#include "errors.hpp"
#include "gf.hpp"
#include "quotient.hpp"
#include "semifield.hpp"
#include "skewpoly.hpp"
#include "text.hpp"

namespace skewmrd {

struct WorkedSetup {
  RingPtr ring;
  QuotientPtr ctx;
  SkewPoly f;
  Elem root = 0;  ///< x^n mod_r f, a root of F in L
  CodeSpec spec;
};

/// n = s with F the least irreducible of degree n over K, f = x^n - root the
/// first monic divisor of F(x^n), rho = sigma, and eta the least nonzero
/// encoding satisfying the condition, falling back to the primitive element
/// when none does (always the case over F_2).
inline WorkedSetup worked_setup(unsigned p, unsigned e, unsigned n, std::optional<Elem> eta = std::nullopt) {
  WorkedSetup w;
  w.ring = SkewRing::create(p, e, n);
  const auto& field = w.ring->field();
  const auto big = monic_irreducibles(field, e, n).front();
  w.ctx = QuotientRing::create(w.ring, big);
  w.f = find_irreducible_divisor(w.ring, big, std::uint64_t{1} << 24);
  for (int i = 1; i < w.f.degree(); ++i)
    if (w.f.coeff(i) != 0) throw ArithmeticInvariantError("first divisor of F(x^n) is not a binomial");
  w.root = field.neg(w.f.coeff(0));
  const long long rho = w.ring->sigma().frob_exp;
  if (eta) {
    w.spec = CodeSpec::make(w.ctx, 1, *eta, rho);
  } else {
    bool found = false;
    for (Elem c = 1; c < field.size() && !found; ++c) {
      w.spec = CodeSpec::make(w.ctx, 1, c, rho);
      found = validate_condition(w.spec);
    }
    if (!found) w.spec = CodeSpec::make(w.ctx, 1, field.primitive(), rho);
  }
  return w;
}

/// Matrix entries mapped into L by y -> root.
inline Matrix<Elem> evaluate_in_l(const WorkedSetup& w, const MatrixRep& m) {
  Matrix<Elem> out(m.rows(), m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = w.ctx->centre_field().evaluate(m(i, j), w.root);
  return out;
}

inline nlohmann::json l_matrix_json(const Matrix<Elem>& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

/// Displayed parametric form, entries in L. For n = 2:
///   [[a0 + c b, a1 b], [a1^s, a0^s + c^s b]]
/// and for n = 3:
///   [[g0 + c g, g2 g, g1 g], [g1^{s^2}, g0^{s^2} + c^{s^2} g, g2^{s^2} g], [g2^s, g1^s, g0^s + c^s g]]
/// with c = eta a0^rho and b, g the root.
inline Matrix<Elem> displayed_form(const WorkedSetup& w, const std::vector<Elem>& a) {
  const auto& ring = *w.ring;
  const auto& f = ring.field();
  const Elem r = w.root;
  const Elem c = f.mul(w.spec.eta, w.spec.rho.apply(f, a[0]));
  auto tw = [&](Elem v, int t) { return ring.twist(v, t); };
  auto lin = [&](Elem v, Elem u) { return f.add(v, f.mul(u, r)); };
  if (ring.n() == 2) {
    Matrix<Elem> m(2, 2, 0);
    m(0, 0) = lin(a[0], c);
    m(0, 1) = f.mul(a[1], r);
    m(1, 0) = tw(a[1], 1);
    m(1, 1) = lin(tw(a[0], 1), tw(c, 1));
    return m;
  }
  if (ring.n() == 3) {
    Matrix<Elem> m(3, 3, 0);
    m(0, 0) = lin(a[0], c);
    m(0, 1) = f.mul(a[2], r);
    m(0, 2) = f.mul(a[1], r);
    m(1, 0) = tw(a[1], 2);
    m(1, 1) = lin(tw(a[0], 2), tw(c, 2));
    m(1, 2) = f.mul(tw(a[2], 2), r);
    m(2, 0) = tw(a[2], 1);
    m(2, 1) = tw(a[1], 1);
    m(2, 2) = lin(tw(a[0], 1), tw(c, 1));
    return m;
  }
  throw std::invalid_argument("displayed forms exist only for n = s in {2, 3}");
}

inline nlohmann::json reproduce_worked(unsigned p, unsigned e, unsigned n, std::optional<Elem> eta = std::nullopt) {
  const auto w = worked_setup(p, e, n, eta);
  const auto basis = VfBasis::build(w.ctx, w.f);
  const auto mats = spread_matrices(w.spec, basis);
  const SemifieldDomain dom(w.ring, n);

  nlohmann::json elems = nlohmann::json::array();
  bool match = true;
  for (std::uint64_t idx = 0; idx < mats.size(); ++idx) {
    const auto a = dom.tuple(idx);
    const auto in_l = evaluate_in_l(w, mats[idx]);
    match = match && in_l == displayed_form(w, a);
    elems.push_back({{"a", a}, {"matrix", l_matrix_json(in_l)}, {"residues", residues_json(mats[idx])}});
  }
  nlohmann::json basis_json = nlohmann::json::array();
  for (const auto& b : basis.vectors()) basis_json.push_back(b.coeffs());

  nlohmann::json out = spec_json(w.spec);
  out["example"] = n == 2 ? "ns2" : "ns3";
  out["f"] = w.f.coeffs();
  out["root"] = w.root;
  out["basis"] = basis_json;
  out["elements"] = elems;
  out["matches_displayed_form"] = match;
  out["condition_satisfied"] = validate_condition(w.spec);
  out["M_x"] = l_matrix_json(evaluate_in_l(w, matrix_rep(w.ctx->x(), basis)));
  return out;
}

/// q-power as printed in the table: q, q^d for d <= 9, q^{d} otherwise.
inline std::string q_power(std::size_t d, bool braces = false) {
  if (d == 1 && !braces) return "q";
  if (d <= 9 && !braces) return "q^" + std::to_string(d);
  return "q^{" + std::to_string(d) + "}";
}

struct TableRow {
  unsigned n, s, e, i;
};

inline const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows{{3, 3, 1, 3}, {6, 2, 1, 4}, {8, 2, 1, 4}, {6, 3, 1, 0}};
  return rows;
}

/// One row: sigma = q^e and rho = q^i on F_{q^n}, exponents in powers of q.
inline std::string format_table_row(const TableRow& r) {
  const auto t = predict_nuclear(r.n, r.s, 1, 1, r.i, r.e, false);
  return "(" + std::to_string(r.n) + "," + std::to_string(r.s) + "," + std::to_string(r.e) + "," +
         std::to_string(r.i) + ")&(" + q_power(t.order, true) + "," + q_power(t.left) + "," + q_power(t.right) + "," +
         q_power(t.centraliser) + "," + q_power(t.centre) + ")";
}

inline nlohmann::json reproduce_table() {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table_rows()) rows.push_back(format_table_row(r));
  return {{"example", "table52"}, {"rows", rows}};
}

}  // namespace skewmrd
