#pragma once

// Text and JSON forms. Polynomials are written as comma-separated integer
// encodings, constant term first: "2,0,1" is x^2 + 2 (or y^2 + 2).

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "codes.hpp"
#include "gf.hpp"
#include "quotient.hpp"
#include "skewpoly.hpp"

namespace skewmrd {

inline std::vector<Elem> parse_coeffs(const std::string& text) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty coefficient in \"" + text + "\"");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad coefficient \"" + item + "\"");
    }
    if (used != item.size() || item[0] == '-') throw std::invalid_argument("bad coefficient \"" + item + "\"");
    out.push_back(static_cast<Elem>(v));
  }
  if (out.empty()) throw std::invalid_argument("empty polynomial");
  return out;
}

inline std::string join_coeffs(const std::vector<Elem>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s.empty() ? "0" : s;
}

/// Human-readable form such as "3 + x + 5*x^2".
inline std::string format_poly(const std::vector<Elem>& c, const std::string& var = "x") {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += " + ";
    const std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (i == 0)
      s += std::to_string(c[i]);
    else if (c[i] == 1)
      s += mono;
    else
      s += std::to_string(c[i]) + "*" + mono;
  }
  return s.empty() ? "0" : s;
}

inline std::string format_poly(const SkewPoly& a) { return format_poly(a.coeffs(), "x"); }
inline std::string format_poly(const KPoly& a) { return format_poly(a.coeffs(), "y"); }

inline nlohmann::json residues_json(const MatrixRep& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

/// Matrix export: header plus row-major E_F residues.
inline nlohmann::json matrix_json(const MatrixRep& m, const VfBasis& basis) {
  const auto& ctx = *basis.ctx();
  const auto& ring = *ctx.ring();
  nlohmann::json basis_json = nlohmann::json::array();
  for (const auto& b : basis.vectors()) basis_json.push_back(b.coeffs());
  return {{"p", ring.p()},
          {"e", ring.e()},
          {"n", ring.n()},
          {"s", ctx.s()},
          {"F", ctx.big().coeffs()},
          {"f", basis.divisor().coeffs()},
          {"basis", basis_json},
          {"matrix", residues_json(m)}};
}

inline nlohmann::json tuple_json(const NuclearTuple& t, unsigned p) {
  auto pow = [p](std::size_t d) -> nlohmann::json {
    try {
      return detail::checked_pow(p, static_cast<unsigned>(d));
    } catch (const std::overflow_error&) {
      return nullptr;
    }
  };
  return {{"log_p", t.as_vector()},
          {"sizes", {pow(t.order), pow(t.left), pow(t.right), pow(t.centraliser), pow(t.centre)}}};
}

inline nlohmann::json spec_json(const CodeSpec& spec) {
  const auto& ring = spec.ring();
  return {{"p", ring.p()},
          {"e", ring.e()},
          {"n", ring.n()},
          {"s", spec.s()},
          {"k", spec.k},
          {"sigma_exp", detail::wrap(ring.sigma().frob_exp, ring.field().degree())},
          {"rho_exp", spec.rho.frob_exp},
          {"eta", spec.eta},
          {"kprime", spec.kprime},
          {"F", spec.ctx->big().coeffs()},
          {"modulus", ring.field().modulus()}};
}

inline nlohmann::json report_json(const CodeSpec& spec, const CodeReport& r) {
  nlohmann::json j;
  j["spec"] = spec_json(spec);
  j["size_log_p"] = r.size_log_p;
  try {
    j["size"] = detail::checked_pow(spec.p(), static_cast<unsigned>(r.size_log_p));
  } catch (const std::overflow_error&) {
    j["size"] = nullptr;
  }
  j["enumerated"] = r.enumerated;
  j["min_rank"] = r.min_rank;
  j["designed_distance"] = r.designed_distance;
  j["mrd"] = r.mrd;
  j["singleton_equality"] = r.singleton_equality;
  j["witness"] = format_poly(r.witness.rep());
  j["witness_coeffs"] = r.witness.rep().coeffs();
  j["rank_histogram"] = r.rank_histogram;
  j["condition_satisfied"] = r.condition_satisfied;
  j["mode"] = to_string(r.mode);
  j["seed"] = r.seed;
  return j;
}

}  // namespace skewmrd
