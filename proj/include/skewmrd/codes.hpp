#pragma once

// The codes S_{n,s,k}(eta, rho, F) inside R_F:
//   { a_0 + a_1 x + ... + a_{ks-1} x^{ks-1} + eta a_0^rho x^{ks} }.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"
#include "linalg.hpp"
#include "quotient.hpp"
#include "skewpoly.hpp"

namespace skewmrd {

struct CodeSpec {
  QuotientPtr ctx;
  unsigned k = 1;
  Elem eta = 0;
  Automorphism rho{0};
  unsigned kprime = 1;  ///< K' = F_{p^kprime}

  /// kprime defaults to gcd(e, i) for rho = Frobenius^i, the largest subfield
  /// of K fixed by rho.
  static CodeSpec make(QuotientPtr ctx, unsigned k, Elem eta, long long rho_exp,
                       std::optional<unsigned> kprime = std::nullopt) {
    if (!ctx) throw std::invalid_argument("code spec without a quotient ring");
    const auto& ring = *ctx->ring();
    const unsigned m = ring.field().degree();
    if (k < 1 || k >= ring.n()) throw std::invalid_argument("k must satisfy 1 <= k <= n-1");
    if (!ring.field().contains(eta)) throw std::invalid_argument("eta is not an element of L");
    const unsigned i = detail::wrap(rho_exp, m);
    const unsigned natural = detail::gcd(ring.e(), i);
    const unsigned d = kprime.value_or(natural);
    if (d == 0 || ring.e() % d != 0) throw std::invalid_argument("K' degree must divide e");
    if (i % d != 0) throw std::invalid_argument("rho must fix K'");
    return CodeSpec{std::move(ctx), k, eta, Automorphism{static_cast<long long>(i)}, d};
  }

  const SkewRing& ring() const { return *ctx->ring(); }
  unsigned n() const { return ctx->n(); }
  unsigned s() const { return ctx->s(); }
  unsigned e() const { return ring().e(); }
  unsigned p() const { return ring().p(); }
  /// Number of free coefficients a_0 .. a_{ks-1}.
  unsigned free_length() const { return k * s(); }
  unsigned designed_distance() const { return n() - k + 1; }
  /// log_p |code| = nsk e
  std::size_t size_log_p() const { return std::size_t{n()} * s() * k * e(); }
};

inline QuotientElem code_element(const CodeSpec& spec, const std::vector<Elem>& a) {
  const unsigned len = spec.free_length();
  if (a.size() != len)
    throw std::invalid_argument("code element needs " + std::to_string(len) + " coefficients, got " +
                                std::to_string(a.size()));
  const auto& f = spec.ring().field();
  std::vector<Elem> c(len + 1);
  std::copy(a.begin(), a.end(), c.begin());
  c[len] = f.mul(spec.eta, spec.rho.apply(f, a[0]));
  return spec.ctx->element(std::move(c));
}

/// N_{L:K'}(eta) N_{K:K'}((-1)^{sk(n-1)} F_0^k) != 1
inline Elem condition_value(const CodeSpec& spec) {
  const auto& f = spec.ring().field();
  const unsigned sk = spec.s() * spec.k;
  Elem c = f.pow(spec.ctx->big().coeff(0), spec.k);
  if ((sk * (spec.n() - 1)) % 2 == 1) c = f.neg(c);
  return f.mul(f.norm(spec.eta, spec.kprime), f.relative_norm(c, spec.e(), spec.kprime));
}

inline bool validate_condition(const CodeSpec& spec) { return spec.eta == 0 || condition_value(spec) != 1; }

/// An F_p-subspace of R_F given by a basis.
class SubspaceBasis {
 public:
  SubspaceBasis(QuotientPtr ctx, const std::vector<QuotientElem>& generators)
      : ctx_(std::move(ctx)), span_(ctx_->prime_field(), ctx_->prime_dimension()) {
    for (const auto& g : generators)
      if (span_.insert(ctx_->coordinates(g))) basis_.push_back(g);
  }

  const QuotientPtr& ctx() const noexcept { return ctx_; }
  const std::vector<QuotientElem>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  bool contains(const QuotientElem& a) const { return span_.contains(ctx_->coordinates(a)); }
  /// Canonical coset representative modulo the subspace, as F_p coordinates.
  std::vector<Elem> project(const QuotientElem& a) const { return span_.reduce(ctx_->coordinates(a)); }

  /// Number of elements, when it fits in 64 bits.
  std::optional<std::uint64_t> size() const {
    try {
      return detail::checked_pow(ctx_->ring()->p(), static_cast<unsigned>(basis_.size()));
    } catch (const std::overflow_error&) {
      return std::nullopt;
    }
  }

  /// Element with base-p digits of index as coefficients on the basis.
  QuotientElem at(std::uint64_t index) const {
    const unsigned p = ctx_->ring()->p();
    auto acc = ctx_->zero();
    for (const auto& b : basis_) {
      const Elem c = static_cast<Elem>(index % p);
      index /= p;
      if (c != 0) acc = acc + QuotientElem(ctx_, b.rep().scale_left(c));
    }
    return acc;
  }

  /// The subspace { c u : c in this } for a fixed u.
  SubspaceBasis right_multiplied(const QuotientElem& u) const {
    std::vector<QuotientElem> gens;
    gens.reserve(basis_.size());
    for (const auto& b : basis_) gens.push_back(b * u);
    return SubspaceBasis(ctx_, gens);
  }

  std::vector<std::size_t> rank_multiset() const {
    const auto count = size();
    if (!count) throw BudgetExceeded("subspace too large to enumerate", 0);
    std::vector<std::size_t> hist(ctx_->n() + 1, 0);
    for (std::uint64_t i = 0; i < *count; ++i) ++hist[ctx_->rank(at(i))];
    return hist;
  }

 private:
  QuotientPtr ctx_;
  RowEchelon<FieldCtx> span_;
  std::vector<QuotientElem> basis_;
};

/// F_p-basis: each free coefficient a_i runs over the power basis of L.
inline SubspaceBasis code_basis(const CodeSpec& spec) {
  const auto& f = spec.ring().field();
  std::vector<QuotientElem> gens;
  for (unsigned i = 0; i < spec.free_length(); ++i)
    for (unsigned l = 0; l < f.degree(); ++l) {
      std::vector<Elem> a(spec.free_length(), 0);
      a[i] = static_cast<Elem>(detail::checked_pow(f.characteristic(), l));
      gens.push_back(code_element(spec, a));
    }
  SubspaceBasis b(spec.ctx, gens);
  if (b.dimension() != spec.size_log_p()) throw ArithmeticInvariantError("code basis has the wrong dimension");
  return b;
}

/// Whole ring R_F as a subspace.
inline SubspaceBasis full_space(const QuotientPtr& ctx) {
  std::vector<QuotientElem> gens;
  std::vector<Elem> zero(ctx->prime_dimension(), 0);
  for (std::size_t i = 0; i < zero.size(); ++i) {
    auto v = zero;
    v[i] = 1;
    gens.push_back(ctx->from_coordinates(v));
  }
  return SubspaceBasis(ctx, gens);
}

enum class EnumerationMode { automatic, exhaustive, sampled };

inline std::string to_string(EnumerationMode m) {
  switch (m) {
    case EnumerationMode::automatic: return "auto";
    case EnumerationMode::exhaustive: return "exhaustive";
    case EnumerationMode::sampled: return "sampled";
  }
  return "?";
}

/// log_p sizes (|C|, |I_l|, |I_r|, |Cent|, |Z|).
struct NuclearTuple {
  std::size_t order = 0;
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t centraliser = 0;
  std::size_t centre = 0;

  friend bool operator==(const NuclearTuple&, const NuclearTuple&) = default;
  std::vector<std::size_t> as_vector() const { return {order, left, right, centraliser, centre}; }
};

struct CodeReport {
  std::uint64_t enumerated = 0;
  std::size_t size_log_p = 0;
  unsigned min_rank = 0;
  unsigned designed_distance = 0;
  bool mrd = false;
  bool singleton_equality = false;
  QuotientElem witness;
  std::vector<Elem> witness_tuple;
  std::vector<std::uint64_t> rank_histogram;
  EnumerationMode mode = EnumerationMode::exhaustive;
  std::uint64_t seed = 0;
  bool condition_satisfied = false;
};

struct VerifyOptions {
  std::uint64_t budget = std::uint64_t{1} << 20;
  EnumerationMode mode = EnumerationMode::automatic;
  std::uint64_t seed = 0x5eed;
  unsigned jobs = 1;
};

namespace detail {

inline std::vector<Elem> tuple_at(std::uint64_t index, unsigned len, Elem field_size) {
  std::vector<Elem> a(len);
  for (auto& c : a) {
    c = static_cast<Elem>(index % field_size);
    index /= field_size;
  }
  return a;
}

struct RankTally {
  unsigned min_rank = ~0u;
  std::uint64_t witness = 0;
  std::vector<std::uint64_t> hist;
};

}  // namespace detail

/// Rank of every nonzero code element (or of a seeded sample).
inline CodeReport verify_mrd(const CodeSpec& spec, const VerifyOptions& opt = {}) {
  const auto& f = spec.ring().field();
  const unsigned len = spec.free_length();
  const unsigned n = spec.n();

  std::optional<std::uint64_t> total;
  try {
    total = detail::checked_pow(f.size(), len);
  } catch (const std::overflow_error&) {
  }
  const bool fits = total && *total <= opt.budget;
  EnumerationMode mode = opt.mode;
  if (mode == EnumerationMode::automatic) mode = fits ? EnumerationMode::exhaustive : EnumerationMode::sampled;
  if (mode == EnumerationMode::exhaustive && !fits)
    throw BudgetExceeded("exhaustive enumeration needs more than " + std::to_string(opt.budget) + " elements",
                         opt.budget);

  std::vector<std::vector<Elem>> samples;
  std::uint64_t count = 0;
  if (mode == EnumerationMode::exhaustive) {
    count = *total;
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<Elem> coeff(0, f.size() - 1);
    samples.resize(opt.budget);
    for (auto& t : samples) {
      t.resize(len);
      for (auto& c : t) c = coeff(rng);
    }
    count = samples.size();
  }

  auto tuple = [&](std::uint64_t idx) { return samples.empty() ? detail::tuple_at(idx, len, f.size()) : samples[idx]; };

  const unsigned jobs = std::max(1u, opt.jobs);
  std::vector<detail::RankTally> tallies(jobs);
  auto work = [&](unsigned w) {
    auto& t = tallies[w];
    t.hist.assign(n + 1, 0);
    for (std::uint64_t idx = w; idx < count; idx += jobs) {
      const auto a = tuple(idx);
      const auto c = code_element(spec, a);
      if (c.is_zero()) {
        ++t.hist[0];
        continue;
      }
      const unsigned r = spec.ctx->rank(c);
      ++t.hist[r];
      if (r < t.min_rank || (r == t.min_rank && idx < t.witness)) {
        t.min_rank = r;
        t.witness = idx;
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }

  CodeReport rep;
  rep.enumerated = count;
  rep.size_log_p = spec.size_log_p();
  rep.designed_distance = spec.designed_distance();
  rep.mode = mode;
  rep.seed = mode == EnumerationMode::sampled ? opt.seed : 0;
  rep.condition_satisfied = validate_condition(spec);
  rep.rank_histogram.assign(n + 1, 0);
  detail::RankTally best;
  for (const auto& t : tallies) {
    for (unsigned r = 0; r <= n; ++r) rep.rank_histogram[r] += t.hist[r];
    if (t.min_rank < best.min_rank || (t.min_rank == best.min_rank && t.witness < best.witness)) {
      best.min_rank = t.min_rank;
      best.witness = t.witness;
    }
  }
  if (best.min_rank == ~0u) {
    rep.min_rank = n;  // every sampled element was zero
    rep.witness = spec.ctx->zero();
  } else {
    rep.min_rank = best.min_rank;
    rep.witness_tuple = tuple(best.witness);
    rep.witness = code_element(spec, rep.witness_tuple);
  }
  // |C| <= q^{sn(n-d+1)} for minimum distance d.
  const std::size_t bound = std::size_t{spec.s()} * n * (n - rep.min_rank + 1) * spec.e();
  rep.singleton_equality = rep.size_log_p == bound;
  rep.mrd = rep.singleton_equality && rep.min_rank >= rep.designed_distance;
  return rep;
}

/// Equivalent code containing 1: unchanged if 1 is already in it, otherwise
/// right-multiplied by x^{-1} when x is in it, otherwise by the inverse of the
/// first invertible element in enumeration order.
inline SubspaceBasis normalize_identity(const SubspaceBasis& code) {
  const auto& ctx = code.ctx();
  if (code.contains(ctx->one())) return code;
  const auto x = ctx->x();
  if (code.contains(x) && ctx->is_invertible(x)) return code.right_multiplied(ctx->inverse(x));
  const auto count = code.size();
  if (!count) throw BudgetExceeded("code too large to search for an invertible element", 0);
  for (std::uint64_t i = 1; i < *count; ++i) {
    const auto c = code.at(i);
    if (ctx->is_invertible(c)) return code.right_multiplied(ctx->inverse(c));
  }
  throw std::domain_error("code has no invertible element");
}

namespace detail {

using Condition = std::function<std::vector<Elem>(const QuotientElem&)>;

/// Kernel of the F_p-linear map A -> (cond(A)) on R_F.
inline SubspaceBasis solve_linear_condition(const QuotientPtr& ctx, const std::vector<Condition>& conds) {
  const std::size_t dim = ctx->prime_dimension();
  std::vector<std::vector<Elem>> cols;
  cols.reserve(dim);
  std::vector<Elem> unit(dim, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    unit[j] = 1;
    const auto a = ctx->from_coordinates(unit);
    unit[j] = 0;
    std::vector<Elem> col;
    for (const auto& c : conds) {
      const auto part = c(a);
      col.insert(col.end(), part.begin(), part.end());
    }
    cols.push_back(std::move(col));
  }
  const std::size_t rows = cols.empty() ? 0 : cols.front().size();
  Matrix<Elem> m(rows, dim, 0);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  std::vector<QuotientElem> gens;
  for (const auto& v : kernel(ctx->prime_field(), m)) gens.push_back(ctx->from_coordinates(v));
  return SubspaceBasis(ctx, gens);
}

inline std::vector<Condition> left_conditions(const SubspaceBasis& code) {
  std::vector<Condition> out;
  for (const auto& c : code.basis()) out.push_back([&code, c](const QuotientElem& a) { return code.project(a * c); });
  return out;
}

inline std::vector<Condition> right_conditions(const SubspaceBasis& code) {
  std::vector<Condition> out;
  for (const auto& c : code.basis()) out.push_back([&code, c](const QuotientElem& a) { return code.project(c * a); });
  return out;
}

inline std::vector<Condition> commutator_conditions(const SubspaceBasis& code) {
  std::vector<Condition> out;
  const auto ctx = code.ctx();
  for (const auto& c : code.basis())
    out.push_back([ctx, c](const QuotientElem& a) { return ctx->coordinates(a * c - c * a); });
  return out;
}

}  // namespace detail

/// { A : A C subset C }
inline SubspaceBasis left_idealiser(const SubspaceBasis& code) {
  return detail::solve_linear_condition(code.ctx(), detail::left_conditions(code));
}

/// { A : C A subset C }
inline SubspaceBasis right_idealiser(const SubspaceBasis& code) {
  return detail::solve_linear_condition(code.ctx(), detail::right_conditions(code));
}

/// { A : A X = X A for all X in C }
inline SubspaceBasis centraliser(const SubspaceBasis& code) {
  return detail::solve_linear_condition(code.ctx(), detail::commutator_conditions(code));
}

/// Left idealiser intersected with the centraliser.
inline SubspaceBasis centre(const SubspaceBasis& code) {
  auto conds = detail::left_conditions(code);
  auto comm = detail::commutator_conditions(code);
  conds.insert(conds.end(), comm.begin(), comm.end());
  return detail::solve_linear_condition(code.ctx(), conds);
}

inline NuclearTuple nuclear_tuple(const SubspaceBasis& code) {
  const auto normal = normalize_identity(code);
  return {normal.dimension(), left_idealiser(normal).dimension(), right_idealiser(normal).dimension(),
          centraliser(normal).dimension(), centre(normal).dimension()};
}

/// Predicted log_p tuple for rho = Frobenius^i, sigma = Frobenius^j on
/// F_{p^{ne}}. Only meaningful when sk > 1 and 2k <= n.
inline NuclearTuple predict_nuclear(unsigned n, unsigned s, unsigned k, unsigned e, long long i, long long j,
                                    bool eta_zero) {
  const unsigned m = n * e;
  const std::size_t order = std::size_t{n} * s * k * e;
  if (eta_zero) return {order, m, m, std::size_t{s} * e, e};
  const unsigned iw = detail::wrap(i, m), jw = detail::wrap(j, m);
  const unsigned rw = detail::wrap(static_cast<long long>(s) * k * j - i, m);
  return {order, detail::gcd(m, iw), detail::gcd(m, rw), std::size_t{s} * detail::gcd(m, jw),
          detail::gcd(detail::gcd(m, iw), jw)};
}

inline bool prediction_applies(const CodeSpec& spec) { return spec.s() * spec.k > 1 && 2 * spec.k <= spec.n(); }

struct NuclearReport {
  NuclearTuple computed;
  std::optional<NuclearTuple> predicted;
  bool matches() const { return !predicted || *predicted == computed; }
};

inline NuclearReport nuclear_parameters(const CodeSpec& spec) {
  NuclearReport r;
  r.computed = nuclear_tuple(code_basis(spec));
  if (prediction_applies(spec))
    r.predicted = predict_nuclear(spec.n(), spec.s(), spec.k, spec.e(), spec.rho.frob_exp, spec.ring().sigma().frob_exp,
                                  spec.eta == 0);
  return r;
}

/// Known semifield families whose nuclear parameters coincide with t
/// (log_p sizes). A parameter match says nothing about isotopy.
inline std::vector<std::string> compare_known_families(const NuclearTuple& t, unsigned p) {
  std::vector<std::string> out;
  const std::size_t big = t.order;
  auto g = [](std::size_t a, std::size_t b) { return static_cast<std::size_t>(std::gcd(a, b)); };

  for (std::size_t i = 1; i < big && out.empty(); ++i)
    for (std::size_t j = 1; j < big; ++j) {
      if (i == j) continue;
      const std::size_t ji = (j + big - i) % big;
      if (t.left == g(big, i) && t.right == g(big, ji) && t.centraliser == g(big, j) && t.centre == g(g(big, i), j)) {
        out.push_back("generalised twisted field (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
        break;
      }
    }

  if (p % 2 == 1 && big % 2 == 0) {
    const std::size_t h = big / 2;
    bool found = false;
    for (std::size_t i = 1; i <= h && !found; ++i) {
      if ((h / g(h, i)) % 2 == 0) continue;
      for (std::size_t j = 1; j <= h; ++j) {
        const std::size_t c = g(g(h, i), j);
        if (t.left == c && t.right == g(h, i) && t.centraliser == c && t.centre == c) {
          out.push_back("Pott-Zhou (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
          found = true;
          break;
        }
      }
    }
  }

  if (t.centre > 0 && t.left == t.right && t.left % t.centre == 0 && t.centraliser % t.centre == 0) {
    const std::size_t nn = t.left / t.centre, ss = t.centraliser / t.centre;
    if (nn >= 2 && ss >= 2 && nn * ss * t.centre == big)
      out.push_back("Petit (n=" + std::to_string(nn) + ", s=" + std::to_string(ss) + ", e=" + std::to_string(t.centre) +
                    ")");
  }
  return out;
}

}  // namespace skewmrd
