#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "skewmrd/codes.hpp"

using namespace skewmrd;

namespace {

/// R_F with F the least irreducible of degree s over K with F_0 != 0, or the
/// given coefficients.
QuotientPtr ring_for(unsigned p, unsigned e, unsigned n, unsigned s, std::vector<Elem> big = {}) {
  auto ring = SkewRing::create(p, e, n);
  if (!big.empty()) return QuotientRing::create(ring, KPoly::over(ring->field(), e, std::move(big)));
  for (const auto& g : monic_irreducibles(ring->field(), e, s))
    if (g.coeff(0) != 0) return QuotientRing::create(ring, g);
  throw std::logic_error("no irreducible");
}

oracle::NaiveField naive_of(const FieldCtx& f) { return {f.characteristic(), f.degree(), f.modulus()}; }

/// First eta != 0 satisfying the condition, or 0 when none does.
Elem first_valid_eta(const QuotientPtr& ctx, unsigned k, long long rho) {
  for (Elem c = 1; c < ctx->ring()->field().size(); ++c)
    if (validate_condition(CodeSpec::make(ctx, k, c, rho))) return c;
  return 0;
}

std::vector<QuotientElem> all_code_elements(const CodeSpec& spec) {
  const Elem q = spec.ring().field().size();
  const auto count = detail::checked_pow(q, spec.free_length());
  std::vector<QuotientElem> out;
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(code_element(spec, detail::tuple_at(i, spec.free_length(), q)));
  return out;
}

}  // namespace

TEST(CodeSpec, RejectsBadParameters) {
  auto ctx = ring_for(3, 1, 2, 2);
  EXPECT_THROW(CodeSpec::make(ctx, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(CodeSpec::make(ctx, 2, 0, 1), std::invalid_argument);
  EXPECT_THROW(CodeSpec::make(ctx, 1, 9, 1), std::invalid_argument);
  EXPECT_THROW(CodeSpec::make(ctx, 1, 0, 1, 2), std::invalid_argument);  // K' degree must divide e = 1
  auto ctx2 = ring_for(2, 2, 2, 2);
  EXPECT_THROW(CodeSpec::make(ctx2, 1, 0, 1, 2), std::invalid_argument);  // Frob^1 does not fix F_4
  EXPECT_EQ(CodeSpec::make(ctx2, 1, 0, 1).kprime, 1u);
  EXPECT_EQ(CodeSpec::make(ctx2, 1, 0, 2).kprime, 2u);
  EXPECT_EQ(CodeSpec::make(ctx2, 1, 0, -2).rho.frob_exp, 2);
}

TEST(CodeElement, Examples) {
  auto ctx = ring_for(3, 1, 2, 2);
  const Elem eta = first_valid_eta(ctx, 1, 1);
  ASSERT_NE(eta, 0u);
  auto spec = CodeSpec::make(ctx, 1, eta, 1);
  EXPECT_TRUE(code_element(spec, {0, 0}).is_zero());
  EXPECT_EQ(code_element(spec, {1, 0}), ctx->element({1, 0, eta}));
  EXPECT_THROW(code_element(spec, {1}), std::invalid_argument);
  auto petit = CodeSpec::make(ctx, 1, 0, 1);
  for (Elem a0 = 0; a0 < 9; ++a0)
    for (Elem a1 = 0; a1 < 9; ++a1) EXPECT_EQ(code_element(petit, {a0, a1}), ctx->element({a0, a1}));
  // top coefficient is eta a_0^rho
  const auto& f = ctx->ring()->field();
  for (Elem a0 = 0; a0 < 9; ++a0)
    EXPECT_EQ(code_element(spec, {a0, 4}).rep().coeff(2), f.mul(eta, f.frobenius(a0, 1)));
}

TEST(Condition, EtaZeroAlwaysHolds) {
  for (auto [p, n, s] : {std::tuple{2u, 2u, 2u}, std::tuple{3u, 2u, 2u}, std::tuple{2u, 3u, 1u}})
    EXPECT_TRUE(validate_condition(CodeSpec::make(ring_for(p, 1, n, s), 1, 0, 1)));
}

TEST(Condition, AlwaysFalseOverF2) {
  for (auto [n, s, k] : {std::tuple{2u, 2u, 1u}, std::tuple{2u, 1u, 1u}, std::tuple{3u, 1u, 1u}, std::tuple{3u, 2u, 1u},
                         std::tuple{4u, 1u, 2u}, std::tuple{3u, 1u, 2u}}) {
    auto ctx = ring_for(2, 1, n, s);
    auto nf = naive_of(ctx->ring()->field());
    for (Elem eta = 1; eta < nf.size(); ++eta) {
      EXPECT_EQ(nf.norm(eta, 1), 1u);  // every element of F_2^* is 1
      for (long long rho = 0; rho < n; ++rho) EXPECT_FALSE(validate_condition(CodeSpec::make(ctx, k, eta, rho)));
    }
  }
}

TEST(Condition, ValidEtaCountOverF9) {
  for (const auto& big : monic_irreducibles(SkewRing::create(3, 1, 2)->field(), 1, 2)) {
    auto ctx = QuotientRing::create(SkewRing::create(3, 1, 2), big);
    auto nf = naive_of(ctx->ring()->field());
    const Elem mu = big.coeff(0);
    std::size_t want = 0, got = 0;
    for (Elem eta = 0; eta < 9; ++eta) {
      const bool ok = eta == 0 || nf.mul(nf.pow(eta, 4), mu) != 1;
      want += ok;
      for (long long rho = 0; rho < 2; ++rho) EXPECT_EQ(validate_condition(CodeSpec::make(ctx, 1, eta, rho)), ok);
      got += validate_condition(CodeSpec::make(ctx, 1, eta, 1));
    }
    EXPECT_EQ(got, want);
    EXPECT_GT(want, 1u);
    EXPECT_LT(want, 9u);
  }
}

TEST(Condition, SignFollowsSkTimesNMinusOne) {
  // n = 3, s = 1, k = 1 over F_3: sk(n-1) = 2, so the condition reads N(eta) F_0 != 1
  auto ctx = ring_for(3, 1, 3, 1, {2, 1});
  auto nf = naive_of(ctx->ring()->field());
  for (Elem eta = 1; eta < 27; ++eta)
    EXPECT_EQ(validate_condition(CodeSpec::make(ctx, 1, eta, 1)), nf.mul(nf.norm(eta, 1), 2) != 1);
  // n = 2, s = 1, k = 1: sk(n-1) = 1, so the condition reads N(eta) (-F_0) != 1
  auto ctx2 = ring_for(3, 1, 2, 1, {2, 1});
  auto nf2 = naive_of(ctx2->ring()->field());
  for (Elem eta = 1; eta < 9; ++eta)
    EXPECT_EQ(validate_condition(CodeSpec::make(ctx2, 1, eta, 1)), nf2.norm(eta, 1) != 1);
}

TEST(VerifyMrd, PetitOverF4IsASpreadSet) {
  auto spec = CodeSpec::make(ring_for(2, 1, 2, 2), 1, 0, 1);
  auto rep = verify_mrd(spec);
  EXPECT_EQ(rep.enumerated, 16u);
  EXPECT_EQ(rep.rank_histogram, (std::vector<std::uint64_t>{1, 0, 15}));
  EXPECT_EQ(rep.min_rank, 2u);
  EXPECT_TRUE(rep.mrd);
  EXPECT_TRUE(rep.singleton_equality);
  EXPECT_EQ(rep.mode, EnumerationMode::exhaustive);
}

TEST(VerifyMrd, RanksMatchImageOracleOverF9) {
  auto ctx = ring_for(3, 1, 2, 2);
  auto nf = naive_of(ctx->ring()->field());
  oracle::NaiveSkew ns{&nf, 1};
  const auto central = ctx->central().coeffs();
  const std::vector<oracle::U> cen(central.begin(), central.end());
  for (Elem eta : {Elem{0}, first_valid_eta(ctx, 1, 1), Elem{1}}) {
    auto spec = CodeSpec::make(ctx, 1, eta, 1);
    std::vector<std::uint64_t> hist(3, 0);
    for (const auto& c : all_code_elements(spec)) {
      const auto& co = c.rep().coeffs();
      const unsigned want = oracle::image_rank(ns, cen, std::vector<oracle::U>(co.begin(), co.end()), 2);
      ASSERT_EQ(ctx->rank(c), want);
      ++hist[want];
    }
    EXPECT_EQ(verify_mrd(spec).rank_histogram, hist);
  }
}

TEST(VerifyMrd, ConditionGivesMinRankExactly) {
  auto ctx = ring_for(3, 1, 2, 2);
  for (Elem eta = 0; eta < 9; ++eta)
    for (long long rho = 0; rho < 2; ++rho) {
      auto spec = CodeSpec::make(ctx, 1, eta, rho);
      if (!validate_condition(spec)) continue;
      auto rep = verify_mrd(spec);
      EXPECT_EQ(rep.enumerated, 81u);
      EXPECT_EQ(rep.min_rank, 2u) << "eta=" << eta << " rho=" << rho;
      EXPECT_TRUE(rep.mrd);
      EXPECT_TRUE(rep.condition_satisfied);
    }
}

TEST(VerifyMrd, TwistedGabidulinRegression) {
  auto ctx = ring_for(3, 1, 4, 1, {2, 1});
  auto nf = naive_of(ctx->ring()->field());
  Elem eta = 0;
  for (Elem c = 1; c < 81 && !eta; ++c)
    if (nf.norm(c, 1) != 1) eta = c;
  ASSERT_NE(eta, 0u);
  auto spec = CodeSpec::make(ctx, 2, eta, 1);
  VerifyOptions opt;
  opt.jobs = 2;
  auto rep = verify_mrd(spec, opt);
  EXPECT_EQ(rep.enumerated, 6561u);
  EXPECT_EQ(rep.min_rank, 3u);
  EXPECT_TRUE(rep.mrd);
}

TEST(VerifyMrd, EmpiricalReportWhenConditionFails) {
  auto ctx = ring_for(2, 1, 2, 2);
  for (Elem eta = 1; eta < 4; ++eta)
    for (long long rho = 0; rho < 2; ++rho) {
      auto spec = CodeSpec::make(ctx, 1, eta, rho);
      auto rep = verify_mrd(spec);
      EXPECT_FALSE(rep.condition_satisfied);
      std::uint64_t total = 0;
      for (auto h : rep.rank_histogram) total += h;
      EXPECT_EQ(total, 16u);
      EXPECT_EQ(rep.mrd, rep.min_rank == 2u);
      EXPECT_EQ(ctx->rank(rep.witness), rep.min_rank);
      EXPECT_EQ(rep.witness, code_element(spec, rep.witness_tuple));
    }
}

TEST(VerifyMrd, ElementsWithZeroConstantTermMeetTheBound) {
  for (auto [p, n, s, k] : {std::tuple{2u, 2u, 2u, 1u}, std::tuple{2u, 3u, 1u, 2u}, std::tuple{2u, 4u, 1u, 2u},
                            std::tuple{3u, 2u, 2u, 1u}}) {
    auto ctx = ring_for(p, 1, n, s);
    const Elem q = ctx->ring()->field().size();
    for (Elem eta = 0; eta < q; ++eta) {
      auto spec = CodeSpec::make(ctx, k, eta, 1);
      const auto count = detail::checked_pow(q, spec.free_length());
      for (std::uint64_t i = q; i < count; i += q) {  // a_0 = 0
        auto c = code_element(spec, detail::tuple_at(i, spec.free_length(), q));
        ASSERT_GE(ctx->rank(c), n - k + 1);
      }
    }
  }
}

TEST(VerifyMrd, BudgetAndSampling) {
  auto spec = CodeSpec::make(ring_for(3, 1, 2, 2), 1, 0, 1);
  VerifyOptions opt;
  opt.budget = 10;
  opt.mode = EnumerationMode::exhaustive;
  EXPECT_THROW(verify_mrd(spec, opt), BudgetExceeded);
  opt.mode = EnumerationMode::automatic;
  auto a = verify_mrd(spec, opt);
  EXPECT_EQ(a.mode, EnumerationMode::sampled);
  EXPECT_EQ(a.enumerated, 10u);
  EXPECT_EQ(a.seed, opt.seed);
  auto b = verify_mrd(spec, opt);
  EXPECT_EQ(a.rank_histogram, b.rank_histogram);
  EXPECT_EQ(a.witness_tuple, b.witness_tuple);
  opt.budget = 1 << 20;
  EXPECT_EQ(verify_mrd(spec, opt).mode, EnumerationMode::exhaustive);
}

TEST(VerifyMrd, ThreadedMatchesSerial) {
  auto ctx = ring_for(2, 1, 2, 2);
  for (Elem eta = 0; eta < 4; ++eta) {
    auto spec = CodeSpec::make(ctx, 1, eta, 1);
    VerifyOptions one, many;
    many.jobs = 3;
    auto a = verify_mrd(spec, one), b = verify_mrd(spec, many);
    EXPECT_EQ(a.rank_histogram, b.rank_histogram);
    EXPECT_EQ(a.min_rank, b.min_rank);
    EXPECT_EQ(a.witness_tuple, b.witness_tuple);
  }
}

TEST(CodeBasis, SizeLaw) {
  for (auto [p, e, n, s, k] : {std::tuple{2u, 1u, 2u, 2u, 1u}, std::tuple{3u, 1u, 2u, 2u, 1u}, std::tuple{2u, 1u, 3u, 1u, 2u},
                               std::tuple{2u, 2u, 2u, 1u, 1u}, std::tuple{2u, 1u, 4u, 1u, 3u}}) {
    auto ctx = ring_for(p, e, n, s);
    for (Elem eta : {Elem{0}, Elem{1}}) {
      auto spec = CodeSpec::make(ctx, k, eta, 1);
      EXPECT_EQ(code_basis(spec).dimension(), std::size_t{n} * s * k * e);
      if (spec.size_log_p() <= 12) {
        std::set<std::vector<Elem>> distinct;
        for (const auto& c : all_code_elements(spec)) distinct.insert(ctx->coordinates(c));
        EXPECT_EQ(distinct.size(), detail::checked_pow(p, static_cast<unsigned>(spec.size_log_p())));
      }
    }
  }
}

TEST(CodeBasis, KPrimeLinearButNotLLinear) {
  auto ctx = ring_for(3, 1, 2, 2);
  const Elem eta = first_valid_eta(ctx, 1, 1);
  auto spec = CodeSpec::make(ctx, 1, eta, 1);
  auto basis = code_basis(spec);
  const auto& f = ctx->ring()->field();
  auto all = all_code_elements(spec);
  for (std::size_t i = 0; i < all.size(); i += 7)
    for (std::size_t j = 0; j < all.size(); j += 5) EXPECT_TRUE(basis.contains(all[i] + all[j]));
  bool escaped = false;
  for (const auto& c : all)
    for (Elem lambda = 0; lambda < 9; ++lambda) {
      const QuotientElem scaled(ctx, c.rep().scale_left(lambda));
      if (f.in_subfield(lambda, 1))
        EXPECT_TRUE(basis.contains(scaled));
      else
        escaped = escaped || !basis.contains(scaled);
    }
  EXPECT_TRUE(escaped);
  // eta = 0 is closed under L as well
  auto petit = code_basis(CodeSpec::make(ctx, 1, 0, 1));
  for (const auto& c : all_code_elements(CodeSpec::make(ctx, 1, 0, 1)))
    for (Elem lambda = 0; lambda < 9; ++lambda) EXPECT_TRUE(petit.contains(QuotientElem(ctx, c.rep().scale_left(lambda))));
}

TEST(NormalizeIdentity, PetitIsUnchanged) {
  auto code = code_basis(CodeSpec::make(ring_for(2, 1, 2, 2), 1, 0, 1));
  auto normal = normalize_identity(code);
  EXPECT_EQ(normal.basis(), code.basis());
}

TEST(NormalizeIdentity, PreservesRanksAndIdealiserSizes) {
  for (auto [p, n, s, rho] : {std::tuple{3u, 2u, 2u, 1}, std::tuple{3u, 2u, 2u, 0}, std::tuple{3u, 3u, 1u, 2}}) {
    auto ctx = ring_for(p, 1, n, s, s == 1 ? std::vector<Elem>{p - 1, 1} : std::vector<Elem>{});
    Elem eta = first_valid_eta(ctx, 1, rho);
    if (eta == 0) eta = 1;
    auto code = code_basis(CodeSpec::make(ctx, 1, eta, rho));
    ASSERT_FALSE(code.contains(ctx->one()));
    auto normal = normalize_identity(code);
    EXPECT_TRUE(normal.contains(ctx->one()));
    EXPECT_EQ(normal.dimension(), code.dimension());
    EXPECT_EQ(normal.rank_multiset(), code.rank_multiset());
    EXPECT_EQ(left_idealiser(normal).dimension(), left_idealiser(code).dimension());
    EXPECT_EQ(right_idealiser(normal).dimension(), right_idealiser(code).dimension());
  }
}

TEST(NormalizeIdentity, UsesXInverseWhenXIsInTheCode) {
  auto ctx = ring_for(3, 1, 2, 2);
  auto code = code_basis(CodeSpec::make(ctx, 1, first_valid_eta(ctx, 1, 1), 1));
  ASSERT_TRUE(code.contains(ctx->x()));
  EXPECT_EQ(ctx->inverse(ctx->x()) * ctx->x(), ctx->one());
  auto normal = normalize_identity(code);
  EXPECT_EQ(normal.basis(), code.right_multiplied(ctx->inverse(ctx->x())).basis());
}

TEST(NormalizeIdentity, NoInvertibleElementThrows) {
  auto ctx = ring_for(2, 1, 2, 2);
  EXPECT_THROW(normalize_identity(SubspaceBasis(ctx, {})), std::domain_error);
  // condition violated at q = 2, n = 3, s = 1: every nonzero element has rank 2
  auto ctx3 = ring_for(2, 1, 3, 1, {1, 1});
  auto code = code_basis(CodeSpec::make(ctx3, 1, 1, 1));
  ASSERT_EQ(code.rank_multiset(), (std::vector<std::size_t>{1, 0, 7, 0}));
  EXPECT_THROW(normalize_identity(code), std::domain_error);
}

TEST(Idealisers, FullSpace) {
  auto ctx = ring_for(2, 1, 2, 2);
  auto all = full_space(ctx);
  EXPECT_EQ(all.dimension(), ctx->prime_dimension());
  EXPECT_EQ(left_idealiser(all).dimension(), ctx->prime_dimension());
  EXPECT_EQ(right_idealiser(all).dimension(), ctx->prime_dimension());
  // the centre of R_F is E_F, of F_p-dimension s e
  EXPECT_EQ(centraliser(all).dimension(), 2u);
  EXPECT_EQ(centre(all).dimension(), 2u);
}

TEST(Idealisers, KernelMatchesBruteForceForPetitF4) {
  auto ctx = ring_for(2, 1, 2, 2);
  auto code = code_basis(CodeSpec::make(ctx, 1, 0, 1));
  auto everything = full_space(ctx);
  std::size_t left = 0, right = 0, cent = 0, z = 0;
  for (std::uint64_t i = 0; i < *everything.size(); ++i) {
    const auto a = everything.at(i);
    bool l = true, r = true, c = true;
    for (const auto& b : code.basis()) {
      l = l && code.contains(a * b);
      r = r && code.contains(b * a);
      c = c && a * b == b * a;
    }
    left += l;
    right += r;
    cent += c;
    z += l && c;
  }
  auto t = nuclear_tuple(code);
  EXPECT_EQ(std::size_t{1} << t.left, left);
  EXPECT_EQ(std::size_t{1} << t.right, right);
  EXPECT_EQ(std::size_t{1} << t.centraliser, cent);
  EXPECT_EQ(std::size_t{1} << t.centre, z);
  // sizes (q^{ns}, q^n, q^n, q^s, q) at q = 2, n = s = 2
  EXPECT_EQ(t, (NuclearTuple{4, 2, 2, 2, 1}));
}

TEST(Predictions, Formulae) {
  EXPECT_EQ(predict_nuclear(2, 2, 1, 1, 0, 1, true), (NuclearTuple{4, 2, 2, 2, 1}));
  EXPECT_EQ(predict_nuclear(6, 2, 1, 1, 4, 1, false), (NuclearTuple{12, 2, 2, 2, 1}));
  EXPECT_EQ(predict_nuclear(3, 3, 1, 1, 3, 1, false), (NuclearTuple{9, 3, 3, 3, 1}));
  EXPECT_EQ(predict_nuclear(2, 2, 1, 1, 1, 1, false), (NuclearTuple{4, 1, 1, 2, 1}));
  EXPECT_EQ(predict_nuclear(2, 2, 1, 1, 0, 1, false), (NuclearTuple{4, 2, 2, 2, 1}));
  auto ctx = ring_for(3, 1, 2, 2);
  EXPECT_TRUE(prediction_applies(CodeSpec::make(ctx, 1, 0, 0)));
  EXPECT_FALSE(prediction_applies(CodeSpec::make(ring_for(3, 1, 3, 1, {2, 1}), 1, 0, 0)));
  EXPECT_FALSE(prediction_applies(CodeSpec::make(ring_for(2, 1, 3, 1), 2, 0, 0)));  // 2k > n
}

TEST(Predictions, ComputedMatchesPredictedOverF9) {
  auto ctx = ring_for(3, 1, 2, 2);
  for (long long i = 0; i < 4; ++i) {
    const Elem eta = first_valid_eta(ctx, 1, i);
    auto r = nuclear_parameters(CodeSpec::make(ctx, 1, eta, i));
    ASSERT_TRUE(r.predicted.has_value());
    EXPECT_EQ(r.computed, *r.predicted) << "i=" << i;
  }
  auto petit = nuclear_parameters(CodeSpec::make(ctx, 1, 0, 0));
  EXPECT_TRUE(petit.matches());
  EXPECT_EQ(petit.computed, (NuclearTuple{4, 2, 2, 2, 1}));
}

TEST(Predictions, ComputedMatchesPredictedForK2) {
  auto ctx = ring_for(3, 1, 4, 1, {2, 1});
  const Elem eta = first_valid_eta(ctx, 2, 1);
  ASSERT_NE(eta, 0u);
  for (long long i : {1, 2}) {
    auto r = nuclear_parameters(CodeSpec::make(ctx, 2, eta, i));
    ASSERT_TRUE(r.predicted.has_value());
    EXPECT_EQ(r.computed, *r.predicted) << "i=" << i;
  }
}

TEST(KnownFamilies, Classification) {
  auto has = [](const std::vector<std::string>& v, const std::string& key) {
    return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return s.find(key) != std::string::npos; });
  };
  auto petit = nuclear_parameters(CodeSpec::make(ring_for(3, 1, 2, 2), 1, 0, 0)).computed;
  EXPECT_TRUE(has(compare_known_families(petit, 3), "Petit"));
  EXPECT_TRUE(compare_known_families(NuclearTuple{12, 2, 2, 2, 1}, 2).empty());
  EXPECT_TRUE(compare_known_families(NuclearTuple{12, 2, 2, 2, 1}, 3).empty());

  auto ctx = ring_for(3, 1, 3, 1, {2, 1});
  const Elem eta = first_valid_eta(ctx, 1, 2);
  auto t = nuclear_parameters(CodeSpec::make(ctx, 1, eta, 2)).computed;
  EXPECT_TRUE(has(compare_known_families(t, 3), "generalised twisted field")) << t.left << t.right << t.centraliser;
}
