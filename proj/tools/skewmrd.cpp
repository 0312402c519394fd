// Command-line front end.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewmrd/codes.hpp"
#include "skewmrd/errors.hpp"
#include "skewmrd/quotient.hpp"
#include "skewmrd/reproduce.hpp"
#include "skewmrd/semifield.hpp"
#include "skewmrd/skewpoly.hpp"
#include "skewmrd/text.hpp"

using namespace skewmrd;
using nlohmann::json;

namespace {

constexpr int kExitBadParams = 2;
constexpr int kExitBudget = 3;
constexpr int kExitGolden = 4;

struct RunConfig {
  unsigned p = 2, e = 1, n = 2, s = 2, k = 1;
  std::optional<long long> sigma_exp;
  long long rho_exp = 0;
  std::string big;  // F
  Elem eta = 0;
  std::optional<unsigned> kprime;
  std::uint64_t budget = std::uint64_t{1} << 20;
  unsigned jobs = 0;
  std::uint64_t seed = 0x5eed;
  std::string mode = "auto";
  std::string format = "json";
  std::string output;
  std::string f, a, b;
  std::string example, golden;
};

void add_ring_flags(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("-p", c.p, "characteristic")->capture_default_str();
  cmd->add_option("-e", c.e, "K = F_{p^e}")->capture_default_str();
  cmd->add_option("-n", c.n, "order of sigma; L = F_{p^{ne}}")->capture_default_str();
  cmd->add_option("--sigma-exp", c.sigma_exp, "sigma = Frobenius^j on L (default j = e)");
}

void add_code_flags(CLI::App* cmd, RunConfig& c) {
  add_ring_flags(cmd, c);
  cmd->add_option("-s", c.s, "degree of F")->capture_default_str();
  cmd->add_option("-k", c.k, "code parameter, 1 <= k <= n-1")->capture_default_str();
  cmd->add_option("--rho-exp,--rho", c.rho_exp, "rho = Frobenius^i on L")->capture_default_str();
  cmd->add_option("--F", c.big, "F over K, comma-separated constant first (default: least irreducible)");
  cmd->add_option("--eta", c.eta, "eta as an integer encoding in L")->capture_default_str();
  cmd->add_option("--kprime", c.kprime, "degree of K' over F_p (default gcd(e, i))");
  cmd->add_option("--budget", c.budget, "enumeration ceiling")->capture_default_str();
  cmd->add_option("--jobs", c.jobs, "worker threads (default: all cores)");
  cmd->add_option("--seed", c.seed, "seed for sampled mode")->capture_default_str();
  cmd->add_option("--mode", c.mode, "auto, exhaustive or sampled")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}))
      ->capture_default_str();
}

void add_output_flags(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  cmd->add_option("-o", c.output, "output file (default stdout)");
}

RingPtr make_ring(const RunConfig& c) { return SkewRing::create(c.p, c.e, c.n, c.sigma_exp); }

KPoly make_big(const RunConfig& c, const RingPtr& ring) {
  if (c.big.empty()) return monic_irreducibles(ring->field(), ring->e(), c.s).front();
  auto big = KPoly::over(ring->field(), ring->e(), parse_coeffs(c.big));
  return big;
}

CodeSpec make_spec(const RunConfig& c) {
  auto ring = make_ring(c);
  auto big = make_big(c, ring);
  if (!c.big.empty() && big.degree() != static_cast<int>(c.s))
    throw std::invalid_argument("--F has degree " + std::to_string(big.degree()) + " but -s is " + std::to_string(c.s));
  return CodeSpec::make(QuotientRing::create(ring, big), c.k, c.eta, c.rho_exp, c.kprime);
}

unsigned jobs_of(const RunConfig& c) {
  if (c.jobs > 0) return c.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

EnumerationMode mode_of(const RunConfig& c) {
  if (c.mode == "exhaustive") return EnumerationMode::exhaustive;
  if (c.mode == "sampled") return EnumerationMode::sampled;
  return EnumerationMode::automatic;
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + c.output);
  out << text;
}

json nuclear_json(const CodeSpec& spec) {
  const auto nr = nuclear_parameters(spec);
  json j;
  j["computed"] = tuple_json(nr.computed, spec.p());
  j["predicted"] = nr.predicted ? tuple_json(*nr.predicted, spec.p()) : json(nullptr);
  j["matches_prediction"] = nr.predicted ? json(nr.matches()) : json(nullptr);
  j["known_families"] = compare_known_families(nr.computed, spec.p());
  return j;
}

int cmd_construct(const RunConfig& c, bool nuclei) {
  const auto spec = make_spec(c);
  const auto rep = verify_mrd(spec, {c.budget, mode_of(c), c.seed, jobs_of(c)});
  auto j = report_json(spec, rep);
  j["nuclear"] = nuclei ? nuclear_json(spec) : json(nullptr);
  emit(c, j.dump(2) + "\n");
  return 0;
}

int cmd_nuclei(const RunConfig& c) {
  const auto spec = make_spec(c);
  json j = nuclear_json(spec);
  j["spec"] = spec_json(spec);
  j["condition_satisfied"] = validate_condition(spec);
  emit(c, j.dump(2) + "\n");
  return 0;
}

SkewPoly parse_skew(const RingPtr& ring, const std::string& text, const char* flag) {
  if (text.empty()) throw std::invalid_argument(std::string("missing ") + flag);
  return SkewPoly(ring, parse_coeffs(text));
}

int cmd_mclm(const RunConfig& c) {
  const auto ring = make_ring(c);
  const auto f = parse_skew(ring, c.f, "--f");
  if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("--f must be monic of degree >= 1");
  const auto big = mclm(f);
  json j{{"f", f.coeffs()},
         {"F", big.coeffs()},
         {"F_text", format_poly(big)},
         {"irreducible", is_irreducible_skew(f)},
         {"modulus", ring->field().modulus()}};
  emit(c, j.dump(2) + "\n");
  return 0;
}

int cmd_gcrd(const RunConfig& c) {
  const auto ring = make_ring(c);
  const auto a = parse_skew(ring, c.a, "--a");
  const auto b = parse_skew(ring, c.b, "--b");
  const auto bz = extended_gcrd(a, b);
  json j{{"gcrd", bz.gcrd.coeffs()}, {"u", bz.u.coeffs()}, {"v", bz.v.coeffs()}, {"gcrd_text", format_poly(bz.gcrd)}};
  emit(c, j.dump(2) + "\n");
  return 0;
}

int cmd_rank(const RunConfig& c) {
  const auto ring = make_ring(c);
  auto big = make_big(c, ring);
  const auto ctx = QuotientRing::create(ring, big);
  const auto a = ctx->reduce(parse_skew(ring, c.a, "--a"));
  json j{{"a", a.rep().coeffs()}, {"F", big.coeffs()}, {"rank", ctx->rank(a)}, {"n", ctx->n()}};
  emit(c, j.dump(2) + "\n");
  return 0;
}

int cmd_divisor_search(const RunConfig& c) {
  const auto ring = make_ring(c);
  const auto big = make_big(c, ring);
  const auto f = find_irreducible_divisor(ring, big, c.budget);
  json j{{"F", big.coeffs()}, {"f", f.coeffs()}, {"f_text", format_poly(f)}, {"irreducible", is_irreducible_skew(f)}};
  emit(c, j.dump(2) + "\n");
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read golden file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Reports the first differing line; returns true on an exact match.
bool compare_golden(const std::string& got, const std::string& want) {
  if (got == want) return true;
  std::istringstream g(got), w(want);
  std::string gl, wl;
  for (std::size_t line = 1;; ++line) {
    const bool gok = static_cast<bool>(std::getline(g, gl));
    const bool wok = static_cast<bool>(std::getline(w, wl));
    if (!gok && !wok) break;
    if (!gok || !wok || gl != wl) {
      std::cerr << "golden mismatch at line " << line << "\n- " << (wok ? wl : "<eof>") << "\n+ "
                << (gok ? gl : "<eof>") << "\n";
      return false;
    }
  }
  std::cerr << "golden mismatch (trailing bytes)\n";
  return false;
}

int cmd_reproduce(RunConfig c, bool p_set, bool eta_set) {
  std::string text;
  if (c.example == "table52") {
    const auto j = reproduce_table();
    if (c.format == "csv") {
      text = "params,parameters\n";
      for (const auto& row : j["rows"]) {
        const std::string r = row.get<std::string>();
        const auto amp = r.find('&');
        text += "\"" + r.substr(0, amp) + "\",\"" + r.substr(amp + 1) + "\"\n";
      }
    } else {
      text = j.dump(2) + "\n";
    }
  } else {
    const unsigned n = c.example == "ns2" ? 2 : 3;
    const unsigned p = p_set ? c.p : (n == 2 ? 3 : 2);
    const auto j = reproduce_worked(p, c.e, n, eta_set ? std::optional<Elem>(c.eta) : std::nullopt);
    if (c.format == "csv") {
      text = "a,matrix\n";
      for (const auto& el : j["elements"]) text += "\"" + el["a"].dump() + "\",\"" + el["matrix"].dump() + "\"\n";
    } else {
      text = j.dump(2) + "\n";
    }
    if (!j["matches_displayed_form"].get<bool>()) {
      std::cerr << "computed matrices differ from the displayed form\n";
      emit(c, text);
      return kExitGolden;
    }
  }
  emit(c, text);
  if (!c.golden.empty() && !compare_golden(text, read_file(c.golden))) return kExitGolden;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew polynomial rings, MRD codes and semifields over finite fields"};
  app.require_subcommand(1);
  RunConfig c;

  auto* construct = app.add_subcommand("construct", "build S_{n,s,k}(eta,rho,F) and verify it");
  add_code_flags(construct, c);
  add_output_flags(construct, c);
  bool no_nuclei = false;
  construct->add_flag("--no-nuclei", no_nuclei, "skip idealiser computation");

  auto* nuclei = app.add_subcommand("nuclei", "nuclear parameters of a code");
  add_code_flags(nuclei, c);
  add_output_flags(nuclei, c);

  auto* mclm_cmd = app.add_subcommand("mclm", "minimal central left multiple of f");
  add_ring_flags(mclm_cmd, c);
  add_output_flags(mclm_cmd, c);
  mclm_cmd->add_option("--f", c.f, "monic f, comma-separated constant first")->required();

  auto* gcrd_cmd = app.add_subcommand("gcrd", "greatest common right divisor with Bezout cofactors");
  add_ring_flags(gcrd_cmd, c);
  add_output_flags(gcrd_cmd, c);
  gcrd_cmd->add_option("--a", c.a, "first polynomial")->required();
  gcrd_cmd->add_option("--b", c.b, "second polynomial")->required();

  auto* rank_cmd = app.add_subcommand("rank", "rank of a in R/RF(x^n)");
  add_ring_flags(rank_cmd, c);
  add_output_flags(rank_cmd, c);
  rank_cmd->add_option("-s", c.s, "degree of F")->capture_default_str();
  rank_cmd->add_option("--F", c.big, "F over K (default: least irreducible of degree s)");
  rank_cmd->add_option("--a", c.a, "element")->required();

  auto* repro = app.add_subcommand("reproduce", "regenerate a worked example or the parameter table");
  repro->add_option("example", c.example, "ns2, ns3 or table52")
      ->required()
      ->check(CLI::IsMember({"ns2", "ns3", "table52"}));
  auto* repro_p = repro->add_option("-p", c.p, "characteristic (ns2: 3, ns3: 2)");
  repro->add_option("-e", c.e, "K = F_{p^e}")->capture_default_str();
  auto* repro_eta = repro->add_option("--eta", c.eta, "eta (default: least valid encoding)");
  repro->add_option("--golden", c.golden, "compare output byte for byte with this file");
  add_output_flags(repro, c);

  auto* divisor = app.add_subcommand("divisor-search", "first monic degree-s right divisor of F(x^n)");
  add_ring_flags(divisor, c);
  add_output_flags(divisor, c);
  divisor->add_option("-s", c.s, "degree of F")->capture_default_str();
  divisor->add_option("--F", c.big, "F over K (default: least irreducible of degree s)");
  divisor->add_option("--budget", c.budget, "candidate ceiling")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitBadParams;
  }

  try {
    if (*construct) return cmd_construct(c, !no_nuclei);
    if (*nuclei) return cmd_nuclei(c);
    if (*mclm_cmd) return cmd_mclm(c);
    if (*gcrd_cmd) return cmd_gcrd(c);
    if (*rank_cmd) return cmd_rank(c);
    if (*repro) return cmd_reproduce(c, repro_p->count() > 0, repro_eta->count() > 0);
    if (*divisor) return cmd_divisor_search(c);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ArithmeticInvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitBadParams;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitBadParams;
  } catch (const std::overflow_error& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitBadParams;
  }
  return 0;
}
