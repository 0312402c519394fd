// Builds the Petit semifield of order 81 and one of its twisted relatives,
// checks both, and prints their nuclear parameters.

#include <iostream>

#include "skewmrd/codes.hpp"
#include "skewmrd/semifield.hpp"
#include "skewmrd/text.hpp"

using namespace skewmrd;

int main() {
  auto ring = SkewRing::create(3, 1, 2);  // F_9[x; a -> a^3]
  auto big = monic_irreducibles(ring->field(), 1, 2).front();
  auto ctx = QuotientRing::create(ring, big);
  auto f = find_irreducible_divisor(ring, big, 1 << 16);
  std::cout << "F = " << format_poly(big) << ", f = " << format_poly(f) << "\n";

  PetitSemifield petit(f);
  const auto x = indeterminate(ring);
  std::cout << "x o x = " << format_poly(petit.mul(x, x)) << "\n";
  std::cout << "no zero divisors: " << std::boolalpha << verify_semifield(petit).pass << "\n";

  for (Elem eta : {Elem{0}, Elem{4}}) {
    auto spec = CodeSpec::make(ctx, 1, eta, 1);
    auto rep = verify_mrd(spec);
    auto nuc = nuclear_parameters(spec);
    std::cout << "\neta = " << eta << ": condition " << validate_condition(spec) << ", min rank " << rep.min_rank
              << ", mrd " << rep.mrd << "\n  nuclear (log_3):";
    for (auto v : nuc.computed.as_vector()) std::cout << ' ' << v;
    std::cout << "\n  predicted match: " << nuc.matches() << "\n  same parameters as:";
    for (const auto& fam : compare_known_families(nuc.computed, 3)) std::cout << ' ' << fam << ';';
    std::cout << "\n  semifield check: " << verify_semifield(CodeSemifield(spec, f)).pass << "\n";
  }
}
