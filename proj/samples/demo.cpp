// Enumerates the stable 4_1-patterns, labels each one, and follows the
// 𝒜¹_{2,m} family through a few levels.

#include <iostream>

#include "stablepat/stablepat.hpp"

using namespace stablepat;

int main() {
  const auto sp = enumerate_stable(4, 1, Method::Lift);
  std::cout << sp.size() << " stable 4_1-patterns\n";
  for (const auto& p : sp) std::cout << "  " << classify(p)->str() << "  " << p.str() << "\n";

  const FamilySpec f{6, 0, 0, 2, 0};
  for (int m = 3; m <= 6; ++m) std::cout << f.str() << " at level " << m << ": " << family_pattern(f, m).str() << "\n";

  const auto r = hereditary_up_to(phi(3), 6);
  std::cout << "phi_3 hereditary up to 6: " << (r.verdict ? "yes" : "no") << "\n";
}
