// Regenerates src/habiro/trefoil_table.inc from exact braid traces.
//
//   derive_habiro [i_max] > src/habiro/trefoil_table.inc

#include <cstdlib>
#include <iostream>

#include "logjones/habiro/habiro.hpp"
#include "logjones/jones/jones.hpp"

int main(int argc, char** argv) {
  using namespace logjones;
  const int i_max = argc > 1 ? std::atoi(argv[1]) : 15;
  const jones::BraidWord b = jones::catalog_braid("3_1");

  std::vector<qcalc::LaurentPoly> values;
  for (int m = 1; m <= i_max + 1; ++m) values.push_back(jones::colored_jones_framing0(b, m));
  const habiro::HabiroCoeffs h = habiro::extract_coeffs(values, "3_1");

  std::cout << "// Generated by tools/derive_habiro from the braid " << b.to_string() << ".\n";
  std::cout << "const std::vector<std::vector<FrozenTerm>> kTrefoilTable = {\n";
  for (const auto& a : h.coeffs) {
    std::cout << "    {";
    bool first = true;
    for (const auto& t : a.terms()) {
      std::cout << (first ? "" : ", ") << "{" << t.exp2 << ", " << t.coeff.get_num().get_str() << ", "
                << t.coeff.get_den().get_str() << "}";
      first = false;
    }
    std::cout << "},\n";
  }
  std::cout << "};\n";
}
