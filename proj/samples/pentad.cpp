// Builds the pentad from its admissible sequence, checks it against the
// rank-2 parameterization and prints it in circular order.

#include "hypersecant/hypersecant.hpp"

#include <iostream>

int main() {
  using namespace hypersecant;
  const AdmissibleSequence s({1, 2, 3, 4, 5}, {1, 2, 3, 4, 5});
  const Polynomial f = master_polynomial(s);
  const CircularTermOrder order(5);
  std::cout << "sequence      " << s.to_string() << "\n";
  std::cout << "terms         " << f.term_count() << "\n";
  std::cout << "leading term  " << leading_monomial(order, f).to_string() << "\n";
  std::cout << "in secant     " << (in_secant_ideal(5, f) ? "yes" : "no") << "\n";
  std::cout << to_string(f, order) << "\n";
}
