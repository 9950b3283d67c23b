// Walks through the n = 10 example: products, types and the block containing
// alpha and beta.

#include <iostream>

#include "endosimplex/endosimplex.hpp"

using namespace endosimplex;

int main() {
  auto const s = make_simplex(10, {0, 2, 3, 5, 8});
  auto const alpha = parse_endo("0_4 2_2 8_4", 10);
  auto const beta = parse_endo("0_3 2_2 3_3 8_2", 10);
  auto const show = [](Endo const& e) { return format_endo(e, Notation::run_length); };

  std::cout << "|simplex|     = " << cardinality(s) << '\n';
  std::cout << "alpha^2       = " << show(alpha * alpha) << '\n';
  std::cout << "beta^2        = " << show(beta * beta) << '\n';
  std::cout << "beta^3        = " << show(power(beta, 3)) << '\n';
  std::cout << "alpha*beta    = " << show(alpha * beta) << '\n';
  std::cout << "beta*alpha    = " << show(beta * alpha) << '\n';
  std::cout << "type(alpha)   = " << format_endo(type_of(s, alpha), Notation::tuple) << '\n';
  std::cout << "type(beta)    = " << format_endo(type_of(s, beta), Notation::tuple) << '\n';
  std::cout << "block(alpha)  = " << label_string(classify(s, alpha), s) << '\n';
  std::cout << "block(beta)   = " << label_string(classify(s, beta), s) << '\n';

  auto const iota = eventual_idempotent(type_of(s, alpha)).idempotent;
  std::cout << "root semiring = " << root_semiring(iota).size() << " elements\n";
  std::cout << "right identities: " << right_identities(s).size() << '\n';

  auto const report = partition(s);
  for (auto const& [label, block] : report.blocks) {
    std::cout << "  " << label_string(label, s) << ": " << block.size() << '\n';
  }
}
