// Solves for k in eta^a = dt_a + k <i_a x, dx> from d eta^a(u, v) = 2 g(I_a u, v)
// on D, with I_a the left multiplication by i, j, k and g the flat metric, and
// prints the resulting forms. The output is the golden file tests/data/flat_contact.txt.
//
// usage: derive_flat_contact [max_n]

#include "qctw/flat_twistor.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

using namespace qctw;

namespace {

// d eta^a is k times d eta^a at k = 1, and has no dt part, so the ratio on
// coordinate fields fixes k.
std::optional<Rational> solve(int n) {
  const auto eta = contact_forms(n, Rational(1));
  const std::size_t nvars = 4 * n + 3;
  std::optional<Rational> k;
  for (int a = 0; a < 3; ++a) {
    const PolyForm d_eta = exterior_derivative(eta[a]);
    const RMatrix L = left_multiplication_matrix(Quaternion::basis(a + 1), n);
    for (int p = 0; p < 4 * n; ++p) {
      for (int q = 0; q < 4 * n; ++q) {
        const Polynomial unit = evaluate(d_eta, {coordinate_field(nvars, p), coordinate_field(nvars, q)});
        if (!unit.is_constant()) return std::nullopt;
        const Rational target = 2 * L(q, p);
        const Rational c = unit.constant_term();
        if (is_zero(c)) {
          if (!is_zero(target)) return std::nullopt;
          continue;
        }
        const Rational ratio = target / c;
        if (k && *k != ratio) return std::nullopt;
        k = ratio;
      }
    }
  }
  return k;
}

}  // namespace

int main(int argc, char** argv) {
  const int max_n = argc > 1 ? std::atoi(argv[1]) : 1;
  if (max_n < 1) {
    std::cerr << "usage: derive_flat_contact [max_n >= 1]\n";
    return 2;
  }
  std::optional<Rational> k;
  for (int n = 1; n <= max_n; ++n) {
    const auto kn = solve(n);
    if (!kn || (k && *k != *kn)) {
      std::cerr << "no consistent coefficient for n = " << n << '\n';
      return 1;
    }
    k = kn;
  }
  std::cout << "k = " << k->get_str() << '\n';
  const auto names = flat_coordinate_names(1);
  const auto eta = contact_forms(1, *k);
  for (int a = 0; a < 3; ++a) std::cout << "eta" << a + 1 << " = " << eta[a].to_string(names) << '\n';
  return 0;
}
