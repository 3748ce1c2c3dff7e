#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jordan/linalg/functions.hpp"
#include "jordan/report.hpp"
#include "jordan/scalar/laurent.hpp"
#include "jordan/sl2/spin.hpp"

namespace jordan {

using PolyMatrix = Matrix<MultiPoly>;
using SeriesMatrix = Matrix<LaurentScalar>;

enum class RepKind { classical, q_deformed, jordanian };

std::string_view to_string(RepKind k);
RepKind parse_rep_kind(std::string_view text);

// Generator matrices of one irreducible representation, basis m = j..-j.
template <class S>
struct RepMatrices {
  RepKind kind{};
  Spin j{};
  std::vector<std::pair<std::string, Matrix<S>>> generators;

  const Matrix<S>& operator[](std::string_view name) const {
    for (const auto& [n, m] : generators)
      if (n == name) return m;
    throw std::out_of_range("no generator named " + std::string(name));
  }
};

// J+, J-, J0 with J0 = diag(2m).
RepMatrices<MultiPoly> build_classical_rep(Spin j);

// Jhat+, Jhat-, Jhat0 with q-integer matrix elements, entries known through t^order.
RepMatrices<LaurentScalar> build_q_rep(Spin j, int order);

// Generators of the h-deformed algebra obtained from a (possibly reducible)
// classical representation through the nonlinear map: X, Y, H, T, Tinv.
struct JordanianGenerators {
  PolyMatrix X, Y, H, T, Tinv;
};
JordanianGenerators jordanian_from_classical(const PolyMatrix& jp, const PolyMatrix& jm, const PolyMatrix& j0);

RepMatrices<MultiPoly> build_h_rep(Spin j);

// Ttilde = h J+ + (1 + (h J+)^2)^{1/2} in the classical spin-j representation.
PolyMatrix build_t_tilde(Spin j);

// [H, X] = 2 sinh(hX)/h, [H, Y] = -(Y cosh(hX) + cosh(hX) Y)/2, [X, Y] = H and
// T Tinv = 1 on the spin-j matrices.
Report check_h_algebra(Spin j);

}  // namespace jordan
