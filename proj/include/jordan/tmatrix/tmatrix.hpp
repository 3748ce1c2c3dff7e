#pragma once

#include <functional>
#include <optional>

#include "jordan/linalg/matrix.hpp"
#include "jordan/nc/power.hpp"
#include "jordan/rmatrix/rmatrix.hpp"

namespace jordan {

// T = prefactor * body on V_j. The q side is written in the hat alphabet,
// the h side in the Jordanian one.
template <class C>
struct TMatrixOf {
  Spin j;
  MultiPoly z;
  CentralPower prefactor;
  Matrix<NCPoly<C>> body;
};

using QTMatrix = TMatrixOf<LaurentScalar>;
using TMatrix = TMatrixOf<MultiPoly>;

// The coloured T_{q,lambda}^{j,z} for j = 1/2 and j = 1, lambda = q^alpha.
QTMatrix build_Tq(Spin j, const MultiPoly& z, int order, const MultiPoly& alpha = MultiPoly(Symbol::alpha));

struct TContractionOptions {
  std::optional<int> trunc;
  bool confirm = true;
  MultiPoly alpha = MultiPoly(Symbol::alpha);
  std::function<LaurentScalar(int)> eta;  // replaces eta in M only; negative tests
};

struct TContraction {
  TMatrix t;
  int order = 0;
};

// lim_{q->1} of M^-1 T_q M rewritten in the tilde generators.
TContraction contract_T_with_order(Spin j, const MultiPoly& z, const TContractionOptions& opts = {});
TMatrix contract_T(Spin j, const MultiPoly& z, const TContractionOptions& opts = {});

// R (T (x) 1)(1 (x) T) = (1 (x) T)(T (x) 1) R with the coloured R of the
// given source. Both sectors must carry a colour.
Report check_RTT(const Sector& s1, const Sector& s2, RSource source = RSource::direct);

// Contraction commutes with z -> 1/2 and with alpha -> 0; T^{1/2,1/2} is
// the generator matrix.
Report check_specializations();

// Delta(D^) = D^ (x) D^ on the hat side and the Jordanian determinant relations.
Report check_group_like_determinant(int order);

// contract_T at its accepted order N agrees with N + 2, and a wrong eta in M
// leaves a pole.
Report check_T_truncation_stability(Spin j, const MultiPoly& z);

}  // namespace jordan
