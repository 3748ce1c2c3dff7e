#pragma once

#include <string>

#include "jordan/rmatrix/rmatrix.hpp"
#include "jordan/sl2/reps.hpp"
#include "jordan/tmatrix/tmatrix.hpp"
#include "jordan/twist/twist.hpp"

namespace jordan {

// Terms are grouped by powers of h; a group with a constant term c is
// written c h^k (1 + ...).
std::string latex(const MultiPoly& p);
std::string latex(const HPoly& p);
std::string latex(const PolyMatrix& m);
std::string latex(const Matrix<HPoly>& m);

// R on V_{j1} (x) V_{j2} as a j1-sized grid of named j2 x j2 blocks.
std::string latex(const RMatrix& r);
std::string latex(const TMatrix& t);
std::string latex(const RepMatrices<MultiPoly>& r);
std::string latex(const TwistSeries& g);

}  // namespace jordan
