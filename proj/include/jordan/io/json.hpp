#pragma once

#include <json.hpp>

#include "jordan/nc/power.hpp"
#include "jordan/report.hpp"
#include "jordan/rmatrix/rmatrix.hpp"
#include "jordan/sl2/reps.hpp"
#include "jordan/tmatrix/tmatrix.hpp"
#include "jordan/twist/twist.hpp"

namespace jordan {

using Json = nlohmann::ordered_json;

// Exponent vectors follow the Symbol order: h, alpha, z, z1, z2, z3, sigma.
Json to_json(const MultiPoly& p);
Json to_json(const PolyMatrix& m);
Json to_json(const RatFunc& f);
Json to_json(const LaurentScalar& s);  // trunc is null for exact values
Json to_json(const SeriesMatrix& m);
Json to_json(const RepMatrices<LaurentScalar>& r);
Json to_json(const HPoly& p);
Json to_json(const Matrix<HPoly>& m);
Json to_json(const CentralPower& p);
Json to_json(const Sector& s);
Json to_json(const RMatrix& r);
Json to_json(const TMatrix& t);
Json to_json(const RepMatrices<MultiPoly>& r);
Json to_json(const TwistSeries& g);
Json to_json(const Report& r);

// Parsers; throw std::invalid_argument on malformed input.
MultiPoly multipoly_from_json(const Json& j);
PolyMatrix polymatrix_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
LaurentScalar laurent_from_json(const Json& j);
SeriesMatrix seriesmatrix_from_json(const Json& j);
RepMatrices<LaurentScalar> qrep_from_json(const Json& j);
HPoly hpoly_from_json(const Json& j);
Matrix<HPoly> hmatrix_from_json(const Json& j);
CentralPower central_power_from_json(const Json& j);
Sector sector_from_json(const Json& j);
RMatrix rmatrix_from_json(const Json& j);
TMatrix tmatrix_from_json(const Json& j);
RepMatrices<MultiPoly> rep_from_json(const Json& j);
TwistSeries twist_from_json(const Json& j);
Report report_from_json(const Json& j);

}  // namespace jordan
