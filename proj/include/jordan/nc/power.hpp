#pragma once

#include <array>
#include <string>

#include "jordan/nc/rewrite.hpp"

namespace jordan {

// D^sigma for a symbolic exponent. Only appears as a left prefactor.
struct CentralPower {
  MultiPoly sigma;

  std::string to_string() const { return "D^(" + sigma.to_string() + ")"; }
  friend bool operator==(const CentralPower&, const CentralPower&) = default;
};

// x D^sigma = D^sigma phi_sigma(x). The images are linear in the generators
// with coefficients polynomial in Symbol::sigma.
struct PowerCommutation {
  std::array<HPoly, 4> images;

  HPoly image(char x, const MultiPoly& sigma) const;
  // phi_sigma(p), normal-ordered.
  HPoly apply(const HPoly& p, const MultiPoly& sigma, const HSystem& sys) const;
};

// Brute force at an integer power: solves x D^n = D^n y with y linear in
// the generators, by rewriting both sides. Throws if no such y exists.
std::array<HPoly, 4> integer_power_images(const HSystem& sys, const HPoly& D, unsigned n);

struct PowerFit {
  PowerCommutation rules;
  Report report;
};

// Interpolates the images in sigma from n = 1..4 and verifies them at n = 5.
PowerFit fit_power_commutation(const HSystem& sys, const HPoly& D);

// The fitted Jordanian rules with symbolic alpha, computed once. Throws if
// the fit does not verify.
const PowerCommutation& jordanian_power_commutation();
HPoly commute_past_power(char x, const MultiPoly& sigma);

// Hat side closed form: b^ -> lambda^{2 sigma} b^, c^ -> lambda^{-2 sigma} c^.
QPoly hat_commute_past_power(char x, const MultiPoly& sigma, int order,
                             const MultiPoly& alpha = MultiPoly(Symbol::alpha));
// Compares the hat closed form with rewriting x D^^n for n = 1..max_n.
Report check_hat_power_commutation(int order, unsigned max_n);

}  // namespace jordan
