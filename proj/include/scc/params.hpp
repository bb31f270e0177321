#ifndef SCC_PARAMS_HPP
#define SCC_PARAMS_HPP

#include "scc/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace scc {

enum class Mode { Strict, Experimental };

std::string mode_str(Mode m);

struct StrictViolation : std::runtime_error {
    explicit StrictViolation(std::vector<std::string> issues_);
    std::vector<std::string> issues;
};

// The numeric regime every graded computation runs in. All fields are exact;
// the derived fields are functions of lambda and Omega and are recomputed,
// never stored from input.
struct Params {
    Mode mode = Mode::Strict;
    long long n = 0;  // odd Burnside exponent; 0 when the regime was given by
                      // (lambda, Omega) alone and no exponent is in play
    Rational lambda;
    Rational Omega;
    long long p0 = 39;
    long long p1 = 65;

    // Derived, fixed by the regime:
    Rational omega;  // 1/Omega
    Rational rho;    // 1 - 9*lambda
    Rational zeta;   // 1/20
    Rational nu;     // zeta/(1 - 2*zeta)
    Rational theta;  // (5 - 22*nu)/6
    Rational eta;    // (1 + 2*nu)/theta
    Rational xi0;    // 7*lambda - 1.5*omega
    Rational xi1;    // xi0 - 2.6*omega
    Rational xi2;    // xi1 - 2*lambda - 3.4*omega
};

// Strict regime from the exponent: lambda = 80/n, Omega = n/4, p0 = 39,
// p1 = 65. Rejects n not odd or n <= 2000, listing every failure.
Params make_strict_params(long long n);

// Strict regime from the magnitudes alone: requires lambda <= 1/24 and
// lambda*Omega >= 20 (again listing every failure); no exponent is set.
Params make_strict_params(const Rational& lambda, const Rational& Omega);

// Anything-goes regime for desk-scale experiments; formulas for the derived
// fields still apply. Positivity is the only gate.
Params make_experimental_params(long long n, const Rational& lambda, const Rational& Omega,
                                long long p0 = 39, long long p1 = 65);

}  // namespace scc

#endif
