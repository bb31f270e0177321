#include "scc/params.hpp"

#include <sstream>

namespace scc {

std::string mode_str(Mode m) { return m == Mode::Strict ? "strict" : "experimental"; }

namespace {

std::string join_issues(const std::vector<std::string>& issues) {
    std::ostringstream os;
    os << "strict regime rejected:";
    for (const auto& s : issues) os << "\n  " << s;
    return os.str();
}

void fill_derived(Params& p) {
    p.omega = Rational(1) / p.Omega;
    p.rho = Rational(1) - Rational(9) * p.lambda;
    p.zeta = Rational(1, 20);
    p.nu = p.zeta / (Rational(1) - Rational(2) * p.zeta);
    p.theta = (Rational(5) - Rational(22) * p.nu) / Rational(6);
    p.eta = (Rational(1) + Rational(2) * p.nu) / p.theta;
    p.xi0 = Rational(7) * p.lambda - Rational(3, 2) * p.omega;
    p.xi1 = p.xi0 - Rational(13, 5) * p.omega;
    p.xi2 = p.xi1 - Rational(2) * p.lambda - Rational(17, 5) * p.omega;
}

}  // namespace

StrictViolation::StrictViolation(std::vector<std::string> issues_)
    : std::runtime_error(join_issues(issues_)), issues(std::move(issues_)) {}

Params make_strict_params(long long n) {
    std::vector<std::string> issues;
    if (n <= 2000) issues.push_back("n must exceed 2000 (got " + std::to_string(n) + ")");
    if (n % 2 == 0) issues.push_back("n must be odd (got " + std::to_string(n) + ")");
    if (!issues.empty()) throw StrictViolation(std::move(issues));

    Params p;
    p.mode = Mode::Strict;
    p.n = n;
    p.lambda = Rational(80, n);
    p.Omega = Rational(n, 4);
    p.p0 = 39;
    p.p1 = 65;
    fill_derived(p);
    return p;
}

Params make_strict_params(const Rational& lambda, const Rational& Omega) {
    std::vector<std::string> issues;
    if (lambda <= 0) issues.push_back("lambda must be positive");
    if (Omega <= 0) issues.push_back("Omega must be positive");
    if (lambda > Rational(1, 24))
        issues.push_back("lambda <= 1/24 fails (lambda = " + rational_str(lambda) + ")");
    if (lambda * Omega < 20)
        issues.push_back("lambda*Omega >= 20 fails (lambda*Omega = " + rational_str(lambda * Omega) + ")");
    if (!issues.empty()) throw StrictViolation(std::move(issues));

    Params p;
    p.mode = Mode::Strict;
    p.n = 0;
    p.lambda = lambda;
    p.Omega = Omega;
    p.p0 = 39;
    p.p1 = 65;
    fill_derived(p);
    return p;
}

Params make_experimental_params(long long n, const Rational& lambda, const Rational& Omega,
                                long long p0, long long p1) {
    std::vector<std::string> issues;
    if (n < 1) issues.push_back("exponent n must be >= 1");
    if (lambda <= 0) issues.push_back("lambda must be positive");
    if (Omega <= 0) issues.push_back("Omega must be positive");
    if (p0 < 1) issues.push_back("p0 must be >= 1");
    if (p1 < 2) issues.push_back("p1 must be >= 2");
    if (!issues.empty()) throw StrictViolation(std::move(issues));

    Params p;
    p.mode = Mode::Experimental;
    p.n = n;
    p.lambda = lambda;
    p.Omega = Omega;
    p.p0 = p0;
    p.p1 = p1;
    fill_derived(p);
    return p;
}

}  // namespace scc
