#ifndef SCC_BURNSIDE_HPP
#define SCC_BURNSIDE_HPP

#include "scc/length.hpp"
#include "scc/presentation.hpp"
#include "scc/rational.hpp"
#include "scc/word.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace scc {

// A candidate next-rank relator root: cyclically reduced and not a proper
// power. The canonical form is the length-lex least among all cyclic shifts
// of the word and of its inverse, so classes-up-to-inversion compare by ==.
struct SimplePeriod {
    Word word;
    Word canonical;
};

Word simple_period_canonical(const Word& w);
SimplePeriod make_simple_period(const Word& w);

// All canonical class representatives of length <= max_len, length-lex order.
std::vector<SimplePeriod> enumerate_simple_periods(const Alphabet& a, std::size_t max_len);

// Proof that `subject` is suspended: subject's periodic line carries a
// witness-periodic factor of at least the threshold length (p1 periods at
// level 0, 4 periods at level >= 1). The witness is stored as realized — it
// may be the inverse of its class representative. For level >= 1, parent
// indexes the certificate showing the witness's class suspended one level
// down.
struct SuspensionCertificate {
    Word subject;
    int level = 0;
    Word witness;
    std::size_t offset = 0;  // start of the factor on subject's line
    std::size_t length = 0;
    long long threshold = 0;
    int parent = -1;
};

// Level-0 check. Complete: any witness class longer than
// ceil(|A| / (p1 - 1)) cannot reach its threshold, because a common factor of
// distinct primitive lines is shorter than |A| + |B| (Fine-Wilf), so the
// bounded scan is exhaustive. A witness conjugate to A^-1 is permitted by the
// definition but provably never fires over a free group; that is asserted,
// not assumed.
std::optional<SuspensionCertificate> check_suspended_level0(const Word& A, const Alphabet& a,
                                                            const Params& params);

// Level >= 1 check against the certified level-(m-1) classes; the same
// Fine-Wilf argument caps useful witnesses at ceil(|A| / 3). The caller wires
// parent indices.
std::optional<SuspensionCertificate> check_suspended_level(const Word& A, int level,
                                                           const std::vector<SimplePeriod>& prior,
                                                           const Params& params);

// Elementary periods at rank 1 over the bounded universe, with one
// certificate per (subject, level) pair encountered, parent-linked so every
// exclusion replays down to a level-0 certificate.
struct ESet {
    int rank = 1;
    std::size_t max_len = 0;
    Params params;
    std::vector<SimplePeriod> members;
    std::vector<SuspensionCertificate> excluded;
};

ESet build_E1(const Alphabet& a, std::size_t max_len, const Params& params);

// Re-verify one certificate from raw words: subject/witness well-formed and
// non-conjugate, threshold correct for the level, the claimed factor really
// witness-periodic, and the parent (when required) certifies the witness's
// class at the level below. Absent when sound.
std::optional<std::string> replay_certificate(const SuspensionCertificate& c,
                                              const std::vector<SuspensionCertificate>& all,
                                              const Params& params);

std::string certificates_to_json(const std::vector<SuspensionCertificate>& certs,
                                 const Alphabet& a);
std::vector<SuspensionCertificate> certificates_from_json(const std::string& text,
                                                          const Alphabet& a);

// min over 1 <= m <= M of |(A^m) as a cyclic word|_alpha / m: an upper bound
// for the true stable size (an infimum over all m), so an ESTIMATE, plus the
// derived truncation decrement ceil(1.2 / estimate) + 1.
struct StableSizeEstimate {
    Rational estimate;
    long long arg_m = 1;
    Integer h;
};

StableSizeEstimate stable_size_estimate(const Word& A, const GradedPresentation& p, int alpha,
                                        long long M);

// Exact check of the period-measure bounds for P = A^t against a rank-1 root
// A: t/(n+t) < t/n < t/(n-t) + omega, and for t >= 200 also
// 0.89 t/n < t/n < 1.12 t/n. Throws std::out_of_range unless 1 <= t < n.
struct MuBoundsReport {
    Rational mu;     // t/n
    Rational lower;  // t/(n+t)
    Rational upper;  // t/(n-t) + omega
    bool basic_ok = false;
    Rational factor_low;   // (89/100) mu, when t >= 200
    Rational factor_high;  // (112/100) mu, when t >= 200
    bool factor_ok = true;
    bool ok = false;
};

MuBoundsReport mu_period_bounds_check(const Word& A, long long t, const GradedPresentation& p);

}  // namespace scc

#endif
