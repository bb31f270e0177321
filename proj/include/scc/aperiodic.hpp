#ifndef SCC_APERIODIC_HPP
#define SCC_APERIODIC_HPP

#include "scc/presentation.hpp"
#include "scc/word.hpp"

#include <cstddef>
#include <vector>

namespace scc {

// Words trivial in the graded quotient contain a relator power C^POWER_BOUND
// as a factor; a word all of whose factors stay below this power is therefore
// nontrivial. Cube-free streams stay at power 2.
inline constexpr long long POWER_BOUND = 480;

// Length-len prefix of the Thue-Morse sequence over generators a, b
// (bit-parity form: letter i is b exactly when popcount(i) is odd).
Word thue_morse_prefix(std::size_t len);

// Nontriviality evidence for one stream prefix against its predecessor: the
// reduced quotient previous^-1 * current — a literal stream factor, because
// the stream uses positive letters only — and the largest power of any
// primitive word occurring in it.
struct SeparationCertificate {
    Word factor;
    std::size_t power = 0;
};

struct DistinctElement {
    Word word;
    SeparationCertificate certificate;
};

// count elements of the quotient group, pairwise distinct: the stream
// prefixes of lengths 1..count. For u a proper prefix of v, u^-1 v reduces to
// a cube-free stream factor, so its maximal power 2 stays far below
// POWER_BOUND and u, v differ in the quotient. The first element's
// certificate separates it from the empty prefix, i.e. from the identity.
// Requires strict parameters and at least two generators.
std::vector<DistinctElement> distinct_elements(std::size_t count, const GradedPresentation& p);

}  // namespace scc

#endif
