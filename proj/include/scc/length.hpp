#ifndef SCC_LENGTH_HPP
#define SCC_LENGTH_HPP

#include "scc/presentation.hpp"
#include "scc/rational.hpp"
#include "scc/word.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace scc {

// A maximal factor of one relator line inside an indexed word: the raw
// material fragments and reduction steps are cut from.
struct LineSpan {
    std::size_t line = 0;  // index into LineIndex::lines()
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t line_offset = 0;  // least period offset realizing the span

    std::size_t size() const { return end - begin; }
};

// All maximal line factors: begin cannot move left nor end right on the same
// line. The same span on two different lines yields two entries. Sorted by
// (begin, end, line).
std::vector<LineSpan> maximal_line_spans(const LineIndex& idx);

// A fragment of rank <= 1 inside a host word. Rank 1: the span's letters
// literally equal a factor of one relator line (closeness in rank 0 is
// equality), measured by mu = span length / relator length. Rank 0: one
// letter, mu unused.
struct Fragment {
    Word host;
    std::size_t begin = 0;
    std::size_t end = 0;
    int rank = 1;
    int relator = -1;
    bool inverted = false;           // which line of the root
    std::size_t line_offset = 0;     // period offset of the span start
    Rational mu;

    std::size_t size() const { return end - begin; }
    // The factor of root^inf the span letters equal.
    PeriodicWord base(const GradedPresentation& p) const;
};

// All maximal rank-1 fragments of x with mu >= min_mu.
std::vector<Fragment> find_fragments_rank1(const Word& x, const GradedPresentation& p,
                                           const Rational& min_mu);

// True iff f and g live on the same relator line with consistent alignment:
// offsets differ by the span-start difference and the combined span is itself
// a factor of that line. Throws std::invalid_argument("HOST_MISMATCH") when
// the hosts differ.
bool fragment_compatible_rank1(const Fragment& f, const Fragment& g,
                               const GradedPresentation& p);

// Absent iff every rank-1 fragment of x has mu <= rho; otherwise the maximal
// fragment with the largest mu (ties: least begin, least line).
std::optional<Fragment> is_reduced_rank1(const Word& x, const GradedPresentation& p);

// One part of a fragmentation: a span of the host assigned a rank. Rank-0
// parts are single letters; rank-1 parts carry the line they factor through.
struct FragPart {
    std::size_t begin = 0;
    std::size_t end = 0;
    int rank = 0;
    int relator = -1;
    bool inverted = false;
    std::size_t line_offset = 0;

    std::size_t size() const { return end - begin; }
};

// A partition of host into parts of ranks <= alpha, weighted
// sum(zeta^(alpha - rank)) over parts.
struct Fragmentation {
    Word host;
    int alpha = 0;
    std::vector<FragPart> parts;
    Rational weight;
};

// Structural audit: contiguous nonempty spans partitioning host, rank-0 parts
// single letters, rank-1 parts on their claimed lines, weight consistent.
// Returns an error description, or absent when valid.
std::optional<std::string> validate_fragmentation(const Fragmentation& f,
                                                  const GradedPresentation& p);

struct LengthResult {
    Rational value;
    Fragmentation witness;
};

// Minimum fragmentation weight at grade alpha in {0, 1} plus a witness
// attaining it. The witness is revalidated on every call; alpha = 0 is the
// plain letter count.
LengthResult length_alpha(const Word& x, const GradedPresentation& p, int alpha);

// Value-only fast path: O(|x|) after line indexing.
Rational length_alpha_value(const Word& x, const GradedPresentation& p, int alpha);

// Minimum of length_alpha over all cyclic shifts of x (x cyclically reduced);
// the minimizing shift is reported through arg_shift when given.
Rational length_alpha_cyclic(const Word& x, const GradedPresentation& p, int alpha,
                             std::size_t* arg_shift = nullptr);

}  // namespace scc

#endif
