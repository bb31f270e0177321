#ifndef SCC_DEHN_HPP
#define SCC_DEHN_HPP

#include "scc/length.hpp"
#include "scc/presentation.hpp"
#include "scc/word.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace scc {

// One switch: in the current word U P V, the span [begin, end) holds P, a
// factor of a relator line whose rotation splits as P T; the word becomes
// free_reduce(U T^-1 V). Whole-relator deletions are the T = empty case.
struct ReductionStep {
    std::size_t begin = 0;
    std::size_t end = 0;
    Word removed;       // P, literally the letters cut from the current word
    Word replacement;   // T^-1
    int relator = 0;
    bool inverted = false;
    std::size_t line_offset = 0;  // where P sits on its line
};

struct ReductionTrace {
    Word input;
    std::vector<ReductionStep> steps;
    Word output;
    // False only when a fragment still violates rho but replacing it would
    // not shorten the word (needs rho < 1/2, impossible in strict mode).
    bool complete = true;
};

// Shorten x by relator switches until no rank-1 fragment has mu > rho.
// Chunk rule first: any line factor spanning a whole relator loses one
// relator-length block outright. Otherwise the fragment with the largest mu
// (ties: earliest, lowest line) is switched against its complementary piece.
// Every step strictly shortens, so this terminates.
ReductionTrace dehn_reduce(const Word& x, const GradedPresentation& p);

// Re-run a trace from its input, checking every step: the removed letters
// must match the span, removed + replacement^-1 must tile one full relator
// rotation on the claimed line, and each step must shorten. Returns an error
// description, or absent when the trace is sound and lands on its output.
std::optional<std::string> replay_trace(const ReductionTrace& t, const GradedPresentation& p);

struct WordProblemAnswer {
    bool trivial = false;
    // A trivial answer is a proof in any mode (the trace is one). A
    // nontrivial answer is proof only under the strict regime's small
    // cancellation hypotheses; otherwise it is a heuristic.
    bool exact = false;
    ReductionTrace trace;
};

// Is x = 1 in the rank-1 quotient? x is freely reduced internally first.
WordProblemAnswer word_problem_rank1(const Word& x, const GradedPresentation& p);

// A piece word usable as a rank-1 bridge: a factor of either line of one
// relator class, or the empty word (relator = -1).
struct BridgePiece {
    int relator = -1;
    bool inverted = false;
    std::size_t offset = 0;
    std::size_t length = 0;
    Word word;
};

enum class CloseStatus {
    Found,           // witness pair verified
    NotClose,        // full piece space scanned, no witness exists
    BudgetExceeded,  // scan truncated by the budget before completion
};

struct CloseWitness {
    BridgePiece u;
    BridgePiece v;
};

struct CloseResult {
    CloseStatus status = CloseStatus::NotClose;
    std::optional<CloseWitness> witness;
};

// Search for pieces u, v with x = u y v in the rank-1 quotient, trying piece
// pairs by total length; every candidate is verified through
// word_problem_rank1, never assumed. Budget caps the piece lengths scanned;
// NotClose is reported only when the budget covers every relator length.
CloseResult close_in_rank1(const Word& x, const Word& y, const GradedPresentation& p,
                           std::size_t budget);

}  // namespace scc

#endif
