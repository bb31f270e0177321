#ifndef SCC_PRESENTATION_HPP
#define SCC_PRESENTATION_HPP

#include "scc/params.hpp"
#include "scc/rational.hpp"
#include "scc/word.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace scc {

// One conjugacy class of relators: every cyclic shift of root^exponent and of
// its inverse. Rank grades the recursion; only rank 1 is checked exactly.
struct RelatorClass {
    int rank = 1;
    Word root;
    long long exponent = 1;

    std::size_t relator_length() const { return root.size() * static_cast<std::size_t>(exponent); }
};

// A presentation is deliberately easy to construct even when broken: the
// S-condition checkers below exist to diagnose broken ones, so only alphabet
// membership and basic shape are constructor errors.
class GradedPresentation {
public:
    GradedPresentation(Alphabet alphabet, Params params, std::vector<RelatorClass> classes);

    const Alphabet& alphabet() const { return alphabet_; }
    const Params& params() const { return params_; }
    const std::vector<RelatorClass>& classes() const { return classes_; }
    std::vector<int> rank1() const;  // indices of rank-1 classes
    int max_rank() const;

private:
    Alphabet alphabet_;
    Params params_;
    std::vector<RelatorClass> classes_;
};

// A bi-infinite periodic relator line at rank 1: the root's own line or the
// inverse root's. Usable only once the root is cyclically reduced.
struct Line {
    int relator = 0;
    bool inverted = false;
    Word period;
};

std::vector<Line> rank1_lines(const GradedPresentation& p);

// Longest-extension tables of a fixed word against every rank-1 line; O(1)
// "is x[i..j) a factor of line l" queries backed by one backward sweep.
class LineIndex {
public:
    LineIndex(const GradedPresentation& p, const Word& x);

    const std::vector<Line>& lines() const { return lines_; }
    std::size_t word_size() const { return size_; }

    // Longest factor of line l starting at position i of x.
    std::size_t ext(std::size_t l, std::size_t i) const { return ext_[l][i]; }
    // Longest factor of any line starting at i.
    std::size_t max_ext(std::size_t i) const { return max_ext_[i]; }
    bool span_on_line(std::size_t l, std::size_t begin, std::size_t end) const {
        return ext_[l][begin] >= end - begin;
    }
    bool span_on_some_line(std::size_t begin, std::size_t end) const {
        return max_ext_[begin] >= end - begin;
    }
    // Least line offset realizing x[begin..end) as a factor of line l.
    std::optional<std::size_t> offset_on_line(std::size_t l, std::size_t begin, std::size_t end) const;

private:
    std::vector<Line> lines_;
    std::size_t size_ = 0;
    // match_[l][i * period + o]: match length of x[i..] against line l from
    // line offset o.
    std::vector<std::vector<std::size_t>> match_;
    std::vector<std::vector<std::size_t>> ext_;
    std::vector<std::size_t> max_ext_;
};

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::string title;
    std::vector<CheckItem> items;
    bool all_pass() const;
};

// Normalization: rank-1 roots cyclically reduced, nonempty, primitive, and
// pairwise non-conjugate even after inversion. Rank >= 2 classes are recorded
// as unverified assumptions.
CheckReport check_normalized(const GradedPresentation& p);
// S0: every rank-1 root cyclically reduced.
CheckReport check_S0(const GradedPresentation& p);
// S1: relator length n*|root| >= Omega for every rank-1 class.
CheckReport check_S1(const GradedPresentation& p);
// S2 at rank 1, periodic-line form: for every ordered pair of distinct
// relator lines, the longest common factor is < lambda * n * |root of the
// first|. Exact at this rank because rank-0 closeness is equality.
CheckReport check_S2(const GradedPresentation& p);
// S3: no rank-1 relator conjugate to its inverse. Since rotations of root^n
// are exactly rotations of root repeated, this reduces to the root itself.
CheckReport check_S3(const GradedPresentation& p);
// Normalization followed by S0-S3.
CheckReport check_all(const GradedPresentation& p);

// A canonical relator subword: factor of root^n starting inside the first
// period block. The empty piece is emitted once, only when min_mu <= 0.
struct Piece {
    int relator = -1;  // -1 marks the empty piece
    std::size_t offset = 0;
    std::size_t length = 0;
    Rational mu;  // length / (n * |root|)

    PeriodicWord occurrence(const GradedPresentation& p) const;
};

std::vector<Piece> enumerate_pieces(const GradedPresentation& p, const Rational& min_mu);

// "xi0", "xi1", "xi2", "rho" resolve to the regime's thresholds; anything
// else parses as an exact rational.
Rational resolve_threshold(const Params& params, const std::string& text);

GradedPresentation parse_presentation(std::istream& in);
GradedPresentation parse_presentation_file(const std::string& path);

}  // namespace scc

#endif
