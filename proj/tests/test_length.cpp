#include <doctest.h>

#include "scc/length.hpp"
#include "scc/params.hpp"
#include "scc/presentation.hpp"
#include "scc/rng.hpp"
#include "scc/word.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

namespace {

using namespace scc;

const Alphabet AB("ab");

Word W(const char* text) { return AB.parse(text); }

GradedPresentation strict_one() {
    return GradedPresentation(AB, make_strict_params(2003), {RelatorClass{1, W("ab"), 2003}});
}

GradedPresentation strict_two() {
    return GradedPresentation(AB, make_strict_params(2003),
                              {RelatorClass{1, W("ab"), 2003}, RelatorClass{1, W("aabAB"), 2003}});
}

// Literal window scan: is f a factor of root^inf or of (root^-1)^inf?
bool naive_on_line(const Word& f, const Word& root) {
    if (f.empty()) return true;
    for (const Word& per : {root, root.inverse()}) {
        const Word text = per.pow(f.size() / per.size() + 2);
        const auto& t = text.letters();
        const auto& x = f.letters();
        if (std::search(t.begin(), t.end(), x.begin(), x.end()) != t.end()) return true;
    }
    return false;
}

bool naive_on_some_line(const Word& f, const GradedPresentation& p) {
    for (int i : p.rank1())
        if (naive_on_line(f, p.classes()[static_cast<std::size_t>(i)].root)) return true;
    return false;
}

// Exhaustive oracle: every composition of w into contiguous blocks via a cut
// bitmask; single letters cost zeta, longer blocks cost 1 and must lie on a
// line. No dynamic programming, no line index.
Rational oracle_length1(const Word& w, const GradedPresentation& p) {
    const std::size_t n = w.size();
    if (n == 0) return Rational(0);
    const Rational zeta = p.params().zeta;
    Rational best;
    bool have = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
        Rational total(0);
        bool ok = true;
        std::size_t start = 0;
        for (std::size_t i = 1; i <= n && ok; ++i) {
            const bool cut = i == n || ((mask >> (i - 1)) & 1) != 0;
            if (!cut) continue;
            const std::size_t len = i - start;
            if (len == 1) {
                total += zeta;
            } else if (naive_on_some_line(w.subword(start, i), p)) {
                total += Rational(1);
            } else {
                ok = false;
            }
            start = i;
        }
        if (ok && (!have || total < best)) {
            best = total;
            have = true;
        }
    }
    REQUIRE(have);  // singles always work
    return best;
}

Word random_freely_reduced(Rng& rng, std::size_t len) {
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < len; ++i) {
        if (ls.empty()) {
            const int code = static_cast<int>(rng.below(4));
            ls.push_back(Letter(code / 2, (code & 1) != 0));
        } else {
            const int banned = ls.back().inverse().code();
            int code = static_cast<int>(rng.below(3));
            if (code >= banned) ++code;
            ls.push_back(Letter(code / 2, (code & 1) != 0));
        }
    }
    return Word(ls);
}

Word rotation(const Word& w, std::size_t k) {
    return w.subword(k, w.size()) * w.subword(0, k);
}

}  // namespace

TEST_SUITE("length") {
    TEST_CASE("hand values on the one-relator presentation") {
        const GradedPresentation p = strict_one();
        const Rational zeta = p.params().zeta;
        CHECK(length_alpha_value(W(""), p, 1) == Rational(0));
        CHECK(length_alpha_value(W("a"), p, 1) == zeta);
        CHECK(length_alpha_value(W("ab"), p, 1) == Rational(2) * zeta);
        // Eight letters at zeta = 1/20 beat one whole-line part at 1.
        CHECK(length_alpha_value(W("abababab"), p, 1) == make_rational(2, 5));
        CHECK(length_alpha_value(W("aabb"), p, 1) == make_rational(1, 5));
        // Twenty-two letters cost 11/10; a single line part wins at 1.
        CHECK(length_alpha_value(W("ab").pow(11), p, 1) == Rational(1));
        CHECK(length_alpha_value(W("abababab"), p, 0) == Rational(8));
    }

    TEST_CASE("value, witness, and the exhaustive oracle agree") {
        const GradedPresentation ps[] = {strict_one(), strict_two()};
        Rng rng(21);
        for (int i = 0; i < 200; ++i) {
            const Word w = random_freely_reduced(rng, 1 + rng.below(9));
            const GradedPresentation& p = ps[i % 2];
            const Rational fast = length_alpha_value(w, p, 1);
            const LengthResult full = length_alpha(w, p, 1);
            CHECK(fast == oracle_length1(w, p));
            CHECK(full.value == fast);
            CHECK(full.witness.host == w);
            CHECK(full.witness.alpha == 1);
            CHECK(full.witness.weight == fast);
            CHECK(!validate_fragmentation(full.witness, p).has_value());

            const LengthResult zero = length_alpha(w, p, 0);
            CHECK(zero.value == Rational(static_cast<long long>(w.size())));
            for (const FragPart& part : zero.witness.parts) CHECK(part.rank == 0);
        }
    }

    TEST_CASE("argument validation") {
        const GradedPresentation p = strict_one();
        CHECK_THROWS_AS(length_alpha_value(W("ab"), p, 2), std::invalid_argument);
        CHECK_THROWS_AS(length_alpha_value(W("ab"), p, -1), std::invalid_argument);
        CHECK_THROWS_AS(length_alpha_value(W("aA"), p, 1), BadWord);
        CHECK_THROWS_AS(length_alpha(W("aA"), p, 1), BadWord);
        CHECK_THROWS_AS(length_alpha_cyclic(W("abA"), p, 1), BadWord);
        CHECK_THROWS_AS(find_fragments_rank1(W("aA"), p, Rational(0)), BadWord);
    }

    TEST_CASE("subadditivity band under concatenation") {
        const GradedPresentation p = strict_two();
        Rng rng(22);
        for (int i = 0; i < 300; ++i) {
            const Word z = random_freely_reduced(rng, 2 + rng.below(14));
            const std::size_t k = 1 + rng.below(z.size() - 1);
            const Rational vz = length_alpha_value(z, p, 1);
            const Rational sum = length_alpha_value(z.subword(0, k), p, 1) +
                                 length_alpha_value(z.subword(k, z.size()), p, 1);
            CHECK(vz <= sum);
            CHECK(sum <= vz + Rational(1));
        }
    }

    TEST_CASE("graded length is bounded by the scaled letter count") {
        const GradedPresentation p = strict_two();
        const Rational zeta = p.params().zeta;
        Rng rng(23);
        for (int i = 0; i < 300; ++i) {
            const Word w = random_freely_reduced(rng, 1 + rng.below(15));
            const Rational v1 = length_alpha_value(w, p, 1);
            CHECK(v1 <= zeta * length_alpha_value(w, p, 0));
            CHECK(v1 >= zeta);
        }
    }

    TEST_CASE("cyclic length is the minimum over rotations") {
        const GradedPresentation p = strict_one();
        Rng rng(24);
        for (int i = 0; i < 100; ++i) {
            Word w;
            do {
                w = random_freely_reduced(rng, 1 + rng.below(10));
            } while (!is_cyclically_reduced(w));
            std::size_t shift = 0;
            const Rational got = length_alpha_cyclic(w, p, 1, &shift);
            Rational best = length_alpha_value(w, p, 1);
            for (std::size_t s = 1; s < w.size(); ++s)
                best = std::min(best, length_alpha_value(rotation(w, s), p, 1));
            CHECK(got == best);
            REQUIRE(shift < std::max<std::size_t>(w.size(), 1));
            CHECK(length_alpha_value(rotation(w, shift), p, 1) == got);
        }
        CHECK(length_alpha_cyclic(W(""), p, 1) == Rational(0));
        CHECK(length_alpha_cyclic(W("ab").pow(11), p, 1) == Rational(1));
    }

    TEST_CASE("maximal line spans match a direct extension scan") {
        const GradedPresentation p = strict_two();
        Rng rng(25);
        for (int i = 0; i < 120; ++i) {
            const Word w = random_freely_reduced(rng, 1 + rng.below(10));
            const LineIndex idx(p, w);
            const std::vector<LineSpan> got = maximal_line_spans(idx);

            const std::vector<Line> lines = rank1_lines(p);
            std::set<std::tuple<std::size_t, std::size_t, std::size_t>> naive;
            const auto on = [&](std::size_t l, std::size_t b, std::size_t e) {
                Word f = w.subword(b, e);
                if (f.empty()) return true;
                const Word& per = lines[l].period;
                const Word text = per.pow(f.size() / per.size() + 2);
                const auto& t = text.letters();
                return std::search(t.begin(), t.end(), f.letters().begin(),
                                   f.letters().end()) != t.end();
            };
            for (std::size_t l = 0; l < lines.size(); ++l)
                for (std::size_t b = 0; b < w.size(); ++b)
                    for (std::size_t e = b + 1; e <= w.size(); ++e)
                        if (on(l, b, e) && (b == 0 || !on(l, b - 1, e)) &&
                            (e == w.size() || !on(l, b, e + 1)))
                            naive.insert({b, e, l});

            std::set<std::tuple<std::size_t, std::size_t, std::size_t>> have;
            for (const LineSpan& s : got) {
                have.insert({s.begin, s.end, s.line});
                // The reported least line offset really realizes the span.
                for (std::size_t j = s.begin; j < s.end; ++j) {
                    const Word& per = lines[s.line].period;
                    CHECK(w[j] == per[(s.line_offset + (j - s.begin)) % per.size()]);
                }
            }
            CHECK(have == naive);
            CHECK(std::is_sorted(got.begin(), got.end(), [](const LineSpan& a, const LineSpan& b) {
                return std::tie(a.begin, a.end, a.line) < std::tie(b.begin, b.end, b.line);
            }));
        }
    }

    TEST_CASE("fragments are maximal spans with exact mu") {
        const GradedPresentation p = strict_two();
        const Word w = W("abbaabA");
        const std::vector<Fragment> frags = find_fragments_rank1(w, p, Rational(0));
        const LineIndex idx(p, w);
        const std::vector<LineSpan> spans = maximal_line_spans(idx);
        REQUIRE(frags.size() == spans.size());
        for (std::size_t i = 0; i < frags.size(); ++i) {
            const Fragment& f = frags[i];
            CHECK(f.host == w);
            CHECK(f.rank == 1);
            CHECK(f.begin == spans[i].begin);
            CHECK(f.end == spans[i].end);
            const auto& cls = p.classes()[static_cast<std::size_t>(f.relator)];
            CHECK(f.mu == make_rational(static_cast<long long>(f.size()),
                                        static_cast<long long>(cls.relator_length())));
            const Word base = f.base(p).materialize();
            CHECK(base == w.subword(f.begin, f.end));
        }
        for (const Fragment& f : find_fragments_rank1(w, p, make_rational(1, 2)))
            CHECK(f.mu >= make_rational(1, 2));
    }

    TEST_CASE("fragment compatibility needs one line and one alignment") {
        const GradedPresentation p = strict_one();
        const Word host = W("ababab");
        const auto frag = [&](std::size_t b, std::size_t e, std::size_t off) {
            Fragment f;
            f.host = host;
            f.begin = b;
            f.end = e;
            f.rank = 1;
            f.relator = 0;
            f.inverted = false;
            f.line_offset = off;
            f.mu = make_rational(static_cast<long long>(e - b), 4006);
            return f;
        };
        CHECK(fragment_compatible_rank1(frag(0, 2, 0), frag(4, 6, 0), p));
        CHECK(fragment_compatible_rank1(frag(0, 2, 0), frag(3, 5, 1), p));
        CHECK(!fragment_compatible_rank1(frag(0, 2, 0), frag(3, 5, 0), p));

        Fragment other = frag(0, 2, 0);
        other.host = W("ba");
        other.end = 2;
        CHECK_THROWS_AS(fragment_compatible_rank1(frag(0, 2, 0), other, p),
                        std::invalid_argument);
    }

    TEST_CASE("reducedness boundary sits exactly at mu = rho") {
        const GradedPresentation p = strict_one();
        // rho = 1283/2003; relator length 4006; the line factor (ab)^1283 has
        // mu = 2566/4006 = rho exactly: not a violation.
        const Word at = W("ab").pow(1283);
        CHECK(!is_reduced_rank1(at, p).has_value());
        const Word over = W("ab").pow(1283) * W("a");
        const auto f = is_reduced_rank1(over, p);
        REQUIRE(f.has_value());
        CHECK(f->begin == 0);
        CHECK(f->end == 2567);
        CHECK(f->mu == make_rational(2567, 4006));
        CHECK(!is_reduced_rank1(W("ab"), p).has_value());
    }

    TEST_CASE("fragmentation audit rejects malformed witnesses") {
        const GradedPresentation p = strict_one();
        const Word host = W("abab");
        Fragmentation good;
        good.host = host;
        good.alpha = 1;
        good.parts.push_back(FragPart{0, 4, 1, 0, false, 0});
        good.weight = Rational(1);
        CHECK(!validate_fragmentation(good, p).has_value());

        Fragmentation bad = good;
        bad.weight = Rational(2);
        CHECK(validate_fragmentation(bad, p).has_value());

        bad = good;
        bad.parts[0].end = 3;
        CHECK(validate_fragmentation(bad, p).has_value());  // not a partition

        bad = good;
        bad.parts = {FragPart{0, 2, 0, -1, false, 0}, FragPart{2, 4, 0, -1, false, 0}};
        bad.weight = Rational(2) * p.params().zeta;
        CHECK(validate_fragmentation(bad, p).has_value());  // rank-0 parts too long

        bad = good;
        bad.alpha = 0;
        CHECK(validate_fragmentation(bad, p).has_value());  // rank above alpha

        Fragmentation off_line;
        off_line.host = W("aabb");
        off_line.alpha = 1;
        off_line.parts.push_back(FragPart{0, 4, 1, 0, false, 0});
        off_line.weight = Rational(1);
        CHECK(validate_fragmentation(off_line, p).has_value());

        Fragmentation empty_parts;
        empty_parts.host = host;
        empty_parts.alpha = 1;
        empty_parts.weight = Rational(0);
        CHECK(validate_fragmentation(empty_parts, p).has_value());
    }
}
