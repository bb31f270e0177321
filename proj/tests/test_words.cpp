#include <doctest.h>

#include "scc/rng.hpp"
#include "scc/word.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace {

using namespace scc;

const Alphabet AB("ab");

Word W(const char* text) { return AB.parse(text); }

// Stack oracle for free reduction, independent of the library's scan.
Word oracle_free_reduce(const Word& w) {
    std::vector<Letter> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!out.empty() && out.back() == w[i].inverse())
            out.pop_back();
        else
            out.push_back(w[i]);
    }
    return Word(out);
}

Word rotation(const Word& w, std::size_t k) {
    return w.subword(k, w.size()) * w.subword(0, k);
}

// Divisor oracle: w = u^(n/d) for some proper divisor block length d?
bool oracle_primitive(const Word& w) {
    for (std::size_t d = 1; d < w.size(); ++d) {
        if (w.size() % d != 0) continue;
        if (w.subword(0, d).pow(w.size() / d) == w) return false;
    }
    return true;
}

bool oracle_cyclic_equal(const Word& u, const Word& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t k = 0; k < std::max<std::size_t>(u.size(), 1); ++k)
        if (rotation(u, k) == v) return true;
    return u == v;
}

std::optional<std::size_t> oracle_occurs(const Word& x, const Word& a) {
    for (std::size_t o = 0; o < a.size(); ++o) {
        bool ok = true;
        for (std::size_t i = 0; i < x.size() && ok; ++i) ok = x[i] == a[(o + i) % a.size()];
        if (ok) return o;
    }
    return std::nullopt;
}

// Largest k with u^k a factor of w, over every primitive u: direct scan of
// every factor, exponent by smallest divisor period.
std::size_t oracle_max_power(const Word& w) {
    std::size_t best = 0;
    for (std::size_t b = 0; b < w.size(); ++b) {
        for (std::size_t e = b + 1; e <= w.size(); ++e) {
            const Word f = w.subword(b, e);
            std::size_t p = f.size();
            for (std::size_t d = 1; d < f.size(); ++d) {
                if (f.size() % d != 0) continue;
                if (f.subword(0, d).pow(f.size() / d) == f) {
                    p = d;
                    break;
                }
            }
            best = std::max(best, f.size() / p);
        }
    }
    return best;
}

std::size_t oracle_lcpf(const Word& a, const Word& b) {
    std::size_t best = 0;
    const std::size_t cap = a.size() + b.size();
    for (std::size_t len = 1; len <= cap; ++len) {
        bool found = false;
        for (std::size_t o1 = 0; o1 < a.size() && !found; ++o1) {
            for (std::size_t o2 = 0; o2 < b.size() && !found; ++o2) {
                bool eq = true;
                for (std::size_t i = 0; i < len && eq; ++i)
                    eq = a[(o1 + i) % a.size()] == b[(o2 + i) % b.size()];
                found = eq;
            }
        }
        if (found)
            best = len;
        else
            break;
    }
    return best;
}

Word random_raw_word(Rng& rng, int gens, std::size_t len) {
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < len; ++i) {
        const int code = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * gens)));
        ls.push_back(Letter(code / 2, (code & 1) != 0));
    }
    return Word(ls);
}

Word random_freely_reduced(Rng& rng, int gens, std::size_t len) {
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < len; ++i) {
        if (ls.empty()) {
            const int code = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * gens)));
            ls.push_back(Letter(code / 2, (code & 1) != 0));
        } else {
            const int banned = ls.back().inverse().code();
            int code = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * gens - 1)));
            if (code >= banned) ++code;
            ls.push_back(Letter(code / 2, (code & 1) != 0));
        }
    }
    return Word(ls);
}

Word random_cyclically_reduced(Rng& rng, int gens, std::size_t len) {
    for (;;) {
        Word w = random_freely_reduced(rng, gens, len);
        if (is_cyclically_reduced(w)) return w;
    }
}

// Every freely reduced word over two generators with the given length,
// built by an odometer over packed letter codes.
std::vector<Word> all_reduced_words(std::size_t len, bool cyclically) {
    std::vector<Word> out;
    std::vector<int> codes(len, 0);
    for (;;) {
        Word w;
        for (int c : codes) w.push_back(Letter(c / 2, (c & 1) != 0));
        if (is_freely_reduced(w) && (!cyclically || is_cyclically_reduced(w)))
            out.push_back(w);
        std::size_t i = len;
        while (i > 0 && codes[i - 1] == 3) codes[--i] = 0;
        if (i == 0) break;
        ++codes[i - 1];
    }
    return out;
}

}  // namespace

TEST_SUITE("words") {
    TEST_CASE("letter packing orders a < a^-1 < b < b^-1") {
        const Letter a(0, false), A(0, true), b(1, false), B(1, true);
        CHECK(a.code() == 0);
        CHECK(A.code() == 1);
        CHECK(b.code() == 2);
        CHECK(B.code() == 3);
        CHECK(a.gen() == 0);
        CHECK(B.gen() == 1);
        CHECK(!a.inverted());
        CHECK(A.inverted());
        CHECK(a.inverse() == A);
        CHECK(A.inverse() == a);
        CHECK(B.inverse().inverse() == B);
        CHECK(a < A);
        CHECK(A < b);
        CHECK(b < B);
    }

    TEST_CASE("alphabet parses and prints round-trip") {
        CHECK(AB.size() == 2);
        CHECK(AB.symbol(0) == 'a');
        CHECK(AB.symbol(1) == 'b');
        CHECK(AB.parse("").empty());
        CHECK(AB.print(Word{}) == "");
        const Word w = AB.parse("aAbB");
        REQUIRE(w.size() == 4);
        CHECK(w[0] == Letter(0, false));
        CHECK(w[1] == Letter(0, true));
        CHECK(w[2] == Letter(1, false));
        CHECK(w[3] == Letter(1, true));
        CHECK(AB.print(w) == "aAbB");
        CHECK(AB.letter_of('b') == Letter(1, false));
        CHECK(AB.letter_of('B') == Letter(1, true));
        CHECK(!AB.letter_of('c').has_value());
        CHECK_THROWS_AS(AB.parse("abc"), BadWord);
        CHECK_THROWS_AS(Alphabet(""), BadWord);
        CHECK_THROWS_AS(Alphabet("aa"), BadWord);
        CHECK_THROWS_AS(Alphabet("aB"), BadWord);
        const Alphabet three = Alphabet::standard(3);
        CHECK(three.size() == 3);
        CHECK(three.symbol(2) == 'c');
        CHECK_THROWS_AS(Alphabet::standard(0), BadWord);
        CHECK_THROWS_AS(Alphabet::standard(27), BadWord);
    }

    TEST_CASE("word order is length-lexicographic") {
        CHECK(W("") < W("a"));
        CHECK(W("b") < W("aa"));
        CHECK(W("B") < W("aa"));
        CHECK(W("aA") < W("ab"));
        CHECK(W("ab") < W("ba"));
        CHECK(W("ab") == W("ab"));
        CHECK((W("ab") <=> W("ab")) == std::strong_ordering::equal);
    }

    TEST_CASE("concatenation is plain, no implicit reduction") {
        CHECK((W("ab") * W("ba")) == W("abba"));
        CHECK((W("a") * W("A")).size() == 2);
        CHECK((W("") * W("ab")) == W("ab"));
        CHECK(W("abab").subword(1, 3) == W("ba"));
        CHECK(W("ab").subword(2, 2).empty());
        CHECK_THROWS_AS(W("ab").subword(1, 3), BadWord);
        CHECK(W("ab").pow(0).empty());
        CHECK(W("ab").pow(3) == W("ababab"));
        CHECK(W("ab").inverse() == W("BA"));
        CHECK(W("aBa").inverse() == W("AbA"));
        Rng rng(11);
        for (int i = 0; i < 50; ++i) {
            const Word u = random_raw_word(rng, 2, rng.below(8));
            const Word v = random_raw_word(rng, 2, rng.below(8));
            CHECK((u * v).inverse() == v.inverse() * u.inverse());
            CHECK(u.inverse().inverse() == u);
        }
    }

    TEST_CASE("free reduction matches the stack oracle") {
        CHECK(free_reduce(W("abBA")).empty());
        CHECK(free_reduce(W("aabBAa")) == W("aa"));
        CHECK(is_freely_reduced(W("")));
        CHECK(is_freely_reduced(W("ab")));
        CHECK(!is_freely_reduced(W("aA")));
        Rng rng(12);
        for (int i = 0; i < 500; ++i) {
            const Word w = random_raw_word(rng, 2 + static_cast<int>(i % 2), rng.below(31));
            const Word r = free_reduce(w);
            CHECK(r == oracle_free_reduce(w));
            CHECK(is_freely_reduced(r));
            CHECK(free_reduce(r) == r);
            CHECK((w.size() - r.size()) % 2 == 0);
            CHECK(free_reduce(w * w.inverse()).empty());
        }
    }

    TEST_CASE("cyclic reduction peels a conjugator") {
        const CyclicReduction cr = cyclic_reduce(W("abA"));
        CHECK(cr.core == W("b"));
        CHECK(cr.conjugator == W("a"));
        CHECK(cyclic_reduce(W("")).core.empty());
        Rng rng(13);
        for (int i = 0; i < 300; ++i) {
            const Word w = free_reduce(random_raw_word(rng, 2, rng.below(21)));
            const CyclicReduction r = cyclic_reduce(w);
            CHECK(is_cyclically_reduced(r.core));
            CHECK(free_reduce(r.conjugator * r.core * r.conjugator.inverse()) == w);
            const bool oracle =
                w.size() < 2 || w[0] != w[w.size() - 1].inverse();
            CHECK(is_cyclically_reduced(w) == oracle);
        }
    }

    TEST_CASE("primitivity matches the divisor oracle, exhaustively to length 6") {
        CHECK_THROWS_AS(is_primitive(W("")), BadWord);
        CHECK_THROWS_AS(is_primitive(W("abA")), BadWord);
        CHECK(is_primitive(W("a")));
        CHECK(is_primitive(W("aab")));
        CHECK(!is_primitive(W("abab")));
        CHECK(!is_primitive(W("aaa")));
        for (std::size_t len = 1; len <= 6; ++len)
            for (const Word& w : all_reduced_words(len, true))
                CHECK(is_primitive(w) == oracle_primitive(w));
    }

    TEST_CASE("cyclic equality matches the rotation oracle") {
        CHECK(cyclic_equal(W("aab"), W("aba")));
        CHECK(cyclic_equal(W(""), W("")));
        CHECK(!cyclic_equal(W("aab"), W("aab").inverse()));
        CHECK_THROWS_AS(cyclic_equal(W("abA"), W("b")), BadWord);
        std::vector<Word> pool;
        for (std::size_t len = 0; len <= 4; ++len)
            for (const Word& w : all_reduced_words(len, true)) pool.push_back(w);
        for (const Word& u : pool)
            for (const Word& v : pool) CHECK(cyclic_equal(u, v) == oracle_cyclic_equal(u, v));
    }

    TEST_CASE("a cyclically reduced word is never a rotation of its inverse") {
        // Free groups are bi-orderable, so only the identity is conjugate to
        // its inverse; at the rotation level this is checkable outright.
        for (std::size_t len = 1; len <= 6; ++len)
            for (const Word& w : all_reduced_words(len, true))
                CHECK(!oracle_cyclic_equal(w, w.inverse()));
    }

    TEST_CASE("occurrence on a periodic line matches the modular oracle") {
        CHECK(occurs_in_period_power(W("abab"), W("ab")) == std::size_t{0});
        CHECK(occurs_in_period_power(W("baba"), W("ab")) == std::size_t{1});
        CHECK(!occurs_in_period_power(W("aa"), W("ab")).has_value());
        CHECK(occurs_in_period_power(W(""), W("ab")) == std::size_t{0});
        CHECK_THROWS_AS(occurs_in_period_power(W("a"), W("")), BadWord);
        CHECK_THROWS_AS(occurs_in_period_power(W("a"), W("abA")), BadWord);
        Rng rng(14);
        for (int i = 0; i < 300; ++i) {
            const Word a = random_cyclically_reduced(rng, 2, 1 + rng.below(5));
            Word x;
            if (rng.coin()) {
                x = PeriodicWord{a, rng.below(a.size()), rng.below(12)}.materialize();
            } else {
                x = random_raw_word(rng, 2, rng.below(9));
            }
            CHECK(occurs_in_period_power(x, a) == oracle_occurs(x, a));
        }
    }

    TEST_CASE("maximal power factor matches the exhaustive oracle") {
        CHECK(max_power_factor(W("aaa")).k == 3);
        CHECK(max_power_factor(W("aaa")).period == W("a"));
        CHECK(max_power_factor(W("abab")).k == 2);
        CHECK(max_power_factor(W("a")).k == 1);
        Rng rng(15);
        for (int i = 0; i < 200; ++i) {
            const Word w = random_raw_word(rng, 2, 1 + rng.below(12));
            const MaxPower mp = max_power_factor(w);
            CHECK(mp.k == oracle_max_power(w));
            REQUIRE(mp.k >= 1);
            REQUIRE(!mp.period.empty());
            CHECK(oracle_primitive(mp.period));
            const Word block = mp.period.pow(mp.k);
            REQUIRE(mp.pos + block.size() <= w.size());
            CHECK(w.subword(mp.pos, mp.pos + block.size()) == block);
        }
    }

    TEST_CASE("longest common periodic factor and the Fine-Wilf cap") {
        CHECK(longest_common_periodic_factor(W("ab"), W("aabAB")).length == 2);
        CHECK(longest_common_periodic_factor(W("ab"), W("BA")).length == 0);
        CHECK(longest_common_periodic_factor(W("ab"), W("ba")).infinite);
        CHECK(longest_common_periodic_factor(W("ab"), W("ab")).infinite);
        CHECK_THROWS_AS(longest_common_periodic_factor(W("abab"), W("a")), BadWord);
        CHECK_THROWS_AS(longest_common_periodic_factor(W(""), W("a")), BadWord);
        Rng rng(16);
        for (int i = 0; i < 200; ++i) {
            Word a = random_cyclically_reduced(rng, 2, 1 + rng.below(6));
            Word b = random_cyclically_reduced(rng, 2, 1 + rng.below(6));
            if (!oracle_primitive(a) || !oracle_primitive(b)) continue;
            const CommonFactorLength got = longest_common_periodic_factor(a, b);
            const bool same_line = oracle_cyclic_equal(a, b);
            CHECK(got.infinite == same_line);
            if (!same_line) {
                CHECK(got.length == oracle_lcpf(a, b));
                CHECK(got.length < a.size() + b.size());
            }
        }
    }

    TEST_CASE("cyclic canonical form is the least rotation of the core") {
        CHECK(CyclicWord(W("bab")).canonical() == W("abb"));
        CHECK(CyclicWord(W("abA")).canonical() == W("b"));
        CHECK(CyclicWord(W("ab")) == CyclicWord(W("ba")));
        CHECK(CyclicWord(W("ab")) != CyclicWord(W("BA")));
        Rng rng(17);
        for (int i = 0; i < 200; ++i) {
            const Word w = random_cyclically_reduced(rng, 2, 1 + rng.below(8));
            const Word canon = CyclicWord(w).canonical();
            Word least = w;
            for (std::size_t k = 1; k < w.size(); ++k) least = std::min(least, rotation(w, k));
            CHECK(canon == least);
            CHECK(CyclicWord(rotation(w, rng.below(w.size()))).canonical() == canon);
        }
    }

    TEST_CASE("periodic words materialize by index arithmetic") {
        const PeriodicWord pw{W("ab"), 1, 5};
        CHECK(pw.at(0) == Letter(1, false));
        CHECK(pw.materialize() == W("babab"));
        CHECK(PeriodicWord{W("ab"), 0, 0}.materialize().empty());
        CHECK_THROWS_AS((PeriodicWord{W(""), 0, 3}.materialize()), BadWord);
    }
}
