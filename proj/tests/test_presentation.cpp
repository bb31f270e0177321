#include <doctest.h>

#include "scc/params.hpp"
#include "scc/presentation.hpp"
#include "scc/word.hpp"

#include <fstream>
#include <sstream>
#include <string>
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

GradedPresentation experimental(const char* root, long long n, const Rational& lambda,
                                const Rational& Omega) {
    return GradedPresentation(AB, make_experimental_params(n, lambda, Omega),
                              {RelatorClass{1, W(root), n}});
}

}  // namespace

TEST_SUITE("presentation") {
    TEST_CASE("construction validates shape, not soundness") {
        const GradedPresentation p = strict_two();
        CHECK(p.classes().size() == 2);
        CHECK(p.rank1() == std::vector<int>{0, 1});
        CHECK(p.max_rank() == 1);
        CHECK(p.classes()[0].relator_length() == 4006);
        CHECK(p.classes()[1].relator_length() == 5 * 2003);

        const Alphabet abc = Alphabet::standard(3);
        CHECK_THROWS_AS(GradedPresentation(AB, make_strict_params(2003),
                                           {RelatorClass{1, abc.parse("ac"), 2003}}),
                        BadWord);
        CHECK_THROWS_AS(
            GradedPresentation(AB, make_strict_params(2003), {RelatorClass{0, W("ab"), 2003}}),
            BadWord);
        CHECK_THROWS_AS(
            GradedPresentation(AB, make_strict_params(2003), {RelatorClass{1, W("ab"), 0}}),
            BadWord);
        // A broken root is constructible; the checkers exist to flag it.
        CHECK_NOTHROW(
            GradedPresentation(AB, make_strict_params(2003), {RelatorClass{1, W("abA"), 2003}}));
    }

    TEST_CASE("rank-1 lines come in root/inverse pairs") {
        const std::vector<Line> lines = rank1_lines(strict_two());
        REQUIRE(lines.size() == 4);
        CHECK(lines[0].relator == 0);
        CHECK(!lines[0].inverted);
        CHECK(lines[0].period == W("ab"));
        CHECK(lines[1].relator == 0);
        CHECK(lines[1].inverted);
        CHECK(lines[1].period == W("ab").inverse());
        CHECK(lines[2].period == W("aabAB"));
        CHECK(lines[3].period == W("aabAB").inverse());
        CHECK_THROWS_AS(
            rank1_lines(GradedPresentation(AB, make_strict_params(2003),
                                           {RelatorClass{1, W("abA"), 2003}})),
            BadWord);
    }

    TEST_CASE("line index answers factor queries in O(1)") {
        const GradedPresentation p = strict_one();
        const LineIndex idx(p, W("abab"));
        CHECK(idx.word_size() == 4);
        REQUIRE(idx.lines().size() == 2);
        CHECK(idx.ext(0, 0) == 4);
        CHECK(idx.ext(0, 1) == 3);
        CHECK(idx.ext(0, 3) == 1);
        CHECK(idx.ext(1, 0) == 0);  // the inverse line is all uppercase
        CHECK(idx.max_ext(0) == 4);
        CHECK(idx.span_on_line(0, 0, 4));
        CHECK(idx.span_on_line(0, 1, 3));
        CHECK(!idx.span_on_line(1, 0, 2));
        CHECK(idx.span_on_some_line(2, 4));
        CHECK(idx.offset_on_line(0, 0, 4) == std::size_t{0});
        CHECK(idx.offset_on_line(0, 1, 3) == std::size_t{1});
        CHECK(!idx.offset_on_line(1, 0, 2).has_value());

        const LineIndex mixed(p, W("abBA"));
        CHECK(mixed.ext(0, 0) == 2);
        CHECK(mixed.ext(1, 2) == 2);
        CHECK(mixed.max_ext(2) == 2);
    }

    TEST_CASE("the full check battery passes on sound presentations") {
        const CheckReport rep = check_all(strict_two());
        CHECK(rep.all_pass());
        CHECK(rep.items.size() == 21);
        CHECK(check_all(strict_one()).all_pass());
    }

    TEST_CASE("normalization flags powers, reducible roots, and conjugate classes") {
        const GradedPresentation power(AB, make_strict_params(2003),
                                       {RelatorClass{1, W("abab"), 2003}});
        CHECK(!check_normalized(power).all_pass());

        const GradedPresentation unreduced(AB, make_strict_params(2003),
                                           {RelatorClass{1, W("abA"), 2003}});
        CHECK(!check_normalized(unreduced).all_pass());
        CHECK(!check_S0(unreduced).all_pass());

        const GradedPresentation conjugate(
            AB, make_strict_params(2003),
            {RelatorClass{1, W("ab"), 2003}, RelatorClass{1, W("ba"), 2003}});
        CHECK(!check_normalized(conjugate).all_pass());
        // The S2 scan skips coinciding lines; the clash is normalization's job.
        CHECK(check_S2(conjugate).all_pass());

        const GradedPresentation inv_conjugate(
            AB, make_strict_params(2003),
            {RelatorClass{1, W("ab"), 2003}, RelatorClass{1, W("BA"), 2003}});
        CHECK(!check_normalized(inv_conjugate).all_pass());

        // Rank >= 2 classes are recorded as assumptions, never failures.
        const GradedPresentation graded(
            AB, make_strict_params(2003),
            {RelatorClass{1, W("ab"), 2003}, RelatorClass{2, W("aabb"), 2003}});
        const CheckReport rep = check_normalized(graded);
        CHECK(rep.all_pass());
        bool saw_assumption = false;
        for (const CheckItem& it : rep.items)
            saw_assumption = saw_assumption || it.name.rfind("assumption", 0) == 0;
        CHECK(saw_assumption);
    }

    TEST_CASE("S1 compares relator length against Omega") {
        CHECK(check_S1(strict_one()).all_pass());
        // Relator length 3*2 = 6 < Omega = 1000.
        const GradedPresentation small = experimental("ab", 3, make_rational(1, 10), Rational(1000));
        const CheckReport rep = check_S1(small);
        CHECK(!rep.all_pass());
        REQUIRE(rep.items.size() == 1);
        CHECK(rep.items[0].detail.find("6") != std::string::npos);
    }

    TEST_CASE("S2 bounds common periodic factors of distinct lines") {
        CHECK(check_S2(strict_two()).all_pass());
        // lcpf((ab)^inf, (abababb)^inf) = 7 ("bababab"), against threshold
        // lambda * 6 = 3/5 for the short root: a hard failure.
        const GradedPresentation clash(
            AB, make_experimental_params(3, make_rational(1, 10), Rational(1)),
            {RelatorClass{1, W("ab"), 3}, RelatorClass{1, W("abababb"), 3}});
        const CheckReport rep = check_S2(clash);
        CHECK(!rep.all_pass());
        bool saw_seven = false;
        for (const CheckItem& it : rep.items)
            saw_seven = saw_seven || (!it.pass && it.detail.find("common periodic factor 7") !=
                                                      std::string::npos);
        CHECK(saw_seven);

        const GradedPresentation broken(AB, make_strict_params(2003),
                                        {RelatorClass{1, W("abab"), 2003}});
        const CheckReport pre = check_S2(broken);
        CHECK(!pre.all_pass());
    }

    TEST_CASE("S3 never fires for honest roots: no inverse-conjugate relators") {
        CHECK(check_S3(strict_two()).all_pass());
        // Exhaustive: over two generators every cyclically reduced root up to
        // length 5 passes, mirroring the free-group fact that only the
        // identity is conjugate to its inverse.
        std::vector<int> codes;
        for (std::size_t len = 1; len <= 5; ++len) {
            codes.assign(len, 0);
            for (;;) {
                Word w;
                for (int c : codes) w.push_back(Letter(c / 2, (c & 1) != 0));
                if (is_freely_reduced(w) && is_cyclically_reduced(w)) {
                    const GradedPresentation p(AB, make_strict_params(2003),
                                               {RelatorClass{1, w, 2003}});
                    CHECK(check_S3(p).all_pass());
                }
                std::size_t i = len;
                while (i > 0 && codes[i - 1] == 3) codes[--i] = 0;
                if (i == 0) break;
                ++codes[i - 1];
            }
        }
    }

    TEST_CASE("piece enumeration is exact and ordered") {
        const GradedPresentation p = experimental("ab", 3, make_rational(1, 10), Rational(1));
        const std::vector<Piece> all = enumerate_pieces(p, Rational(0));
        REQUIRE(all.size() == 13);  // empty + 2 offsets x 6 lengths
        CHECK(all[0].relator == -1);
        CHECK(all[0].length == 0);
        CHECK(all[0].mu == Rational(0));
        for (std::size_t i = 1; i < all.size(); ++i) {
            CHECK(all[i].relator == 0);
            CHECK(all[i].mu == make_rational(static_cast<long long>(all[i].length), 6));
        }
        CHECK(all[1].offset == 0);
        CHECK(all[1].length == 1);
        CHECK(all[3].occurrence(p).materialize() == W("aba"));
        CHECK(all[8].offset == 1);
        CHECK(all[8].length == 2);
        CHECK(all[8].occurrence(p).materialize() == W("ba"));

        const std::vector<Piece> half = enumerate_pieces(p, make_rational(1, 2));
        CHECK(half.size() == 8);
        for (const Piece& piece : half) CHECK(piece.mu >= make_rational(1, 2));
        CHECK(enumerate_pieces(p, Rational(2)).empty());
        CHECK_THROWS_AS(enumerate_pieces(GradedPresentation(AB, make_strict_params(2003),
                                                            {RelatorClass{1, W("abA"), 2003}}),
                                         Rational(0)),
                        BadWord);
    }

    TEST_CASE("threshold names resolve to regime constants") {
        const Params p = make_strict_params(2003);
        CHECK(resolve_threshold(p, "xi0") == p.xi0);
        CHECK(resolve_threshold(p, "xi1") == p.xi1);
        CHECK(resolve_threshold(p, "xi2") == p.xi2);
        CHECK(resolve_threshold(p, "rho") == p.rho);
        CHECK(resolve_threshold(p, "0.25") == make_rational(1, 4));
        CHECK(resolve_threshold(p, "3/7") == make_rational(3, 7));
        CHECK_THROWS_AS(resolve_threshold(p, "bogus"), std::invalid_argument);
    }

    TEST_CASE("presentation text format parses") {
        std::istringstream in(
            "# comment\n"
            "alphabet: ab\n"
            "mode: strict\n"
            "n: 2003\n"
            "\n"
            "rank 1: ab   # trailing comment\n"
            "rank 1: aabAB\n");
        const GradedPresentation p = parse_presentation(in);
        CHECK(p.alphabet() == AB);
        CHECK(p.params().mode == Mode::Strict);
        CHECK(p.params().n == 2003);
        REQUIRE(p.classes().size() == 2);
        CHECK(p.classes()[0].root == W("ab"));
        CHECK(p.classes()[0].exponent == 2003);
        CHECK(p.classes()[1].root == W("aabAB"));

        std::istringstream exp(
            "alphabet: ab\nmode: experimental\nn: 3\nlambda: 1/10\nOmega: 100\np1: 3\nrank 1: ab\n");
        const GradedPresentation q = parse_presentation(exp);
        CHECK(q.params().mode == Mode::Experimental);
        CHECK(q.params().lambda == make_rational(1, 10));
        CHECK(q.params().p1 == 3);
        CHECK(q.params().p0 == 39);
    }

    TEST_CASE("presentation text format rejects malformed input") {
        const auto reject = [](const char* text) {
            std::istringstream in(text);
            CHECK_THROWS_AS(parse_presentation(in), BadWord);
        };
        reject("mode: strict\nn: 2003\n");                        // no alphabet
        reject("alphabet: ab\nn: 2003\n");                        // no mode
        reject("alphabet: ab\nmode: strict\n");                   // no n
        reject("alphabet: ab\nmode: casual\nn: 2003\n");          // bad mode
        reject("alphabet: ab\nmode: strict\nn: x\n");             // bad number
        reject("alphabet: ab\nmode: strict\nn: 2003\nlambda: 1/2\n");  // strict override
        reject("alphabet: ab\nmode: strict\nn: 2003\ncolor: red\n");   // unknown key
        reject("rank 1: ab\nalphabet: ab\nmode: strict\nn: 2003\n");   // relator first
        reject("alphabet: ab\nmode: strict\nn: 2003\nrank 1: xyz\n");  // bad word
        reject("alphabet: ab\nmode: strict\nn: 2003\njust text\n");    // no colon

        std::istringstream gate("alphabet: ab\nmode: strict\nn: 2002\n");
        CHECK_THROWS_AS(parse_presentation(gate), StrictViolation);
    }

    TEST_CASE("file parsing matches stream parsing") {
        const std::string path = "test_presentation_tmp.pres";
        {
            std::ofstream out(path);
            out << "alphabet: ab\nmode: strict\nn: 2003\nrank 1: ab\n";
        }
        const GradedPresentation p = parse_presentation_file(path);
        CHECK(p.params().n == 2003);
        REQUIRE(p.classes().size() == 1);
        CHECK(p.classes()[0].root == W("ab"));
        std::remove(path.c_str());
        CHECK_THROWS_AS(parse_presentation_file("no_such_file.pres"), BadWord);
    }
}
