#ifndef SCC_WORD_HPP
#define SCC_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scc {

struct BadWord : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A signed generator. Generators are numbered from 0; a letter is a generator
// or its formal inverse. The packed code sorts a < a^-1 < b < b^-1 < ..., the
// letter order underlying the global length-lexicographic order on words.
class Letter {
public:
    constexpr Letter() = default;
    constexpr Letter(int gen, bool inv)
        : code_(static_cast<std::int32_t>(2 * gen + (inv ? 1 : 0))) {}

    constexpr int gen() const { return code_ / 2; }
    constexpr bool inverted() const { return (code_ & 1) != 0; }
    constexpr Letter inverse() const {
        Letter l;
        l.code_ = code_ ^ 1;
        return l;
    }
    constexpr std::int32_t code() const { return code_; }

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr auto operator<=>(Letter a, Letter b) { return a.code_ <=> b.code_; }

private:
    std::int32_t code_ = 0;
};

// Plain word over a signed alphabet; not implicitly reduced. Spans are
// half-open letter index ranges [begin, end).
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    void push_back(Letter l) { letters_.push_back(l); }

    Word inverse() const;
    Word subword(std::size_t begin, std::size_t end) const;
    Word pow(std::size_t k) const;
    friend Word operator*(const Word& a, const Word& b);

    friend bool operator==(const Word&, const Word&) = default;
    // Length-lexicographic: shorter first, ties by letter order.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;
};

// Ordered generator symbols; text form uses the lowercase symbol for a
// generator and its uppercase for the inverse, "" for the empty word.
class Alphabet {
public:
    explicit Alphabet(std::string_view symbols);
    static Alphabet standard(int m);

    int size() const { return static_cast<int>(symbols_.size()); }
    char symbol(int gen) const { return symbols_.at(static_cast<std::size_t>(gen)); }

    bool contains(Letter l) const { return l.gen() >= 0 && l.gen() < size(); }
    std::optional<Letter> letter_of(char c) const;

    Word parse(std::string_view text) const;
    std::string print(Letter l) const;
    std::string print(const Word& w) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string symbols_;
};

// Conjugacy class representative: cyclically reduced and lexicographically
// least among its own cyclic shifts (shifts only; inverses are kept distinct).
class CyclicWord {
public:
    explicit CyclicWord(const Word& w);

    const Word& canonical() const { return canonical_; }
    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
    friend std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) {
        return a.canonical_ <=> b.canonical_;
    }

private:
    Word canonical_;
};

// A concrete factor of the bi-infinite periodic word period^inf: letters
// period[(offset + i) mod |period|] for 0 <= i < length.
struct PeriodicWord {
    Word period;
    std::size_t offset = 0;
    std::size_t length = 0;

    Letter at(std::size_t i) const {
        return period[(offset + i) % period.size()];
    }
    Word materialize() const;

    friend bool operator==(const PeriodicWord&, const PeriodicWord&) = default;
};

Word free_reduce(const Word& w);
bool is_freely_reduced(const Word& w);

struct CyclicReduction {
    Word core;        // cyclically reduced
    Word conjugator;  // w = conjugator * core * conjugator^-1 in the free group
};
CyclicReduction cyclic_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);

// True iff w is not a proper power u^k, k >= 2. Requires w cyclically
// reduced and nonempty.
bool is_primitive(const Word& w);

// True iff v is a cyclic shift of u. Requires both cyclically reduced.
bool cyclic_equal(const Word& u, const Word& v);

// Least offset o < |a| such that x matches a^inf starting at o, if any.
// Requires a cyclically reduced and nonempty. The empty x occurs at 0.
std::optional<std::size_t> occurs_in_period_power(const Word& x, const Word& a);

struct MaxPower {
    std::size_t k = 0;  // largest k with period^k a factor of w
    Word period;        // primitive witness (single letter when k == 1)
    std::size_t pos = 0;
};
MaxPower max_power_factor(const Word& w);

struct CommonFactorLength {
    bool infinite = false;  // the two period lines coincide
    std::size_t length = 0;
};
// Longest common factor of the bi-infinite lines a^inf and b^inf. Requires
// both primitive, cyclically reduced, nonempty. When the lines are distinct
// the answer is < |a| + |b| (Fine-Wilf plus primitivity), which caps the scan.
CommonFactorLength longest_common_periodic_factor(const Word& a, const Word& b);

}  // namespace scc

#endif
