#include "scc/word.hpp"

#include <algorithm>
#include <cctype>

namespace scc {

Word Word::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
    return Word(std::move(out));
}

Word Word::subword(std::size_t begin, std::size_t end) const {
    if (begin > end || end > letters_.size()) throw BadWord("subword span out of range");
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(end)));
}

Word Word::pow(std::size_t k) const {
    std::vector<Letter> out;
    out.reserve(letters_.size() * k);
    for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
    return Word(std::move(out));
}

Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.letters_.begin(), a.letters_.end());
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty()) throw BadWord("alphabet must have at least one generator");
    for (char c : symbols_) {
        if (!std::islower(static_cast<unsigned char>(c)))
            throw BadWord("alphabet symbols must be lowercase letters");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        for (std::size_t j = i + 1; j < symbols_.size(); ++j)
            if (symbols_[i] == symbols_[j]) throw BadWord("duplicate alphabet symbol");
}

Alphabet Alphabet::standard(int m) {
    if (m < 1 || m > 26) throw BadWord("alphabet size out of range");
    std::string s;
    for (int i = 0; i < m; ++i) s.push_back(static_cast<char>('a' + i));
    return Alphabet(s);
}

std::optional<Letter> Alphabet::letter_of(char c) const {
    char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto pos = symbols_.find(low);
    if (pos == std::string::npos) return std::nullopt;
    return Letter(static_cast<int>(pos), std::isupper(static_cast<unsigned char>(c)) != 0);
}

Word Alphabet::parse(std::string_view text) const {
    std::vector<Letter> out;
    out.reserve(text.size());
    for (char c : text) {
        auto l = letter_of(c);
        if (!l) throw BadWord(std::string("symbol '") + c + "' not in alphabet");
        out.push_back(*l);
    }
    return Word(std::move(out));
}

std::string Alphabet::print(Letter l) const {
    if (!contains(l)) throw BadWord("letter outside alphabet");
    char c = symbol(l.gen());
    if (l.inverted()) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return std::string(1, c);
}

std::string Alphabet::print(const Word& w) const {
    std::string out;
    out.reserve(w.size());
    for (Letter l : w.letters()) out += print(l);
    return out;
}

Word PeriodicWord::materialize() const {
    if (period.empty()) {
        if (length != 0) throw BadWord("periodic word with empty period and nonzero length");
        return Word();
    }
    std::vector<Letter> out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) out.push_back(at(i));
    return Word(std::move(out));
}

Word free_reduce(const Word& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (Letter l : w.letters()) {
        if (!stack.empty() && stack.back() == l.inverse())
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return Word(std::move(stack));
}

bool is_freely_reduced(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] == w[i].inverse()) return false;
    return true;
}

CyclicReduction cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
        ++lo;
        --hi;
    }
    return CyclicReduction{r.subword(lo, hi), r.subword(0, lo)};
}

bool is_cyclically_reduced(const Word& w) {
    if (!is_freely_reduced(w)) return false;
    if (w.size() >= 2 && w[0] == w[w.size() - 1].inverse()) return false;
    return true;
}

namespace {

// Occurrences of x inside text, naive scan.
bool occurs_at(const Word& text, const Word& x, std::size_t pos) {
    if (pos + x.size() > text.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (text[pos + i] != x[i]) return false;
    return true;
}

}  // namespace

bool is_primitive(const Word& w) {
    if (w.empty() || !is_cyclically_reduced(w)) throw BadWord("is_primitive wants a cyclically reduced nonempty word");
    // w is a proper power iff w occurs in w*w at some offset strictly between
    // 0 and |w|.
    Word ww = w * w;
    for (std::size_t o = 1; o < w.size(); ++o)
        if (occurs_at(ww, w, o)) return false;
    return true;
}

bool cyclic_equal(const Word& u, const Word& v) {
    if (!is_cyclically_reduced(u) || !is_cyclically_reduced(v))
        throw BadWord("cyclic_equal wants cyclically reduced words");
    if (u.size() != v.size()) return false;
    if (u.empty()) return true;
    Word vv = v * v;
    for (std::size_t o = 0; o < v.size(); ++o)
        if (occurs_at(vv, u, o)) return true;
    return false;
}

std::optional<std::size_t> occurs_in_period_power(const Word& x, const Word& a) {
    if (a.empty() || !is_cyclically_reduced(a))
        throw BadWord("occurs_in_period_power wants a cyclically reduced nonempty period");
    for (std::size_t o = 0; o < a.size(); ++o) {
        bool ok = true;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] != a[(o + i) % a.size()]) {
                ok = false;
                break;
            }
        }
        if (ok) return o;
    }
    return std::nullopt;
}

MaxPower max_power_factor(const Word& w) {
    if (w.empty()) return MaxPower{0, Word(), 0};
    MaxPower best{1, w.subword(0, 1), 0};
    std::size_t n = w.size();
    for (std::size_t p = 1; 2 * p <= n; ++p) {
        // Runs of positions where w[i] == w[i+p]; a run of m consecutive
        // matches starting at i yields the power floor(m/p) + 1 at i.
        std::size_t i = 0;
        while (i + p < n) {
            if (w[i] != w[i + p]) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j + p < n && w[j] == w[j + p]) ++j;
            std::size_t run = j - i;  // matched pairs in [i, j)
            std::size_t k = run / p + 1;
            if (k > best.k) best = MaxPower{k, w.subword(i, i + p), i};
            i = j + 1;
        }
    }
    return best;
}

CommonFactorLength longest_common_periodic_factor(const Word& a, const Word& b) {
    if (a.empty() || b.empty()) throw BadWord("periodic lines need nonempty periods");
    if (!is_cyclically_reduced(a) || !is_cyclically_reduced(b))
        throw BadWord("periodic lines need cyclically reduced periods");
    if (!is_primitive(a) || !is_primitive(b))
        throw BadWord("periodic lines need primitive periods");
    if (cyclic_equal(a, b)) return CommonFactorLength{true, 0};
    // Distinct primitive lines: a common factor of length |a|+|b| would carry
    // both periods and collapse them to a common refinement (Fine-Wilf), so
    // the search below is complete.
    std::size_t cap = a.size() + b.size() - 1;
    std::size_t best = 0;
    for (std::size_t o = 0; o < a.size(); ++o) {
        PeriodicWord window{a, o, cap};
        Word text = window.materialize();
        // Longest prefix of text that lies on the b line.
        std::size_t lo = best;  // shorter than current best is useless
        for (std::size_t len = lo + 1; len <= cap; ++len) {
            if (occurs_in_period_power(text.subword(0, len), b))
                best = len;
            else
                break;
        }
    }
    if (best >= a.size() + b.size())
        throw BadWord("periodic factor cap exceeded for distinct lines");
    return CommonFactorLength{false, best};
}

CyclicWord::CyclicWord(const Word& w) {
    Word core = cyclic_reduce(w).core;
    canonical_ = core;
    Word cc = core * core;
    for (std::size_t o = 1; o < core.size(); ++o) {
        Word rot = cc.subword(o, o + core.size());
        if (rot < canonical_) canonical_ = rot;
    }
}

}  // namespace scc
