#include "scc/dehn.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace scc {

namespace {

Rational size_ratio(std::size_t num, std::size_t den) {
    return make_rational(static_cast<long long>(num), static_cast<long long>(den));
}

Word apply_step(const Word& cur, const ReductionStep& st) {
    return free_reduce(cur.subword(0, st.begin) * st.replacement *
                       cur.subword(st.end, cur.size()));
}

ReductionStep make_step(const GradedPresentation& p, const LineIndex& idx, const Word& cur,
                        const LineSpan& span, std::size_t take) {
    const Line& line = idx.lines()[span.line];
    const std::size_t rl =
        p.classes()[static_cast<std::size_t>(line.relator)].relator_length();
    ReductionStep st;
    st.begin = span.begin;
    st.end = span.begin + take;
    st.removed = cur.subword(st.begin, st.end);
    st.replacement =
        PeriodicWord{line.period, (span.line_offset + take) % line.period.size(), rl - take}
            .materialize()
            .inverse();
    st.relator = line.relator;
    st.inverted = line.inverted;
    st.line_offset = span.line_offset;
    return st;
}

}  // namespace

ReductionTrace dehn_reduce(const Word& x, const GradedPresentation& p) {
    if (!is_freely_reduced(x)) throw BadWord("dehn_reduce: word not freely reduced");
    const Rational& rho = p.params().rho;
    ReductionTrace t;
    t.input = x;
    Word cur = x;
    while (!cur.empty()) {
        LineIndex idx(p, cur);
        const auto spans = maximal_line_spans(idx);

        const auto relator_len = [&](const LineSpan& s) {
            return p.classes()[static_cast<std::size_t>(idx.lines()[s.line].relator)]
                .relator_length();
        };

        // Spans covering a whole relator go first; drop one relator block.
        const LineSpan* chunk = nullptr;
        for (const LineSpan& s : spans) {
            if (s.size() < relator_len(s)) continue;
            if (!chunk || s.size() > chunk->size()) chunk = &s;  // ties: earliest span
        }
        if (chunk) {
            ReductionStep st = make_step(p, idx, cur, *chunk, relator_len(*chunk));
            Word next = apply_step(cur, st);
            if (next.size() >= cur.size())
                throw std::logic_error("dehn_reduce: chunk deletion failed to shorten");
            t.steps.push_back(std::move(st));
            cur = std::move(next);
            continue;
        }

        // Otherwise switch the worst rho-violation, if doing so shortens.
        const LineSpan* bad = nullptr;
        Rational bad_mu;
        for (const LineSpan& s : spans) {
            Rational mu = size_ratio(s.size(), relator_len(s));
            if (mu <= rho) continue;
            if (!bad || mu > bad_mu) {  // ties: earliest span, lowest line
                bad = &s;
                bad_mu = std::move(mu);
            }
        }
        if (!bad) break;
        if (2 * bad->size() <= relator_len(*bad)) {
            // Violation exists but no shortening switch: only possible when
            // rho < 1/2 (experimental lambda > 1/18).
            t.complete = false;
            break;
        }
        ReductionStep st = make_step(p, idx, cur, *bad, bad->size());
        Word next = apply_step(cur, st);
        if (next.size() >= cur.size())
            throw std::logic_error("dehn_reduce: switch failed to shorten");
        t.steps.push_back(std::move(st));
        cur = std::move(next);
    }
    t.output = std::move(cur);
    return t;
}

std::optional<std::string> replay_trace(const ReductionTrace& t, const GradedPresentation& p) {
    if (!is_freely_reduced(t.input)) return "input not freely reduced";
    Word cur = t.input;
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
        const ReductionStep& st = t.steps[k];
        const std::string tag = "step " + std::to_string(k) + ": ";
        if (st.begin >= st.end || st.end > cur.size()) return tag + "span out of range";
        if (st.relator < 0 || static_cast<std::size_t>(st.relator) >= p.classes().size())
            return tag + "relator reference out of range";
        const RelatorClass& cls = p.classes()[static_cast<std::size_t>(st.relator)];
        if (cls.root.empty()) return tag + "relator root is empty";
        if (cur.subword(st.begin, st.end) != st.removed) return tag + "removed word mismatch";
        const std::size_t rl = cls.relator_length();
        if (st.removed.size() + st.replacement.size() != rl)
            return tag + "removed + replacement is not one relator long";
        const Word period = st.inverted ? cls.root.inverse() : cls.root;
        const Word pt = st.removed * st.replacement.inverse();
        for (std::size_t i = 0; i < rl; ++i) {
            if (pt[i] != period[(st.line_offset + i) % period.size()])
                return tag + "removed + replacement does not tile a relator rotation";
        }
        Word next = apply_step(cur, st);
        if (next.size() >= cur.size()) return tag + "does not shorten";
        cur = std::move(next);
    }
    if (cur != t.output) return "replay does not land on the stated output";
    return std::nullopt;
}

WordProblemAnswer word_problem_rank1(const Word& x, const GradedPresentation& p) {
    WordProblemAnswer ans;
    ans.trace = dehn_reduce(free_reduce(x), p);
    ans.trivial = ans.trace.output.empty();
    ans.exact = ans.trivial || (p.params().mode == Mode::Strict && ans.trace.complete);
    return ans;
}

namespace {

// Distinct line factors of one length, sorted by word; length 0 yields the
// lone empty piece. When two (line, offset) realizations spell the same word,
// the first in (class, line, offset) order keeps it.
std::vector<BridgePiece> bridge_pieces_of_length(const GradedPresentation& p, std::size_t len) {
    std::vector<BridgePiece> out;
    if (len == 0) {
        out.push_back(BridgePiece{});
        return out;
    }
    std::set<Word> seen;
    for (int r : p.rank1()) {
        const RelatorClass& cls = p.classes()[static_cast<std::size_t>(r)];
        if (cls.root.empty() || !is_cyclically_reduced(cls.root))
            throw BadWord("close_in_rank1: relator roots must be cyclically reduced");
        if (len > cls.relator_length()) continue;
        for (bool inv : {false, true}) {
            const Word period = inv ? cls.root.inverse() : cls.root;
            for (std::size_t off = 0; off < period.size(); ++off) {
                Word w = PeriodicWord{period, off, len}.materialize();
                if (seen.insert(w).second)
                    out.push_back(BridgePiece{r, inv, off, len, std::move(w)});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const BridgePiece& a, const BridgePiece& b) { return a.word < b.word; });
    return out;
}

}  // namespace

CloseResult close_in_rank1(const Word& x, const Word& y, const GradedPresentation& p,
                           std::size_t budget) {
    if (!is_freely_reduced(x) || !is_freely_reduced(y))
        throw BadWord("close_in_rank1: words not freely reduced");
    if (is_reduced_rank1(x, p) || is_reduced_rank1(y, p))
        throw BadWord("close_in_rank1: words must be reduced in rank 1");

    std::size_t max_rl = 0;
    for (int r : p.rank1())
        max_rl = std::max(max_rl, p.classes()[static_cast<std::size_t>(r)].relator_length());
    const bool complete = budget >= max_rl;
    const std::size_t cap = std::min(budget, max_rl);

    // Pairs are visited in (total length, u word, v word) order but generated
    // lazily per length: the pair space is quadratic in the relator length and
    // must never be materialized.
    std::map<std::size_t, std::vector<BridgePiece>> groups;
    auto group = [&](std::size_t len) -> const std::vector<BridgePiece>& {
        auto it = groups.find(len);
        if (it == groups.end()) it = groups.emplace(len, bridge_pieces_of_length(p, len)).first;
        return it->second;
    };

    CloseResult res;
    for (std::size_t total = 0; total <= 2 * cap; ++total) {
        const std::size_t lo = total > cap ? total - cap : 0;
        for (std::size_t lu = lo; lu <= std::min(total, cap); ++lu) {
            for (const BridgePiece& u : group(lu)) {
                for (const BridgePiece& v : group(total - lu)) {
                    const Word test = x.inverse() * u.word * y * v.word;
                    if (word_problem_rank1(test, p).trivial) {
                        res.status = CloseStatus::Found;
                        res.witness = CloseWitness{u, v};
                        return res;
                    }
                }
            }
        }
    }
    res.status = complete ? CloseStatus::NotClose : CloseStatus::BudgetExceeded;
    return res;
}

}  // namespace scc
