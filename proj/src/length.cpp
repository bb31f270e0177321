#include "scc/length.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace scc {

namespace {

Rational size_ratio(std::size_t num, std::size_t den) {
    return make_rational(static_cast<long long>(num), static_cast<long long>(den));
}

}  // namespace

std::vector<LineSpan> maximal_line_spans(const LineIndex& idx) {
    std::vector<LineSpan> out;
    const std::size_t n = idx.word_size();
    for (std::size_t l = 0; l < idx.lines().size(); ++l) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t e = idx.ext(l, i);
            // ext can drop by at most 1 per step, so ext(i-1) > ext(i) means
            // the span at i is nested in the one at i-1.
            if (e == 0 || (i > 0 && idx.ext(l, i - 1) > e)) continue;
            out.push_back(LineSpan{l, i, i + e, *idx.offset_on_line(l, i, i + e)});
        }
    }
    std::sort(out.begin(), out.end(), [](const LineSpan& a, const LineSpan& b) {
        return std::tie(a.begin, a.end, a.line) < std::tie(b.begin, b.end, b.line);
    });
    return out;
}

PeriodicWord Fragment::base(const GradedPresentation& p) const {
    if (rank != 1 || relator < 0) throw std::logic_error("Fragment::base: rank-0 fragment");
    const Word& root = p.classes()[static_cast<std::size_t>(relator)].root;
    return PeriodicWord{inverted ? root.inverse() : root, line_offset, end - begin};
}

std::vector<Fragment> find_fragments_rank1(const Word& x, const GradedPresentation& p,
                                           const Rational& min_mu) {
    if (!is_freely_reduced(x)) throw BadWord("find_fragments_rank1: word not freely reduced");
    std::vector<Fragment> out;
    if (x.empty()) return out;
    LineIndex idx(p, x);
    for (const LineSpan& s : maximal_line_spans(idx)) {
        const Line& line = idx.lines()[s.line];
        const std::size_t rl = p.classes()[static_cast<std::size_t>(line.relator)].relator_length();
        Rational mu = size_ratio(s.size(), rl);
        if (mu < min_mu) continue;
        Fragment f;
        f.host = x;
        f.begin = s.begin;
        f.end = s.end;
        f.rank = 1;
        f.relator = line.relator;
        f.inverted = line.inverted;
        f.line_offset = s.line_offset;
        f.mu = std::move(mu);
        out.push_back(std::move(f));
    }
    return out;
}

bool fragment_compatible_rank1(const Fragment& f, const Fragment& g,
                               const GradedPresentation& p) {
    if (f.host != g.host) throw std::invalid_argument("HOST_MISMATCH");
    if (f.rank != 1 || g.rank != 1)
        throw std::invalid_argument("fragment_compatible_rank1: rank-1 fragments required");
    const std::size_t n = f.host.size();
    if (f.begin >= f.end || g.begin >= g.end || f.end > n || g.end > n)
        throw std::invalid_argument("fragment_compatible_rank1: span out of range");
    if (f.relator != g.relator || f.inverted != g.inverted) return false;
    const Word& root = p.classes()[static_cast<std::size_t>(f.relator)].root;
    const Word period = f.inverted ? root.inverse() : root;
    const std::size_t m = period.size();
    const Fragment& a = f.begin <= g.begin ? f : g;
    const Fragment& b = f.begin <= g.begin ? g : f;
    if ((a.line_offset + (b.begin - a.begin)) % m != b.line_offset % m) return false;
    // Both spans extend to one occurrence of the line over the combined span.
    const std::size_t end = std::max(a.end, b.end);
    for (std::size_t i = a.begin; i < end; ++i) {
        if (a.host[i] != period[(a.line_offset + (i - a.begin)) % m]) return false;
    }
    return true;
}

std::optional<Fragment> is_reduced_rank1(const Word& x, const GradedPresentation& p) {
    if (!is_freely_reduced(x)) throw BadWord("is_reduced_rank1: word not freely reduced");
    const Rational& rho = p.params().rho;
    std::optional<Fragment> worst;
    for (Fragment& f : find_fragments_rank1(x, p, rho)) {
        if (f.mu <= rho) continue;
        // find order is (begin, end, line), so ties keep the earliest span.
        if (!worst || f.mu > worst->mu) worst = std::move(f);
    }
    return worst;
}

std::optional<std::string> validate_fragmentation(const Fragmentation& f,
                                                  const GradedPresentation& p) {
    if (f.alpha != 0 && f.alpha != 1) return "alpha out of range";
    const std::size_t n = f.host.size();
    std::size_t at = 0;
    Rational total(0);
    for (const FragPart& part : f.parts) {
        if (part.begin != at) return "parts are not contiguous";
        if (part.end <= part.begin || part.end > n) return "part span out of range";
        at = part.end;
        if (part.rank < 0 || part.rank > f.alpha) return "part rank above alpha";
        if (part.rank == 0) {
            if (part.size() != 1) return "rank-0 part is not a single letter";
        } else {
            if (part.relator < 0 ||
                static_cast<std::size_t>(part.relator) >= p.classes().size())
                return "rank-1 part references no relator";
            const Word& root = p.classes()[static_cast<std::size_t>(part.relator)].root;
            if (root.empty()) return "rank-1 part references an empty root";
            const Word period = part.inverted ? root.inverse() : root;
            const std::size_t m = period.size();
            for (std::size_t i = part.begin; i < part.end; ++i) {
                if (f.host[i] != period[(part.line_offset + (i - part.begin)) % m])
                    return "rank-1 part is not on its claimed line";
            }
        }
        total += (part.rank == f.alpha) ? Rational(1) : p.params().zeta;
    }
    if (at != n) return "parts do not cover the host";
    if (total != f.weight) return "declared weight mismatch";
    return std::nullopt;
}

namespace {

void check_length_pre(const Word& x, int alpha, const char* who) {
    if (alpha != 0 && alpha != 1)
        throw std::invalid_argument(std::string(who) + ": alpha must be 0 or 1");
    if (!is_freely_reduced(x)) throw BadWord(std::string(who) + ": word not freely reduced");
}

}  // namespace

Rational length_alpha_value(const Word& x, const GradedPresentation& p, int alpha) {
    check_length_pre(x, alpha, "length_alpha_value");
    const std::size_t n = x.size();
    if (alpha == 0 || n == 0) return make_rational(static_cast<long long>(n));
    const Rational& zeta = p.params().zeta;
    LineIndex idx(p, x);
    // dp[j] = |x[0..j)|_1. Removing the last letter from an optimal
    // fragmentation never raises the weight, so dp is non-decreasing; the
    // cheapest line part ending at j therefore starts at the least i with
    // x[i..j) on some line, and that i is non-decreasing in j (a factor of a
    // line factor stays on the line). One forward pointer suffices.
    std::vector<Rational> dp(n + 1);
    std::size_t s = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        while (s < j && s + idx.max_ext(s) < j) ++s;
        dp[j] = dp[j - 1] + zeta;
        if (s + 2 <= j) {
            Rational cand = dp[s] + 1;
            if (cand < dp[j]) dp[j] = std::move(cand);
        }
    }
    return dp[n];
}

LengthResult length_alpha(const Word& x, const GradedPresentation& p, int alpha) {
    check_length_pre(x, alpha, "length_alpha");
    const std::size_t n = x.size();
    LengthResult res;
    res.witness.host = x;
    res.witness.alpha = alpha;

    if (alpha == 0) {
        res.value = make_rational(static_cast<long long>(n));
        for (std::size_t i = 0; i < n; ++i)
            res.witness.parts.push_back(FragPart{i, i + 1, 0, -1, false, 0});
        res.witness.weight = res.value;
        if (auto err = validate_fragmentation(res.witness, p))
            throw std::logic_error("length_alpha: bad witness: " + *err);
        return res;
    }

    const Rational& zeta = p.params().zeta;
    LineIndex idx(p, x);
    // Suffix DP keeping (weight, part count), ties resolved toward fewer
    // parts, then the longest part at the earliest position.
    std::vector<Rational> weight(n + 1, Rational(0));
    std::vector<std::size_t> parts(n + 1, 0), choice(n + 1, 1);
    for (std::size_t i = n; i-- > 0;) {
        Rational bw = weight[i + 1] + zeta;
        std::size_t bp = parts[i + 1] + 1;
        std::size_t bl = 1;
        const std::size_t emax = idx.max_ext(i);
        for (std::size_t len = 2; len <= emax; ++len) {
            Rational w = weight[i + len] + 1;
            const std::size_t pc = parts[i + len] + 1;
            if (w < bw || (w == bw && (pc < bp || (pc == bp && len > bl)))) {
                bw = std::move(w);
                bp = pc;
                bl = len;
            }
        }
        weight[i] = std::move(bw);
        parts[i] = bp;
        choice[i] = bl;
    }
    res.value = weight[0];

    for (std::size_t at = 0; at < n;) {
        const std::size_t len = choice[at];
        FragPart part;
        part.begin = at;
        part.end = at + len;
        if (len >= 2) {
            part.rank = 1;
            std::size_t l = 0;
            while (!idx.span_on_line(l, at, at + len)) ++l;
            const Line& line = idx.lines()[l];
            part.relator = line.relator;
            part.inverted = line.inverted;
            part.line_offset = *idx.offset_on_line(l, at, at + len);
        }
        res.witness.parts.push_back(part);
        at += len;
    }
    res.witness.weight = res.value;
    if (auto err = validate_fragmentation(res.witness, p))
        throw std::logic_error("length_alpha: bad witness: " + *err);
    if (res.value != length_alpha_value(x, p, alpha))
        throw std::logic_error("length_alpha: witness DP disagrees with value DP");
    return res;
}

Rational length_alpha_cyclic(const Word& x, const GradedPresentation& p, int alpha,
                             std::size_t* arg_shift) {
    if (alpha != 0 && alpha != 1)
        throw std::invalid_argument("length_alpha_cyclic: alpha must be 0 or 1");
    if (!is_cyclically_reduced(x)) throw BadWord("length_alpha_cyclic: word not cyclically reduced");
    if (arg_shift) *arg_shift = 0;
    const std::size_t n = x.size();
    if (n == 0) return Rational(0);
    if (alpha == 0) return make_rational(static_cast<long long>(n));
    Rational best;
    std::size_t best_shift = 0;
    for (std::size_t s = 0; s < n; ++s) {
        const Word rot = x.subword(s, n) * x.subword(0, s);
        Rational v = length_alpha_value(rot, p, alpha);
        if (s == 0 || v < best) {
            best = std::move(v);
            best_shift = s;
        }
    }
    if (arg_shift) *arg_shift = best_shift;
    return best;
}

}  // namespace scc
