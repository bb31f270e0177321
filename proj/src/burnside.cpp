#include "scc/burnside.hpp"

#include <json.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scc {

namespace {

// Longest common factor of subject's line and witness's line together with
// its least starting offset on the subject line. Both words must be
// cyclically reduced, primitive, and lie on distinct lines; then Fine-Wilf
// caps the answer below |subject| + |witness|, so hitting the cap means the
// caller broke the distinctness precondition.
struct LineOverlap {
    std::size_t length = 0;
    std::size_t offset = 0;
};

LineOverlap longest_overlap(const Word& subject, const Word& witness) {
    const std::size_t cap = subject.size() + witness.size();
    LineOverlap best;
    for (std::size_t o = 0; o < subject.size(); ++o) {
        for (std::size_t q = 0; q < witness.size(); ++q) {
            std::size_t i = 0;
            while (i < cap &&
                   subject[(o + i) % subject.size()] == witness[(q + i) % witness.size()])
                ++i;
            if (i >= cap) throw std::logic_error("longest_overlap: the two lines coincide");
            if (i > best.length) {
                best.length = i;
                best.offset = o;
            }
        }
    }
    return best;
}

}  // namespace

Word simple_period_canonical(const Word& w) {
    Word a = CyclicWord(w).canonical();
    Word b = CyclicWord(w.inverse()).canonical();
    return b < a ? b : a;
}

SimplePeriod make_simple_period(const Word& w) {
    if (w.empty()) throw BadWord("simple period: empty word");
    if (!is_cyclically_reduced(w)) throw BadWord("simple period: word not cyclically reduced");
    if (!is_primitive(w)) throw BadWord("simple period: word is a proper power");
    return SimplePeriod{w, simple_period_canonical(w)};
}

std::vector<SimplePeriod> enumerate_simple_periods(const Alphabet& a, std::size_t max_len) {
    std::vector<SimplePeriod> out;
    const int nletters = 2 * a.size();
    if (nletters == 0) return out;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<int> code(len, 0);
        for (;;) {
            std::vector<Letter> ls(len);
            for (std::size_t i = 0; i < len; ++i)
                ls[i] = Letter(code[i] / 2, code[i] % 2 != 0);
            Word w(std::move(ls));
            if (is_freely_reduced(w) && is_cyclically_reduced(w) && is_primitive(w) &&
                simple_period_canonical(w) == w)
                out.push_back(SimplePeriod{w, w});
            std::size_t pos = len;
            while (pos > 0 && code[pos - 1] == nletters - 1) {
                code[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
            ++code[pos - 1];
        }
    }
    return out;
}

std::optional<SuspensionCertificate> check_suspended_level0(const Word& A, const Alphabet& a,
                                                            const Params& params) {
    SimplePeriod sp = make_simple_period(A);
    const long long p1 = params.p1;
    if (p1 < 2) throw std::invalid_argument("suspension: p1 must be at least 2");
    // Any witness class with (p1 - 1)|B| > |A| cannot reach its threshold
    // p1|B|: a common factor of distinct primitive lines is shorter than
    // |A| + |B|, and p1|B| >= |A| + |B| exactly when (p1 - 1)|B| >= |A|.
    const std::size_t bound =
        (A.size() + static_cast<std::size_t>(p1) - 2) / static_cast<std::size_t>(p1 - 1);
    for (const SimplePeriod& B : enumerate_simple_periods(a, bound)) {
        const long long threshold = p1 * static_cast<long long>(B.word.size());
        if (B.canonical == sp.canonical) {
            // The subject's own class. Its realization on the subject's line
            // is excluded by definition; the inverse-line realization is
            // admissible but over a free group never reaches the threshold,
            // because the overlap of a line with its mirror is below
            // 2|A| <= threshold.
            Word mirror = cyclic_equal(B.word, A) ? B.word.inverse() : B.word;
            LineOverlap ov = longest_overlap(A, mirror);
            if (static_cast<long long>(ov.length) >= threshold)
                throw std::logic_error("suspension: inverse-conjugate witness fired at level 0");
            continue;
        }
        for (bool inv : {false, true}) {
            Word W = inv ? B.word.inverse() : B.word;
            LineOverlap ov = longest_overlap(A, W);
            if (static_cast<long long>(ov.length) >= threshold)
                return SuspensionCertificate{A, 0, W, ov.offset, ov.length, threshold, -1};
        }
    }
    return std::nullopt;
}

std::optional<SuspensionCertificate> check_suspended_level(const Word& A, int level,
                                                           const std::vector<SimplePeriod>& prior,
                                                           const Params& params) {
    (void)params;
    if (level < 1) throw std::invalid_argument("suspension: level must be >= 1");
    SimplePeriod sp = make_simple_period(A);
    // Witnesses need a factor of length 4|B| on the subject's line; distinct
    // primitive lines share less than |A| + |B|, so 3|B| > |A| is hopeless.
    const std::size_t bound = (A.size() + 2) / 3;
    for (const SimplePeriod& B : prior) {
        if (B.word.size() > bound) continue;
        const long long threshold = 4 * static_cast<long long>(B.word.size());
        if (B.canonical == sp.canonical) {
            Word mirror = cyclic_equal(B.word, A) ? B.word.inverse() : B.word;
            LineOverlap ov = longest_overlap(A, mirror);
            if (static_cast<long long>(ov.length) >= threshold)
                throw std::logic_error("suspension: inverse-conjugate witness fired");
            continue;
        }
        for (bool inv : {false, true}) {
            Word W = inv ? B.word.inverse() : B.word;
            LineOverlap ov = longest_overlap(A, W);
            if (static_cast<long long>(ov.length) >= threshold)
                return SuspensionCertificate{A, level, W, ov.offset, ov.length, threshold, -1};
        }
    }
    return std::nullopt;
}

ESet build_E1(const Alphabet& a, std::size_t max_len, const Params& params) {
    ESet es;
    es.max_len = max_len;
    es.params = params;
    const std::vector<SimplePeriod> universe = enumerate_simple_periods(a, max_len);

    std::map<std::pair<Word, int>, int> cert_at;  // (class canonical, level) -> excluded index
    std::set<Word> suspended;

    std::vector<SimplePeriod> cur;  // classes suspended at the level being consumed
    for (const SimplePeriod& A : universe) {
        if (auto c = check_suspended_level0(A.word, a, params)) {
            cert_at[{A.canonical, 0}] = static_cast<int>(es.excluded.size());
            es.excluded.push_back(*c);
            suspended.insert(A.canonical);
            cur.push_back(A);
        }
    }

    // The level sets need not be nested, but the sequence lives in a finite
    // universe and the step is deterministic, so once a level set repeats the
    // whole future repeats and the union is already complete.
    std::set<std::vector<Word>> seen;
    int level = 1;
    while (!cur.empty()) {
        std::vector<Word> key;
        key.reserve(cur.size());
        for (const SimplePeriod& s : cur) key.push_back(s.canonical);
        if (!seen.insert(std::move(key)).second) break;
        std::vector<SimplePeriod> next;
        for (const SimplePeriod& A : universe) {
            auto c = check_suspended_level(A.word, level, cur, params);
            if (!c) continue;
            c->parent = cert_at.at({simple_period_canonical(c->witness), level - 1});
            cert_at[{A.canonical, level}] = static_cast<int>(es.excluded.size());
            es.excluded.push_back(*c);
            suspended.insert(A.canonical);
            next.push_back(A);
        }
        cur = std::move(next);
        ++level;
        if (level > 1000) throw std::logic_error("build_E1: level iteration did not stabilize");
    }

    for (const SimplePeriod& A : universe)
        if (suspended.find(A.canonical) == suspended.end()) es.members.push_back(A);
    return es;
}

std::optional<std::string> replay_certificate(const SuspensionCertificate& c,
                                              const std::vector<SuspensionCertificate>& all,
                                              const Params& params) {
    auto fail = [](std::string s) { return std::optional<std::string>(std::move(s)); };
    if (c.subject.empty() || !is_cyclically_reduced(c.subject) || !is_primitive(c.subject))
        return fail("subject is not a simple period");
    if (c.witness.empty() || !is_cyclically_reduced(c.witness) || !is_primitive(c.witness))
        return fail("witness is not a simple period");
    if (cyclic_equal(c.subject, c.witness)) return fail("witness is conjugate to the subject");
    if (c.level < 0) return fail("negative level");
    const long long factor = c.level == 0 ? params.p1 : 4;
    if (c.threshold != factor * static_cast<long long>(c.witness.size()))
        return fail("threshold does not match the level");
    if (static_cast<long long>(c.length) < c.threshold)
        return fail("claimed factor is shorter than the threshold");
    if (c.offset >= c.subject.size()) return fail("offset is not inside the first period");
    Word f = PeriodicWord{c.subject, c.offset, c.length}.materialize();
    if (!occurs_in_period_power(f, c.witness))
        return fail("claimed factor is not witness-periodic");
    if (c.level == 0) {
        if (c.parent != -1) return fail("level-0 certificate carries a parent");
    } else {
        if (c.parent < 0 || static_cast<std::size_t>(c.parent) >= all.size())
            return fail("parent index out of range");
        const SuspensionCertificate& par = all[static_cast<std::size_t>(c.parent)];
        if (par.level != c.level - 1) return fail("parent level mismatch");
        if (simple_period_canonical(par.subject) != simple_period_canonical(c.witness))
            return fail("parent does not certify the witness class");
    }
    return std::nullopt;
}

std::string certificates_to_json(const std::vector<SuspensionCertificate>& certs,
                                 const Alphabet& a) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SuspensionCertificate& c : certs) {
        arr.push_back({{"subject", a.print(c.subject)},
                       {"level", c.level},
                       {"witness", a.print(c.witness)},
                       {"offset", c.offset},
                       {"length", c.length},
                       {"threshold", c.threshold},
                       {"parent", c.parent}});
    }
    return arr.dump(2) + "\n";
}

std::vector<SuspensionCertificate> certificates_from_json(const std::string& text,
                                                          const Alphabet& a) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("certificate JSON: ") + e.what());
    }
    if (!j.is_array()) throw std::invalid_argument("certificate JSON: expected an array");
    std::vector<SuspensionCertificate> out;
    try {
        for (const auto& e : j) {
            SuspensionCertificate c;
            c.subject = a.parse(e.at("subject").get<std::string>());
            c.level = e.at("level").get<int>();
            c.witness = a.parse(e.at("witness").get<std::string>());
            c.offset = e.at("offset").get<std::size_t>();
            c.length = e.at("length").get<std::size_t>();
            c.threshold = e.at("threshold").get<long long>();
            c.parent = e.at("parent").get<int>();
            out.push_back(std::move(c));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("certificate JSON: ") + e.what());
    }
    return out;
}

StableSizeEstimate stable_size_estimate(const Word& A, const GradedPresentation& p, int alpha,
                                        long long M) {
    if (A.empty()) throw BadWord("stable size: empty word");
    if (!is_cyclically_reduced(A)) throw BadWord("stable size: word not cyclically reduced");
    if (alpha != 0 && alpha != 1) throw std::invalid_argument("stable size: alpha must be 0 or 1");
    if (M < 1) throw std::invalid_argument("stable size: M must be >= 1");
    StableSizeEstimate r;
    for (long long m = 1; m <= M; ++m) {
        Rational v =
            length_alpha_cyclic(A.pow(static_cast<std::size_t>(m)), p, alpha) / make_rational(m);
        if (m == 1 || v < r.estimate) {
            r.estimate = v;
            r.arg_m = m;
        }
    }
    r.h = rational_ceil(make_rational(6, 5) / r.estimate) + 1;
    return r;
}

MuBoundsReport mu_period_bounds_check(const Word& A, long long t, const GradedPresentation& p) {
    if (A.empty() || !is_cyclically_reduced(A))
        throw BadWord("mu bounds: root must be nonempty and cyclically reduced");
    if (!is_primitive(A)) throw BadWord("mu bounds: root must be primitive");
    const Word canon = simple_period_canonical(A);
    bool is_root = false;
    for (int i : p.rank1()) {
        if (simple_period_canonical(p.classes()[static_cast<std::size_t>(i)].root) == canon) {
            is_root = true;
            break;
        }
    }
    if (!is_root) throw BadWord("mu bounds: word is not a rank-1 relator root");
    const long long n = p.params().n;
    if (n <= 0) throw std::invalid_argument("mu bounds: the regime sets no exponent");
    if (t < 1 || t >= n)
        throw std::out_of_range("OUT_OF_RANGE: need 1 <= t < n, got t=" + std::to_string(t) +
                                ", n=" + std::to_string(n));
    MuBoundsReport r;
    r.mu = make_rational(t, n);
    r.lower = make_rational(t, n + t);
    r.upper = make_rational(t, n - t) + p.params().omega;
    r.basic_ok = r.lower < r.mu && r.mu < r.upper;
    if (t >= 200) {
        r.factor_low = make_rational(89, 100) * r.mu;
        r.factor_high = make_rational(112, 100) * r.mu;
        r.factor_ok = r.factor_low < r.mu && r.mu < r.factor_high;
    }
    r.ok = r.basic_ok && r.factor_ok;
    return r;
}

}  // namespace scc
