#include "scc/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace scc {

GradedPresentation::GradedPresentation(Alphabet alphabet, Params params,
                                       std::vector<RelatorClass> classes)
    : alphabet_(std::move(alphabet)), params_(std::move(params)), classes_(std::move(classes)) {
    for (const auto& c : classes_) {
        if (c.rank < 1) throw BadWord("relator rank must be >= 1");
        if (c.exponent < 1) throw BadWord("relator exponent must be >= 1");
        for (Letter l : c.root.letters())
            if (!alphabet_.contains(l)) throw BadWord("relator root uses a letter outside the alphabet");
    }
}

std::vector<int> GradedPresentation::rank1() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].rank == 1) out.push_back(static_cast<int>(i));
    return out;
}

int GradedPresentation::max_rank() const {
    int m = 0;
    for (const auto& c : classes_) m = std::max(m, c.rank);
    return m;
}

std::vector<Line> rank1_lines(const GradedPresentation& p) {
    std::vector<Line> lines;
    for (int i : p.rank1()) {
        const Word& root = p.classes()[static_cast<std::size_t>(i)].root;
        if (root.empty() || !is_cyclically_reduced(root))
            throw BadWord("relator lines need cyclically reduced nonempty roots (S0)");
        lines.push_back(Line{i, false, root});
        lines.push_back(Line{i, true, root.inverse()});
    }
    return lines;
}

LineIndex::LineIndex(const GradedPresentation& p, const Word& x)
    : lines_(rank1_lines(p)), size_(x.size()) {
    match_.resize(lines_.size());
    ext_.resize(lines_.size());
    max_ext_.assign(size_ + 1, 0);
    for (std::size_t l = 0; l < lines_.size(); ++l) {
        const Word& r = lines_[l].period;
        std::size_t pl = r.size();
        auto& m = match_[l];
        m.assign((size_ + 1) * pl, 0);
        for (std::size_t i = size_; i-- > 0;) {
            for (std::size_t o = 0; o < pl; ++o) {
                if (x[i] == r[o]) m[i * pl + o] = 1 + m[(i + 1) * pl + (o + 1) % pl];
            }
        }
        auto& e = ext_[l];
        e.assign(size_ + 1, 0);
        for (std::size_t i = 0; i < size_; ++i) {
            std::size_t best = 0;
            for (std::size_t o = 0; o < pl; ++o) best = std::max(best, m[i * pl + o]);
            e[i] = best;
            max_ext_[i] = std::max(max_ext_[i], best);
        }
    }
}

std::optional<std::size_t> LineIndex::offset_on_line(std::size_t l, std::size_t begin,
                                                     std::size_t end) const {
    std::size_t pl = lines_[l].period.size();
    for (std::size_t o = 0; o < pl; ++o)
        if (match_[l][begin * pl + o] >= end - begin) return o;
    return std::nullopt;
}

bool CheckReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& it) { return it.pass; });
}

namespace {

std::string class_tag(const GradedPresentation& p, int i) {
    const auto& c = p.classes()[static_cast<std::size_t>(i)];
    return "rank " + std::to_string(c.rank) + " root '" + p.alphabet().print(c.root) + "'";
}

std::string line_tag(const GradedPresentation& p, const Line& l) {
    return std::string("line ") + (l.inverted ? "inv(" : "(") + p.alphabet().print(p.classes()[static_cast<std::size_t>(l.relator)].root) + ")";
}

}  // namespace

CheckReport check_normalized(const GradedPresentation& p) {
    CheckReport rep{"normalized", {}};
    auto r1 = p.rank1();
    for (int i : r1) {
        const Word& root = p.classes()[static_cast<std::size_t>(i)].root;
        std::string name = "normalized[" + class_tag(p, i) + "]";
        if (root.empty()) {
            rep.items.push_back({name, false, "empty root"});
        } else if (!is_cyclically_reduced(root)) {
            rep.items.push_back({name, false, "root not cyclically reduced"});
        } else if (!is_primitive(root)) {
            rep.items.push_back({name, false, "root is a proper power"});
        } else {
            rep.items.push_back({name, true, "primitive and cyclically reduced"});
        }
    }
    for (std::size_t a = 0; a < r1.size(); ++a) {
        for (std::size_t b = a + 1; b < r1.size(); ++b) {
            const Word& ra = p.classes()[static_cast<std::size_t>(r1[a])].root;
            const Word& rb = p.classes()[static_cast<std::size_t>(r1[b])].root;
            std::string name = "normalized[" + class_tag(p, r1[a]) + " vs " + class_tag(p, r1[b]) + "]";
            if (ra.empty() || rb.empty() || !is_cyclically_reduced(ra) || !is_cyclically_reduced(rb)) {
                rep.items.push_back({name, false, "pair not comparable until both roots are cyclically reduced"});
                continue;
            }
            bool clash = cyclic_equal(ra, rb) || cyclic_equal(ra, rb.inverse());
            rep.items.push_back({name, !clash,
                                 clash ? "roots are conjugate up to inversion" : "distinct classes"});
        }
    }
    for (const auto& c : p.classes()) {
        if (c.rank >= 2)
            rep.items.push_back({"assumption[rank " + std::to_string(c.rank) + " root '" +
                                     p.alphabet().print(c.root) + "']",
                                 true, "recorded unverified (only rank 1 is checked exactly)"});
    }
    return rep;
}

CheckReport check_S0(const GradedPresentation& p) {
    CheckReport rep{"S0", {}};
    for (int i : p.rank1()) {
        const Word& root = p.classes()[static_cast<std::size_t>(i)].root;
        bool ok = is_cyclically_reduced(root);
        rep.items.push_back({"S0[" + class_tag(p, i) + "]", ok,
                             ok ? "cyclically reduced" : "not cyclically reduced"});
    }
    return rep;
}

CheckReport check_S1(const GradedPresentation& p) {
    CheckReport rep{"S1", {}};
    for (int i : p.rank1()) {
        const auto& c = p.classes()[static_cast<std::size_t>(i)];
        Rational len(static_cast<long long>(c.relator_length()));
        bool ok = len >= p.params().Omega;
        rep.items.push_back({"S1[" + class_tag(p, i) + "]", ok,
                             "relator length " + rational_str(len) + (ok ? " >= " : " < ") +
                                 rational_str(p.params().Omega)});
    }
    return rep;
}

CheckReport check_S2(const GradedPresentation& p) {
    CheckReport rep{"S2", {}};
    std::vector<Line> lines;
    try {
        lines = rank1_lines(p);
        for (const auto& l : lines) {
            if (!is_primitive(l.period)) {
                rep.items.push_back({"S2[preconditions]", false,
                                     line_tag(p, l) + " has a non-primitive period"});
                return rep;
            }
        }
    } catch (const BadWord& e) {
        rep.items.push_back({"S2[preconditions]", false, e.what()});
        return rep;
    }
    for (const auto& l1 : lines) {
        for (const auto& l2 : lines) {
            if (&l1 == &l2 || cyclic_equal(l1.period, l2.period)) continue;
            auto common = longest_common_periodic_factor(l1.period, l2.period);
            const auto& c1 = p.classes()[static_cast<std::size_t>(l1.relator)];
            Rational threshold = p.params().lambda * Rational(static_cast<long long>(c1.relator_length()));
            bool ok = Rational(static_cast<long long>(common.length)) < threshold;
            rep.items.push_back(
                {"S2[" + line_tag(p, l1) + " vs " + line_tag(p, l2) + "]", ok,
                 "common periodic factor " + std::to_string(common.length) +
                     (ok ? " < " : " >= ") + rational_str(threshold)});
        }
    }
    if (rep.items.empty()) rep.items.push_back({"S2[vacuous]", true, "no distinct line pairs"});
    return rep;
}

CheckReport check_S3(const GradedPresentation& p) {
    CheckReport rep{"S3", {}};
    for (int i : p.rank1()) {
        const auto& c = p.classes()[static_cast<std::size_t>(i)];
        std::string name = "S3[" + class_tag(p, i) + "]";
        Word core = cyclic_reduce(c.root).core;
        if (core.empty()) {
            rep.items.push_back({name, false, "trivial relator is conjugate to its inverse"});
            continue;
        }
        bool clash = cyclic_equal(core, core.inverse());
        rep.items.push_back({name, !clash,
                             clash ? "relator conjugate to its inverse"
                                   : "relator not conjugate to its inverse"});
    }
    return rep;
}

CheckReport check_all(const GradedPresentation& p) {
    CheckReport rep{"check", {}};
    using Part = CheckReport (*)(const GradedPresentation&);
    for (Part part : {Part(&check_normalized), Part(&check_S0), Part(&check_S1), Part(&check_S2),
                      Part(&check_S3)}) {
        CheckReport sub = (*part)(p);
        rep.items.insert(rep.items.end(), sub.items.begin(), sub.items.end());
    }
    return rep;
}

PeriodicWord Piece::occurrence(const GradedPresentation& p) const {
    if (relator < 0) return PeriodicWord{Word(), 0, 0};
    return PeriodicWord{p.classes()[static_cast<std::size_t>(relator)].root, offset, length};
}

std::vector<Piece> enumerate_pieces(const GradedPresentation& p, const Rational& min_mu) {
    std::vector<Piece> out;
    if (min_mu <= 0) out.push_back(Piece{-1, 0, 0, Rational(0)});
    for (int i : p.rank1()) {
        const auto& c = p.classes()[static_cast<std::size_t>(i)];
        if (c.root.empty() || !is_cyclically_reduced(c.root))
            throw BadWord("enumerate_pieces needs cyclically reduced nonempty roots (S0)");
        std::size_t total = c.relator_length();
        for (std::size_t offset = 0; offset < c.root.size(); ++offset) {
            for (std::size_t length = 1; length <= total; ++length) {
                Rational mu(static_cast<long long>(length));
                mu /= Rational(static_cast<long long>(total));
                if (mu >= min_mu) out.push_back(Piece{i, offset, length, mu});
            }
        }
    }
    return out;
}

Rational resolve_threshold(const Params& params, const std::string& text) {
    if (text == "xi0") return params.xi0;
    if (text == "xi1") return params.xi1;
    if (text == "xi2") return params.xi2;
    if (text == "rho") return params.rho;
    return parse_rational(text);
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

GradedPresentation parse_presentation(std::istream& in) {
    std::optional<Alphabet> alphabet;
    std::optional<std::string> mode;
    std::optional<long long> n, p0, p1;
    std::optional<Rational> lambda, Omega;
    std::vector<std::pair<int, Word>> relators;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw BadWord("presentation line " + std::to_string(lineno) + ": expected 'key: value'");
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        try {
            if (key == "alphabet") {
                std::string symbols;
                for (char ch : value)
                    if (ch != ' ' && ch != '\t') symbols.push_back(ch);
                alphabet = Alphabet(symbols);
            } else if (key == "mode") {
                if (value != "strict" && value != "experimental")
                    throw BadWord("mode must be strict or experimental");
                mode = value;
            } else if (key == "n") {
                n = std::stoll(value);
            } else if (key == "lambda") {
                lambda = parse_rational(value);
            } else if (key == "Omega") {
                Omega = parse_rational(value);
            } else if (key == "p0") {
                p0 = std::stoll(value);
            } else if (key == "p1") {
                p1 = std::stoll(value);
            } else if (key.rfind("rank ", 0) == 0) {
                int rank = std::stoi(key.substr(5));
                if (!alphabet) throw BadWord("alphabet must be declared before relators");
                relators.emplace_back(rank, alphabet->parse(value));
            } else {
                throw BadWord("unknown key '" + key + "'");
            }
        } catch (const std::exception& e) {
            throw BadWord("presentation line " + std::to_string(lineno) + ": " + e.what());
        }
    }

    if (!alphabet) throw BadWord("presentation needs an 'alphabet:' line");
    if (!mode) throw BadWord("presentation needs a 'mode:' line");
    if (!n) throw BadWord("presentation needs an 'n:' line (the exponent)");

    Params params = *mode == "strict"
                        ? make_strict_params(*n)
                        : make_experimental_params(
                              *n,
                              lambda ? *lambda : Rational(80, *n),
                              Omega ? *Omega : Rational(*n, 4),
                              p0 ? *p0 : 39, p1 ? *p1 : 65);
    if (*mode == "strict" && (lambda || Omega || p0 || p1))
        throw BadWord("strict presentations fix lambda, Omega, p0, p1 from n; do not override them");

    std::vector<RelatorClass> classes;
    for (auto& [rank, root] : relators) classes.push_back(RelatorClass{rank, root, *n});
    return GradedPresentation(*alphabet, params, std::move(classes));
}

GradedPresentation parse_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadWord("cannot open presentation file: " + path);
    return parse_presentation(in);
}

}  // namespace scc
