#include <CLI11.hpp>
#include <json.hpp>

#include "scc/accept.hpp"
#include "scc/aperiodic.hpp"
#include "scc/burnside.hpp"
#include "scc/dehn.hpp"
#include "scc/diagram.hpp"
#include "scc/length.hpp"
#include "scc/params.hpp"
#include "scc/presentation.hpp"
#include "scc/rational.hpp"
#include "scc/tiling.hpp"
#include "scc/word.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace scc;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

nlohmann::json report_json(const CheckReport& rep) {
    nlohmann::json items = nlohmann::json::array();
    for (const CheckItem& it : rep.items)
        items.push_back({{"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
    return {{"title", rep.title}, {"pass", rep.all_pass()}, {"items", items}};
}

int print_report(const CheckReport& rep, bool json) {
    if (json) {
        std::cout << report_json(rep).dump(2) << "\n";
    } else {
        std::cout << rep.title << "\n";
        for (const CheckItem& it : rep.items) {
            std::cout << "  [" << (it.pass ? "PASS" : "FAIL") << "] " << it.name;
            if (!it.detail.empty()) std::cout << ": " << it.detail;
            std::cout << "\n";
        }
        std::cout << (rep.all_pass() ? "all checks passed" : "checks FAILED") << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

void print_trace_steps(const ReductionTrace& t, const Alphabet& a, std::ostream& os) {
    int k = 0;
    for (const ReductionStep& s : t.steps) {
        os << "step " << ++k << ": pos=" << s.begin << ".." << s.end << " relator=R" << s.relator
           << " inv=" << (s.inverted ? 1 : 0) << " shift=" << s.line_offset
           << " removed=" << s.removed.size() << " replaced=" << s.replacement.size() << "\n";
    }
    os << "steps: " << t.steps.size() << "\n";
    os << "output: " << (t.output.empty() ? std::string("1") : a.print(t.output)) << "\n";
    os << "complete: " << (t.complete ? "true" : "false") << "\n";
}

nlohmann::json trace_json(const ReductionTrace& t, const Alphabet& a) {
    nlohmann::json steps = nlohmann::json::array();
    for (const ReductionStep& s : t.steps)
        steps.push_back({{"begin", s.begin},
                         {"end", s.end},
                         {"relator", s.relator},
                         {"inverted", s.inverted},
                         {"shift", s.line_offset},
                         {"removed", a.print(s.removed)},
                         {"replacement", a.print(s.replacement)}});
    return {{"input", a.print(t.input)},
            {"steps", steps},
            {"output", a.print(t.output)},
            {"complete", t.complete}};
}

// The tiling argument accepts either a bare tiling document or a diagram-style
// wrapper holding one under a "tiling" key.
Tiling load_tiling_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("tiling JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("tiling")) return tiling_from_json(j.at("tiling").dump());
    return tiling_from_json(text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "scc - exact word algebra, graded length, Dehn reduction, diagram curvature,\n"
        "and graded relator sets for Burnside-type quotients"};
    app.require_subcommand(1);
    int rc = 0;

    // ---- check ----
    std::string check_file;
    bool check_json = false;
    auto* c_check = app.add_subcommand("check", "Verify normalization and the S-conditions");
    c_check->add_option("file", check_file, "presentation file")->required();
    c_check->add_flag("--json", check_json, "JSON output");
    c_check->callback([&] {
        GradedPresentation p = parse_presentation_file(check_file);
        rc = print_report(check_all(p), check_json);
    });

    // ---- pieces ----
    std::string pieces_file, pieces_min = "0";
    bool pieces_json = false;
    auto* c_pieces = app.add_subcommand("pieces", "Enumerate relator pieces above a measure");
    c_pieces->add_option("file", pieces_file)->required();
    c_pieces->add_option("--min-mu", pieces_min,
                         "threshold: a rational or one of xi0, xi1, xi2, rho");
    c_pieces->add_flag("--json", pieces_json);
    c_pieces->callback([&] {
        GradedPresentation p = parse_presentation_file(pieces_file);
        Rational min_mu = resolve_threshold(p.params(), pieces_min);
        std::vector<Piece> ps = enumerate_pieces(p, min_mu);
        if (pieces_json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const Piece& q : ps)
                arr.push_back({{"relator", q.relator},
                               {"offset", q.offset},
                               {"length", q.length},
                               {"mu", rational_str(q.mu)}});
            std::cout << nlohmann::json{{"min_mu", rational_str(min_mu)}, {"pieces", arr}}.dump(2)
                      << "\n";
        } else {
            std::cout << "min mu: " << rational_str(min_mu) << "\n";
            std::cout << "pieces: " << ps.size() << "\n";
            for (const Piece& q : ps) {
                if (q.relator < 0) {
                    std::cout << "empty piece (mu=0)\n";
                    continue;
                }
                std::cout << "relator=R" << q.relator << " offset=" << q.offset
                          << " length=" << q.length << " mu=" << rational_str(q.mu) << "\n";
            }
        }
        rc = 0;
    });

    // ---- length ----
    std::string len_file, len_word;
    int len_alpha = 1;
    bool len_cyclic = false, len_witness = false, len_json = false;
    auto* c_len = app.add_subcommand("length", "Graded length of a word");
    c_len->add_option("file", len_file)->required();
    c_len->add_option("word", len_word)->required();
    c_len->add_option("--alpha", len_alpha, "grading rank (0 or 1)");
    c_len->add_flag("--cyclic", len_cyclic, "minimum over cyclic shifts");
    c_len->add_flag("--witness", len_witness, "print an optimal fragmentation");
    c_len->add_flag("--json", len_json);
    c_len->callback([&] {
        GradedPresentation p = parse_presentation_file(len_file);
        Word w = p.alphabet().parse(len_word);
        Word shown = w;
        Rational value;
        std::size_t shift = 0;
        if (len_cyclic) {
            value = length_alpha_cyclic(w, p, len_alpha, &shift);
            std::vector<Letter> rot;
            for (std::size_t i = 0; i < w.size(); ++i) rot.push_back(w[(shift + i) % w.size()]);
            shown = Word(std::move(rot));
        } else {
            value = length_alpha_value(w, p, len_alpha);
        }
        LengthResult res{value, {}};
        if (len_witness) res = length_alpha(shown, p, len_alpha);
        if (len_json) {
            nlohmann::json j{{"alpha", len_alpha},
                             {"value", rational_str(value)},
                             {"cyclic", len_cyclic}};
            if (len_cyclic) j["shift"] = shift;
            if (len_witness) {
                nlohmann::json parts = nlohmann::json::array();
                for (const FragPart& fp : res.witness.parts)
                    parts.push_back({{"begin", fp.begin},
                                     {"end", fp.end},
                                     {"rank", fp.rank},
                                     {"relator", fp.relator}});
                j["witness"] = parts;
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "value: " << rational_str(value) << "\n";
            if (len_cyclic) std::cout << "shift: " << shift << "\n";
            if (len_witness) {
                std::cout << "witness:";
                for (const FragPart& fp : res.witness.parts)
                    std::cout << " " << fp.begin << ".." << fp.end << ":" << fp.rank;
                std::cout << "\n";
            }
        }
        rc = 0;
    });

    // ---- reduce ----
    std::string red_file, red_word;
    bool red_json = false;
    auto* c_red = app.add_subcommand("reduce", "Dehn-reduce a word, printing the trace");
    c_red->add_option("file", red_file)->required();
    c_red->add_option("word", red_word)->required();
    c_red->add_flag("--json", red_json);
    c_red->callback([&] {
        GradedPresentation p = parse_presentation_file(red_file);
        Word w = free_reduce(p.alphabet().parse(red_word));
        ReductionTrace t = dehn_reduce(w, p);
        if (red_json)
            std::cout << trace_json(t, p.alphabet()).dump(2) << "\n";
        else
            print_trace_steps(t, p.alphabet(), std::cout);
        rc = 0;
    });

    // ---- wp ----
    std::string wp_file, wp_word;
    bool wp_json = false;
    auto* c_wp = app.add_subcommand("wp", "Word problem in the rank-1 quotient");
    c_wp->add_option("file", wp_file)->required();
    c_wp->add_option("word", wp_word)->required();
    c_wp->add_flag("--json", wp_json);
    c_wp->callback([&] {
        GradedPresentation p = parse_presentation_file(wp_file);
        WordProblemAnswer ans = word_problem_rank1(p.alphabet().parse(wp_word), p);
        if (wp_json) {
            std::cout << nlohmann::json{{"trivial", ans.trivial},
                                        {"exact", ans.exact},
                                        {"steps", ans.trace.steps.size()}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << (ans.trivial ? "true" : "false") << "\n";
            std::cout << "exact: " << (ans.exact ? "true" : "false")
                      << "  steps: " << ans.trace.steps.size() << "\n";
        }
        rc = 0;
    });

    // ---- close1 ----
    std::string cl_file, cl_x, cl_y;
    std::size_t cl_budget = 0;
    bool cl_json = false;
    auto* c_cl = app.add_subcommand("close1", "Bridge-closeness of two words at rank 1");
    c_cl->add_option("file", cl_file)->required();
    c_cl->add_option("x", cl_x)->required();
    c_cl->add_option("y", cl_y)->required();
    c_cl->add_option("--budget", cl_budget, "piece length budget (0 = the full relator length)");
    c_cl->add_flag("--json", cl_json);
    c_cl->callback([&] {
        GradedPresentation p = parse_presentation_file(cl_file);
        std::size_t budget = cl_budget;
        if (budget == 0)
            for (int i : p.rank1())
                budget = std::max(budget,
                                  p.classes()[static_cast<std::size_t>(i)].relator_length());
        CloseResult res = close_in_rank1(p.alphabet().parse(cl_x), p.alphabet().parse(cl_y), p,
                                         budget);
        std::string status = res.status == CloseStatus::Found          ? "found"
                             : res.status == CloseStatus::NotClose     ? "not-close"
                                                                       : "budget-exceeded";
        if (cl_json) {
            nlohmann::json j{{"status", status}, {"budget", budget}};
            if (res.witness) {
                j["u"] = p.alphabet().print(res.witness->u.word);
                j["v"] = p.alphabet().print(res.witness->v.word);
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "status: " << status << " (budget " << budget << ")\n";
            if (res.witness)
                std::cout << "u: " << p.alphabet().print(res.witness->u.word)
                          << "\nv: " << p.alphabet().print(res.witness->v.word) << "\n";
        }
        rc = 0;
    });

    // ---- gb-verify ----
    std::string gb_tiling, gb_weights;
    bool gb_json = false;
    auto* c_gb = app.add_subcommand("gb-verify",
                                    "Check the curvature identity of a tiling and connection");
    c_gb->add_option("tiling", gb_tiling, "tiling JSON (or a diagram file with a tiling key)")
        ->required();
    c_gb->add_option("weights", gb_weights, "connection JSON")->required();
    c_gb->add_flag("--json", gb_json);
    c_gb->callback([&] {
        Tiling t = load_tiling_text(slurp(gb_tiling));
        Connection w = complete_connection(connection_from_json(slurp(gb_weights)));
        CheckReport tv = tiling_validate(t);
        CheckReport cv = connection_validate(t, w);
        if (!tv.all_pass() || !cv.all_pass()) {
            if (gb_json) {
                std::cout << nlohmann::json{{"tiling", report_json(tv)},
                                            {"connection", report_json(cv)},
                                            {"pass", false}}
                                 .dump(2)
                          << "\n";
            } else {
                print_report(tv, false);
                print_report(cv, false);
            }
            rc = 1;
            return;
        }
        CurvatureReport cr = curvature(t, w);
        if (gb_json) {
            nlohmann::json tiles = nlohmann::json::array();
            for (const TileCurvature& tc : cr.per_tile)
                tiles.push_back({{"tile", tc.tile}, {"kappa", rational_str(tc.kappa)}});
            std::cout << nlohmann::json{{"interior", rational_str(cr.interior)},
                                        {"boundary", rational_str(cr.boundary)},
                                        {"chi", rational_str(cr.chi)},
                                        {"pass", cr.ok},
                                        {"tiles", tiles}}
                             .dump(2)
                      << "\n";
        } else {
            for (const TileCurvature& tc : cr.per_tile)
                std::cout << "tile " << tc.tile << ": kappa = " << rational_str(tc.kappa) << "\n";
            std::cout << "interior: " << rational_str(cr.interior) << "\n";
            std::cout << "boundary: " << rational_str(cr.boundary) << "\n";
            std::cout << "chi: " << rational_str(cr.chi) << "\n";
            std::cout << "identity: " << (cr.ok ? "holds" : "VIOLATED") << "\n";
        }
        rc = cr.ok ? 0 : 1;
    });

    // ---- diagram-from-trace ----
    std::string dt_file, dt_word, dt_out;
    auto* c_dt = app.add_subcommand("diagram-from-trace",
                                    "Build and validate the diagram of a Dehn reduction");
    c_dt->add_option("file", dt_file)->required();
    c_dt->add_option("word", dt_word)->required();
    c_dt->add_option("--out", dt_out, "write diagram JSON here instead of stdout");
    c_dt->callback([&] {
        GradedPresentation p = parse_presentation_file(dt_file);
        Word w = free_reduce(p.alphabet().parse(dt_word));
        ReductionTrace t = dehn_reduce(w, p);
        if (!t.output.empty()) {
            std::cerr << "NOT_TRIVIAL: reduction output is nonempty; no disk diagram exists\n";
            rc = 1;
            return;
        }
        Diagram d = build_dehn_diagram(t, p);
        CheckReport rep = validate(d, p);
        std::string js = diagram_to_json(d);
        if (dt_out.empty())
            std::cout << js;
        else
            spill(dt_out, js);
        if (!rep.all_pass()) {
            print_report(rep, false);
            rc = 1;
            return;
        }
        if (!dt_out.empty())
            std::cout << "diagram: " << d.vertices.size() << " vertices, " << d.darts.size() / 2
                      << " edges, " << d.faces.size() << " faces -> " << dt_out << "\n";
        rc = 0;
    });

    // ---- build-e1 ----
    std::string e1_file, e1_certs;
    std::size_t e1_maxlen = 0;
    bool e1_json = false;
    auto* c_e1 = app.add_subcommand("build-e1", "Elementary rank-1 periods over a bounded universe");
    c_e1->add_option("file", e1_file)->required();
    c_e1->add_option("--max-len", e1_maxlen, "universe length bound")->required();
    c_e1->add_option("--emit-certs", e1_certs, "write exclusion certificates to this JSON file");
    c_e1->add_flag("--json", e1_json);
    c_e1->callback([&] {
        GradedPresentation p = parse_presentation_file(e1_file);
        ESet es = build_E1(p.alphabet(), e1_maxlen, p.params());
        if (!e1_certs.empty()) spill(e1_certs, certificates_to_json(es.excluded, p.alphabet()));
        if (e1_json) {
            nlohmann::json members = nlohmann::json::array();
            for (const SimplePeriod& m : es.members) members.push_back(p.alphabet().print(m.word));
            nlohmann::json j{{"max_len", es.max_len},
                             {"members", members},
                             {"excluded", nlohmann::json::parse(
                                              certificates_to_json(es.excluded, p.alphabet()))}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "max length: " << es.max_len << "\n";
            std::cout << "members: " << es.members.size() << "\n";
            std::cout << "excluded: " << es.excluded.size() << "\n";
            for (const SimplePeriod& m : es.members)
                std::cout << "member: " << p.alphabet().print(m.word) << "\n";
            for (const SuspensionCertificate& c : es.excluded)
                std::cout << "excluded: " << p.alphabet().print(c.subject) << " level " << c.level
                          << " witness " << p.alphabet().print(c.witness) << " length " << c.length
                          << " threshold " << c.threshold << "\n";
        }
        rc = 0;
    });

    // ---- suspend ----
    std::string su_file, su_word;
    bool su_json = false;
    auto* c_su = app.add_subcommand("suspend", "Level-0 suspension check for one simple period");
    c_su->add_option("file", su_file)->required();
    c_su->add_option("word", su_word)->required();
    c_su->add_flag("--json", su_json);
    c_su->callback([&] {
        GradedPresentation p = parse_presentation_file(su_file);
        Word w = p.alphabet().parse(su_word);
        auto cert = check_suspended_level0(w, p.alphabet(), p.params());
        if (su_json) {
            nlohmann::json j{{"suspended", cert.has_value()}};
            if (cert) {
                std::vector<SuspensionCertificate> one{*cert};
                j["certificate"] =
                    nlohmann::json::parse(certificates_to_json(one, p.alphabet()))[0];
            }
            std::cout << j.dump(2) << "\n";
        } else if (cert) {
            std::cout << "suspended at level 0: witness " << p.alphabet().print(cert->witness)
                      << " offset " << cert->offset << " length " << cert->length << " threshold "
                      << cert->threshold << "\n";
        } else {
            std::cout << "not suspended at level 0\n";
        }
        rc = 0;
    });

    // ---- stable-size ----
    std::string ss_file, ss_word;
    int ss_alpha = 1;
    long long ss_M = 20;
    bool ss_json = false;
    auto* c_ss = app.add_subcommand("stable-size", "Upper-bound estimate of the stable size");
    c_ss->add_option("file", ss_file)->required();
    c_ss->add_option("word", ss_word)->required();
    c_ss->add_option("--alpha", ss_alpha, "grading rank (0 or 1)");
    c_ss->add_option("-M,--max-power", ss_M, "powers to scan");
    c_ss->add_flag("--json", ss_json);
    c_ss->callback([&] {
        GradedPresentation p = parse_presentation_file(ss_file);
        StableSizeEstimate est =
            stable_size_estimate(p.alphabet().parse(ss_word), p, ss_alpha, ss_M);
        std::ostringstream h;
        h << est.h;
        if (ss_json) {
            std::cout << nlohmann::json{{"estimate", rational_str(est.estimate)},
                                        {"arg_m", est.arg_m},
                                        {"h", h.str()},
                                        {"M", ss_M}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "estimate: " << rational_str(est.estimate)
                      << " (upper bound; minimum at m=" << est.arg_m << " of " << ss_M << ")\n";
            std::cout << "h: " << h.str() << "\n";
        }
        rc = 0;
    });

    // ---- mu-bounds ----
    std::string mu_file, mu_root;
    long long mu_t = 0;
    bool mu_json = false;
    auto* c_mu = app.add_subcommand("mu-bounds", "Exact period-measure bounds for root^t");
    c_mu->add_option("file", mu_file)->required();
    c_mu->add_option("root", mu_root)->required();
    c_mu->add_option("-t,--periods", mu_t, "number of periods")->required();
    c_mu->add_flag("--json", mu_json);
    c_mu->callback([&] {
        GradedPresentation p = parse_presentation_file(mu_file);
        MuBoundsReport r = mu_period_bounds_check(p.alphabet().parse(mu_root), mu_t, p);
        if (mu_json) {
            std::cout << nlohmann::json{{"mu", rational_str(r.mu)},
                                        {"lower", rational_str(r.lower)},
                                        {"upper", rational_str(r.upper)},
                                        {"basic_ok", r.basic_ok},
                                        {"factor_ok", r.factor_ok},
                                        {"ok", r.ok}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "mu: " << rational_str(r.mu) << "\n";
            std::cout << "bounds: " << rational_str(r.lower) << " < mu < " << rational_str(r.upper)
                      << " -> " << (r.basic_ok ? "ok" : "VIOLATED") << "\n";
            if (mu_t >= 200)
                std::cout << "factor band: " << rational_str(r.factor_low) << " < mu < "
                          << rational_str(r.factor_high) << " -> "
                          << (r.factor_ok ? "ok" : "VIOLATED") << "\n";
            else
                std::cout << "factor band: not applicable (t < 200)\n";
        }
        rc = r.ok ? 0 : 1;
    });

    // ---- aperiodic ----
    std::size_t ap_len = 0;
    auto* c_ap = app.add_subcommand("aperiodic", "Emit a cube-free stream prefix");
    c_ap->add_option("--len", ap_len, "prefix length")->required();
    c_ap->callback([&] {
        Alphabet a("ab");
        std::cout << a.print(thue_morse_prefix(ap_len)) << "\n";
        rc = 0;
    });

    // ---- infiniteness ----
    std::string inf_file;
    std::size_t inf_count = 0;
    bool inf_certify = false, inf_json = false;
    auto* c_inf = app.add_subcommand("infiniteness",
                                     "Pairwise-distinct quotient elements with certificates");
    c_inf->add_option("file", inf_file)->required();
    c_inf->add_option("--count", inf_count, "how many elements")->required();
    c_inf->add_flag("--certify", inf_certify, "print separation certificates");
    c_inf->add_flag("--json", inf_json);
    c_inf->callback([&] {
        GradedPresentation p = parse_presentation_file(inf_file);
        std::vector<DistinctElement> els = distinct_elements(inf_count, p);
        if (inf_json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const DistinctElement& e : els) {
                nlohmann::json j{{"word", p.alphabet().print(e.word)}};
                if (inf_certify) {
                    j["factor"] = p.alphabet().print(e.certificate.factor);
                    j["power"] = e.certificate.power;
                }
                arr.push_back(j);
            }
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const DistinctElement& e : els) {
                std::cout << p.alphabet().print(e.word);
                if (inf_certify)
                    std::cout << "  factor=" << p.alphabet().print(e.certificate.factor)
                              << " power=" << e.certificate.power << " bound=" << POWER_BOUND;
                std::cout << "\n";
            }
        }
        rc = 0;
    });

    // ---- accept ----
    std::string acc_suite = "all";
    std::uint64_t acc_seed = 0;
    bool acc_list = false;
    auto* c_acc = app.add_subcommand("accept", "Run the acceptance criteria");
    c_acc->add_option("suite", acc_suite, "suite name (default: all)");
    c_acc->add_option("--seed", acc_seed, "seed for the randomized criteria");
    c_acc->add_flag("--list", acc_list, "list suite names");
    c_acc->callback([&] {
        if (acc_list) {
            for (const std::string& s : acceptance_suite_names()) std::cout << s << "\n";
            rc = 0;
            return;
        }
        std::vector<int> ids = acceptance_suite(acc_suite);
        std::cout << "suite: " << acc_suite << "\n";
        std::cout << "seed: " << acc_seed << "\n";
        std::vector<CriterionResult> results = run_acceptance(ids, acc_seed);
        int passed = 0;
        for (const CriterionResult& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << std::setw(2) << r.id << " "
                      << std::left << std::setw(24) << r.name << std::right << " " << r.detail
                      << "\n";
            std::cerr << "criterion " << r.id << ": " << std::fixed << std::setprecision(2)
                      << r.seconds << " s\n";
            if (r.pass) ++passed;
        }
        std::cout << "passed " << passed << "/" << results.size() << "\n";
        rc = passed == static_cast<int>(results.size()) ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const StrictViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const std::string& s : e.issues) std::cerr << "  " << s << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
