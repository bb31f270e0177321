#include "scc/diagram.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace scc {

namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& s : parts) {
        if (!out.empty()) out += "; ";
        out += s;
    }
    return out;
}

// Collects at most a handful of violation strings so reports stay readable.
class Gripes {
public:
    void add(std::string s) {
        ++count_;
        if (items_.size() < 5) items_.push_back(std::move(s));
    }
    bool clean() const { return count_ == 0; }
    std::string detail() const {
        if (count_ == 0) return "";
        std::string out = join(items_);
        if (count_ > items_.size())
            out += "; +" + std::to_string(count_ - items_.size()) + " more";
        return out;
    }

private:
    std::size_t count_ = 0;
    std::vector<std::string> items_;
};

}  // namespace

CheckReport validate(const Diagram& d, const GradedPresentation& p) {
    CheckReport rep;
    rep.title = "diagram";

    std::map<int, std::size_t> dart_ix;
    std::set<int> vertex_ids;
    {
        Gripes g;
        for (std::size_t i = 0; i < d.darts.size(); ++i) {
            if (!dart_ix.emplace(d.darts[i].id, i).second)
                g.add("duplicate dart id " + std::to_string(d.darts[i].id));
        }
        for (int v : d.vertices) {
            if (!vertex_ids.insert(v).second) g.add("duplicate vertex id " + std::to_string(v));
        }
        for (const Dart& dt : d.darts) {
            if (!dart_ix.count(dt.inverse))
                g.add("dart " + std::to_string(dt.id) + " has unknown inverse");
            if (!dart_ix.count(dt.next)) g.add("dart " + std::to_string(dt.id) + " has unknown next");
            if (!vertex_ids.count(dt.origin))
                g.add("dart " + std::to_string(dt.id) + " has unknown origin");
        }
        for (const Face& f : d.faces) {
            for (int id : f.cycle)
                if (!dart_ix.count(id)) g.add("face cycle names unknown dart " + std::to_string(id));
        }
        rep.items.push_back({"IDS", g.clean(), g.detail()});
        if (!g.clean()) return rep;  // later checks would chase bad references
    }

    const auto dart = [&](int id) -> const Dart& { return d.darts[dart_ix.at(id)]; };

    {
        Gripes g;
        for (const Dart& dt : d.darts) {
            if (dt.inverse == dt.id) g.add("dart " + std::to_string(dt.id) + " is its own inverse");
            else if (dart(dt.inverse).inverse != dt.id)
                g.add("involution broken at dart " + std::to_string(dt.id));
        }
        rep.items.push_back({"INVOLUTION", g.clean(), g.detail()});
    }
    {
        Gripes g;
        for (const Dart& dt : d.darts) {
            const Dart& inv = dart(dt.inverse);
            const bool ok = dt.label.has_value() == inv.label.has_value() &&
                            (!dt.label || inv.label == dt.label->inverse());
            if (!ok) g.add("label(inverse) != inverse(label) at dart " + std::to_string(dt.id));
            if (dt.label && !d.alphabet.contains(*dt.label))
                g.add("dart " + std::to_string(dt.id) + " labeled outside the alphabet");
        }
        rep.items.push_back({"LABELS", g.clean(), g.detail()});
    }
    {
        Gripes g;
        std::map<int, int> indeg;
        for (const Dart& dt : d.darts) ++indeg[dt.next];
        for (const Dart& dt : d.darts) {
            if (indeg[dt.id] != 1)
                g.add("dart " + std::to_string(dt.id) + " is next of " +
                      std::to_string(indeg[dt.id]) + " darts");
        }
        rep.items.push_back({"NEXT_PERMUTATION", g.clean(), g.detail()});
    }
    {
        Gripes g;
        std::set<int> seen;
        for (std::size_t fi = 0; fi < d.faces.size(); ++fi) {
            const Face& f = d.faces[fi];
            for (std::size_t i = 0; i < f.cycle.size(); ++i) {
                const int id = f.cycle[i];
                if (!seen.insert(id).second)
                    g.add("dart " + std::to_string(id) + " appears in two face cycles");
                const int succ = f.cycle[(i + 1) % f.cycle.size()];
                if (dart(id).next != succ)
                    g.add("face " + std::to_string(fi) + " cycle disagrees with next at dart " +
                          std::to_string(id));
            }
        }
        for (const Dart& dt : d.darts)
            if (!seen.count(dt.id)) g.add("dart " + std::to_string(dt.id) + " is in no face");
        rep.items.push_back({"FACES_PARTITION", g.clean(), g.detail()});
    }
    {
        Gripes g;
        for (const Dart& dt : d.darts) {
            if (dart(dt.next).origin != dart(dt.inverse).origin)
                g.add("origin(next) != head at dart " + std::to_string(dt.id));
        }
        rep.items.push_back({"ORIGIN", g.clean(), g.detail()});
    }
    {
        Gripes g;
        if (d.vertices.empty()) {
            g.add("no vertices");
        } else {
            std::map<int, std::vector<int>> adj;
            for (const Dart& dt : d.darts)
                adj[dt.origin].push_back(dart(dt.inverse).origin);
            std::set<int> seen{d.vertices.front()};
            std::vector<int> queue{d.vertices.front()};
            while (!queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                for (int u : adj[v])
                    if (seen.insert(u).second) queue.push_back(u);
            }
            for (int v : d.vertices)
                if (!seen.count(v)) g.add("vertex " + std::to_string(v) + " unreachable");
        }
        rep.items.push_back({"CONNECTED", g.clean(), g.detail()});
    }
    {
        Gripes g;
        if (d.darts.size() % 2 != 0) g.add("odd dart count");
        const long long vee = static_cast<long long>(d.vertices.size());
        const long long e = static_cast<long long>(d.darts.size() / 2);
        const long long f = static_cast<long long>(d.faces.size());
        if (vee - e + f != 2)
            g.add("V - E + F = " + std::to_string(vee - e + f) + ", expected 2");
        rep.items.push_back({"EULER", g.clean(), g.detail()});
    }
    {
        Gripes g;
        std::size_t external = 0;
        for (const Face& f : d.faces)
            if (f.kind == FaceKind::External) ++external;
        if (external == 0) g.add("no external face");
        rep.items.push_back({"EXTERNAL", g.clean(), g.detail()});
    }
    {
        Gripes g;
        for (std::size_t fi = 0; fi < d.faces.size(); ++fi) {
            const Face& f = d.faces[fi];
            if (f.kind != FaceKind::Cell) continue;
            Word bw;
            for (int id : f.cycle)
                if (auto l = dart(id).label) bw.push_back(*l);
            const std::string tag = "cell " + std::to_string(fi);
            if (f.rank == 0) {
                const bool ok =
                    bw.empty() || (bw.size() == 2 && bw[1] == bw[0].inverse());
                if (!ok) g.add(tag + " rank-0 label is not empty or x x^-1");
                continue;
            }
            bool ok = false;
            for (const RelatorClass& cls : p.classes()) {
                if (cls.rank != f.rank || cls.root.empty() || !is_cyclically_reduced(cls.root))
                    continue;
                if (bw.size() != cls.relator_length()) continue;
                if (occurs_in_period_power(bw, cls.root) ||
                    occurs_in_period_power(bw, cls.root.inverse())) {
                    ok = true;
                    break;
                }
            }
            if (!ok)
                g.add(tag + " label " + d.alphabet.print(bw) + " is no rank-" +
                      std::to_string(f.rank) + " relator");
        }
        rep.items.push_back({"CELL_LABEL", g.clean(), g.detail()});
    }
    return rep;
}

long long euler_characteristic(const Diagram& d) {
    long long internal = 0;
    for (const Face& f : d.faces)
        if (f.kind == FaceKind::Cell) ++internal;
    return static_cast<long long>(d.vertices.size()) -
           static_cast<long long>(d.darts.size() / 2) + internal;
}

std::vector<Word> boundary_labels(const Diagram& d) {
    std::map<int, std::size_t> dart_ix;
    for (std::size_t i = 0; i < d.darts.size(); ++i) dart_ix.emplace(d.darts[i].id, i);
    std::vector<Word> out;
    for (const Face& f : d.faces) {
        if (f.kind != FaceKind::External) continue;
        Word w;
        for (int id : f.cycle)
            if (auto l = d.darts[dart_ix.at(id)].label) w.push_back(*l);
        out.push_back(std::move(w));
    }
    return out;
}

CheckReport validate_marking(const Diagram& d, const BoundaryMarking& m,
                             const GradedPresentation* p) {
    CheckReport rep;
    rep.title = "marking";
    std::map<int, std::size_t> dart_ix;
    for (std::size_t i = 0; i < d.darts.size(); ++i) dart_ix.emplace(d.darts[i].id, i);

    Gripes shape, cover, labels;
    std::set<std::size_t> marked_faces;
    for (std::size_t li = 0; li < m.loops.size(); ++li) {
        const BoundaryLoop& loop = m.loops[li];
        const std::string tag = "loop " + std::to_string(li);
        if (loop.face >= d.faces.size() || d.faces[loop.face].kind != FaceKind::External) {
            shape.add(tag + " does not name an external face");
            continue;
        }
        if (!marked_faces.insert(loop.face).second)
            shape.add(tag + " marks an already-marked face");
        if (loop.pieces.empty()) {
            shape.add(tag + " has no pieces");
            continue;
        }
        if (loop.cyclic_side) {
            if (loop.pieces.size() != 1 || !loop.pieces.front().side)
                shape.add(tag + " cyclic-side form needs exactly one side piece");
        } else {
            if (loop.pieces.size() % 2 != 0)
                shape.add(tag + " has an odd piece count, cannot alternate");
            for (std::size_t i = 0; i < loop.pieces.size(); ++i) {
                if (loop.pieces[i].side ==
                    loop.pieces[(i + 1) % loop.pieces.size()].side) {
                    shape.add(tag + " pieces do not alternate");
                    break;
                }
            }
        }
        std::vector<int> concat;
        bool nonempty = true;
        for (const MarkedPath& piece : loop.pieces) {
            if (piece.darts.empty()) nonempty = false;
            concat.insert(concat.end(), piece.darts.begin(), piece.darts.end());
        }
        if (!nonempty) shape.add(tag + " has an empty piece");
        const std::vector<int>& cycle = d.faces[loop.face].cycle;
        bool covers = concat.size() == cycle.size() && !concat.empty();
        if (covers) {
            const auto it = std::find(cycle.begin(), cycle.end(), concat.front());
            if (it == cycle.end()) {
                covers = false;
            } else {
                std::size_t at = static_cast<std::size_t>(it - cycle.begin());
                for (std::size_t i = 0; i < concat.size() && covers; ++i)
                    covers = concat[i] == cycle[(at + i) % cycle.size()];
            }
        }
        if (!covers) {
            cover.add(tag + " pieces do not concatenate to the boundary loop");
        }
        for (std::size_t pi = 0; pi < loop.pieces.size(); ++pi) {
            const MarkedPath& piece = loop.pieces[pi];
            if (!piece.side) continue;
            Word w;
            bool known = true;
            for (int id : piece.darts) {
                auto it = dart_ix.find(id);
                if (it == dart_ix.end()) {
                    known = false;
                    break;
                }
                if (auto l = d.darts[it->second].label) w.push_back(*l);
            }
            if (!known) continue;  // covered by the cover check
            const std::string ptag = tag + " side " + std::to_string(pi);
            if (!is_freely_reduced(w)) {
                labels.add(ptag + " label is not freely reduced");
            } else if (p && is_reduced_rank1(w, *p)) {
                labels.add(ptag + " label is not reduced in rank 1");
            }
        }
    }
    rep.items.push_back({"LOOP_SHAPE", shape.clean(), shape.detail()});
    rep.items.push_back({"LOOP_COVER", cover.clean(), cover.detail()});
    rep.items.push_back({"SIDE_LABELS", labels.clean(), labels.detail()});
    return rep;
}

long long bridge_count(const BoundaryMarking& m) {
    long long b = 0;
    for (const BoundaryLoop& loop : m.loops) {
        if (loop.cyclic_side) continue;
        b += static_cast<long long>(loop.pieces.size() / 2);
    }
    return b;
}

long long complexity(const Diagram& d, const BoundaryMarking& m) {
    return bridge_count(m) - 2 * euler_characteristic(d);
}

Diagram build_dehn_diagram(const ReductionTrace& trace, const GradedPresentation& p) {
    if (auto err = replay_trace(trace, p))
        throw std::invalid_argument("build_dehn_diagram: trace does not replay: " + *err);
    if (!trace.output.empty()) throw std::invalid_argument("NOT_TRIVIAL");

    Diagram d;
    d.alphabet = p.alphabet();
    d.vertices.push_back(0);
    int vertices = 1;
    const auto new_vertex = [&] {
        d.vertices.push_back(vertices);
        return vertices++;
    };
    // Returns the dart from..to; its inverse follows it in the dart table.
    const auto new_edge = [&](int from, int to, std::optional<Letter> label) {
        const int a = static_cast<int>(d.darts.size());
        const int b = a + 1;
        std::optional<Letter> back;
        if (label) back = label->inverse();
        d.darts.push_back(Dart{a, b, label, from, -1});
        d.darts.push_back(Dart{b, a, back, to, -1});
        return std::pair<int, int>(a, b);
    };

    // Bouquet: each step k contributes the conjugate U_k (P_k T_k) U_k^-1
    // read along the boundary, with the relator loop bounding a cell; the
    // concatenation of the conjugates freely reduces to trace.input.
    std::vector<int> walk;
    Word cur = trace.input;
    for (const ReductionStep& st : trace.steps) {
        std::vector<int> stem_fwd, stem_bwd;
        int at = 0;
        for (std::size_t i = 0; i < st.begin; ++i) {
            const int v = new_vertex();
            auto [f, b] = new_edge(at, v, cur[i]);
            stem_fwd.push_back(f);
            stem_bwd.push_back(b);
            at = v;
        }
        const Word relator = st.removed * st.replacement.inverse();
        const int base = at;
        std::vector<int> loop_fwd, loop_bwd;
        int prev = base;
        for (std::size_t i = 0; i < relator.size(); ++i) {
            const int v = (i + 1 == relator.size()) ? base : new_vertex();
            auto [f, b] = new_edge(prev, v, relator[i]);
            loop_fwd.push_back(f);
            loop_bwd.push_back(b);
            prev = v;
        }
        Face cell;
        cell.kind = FaceKind::Cell;
        cell.rank = p.classes()[static_cast<std::size_t>(st.relator)].rank;
        for (std::size_t i = loop_bwd.size(); i-- > 0;) cell.cycle.push_back(loop_bwd[i]);
        d.faces.push_back(std::move(cell));

        walk.insert(walk.end(), stem_fwd.begin(), stem_fwd.end());
        walk.insert(walk.end(), loop_fwd.begin(), loop_fwd.end());
        for (std::size_t i = stem_bwd.size(); i-- > 0;) walk.push_back(stem_bwd[i]);

        cur = free_reduce(cur.subword(0, st.begin) * st.replacement *
                          cur.subword(st.end, cur.size()));
    }

    // Free cancellations along the boundary become rank-0 cells: the two
    // cancelling darts (and any empty-labeled darts between them) are pocketed
    // behind a fresh empty-labeled edge. Purely additive, so the map stays
    // planar and Euler-exact; the basepoint is never crossed, so the final
    // boundary reads trace.input literally, not up to rotation.
    std::vector<int> out;
    std::vector<std::size_t> stack;  // positions in out of letter-labeled darts
    for (const int id : walk) {
        const std::optional<Letter> lab = d.darts[static_cast<std::size_t>(id)].label;
        if (lab && !stack.empty()) {
            const std::size_t k = stack.back();
            const Dart& top = d.darts[static_cast<std::size_t>(out[k])];
            if (top.label && *top.label == lab->inverse()) {
                stack.pop_back();
                const int from = top.origin;
                const int to =
                    d.darts[static_cast<std::size_t>(d.darts[static_cast<std::size_t>(id)].inverse)]
                        .origin;
                auto [f, b] = new_edge(from, to, std::nullopt);
                Face cell;
                cell.kind = FaceKind::Cell;
                cell.rank = 0;
                for (std::size_t i = k; i < out.size(); ++i) cell.cycle.push_back(out[i]);
                cell.cycle.push_back(id);
                cell.cycle.push_back(b);
                d.faces.push_back(std::move(cell));
                out.resize(k);
                out.push_back(f);
                continue;
            }
        }
        if (lab) stack.push_back(out.size());
        out.push_back(id);
    }

    Face external;
    external.kind = FaceKind::External;
    external.cycle = std::move(out);
    d.faces.push_back(std::move(external));

    for (const Face& f : d.faces) {
        for (std::size_t i = 0; i < f.cycle.size(); ++i) {
            d.darts[static_cast<std::size_t>(f.cycle[i])].next =
                f.cycle[(i + 1) % f.cycle.size()];
        }
    }
    return d;
}

namespace {

json marking_to_json_obj(const BoundaryMarking& m) {
    json loops = json::array();
    for (const BoundaryLoop& loop : m.loops) {
        json pieces = json::array();
        for (const MarkedPath& piece : loop.pieces)
            pieces.push_back(json{{"side", piece.side}, {"darts", piece.darts}});
        loops.push_back(json{{"face", loop.face},
                             {"cyclic_side", loop.cyclic_side},
                             {"pieces", std::move(pieces)}});
    }
    return json{{"loops", std::move(loops)}};
}

BoundaryMarking marking_from_json_obj(const json& j) {
    BoundaryMarking m;
    for (const json& jl : j.at("loops")) {
        BoundaryLoop loop;
        loop.face = jl.at("face").get<std::size_t>();
        loop.cyclic_side = jl.value("cyclic_side", false);
        for (const json& jp : jl.at("pieces")) {
            MarkedPath piece;
            piece.side = jp.at("side").get<bool>();
            piece.darts = jp.at("darts").get<std::vector<int>>();
            loop.pieces.push_back(std::move(piece));
        }
        m.loops.push_back(std::move(loop));
    }
    return m;
}

}  // namespace

std::string diagram_to_json(const Diagram& d, const BoundaryMarking* m) {
    json darts = json::array();
    for (const Dart& dt : d.darts) {
        darts.push_back(json{{"id", dt.id},
                             {"inverse", dt.inverse},
                             {"label", dt.label ? d.alphabet.print(*dt.label) : "1"},
                             {"origin", dt.origin},
                             {"next", dt.next}});
    }
    json faces = json::array();
    for (const Face& f : d.faces) {
        json jf{{"kind", f.kind == FaceKind::Cell ? "cell" : "external"},
                {"cycle", f.cycle}};
        if (f.kind == FaceKind::Cell) jf["rank"] = f.rank;
        faces.push_back(std::move(jf));
    }
    std::string symbols;
    for (int g = 0; g < d.alphabet.size(); ++g) symbols += d.alphabet.symbol(g);
    json out{{"alphabet", symbols},
             {"vertices", d.vertices},
             {"darts", std::move(darts)},
             {"faces", std::move(faces)}};
    if (m) out["marking"] = marking_to_json_obj(*m);
    return out.dump(2);
}

DiagramFile diagram_from_json(const std::string& text) {
    const json j = json::parse(text);
    DiagramFile file;
    Diagram& d = file.diagram;
    d.alphabet = Alphabet(j.at("alphabet").get<std::string>());
    d.vertices = j.at("vertices").get<std::vector<int>>();
    for (const json& jd : j.at("darts")) {
        Dart dt;
        dt.id = jd.at("id").get<int>();
        dt.inverse = jd.at("inverse").get<int>();
        dt.origin = jd.at("origin").get<int>();
        dt.next = jd.at("next").get<int>();
        const std::string lab = jd.at("label").get<std::string>();
        if (lab != "1") {
            if (lab.size() != 1 || !d.alphabet.letter_of(lab[0]))
                throw std::invalid_argument("diagram_from_json: bad dart label '" + lab + "'");
            dt.label = *d.alphabet.letter_of(lab[0]);
        }
        d.darts.push_back(dt);
    }
    for (const json& jf : j.at("faces")) {
        Face f;
        const std::string kind = jf.at("kind").get<std::string>();
        if (kind == "cell") f.kind = FaceKind::Cell;
        else if (kind == "external") f.kind = FaceKind::External;
        else throw std::invalid_argument("diagram_from_json: bad face kind '" + kind + "'");
        f.rank = jf.value("rank", 0);
        f.cycle = jf.at("cycle").get<std::vector<int>>();
        d.faces.push_back(std::move(f));
    }
    if (j.contains("marking")) file.marking = marking_from_json_obj(j.at("marking"));
    return file;
}

}  // namespace scc
