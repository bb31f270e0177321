#ifndef SCC_DIAGRAM_HPP
#define SCC_DIAGRAM_HPP

#include "scc/dehn.hpp"
#include "scc/presentation.hpp"
#include "scc/word.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace scc {

// Half-edge of a planar map. The empty label (written "1" in files) marks
// auxiliary edges bounding rank-0 cells.
struct Dart {
    int id = 0;
    int inverse = -1;
    std::optional<Letter> label;
    int origin = -1;  // vertex id
    int next = -1;    // next dart around the containing face
};

enum class FaceKind { Cell, External };

struct Face {
    FaceKind kind = FaceKind::Cell;
    int rank = 0;  // cells only: admissible boundary label rank
    std::vector<int> cycle;
};

// Van Kampen diagram as a combinatorial map with explicit face cycles.
// External faces are flagged rather than inferred (annuli have two).
struct Diagram {
    Alphabet alphabet{"ab"};
    std::vector<int> vertices;
    std::vector<Dart> darts;
    std::vector<Face> faces;
};

// Structural and label admissibility audit: id sanity, dart involution,
// inverse labels, next-permutation and face-cycle consistency, vertex
// coherence origin(next(d)) = origin(inverse(d)), connectivity, the sphere
// Euler count V - E + F = 2, and per-cell boundary labels (empty, x x^-1, or
// a relator of the cell's rank).
CheckReport validate(const Diagram& d, const GradedPresentation& p);

// V - E + internal faces.
long long euler_characteristic(const Diagram& d);

// Boundary word of each external face in face order, empty labels skipped,
// starting at the face cycle's first dart.
std::vector<Word> boundary_labels(const Diagram& d);

// Boundary division into sides (labels kept reduced) and bridges.
struct MarkedPath {
    bool side = false;
    std::vector<int> darts;
};

struct BoundaryLoop {
    std::size_t face = 0;  // index into Diagram::faces, must be external
    bool cyclic_side = false;
    std::vector<MarkedPath> pieces;  // alternating side/bridge unless cyclic
};

struct BoundaryMarking {
    std::vector<BoundaryLoop> loops;
};

// Marking audit: loops sit on external faces, pieces are nonempty, strictly
// alternate, and concatenate to a rotation of the face cycle; side labels are
// freely reduced, and reduced in rank 1 when a presentation is given.
CheckReport validate_marking(const Diagram& d, const BoundaryMarking& m,
                             const GradedPresentation* p);

long long bridge_count(const BoundaryMarking& m);

// c = b - 2 chi.
long long complexity(const Diagram& d, const BoundaryMarking& m);

// Turn a trivial-word reduction trace into a disk diagram: one relator cell
// per step hanging off the basepoint by its context path, then rank-0 cells
// realizing every free cancellation, so the final boundary reads exactly
// trace.input. Throws invalid_argument("NOT_TRIVIAL") when trace.output is
// nonempty, and rejects traces that fail replay.
Diagram build_dehn_diagram(const ReductionTrace& trace, const GradedPresentation& p);

std::string diagram_to_json(const Diagram& d, const BoundaryMarking* m = nullptr);

struct DiagramFile {
    Diagram diagram;
    std::optional<BoundaryMarking> marking;
};

DiagramFile diagram_from_json(const std::string& text);

}  // namespace scc

#endif
