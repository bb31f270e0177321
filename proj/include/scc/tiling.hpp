#ifndef SCC_TILING_HPP
#define SCC_TILING_HPP

#include "scc/presentation.hpp"
#include "scc/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace scc {

// One tile of a tiling. Sides are signed ids: the involution sends s to -s,
// fixed-point-free since 0 is not a side id. A side and its inverse may land
// on the same tile (a slit); the curvature identity does not care.
struct Tile {
    int id = 0;
    int index = 0;  // 0, 1, or 2
    long long chi = 1;
    bool external = false;
    std::vector<int> sides;
};

// Tiling layer over a diagram: only the combinatorics the curvature formula
// reads. chi is the tiled surface's Euler characteristic (1 disk, 0 annulus).
struct Tiling {
    long long chi = 1;
    std::vector<Tile> tiles;
};

// Antisymmetric side weights: w[-s] must equal -w[s].
using Connection = std::map<int, Rational>;

// Well-formedness: side ids nonzero, each occurring on exactly one tile and
// closed under negation; indices in range; tiles of index 1 or 2 are disks
// (chi = 1) and index-0 tiles have chi <= 1; at least one external tile; the
// signed sum over internal tiles of (-1)^index chi equals the declared chi.
CheckReport tiling_validate(const Tiling& t);

// Every side weighted (MISSING_WEIGHT) and antisymmetric (ANTISYMMETRY).
CheckReport connection_validate(const Tiling& t, const Connection& w);

// Fill w(-s) = -w(s) for absent inverses; contradictions throw.
Connection complete_connection(const Connection& w);

struct TileCurvature {
    int tile = 0;
    Rational kappa;
};

struct CurvatureReport {
    std::vector<TileCurvature> per_tile;  // internal tiles, tiling order
    Rational interior;                    // sum over internal tiles
    Rational boundary;                    // sum of w over external tiles' sides
    Rational chi;
    bool ok = false;  // interior + boundary == chi
};

// kappa(T) = (-1)^index chi(T) + sum of w over the tile's sides. Throws
// invalid_argument when the tiling or connection fails validation, so a
// broken input is rejected rather than reported as a false identity.
CurvatureReport curvature(const Tiling& t, const Connection& w);

bool gauss_bonnet_check(const Tiling& t, const Connection& w);

// Seed-deterministic well-formed tiling: `size` internal tiles (bumped by one
// when parity cannot reach the target chi) alternating index 0/1 with
// occasional index-2 tiles, all chi 1, plus 1 (disk) or 2 (annulus) external
// tiles, and size+1 randomly wired side pairs anchored so every external tile
// carries a side.
Tiling random_tiling(std::uint64_t seed, int size, bool annulus);

// Random exact weights, num in [-20, 20] over den in [1, 12].
Connection random_connection(const Tiling& t, std::uint64_t seed);

std::string tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const std::string& text);
std::string connection_to_json(const Connection& w);
Connection connection_from_json(const std::string& text);

}  // namespace scc

#endif
