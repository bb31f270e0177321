#include "scc/tiling.hpp"

#include "scc/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace scc {

namespace {

using nlohmann::json;

std::string fails(const CheckReport& rep) {
    std::string out;
    for (const CheckItem& item : rep.items) {
        if (item.pass) continue;
        if (!out.empty()) out += "; ";
        out += item.name;
        if (!item.detail.empty()) out += ": " + item.detail;
    }
    return out;
}

}  // namespace

CheckReport tiling_validate(const Tiling& t) {
    CheckReport rep;
    rep.title = "tiling";

    {
        std::set<int> ids;
        std::string bad;
        for (const Tile& tile : t.tiles)
            if (!ids.insert(tile.id).second) bad = "duplicate tile id " + std::to_string(tile.id);
        rep.items.push_back({"TILE_IDS", bad.empty(), bad});
    }
    {
        std::string bad;
        for (const Tile& tile : t.tiles) {
            if (tile.index < 0 || tile.index > 2) {
                bad = "tile " + std::to_string(tile.id) + " has index " +
                      std::to_string(tile.index);
                break;
            }
        }
        rep.items.push_back({"INDEX_RANGE", bad.empty(), bad});
    }
    {
        std::string bad;
        for (const Tile& tile : t.tiles) {
            if (tile.external) continue;
            if (tile.index >= 1 && tile.chi != 1) {
                bad = "index-" + std::to_string(tile.index) + " tile " +
                      std::to_string(tile.id) + " has chi != 1";
                break;
            }
            if (tile.index == 0 && tile.chi > 1) {
                bad = "tile " + std::to_string(tile.id) + " has chi > 1";
                break;
            }
        }
        rep.items.push_back({"TILE_CHI", bad.empty(), bad});
    }
    {
        std::map<int, int> count;
        std::string bad;
        for (const Tile& tile : t.tiles) {
            for (int s : tile.sides) {
                if (s == 0) bad = "side id 0 on tile " + std::to_string(tile.id);
                ++count[s];
            }
        }
        for (const auto& [s, c] : count) {
            if (c != 1) {
                bad = "side " + std::to_string(s) + " occurs " + std::to_string(c) + " times";
                break;
            }
            if (!count.count(-s)) {
                bad = "side " + std::to_string(s) + " lacks its inverse";
                break;
            }
        }
        rep.items.push_back({"SIDES", bad.empty(), bad});
    }
    {
        bool any = false;
        for (const Tile& tile : t.tiles) any = any || tile.external;
        rep.items.push_back({"EXTERNAL_PRESENT", any, any ? "" : "no external tile"});
    }
    {
        long long sum = 0;
        for (const Tile& tile : t.tiles) {
            if (tile.external) continue;
            sum += (tile.index % 2 == 0) ? tile.chi : -tile.chi;
        }
        const bool ok = sum == t.chi;
        rep.items.push_back({"EULER_SUM", ok,
                             ok ? ""
                                : "signed chi sum " + std::to_string(sum) + " != declared " +
                                      std::to_string(t.chi)});
    }
    return rep;
}

CheckReport connection_validate(const Tiling& t, const Connection& w) {
    CheckReport rep;
    rep.title = "connection";
    std::string missing, asym;
    for (const Tile& tile : t.tiles) {
        for (int s : tile.sides) {
            if (!w.count(s)) {
                if (missing.empty()) missing = "MISSING_WEIGHT: side " + std::to_string(s);
                continue;
            }
            if (!w.count(-s)) {
                if (missing.empty()) missing = "MISSING_WEIGHT: side " + std::to_string(-s);
                continue;
            }
            if (w.at(s) != -w.at(-s) && asym.empty())
                asym = "ANTISYMMETRY: w(" + std::to_string(s) + ") != -w(" +
                       std::to_string(-s) + ")";
        }
    }
    rep.items.push_back({"WEIGHTS_PRESENT", missing.empty(), missing});
    rep.items.push_back({"ANTISYMMETRY", asym.empty(), asym});
    return rep;
}

Connection complete_connection(const Connection& w) {
    Connection out = w;
    for (const auto& [s, v] : w) {
        const auto it = out.find(-s);
        if (it == out.end()) {
            out.emplace(-s, -v);
        } else if (it->second != -v) {
            throw std::invalid_argument("complete_connection: w(" + std::to_string(s) +
                                        ") and w(" + std::to_string(-s) + ") conflict");
        }
    }
    return out;
}

CurvatureReport curvature(const Tiling& t, const Connection& w) {
    if (CheckReport rep = tiling_validate(t); !rep.all_pass())
        throw std::invalid_argument("curvature: malformed tiling: " + fails(rep));
    if (CheckReport rep = connection_validate(t, w); !rep.all_pass())
        throw std::invalid_argument("curvature: bad connection: " + fails(rep));

    CurvatureReport rep;
    rep.chi = make_rational(t.chi);
    rep.interior = 0;
    rep.boundary = 0;
    for (const Tile& tile : t.tiles) {
        Rational wsum(0);
        for (int s : tile.sides) wsum += w.at(s);
        if (tile.external) {
            rep.boundary += wsum;
            continue;
        }
        Rational kappa = make_rational((tile.index % 2 == 0) ? tile.chi : -tile.chi) + wsum;
        rep.interior += kappa;
        rep.per_tile.push_back(TileCurvature{tile.id, std::move(kappa)});
    }
    rep.ok = rep.interior + rep.boundary == rep.chi;
    return rep;
}

bool gauss_bonnet_check(const Tiling& t, const Connection& w) {
    return curvature(t, w).ok;
}

Tiling random_tiling(std::uint64_t seed, int size, bool annulus) {
    Rng rng(seed);
    int k = std::max(1, size);
    // Alternating +1/-1 contributions: a disk (chi 1) needs an odd count, an
    // annulus (chi 0) an even one.
    if ((k % 2 == 0) != annulus) ++k;

    Tiling t;
    t.chi = annulus ? 0 : 1;
    for (int i = 0; i < k; ++i) {
        Tile tile;
        tile.id = i + 1;
        tile.chi = 1;
        if (i % 2 == 1) tile.index = 1;
        else if (k > 3 && rng.below(4) == 0) tile.index = 2;  // even slot, same sign
        t.tiles.push_back(tile);
    }
    const int externals = annulus ? 2 : 1;
    for (int i = 0; i < externals; ++i) {
        Tile tile;
        tile.id = k + 1 + i;
        tile.chi = 1;
        tile.external = true;
        t.tiles.push_back(tile);
    }

    const int pairs = k + 1;
    for (int s = 1; s <= pairs; ++s) {
        std::size_t a, b;
        if (s <= externals) {
            // Anchor: every external tile carries at least one side.
            a = static_cast<std::size_t>(k + s - 1);
            b = rng.below(static_cast<std::uint64_t>(k));
        } else {
            a = rng.below(t.tiles.size());
            b = rng.below(t.tiles.size());
        }
        t.tiles[a].sides.push_back(s);
        t.tiles[b].sides.push_back(-s);
    }
    return t;
}

Connection random_connection(const Tiling& t, std::uint64_t seed) {
    Rng rng(seed);
    std::set<int> positive;
    for (const Tile& tile : t.tiles)
        for (int s : tile.sides)
            if (s > 0) positive.insert(s);
    Connection w;
    for (int s : positive) {
        const long long num = static_cast<long long>(rng.below(41)) - 20;
        const long long den = 1 + static_cast<long long>(rng.below(12));
        w[s] = make_rational(num, den);
        w[-s] = -w[s];
    }
    return w;
}

std::string tiling_to_json(const Tiling& t) {
    json tiles = json::array();
    for (const Tile& tile : t.tiles) {
        tiles.push_back(json{{"id", tile.id},
                             {"index", tile.index},
                             {"chi", tile.chi},
                             {"external", tile.external},
                             {"sides", tile.sides}});
    }
    return json{{"chi", t.chi}, {"tiles", std::move(tiles)}}.dump(2);
}

Tiling tiling_from_json(const std::string& text) {
    const json j = json::parse(text);
    Tiling t;
    t.chi = j.at("chi").get<long long>();
    for (const json& jt : j.at("tiles")) {
        Tile tile;
        tile.id = jt.at("id").get<int>();
        tile.index = jt.at("index").get<int>();
        tile.chi = jt.at("chi").get<long long>();
        tile.external = jt.value("external", false);
        tile.sides = jt.at("sides").get<std::vector<int>>();
        t.tiles.push_back(std::move(tile));
    }
    return t;
}

std::string connection_to_json(const Connection& w) {
    json out = json::object();
    for (const auto& [s, v] : w) out[std::to_string(s)] = rational_str(v);
    return out.dump(2);
}

Connection connection_from_json(const std::string& text) {
    const json j = json::parse(text);
    Connection w;
    for (const auto& [key, value] : j.items()) {
        const int s = std::stoi(key);
        if (s == 0) throw std::invalid_argument("connection_from_json: side id 0");
        w[s] = parse_rational(value.get<std::string>());
    }
    return w;
}

}  // namespace scc
