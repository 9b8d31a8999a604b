#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scancover/formula.hpp"
#include "scancover/instance.hpp"
#include "scancover/planar.hpp"

namespace scancover {

// Abstract NAE-3-SAT gadget. Per clause C<i>: a clause vertex, three entry
// vertices and the three edges between them. Per variable x: a variable
// vertex, literal vertices for x and !x, and the two edges to them. Every
// literal occurrence joins its entry vertex to the matching literal vertex.
// Transition costs: phi for pairs with a clause edge, 2 phi for pairs with a
// variable edge, 0 otherwise. Throws kMalformedFormula.
Instance gen_nae_gadget(const Formula& formula, double phi);

inline constexpr std::size_t kTuranVertexCap = 100000;

// n = 2^ell intervals on the line, each listing the 2^n colors in order;
// vertices of different colors are adjacent. Throws kTooLarge past `cap`
// vertices and kInvalidInstance for ell < 1.
Instance gen_turan_1d(int ell, std::size_t cap = kTuranVertexCap);

// Star from the origin to the vertices of an icosahedron subdivided
// `subdivisions` times and projected to the unit sphere.
Instance gen_geodesic_star(int subdivisions);

// n leaves on distinct coordinate axes of R^d (d <= 3), or an abstract star
// with all transition costs 90 for d > 3. Throws kDimensionMismatch when
// n > d.
Instance gen_orthant_star(int n, int d);

enum class RandomKind {
  kBipartite1d,
  kComplete1d,
  kGeneral1d,
  kBipartite2d,
  kComplete2d,
  kSparse2d,
  kTree3d,
};

RandomKind parse_random_kind(std::string_view name);
std::string_view random_kind_name(RandomKind kind);
const std::vector<RandomKind>& all_random_kinds();

struct RandomInstance {
  Instance instance;
  std::optional<Partition> partition;  // bipartite kinds
};

// Deterministic in (kind, n, seed); coordinates uniform in [0, 1)^d. Graphs
// with n >= 2 get at least one edge.
RandomInstance gen_random(RandomKind kind, int n, std::uint64_t seed);

}  // namespace scancover
