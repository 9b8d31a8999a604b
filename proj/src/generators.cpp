#include "scancover/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "scancover/error.hpp"

namespace scancover {

namespace {

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t index_draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(unit_draw(rng) * static_cast<double>(bound));
}

std::string numbered(const char* prefix, std::size_t i) { return prefix + std::to_string(i); }

}  // namespace

Instance gen_nae_gadget(const Formula& formula, double phi) {
  if (formula.empty()) throw Error(ErrorCode::kMalformedFormula, "formula has no clauses");
  if (!(phi > 0.0) || !std::isfinite(phi)) {
    throw Error(ErrorCode::kInvalidInstance, "phi must be positive");
  }
  std::vector<std::string> ids;
  std::vector<Edge> edges;
  enum Kind { kClause, kVariable, kIncidence };
  std::vector<Kind> kind;
  auto vertex = [&](std::string id) {
    ids.push_back(std::move(id));
    return static_cast<VertexIndex>(ids.size() - 1);
  };
  auto edge = [&](VertexIndex a, VertexIndex b, Kind k) {
    edges.push_back({a, b});
    kind.push_back(k);
  };

  std::vector<std::array<VertexIndex, 3>> entries;
  for (std::size_t c = 0; c < formula.size(); ++c) {
    const std::string name = "C" + std::to_string(c + 1);
    const VertexIndex hub = vertex(name);
    std::array<VertexIndex, 3> entry{};
    for (int k = 0; k < 3; ++k) {
      entry[k] = vertex(name + "." + std::to_string(k + 1));
      edge(hub, entry[k], kClause);
    }
    entries.push_back(entry);
  }
  std::map<std::string, std::array<VertexIndex, 2>> literal;
  for (const std::string& var : formula_variables(formula)) {
    const VertexIndex hub = vertex("V:" + var);
    const VertexIndex pos = vertex("L:" + var);
    const VertexIndex neg = vertex("L:!" + var);
    edge(hub, pos, kVariable);
    edge(hub, neg, kVariable);
    literal[var] = {pos, neg};
  }
  for (std::size_t c = 0; c < formula.size(); ++c) {
    for (int k = 0; k < 3; ++k) {
      const Literal& lit = formula[c][k];
      edge(entries[c][k], literal[lit.variable][lit.negated ? 1 : 0], kIncidence);
    }
  }

  std::vector<std::vector<EdgeIndex>> incident(ids.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].u].push_back(static_cast<EdgeIndex>(e));
    incident[edges[e].v].push_back(static_cast<EdgeIndex>(e));
  }
  std::vector<CostEntry> costs;
  for (const auto& inc : incident) {
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const Kind a = kind[inc[i]];
        const Kind b = kind[inc[j]];
        double c = 0.0;
        if (a == kClause || b == kClause) {
          c = phi;
        } else if (a == kVariable || b == kVariable) {
          c = 2.0 * phi;
        }
        costs.push_back({inc[i], inc[j], c});
      }
    }
  }
  return Instance::abstract(std::move(ids), std::move(edges), costs);
}

Instance gen_turan_1d(int ell, std::size_t cap) {
  if (ell < 1) throw Error(ErrorCode::kInvalidInstance, "ell must be at least 1");
  if (ell > 5) throw Error(ErrorCode::kTooLarge, "ell too large");
  const std::size_t n = std::size_t{1} << ell;
  if (n >= 63 || n * (std::size_t{1} << n) > cap) {
    throw Error(ErrorCode::kTooLarge, "Turan instance exceeds " + std::to_string(cap) + " vertices");
  }
  const std::size_t colors = std::size_t{1} << n;
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < colors; ++c) {
      vertices.push_back({"I" + std::to_string(i) + "c" + std::to_string(c),
                          {static_cast<double>(i * colors + c)}});
    }
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (a % colors != b % colors) edges.push_back({static_cast<VertexIndex>(a), static_cast<VertexIndex>(b)});
    }
  }
  return Instance::geometric(Dimension::kOne, std::move(vertices), std::move(edges));
}

Instance gen_geodesic_star(int subdivisions) {
  if (subdivisions < 0 || subdivisions > 6) {
    throw Error(ErrorCode::kTooLarge, "subdivisions must be in [0, 6]");
  }
  const double g = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> pts = {{-1, g, 0}, {1, g, 0},  {-1, -g, 0}, {1, -g, 0},
                           {0, -1, g}, {0, 1, g},  {0, -1, -g}, {0, 1, -g},
                           {g, 0, -1}, {g, 0, 1},  {-g, 0, -1}, {-g, 0, 1}};
  for (Vec3& p : pts) p = normalized(p);
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
      {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      const auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      pts.push_back(normalized(pts[a] + pts[b]));
      const int idx = static_cast<int>(pts.size() - 1);
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> finer;
    for (const auto& f : faces) {
      const int ab = mid(f[0], f[1]);
      const int bc = mid(f[1], f[2]);
      const int ca = mid(f[2], f[0]);
      finer.push_back({f[0], ab, ca});
      finer.push_back({f[1], bc, ab});
      finer.push_back({f[2], ca, bc});
      finer.push_back({ab, bc, ca});
    }
    faces = std::move(finer);
  }
  std::vector<Vertex> vertices{{"c", {0.0, 0.0, 0.0}}};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    vertices.push_back({numbered("p", i), {pts[i].x, pts[i].y, pts[i].z}});
    edges.push_back({0, static_cast<VertexIndex>(i + 1)});
  }
  return Instance::geometric(Dimension::kThree, std::move(vertices), std::move(edges));
}

Instance gen_orthant_star(int n, int d) {
  if (n < 1 || d < 1) throw Error(ErrorCode::kDimensionMismatch, "n and d must be positive");
  if (n > d) {
    throw Error(ErrorCode::kDimensionMismatch, std::to_string(n) + " axes do not fit in dimension " +
                                                   std::to_string(d));
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({0, i + 1});
  if (d > 3) {
    std::vector<std::string> ids{"c"};
    for (int i = 0; i < n; ++i) ids.push_back(numbered("a", i + 1));
    std::vector<CostEntry> costs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) costs.push_back({i, j, 90.0});
    }
    return Instance::abstract(std::move(ids), std::move(edges), costs);
  }
  std::vector<Vertex> vertices{{"c", std::vector<double>(d, 0.0)}};
  for (int i = 0; i < n; ++i) {
    std::vector<double> coords(d, 0.0);
    coords[i] = 1.0;
    vertices.push_back({numbered("a", i + 1), std::move(coords)});
  }
  return Instance::geometric(static_cast<Dimension>(d), std::move(vertices), std::move(edges));
}

RandomKind parse_random_kind(std::string_view name) {
  for (RandomKind k : all_random_kinds()) {
    if (random_kind_name(k) == name) return k;
  }
  throw Error(ErrorCode::kParse, "unknown random kind '" + std::string(name) + "'");
}

std::string_view random_kind_name(RandomKind kind) {
  switch (kind) {
    case RandomKind::kBipartite1d: return "bipartite1d";
    case RandomKind::kComplete1d: return "complete1d";
    case RandomKind::kGeneral1d: return "general1d";
    case RandomKind::kBipartite2d: return "bipartite2d";
    case RandomKind::kComplete2d: return "complete2d";
    case RandomKind::kSparse2d: return "sparse2d";
    case RandomKind::kTree3d: return "tree3d";
  }
  return "unknown";
}

const std::vector<RandomKind>& all_random_kinds() {
  static const std::vector<RandomKind> kinds = {
      RandomKind::kBipartite1d, RandomKind::kComplete1d, RandomKind::kGeneral1d,
      RandomKind::kBipartite2d, RandomKind::kComplete2d, RandomKind::kSparse2d,
      RandomKind::kTree3d};
  return kinds;
}

RandomInstance gen_random(RandomKind kind, int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kInvalidInstance, "n must be at least 1");
  if (n > 5000) throw Error(ErrorCode::kTooLarge, "n must be at most 5000");
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(kind) << 56));
  const auto count = static_cast<std::size_t>(n);

  Dimension dim = Dimension::kTwo;
  if (kind == RandomKind::kBipartite1d || kind == RandomKind::kComplete1d ||
      kind == RandomKind::kGeneral1d) {
    dim = Dimension::kOne;
  } else if (kind == RandomKind::kTree3d) {
    dim = Dimension::kThree;
  }
  const int d = static_cast<int>(dim);

  std::vector<Vertex> vertices;
  std::set<std::vector<double>> used;
  while (vertices.size() < count) {
    std::vector<double> coords(d);
    for (double& c : coords) c = unit_draw(rng);
    if (!used.insert(coords).second) continue;
    vertices.push_back({numbered("v", vertices.size()), std::move(coords)});
  }

  std::set<std::pair<int, int>> edge_set;
  auto add = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    edge_set.emplace(static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b)));
  };
  std::optional<Partition> partition;
  switch (kind) {
    case RandomKind::kBipartite1d:
    case RandomKind::kBipartite2d: {
      Partition side(count);
      for (auto& s : side) s = static_cast<int>(rng() & 1u);
      if (count >= 2 && std::all_of(side.begin(), side.end(), [&](int s) { return s == side[0]; })) {
        side[count - 1] = 1 - side[0];
      }
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = a + 1; b < count; ++b) {
          if (side[a] != side[b] && unit_draw(rng) < 0.5) add(a, b);
        }
      }
      if (edge_set.empty() && count >= 2) {
        const auto other = static_cast<std::size_t>(
            std::find_if(side.begin(), side.end(), [&](int s) { return s != side[0]; }) - side.begin());
        add(0, other);
      }
      partition = side;
      break;
    }
    case RandomKind::kComplete1d:
    case RandomKind::kComplete2d:
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = a + 1; b < count; ++b) add(a, b);
      }
      break;
    case RandomKind::kGeneral1d:
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = a + 1; b < count; ++b) {
          if (unit_draw(rng) < 0.5) add(a, b);
        }
      }
      if (edge_set.empty() && count >= 2) add(0, 1);
      break;
    case RandomKind::kSparse2d:
    case RandomKind::kTree3d:
      for (std::size_t a = 1; a < count; ++a) add(a, index_draw(rng, a));
      if (kind == RandomKind::kSparse2d) {
        for (std::size_t extra = 0; extra < count / 2; ++extra) {
          add(index_draw(rng, count), index_draw(rng, count));
        }
      }
      break;
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : edge_set) edges.push_back({a, b});
  return RandomInstance{Instance::geometric(dim, std::move(vertices), std::move(edges)),
                        std::move(partition)};
}

}  // namespace scancover
