#include "treecount/coloring.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "treecount/error.hpp"
#include "treecount/matching.hpp"

namespace treecount {

std::string_view to_string(Color c) {
  switch (c) {
    case Color::Red: return "red";
    case Color::Orange: return "orange";
    case Color::Green: return "green";
  }
  return "?";
}

int Coloring::count(Color c) const {
  return static_cast<int>(std::count(color.begin(), color.end(), c));
}

namespace {

class Fixpoint {
 public:
  explicit Fixpoint(const Tree& t) : t_(t), color_(t.size(), Color::Red), partner_(t.size(), -1),
                                     red_neighbors_(t.size()) {
    for (Vertex v = 0; v < t.size(); ++v) red_neighbors_[v] = t.degree(v);
  }

  bool applicable(Vertex v) const { return red_neighbors_[v] == 1; }

  // Fires the rule at v. Returns the vertex that turned green.
  Vertex fire(Vertex v) {
    Vertex w = -1;
    for (Vertex x : t_.neighbors(v))
      if (color_[x] == Color::Red) {
        w = x;
        break;
      }
    color_[w] = Color::Green;
    for (Vertex x : t_.neighbors(w)) --red_neighbors_[x];
    if (color_[v] == Color::Green) {
      if (partner_[v] >= 0 || partner_[w] >= 0)
        throw InvariantError("coloring fixpoint: vertex received a second domino");
      partner_[v] = w;
      partner_[w] = v;
    }
    return w;
  }

  Coloring finish() {
    Coloring c;
    for (Vertex v = 0; v < t_.size(); ++v)
      if (color_[v] == Color::Green && red_neighbors_[v] == 0) color_[v] = Color::Orange;
    for (Vertex v = 0; v < t_.size(); ++v) {
      if (partner_[v] > v) {
        if (color_[v] != Color::Orange || color_[partner_[v]] != Color::Orange)
          throw InvariantError("coloring fixpoint: domino on a non-orange vertex");
        c.orange_dominoes.emplace_back(v, partner_[v]);
      }
    }
    c.color = std::move(color_);
    return c;
  }

 private:
  const Tree& t_;
  std::vector<Color> color_;
  std::vector<Vertex> partner_;
  std::vector<int> red_neighbors_;
};

}  // namespace

Coloring canonical_coloring(const Tree& t) {
  Fixpoint fp(t);
  std::deque<Vertex> work;
  for (Vertex v = 0; v < t.size(); ++v) work.push_back(v);
  while (!work.empty()) {
    Vertex v = work.front();
    work.pop_front();
    if (!fp.applicable(v)) continue;
    Vertex w = fp.fire(v);
    for (Vertex x : t.neighbors(w)) work.push_back(x);
  }
  return fp.finish();
}

Coloring canonical_coloring_shuffled(const Tree& t, std::uint64_t seed) {
  Fixpoint fp(t);
  std::mt19937_64 rng(seed);
  std::vector<Vertex> ready;
  for (;;) {
    ready.clear();
    for (Vertex v = 0; v < t.size(); ++v)
      if (fp.applicable(v)) ready.push_back(v);
    if (ready.empty()) break;
    fp.fire(ready[std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng)]);
  }
  return fp.finish();
}

Coloring coloring_by_vertex_covers(const Tree& t) {
  const int n = t.size();
  if (n > kMaxOracleSize) throw GuardError("vertex-cover oracle limited to n <= 20");
  std::vector<std::uint32_t> edge_masks;
  for (const Edge& e : t.edges()) edge_masks.push_back((1u << e.u) | (1u << e.v));

  int best = n + 1;
  std::uint32_t in_all = 0, in_some = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size > best) continue;
    bool covers = true;
    for (std::uint32_t em : edge_masks)
      if ((mask & em) == 0) {
        covers = false;
        break;
      }
    if (!covers) continue;
    if (size < best) {
      best = size;
      in_all = mask;
      in_some = mask;
    } else {
      in_all &= mask;
      in_some |= mask;
    }
  }
  Coloring c;
  c.color.resize(n);
  for (int v = 0; v < n; ++v) {
    const std::uint32_t bit = 1u << v;
    c.color[v] = (in_all & bit) ? Color::Green : (in_some & bit) ? Color::Orange : Color::Red;
  }
  return c;
}

Coloring coloring_by_matchings(const Tree& t) {
  const int n = t.size();
  if (n > kMaxOracleSize) throw GuardError("matching oracle limited to n <= 20");
  const auto matchings = all_maximum_matchings(t);
  std::vector<char> ever_uncovered(n, 0);
  std::vector<Vertex> first_partner(n, -2);
  std::vector<char> several(n, 0);
  for (const Matching& m : matchings) {
    const auto partner = matching_partners(n, m);
    for (int v = 0; v < n; ++v) {
      if (partner[v] < 0) {
        ever_uncovered[v] = 1;
      } else if (first_partner[v] == -2) {
        first_partner[v] = partner[v];
      } else if (first_partner[v] != partner[v]) {
        several[v] = 1;
      }
    }
  }
  Coloring c;
  c.color.resize(n);
  for (int v = 0; v < n; ++v) {
    if (ever_uncovered[v]) {
      c.color[v] = Color::Red;
    } else if (several[v]) {
      c.color[v] = Color::Green;
    } else {
      c.color[v] = Color::Orange;
      if (first_partner[v] > v) c.orange_dominoes.emplace_back(v, first_partner[v]);
    }
  }
  std::sort(c.orange_dominoes.begin(), c.orange_dominoes.end());
  return c;
}

std::optional<std::string> local_characterization_violation(const Tree& t, const Coloring& c) {
  const int n = t.size();
  std::vector<int> domino_count(n, 0);
  for (const Edge& e : c.orange_dominoes) {
    if (!t.adjacent(e.u, e.v)) return "domino " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an edge";
    if (c.color[e.u] != Color::Orange || c.color[e.v] != Color::Orange)
      return "domino " + std::to_string(e.u) + "-" + std::to_string(e.v) + " touches a non-orange vertex";
    ++domino_count[e.u];
    ++domino_count[e.v];
  }
  for (Vertex v = 0; v < n; ++v) {
    int reds = 0, non_green = 0;
    for (Vertex w : t.neighbors(v)) {
      reds += c.color[w] == Color::Red;
      non_green += c.color[w] != Color::Green;
    }
    switch (c.color[v]) {
      case Color::Orange:
        if (domino_count[v] != 1) return "orange vertex " + std::to_string(v) + " not covered by exactly one domino";
        break;
      case Color::Green:
        if (reds < 2) return "green vertex " + std::to_string(v) + " has fewer than two red neighbors";
        break;
      case Color::Red:
        if (non_green > 0) return "red vertex " + std::to_string(v) + " has a non-green neighbor";
        break;
    }
  }
  return std::nullopt;
}

RedGreenPartition red_green_components(const Tree& t, const Coloring& c) {
  const int n = t.size();
  RedGreenPartition p;
  p.component_of.assign(n, -1);
  for (Vertex start = 0; start < n; ++start) {
    if (c.color[start] == Color::Orange || p.component_of[start] >= 0) continue;
    const int id = static_cast<int>(p.components.size());
    RedGreenComponent comp;
    std::vector<Vertex> stack{start};
    p.component_of[start] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.vertices.push_back(v);
      for (Vertex w : t.neighbors(v)) {
        const bool red_green = (c.color[v] == Color::Red && c.color[w] == Color::Green) ||
                               (c.color[v] == Color::Green && c.color[w] == Color::Red);
        if (!red_green) continue;
        if (v < w) comp.edges.emplace_back(v, w);
        if (p.component_of[w] < 0) {
          p.component_of[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    std::sort(comp.edges.begin(), comp.edges.end());
    for (Vertex v : comp.vertices) (c.color[v] == Color::Red ? comp.reds : comp.greens).push_back(v);
    if (comp.edges.size() + 1 != comp.vertices.size())
      throw InvariantError("red-green component is not a tree");
    if (comp.vertices.size() > 1) {
      std::vector<int> deg(n, 0);
      for (const Edge& e : comp.edges) ++deg[e.u], ++deg[e.v];
      for (Vertex g : comp.greens)
        if (deg[g] < 2) throw InvariantError("red-green component has a green leaf");
    }
    p.components.push_back(std::move(comp));
  }
  return p;
}

int dimension(const Coloring& c) { return c.count(Color::Red) - c.count(Color::Green); }

int dimension(const Tree& t) { return dimension(canonical_coloring(t)); }

int adjacency_nullity(const Tree& t) {
  using boost::multiprecision::cpp_int;
  const int n = t.size();
  std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n, 0));
  for (const Edge& e : t.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  // Fraction-free Gaussian elimination: every division below is exact.
  cpp_int prev = 1;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < n; ++r) {
      for (int k = col + 1; k < n; ++k) a[r][k] = (a[rank][col] * a[r][k] - a[r][col] * a[rank][k]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return n - rank;
}

TreeClass classify(const Tree& t) {
  TreeClass cls;
  cls.dimension = dimension(t);
  cls.kind = cls.dimension == 0 ? TreeKind::Orange : cls.dimension == 1 ? TreeKind::Unimodal : TreeKind::Other;
  return cls;
}

}  // namespace treecount
