#include "treecount/matching.hpp"

#include <algorithm>

#include "treecount/coloring.hpp"
#include "treecount/error.hpp"

namespace treecount {

namespace {

// Parent array and a vertex order with every child before its parent.
void post_order(const Tree& t, Vertex root, std::vector<Vertex>& order, std::vector<Vertex>& parent) {
  order.clear();
  parent.assign(t.size(), -1);
  std::vector<Vertex> stack{root};
  std::vector<char> seen(t.size(), 0);
  seen[root] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex w : t.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
  }
  std::reverse(order.begin(), order.end());
}

}  // namespace

bool is_matching(const Tree& t, const Matching& m) {
  std::vector<char> used(t.size(), 0);
  for (const Edge& e : m) {
    if (e.u < 0 || e.v >= t.size() || !t.adjacent(e.u, e.v)) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

std::vector<Vertex> matching_partners(int n, const Matching& m) {
  std::vector<Vertex> partner(n, -1);
  for (const Edge& e : m) {
    partner[e.u] = e.v;
    partner[e.v] = e.u;
  }
  return partner;
}

Matching maximum_matching(const Tree& t) {
  std::vector<Vertex> order, parent;
  post_order(t, 0, order, parent);
  std::vector<char> matched(t.size(), 0);
  Matching m;
  for (Vertex v : order) {
    const Vertex p = parent[v];
    if (p >= 0 && !matched[v] && !matched[p]) {
      matched[v] = matched[p] = 1;
      m.emplace_back(v, p);
    }
  }
  std::sort(m.begin(), m.end());
  return m;
}

Matching maximum_matching(const Forest& f) {
  Matching m;
  for (std::size_t c = 0; c < f.components.size(); ++c)
    for (const Edge& e : maximum_matching(f.components[c]))
      m.emplace_back(f.to_parent[c][e.u], f.to_parent[c][e.v]);
  std::sort(m.begin(), m.end());
  return m;
}

Matching maximum_matching_avoiding(const Tree& t, Vertex v) {
  if (v < 0 || v >= t.size()) throw DomainError("vertex out of range");
  const Coloring c = canonical_coloring(t);
  if (c.color[v] != Color::Red)
    throw DomainError("vertex " + std::to_string(v) + " is " + std::string(to_string(c.color[v])) + ", not red");
  const Vertex removed[] = {v};
  Matching m = maximum_matching(remove_vertices(t, removed));
  if (m.size() != maximum_matching(t).size())
    throw InvariantError("matching of T minus a red vertex is not maximum in T");
  return m;
}

Matching maximum_matching_containing(const Tree& t, Edge e) {
  if (e.u < 0 || e.v >= t.size() || !t.adjacent(e.u, e.v)) throw DomainError("not an edge of the tree");
  const Coloring c = canonical_coloring(t);
  const bool red_green = (c.color[e.u] == Color::Red && c.color[e.v] == Color::Green) ||
                         (c.color[e.u] == Color::Green && c.color[e.v] == Color::Red);
  if (!red_green) throw DomainError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not red-green");
  const Vertex removed[] = {e.u, e.v};
  Matching m = maximum_matching(remove_vertices(t, removed));
  m.push_back(e);
  std::sort(m.begin(), m.end());
  if (m.size() != maximum_matching(t).size())
    throw InvariantError("matching through a red-green edge is not maximum");
  return m;
}

std::vector<Matching> all_maximum_matchings(const Tree& t) {
  if (t.size() > kMaxOracleSize) throw GuardError("matching enumeration limited to n <= 20");
  const auto& edges = t.edges();
  const std::size_t best_size = maximum_matching(t).size();
  std::vector<Matching> out;
  Matching current;
  std::vector<char> used(t.size(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (current.size() + (edges.size() - i) < best_size) return;
    if (current.size() == best_size) {
      out.push_back(current);
      return;
    }
    if (i == edges.size()) return;
    const Edge& e = edges[i];
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      current.push_back(e);
      self(self, i + 1);
      current.pop_back();
      used[e.u] = used[e.v] = 0;
    }
    self(self, i + 1);
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt count_maximum_independent_sets(const Tree& t) {
  struct Best {
    int size = 0;
    BigInt count = 1;
  };
  auto merge = [](const Best& a, const Best& b) {
    if (a.size != b.size) return a.size > b.size ? a : b;
    return Best{a.size, a.count + b.count};
  };
  std::vector<Vertex> order, parent;
  post_order(t, 0, order, parent);
  std::vector<Best> in(t.size()), out(t.size());
  for (Vertex v : order) {
    in[v] = {1, 1};
    out[v] = {0, 1};
    for (Vertex w : t.neighbors(v)) {
      if (w == parent[v]) continue;
      in[v].size += out[w].size;
      in[v].count *= out[w].count;
      const Best either = merge(in[w], out[w]);
      out[v].size += either.size;
      out[v].count *= either.count;
    }
  }
  return merge(in[0], out[0]).count;
}

void for_each_independent_set(const Tree& t, const std::function<void(std::span<const Vertex>)>& fn) {
  const int n = t.size();
  if (n > kMaxIndependentSetSize) throw GuardError("independent set enumeration limited to n <= 24");
  std::vector<char> chosen(n, 0);
  std::vector<Vertex> current;
  auto rec = [&](auto&& self, Vertex v) -> void {
    if (v == n) {
      fn(current);
      return;
    }
    self(self, v + 1);
    for (Vertex w : t.neighbors(v))
      if (w < v && chosen[w]) return;
    chosen[v] = 1;
    current.push_back(v);
    self(self, v + 1);
    current.pop_back();
    chosen[v] = 0;
  };
  rec(rec, 0);
}

std::vector<std::vector<Vertex>> independent_sets(const Tree& t) {
  std::vector<std::vector<Vertex>> out;
  for_each_independent_set(t, [&](std::span<const Vertex> s) { out.emplace_back(s.begin(), s.end()); });
  return out;
}

std::vector<std::uint64_t> independent_set_size_histogram(const Tree& t) {
  std::vector<std::uint64_t> hist(t.size() + 1, 0);
  for_each_independent_set(t, [&](std::span<const Vertex> s) { ++hist[s.size()]; });
  while (hist.size() > 1 && hist.back() == 0) hist.pop_back();
  return hist;
}

}  // namespace treecount
