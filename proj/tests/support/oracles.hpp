#pragma once

// Brute-force reference implementations used only by the tests. Each one is
// written independently of the library routine it checks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "treecount/tree.hpp"

namespace oracle {

using treecount::Edge;
using treecount::Tree;
using treecount::Vertex;

/// Tree from 1-based edge pairs, shifted to 0-based labels.
inline Tree from_one_based(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> out;
  for (auto [a, b] : edges) out.emplace_back(a - 1, b - 1);
  return Tree::from_edges(n, out);
}

/// The 7-vertex example with edges 1-2, 2-4, 4-3, 4-5, 5-6, 6-7 (0-based here).
inline Tree figure_tree() { return from_one_based(7, {{1, 2}, {2, 4}, {4, 3}, {4, 5}, {5, 6}, {6, 7}}); }

/// Decodes a Pruefer sequence over labels 0..n-1 (length n-2).
inline std::vector<Edge> pruefer_decode(const std::vector<int>& seq, int n) {
  // Linear-time decoding: `ptr` scans for the smallest leaf, and a vertex that
  // becomes a leaf below `ptr` is used immediately.
  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int s : seq) {
    edges.emplace_back(leaf, s);
    degree[leaf] = 0;
    if (--degree[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  int last = n - 1;
  while (last == leaf || degree[last] != 1) --last;
  edges.emplace_back(leaf, last);
  return edges;
}

/// Calls fn on every labeled tree on n >= 2 vertices.
inline void for_each_labeled_tree(int n, const std::function<void(const Tree&)>& fn) {
  if (n == 1) {
    fn(Tree::from_edges(1, {}));
    return;
  }
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    fn(Tree::from_edges(n, pruefer_decode(seq, n)));
    int pos = n - 3;
    while (pos >= 0 && ++seq[pos] == n) seq[pos--] = 0;
    if (pos < 0) return;
  }
}

/// True when some bijection maps a onto b, found by brute force.
inline bool isomorphic_brute(const Tree& a, const Tree& b, const std::vector<int>& la = {},
                             const std::vector<int>& lb = {}) {
  if (a.size() != b.size()) return false;
  const int n = a.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<Edge> eb(b.edges().begin(), b.edges().end());
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (!la.empty() && la[v] != lb[perm[v]]) ok = false;
    for (const Edge& e : a.edges())
      if (ok && !eb.count(Edge(perm[e.u], perm[e.v]))) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// |Aut(t)| by rooted subtree shapes: at every node the children with equal
/// shapes can be permuted freely.
inline std::uint64_t automorphism_count(const Tree& t) {
  const int n = t.size();
  // Centers by repeated leaf stripping.
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      --remaining;
      for (Vertex w : t.neighbors(v))
        if (--deg[w] == 1) next.push_back(w);
    }
    layer = next;
  }
  std::function<std::pair<std::string, std::uint64_t>(int, int)> shape = [&](int v, int parent) {
    std::vector<std::pair<std::string, std::uint64_t>> kids;
    for (Vertex w : t.neighbors(v))
      if (w != parent) kids.push_back(shape(w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "[";
    std::uint64_t aut = 1;
    for (std::size_t i = 0; i < kids.size();) {
      std::size_t j = i;
      while (j < kids.size() && kids[j].first == kids[i].first) ++j;
      for (std::size_t k = 1; k <= j - i; ++k) aut *= k;
      for (std::size_t k = i; k < j; ++k) {
        aut *= kids[k].second;
        s += kids[k].first;
      }
      i = j;
    }
    return std::pair{s + "]", aut};
  };
  if (layer.size() == 1 || n == 1) return shape(layer[0], -1).second;
  const int a = layer[0], b = layer[1];
  auto [sa, aa] = shape(a, b);
  auto [sb, ab] = shape(b, a);
  return aa * ab * (sa == sb ? 2 : 1);
}

/// Every independent set as a bitmask.
inline std::vector<std::uint32_t> independent_masks(const Tree& t) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << t.size()); ++m) {
    bool ok = true;
    for (const Edge& e : t.edges())
      if ((m >> e.u & 1) && (m >> e.v & 1)) ok = false;
    if (ok) out.push_back(m);
  }
  return out;
}

/// Maximum matchings as sorted edge lists, by subsets of edges.
inline std::vector<std::vector<Edge>> maximum_matchings_brute(const Tree& t) {
  const auto& edges = t.edges();
  std::vector<std::vector<Edge>> best;
  std::size_t best_size = 0;
  for (std::uint32_t m = 0; m < (1u << edges.size()); ++m) {
    std::uint32_t used = 0;
    bool ok = true;
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!(m >> i & 1)) continue;
      const std::uint32_t bits = (1u << edges[i].u) | (1u << edges[i].v);
      if (used & bits) ok = false;
      used |= bits;
      chosen.push_back(edges[i]);
    }
    if (!ok) continue;
    if (chosen.size() > best_size) {
      best_size = chosen.size();
      best.clear();
    }
    if (chosen.size() == best_size) best.push_back(chosen);
  }
  std::sort(best.begin(), best.end());
  return best;
}

/// Solutions (x, x') of every exchange relation over F_q, by enumerating both
/// vectors. q^(2n) work.
inline std::uint64_t naive_point_count(const Tree& t, std::uint32_t q, const std::vector<std::uint32_t>& alpha) {
  const int n = t.size();
  std::uint64_t total = 0, space = 1;
  for (int i = 0; i < 2 * n; ++i) space *= q;
  std::vector<std::uint32_t> z(2 * n);
  for (std::uint64_t code = 0; code < space; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < 2 * n; ++i) {
      z[i] = static_cast<std::uint32_t>(c % q);
      c /= q;
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      std::uint64_t rhs = alpha[i];
      for (Vertex j : t.neighbors(i)) rhs = rhs * z[j] % q;
      ok = (std::uint64_t{z[i]} * z[n + i]) % q == (1 + rhs) % q;
    }
    total += ok;
  }
  return total;
}

}  // namespace oracle
