#include "treecount/tree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "treecount/error.hpp"

namespace treecount {

Tree Tree::from_edges(int n, std::vector<Edge> edges) {
  if (n < 1) throw DomainError("tree needs at least one vertex");
  if (static_cast<int>(edges.size()) != n - 1)
    throw DomainError("tree on " + std::to_string(n) + " vertices needs " +
                      std::to_string(n - 1) + " edges, got " +
                      std::to_string(edges.size()));
  std::sort(edges.begin(), edges.end());
  Tree t;
  t.n_ = n;
  t.adjacency_.assign(n, {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 0 || e.v >= n) throw DomainError("edge endpoint out of range");
    if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
    if (i > 0 && edges[i - 1] == e)
      throw DomainError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    t.adjacency_[e.u].push_back(e.v);
    t.adjacency_[e.v].push_back(e.u);
  }
  for (auto& adj : t.adjacency_) std::sort(adj.begin(), adj.end());

  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : t.adjacency_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) throw DomainError("graph is not connected");
  t.edges_ = std::move(edges);
  return t;
}

bool Tree::adjacent(Vertex a, Vertex b) const {
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

Tree Tree::relabeled(std::span<const Vertex> perm) const {
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) edges.emplace_back(perm[e.u], perm[e.v]);
  return from_edges(n_, std::move(edges));
}

int Forest::size() const {
  int total = 0;
  for (const Tree& t : components) total += t.size();
  return total;
}

Forest remove_vertices(const Tree& t, std::span<const Vertex> removed) {
  const int n = t.size();
  std::vector<char> gone(n, 0);
  for (Vertex v : removed) gone.at(v) = 1;

  Forest f;
  std::vector<int> local(n, -1);
  for (Vertex start = 0; start < n; ++start) {
    if (gone[start] || local[start] >= 0) continue;
    std::vector<Vertex> members;
    std::vector<Vertex> stack{start};
    local[start] = 0;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : t.neighbors(v))
        if (!gone[w] && local[w] < 0) {
          local[w] = 0;
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (Vertex v : members)
      for (Vertex w : t.neighbors(v))
        if (v < w && !gone[w]) edges.emplace_back(local[v], local[w]);
    f.components.push_back(Tree::from_edges(static_cast<int>(members.size()), std::move(edges)));
    f.to_parent.push_back(std::move(members));
  }
  return f;
}

Forest as_forest(const Tree& t) {
  Forest f;
  f.components.push_back(t);
  std::vector<Vertex> ids(t.size());
  std::iota(ids.begin(), ids.end(), 0);
  f.to_parent.push_back(std::move(ids));
  return f;
}

Tree path_tree(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Tree::from_edges(n, std::move(edges));
}

Tree star_tree(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Tree::from_edges(leaves + 1, std::move(edges));
}

Tree family_D(int n) {
  if (n < 4) throw DomainError("D_n needs n >= 4");
  std::vector<Edge> edges{{0, 2}, {1, 2}};
  for (int i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Tree::from_edges(n, std::move(edges));
}

Tree family_E(int n) {
  if (n < 5) throw DomainError("E_n needs n >= 5");
  std::vector<Edge> edges{{0, 1}, {1, 3}, {2, 3}};
  for (int i = 3; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Tree::from_edges(n, std::move(edges));
}

EdgeListInput parse_edge_list(std::istream& in, int base) {
  std::vector<std::pair<long, long>> pairs;
  std::vector<long> isolated;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long> nums;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long value = 0;
      try {
        value = std::stol(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || value < 0)
        throw ParseError("edge list line " + std::to_string(lineno) + ": bad label '" + tok + "'");
      nums.push_back(value);
    }
    if (nums.empty()) continue;
    if (nums.size() == 1) {
      isolated.push_back(nums[0]);
    } else if (nums.size() == 2) {
      pairs.emplace_back(nums[0], nums[1]);
    } else {
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
    }
  }
  long lo = -1, hi = -1;
  auto see = [&](long x) {
    lo = lo < 0 ? x : std::min(lo, x);
    hi = std::max(hi, x);
  };
  for (auto [a, b] : pairs) see(a), see(b);
  for (long x : isolated) see(x);
  if (hi < 0) throw ParseError("edge list is empty");
  if (base < 0) base = lo == 0 ? 0 : 1;
  if (base == 1 && lo == 0) throw ParseError("label 0 in a 1-based edge list");
  const long n = hi - base + 1;
  if (n > 4096) throw ParseError("edge list labels too large");
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.emplace_back(static_cast<int>(a - base), static_cast<int>(b - base));
  try {
    return {Tree::from_edges(static_cast<int>(n), std::move(edges)), base};
  } catch (const DomainError& e) {
    throw ParseError(std::string("edge list is not a tree: ") + e.what());
  }
}

}  // namespace treecount
