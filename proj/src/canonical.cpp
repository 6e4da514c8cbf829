#include "treecount/canonical.hpp"

#include <algorithm>

#include "treecount/error.hpp"

namespace treecount {

namespace {

struct Signer {
  const Tree& t;
  std::span<const int> labels;
  std::vector<std::string> sig;  // per vertex, for the current rooting
  bool keep_children = false;     // canonical_order reads every signature afterwards

  int label(Vertex v) const { return labels.empty() ? 0 : labels[v]; }

  // Iterative post-order to keep the stack flat on long paths.
  void sign_from(Vertex root, Vertex blocked) {
    std::vector<std::pair<Vertex, Vertex>> order;  // (vertex, parent)
    std::vector<std::pair<Vertex, Vertex>> stack{{root, blocked}};
    while (!stack.empty()) {
      auto [v, p] = stack.back();
      stack.pop_back();
      order.emplace_back(v, p);
      for (Vertex w : t.neighbors(v))
        if (w != p) stack.emplace_back(w, v);
    }
    std::vector<std::string> kids;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto [v, p] = *it;
      kids.clear();
      for (Vertex w : t.neighbors(v))
        if (w != p) kids.push_back(keep_children ? sig[w] : std::move(sig[w]));
      std::sort(kids.begin(), kids.end());
      std::string s;
      s.push_back('(');
      s.push_back(static_cast<char>(label(v)));
      for (auto& k : kids) s += k;
      s.push_back(')');
      sig[v] = std::move(s);
    }
  }
};

void check_labels(const Tree& t, std::span<const int> labels) {
  if (labels.empty()) return;
  if (static_cast<int>(labels.size()) != t.size())
    throw DomainError("canonical_key: label vector has the wrong length");
  for (int l : labels)
    if (l < 0 || l > 255) throw DomainError("canonical_key: label outside 0..255");
}

}  // namespace

std::vector<Vertex> tree_centers(const Tree& t) {
  const int n = t.size();
  if (n <= 2) {
    std::vector<Vertex> all;
    for (int v = 0; v < n; ++v) all.push_back(v);
    return all;
  }
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      deg[v] = 0;
      for (Vertex w : t.neighbors(v))
        if (deg[w] > 0 && --deg[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

CanonicalKey canonical_key(const Tree& t, std::span<const int> labels) {
  check_labels(t, labels);
  Signer s{t, labels, std::vector<std::string>(t.size())};
  const auto centers = tree_centers(t);
  if (centers.size() == 1) {
    s.sign_from(centers[0], -1);
    return "C" + s.sig[centers[0]];
  }
  s.sign_from(centers[0], centers[1]);
  s.sign_from(centers[1], centers[0]);
  const std::string& a = s.sig[centers[0]];
  const std::string& b = s.sig[centers[1]];
  return a <= b ? "B" + a + b : "B" + b + a;
}

CanonicalKey canonical_key(const std::vector<Tree>& components,
                           const std::vector<std::vector<int>>& labels) {
  std::vector<CanonicalKey> keys;
  keys.reserve(components.size());
  for (std::size_t i = 0; i < components.size(); ++i)
    keys.push_back(canonical_key(components[i], labels.empty() ? std::span<const int>{}
                                                               : std::span<const int>(labels[i])));
  std::sort(keys.begin(), keys.end());
  CanonicalKey out = "F";
  for (auto& k : keys) {
    out += std::to_string(k.size());
    out.push_back(':');
    out += k;
  }
  return out;
}

std::vector<Vertex> canonical_order(const Tree& t) {
  Signer s{t, {}, std::vector<std::string>(t.size()), true};
  const auto centers = tree_centers(t);
  std::vector<Vertex> roots;
  std::vector<Vertex> parent(t.size(), -1);
  if (centers.size() == 1) {
    s.sign_from(centers[0], -1);
    roots = {centers[0]};
  } else {
    s.sign_from(centers[0], centers[1]);
    s.sign_from(centers[1], centers[0]);
    roots = centers;
    if (s.sig[roots[1]] < s.sig[roots[0]]) std::swap(roots[0], roots[1]);
    parent[roots[0]] = roots[1];
    parent[roots[1]] = roots[0];
  }
  // Breadth-first numbering, children visited in signature order.
  std::vector<Vertex> perm(t.size(), -1);
  std::vector<Vertex> queue = roots;
  int next = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    perm[v] = next++;
    std::vector<Vertex> kids;
    for (Vertex w : t.neighbors(v))
      if (w != parent[v] && perm[w] < 0 && std::find(roots.begin(), roots.end(), w) == roots.end()) {
        parent[w] = v;
        kids.push_back(w);
      }
    std::stable_sort(kids.begin(), kids.end(),
                     [&](Vertex a, Vertex b) { return s.sig[a] < s.sig[b]; });
    queue.insert(queue.end(), kids.begin(), kids.end());
  }
  return perm;
}

}  // namespace treecount
