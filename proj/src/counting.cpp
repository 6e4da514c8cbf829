#include "treecount/counting.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "treecount/coloring.hpp"
#include "treecount/enumerate.hpp"
#include "treecount/error.hpp"
#include "treecount/graph6.hpp"
#include "treecount/matching.hpp"
#include "treecount/parallel.hpp"

namespace treecount {

std::optional<Polynomial> CountMemo::find(const CanonicalKey& key) const {
  std::shared_lock<std::shared_mutex> lock;
  if (mode_ == Mode::Shared) lock = std::shared_lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void CountMemo::store(const CanonicalKey& key, const Polynomial& value) {
  std::unique_lock<std::shared_mutex> lock;
  if (mode_ == Mode::Shared) lock = std::unique_lock(mutex_);
  table_.emplace(key, value);
}

std::size_t CountMemo::size() const {
  std::shared_lock<std::shared_mutex> lock;
  if (mode_ == Mode::Shared) lock = std::shared_lock(mutex_);
  return table_.size();
}

namespace {

const Polynomial kQ = Polynomial::monomial(1, 1);
const Polynomial kQMinusOne{-1, 1};
const Polynomial kVersalPoint{1, -1, 1};

constexpr int kGeneric = static_cast<int>(Phi::Generic);
constexpr int kVersal = static_cast<int>(Phi::Versal);

int largest_component(const Forest& f) {
  int best = 0;
  for (const Tree& c : f.components) best = std::max(best, c.size());
  return best;
}

std::vector<int> restrict_labels(std::span<const int> labels, const std::vector<Vertex>& to_parent) {
  std::vector<int> out;
  out.reserve(to_parent.size());
  for (Vertex p : to_parent) out.push_back(labels[p]);
  return out;
}

class Counter {
 public:
  Counter(CountMemo& memo, std::optional<std::uint64_t> seed) : memo_(memo) {
    if (seed) rng_.emplace(*seed);
  }

  Polynomial tree(const Tree& t, std::vector<int> labels) {
    const Coloring c = canonical_coloring(t);
    const RedGreenPartition p = red_green_components(t, c);
    for (Vertex v = 0; v < t.size(); ++v) {
      if (c.color[v] == Color::Orange) {
        labels[v] = 0;
      } else if (labels[v] != kGeneric && labels[v] != kVersal) {
        throw InvariantError("vertex " + std::to_string(v) + " is " + std::string(to_string(c.color[v])) +
                             " but carries no phi value");
      }
    }
    for (const RedGreenComponent& comp : p.components)
      for (Vertex v : comp.vertices)
        if (labels[v] != labels[comp.vertices.front()])
          throw InvariantError("phi is not constant on a red-green component");

    if (t.size() == 1) return labels[0] == kGeneric ? kQMinusOne : kVersalPoint;

    const CanonicalKey key = canonical_key(t, labels);
    if (auto hit = memo_.find(key)) return *hit;
    const Polynomial result = p.size() > 0 ? red_leaf_step(t, c, labels) : domino_step(t, c);
    memo_.store(key, result);
    return result;
  }

  Polynomial forest(const Forest& f, std::span<const int> parent_labels) {
    Polynomial acc = Polynomial::constant(1);
    for (std::size_t i = 0; i < f.components.size(); ++i)
      acc *= tree(f.components[i], restrict_labels(parent_labels, f.to_parent[i]));
    return acc;
  }

  Polynomial versal_forest(const Forest& f) {
    Polynomial acc = Polynomial::constant(1);
    for (const Tree& comp : f.components) acc *= tree(comp, std::vector<int>(comp.size(), kVersal));
    return acc;
  }

 private:
  template <class Candidate, class Score>
  Candidate choose(const std::vector<Candidate>& candidates, Score score) {
    if (rng_) return candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(*rng_)];
    std::size_t best = 0;
    int best_score = score(candidates[0]);
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      const int s = score(candidates[i]);
      if (s < best_score) best = i, best_score = s;
    }
    return candidates[best];
  }

  Polynomial red_leaf_step(const Tree& t, const Coloring& c, const std::vector<int>& labels) {
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < t.size(); ++v)
      if (c.color[v] == Color::Red && t.degree(v) == 1) leaves.push_back(v);
    if (leaves.empty()) throw InvariantError("red-green component without a red leaf of the tree");
    const Vertex v = choose(leaves, [&](Vertex x) {
      const Vertex pair[] = {x, t.neighbors(x)[0]};
      return largest_component(remove_vertices(t, pair));
    });
    const Vertex u = t.neighbors(v)[0];
    const Vertex single[] = {v};
    const Vertex pair[] = {u, v};
    const Forest without_v = remove_vertices(t, single);
    const Forest rest = remove_vertices(t, pair);
    const Polynomial factor = labels[v] == kGeneric ? kQMinusOne : kQMinusOne * kQMinusOne;
    return factor * forest(without_v, labels) + kQ * forest(rest, labels);
  }

  Polynomial domino_step(const Tree& t, const Coloring& c) {
    if (c.orange_dominoes.empty()) throw InvariantError("tree without red-green component has no domino");
    const Edge e = choose(c.orange_dominoes, [&](const Edge& d) {
      const Vertex pair[] = {d.u, d.v};
      return largest_component(remove_vertices(t, pair));
    });
    const Vertex pair[] = {e.u, e.v};
    const Forest rest = remove_vertices(t, pair);
    const std::vector<int> orange(t.size(), 0);
    // Products over the pieces hanging off u (side 0) and off v (side 1).
    Polynomial whole[2] = {Polynomial::constant(1), Polynomial::constant(1)};
    Polynomial trimmed[2] = {Polynomial::constant(1), Polynomial::constant(1)};
    for (std::size_t i = 0; i < rest.components.size(); ++i) {
      const Tree& piece = rest.components[i];
      int side = -1;
      Vertex attach = -1;
      for (Vertex local = 0; local < piece.size(); ++local) {
        const Vertex parent = rest.to_parent[i][local];
        if (t.adjacent(parent, e.u)) side = 0, attach = local;
        if (t.adjacent(parent, e.v)) side = 1, attach = local;
      }
      if (side < 0) throw InvariantError("piece of T minus a domino is not attached to it");
      whole[side] *= tree(piece, restrict_labels(orange, rest.to_parent[i]));
      const Vertex cut[] = {attach};
      trimmed[side] *= versal_forest(remove_vertices(piece, cut));
    }
    return kQMinusOne * kQMinusOne * whole[0] * whole[1] + kQ * trimmed[0] * whole[1] + kQ * whole[0] * trimmed[1];
  }

  CountMemo& memo_;
  std::optional<std::mt19937_64> rng_;
};

}  // namespace

Polynomial count_labeled(const Tree& t, std::span<const int> labels, const CountOptions& options) {
  if (t.size() == 0) return Polynomial::constant(1);
  if (static_cast<int>(labels.size()) != t.size()) throw DomainError("one phi label per vertex required");
  CountMemo local;
  Counter counter(options.memo ? *options.memo : local, options.seed);
  return counter.tree(t, std::vector<int>(labels.begin(), labels.end()));
}

Polynomial count_polynomial(const Tree& t, const PhiAssignment& phi, const CountOptions& options) {
  const RedGreenPartition p = red_green_components(t, canonical_coloring(t));
  return count_labeled(t, phi_labels(p, phi), options);
}

Polynomial count_polynomial(const Forest& f, std::span<const PhiAssignment> phis, const CountOptions& options) {
  if (phis.size() != f.components.size()) throw DomainError("one phi assignment per forest component required");
  Polynomial acc = Polynomial::constant(1);
  for (std::size_t i = 0; i < f.components.size(); ++i) acc *= count_polynomial(f.components[i], phis[i], options);
  return acc;
}

Polynomial count_uniform(const Tree& t, Phi value, const CountOptions& options) {
  const RedGreenPartition p = red_green_components(t, canonical_coloring(t));
  return count_labeled(t, phi_labels(p, uniform_phi(p, value)), options);
}

namespace {

Polynomial qp(int k) { return Polynomial::monomial(1, k); }

void require_mode(bool orange, FamilyMode mode, const char* family, int n) {
  if (orange != (mode == FamilyMode::Orange))
    throw DomainError(std::string(family) + "_" + std::to_string(n) + (orange ? " is orange" : " is not orange") +
                      ", mode " + std::string(to_string(mode)) + " does not apply");
}

}  // namespace

Polynomial closed_form_A(int n, FamilyMode mode) {
  if (n < 1) throw DomainError("A_n needs n >= 1");
  require_mode(n % 2 == 0, mode, "A", n);
  const Polynomial one = Polynomial::constant(1);
  if (n % 2 == 0) return (qp(n + 2) - one).exact_div(qp(2) - one);
  if (mode == FamilyMode::Versal) return (qp(n + 2) + one).exact_div(qp(1) + one);
  return ((qp((n + 1) / 2) - one) * (qp((n + 3) / 2) - one)).exact_div(qp(2) - one);
}

Polynomial closed_form_D(int n, FamilyMode mode) {
  if (n < 4) throw DomainError("D_n needs n >= 4");
  require_mode(false, mode, "D", n);
  const Polynomial one = Polynomial::constant(1);
  if (n % 2 == 0) {
    if (mode == FamilyMode::Generic) return (qp(n / 2) - one).pow(2);
    return (qp(n + 3) - qp(n + 2) + qp(n) + qp(3) - qp(1) + one).exact_div(qp(1) + one);
  }
  if (mode == FamilyMode::Generic) return qp(n) - one;
  return (qp(n + 3) - qp(n + 2) + qp(n) - qp(3) + qp(1) - one).exact_div(qp(2) - one);
}

Polynomial closed_form_E(int n, FamilyMode mode) {
  if (n < 5) throw DomainError("E_n needs n >= 5");
  require_mode(n % 2 == 0, mode, "E", n);
  const Polynomial one = Polynomial::constant(1);
  const Polynomial hexagon = qp(2) - qp(1) + one;
  if (n % 2 == 0) return (hexagon * (qp(n - 1) - one)).exact_div(qp(1) - one);
  if (mode == FamilyMode::Versal) return hexagon * (one + qp(n - 1));
  return (qp(n + 1) - qp(n) + qp(n - 1) - qp((n + 3) / 2) - qp((n - 1) / 2) + qp(2) - qp(1) + one)
      .exact_div(qp(1) - one);
}

Polynomial versal_by_independent_sets(const Tree& t) {
  const auto hist = independent_set_size_histogram(t);
  const int base = t.size() + dimension(t);
  Polynomial acc;
  for (std::size_t s = 0; s < hist.size(); ++s) {
    if (hist[s] == 0) continue;
    const int k = base - 2 * static_cast<int>(s);
    if (k < 0) throw InvariantError("negative torus exponent in the independent-set formula");
    acc += Polynomial::constant(BigInt(hist[s])) * kQMinusOne.pow(k) * qp(static_cast<int>(s));
  }
  return acc;
}

BigInt euler_characteristic(const Tree& t) { return count_uniform(t, Phi::Versal).evaluate(1); }

ReciprocityReport reciprocity_report(const Polynomial& p, int rank) {
  if (rank < 0) throw DomainError("negative rank");
  ReciprocityReport r;
  auto [quot, rem] = p.divmod(kQMinusOne.pow(rank));
  r.divisible = rem.is_zero();
  if (r.divisible) {
    r.quotient = quot;
    r.reciprocal = quot.is_reciprocal();
  }
  return r;
}

namespace {

int branch_length(const Tree& t, Vertex leaf) {
  if (t.degree(leaf) == 0) return 0;
  Vertex prev = leaf, x = t.neighbors(leaf)[0];
  int len = 0;
  while (t.degree(x) == 2) {
    ++len;
    const Vertex next = t.neighbors(x)[0] == prev ? t.neighbors(x)[1] : t.neighbors(x)[0];
    prev = x;
    x = next;
  }
  return len;
}

bool is_path(const Tree& t) {
  for (Vertex v = 0; v < t.size(); ++v)
    if (t.degree(v) > 2) return false;
  return true;
}

Tree with_leaf(const Tree& t, Vertex w) {
  std::vector<Edge> edges = t.edges();
  edges.emplace_back(w, t.size());
  return Tree::from_edges(t.size() + 1, std::move(edges));
}

class Chain {
 public:
  Polynomial run(const Tree& t) {
    const TreeClass cls = classify(t);
    if (cls.kind == TreeKind::Other)
      throw DomainError("tree of dimension " + std::to_string(cls.dimension) + " is neither orange nor unimodal");
    const CanonicalKey key = canonical_key(t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (!active_.insert(key).second) throw InvariantError("orange/unimodal reduction revisits a tree");
    const Polynomial result = cls.kind == TreeKind::Orange ? orange(t) : unimodal(t);
    active_.erase(key);
    memo_.emplace(key, result);
    return result;
  }

 private:
  Polynomial product(const Forest& f) {
    Polynomial acc = Polynomial::constant(1);
    for (const Tree& c : f.components) acc *= run(c);
    return acc;
  }

  Polynomial orange(const Tree& t) {
    if (is_path(t)) return closed_form_A(t.size(), FamilyMode::Orange);
    Vertex v = -1;
    for (Vertex x = 0; x < t.size(); ++x)
      if (t.is_leaf(x) && (v < 0 || branch_length(t, x) < branch_length(t, v))) v = x;
    const Vertex u = t.neighbors(v)[0];
    const Vertex single[] = {v};
    const Vertex pair[] = {u, v};
    return product(remove_vertices(t, single)) + kQ * product(remove_vertices(t, pair));
  }

  Polynomial unimodal(const Tree& t) {
    const Coloring c = canonical_coloring(t);
    Vertex w = -1;
    for (Vertex x = 0; x < t.size(); ++x)
      if (t.is_leaf(x) && c.color[x] == Color::Red && (w < 0 || branch_length(t, x) > branch_length(t, w))) w = x;
    if (w < 0) throw InvariantError("unimodal tree without a red leaf");
    const Vertex single[] = {w};
    return run(with_leaf(t, w)) - kQ * product(remove_vertices(t, single));
  }

  std::map<CanonicalKey, Polynomial> memo_;
  std::set<CanonicalKey> active_;
};

}  // namespace

Polynomial orange_unimodal_chain(const Tree& t) { return Chain().run(t); }

std::optional<std::size_t> CensusResult::find(const Tree& t) const {
  const CanonicalKey key = canonical_key(t);
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].key == key) return i;
  return std::nullopt;
}

CensusResult census(int n, CensusClass cls, CensusParallelism mode) {
  if (n < 1 || n > kMaxCensusSize) throw GuardError("census limited to 1 <= n <= 14");
  CensusResult result;
  result.n = n;
  result.cls = cls;
  const int wanted_dimension = cls == CensusClass::Orange ? 0 : 1;
  for (const Tree& t : enumerate_free_trees(n))
    if (dimension(t) == wanted_dimension) result.entries.push_back({t, emit_graph6(t), canonical_key(t), {}});

  const Phi value = cls == CensusClass::UnimodalGeneric ? Phi::Generic : Phi::Versal;
  const auto count = static_cast<std::ptrdiff_t>(result.entries.size());
  if (mode == CensusParallelism::Serial) {
    CountMemo memo;
    for (auto& e : result.entries) e.polynomial = count_uniform(e.tree, value, {&memo, std::nullopt});
  } else {
    CountMemo shared(CountMemo::Mode::Shared);
    std::exception_ptr failure;
    std::mutex failure_mutex;
#pragma omp parallel num_threads(worker_count())
    {
      CountMemo own;
      CountMemo& memo = mode == CensusParallelism::SharedMemo ? shared : own;
#pragma omp for schedule(dynamic, 1)
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
          result.entries[i].polynomial = count_uniform(result.entries[i].tree, value, {&memo, std::nullopt});
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::map<std::vector<BigInt>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < result.entries.size(); ++i)
    buckets[result.entries[i].polynomial.coeffs()].push_back(i);
  result.distinct_polynomials = buckets.size();
  for (auto& [coeffs, members] : buckets)
    if (members.size() > 1) result.collisions.push_back(members);
  std::sort(result.collisions.begin(), result.collisions.end());
  return result;
}

std::string_view to_string(CensusClass c) {
  switch (c) {
    case CensusClass::Orange: return "orange";
    case CensusClass::UnimodalVersal: return "unimodal-versal";
    case CensusClass::UnimodalGeneric: return "unimodal-generic";
  }
  return "?";
}

std::string_view to_string(FamilyMode m) {
  switch (m) {
    case FamilyMode::Orange: return "orange";
    case FamilyMode::Generic: return "generic";
    case FamilyMode::Versal: return "versal";
  }
  return "?";
}

}  // namespace treecount
