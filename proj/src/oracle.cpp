#include "treecount/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "treecount/admissible.hpp"
#include "treecount/coloring.hpp"
#include "treecount/counting.hpp"
#include "treecount/error.hpp"
#include "treecount/groupoid.hpp"
#include "treecount/parallel.hpp"

namespace treecount {

namespace {

using u128 = unsigned __int128;

BigInt to_big(u128 v) {
  BigInt out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return out;
}

void check_alpha(const Tree& t, std::span<const FqElement> alpha) {
  if (static_cast<int>(alpha.size()) != t.size()) throw DomainError("one parameter per vertex required");
}

// Multiplicity of x: q^(number of zero coordinates) when every zero
// coordinate satisfies 1 + alpha_i prod_{j~i} x_j = 0, otherwise 0.
std::uint64_t multiplicity(const Tree& t, const FqContext& ctx, std::span<const FqElement> alpha,
                           std::span<const FqElement> x) {
  std::uint64_t weight = 1;
  for (Vertex i = 0; i < t.size(); ++i) {
    if (x[i] != 0) continue;
    FqElement prod = 1;
    for (Vertex j : t.neighbors(i)) prod = ctx.mul(prod, x[j]);
    if (ctx.add(1, ctx.mul(alpha[i], prod)) != 0) return 0;
    weight *= ctx.q();
  }
  return weight;
}

// Sums the multiplicities of every x agreeing with `x` on positions < from.
template <class Visit>
void sweep(const Tree& t, const FqContext& ctx, std::span<const FqElement> alpha, std::vector<FqElement>& x,
           int from, Visit&& visit) {
  const int n = t.size();
  std::fill(x.begin() + from, x.end(), 0);
  for (;;) {
    visit(x, multiplicity(t, ctx, alpha, x));
    int pos = n - 1;
    while (pos >= from && ++x[pos] == ctx.q()) x[pos--] = 0;
    if (pos < from) return;
  }
}

double power(double base, std::size_t e) { return std::pow(base, static_cast<double>(e)); }

}  // namespace

BigInt count_fixed_serial(const Tree& t, const FqContext& ctx, std::span<const FqElement> alpha) {
  check_alpha(t, alpha);
  u128 total = 0;
  std::vector<FqElement> x(t.size(), 0);
  sweep(t, ctx, alpha, x, 0, [&](std::span<const FqElement>, std::uint64_t w) { total += w; });
  return to_big(total);
}

BigInt count_fixed(const Tree& t, const FqContext& ctx, std::span<const FqElement> alpha) {
  check_alpha(t, alpha);
  const int n = t.size();
  const int workers = worker_count();
  int split = 0;
  std::int64_t ranges = 1;
  while (split < n && ranges < 16 * static_cast<std::int64_t>(workers)) {
    ++split;
    ranges *= ctx.q();
  }
  std::vector<u128> partial(static_cast<std::size_t>(ranges), 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t r = 0; r < ranges; ++r) {
    std::vector<FqElement> x(n, 0);
    std::int64_t rest = r;
    for (int pos = split - 1; pos >= 0; --pos) {
      x[pos] = static_cast<FqElement>(rest % ctx.q());
      rest /= ctx.q();
    }
    u128 sum = 0;
    sweep(t, ctx, alpha, x, split, [&](std::span<const FqElement>, std::uint64_t w) { sum += w; });
    partial[r] = sum;
  }
  u128 total = 0;
  for (u128 p : partial) total += p;
  return to_big(total);
}

void for_each_solution(const Tree& t, const FqContext& ctx, std::span<const FqElement> alpha,
                       const std::function<void(std::span<const FqElement>, std::uint64_t)>& fn) {
  check_alpha(t, alpha);
  std::vector<FqElement> x(t.size(), 0);
  sweep(t, ctx, alpha, x, 0, [&](std::span<const FqElement> xs, std::uint64_t w) {
    if (w > 0) fn(xs, w);
  });
}

ParameterDomain ParameterDomain::fixed_values(std::span<const FqElement> alpha) {
  return {std::vector<FqElement>(alpha.begin(), alpha.end()), std::vector<char>(alpha.size(), 0)};
}

BigInt count_fixed_transfer(const Tree& t, const FqContext& ctx, const ParameterDomain& domain) {
  const int n = t.size();
  if (static_cast<int>(domain.fixed.size()) != n || static_cast<int>(domain.summed.size()) != n)
    throw DomainError("parameter domain has the wrong size");
  const std::size_t summed = static_cast<std::size_t>(std::count(domain.summed.begin(), domain.summed.end(), 1));
  if ((2.0 * n + static_cast<double>(summed)) * std::log2(static_cast<double>(ctx.q())) > 126.0)
    throw GuardError("transfer count could overflow 128 bits");
  const std::uint32_t q = ctx.q();

  // factor(v, a, prod): solutions x'_v given x_v = a and the neighbor product.
  auto factor = [&](Vertex v, FqElement a, FqElement prod) -> u128 {
    if (domain.summed[v]) {
      if (a != 0) return q - 1;
      return prod != 0 ? q : 0;
    }
    if (a != 0) return 1;
    return ctx.add(1, ctx.mul(domain.fixed[v], prod)) == 0 ? q : 0;
  };

  std::vector<Vertex> order, parent(n, -1);
  std::deque<Vertex> queue{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (Vertex w : t.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        queue.push_back(w);
      }
  }

  // up[v][a * q + b]: weighted count of the subtree of v with x_v = a and x_parent = b.
  std::vector<std::vector<u128>> up(n);
  u128 total = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    // children[a * q + p]: product of child subtrees with x_v = a and children product p.
    std::vector<u128> children(std::size_t{q} * q, 0), next(std::size_t{q} * q);
    for (FqElement a = 0; a < q; ++a) children[a * q + 1 % q] = 1;
    for (Vertex c : t.neighbors(v)) {
      if (c == parent[v]) continue;
      std::fill(next.begin(), next.end(), 0);
      for (FqElement a = 0; a < q; ++a)
        for (FqElement p = 0; p < q; ++p) {
          const u128 g = children[a * q + p];
          if (g == 0) continue;
          for (FqElement y = 0; y < q; ++y) {
            const u128 h = up[c][y * q + a];
            if (h != 0) next[a * q + ctx.mul(p, y)] += g * h;
          }
        }
      children.swap(next);
      up[c].clear();
    }
    if (parent[v] < 0) {
      for (FqElement a = 0; a < q; ++a)
        for (FqElement p = 0; p < q; ++p)
          if (children[a * q + p]) total += children[a * q + p] * factor(v, a, p);
    } else {
      up[v].assign(std::size_t{q} * q, 0);
      for (FqElement a = 0; a < q; ++a)
        for (FqElement b = 0; b < q; ++b) {
          u128 sum = 0;
          for (FqElement p = 0; p < q; ++p)
            if (children[a * q + p]) sum += children[a * q + p] * factor(v, a, ctx.mul(p, b));
          up[v][a * q + b] = sum;
        }
    }
  }
  return to_big(total);
}

ParameterPlacement place_parameters(const Tree& t, const PhiAssignment& phi) {
  const Coloring c = canonical_coloring(t);
  const RedGreenPartition p = red_green_components(t, c);
  const std::vector<int> labels = phi_labels(p, phi);
  ParameterPlacement out;
  out.matching = maximum_matching(t);
  const auto partner = matching_partners(t.size(), out.matching);
  for (Vertex v = 0; v < t.size(); ++v) {
    if (partner[v] >= 0) continue;
    if (c.color[v] != Color::Red) throw InvariantError("maximum matching leaves a non-red vertex uncovered");
    (labels[v] == static_cast<int>(Phi::Generic) ? out.generic : out.versal).push_back(v);
  }
  return out;
}

PointCount count_points(const Tree& t, const PhiAssignment& phi, const FqContext& ctx, const OracleOptions& options) {
  const int n = t.size();
  const ParameterPlacement place = place_parameters(t, phi);
  const std::uint32_t q = ctx.q();
  if (!options.force) {
    if (power(q - 1, place.generic.size()) > kGenericTupleBudget)
      throw GuardError("generic parameter search exceeds the budget; pass --force to run it");
    if (options.engine == OracleEngine::BruteForce &&
        power(q, static_cast<std::size_t>(n) + place.versal.size()) > kBruteForceBudget)
      throw GuardError("brute-force count exceeds q^(n + versal parameters) > 1e9; pass --force to run it");
  }

  const RedGreenPartition partition = red_green_components(t, canonical_coloring(t));
  std::vector<AdmissibleSet> sets;
  for (std::size_t i = 0; i < partition.size(); ++i)
    if (phi[i] == Phi::Generic)
      for (AdmissibleSet& a : admissible_sets(t, partition.components[i])) sets.push_back(std::move(a));

  std::vector<FqElement> alpha(n, 1);
  auto count_one = [&]() -> BigInt {
    if (options.engine == OracleEngine::Transfer) {
      ParameterDomain domain = ParameterDomain::fixed_values(alpha);
      for (Vertex v : place.versal) domain.summed[v] = 1;
      return count_fixed_transfer(t, ctx, domain);
    }
    BigInt sum = 0;
    std::vector<FqElement> a = alpha;
    for (Vertex v : place.versal) a[v] = 1;
    for (;;) {
      sum += count_fixed(t, ctx, a);
      std::size_t i = 0;
      while (i < place.versal.size() && ++a[place.versal[i]] == q) a[place.versal[i++]] = 1;
      if (i == place.versal.size()) return sum;
    }
  };

  PointCount out;
  for (Vertex v : place.generic) alpha[v] = 1;
  for (;;) {
    ++out.generic_tuples;
    if (genericity_check(sets, alpha, ctx)) {
      ++out.passing_tuples;
      const BigInt value = count_one();
      if (!out.value) {
        out.value = value;
      } else if (*out.value != value) {
        throw InvariantError("point count differs between generic parameter tuples: " + out.value->str() + " vs " +
                             value.str());
      }
    }
    std::size_t i = 0;
    while (i < place.generic.size() && ++alpha[place.generic[i]] == q) alpha[place.generic[i++]] = 1;
    if (i == place.generic.size()) break;
  }
  return out;
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const PrimeCheck& c) { return c.pass(); });
}

std::size_t VerificationReport::skipped() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const PrimeCheck& c) { return c.skipped(); }));
}

VerificationReport verify_polynomial(const Tree& t, const PhiAssignment& phi, std::span<const std::uint32_t> primes,
                                     const OracleOptions& options) {
  VerificationReport report;
  report.polynomial = count_polynomial(t, phi);
  for (std::uint32_t q : primes) {
    const FqContext ctx(q);
    PrimeCheck check;
    check.q = q;
    check.expected = report.polynomial.evaluate(q);
    check.observed = count_points(t, phi, ctx, options).value;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace treecount
