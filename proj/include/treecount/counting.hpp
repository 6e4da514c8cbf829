#pragma once

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "treecount/canonical.hpp"
#include "treecount/phi.hpp"
#include "treecount/polynomial.hpp"
#include "treecount/tree.hpp"

namespace treecount {

/// Polynomials of already counted decorated trees, keyed by canonical key.
class CountMemo {
 public:
  enum class Mode : std::uint8_t {
    Unsynchronized,  // one owner thread
    Shared,          // any number of threads
  };

  explicit CountMemo(Mode mode = Mode::Unsynchronized) : mode_(mode) {}
  CountMemo(const CountMemo&) = delete;
  CountMemo& operator=(const CountMemo&) = delete;

  std::optional<Polynomial> find(const CanonicalKey& key) const;
  void store(const CanonicalKey& key, const Polynomial& value);
  std::size_t size() const;
  Mode mode() const { return mode_; }

 private:
  Mode mode_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<CanonicalKey, Polynomial> table_;
};

struct CountOptions {
  /// nullptr: a private memo for this call.
  CountMemo* memo = nullptr;
  /// When set, red leaves and dominoes are drawn at random instead of by the
  /// balance heuristic. The result must not depend on it.
  std::optional<std::uint64_t> seed;
};

/// N^phi_T(q). phi is indexed like red_green_components(t, canonical_coloring(t)).
/// Throws DomainError when phi does not cover the components.
Polynomial count_polynomial(const Tree& t, const PhiAssignment& phi, const CountOptions& options = {});

/// Product over components; phis[c] belongs to f.components[c].
Polynomial count_polynomial(const Forest& f, std::span<const PhiAssignment> phis,
                            const CountOptions& options = {});

/// Same recursion on a per-vertex decoration as produced by phi_labels.
Polynomial count_labeled(const Tree& t, std::span<const int> labels, const CountOptions& options = {});

/// Every component set to the same choice. Orange trees ignore the choice.
Polynomial count_uniform(const Tree& t, Phi value, const CountOptions& options = {});

enum class FamilyMode : std::uint8_t { Orange, Generic, Versal };

/// Closed forms for the families A_n, D_n, E_n. Orange is required exactly
/// when the tree is orange: n even for A, never for D, n even for E.
/// Throws DomainError on an inconsistent mode or too small n.
Polynomial closed_form_A(int n, FamilyMode mode);
Polynomial closed_form_D(int n, FamilyMode mode);
Polynomial closed_form_E(int n, FamilyMode mode);

/// Sum over independent sets S of (q-1)^(n + dim - 2|S|) q^|S|. n <= 24.
Polynomial versal_by_independent_sets(const Tree& t);

/// N^versal_T(1).
BigInt euler_characteristic(const Tree& t);

struct ReciprocityReport {
  bool divisible = false;
  bool reciprocal = false;
  Polynomial quotient;  // p / (q-1)^rank when divisible
};

/// Divides p by (q-1)^rank and checks that the quotient is palindromic.
ReciprocityReport reciprocity_report(const Polynomial& p, int rank);

/// N_T for an orange tree, N^versal_T for a unimodal one, computed only from
/// even-path closed forms and the leaf-removal relations between orange and
/// unimodal trees. Throws DomainError for other trees and InvariantError if
/// the reduction revisits a tree.
Polynomial orange_unimodal_chain(const Tree& t);

enum class CensusClass : std::uint8_t { Orange, UnimodalVersal, UnimodalGeneric };

enum class CensusParallelism : std::uint8_t {
  Serial,
  PerWorkerMemo,  // each worker owns an unsynchronized memo
  SharedMemo,     // one memo shared by all workers
};

struct CensusEntry {
  Tree tree;  // canonical form
  std::string graph6;
  CanonicalKey key;
  Polynomial polynomial;
};

struct CensusResult {
  int n = 0;
  CensusClass cls = CensusClass::Orange;
  std::vector<CensusEntry> entries;  // trees of the class, enumeration order
  std::size_t distinct_polynomials = 0;
  /// Indices into entries sharing a polynomial, for every polynomial shared by
  /// two or more trees. Sorted.
  std::vector<std::vector<std::size_t>> collisions;

  std::size_t tree_count() const { return entries.size(); }
  /// Index of the entry isomorphic to t, if t belongs to the class.
  std::optional<std::size_t> find(const Tree& t) const;
};

constexpr int kMaxCensusSize = 14;

/// Enumerates the trees on n vertices of the class and buckets their
/// polynomials. Every parallelism mode returns the same result. n <= 14.
CensusResult census(int n, CensusClass cls, CensusParallelism mode = CensusParallelism::PerWorkerMemo);

std::string_view to_string(CensusClass c);
std::string_view to_string(FamilyMode m);

}  // namespace treecount
