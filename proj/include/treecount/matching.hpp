#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "treecount/tree.hpp"

namespace treecount {

using BigInt = boost::multiprecision::cpp_int;

/// Pairwise vertex-disjoint edges, kept sorted.
using Matching = std::vector<Edge>;

/// True when no vertex is shared and every edge belongs to t.
bool is_matching(const Tree& t, const Matching& m);

/// partner[v] in m, -1 when v is uncovered.
std::vector<Vertex> matching_partners(int n, const Matching& m);

/// Greedy leaf elimination: a leaf is matched to its neighbor whenever both
/// are still free. Maximum on every tree.
Matching maximum_matching(const Tree& t);
Matching maximum_matching(const Forest& f);  // labels of the source tree

/// A maximum matching leaving the red vertex v uncovered. Throws DomainError if
/// v is not red.
Matching maximum_matching_avoiding(const Tree& t, Vertex v);

/// A maximum matching containing the red-green edge e. Throws DomainError if e
/// is not a red-green edge.
Matching maximum_matching_containing(const Tree& t, Edge e);

/// Every maximum matching, in lexicographic order of sorted edge lists. n <= 20.
std::vector<Matching> all_maximum_matchings(const Tree& t);

/// vc(T): number of maximum independent sets, by (size, count) dynamic programming.
BigInt count_maximum_independent_sets(const Tree& t);

constexpr int kMaxIndependentSetSize = 24;

/// Calls fn on every independent set (as a sorted vertex list), the empty set
/// first, in backtracking order over increasing vertex labels. n <= 24.
void for_each_independent_set(const Tree& t, const std::function<void(std::span<const Vertex>)>& fn);

/// Materialized version of for_each_independent_set.
std::vector<std::vector<Vertex>> independent_sets(const Tree& t);

/// Number of independent sets of each size, histogram[s].
std::vector<std::uint64_t> independent_set_size_histogram(const Tree& t);

}  // namespace treecount
