#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "treecount/fq.hpp"
#include "treecount/matching.hpp"
#include "treecount/phi.hpp"
#include "treecount/polynomial.hpp"
#include "treecount/tree.hpp"

namespace treecount {

/// Number of solutions (x, x') of x_i x'_i = 1 + alpha_i prod_{j~i} x_j over
/// F_q, by enumerating x in F_q^n. alpha has one entry per vertex.
BigInt count_fixed_serial(const Tree& t, const FqContext& ctx, std::span<const FqElement> alpha);

/// Same count with the x-space split into disjoint prefix ranges that OpenMP
/// workers sum independently. Deterministic for any worker count.
BigInt count_fixed(const Tree& t, const FqContext& ctx, std::span<const FqElement> alpha);

/// Calls fn(x, multiplicity) for every x with at least one solution x'.
void for_each_solution(const Tree& t, const FqContext& ctx, std::span<const FqElement> alpha,
                       const std::function<void(std::span<const FqElement>, std::uint64_t)>& fn);

/// Parameter of each vertex for the transfer count: a fixed value, or summed
/// over all of F_q^* when `summed[v]` is set.
struct ParameterDomain {
  std::vector<FqElement> fixed;
  std::vector<char> summed;

  static ParameterDomain fixed_values(std::span<const FqElement> alpha);
};

/// Exact count by elimination along the tree, O(n q^3). Agrees with
/// count_fixed summed over the summed parameters. Throws GuardError when the
/// result could exceed 128 bits.
BigInt count_fixed_transfer(const Tree& t, const FqContext& ctx, const ParameterDomain& domain);

enum class OracleEngine : std::uint8_t { Transfer, BruteForce };

struct OracleOptions {
  OracleEngine engine = OracleEngine::Transfer;
  /// Lifts the time guards.
  bool force = false;
};

/// Brute-force jobs with q^(n + #versal parameters) above this are refused.
constexpr double kBruteForceBudget = 1e9;
/// Generic parameter searches with more tuples than this are refused.
constexpr double kGenericTupleBudget = 1e6;

/// Parameter layout used by count_points: one parameter on each red vertex
/// left uncovered by the matching, all other parameters equal to 1.
struct ParameterPlacement {
  Matching matching;
  std::vector<Vertex> generic;  // parameter vertices in Generic components
  std::vector<Vertex> versal;   // parameter vertices in Versal components
};

ParameterPlacement place_parameters(const Tree& t, const PhiAssignment& phi);

struct PointCount {
  /// Empty when no nonzero parameter tuple passes the genericity check.
  std::optional<BigInt> value;
  std::uint64_t generic_tuples = 0;  // tuples examined
  std::uint64_t passing_tuples = 0;  // tuples passing genericity

  bool no_generic_parameters() const { return !value.has_value(); }
};

/// |X^phi_T(F_q)|. Versal parameters are summed over F_q^*. Every generic
/// tuple is counted and the counts must agree (InvariantError otherwise).
/// Throws GuardError when a time guard refuses the job.
PointCount count_points(const Tree& t, const PhiAssignment& phi, const FqContext& ctx,
                        const OracleOptions& options = {});

struct PrimeCheck {
  std::uint32_t q = 0;
  BigInt expected;
  std::optional<BigInt> observed;  // empty when skipped

  bool skipped() const { return !observed.has_value(); }
  bool pass() const { return skipped() || *observed == expected; }
};

struct VerificationReport {
  Polynomial polynomial;
  std::vector<PrimeCheck> checks;

  bool pass() const;
  std::size_t skipped() const;
};

/// Evaluates count_polynomial at each prime and compares with count_points.
VerificationReport verify_polynomial(const Tree& t, const PhiAssignment& phi, std::span<const std::uint32_t> primes,
                                     const OracleOptions& options = {});

}  // namespace treecount
