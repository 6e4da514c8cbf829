#pragma once

#include <cstdint>

namespace treecount {

using FqElement = std::uint32_t;

/// Prime field F_q with q < 2^16. Elements are residues 0..q-1.
class FqContext {
 public:
  /// Throws DomainError unless q is a prime below 65536.
  explicit FqContext(std::uint32_t q);

  std::uint32_t q() const { return q_; }
  FqElement add(FqElement a, FqElement b) const { return (a + b) % q_; }
  FqElement mul(FqElement a, FqElement b) const { return static_cast<FqElement>((std::uint64_t{a} * b) % q_); }
  FqElement neg(FqElement a) const { return a == 0 ? 0 : q_ - a; }
  FqElement minus_one() const { return q_ - 1; }
  /// Throws DomainError on zero.
  FqElement inv(FqElement a) const;
  FqElement pow(FqElement a, long long e) const;
  FqElement from_int(long long v) const;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint32_t n);

}  // namespace treecount
