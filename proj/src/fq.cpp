#include "treecount/fq.hpp"

#include <string>

#include "treecount/error.hpp"

namespace treecount {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FqContext::FqContext(std::uint32_t q) : q_(q) {
  if (q >= 65536 || !is_prime(q)) throw DomainError("field size " + std::to_string(q) + " is not a prime below 65536");
}

FqElement FqContext::pow(FqElement a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  std::uint64_t result = 1, base = a % q_;
  while (e > 0) {
    if (e & 1) result = result * base % q_;
    base = base * base % q_;
    e >>= 1;
  }
  return static_cast<FqElement>(result);
}

FqElement FqContext::inv(FqElement a) const {
  if (a % q_ == 0) throw DomainError("inverse of zero in F_q");
  return pow(a, q_ - 2);
}

FqElement FqContext::from_int(long long v) const {
  long long r = v % static_cast<long long>(q_);
  return static_cast<FqElement>(r < 0 ? r + q_ : r);
}

}  // namespace treecount
