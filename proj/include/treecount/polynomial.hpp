#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace treecount {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial in q with exact integer coefficients, stored
/// in ascending order without trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> ascending);
  Polynomial(std::initializer_list<long long> ascending);

  static Polynomial constant(const BigInt& c);
  /// c * q^k
  static Polynomial monomial(const BigInt& c, int k);
  /// q - 1, q + 1, q^k - 1 and friends appear everywhere.
  static Polynomial q_power_minus_one(int k) { return monomial(1, k) - constant(1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coefficient(int k) const;

  /// R(q) == q^deg R(1/q), i.e. palindromic coefficients.
  bool is_reciprocal() const;

  BigInt evaluate(const BigInt& q) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial pow(int e) const;

  /// Euclidean division; the divisor's leading coefficient must divide every
  /// intermediate leading coefficient (always true for monic divisors).
  /// Throws DomainError otherwise.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  /// Quotient of an exact division; throws InvariantError on a nonzero remainder.
  Polynomial exact_div(const Polynomial& divisor) const;

  bool operator==(const Polynomial&) const = default;

  /// "q^4 - q^3 + q^2 - q + 1"
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// The d-th cyclotomic polynomial.
Polynomial cyclotomic(int d);

/// Product of q, cyclotomic factors and a leftover cofactor, e.g.
/// "(q - 1)^2 (q + 1)^2". Zero prints as "0".
std::string factored_string(const Polynomial& p);

}  // namespace treecount
