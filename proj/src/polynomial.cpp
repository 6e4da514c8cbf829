#include "treecount/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "treecount/error.hpp"

namespace treecount {

Polynomial::Polynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long long> ascending) {
  for (long long c : ascending) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const BigInt& c) { return Polynomial(std::vector<BigInt>{c}); }

Polynomial Polynomial::monomial(const BigInt& c, int k) {
  std::vector<BigInt> v(k + 1, 0);
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::coefficient(int k) const {
  return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : BigInt(0);
}

bool Polynomial::is_reciprocal() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

BigInt Polynomial::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw DomainError("negative polynomial power");
  Polynomial result = constant(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<BigInt> rem = coeffs_;
  const int dd = divisor.degree();
  const BigInt& lead = divisor.coeffs_.back();
  std::vector<BigInt> quot(std::max(0, degree() - dd + 1), 0);
  for (int k = degree(); k >= dd; --k) {
    if (rem[k] == 0) continue;
    if (rem[k] % lead != 0) throw DomainError("polynomial division leaves the integers");
    const BigInt factor = rem[k] / lead;
    quot[k - dd] = factor;
    for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= factor * divisor.coeffs_[i];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
  auto [quot, rem] = divmod(divisor);
  if (!rem.is_zero())
    throw InvariantError("inexact division: (" + to_string() + ") / (" + divisor.to_string() + ") leaves " +
                         rem.to_string());
  return quot;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.str();
    if (k > 0) {
      if (mag != 1) out += "*";
      out += "q";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Polynomial cyclotomic(int d) {
  if (d < 1) throw DomainError("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<int, Polynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  Polynomial p = Polynomial::q_power_minus_one(d);
  for (int e = 1; e < d; ++e)
    if (d % e == 0) p = p.exact_div(cyclotomic(e));
  std::lock_guard lock(mutex);
  cache.emplace(d, p);
  return p;
}

std::string factored_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<std::string, int>> factors;
  Polynomial rest = p;
  const Polynomial q = Polynomial::monomial(1, 1);
  auto strip = [&](const Polynomial& f) {
    int mult = 0;
    while (rest.degree() >= f.degree()) {
      auto [quot, rem] = rest.divmod(f);
      if (!rem.is_zero()) break;
      rest = quot;
      ++mult;
    }
    if (mult > 0) factors.emplace_back(f.degree() == 1 && f.coefficient(0) == 0 ? "q" : "(" + f.to_string() + ")", mult);
  };
  strip(q);
  for (int d = 1; rest.degree() > 0 && d <= 4 * p.degree() + 4; ++d) strip(cyclotomic(d));
  std::string out;
  if (rest != Polynomial::constant(1)) {
    if (rest == Polynomial::constant(-1) && !factors.empty()) {
      out = "-";
    } else {
      out = rest.degree() == 0 ? rest.to_string() : "(" + rest.to_string() + ")";
    }
  }
  for (auto& [text, mult] : factors) {
    if (!out.empty() && out != "-") out += " ";
    out += text;
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  return out.empty() ? "1" : out;
}

}  // namespace treecount
