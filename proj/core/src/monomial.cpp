#include "stanley/monomial.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "stanley/error.hpp"

namespace stanley {

VariableSet::VariableSet(std::initializer_list<std::size_t> indices) {
  for (std::size_t j : indices) {
    if (j >= kMaxVariables)
      throw ContractViolation("variable index out of range");
    insert(j);
  }
}

VariableSet VariableSet::all(std::size_t n) {
  if (n > kMaxVariables)
    throw ContractViolation("at most 64 variables are supported");
  return VariableSet(n == kMaxVariables ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << n) - 1);
}

std::size_t VariableSet::size() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<std::size_t> VariableSet::indices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

Monomial::Monomial(std::vector<Exponent> exponents)
    : exps_(std::move(exponents)) {
  if (exps_.size() > VariableSet::kMaxVariables)
    throw ContractViolation("at most 64 variables are supported");
}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::vector<Exponent>(exponents)) {}

Monomial Monomial::unit(std::size_t n) {
  return Monomial(std::vector<Exponent>(n, 0));
}

Monomial Monomial::variable(std::size_t n, std::size_t j, Exponent e) {
  if (j >= n)
    throw ContractViolation("variable index out of range");
  std::vector<Exponent> v(n, 0);
  v[j] = e;
  return Monomial(std::move(v));
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_)
    d += e;
  return d;
}

VariableSet Monomial::support() const {
  VariableSet s;
  for (std::size_t j = 0; j < exps_.size(); ++j)
    if (exps_[j] > 0)
      s.insert(j);
  return s;
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e == 0; });
}

void check_same_ambient(const Monomial &a, const Monomial &b) {
  if (a.ambient() != b.ambient())
    throw DimensionMismatch("monomials live in " +
                            std::to_string(a.ambient()) + " and " +
                            std::to_string(b.ambient()) + " variables");
}

bool Monomial::divides(const Monomial &other) const {
  check_same_ambient(*this, other);
  for (std::size_t j = 0; j < exps_.size(); ++j)
    if (exps_[j] > other.exps_[j])
      return false;
  return true;
}

Monomial Monomial::operator*(const Monomial &other) const {
  check_same_ambient(*this, other);
  std::vector<Exponent> v(exps_.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (other.exps_[j] > std::numeric_limits<Exponent>::max() - exps_[j])
      throw ContractViolation("exponent overflow");
    v[j] = exps_[j] + other.exps_[j];
  }
  return Monomial(std::move(v));
}

Monomial Monomial::operator/(const Monomial &divisor) const {
  if (!divisor.divides(*this))
    throw ContractViolation("inexact monomial division");
  std::vector<Exponent> v(exps_.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    v[j] = exps_[j] - divisor.exps_[j];
  return Monomial(std::move(v));
}

Monomial lcm(const Monomial &a, const Monomial &b) {
  check_same_ambient(a, b);
  std::vector<Exponent> v(a.exps_.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    v[j] = std::max(a.exps_[j], b.exps_[j]);
  return Monomial(std::move(v));
}

Monomial gcd(const Monomial &a, const Monomial &b) {
  check_same_ambient(a, b);
  std::vector<Exponent> v(a.exps_.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    v[j] = std::min(a.exps_[j], b.exps_[j]);
  return Monomial(std::move(v));
}

Monomial Monomial::with_exponent(std::size_t j, Exponent e) const {
  if (j >= exps_.size())
    throw ContractViolation("variable index out of range");
  Monomial out = *this;
  out.exps_[j] = e;
  return out;
}

Monomial Monomial::without_variable(std::size_t j) const {
  if (j >= exps_.size())
    throw ContractViolation("variable index out of range");
  std::vector<Exponent> v = exps_;
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
  return Monomial(std::move(v));
}

Monomial Monomial::with_inserted_variable(std::size_t j, Exponent e) const {
  if (j > exps_.size())
    throw ContractViolation("variable index out of range");
  std::vector<Exponent> v = exps_;
  v.insert(v.begin() + static_cast<std::ptrdiff_t>(j), e);
  return Monomial(std::move(v));
}

} // namespace stanley
