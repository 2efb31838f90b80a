#include "doctest.h"

#include "stanley/error.hpp"
#include "stanley/monomial.hpp"

using namespace stanley;

TEST_CASE("variable sets") {
  VariableSet s{0, 2, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(s.indices() == std::vector<std::size_t>{0, 2, 5});
  s.erase(2);
  CHECK(s == VariableSet{0, 5});
  CHECK(VariableSet{0}.is_subset_of(s));
  CHECK(VariableSet::all(3) == VariableSet{0, 1, 2});
  CHECK(VariableSet::all(64).size() == 64);
  CHECK(VariableSet().empty());
}

TEST_CASE("monomial arithmetic") {
  const Monomial a{2, 0, 1};
  const Monomial b{1, 3, 0};
  CHECK(a.degree() == 3);
  CHECK(a.support() == VariableSet{0, 2});
  CHECK(a * b == Monomial{3, 3, 1});
  CHECK(lcm(a, b) == Monomial{2, 3, 1});
  CHECK(gcd(a, b) == Monomial{1, 0, 0});
  CHECK(Monomial{1, 0, 0}.divides(a));
  CHECK_FALSE(b.divides(a));
  CHECK((a * b) / b == a);
  CHECK_THROWS_AS(a / b, ContractViolation);
  CHECK(Monomial::unit(3).is_unit());
  CHECK(Monomial::variable(3, 1, 4) == Monomial{0, 4, 0});
  CHECK(a.with_exponent(1, 7) == Monomial{2, 7, 1});
  CHECK(a.without_variable(1) == Monomial{2, 1});
  CHECK(a.with_inserted_variable(0, 5) == Monomial{5, 2, 0, 1});
}

TEST_CASE("monomial ordering is lexicographic") {
  CHECK(Monomial{0, 2} < Monomial{1, 0});
  CHECK(Monomial{1, 0} < Monomial{1, 1});
}

TEST_CASE("ambient mismatch is rejected") {
  CHECK_THROWS_AS(Monomial({1, 0}) * Monomial({1, 0, 0}), DimensionMismatch);
  CHECK_THROWS_AS(Monomial({1}).divides(Monomial({1, 0})), DimensionMismatch);
}

TEST_CASE("exponent overflow is caught") {
  const Monomial big{0xffffffffu};
  CHECK_THROWS(big * Monomial{1});
}
