#include <doctest.h>

#include "support/oracles.hpp"
#include "treecount/counting.hpp"
#include "treecount/enumerate.hpp"
#include "treecount/error.hpp"
#include "treecount/graph6.hpp"
#include "treecount/groupoid.hpp"
#include "treecount/matching.hpp"

using namespace treecount;

namespace {

const Polynomial q{0, 1};
const Polynomial one{1};

Polynomial qp(int k) { return Polynomial::monomial(1, k); }

std::size_t components(const Tree& t) { return red_green_components(t, canonical_coloring(t)).size(); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Polynomial a{1, 1}, b{-1, 1};
  CHECK(a * b == Polynomial{-1, 0, 1});
  CHECK((a + b) == Polynomial{0, 2});
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(a.pow(3) == Polynomial{1, 3, 3, 1});
  CHECK(a.pow(0) == one);
  CHECK((qp(3) - one).exact_div(b) == Polynomial{1, 1, 1});
  CHECK_THROWS_AS((qp(3) + one).exact_div(b), InvariantError);
  CHECK_THROWS_AS(a.divmod(Polynomial{}), DomainError);
  CHECK_THROWS_AS(a.divmod(Polynomial{0, 2}), DomainError);
  CHECK(Polynomial{1, -1, 1}.evaluate(2) == 3);
  CHECK(Polynomial{1, 0, 1}.is_reciprocal());
  CHECK_FALSE(Polynomial{1, 1, 0, 2}.is_reciprocal());
  CHECK(Polynomial{1, -1, 1, -1, 1}.to_string() == "q^4 - q^3 + q^2 - q + 1");
  CHECK(Polynomial{0, 2}.to_string() == "2*q");
  CHECK(Polynomial{-1}.to_string() == "-1");
  CHECK(Polynomial{}.to_string() == "0");
  CHECK(Polynomial{1, 0, 1}.is_monic());
}

TEST_CASE("cyclotomic factoring") {
  CHECK(cyclotomic(1) == Polynomial{-1, 1});
  CHECK(cyclotomic(6) == Polynomial{1, -1, 1});
  CHECK(cyclotomic(12) == Polynomial{1, 0, -1, 0, 1});
  CHECK(factored_string((qp(2) - one).pow(2)) == "(q - 1)^2 (q + 1)^2");
  CHECK(factored_string(Polynomial{0, 0, 3}) == "3 q^2");
  CHECK(factored_string(Polynomial{1, 1, 1, 1, 1} * Polynomial{0, 1}) == "q (q^4 + q^3 + q^2 + q + 1)");
  CHECK(factored_string(Polynomial{-1}) == "-1");
  CHECK(factored_string(Polynomial{1, 0, 0, 1, 1}) == "(q^4 + q^3 + 1)");
}

TEST_CASE("count examples") {
  CHECK(count_polynomial(path_tree(2), {}) == qp(2) + one);
  CHECK(count_polynomial(path_tree(1), {Phi::Versal}) == qp(2) - q + one);
  CHECK(count_polynomial(path_tree(1), {Phi::Generic}) == q - one);
  CHECK(count_polynomial(path_tree(3), {Phi::Generic}) == qp(3) - one);
  CHECK(count_polynomial(path_tree(3), {Phi::Versal}) == Polynomial{1, -1, 1, -1, 1});
  CHECK_THROWS_AS(count_polynomial(path_tree(3), {}), DomainError);
  CHECK_THROWS_AS(count_polynomial(path_tree(2), {Phi::Generic}), DomainError);

  const Forest f = remove_vertices(path_tree(5), std::vector<Vertex>{2});
  const PhiAssignment phis[] = {{}, {}};
  CHECK(count_polynomial(f, phis) == (qp(2) + one).pow(2));
  CHECK(count_polynomial(Forest{}, {}) == one);
}

TEST_CASE("closed form examples") {
  CHECK(closed_form_A(1, FamilyMode::Versal) == qp(2) - q + one);
  CHECK(closed_form_A(2, FamilyMode::Orange) == qp(2) + one);
  CHECK(closed_form_A(7, FamilyMode::Generic) == (qp(2) + one) * (qp(5) - one));
  CHECK(closed_form_D(4, FamilyMode::Generic) == (qp(2) - one).pow(2));
  CHECK(closed_form_E(6, FamilyMode::Orange) == ((qp(2) - q + one) * (qp(5) - one)).exact_div(q - one));
  CHECK(closed_form_D(5, FamilyMode::Generic) == qp(5) - one);
  CHECK(closed_form_E(7, FamilyMode::Generic) == closed_form_A(7, FamilyMode::Generic));
  CHECK_THROWS_AS(closed_form_A(3, FamilyMode::Orange), DomainError);
  CHECK_THROWS_AS(closed_form_A(4, FamilyMode::Generic), DomainError);
  CHECK_THROWS_AS(closed_form_D(4, FamilyMode::Orange), DomainError);
  CHECK_THROWS_AS(closed_form_E(6, FamilyMode::Versal), DomainError);
  CHECK_THROWS_AS(closed_form_D(3, FamilyMode::Generic), DomainError);
  CHECK_THROWS_AS(closed_form_E(4, FamilyMode::Generic), DomainError);
}

TEST_CASE("recursion reproduces the family closed forms up to 12 vertices") {
  for (int n = 1; n <= 12; ++n) {
    const Tree a = path_tree(n);
    if (n % 2 == 0) {
      REQUIRE(count_polynomial(a, {}) == closed_form_A(n, FamilyMode::Orange));
    } else {
      REQUIRE(count_uniform(a, Phi::Generic) == closed_form_A(n, FamilyMode::Generic));
      REQUIRE(count_uniform(a, Phi::Versal) == closed_form_A(n, FamilyMode::Versal));
    }
    if (n >= 4) {
      REQUIRE(count_uniform(family_D(n), Phi::Generic) == closed_form_D(n, FamilyMode::Generic));
      REQUIRE(count_uniform(family_D(n), Phi::Versal) == closed_form_D(n, FamilyMode::Versal));
    }
    if (n >= 5) {
      if (n % 2 == 0) {
        REQUIRE(count_polynomial(family_E(n), {}) == closed_form_E(n, FamilyMode::Orange));
      } else {
        REQUIRE(count_uniform(family_E(n), Phi::Generic) == closed_form_E(n, FamilyMode::Generic));
        REQUIRE(count_uniform(family_E(n), Phi::Versal) == closed_form_E(n, FamilyMode::Versal));
      }
    }
  }
}

TEST_CASE("A7 and E7 share the generic polynomial") {
  const Polynomial expected = (qp(2) + one) * (qp(5) - one);
  CHECK(count_uniform(path_tree(7), Phi::Generic) == expected);
  CHECK(count_uniform(family_E(7), Phi::Generic) == expected);
  CHECK(canonical_key(path_tree(7)) != canonical_key(family_E(7)));
}

TEST_CASE("independent-set formula") {
  CHECK(versal_by_independent_sets(path_tree(1)) == qp(2) - q + one);
  CHECK(versal_by_independent_sets(path_tree(2)) == qp(2) + one);
  CHECK(versal_by_independent_sets(path_tree(3)) == (qp(5) + one).exact_div(q + one));
  for (int n = 1; n <= 10; ++n)
    for (const Tree& t : enumerate_free_trees(n)) REQUIRE(versal_by_independent_sets(t) == count_uniform(t, Phi::Versal));
}

TEST_CASE("Euler characteristic") {
  CHECK(euler_characteristic(path_tree(3)) == 1);
  CHECK(euler_characteristic(path_tree(1)) == 1);
  CHECK(euler_characteristic(oracle::figure_tree()) == 2);
  for (int n = 1; n <= 10; ++n)
    for (const Tree& t : enumerate_free_trees(n)) REQUIRE(euler_characteristic(t) == count_maximum_independent_sets(t));
}

TEST_CASE("reciprocity examples") {
  const ReciprocityReport a = reciprocity_report(qp(3) - one, 1);
  CHECK(a.divisible);
  CHECK(a.reciprocal);
  CHECK(a.quotient == Polynomial{1, 1, 1});
  CHECK(reciprocity_report(qp(2) + one, 0).reciprocal);
  const ReciprocityReport c = reciprocity_report((qp(2) - one).pow(2), 2);
  CHECK(c.quotient == (q + one).pow(2));
  CHECK(c.reciprocal);
  CHECK_FALSE(reciprocity_report(qp(2) + one, 1).divisible);
  CHECK_FALSE(reciprocity_report(Polynomial{2, 1}, 0).reciprocal);
}

TEST_CASE("monic of degree n + versal rank, reciprocal after removing the generic torus") {
  for (int n = 1; n <= 9; ++n)
    for (const Tree& t : enumerate_free_trees(n))
      for (const PhiAssignment& phi : all_phi_assignments(components(t))) {
        const Polynomial p = count_polynomial(t, phi);
        const RankProfile r = rank_profile(t, phi);
        REQUIRE(r.rank + r.versal_rank == dimension(t));
        REQUIRE(p.is_monic());
        REQUIRE(p.degree() == n + r.versal_rank);
        const ReciprocityReport rep = reciprocity_report(p, r.rank);
        REQUIRE(rep.divisible);
        REQUIRE(rep.reciprocal);
      }
}

TEST_CASE("degree law for n = 10") {
  for (const Tree& t : enumerate_free_trees(10))
    for (const PhiAssignment& phi : all_phi_assignments(components(t))) {
      const Polynomial p = count_polynomial(t, phi);
      REQUIRE(p.is_monic());
      REQUIRE(p.degree() == 10 + rank_profile(t, phi).versal_rank);
    }
}

TEST_CASE("leaf and domino choices do not change the count") {
  for (int n = 1; n <= 9; ++n)
    for (const Tree& t : enumerate_free_trees(n))
      for (const PhiAssignment& phi : all_phi_assignments(components(t))) {
        const Polynomial base = count_polynomial(t, phi);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
          CountOptions options;
          options.seed = seed * 7919 + static_cast<std::uint64_t>(n);
          REQUIRE(count_polynomial(t, phi, options) == base);
        }
      }
}

TEST_CASE("shared memo across trees") {
  CountMemo memo;
  const Polynomial first = count_uniform(family_E(8), Phi::Versal, {&memo, std::nullopt});
  const std::size_t stored = memo.size();
  CHECK(stored > 0);
  CHECK(count_uniform(family_E(8), Phi::Versal, {&memo, std::nullopt}) == first);
  CHECK(memo.size() == stored);
  CountMemo shared(CountMemo::Mode::Shared);
  CHECK(count_uniform(family_E(8), Phi::Versal, {&shared, std::nullopt}) == first);
}

TEST_CASE("labeled counting checks its decoration") {
  const int missing[] = {0, 0, 0};
  CHECK_THROWS_AS(count_labeled(path_tree(3), missing), InvariantError);
  const int mixed[] = {1, 2, 1};
  CHECK_THROWS_AS(count_labeled(path_tree(3), mixed), InvariantError);
  const int short_labels[] = {1};
  CHECK_THROWS_AS(count_labeled(path_tree(3), short_labels), DomainError);
}

TEST_CASE("orange/unimodal chain") {
  CHECK(orange_unimodal_chain(path_tree(4)) == Polynomial{1, 0, 1, 0, 1});
  CHECK(orange_unimodal_chain(path_tree(3)) == (qp(5) + one).exact_div(q + one));
  CHECK(orange_unimodal_chain(family_E(6)) == closed_form_E(6, FamilyMode::Orange));
  CHECK(orange_unimodal_chain(path_tree(1)) == qp(2) - q + one);
  CHECK_THROWS_AS(orange_unimodal_chain(family_D(4)), DomainError);
  for (int n = 1; n <= 12; ++n)
    for (const Tree& t : enumerate_free_trees(n)) {
      const TreeKind kind = classify(t).kind;
      if (kind == TreeKind::Other) continue;
      REQUIRE(orange_unimodal_chain(t) == count_uniform(t, Phi::Versal));
    }
}

TEST_CASE("census examples") {
  const CensusResult two = census(2, CensusClass::Orange);
  CHECK(two.tree_count() == 1);
  CHECK(two.distinct_polynomials == 1);

  const CensusResult ten = census(10, CensusClass::Orange);
  CHECK(ten.tree_count() == 15);
  CHECK(ten.distinct_polynomials == 13);
  REQUIRE(ten.collisions.size() == 2);
  for (auto [a, b] : {std::pair{"IhGGOC@?G", "IhC_GCA?G"}, std::pair{"IhGGOCA?G", "IhGH?C@?G"}}) {
    const auto ia = ten.find(parse_graph6_tree(a)), ib = ten.find(parse_graph6_tree(b));
    REQUIRE(ia.has_value());
    REQUIRE(ib.has_value());
    CHECK(*ia != *ib);
    CHECK(ten.entries[*ia].polynomial == ten.entries[*ib].polynomial);
  }

  const CensusResult nine = census(9, CensusClass::UnimodalVersal);
  CHECK(nine.tree_count() == 20);
  CHECK(nine.distinct_polynomials == 19);
  REQUIRE(nine.collisions.size() == 1);
  const auto ia = nine.find(parse_graph6_tree("HhCGOCA")), ib = nine.find(parse_graph6_tree("HhGGGG@"));
  REQUIRE(ia.has_value());
  REQUIRE(ib.has_value());
  CHECK(nine.collisions[0] == std::vector<std::size_t>{std::min(*ia, *ib), std::max(*ia, *ib)});

  CHECK_THROWS_AS(census(15, CensusClass::Orange), GuardError);
  CHECK_THROWS_AS(census(0, CensusClass::Orange), GuardError);
}

TEST_CASE("census is identical in every parallel mode") {
  for (CensusClass cls : {CensusClass::Orange, CensusClass::UnimodalVersal, CensusClass::UnimodalGeneric}) {
    const int n = cls == CensusClass::Orange ? 12 : 11;
    const CensusResult serial = census(n, cls, CensusParallelism::Serial);
    for (CensusParallelism mode : {CensusParallelism::PerWorkerMemo, CensusParallelism::SharedMemo}) {
      const CensusResult other = census(n, cls, mode);
      REQUIRE(other.tree_count() == serial.tree_count());
      REQUIRE(other.distinct_polynomials == serial.distinct_polynomials);
      REQUIRE(other.collisions == serial.collisions);
      for (std::size_t i = 0; i < serial.entries.size(); ++i)
        REQUIRE(other.entries[i].polynomial == serial.entries[i].polynomial);
    }
  }
}
