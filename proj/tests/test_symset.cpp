#include <algorithm>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/functors.hpp"
#include "pgroup/magma.hpp"
#include "pgroup/symset.hpp"

using namespace pgroup;
using pgroup::testing::group_of;

namespace {

TruncatedPartialGroup nerve(const PartialMagma& P, int truncation) {
  return big_embed(group_of(P), truncation);
}

}  // namespace

TEST_CASE("simplex maps validate and compose") {
  CHECK_THROWS_AS(SimplexMap(1, 1, {0}), structural_error);       // wrong arity
  CHECK_THROWS_AS(SimplexMap(1, 1, {0, 2}), structural_error);    // out of range
  CHECK_THROWS_AS(SimplexMap(-1, 0, {}), structural_error);

  const SimplexMap d0 = SimplexMap::coface(0, 2);
  CHECK(d0.values == std::vector<int>{1, 2});
  const SimplexMap d2 = SimplexMap::coface(2, 2);
  CHECK(d2.values == std::vector<int>{0, 1});
  const SimplexMap s0 = SimplexMap::codegeneracy(0, 1);
  CHECK(s0.values == std::vector<int>{0, 0, 1});
  const SimplexMap rev = SimplexMap::reversal(2);
  CHECK(rev.values == std::vector<int>{2, 1, 0});

  // Cosimplicial identity: delta_j delta_i = delta_i delta_{j-1} for i < j.
  for (int n = 1; n <= 4; ++n) {
    for (int j = 1; j <= n + 1; ++j) {
      for (int i = 0; i < j; ++i) {
        const SimplexMap lhs =
            SimplexMap::compose(SimplexMap::coface(j, n + 1), SimplexMap::coface(i, n));
        const SimplexMap rhs =
            SimplexMap::compose(SimplexMap::coface(i, n + 1), SimplexMap::coface(j - 1, n));
        CHECK(lhs == rhs);
      }
    }
  }
  CHECK_THROWS_AS(SimplexMap::compose(SimplexMap::coface(0, 1), SimplexMap::coface(0, 3)),
                  precondition_error);
  CHECK(simplex_map_str(SimplexMap(2, 1, {1, 0, 1})) == "[2]->[1]:(1,0,1)");
}

TEST_CASE("construction forces low levels and sorts the rest") {
  const BinaryPartialGroup p3 = group_of(inverse_pair_magma());
  const std::vector<Word> level2 = {{Element{2}, Element{1}}, {Element{1}, Element{2}},
                                    {Element{1}, Element{2}}};
  const TruncatedPartialGroup X(2, p3, {level2});
  CHECK(X.level(0).size() == 1);
  CHECK(X.level(0).front().empty());
  CHECK(X.level(1).size() == 3);
  REQUIRE(X.level(2).size() == 2);  // duplicate collapsed
  CHECK(X.level(2)[0] == Word{Element{1}, Element{2}});
  CHECK(X.level(2)[1] == Word{Element{2}, Element{1}});
  CHECK(X.contains(2, {Element{1}, Element{2}}));
  CHECK_FALSE(X.contains(2, {Element{1}, Element{1}}));
}

TEST_CASE("construction rejects malformed input") {
  const BinaryPartialGroup p3 = group_of(inverse_pair_magma());
  CHECK_THROWS_AS(TruncatedPartialGroup(1, p3, {}), structural_error);
  CHECK_THROWS_AS(TruncatedPartialGroup(9, p3, std::vector<std::vector<Word>>(8)),
                  resource_limit_error);
  CHECK_THROWS_AS(TruncatedPartialGroup(2, p3, {}), structural_error);  // missing level 2
  // Word of the wrong length inside level 2.
  CHECK_THROWS_AS(TruncatedPartialGroup(2, p3, {{{Element{1}}}}), structural_error);
  // Entry out of carrier range.
  CHECK_THROWS_AS(TruncatedPartialGroup(2, p3, {{{Element{1}, Element{9}}}}),
                  structural_error);
  // Dagger vector of the wrong size on the raw constructor.
  CHECK_THROWS_AS(
      TruncatedPartialGroup(2, inverse_pair_magma(), {Element{0}}, {{}}, kMaxTruncation),
      structural_error);
}

TEST_CASE("edges read units, products and daggers") {
  const TruncatedPartialGroup X = nerve(cyclic_group(3), 4);
  const Word ab = {Element{1}, Element{2}};
  CHECK(edge(X, ab, 0, 0) == Element{0});
  CHECK(edge(X, ab, 0, 1) == Element{1});
  CHECK(edge(X, ab, 1, 2) == Element{2});
  CHECK(edge(X, ab, 0, 2) == Element{0});  // ab = 1 in the order-three group
  CHECK(edge(X, ab, 2, 0) == Element{0});
  CHECK(edge(X, ab, 1, 0) == Element{2});  // dagger of a

  const TruncatedPartialGroup Y = nerve(inverse_pair_magma(), 4);
  CHECK_THROWS_AS(edge(Y, Word{Element{1}, Element{1}}, 0, 2), integrity_error);
}

TEST_CASE("action computes spine pullbacks") {
  const TruncatedPartialGroup X = nerve(cyclic_group(3), 4);
  const Word ab = {Element{1}, Element{2}};
  CHECK(act(X, SimplexMap::reversal(2), ab) == Word{Element{1}, Element{2}});
  CHECK(act(X, SimplexMap::coface(1, 2), ab) == Word{Element{0}});
  CHECK(act(X, SimplexMap::codegeneracy(0, 2), ab) ==
        Word{Element{0}, Element{1}, Element{2}});
  CHECK(act(X, SimplexMap(0, 2, {1}), ab) == Word{});

  // Constant maps give degenerate words of units.
  CHECK(act(X, SimplexMap(3, 2, {1, 1, 1, 1}), ab) ==
        Word(3, Element{0}));
}

TEST_CASE("face and degeneracy agree with their maps") {
  const TruncatedPartialGroup X = nerve(cyclic_group(3), 4);
  const Word aab = {Element{1}, Element{1}, Element{2}};
  CHECK(face(X, 0, aab) == Word{Element{1}, Element{2}});
  CHECK(face(X, 1, aab) == Word{Element{2}, Element{2}});
  CHECK(face(X, 3, aab) == Word{Element{1}, Element{1}});
  for (int i = 0; i <= 3; ++i) {
    CHECK(face(X, i, degeneracy(X, i, aab)) == aab);
  }
}

TEST_CASE("total products match the carrier") {
  const TruncatedPartialGroup X = nerve(cyclic_group(3), 4);
  CHECK(total_product(X, {Element{1}, Element{1}, Element{1}}) == Element{0});
  CHECK(total_product(X, {}) == Element{0});
  const TruncatedPartialGroup Y = nerve(inverse_pair_magma(), 4);
  CHECK_THROWS_AS(total_product(Y, Word{Element{1}, Element{1}}), integrity_error);
}

TEST_CASE("nerves validate as partial groups") {
  for (const PartialMagma& P : {cyclic_group(2), cyclic_group(3), inverse_pair_magma()}) {
    const ValidationReport report = validate_partial_group(nerve(P, 4));
    CHECK(report.passed());
    CHECK_FALSE(report.vacuous);
  }
}

TEST_CASE("level-2 disagreement with the table is flagged") {
  const BinaryPartialGroup p3 = group_of(inverse_pair_magma());
  // Missing (b,a) and containing the non-multipliable (a,a).
  const std::vector<Word> level2 = {{Element{1}, Element{1}}, {Element{1}, Element{2}}};
  const TruncatedPartialGroup X(2, p3, {level2});
  const ValidationReport report = validate_partial_group(X);
  REQUIRE_FALSE(report.passed());
  CHECK(std::any_of(report.violations.begin(), report.violations.end(), [](const Violation& v) {
    return v.axiom == "multipliable-pairs" && v.witness == std::vector<std::string>{"a", "a"};
  }));
  CHECK(std::any_of(report.violations.begin(), report.violations.end(), [](const Violation& v) {
    return v.axiom == "multipliable-pairs" && v.witness == std::vector<std::string>{"b", "a"};
  }));
}

TEST_CASE("incoherent stored words are flagged") {
  const BinaryPartialGroup p3 = group_of(inverse_pair_magma());
  // (a,b,b): ((ab)b) = b but (a(bb)) undefined.
  const std::vector<Word> level2 = {{Element{1}, Element{2}}, {Element{2}, Element{1}}};
  const std::vector<Word> level3 = {{Element{1}, Element{2}, Element{2}}};
  const TruncatedPartialGroup X(3, p3, {level2, level3});
  const ValidationReport report = validate_partial_group(X);
  REQUIRE_FALSE(report.passed());
  CHECK(std::any_of(report.violations.begin(), report.violations.end(), [](const Violation& v) {
    return v.axiom == "coherence" &&
           v.witness == std::vector<std::string>{"level 3", "a,b,b"};
  }));
}

TEST_CASE("missing closure image is located") {
  const BinaryPartialGroup z2 = group_of(cyclic_group(2));
  // Level 2 of the order-two nerve without the degenerate pair (1,a):
  // s_0 of the 1-simplex a escapes the level.
  const std::vector<Word> level2 = {{Element{0}, Element{0}}, {Element{1}, Element{1}}};
  const TruncatedPartialGroup X(2, z2, {level2});
  const ValidationReport report = validate_partial_group(X);
  REQUIRE_FALSE(report.passed());
  CHECK(std::any_of(report.violations.begin(), report.violations.end(), [](const Violation& v) {
    return v.axiom == "closure";
  }));
}

TEST_CASE("inversion condition on levels") {
  // Drop the doubled word of (a,b) from level 4 of the order-four nerve:
  // dagger(a,b) ++ (a,b) = (b,c,a,b).
  const BinaryPartialGroup z4 = group_of(cyclic_group(4));
  const TruncatedPartialGroup big = big_embed(z4, 4);
  const Word doubled = {Element{2}, Element{3}, Element{1}, Element{2}};
  std::vector<std::vector<Word>> levels;
  for (int n = 2; n <= 4; ++n) {
    std::vector<Word> lvl(big.level(n).begin(), big.level(n).end());
    if (n == 4) lvl.erase(std::remove(lvl.begin(), lvl.end(), doubled), lvl.end());
    levels.push_back(std::move(lvl));
  }
  const TruncatedPartialGroup X(4, z4, std::move(levels));
  const ValidationReport report = validate_partial_group(X);
  REQUIRE_FALSE(report.passed());
  CHECK(std::any_of(report.violations.begin(), report.violations.end(), [](const Violation& v) {
    return v.axiom == "inversion-membership" &&
           v.witness == std::vector<std::string>{"a,b", "b,c,a,b"};
  }));
}

TEST_CASE("hom validation accepts the identity and collapse maps") {
  const TruncatedPartialGroup X = nerve(cyclic_group(3), 4);
  const SymSetHom id = identity_symset_hom(X);
  CHECK(validate_symset_hom(id).passed());

  const TruncatedPartialGroup T = nerve(cyclic_group(1), 4);
  const std::vector<Element> collapse(3, Element{0});
  CHECK(validate_symset_hom(X, T, collapse).passed());
}

TEST_CASE("hom validation rejects a non-structure-preserving level-1 map") {
  const TruncatedPartialGroup X = nerve(inverse_pair_magma(), 4);
  // a -> a, b -> a: the multipliable pair (a,b) maps to (a,a), absent.
  const std::vector<Element> bad = {Element{0}, Element{1}, Element{1}};
  const ValidationReport report = validate_symset_hom(X, X, bad);
  REQUIRE_FALSE(report.passed());
  CHECK(report.violations.front().axiom == "hom-level");
  CHECK_THROWS_AS(validate_symset_hom(X, X, std::vector<Element>{Element{0}}),
                  precondition_error);
}

TEST_CASE("hom naturality note names the seed") {
  const TruncatedPartialGroup X = nerve(cyclic_group(2), 4);
  const ValidationReport report =
      validate_symset_hom(X, X, std::vector<Element>{Element{0}, Element{1}}, 1234, 8);
  CHECK(report.passed());
  REQUIRE_FALSE(report.notes.empty());
  CHECK(report.notes.back().find("seed 1234") != std::string::npos);
}
