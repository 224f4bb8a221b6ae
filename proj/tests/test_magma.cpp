#include <algorithm>
#include <optional>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/magma.hpp"

using namespace pgroup;
using pgroup::testing::a3_violator;
using pgroup::testing::double_z2;
using pgroup::testing::group_of;
using pgroup::testing::idempotent_pair;

TEST_CASE("construction enforces table shape") {
  CHECK_THROWS_AS(PartialMagma({"1", "a"}, Element{0}, std::vector<std::optional<Element>>(3)),
                  structural_error);
  CHECK_THROWS_AS(PartialMagma({}, Element{0}, {}), structural_error);
  CHECK_THROWS_AS(PartialMagma({"1", "1"}, Element{0}, std::vector<std::optional<Element>>(4)),
                  structural_error);
  CHECK_THROWS_AS(PartialMagma({"1", "a"}, Element{2}, std::vector<std::optional<Element>>(4)),
                  structural_error);
  std::vector<std::optional<Element>> out_of_range(4);
  out_of_range[0] = Element{7};
  CHECK_THROWS_AS(PartialMagma({"1", "a"}, Element{0}, std::move(out_of_range)),
                  structural_error);
}

TEST_CASE("standard instances multiply as expected") {
  const PartialMagma z4 = cyclic_group(4);
  CHECK(z4.size() == 4);
  CHECK(z4.product(Element{1}, Element{3}) == Element{0});
  CHECK(z4.product(Element{2}, Element{3}) == Element{1});

  const PartialMagma p3 = inverse_pair_magma();
  CHECK(p3.product(Element{1}, Element{2}) == Element{0});
  CHECK_FALSE(p3.defined(Element{1}, Element{1}));
  CHECK(p3.find("b") == Element{2});
  CHECK(p3.find("x") == std::nullopt);

  const PartialMagma klein = klein_four_group();
  CHECK(klein.product(Element{1}, Element{2}) == Element{3});
  CHECK(klein.product(Element{3}, Element{3}) == Element{0});
}

TEST_CASE("unit laws validated exactly") {
  CHECK(validate_unital(cyclic_group(3)).passed());
  CHECK(validate_unital(idempotent_pair()).passed());

  std::vector<std::optional<Element>> table(4);
  table[0] = Element{0};
  table[1] = Element{1};
  table[2] = Element{0};  // a1 = 1 breaks the right unit law
  const PartialMagma broken({"1", "a"}, Element{0}, std::move(table));
  const ValidationReport report = validate_unital(broken);
  REQUIRE_FALSE(report.passed());
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].axiom == "unit-right");
  CHECK(report.violations[0].witness == std::vector<std::string>{"a", "1"});
}

TEST_CASE("dagger candidates narrow to the inversion") {
  const PartialMagma p3 = inverse_pair_magma();
  CHECK(left_dagger_candidates(p3, Element{1}) == std::vector<Element>{Element{2}});
  CHECK(right_dagger_candidates(p3, Element{1}) == std::vector<Element>{Element{2}});
  CHECK(dagger_candidates(p3, Element{1}) == std::vector<Element>{Element{2}});
  // In the idempotent pair nothing can invert a: x(aa) = a forces xa = a,
  // while clause (2) forces ax = a, never 1.
  CHECK(dagger_candidates(idempotent_pair(), Element{1}).empty());
}

TEST_CASE("find_dagger on the catalog instances") {
  const DaggerSearch p3 = find_dagger(inverse_pair_magma());
  REQUIRE(p3.group.has_value());
  CHECK(p3.group->dagger(Element{1}) == Element{2});
  CHECK(p3.group->dagger(Element{2}) == Element{1});
  CHECK(p3.report.passed());

  const DaggerSearch z4 = find_dagger(cyclic_group(4));
  REQUIRE(z4.group.has_value());
  CHECK(z4.group->dagger(Element{1}) == Element{3});
  CHECK(z4.group->dagger(Element{2}) == Element{2});

  const DaggerSearch bad = find_dagger(idempotent_pair());
  CHECK_FALSE(bad.group.has_value());
  REQUIRE_FALSE(bad.report.passed());
  CHECK(bad.report.violations.front().axiom == "dagger-exists");
  CHECK(bad.report.violations.front().witness == std::vector<std::string>{"a"});
}

TEST_CASE("find_dagger rejects non-unital input without searching") {
  std::vector<std::optional<Element>> table(4);
  const PartialMagma no_unit({"1", "a"}, Element{0}, std::move(table));
  const DaggerSearch search = find_dagger(no_unit);
  CHECK_FALSE(search.group.has_value());
  CHECK_FALSE(search.report.passed());
  CHECK(search.report.violations.front().axiom == "unit-left");
}

TEST_CASE("binary partial group construction re-verifies the axioms") {
  const PartialMagma p3 = inverse_pair_magma();
  CHECK_NOTHROW(BinaryPartialGroup(p3, {Element{0}, Element{2}, Element{1}}));
  // Identity is not an inversion for p3: a(ab) = a1 undefined.
  CHECK_THROWS_AS(BinaryPartialGroup(p3, {Element{0}, Element{1}, Element{2}}),
                  structural_error);
  CHECK_THROWS_AS(BinaryPartialGroup(p3, {Element{0}, Element{2}}), structural_error);
  CHECK_THROWS_AS(BinaryPartialGroup(idempotent_pair(), {Element{0}, Element{1}}),
                  structural_error);
}

TEST_CASE("inversion clauses reported with witnesses") {
  const PartialMagma z3 = cyclic_group(3);
  const std::vector<Element> wrong = {Element{0}, Element{1}, Element{2}};
  const ValidationReport report = check_inversion_clauses(z3, wrong);
  REQUIRE_FALSE(report.passed());
  CHECK(std::any_of(report.violations.begin(), report.violations.end(), [](const Violation& v) {
    return v.axiom == "dagger-left-cancel";
  }));
  CHECK_THROWS_AS(check_inversion_clauses(z3, std::vector<Element>{Element{0}}),
                  precondition_error);
}

TEST_CASE("A3 holds for groups and fails for the crafted violator") {
  CHECK(check_A3(cyclic_group(4)).passed());
  CHECK(check_A3(inverse_pair_magma()).passed());
  CHECK(check_A3(double_z2()).passed());

  const ValidationReport report = check_A3(a3_violator());
  REQUIRE_FALSE(report.passed());
  const Violation& first = report.violations.front();
  CHECK(first.axiom == "A3");
  CHECK(first.witness == std::vector<std::string>{"a", "a", "a"});
  CHECK(first.found == "(ab)c = a, a(bc) = undefined");
}

TEST_CASE("I2 and the anti-isomorphism hold for genuine groups") {
  const BinaryPartialGroup p3 = group_of(inverse_pair_magma());
  CHECK(check_I2(p3.magma(), p3.dagger_map()).passed());
  CHECK(check_anti_automorphism(p3).passed());

  const BinaryPartialGroup z4 = group_of(cyclic_group(4));
  CHECK(check_I2(z4.magma(), z4.dagger_map()).passed());
  CHECK(check_anti_automorphism(z4).passed());

  const ValidationReport bad = check_I2(cyclic_group(3), std::vector<Element>{
                                            Element{0}, Element{1}, Element{2}});
  REQUIRE_FALSE(bad.passed());
  CHECK(bad.violations.front().axiom == "I2");
}

TEST_CASE("Baer criterion: hypothesis satisfied implies inversion") {
  const ValidationReport z3 = check_baer_criterion(cyclic_group(3));
  CHECK(z3.passed());
  CHECK_FALSE(z3.vacuous);

  // aa = a gives a right inverse to no one, so the hypothesis fails.
  const ValidationReport vac = check_baer_criterion(idempotent_pair());
  CHECK(vac.passed());
  CHECK(vac.vacuous);

  // The A3 violator also breaks the hypothesis, vacuous again.
  const ValidationReport vac2 = check_baer_criterion(a3_violator());
  CHECK(vac2.passed());
  CHECK(vac2.vacuous);
}

TEST_CASE("hom validation distinguishes product, unit and inversion faults") {
  const BinaryPartialGroup z3 = group_of(cyclic_group(3));
  const MagmaHom id = identity_hom(z3);
  CHECK(validate_hom(id).passed());

  // z2 -> p3 sending a to a: aa = 1 upstream, aa undefined downstream.
  const ValidationReport bad = validate_hom(cyclic_group(2), inverse_pair_magma(),
                                            std::vector<Element>{Element{0}, Element{1}});
  REQUIRE_FALSE(bad.passed());
  CHECK(bad.violations.front().axiom == "hom-product");
  CHECK(bad.violations.front().witness == std::vector<std::string>{"a", "a"});

  // Non-unit-preserving map.
  const ValidationReport unit_fault = validate_hom(
      cyclic_group(1), cyclic_group(2), std::vector<Element>{Element{1}});
  REQUIRE_FALSE(unit_fault.passed());
  CHECK(std::any_of(unit_fault.violations.begin(), unit_fault.violations.end(),
                    [](const Violation& v) { return v.axiom == "hom-unit"; }));

  CHECK_THROWS_AS(
      validate_hom(cyclic_group(2), cyclic_group(2), std::vector<Element>{Element{0}}),
      precondition_error);
}

TEST_CASE("hom composition checks endpoints") {
  const BinaryPartialGroup z2 = group_of(cyclic_group(2));
  const BinaryPartialGroup z3 = group_of(cyclic_group(3));
  const MagmaHom collapse{z2, z3, {Element{0}, Element{0}}};
  CHECK(validate_hom(collapse).passed());
  const MagmaHom id3 = identity_hom(z3);
  const MagmaHom composed = compose(id3, collapse);
  CHECK(composed.map == collapse.map);
  CHECK_THROWS_AS(compose(collapse, collapse), precondition_error);
}

TEST_CASE("signature and show are stable") {
  CHECK(signature(inverse_pair_magma()) == "3 elements, unit 1, 7/9 products defined");
  CHECK(signature(cyclic_group(4)) == "4 elements, unit 1, 16/16 products defined");
  CHECK(show(cyclic_group(2), Element{1}) == "a");
  CHECK(show(cyclic_group(2), std::nullopt) == "undefined");
}
