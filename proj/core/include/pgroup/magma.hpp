#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgroup/element.hpp"
#include "pgroup/report.hpp"

namespace pgroup {

// Finite set with a partially defined binary product, stored as a square
// table of optional entries. Construction enforces shape only (square
// table, indices in range, distinct nonempty names, unit in range); the
// unit laws are validate_unital's business.
class PartialMagma {
 public:
  PartialMagma(std::vector<std::string> names, Element unit,
               std::vector<std::optional<Element>> table);

  std::size_t size() const { return names_.size(); }
  Element unit() const { return unit_; }

  std::optional<Element> product(Element a, Element b) const {
    return table_[a.index * names_.size() + b.index];
  }
  bool defined(Element a, Element b) const { return product(a, b).has_value(); }

  const std::string& name(Element a) const { return names_[a.index]; }
  std::span<const std::string> names() const { return names_; }
  std::optional<Element> find(std::string_view name) const;

  // Row-major, size() * size() entries.
  std::span<const std::optional<Element>> table() const { return table_; }

  friend bool operator==(const PartialMagma&, const PartialMagma&) = default;

 private:
  std::vector<std::string> names_;
  Element unit_;
  std::vector<std::optional<Element>> table_;
};

// Standard small instances, mostly as test and benchmark subjects.
// cyclic_group(1) is the trivial group.
PartialMagma cyclic_group(std::size_t order);
PartialMagma klein_four_group();
// {1, a, b} with ab = ba = 1 and both squares undefined.
PartialMagma inverse_pair_magma();

// Unit laws: 1a = a = a1, with both sides defined, for every a.
ValidationReport validate_unital(const PartialMagma& P);

// Both defining clauses of the inversion for a candidate map: whenever ab
// is defined, dagger(a)(ab) = b, and whenever ba is defined,
// (ba)dagger(a) = b. Size-checked against P.
ValidationReport check_inversion_clauses(const PartialMagma& P, std::span<const Element> dagger);

// Images x satisfying clause (1): whenever ab is defined, x(ab) is defined
// and equals b. Every b is quantified, so the scan is exhaustive.
std::vector<Element> left_dagger_candidates(const PartialMagma& P, Element a);
// Clause (2): whenever ba is defined, (ba)x is defined and equals b.
std::vector<Element> right_dagger_candidates(const PartialMagma& P, Element a);
// Intersection of the two, the candidates for a's inversion image.
std::vector<Element> dagger_candidates(const PartialMagma& P, Element a);

// A unital partial magma together with its inversion. Construction
// verifies the unit laws and both defining clauses of the inversion and
// throws structural_error otherwise, so a value of this type is always a
// genuine binary partial group.
class BinaryPartialGroup {
 public:
  BinaryPartialGroup(PartialMagma magma, std::vector<Element> dagger);

  const PartialMagma& magma() const { return magma_; }
  std::size_t size() const { return magma_.size(); }
  Element unit() const { return magma_.unit(); }
  std::optional<Element> product(Element a, Element b) const {
    return magma_.product(a, b);
  }
  Element dagger(Element a) const { return dagger_[a.index]; }
  std::span<const Element> dagger_map() const { return dagger_; }
  const std::string& name(Element a) const { return magma_.name(a); }

  friend bool operator==(const BinaryPartialGroup&, const BinaryPartialGroup&) = default;

 private:
  PartialMagma magma_;
  std::vector<Element> dagger_;
};

struct DaggerSearch {
  std::optional<BinaryPartialGroup> group;  // engaged exactly when report passes
  ValidationReport report;
};

// Exhaustive per-element candidate search for the inversion. The report
// carries an existence or uniqueness violation per failing element;
// non-unital input short-circuits with the unit-law violations.
DaggerSearch find_dagger(const PartialMagma& P);

// (ab)c = a(bc) whenever ab and bc are both defined, either with both
// sides defined and equal or with both undefined. Not implied by the
// binary partial group axioms.
ValidationReport check_A3(const PartialMagma& P);

// a a† = 1 = a† a for the given candidate inversion (size-checked).
ValidationReport check_I2(const PartialMagma& P, std::span<const Element> dagger);

// Dagger is an involution and an anti-isomorphism: ab defined iff b†a†
// defined, and then (ab)† = b†a†.
ValidationReport check_anti_automorphism(const BinaryPartialGroup& P);

// If P satisfies A3 and every element has some right inverse, P admits an
// inversion. Vacuously passes (flagged) when the hypothesis fails.
ValidationReport check_baer_criterion(const PartialMagma& P);

// Product law only: whenever ab is defined, f(a)f(b) is defined and equals
// f(ab). The derived unit fact f(1) = 1 is checked and reported separately.
ValidationReport validate_hom(const PartialMagma& source, const PartialMagma& target,
                              std::span<const Element> map);

struct MagmaHom {
  BinaryPartialGroup source;
  BinaryPartialGroup target;
  std::vector<Element> map;
};

// As above, plus the derived inversion fact f(a†) = f(a)†.
ValidationReport validate_hom(const MagmaHom& f);

MagmaHom identity_hom(const BinaryPartialGroup& P);
// g after f; throws precondition_error unless f's target is g's source.
MagmaHom compose(const MagmaHom& g, const MagmaHom& f);

// Compact one-line description for report headers: size, unit, number of
// defined products.
std::string signature(const PartialMagma& P);

// Rendered value of a possibly undefined product, for report text.
std::string show(const PartialMagma& P, const std::optional<Element>& value);

}  // namespace pgroup
