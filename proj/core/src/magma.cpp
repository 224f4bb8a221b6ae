#include "pgroup/magma.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "pgroup/errors.hpp"

namespace pgroup {

PartialMagma::PartialMagma(std::vector<std::string> names, Element unit,
                           std::vector<std::optional<Element>> table)
    : names_(std::move(names)), unit_(unit), table_(std::move(table)) {
  const std::size_t k = names_.size();
  if (k == 0) throw structural_error("element list is empty");
  if (unit_.index >= k) throw structural_error("unit index out of range");
  if (table_.size() != k * k) {
    std::ostringstream msg;
    msg << "table has " << table_.size() << " entries, expected " << k * k;
    throw structural_error(msg.str());
  }
  std::set<std::string_view> seen;
  for (const std::string& n : names_) {
    if (n.empty()) throw structural_error("empty element name");
    if (!seen.insert(n).second) throw structural_error("duplicate element name: " + n);
  }
  for (const std::optional<Element>& e : table_) {
    if (e && e->index >= k) throw structural_error("table entry out of range");
  }
}

std::optional<Element> PartialMagma::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return Element{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

namespace {

std::vector<std::string> default_names(std::size_t k) {
  std::vector<std::string> names;
  names.reserve(k);
  names.emplace_back("1");
  for (std::size_t i = 1; i < k; ++i) names.emplace_back(1, static_cast<char>('a' + i - 1));
  return names;
}

}  // namespace

PartialMagma cyclic_group(std::size_t order) {
  if (order == 0) throw precondition_error("cyclic group of order 0");
  std::vector<std::optional<Element>> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      table[a * order + b] = Element{static_cast<std::uint32_t>((a + b) % order)};
    }
  }
  return PartialMagma(default_names(order), Element{0}, std::move(table));
}

PartialMagma klein_four_group() {
  auto e = [](std::uint32_t i) { return std::optional<Element>(Element{i}); };
  std::vector<std::optional<Element>> table = {
      e(0), e(1), e(2), e(3),
      e(1), e(0), e(3), e(2),
      e(2), e(3), e(0), e(1),
      e(3), e(2), e(1), e(0),
  };
  return PartialMagma(default_names(4), Element{0}, std::move(table));
}

PartialMagma inverse_pair_magma() {
  auto e = [](std::uint32_t i) { return std::optional<Element>(Element{i}); };
  std::vector<std::optional<Element>> table = {
      e(0), e(1), e(2),
      e(1), std::nullopt, e(0),
      e(2), e(0), std::nullopt,
  };
  return PartialMagma(default_names(3), Element{0}, std::move(table));
}

std::string show(const PartialMagma& P, const std::optional<Element>& value) {
  return value ? P.name(*value) : std::string("undefined");
}

ValidationReport validate_unital(const PartialMagma& P) {
  ValidationReport report;
  const Element u = P.unit();
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  for (std::uint32_t i = 0; i < k; ++i) {
    const Element a{i};
    const auto left = P.product(u, a);
    if (left != a) {
      report.add("unit-left", {P.name(u), P.name(a)}, P.name(a), show(P, left));
    }
    const auto right = P.product(a, u);
    if (right != a) {
      report.add("unit-right", {P.name(a), P.name(u)}, P.name(a), show(P, right));
    }
  }
  return report;
}

std::vector<Element> left_dagger_candidates(const PartialMagma& P, Element a) {
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  std::vector<Element> out;
  for (std::uint32_t x = 0; x < k; ++x) {
    bool ok = true;
    for (std::uint32_t b = 0; b < k && ok; ++b) {
      const auto ab = P.product(a, Element{b});
      if (!ab) continue;
      ok = P.product(Element{x}, *ab) == Element{b};
    }
    if (ok) out.push_back(Element{x});
  }
  return out;
}

std::vector<Element> right_dagger_candidates(const PartialMagma& P, Element a) {
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  std::vector<Element> out;
  for (std::uint32_t x = 0; x < k; ++x) {
    bool ok = true;
    for (std::uint32_t b = 0; b < k && ok; ++b) {
      const auto ba = P.product(Element{b}, a);
      if (!ba) continue;
      ok = P.product(*ba, Element{x}) == Element{b};
    }
    if (ok) out.push_back(Element{x});
  }
  return out;
}

std::vector<Element> dagger_candidates(const PartialMagma& P, Element a) {
  const std::vector<Element> left = left_dagger_candidates(P, a);
  const std::vector<Element> right = right_dagger_candidates(P, a);
  std::vector<Element> out;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                        std::back_inserter(out));
  return out;
}

ValidationReport check_inversion_clauses(const PartialMagma& P, std::span<const Element> dagger) {
  if (dagger.size() != P.size()) throw precondition_error("inversion map has wrong size");
  for (const Element e : dagger) {
    if (e.index >= P.size()) throw precondition_error("inversion image out of range");
  }
  ValidationReport report;
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  for (std::uint32_t i = 0; i < k; ++i) {
    const Element a{i};
    const Element x = dagger[i];
    for (std::uint32_t j = 0; j < k; ++j) {
      const Element b{j};
      const auto ab = P.product(a, b);
      if (ab) {
        const auto cancel = P.product(x, *ab);
        if (cancel != b) {
          report.add("dagger-left-cancel",
                     {P.name(a), P.name(b)},
                     P.name(x) + "(" + P.name(a) + P.name(b) + ") = " + P.name(b),
                     show(P, cancel));
        }
      }
      const auto ba = P.product(b, a);
      if (ba) {
        const auto cancel = P.product(*ba, x);
        if (cancel != b) {
          report.add("dagger-right-cancel",
                     {P.name(b), P.name(a)},
                     "(" + P.name(b) + P.name(a) + ")" + P.name(x) + " = " + P.name(b),
                     show(P, cancel));
        }
      }
    }
  }
  return report;
}

BinaryPartialGroup::BinaryPartialGroup(PartialMagma magma, std::vector<Element> dagger)
    : magma_(std::move(magma)), dagger_(std::move(dagger)) {
  const std::size_t k = magma_.size();
  if (dagger_.size() != k) throw structural_error("inversion map has wrong size");
  for (const Element e : dagger_) {
    if (e.index >= k) throw structural_error("inversion image out of range");
  }
  ValidationReport unital = validate_unital(magma_);
  if (!unital.passed()) {
    throw structural_error("not a binary partial group: unit laws fail (" +
                           unital.violations.front().axiom + ")");
  }
  ValidationReport clauses = check_inversion_clauses(magma_, dagger_);
  if (!clauses.passed()) {
    throw structural_error("not a binary partial group: inversion clause fails (" +
                           clauses.violations.front().axiom + " at " +
                           clauses.violations.front().witness.front() + ")");
  }
}

DaggerSearch find_dagger(const PartialMagma& P) {
  DaggerSearch result;
  result.report = validate_unital(P);
  if (!result.report.passed()) {
    result.report.note("inversion search skipped: unit laws fail");
    return result;
  }
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  std::vector<Element> dagger(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    const Element a{i};
    const std::vector<Element> cands = dagger_candidates(P, a);
    if (cands.empty()) {
      result.report.add("dagger-exists", {P.name(a)}, "some inversion image", "none");
    } else if (cands.size() > 1) {
      std::vector<std::string> names;
      names.push_back(P.name(a));
      for (const Element c : cands) names.push_back(P.name(c));
      result.report.add("dagger-unique", std::move(names), "one inversion image",
                        std::to_string(cands.size()) + " candidates");
    } else {
      dagger[i] = cands.front();
    }
  }
  if (result.report.passed()) {
    result.group.emplace(P, std::move(dagger));
  }
  return result;
}

ValidationReport check_A3(const PartialMagma& P) {
  ValidationReport report;
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) {
      const auto ab = P.product(Element{i}, Element{j});
      for (std::uint32_t l = 0; l < k; ++l) {
        const auto bc = P.product(Element{j}, Element{l});
        if (!ab || !bc) continue;
        const auto lhs = P.product(*ab, Element{l});
        const auto rhs = P.product(Element{i}, *bc);
        if (lhs != rhs) {
          report.add("A3", {P.name(Element{i}), P.name(Element{j}), P.name(Element{l})},
                     "(ab)c and a(bc) both undefined or both defined and equal",
                     "(ab)c = " + show(P, lhs) + ", a(bc) = " + show(P, rhs));
        }
      }
    }
  }
  return report;
}

ValidationReport check_I2(const PartialMagma& P, std::span<const Element> dagger) {
  if (dagger.size() != P.size()) throw precondition_error("inversion map has wrong size");
  ValidationReport report;
  const Element u = P.unit();
  for (std::uint32_t i = 0; i < P.size(); ++i) {
    const Element a{i};
    const Element x = dagger[i];
    if (x.index >= P.size()) throw precondition_error("inversion image out of range");
    const auto left = P.product(a, x);
    if (left != u) {
      report.add("I2", {P.name(a)}, P.name(a) + P.name(x) + " = " + P.name(u),
                 show(P, left));
    }
    const auto right = P.product(x, a);
    if (right != u) {
      report.add("I2", {P.name(a)}, P.name(x) + P.name(a) + " = " + P.name(u),
                 show(P, right));
    }
  }
  return report;
}

ValidationReport check_anti_automorphism(const BinaryPartialGroup& P) {
  ValidationReport report;
  const PartialMagma& M = P.magma();
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  for (std::uint32_t i = 0; i < k; ++i) {
    const Element a{i};
    if (P.dagger(P.dagger(a)) != a) {
      report.add("dagger-involution", {M.name(a)}, M.name(a),
                 M.name(P.dagger(P.dagger(a))));
    }
  }
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) {
      const Element a{i}, b{j};
      const auto ab = M.product(a, b);
      const auto rev = M.product(P.dagger(b), P.dagger(a));
      const std::string pair = M.name(a) + ", " + M.name(b);
      if (ab.has_value() != rev.has_value()) {
        report.add("anti-iso-defined", {M.name(a), M.name(b)},
                   "ab and b†a† both defined or both undefined",
                   "ab = " + show(M, ab) + ", b†a† = " + show(M, rev));
      } else if (ab && P.dagger(*ab) != *rev) {
        report.add("anti-iso-value", {M.name(a), M.name(b)},
                   "(ab)† = b†a†",
                   "(ab)† = " + M.name(P.dagger(*ab)) + ", b†a† = " + M.name(*rev));
      }
    }
  }
  return report;
}

ValidationReport check_baer_criterion(const PartialMagma& P) {
  ValidationReport report;
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  if (!validate_unital(P).passed() || !check_A3(P).passed()) {
    report.vacuous = true;
    report.note("hypothesis not satisfied: unit laws or A3 fail; vacuously passed");
    return report;
  }
  for (std::uint32_t i = 0; i < k; ++i) {
    bool has_right_inverse = false;
    for (std::uint32_t r = 0; r < k && !has_right_inverse; ++r) {
      has_right_inverse = P.product(Element{i}, Element{r}) == P.unit();
    }
    if (!has_right_inverse) {
      report.vacuous = true;
      report.note("hypothesis not satisfied: " + P.name(Element{i}) +
                  " has no right inverse; vacuously passed");
      return report;
    }
  }
  DaggerSearch search = find_dagger(P);
  if (!search.group) {
    report.merge(search.report, "baer:");
    report.note("hypothesis holds but the inversion search failed");
  }
  return report;
}

ValidationReport validate_hom(const PartialMagma& source, const PartialMagma& target,
                              std::span<const Element> map) {
  if (map.size() != source.size()) throw precondition_error("hom map has wrong size");
  for (const Element e : map) {
    if (e.index >= target.size()) throw precondition_error("hom image out of range");
  }
  ValidationReport report;
  const std::uint32_t k = static_cast<std::uint32_t>(source.size());
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) {
      const auto ab = source.product(Element{i}, Element{j});
      if (!ab) continue;
      const auto image = target.product(map[i], map[j]);
      if (!image || *image != map[ab->index]) {
        report.add("hom-product", {source.name(Element{i}), source.name(Element{j})},
                   "f(a)f(b) = f(ab) = " + target.name(map[ab->index]),
                   show(target, image));
      }
    }
  }
  if (map[source.unit().index] != target.unit()) {
    report.add("hom-unit", {source.name(source.unit())}, target.name(target.unit()),
               target.name(map[source.unit().index]));
  }
  return report;
}

ValidationReport validate_hom(const MagmaHom& f) {
  ValidationReport report =
      validate_hom(f.source.magma(), f.target.magma(), f.map);
  for (std::uint32_t i = 0; i < f.source.size(); ++i) {
    const Element a{i};
    const Element lhs = f.map[f.source.dagger(a).index];
    const Element rhs = f.target.dagger(f.map[i]);
    if (lhs != rhs) {
      report.add("hom-dagger", {f.source.name(a)},
                 "f(a†) = f(a)† = " + f.target.name(rhs), f.target.name(lhs));
    }
  }
  return report;
}

MagmaHom identity_hom(const BinaryPartialGroup& P) {
  std::vector<Element> map(P.size());
  for (std::uint32_t i = 0; i < P.size(); ++i) map[i] = Element{i};
  return {P, P, std::move(map)};
}

MagmaHom compose(const MagmaHom& g, const MagmaHom& f) {
  if (f.target != g.source) throw precondition_error("homs not composable");
  std::vector<Element> map(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) map[i] = g.map[f.map[i].index];
  return {f.source, g.target, std::move(map)};
}

std::string signature(const PartialMagma& P) {
  std::size_t defined = 0;
  for (const auto& e : P.table()) {
    if (e) ++defined;
  }
  std::ostringstream out;
  out << P.size() << " elements, unit " << P.name(P.unit()) << ", " << defined << "/"
      << P.size() * P.size() << " products defined";
  return out.str();
}

}  // namespace pgroup
