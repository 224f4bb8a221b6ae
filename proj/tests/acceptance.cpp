// Acceptance gate: one line per criterion, exit 0 exactly when all pass.
// Each criterion re-derives its verdict from the library on the spot; the
// expected counts are frozen oracle outputs.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pgroup/enumerate.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/functors.hpp"
#include "pgroup/json_io.hpp"
#include "pgroup/magma.hpp"
#include "pgroup/symset.hpp"
#include "pgroup/words.hpp"

using namespace pgroup;

namespace {

struct Verdict {
  bool ok = false;
  std::string detail;
};

std::vector<BinaryPartialGroup> atlas_entries() {
  std::vector<BinaryPartialGroup> entries;
  for (int k = 2; k <= 4; ++k) {
    Atlas atlas = classify_bpgs(k);
    for (BinaryPartialGroup& entry : atlas.entries) entries.push_back(std::move(entry));
  }
  return entries;
}

// A3 as a raw predicate, cheap enough for the full table sweep.
bool satisfies_a3(const PartialMagma& P) {
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  for (std::uint32_t a = 0; a < k; ++a) {
    for (std::uint32_t b = 0; b < k; ++b) {
      const std::optional<Element> ab = P.product(Element{a}, Element{b});
      if (!ab) continue;
      for (std::uint32_t c = 0; c < k; ++c) {
        const std::optional<Element> bc = P.product(Element{b}, Element{c});
        if (!bc) continue;
        if (P.product(*ab, Element{c}) != P.product(Element{a}, *bc)) return false;
      }
    }
  }
  return true;
}

bool has_right_inverses(const PartialMagma& P) {
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  for (std::uint32_t a = 0; a < k; ++a) {
    bool found = false;
    for (std::uint32_t x = 0; x < k && !found; ++x) {
      found = P.product(Element{a}, Element{x}) == P.unit();
    }
    if (!found) return false;
  }
  return true;
}

Verdict criterion_unique_inversion() {
  std::uint64_t examined = 0;
  for (int k = 2; k <= 4; ++k) {
    const WitnessResult result = find_witness(k, "dagger-non-unique");
    if (result.found) return {false, "witness at size " + std::to_string(k) + ": " + result.details};
    examined += result.examined;
  }
  std::ostringstream detail;
  detail << "no table among " << examined << " (sizes 2..4) admits two inversions";
  return {true, detail.str()};
}

Verdict criterion_anti_isomorphism(const std::vector<BinaryPartialGroup>& entries) {
  for (const BinaryPartialGroup& P : entries) {
    ValidationReport report = check_anti_automorphism(P);
    report.merge(check_I2(P.magma(), P.dagger_map()));
    if (!report.passed()) {
      return {false, signature(P.magma()) + ": " + report.violations.front().axiom};
    }
  }
  return {true, "involution, anti-isomorphism and I2 exact on all " +
                    std::to_string(entries.size()) + " atlas entries"};
}

Verdict criterion_mirror(const std::vector<BinaryPartialGroup>& entries) {
  for (const BinaryPartialGroup& P : entries) {
    const ValidationReport report = check_mirror_sweep(P, 5);
    if (!report.passed()) {
      return {false, signature(P.magma()) + ": " + report.violations.front().axiom};
    }
  }
  return {true, "all words of length <= 5, all trees, on all atlas entries"};
}

Verdict criterion_inversion_closure(const std::vector<BinaryPartialGroup>& entries) {
  for (const BinaryPartialGroup& P : entries) {
    const ValidationReport report = check_inversion_closure(P, 6);
    if (!report.passed()) {
      return {false, signature(P.magma()) + ": " + report.violations.front().axiom};
    }
  }
  return {true, "membership and total products exchanged by dagger through length 6"};
}

Verdict criterion_main_theorem(const std::vector<BinaryPartialGroup>& entries) {
  for (const BinaryPartialGroup& P : entries) {
    const FunctorReport report = check_main_theorem(P, 6);
    if (!report.passed()) return {false, signature(P.magma()) + " fails prefix cancellation"};
  }
  return {true, "doubled words and every prefix instance, lengths <= 3, on all atlas entries"};
}

Verdict criterion_bp_partial_group(const std::vector<BinaryPartialGroup>& entries) {
  for (const BinaryPartialGroup& P : entries) {
    const ValidationReport report = validate_partial_group(big_embed(P, 6));
    if (!report.passed()) {
      return {false, signature(P.magma()) + ": " + report.violations.front().axiom};
    }
  }
  return {true, "big embedding at level 6 is a valid partial group for every atlas entry"};
}

Verdict criterion_adjunction(const std::vector<BinaryPartialGroup>& entries) {
  for (const BinaryPartialGroup& P : entries) {
    for (int truncation : {4, 5, 6}) {
      const FunctorReport triangles = check_triangle_identities(P, truncation);
      if (!triangles.passed()) {
        return {false, signature(P.magma()) + " at truncation " + std::to_string(truncation)};
      }
      const FunctorReport eta = check_unit_eta(big_embed(P, truncation));
      if (!eta.passed()) {
        return {false, "eta at " + signature(P.magma()) + ", truncation " +
                           std::to_string(truncation)};
      }
    }
  }
  return {true, "TB identity, eta validity and both triangles at truncations 4, 5, 6"};
}

Verdict criterion_fully_faithful() {
  std::vector<BinaryPartialGroup> small;
  for (int k = 2; k <= 3; ++k) {
    Atlas atlas = classify_bpgs(k);
    for (BinaryPartialGroup& entry : atlas.entries) small.push_back(std::move(entry));
  }
  std::uint64_t pairs = 0;
  for (const BinaryPartialGroup& P : small) {
    for (const BinaryPartialGroup& Q : small) {
      ++pairs;
      const FunctorReport report = check_fully_faithful(P, Q, 4);
      if (!report.passed()) {
        return {false, "pair " + signature(P.magma()) + " ; " + signature(Q.magma())};
      }
    }
  }
  return {true, "hom counts equal on all " + std::to_string(pairs) + " ordered pairs, sizes 2..3"};
}

Verdict criterion_two_skeletal(const std::vector<BinaryPartialGroup>& entries) {
  for (const BinaryPartialGroup& P : entries) {
    const FunctorReport report = check_2skeletal_equivalence(small_embed(P, 6));
    if (!report.passed()) return {false, signature(P.magma())};
  }
  return {true, "eta-prime is a levelwise bijection at level 6 for every atlas entry"};
}

Verdict criterion_baer() {
  std::uint64_t hypothesis = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  for (int k = 2; k <= 4; ++k) {
    enumerate_unital_partial_magmas(k, [&](const PartialMagma& P) {
      if (!satisfies_a3(P) || !has_right_inverses(P)) return true;
      ++hypothesis;
      if (!find_dagger(P).group) {
        ++failures;
        if (first_failure.empty()) first_failure = signature(P);
      }
      return true;
    });
  }
  if (failures > 0) {
    return {false, std::to_string(failures) + " tables under the hypothesis lack an inversion, "
                       "first " + first_failure};
  }
  return {true, "all " + std::to_string(hypothesis) +
                    " tables with A3 and right inverses admit an inversion (sizes 2..4)"};
}

Verdict criterion_known_counts() {
  const Atlas two = classify_bpgs(2);
  if (two.candidates != 3 || two.entries.size() != 1) {
    return {false, "size 2: expected 3 candidates and 1 group"};
  }
  if (!isomorphic(two.entries[0].magma(), cyclic_group(2))) {
    return {false, "size 2: the single entry is not the order-two group"};
  }
  const Atlas three = classify_bpgs(3);
  if (three.candidates != 256) return {false, "size 3: expected 256 candidates"};
  bool has_z3 = false;
  bool has_pair = false;
  for (const BinaryPartialGroup& entry : three.entries) {
    has_z3 = has_z3 || isomorphic(entry.magma(), cyclic_group(3)).has_value();
    has_pair = has_pair || isomorphic(entry.magma(), inverse_pair_magma()).has_value();
  }
  if (!has_z3 || !has_pair) {
    return {false, "size 3: atlas misses the order-three group or the inverse pair"};
  }
  const Atlas four = classify_bpgs(4);
  std::ostringstream detail;
  detail << "3 candidates/1 group at size 2; 256/" << three.entries.size()
         << " at size 3 (order-three group and inverse pair present); "
         << four.candidates << "/" << four.entries.size() << " at size 4";
  return {true, detail.str()};
}

Verdict criterion_monotone_remark(const std::vector<BinaryPartialGroup>& entries) {
  for (const BinaryPartialGroup& P : entries) {
    if (validate_partial_group(simplicial_two_skeleton(P, 4)).passed()) {
      return {false, signature(P.magma()) + " stays valid under monotone-only closure"};
    }
  }
  DaggerSearch trivial = find_dagger(cyclic_group(1));
  if (!trivial.group || !validate_partial_group(simplicial_two_skeleton(*trivial.group, 4)).passed()) {
    return {false, "the trivial group should stay valid under monotone-only closure"};
  }
  return {true, "monotone-only closure breaks every nontrivial atlas entry, "
                "keeps the trivial group"};
}

}  // namespace

int main() {
  const std::vector<BinaryPartialGroup> entries = atlas_entries();

  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {"inversion uniqueness", [&] { return criterion_unique_inversion(); }},
      {"involutive anti-isomorphism", [&] { return criterion_anti_isomorphism(entries); }},
      {"mirror identity", [&] { return criterion_mirror(entries); }},
      {"inversion closure", [&] { return criterion_inversion_closure(entries); }},
      {"prefix cancellation", [&] { return criterion_main_theorem(entries); }},
      {"big embedding validity", [&] { return criterion_bp_partial_group(entries); }},
      {"adjunction identities", [&] { return criterion_adjunction(entries); }},
      {"full faithfulness", [&] { return criterion_fully_faithful(); }},
      {"2-skeletal equivalence", [&] { return criterion_two_skeletal(entries); }},
      {"inversion from associativity", [&] { return criterion_baer(); }},
      {"small census", [&] { return criterion_known_counts(); }},
      {"monotone closure remark", [&] { return criterion_monotone_remark(entries); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict verdict;
    try {
      verdict = criteria[i].run();
    } catch (const std::exception& e) {
      verdict = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%02zu] %s %s: %s (%.2fs)\n", i + 1, verdict.ok ? "PASS" : "FAIL",
                criteria[i].name, verdict.detail.c_str(), seconds);
    std::fflush(stdout);
    if (!verdict.ok) ++failed;
  }
  if (failed == 0) {
    std::printf("all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  }
  return failed == 0 ? 0 : 1;
}
