#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgroup/magma.hpp"
#include "pgroup/symset.hpp"

namespace pgroup {

// (k+1)^((k-1)^2): unit row and column are forced, each remaining cell is
// undefined or one of k elements.
std::uint64_t unital_magma_count(int k);

// Every unital partial magma on k elements with unit first and default
// names, in ascending table order (undefined sorts before element 0).
// 2 <= k <= 5; k = 5 needs allow_large. Return false from visit to stop.
void enumerate_unital_partial_magmas(int k,
                                     const std::function<bool(const PartialMagma&)>& visit,
                                     bool allow_large = false);

// One binary partial group per unit-preserving isomorphism class, as
// canonical forms in canonical order. candidates counts all enumerated
// tables; groups counts the classes, so groups == entries.size().
struct Atlas {
  int size = 0;
  std::uint64_t candidates = 0;
  std::uint64_t groups = 0;
  std::vector<BinaryPartialGroup> entries;
};

Atlas classify_bpgs(int k, bool allow_large = false);

// Lexicographically least relabeling with the unit moved first, over all
// permutations of the non-unit elements; default names.
PartialMagma canonical_form(const PartialMagma& P);

// First unit-preserving table isomorphism in lexicographic order, as an
// element map P -> Q; nullopt when none exists.
std::optional<std::vector<Element>> isomorphic(const PartialMagma& P, const PartialMagma& Q);

struct WitnessResult {
  std::string predicate;
  bool found = false;
  std::uint64_t examined = 0;   // structures inspected
  std::string details;          // rendered witness data when found
  std::optional<PartialMagma> structure;
};

// Searches small structures for a property of interest. Predicates:
//   dagger-non-unique  unital table with two distinct inversions (expect none)
//   violates-a3        atlas entry failing A3
//   violates-i2        atlas entry failing I2 (expect none)
//   b-ne-bprime        atlas entry where big and small embeddings differ
//                      at some level <= truncation
//   hom-count-mismatch ordered atlas pair with differing hom counts
//                      (expect none)
// Unknown predicates are a structural_error.
WitnessResult find_witness(int k, std::string_view predicate,
                           int truncation = kDefaultTruncation,
                           bool allow_large = false);

std::vector<std::string> witness_predicates();

}  // namespace pgroup
