#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgroup/element.hpp"
#include "pgroup/magma.hpp"
#include "pgroup/report.hpp"

namespace pgroup {

// An arbitrary function [m] -> [n] between finite ordinals, acting
// contravariantly on simplices. Monotonicity is not required; that is the
// difference between the symmetric and the simplicial setting.
struct SimplexMap {
  int source_dim = 0;           // m
  int target_dim = 0;           // n
  std::vector<int> values;      // size m + 1, entries in [0, n]

  SimplexMap(int m, int n, std::vector<int> values);

  int operator()(int i) const { return values[i]; }

  // delta_i : [n-1] -> [n], skipping i.
  static SimplexMap coface(int i, int n);
  // sigma_i : [n+1] -> [n], repeating i.
  static SimplexMap codegeneracy(int i, int n);
  // i -> n - i.
  static SimplexMap reversal(int n);
  // g after f; f's target ordinal must be g's source ordinal.
  static SimplexMap compose(const SimplexMap& g, const SimplexMap& f);

  friend bool operator==(const SimplexMap&, const SimplexMap&) = default;
};

std::string simplex_map_str(const SimplexMap& f);

// Truncation bounds: closure sweeps cost about (N+1)^(N+1) per simplex, so
// the default stops at 8 and callers opt into more explicitly. The hard
// ceiling is the parenthesization cache.
inline constexpr int kMaxTruncation = 8;
inline constexpr int kUnsafeTruncation = 10;
inline constexpr int kDefaultTruncation = 6;

// Truncated symmetric set whose n-simplices are identified with their
// spine words over the level-1 carrier. Levels 0 and 1 are forced (the
// empty word; all singletons); stored levels are sorted and duplicate
// words collapse. Construction checks shape, not the partial group
// axioms: validate_partial_group is the judge of those, so invalid
// candidate structures can be represented and examined.
class TruncatedPartialGroup {
 public:
  TruncatedPartialGroup(int truncation, PartialMagma carrier, std::vector<Element> dagger,
                        std::vector<std::vector<Word>> levels_from_two,
                        int bound = kMaxTruncation);
  TruncatedPartialGroup(int truncation, const BinaryPartialGroup& carrier,
                        std::vector<std::vector<Word>> levels_from_two,
                        int bound = kMaxTruncation);

  int truncation() const { return truncation_; }
  const PartialMagma& carrier() const { return carrier_; }
  Element dagger(Element a) const { return dagger_[a.index]; }
  std::span<const Element> dagger_map() const { return dagger_; }

  // 0 <= n <= truncation(); words sorted lexicographically by index.
  std::span<const Word> level(int n) const;
  bool contains(int n, const Word& w) const;

  friend bool operator==(const TruncatedPartialGroup&, const TruncatedPartialGroup&) = default;

 private:
  int truncation_;
  PartialMagma carrier_;
  std::vector<Element> dagger_;
  std::vector<std::vector<Word>> levels_;
};

// Edge value of w between vertices i and j, 0 <= i, j <= |w|: the unit on
// the diagonal, the total product of the enclosed subword above it, the
// dagger of the opposite edge below it. An incoherent subword is an
// integrity_error: simplices of a valid structure never have one.
Element edge(const TruncatedPartialGroup& X, const Word& w, int i, int j);

// Contravariant action: entry p of the result is the edge of w between
// f(p-1) and f(p). f's target ordinal must be |w|; f's source dimension
// at most the truncation.
Word act(const TruncatedPartialGroup& X, const SimplexMap& f, const Word& w);

Word face(const TruncatedPartialGroup& X, int i, const Word& w);
Word degeneracy(const TruncatedPartialGroup& X, int i, const Word& w);

// Common value of all parenthesizations; integrity_error when incoherent.
Element total_product(const TruncatedPartialGroup& X, const Word& w);

// Everything that makes X a partial group in spine encoding: carrier unit
// laws and inversion clauses, level-2 agreement with the carrier table,
// coherence of every stored word, closure of every level under every
// SimplexMap into it, the inversion condition on levels n with 2n within
// the truncation, and the simplicial identities. Violation families are
// capped and the caps noted.
ValidationReport validate_partial_group(const TruncatedPartialGroup& X);

// A map of truncated symmetric sets of equal truncation is determined by
// its level-1 map; higher levels act entrywise on spine words.
struct SymSetHom {
  TruncatedPartialGroup source;
  TruncatedPartialGroup target;
  std::vector<Element> level1_map;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'0001;

// Levelwise membership of every image word, plus seeded random
// compatibility spot-checks of the action: act(f, h(w)) = h(act(f, w)).
ValidationReport validate_symset_hom(const SymSetHom& h,
                                     std::uint64_t seed = kDefaultSeed,
                                     int samples = 32);
ValidationReport validate_symset_hom(const TruncatedPartialGroup& source,
                                     const TruncatedPartialGroup& target,
                                     std::span<const Element> level1_map,
                                     std::uint64_t seed = kDefaultSeed,
                                     int samples = 32);

SymSetHom identity_symset_hom(const TruncatedPartialGroup& X);

}  // namespace pgroup
