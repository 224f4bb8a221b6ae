#pragma once

#include "pgroup/magma.hpp"
#include "pgroup/report.hpp"
#include "pgroup/symset.hpp"

namespace pgroup {

// Levels n <= truncation are the words whose every full parenthesization
// is defined with a common value. The canonical embedding of a binary
// partial group into truncated symmetric sets.
TruncatedPartialGroup big_embed(const BinaryPartialGroup& P, int truncation = kDefaultTruncation,
                                int bound = kMaxTruncation);

// Independent route: levels 0..2 as in big_embed, level n > 2 the words
// reachable as pullbacks act(f, w) of stored words w at levels m <= 2
// along arbitrary maps [n] -> [m]. Coincides with the 2-skeleton of the
// big embedding; built separately so that claim can be tested.
TruncatedPartialGroup small_embed(const BinaryPartialGroup& P, int truncation = kDefaultTruncation,
                                  int bound = kMaxTruncation);

// Levels through k kept, higher levels regenerated as pullbacks of the
// kept ones. Requires 2 <= k <= truncation. Every regenerated word must
// already be present in X (integrity_error otherwise), so the result is a
// levelwise subset of X, and the operation is idempotent.
TruncatedPartialGroup skeleton(const TruncatedPartialGroup& X, int k);

// Monotone variant of small_embed: level n > 2 uses only order-preserving
// maps [n] -> [m], m <= 2. What the 2-skeleton would be for a simplicial
// set; generally fails symmetric-set closure, which is the point.
TruncatedPartialGroup simplicial_two_skeleton(const BinaryPartialGroup& P,
                                              int truncation = kDefaultTruncation,
                                              int bound = kMaxTruncation);

// The underlying binary partial group of a valid X: carrier elements with
// the product defined on exactly the level-2 words, each value the total
// product. The inversion is recovered by search, not copied, and its
// absence is an integrity_error. Recovering from the 2-skeleton gives the
// same result by construction.
BinaryPartialGroup underlying_group(const TruncatedPartialGroup& X);

// B on morphisms: the level-1 map of the induced map of big embeddings is
// f's underlying map.
SymSetHom induced_hom(const MagmaHom& f, int truncation = kDefaultTruncation);

// Adjunction unit at a valid X: the inclusion of X into the big embedding
// of its underlying group. Checks levelwise containment, validity as a
// map of symmetric sets, and reports the levels where the inclusion is
// proper.
FunctorReport check_unit_eta(const TruncatedPartialGroup& X,
                             std::uint64_t seed = kDefaultSeed);

// underlying_group(big_embed(P)) = P on the nose; the unit at a big
// embedding is the identity; T applied to the unit is the identity.
FunctorReport check_triangle_identities(const BinaryPartialGroup& P,
                                        int truncation = kDefaultTruncation,
                                        std::uint64_t seed = kDefaultSeed);

// Hom-set comparison between maps of binary partial groups P -> Q and
// maps of symmetric sets between the big embeddings, by exhausting all
// |Q|^|P| functions. Carriers of size at most 4.
FunctorReport check_fully_faithful(const BinaryPartialGroup& P, const BinaryPartialGroup& Q,
                                   int truncation = kDefaultTruncation);

// For 2-skeletal X: the comparison of X with small_embed of its
// underlying group is a levelwise bijection. Non-2-skeletal input is a
// precondition_error.
FunctorReport check_2skeletal_equivalence(const TruncatedPartialGroup& X);

// A unital partial magma whose table matches the level-2 data of a valid
// X is automatically a binary partial group: the inversion is found by
// search. Table mismatch is a precondition_error.
FunctorReport check_final_remark(const PartialMagma& P, const TruncatedPartialGroup& X);

// For every member word w of length n <= truncation/2 and every prefix
// length p: the word dagger(prefix) ++ w is a member of level n + p whose
// total product is the product of the remaining suffix; at p = n this is
// membership of dagger(w) ++ w with total product the unit.
FunctorReport check_main_theorem(const BinaryPartialGroup& P,
                                 int truncation = kDefaultTruncation);

}  // namespace pgroup
