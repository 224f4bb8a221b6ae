#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgroup/element.hpp"
#include "pgroup/magma.hpp"
#include "pgroup/report.hpp"

namespace pgroup {

// One full parenthesization of a length-n word: a full binary tree with n
// leaves, nodes stored in preorder so equality is equality of the arrays.
// Rendered as a bracket string over bullet leaves, e.g. "(•(••))".
class ParenTree {
 public:
  static ParenTree leaf();
  static ParenTree combine(const ParenTree& left, const ParenTree& right);
  static ParenTree parse(std::string_view text);

  static constexpr int root = 0;
  int leaf_count() const;
  bool is_leaf(int node) const { return nodes_[node].left < 0; }
  int left(int node) const { return nodes_[node].left; }
  int right(int node) const { return nodes_[node].right; }

  std::string str() const;

  friend bool operator==(const ParenTree&, const ParenTree&) = default;

 private:
  ParenTree() = default;
  struct Node {
    int left = -1;
    int right = -1;
    friend bool operator==(const Node&, const Node&) = default;
  };
  std::vector<Node> nodes_;
};

// Catalan(9) = 4862 trees; beyond that the all-trees sweeps stop paying.
inline constexpr int kMaxParenLeaves = 10;
// Length bound for the all-parenthesizations membership sweep.
inline constexpr int kMaxWordLength = 8;
// Bound used when a caller explicitly opts into large runs.
inline constexpr int kUnsafeWordLength = kMaxParenLeaves;

// All full parenthesizations of an n-leaf word, leftmost split first.
// n < 1 is a precondition_error, n > bound a resource_limit_error.
std::vector<ParenTree> all_parenthesizations(int n, int bound = kMaxParenLeaves);

// Shared immutable cache of the same lists, for hot paths. 1 <= n <= kMaxParenLeaves.
std::span<const ParenTree> parenthesizations(int n);

// Left-to-right shape reflection; leaves keep their order. Involutive.
ParenTree mirror(const ParenTree& t);

// Fold w along t; undefined as soon as any intermediate product is.
std::optional<Element> evaluate(const PartialMagma& P, const Word& w, const ParenTree& t);

// Reverse w and apply the inversion entrywise.
Word word_dagger(const BinaryPartialGroup& P, const Word& w);

// Common value of all full parenthesizations of w over P, when every tree
// is defined and they agree; nullopt otherwise. Length 0 gives the unit,
// length 1 the entry itself.
std::optional<Element> common_product(const PartialMagma& P, const Word& w,
                                      int bound = kMaxWordLength);

// Membership of w in the level-|w| simplices of P's big embedding, by the
// all-trees criterion. Returns the common value on membership.
std::optional<Element> bp_membership(const BinaryPartialGroup& P, const Word& w,
                                     int bound = kMaxWordLength);

struct BpDiagnosis {
  std::optional<Element> value;        // engaged exactly on membership
  std::optional<ParenTree> witness;    // first tree that is undefined or disagrees
  std::string detail;                  // what the witness tree did
};

// As bp_membership, but on failure reports the first offending tree.
BpDiagnosis bp_membership_diagnose(const BinaryPartialGroup& P, const Word& w,
                                   int bound = kMaxWordLength);

// evaluate(w, t) against dagger(evaluate(dagger(w), mirror(t))), both
// undefined or both defined and equal.
ValidationReport check_mirror_identity(const BinaryPartialGroup& P, const Word& w,
                                       const ParenTree& t);

// The mirror identity over every word of length 1..max_length and every
// tree of that length.
ValidationReport check_mirror_sweep(const BinaryPartialGroup& P, int max_length,
                                    int bound = kMaxWordLength);

// w is a member iff dagger(w) is, with the values exchanged by the
// inversion; swept over every word of length 0..max_length.
ValidationReport check_inversion_closure(const BinaryPartialGroup& P, int max_length,
                                         int bound = kMaxWordLength);

// Advances w through all words of its length over the first `alphabet`
// elements, lexicographically; false once w was the last one. Start from
// the all-zero word.
bool next_word(Word& w, std::uint32_t alphabet);

// "a,b,a" over the structure's display names.
std::string word_str(const PartialMagma& P, const Word& w);
// Inverse of word_str; unknown names are a structural_error.
Word parse_word(const PartialMagma& P, std::string_view text);

}  // namespace pgroup
