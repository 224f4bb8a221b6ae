#include "pgroup/words.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <utility>

#include "pgroup/errors.hpp"

namespace pgroup {

ParenTree ParenTree::leaf() {
  ParenTree t;
  t.nodes_.push_back({});
  return t;
}

ParenTree ParenTree::combine(const ParenTree& left, const ParenTree& right) {
  ParenTree t;
  const int left_size = static_cast<int>(left.nodes_.size());
  t.nodes_.reserve(1 + left.nodes_.size() + right.nodes_.size());
  t.nodes_.push_back({1, 1 + left_size});
  for (const Node& n : left.nodes_) {
    t.nodes_.push_back(n.left < 0 ? n : Node{n.left + 1, n.right + 1});
  }
  for (const Node& n : right.nodes_) {
    t.nodes_.push_back(n.left < 0 ? n : Node{n.left + 1 + left_size, n.right + 1 + left_size});
  }
  return t;
}

int ParenTree::leaf_count() const {
  int count = 0;
  for (const Node& n : nodes_) {
    if (n.left < 0) ++count;
  }
  return count;
}

namespace {

constexpr std::string_view kBullet = "•";

ParenTree parse_rec(std::string_view text, std::size_t& pos) {
  if (text.substr(pos, kBullet.size()) == kBullet) {
    pos += kBullet.size();
    return ParenTree::leaf();
  }
  if (pos < text.size() && text[pos] == '(') {
    ++pos;
    ParenTree left = parse_rec(text, pos);
    ParenTree right = parse_rec(text, pos);
    if (pos >= text.size() || text[pos] != ')') {
      throw structural_error("unbalanced parenthesization string");
    }
    ++pos;
    return ParenTree::combine(left, right);
  }
  throw structural_error("unparseable parenthesization string");
}

}  // namespace

ParenTree ParenTree::parse(std::string_view text) {
  std::size_t pos = 0;
  ParenTree t = parse_rec(text, pos);
  if (pos != text.size()) throw structural_error("trailing characters in parenthesization");
  return t;
}

std::string ParenTree::str() const {
  std::string out;
  const auto rec = [&](auto&& self, int node) -> void {
    if (is_leaf(node)) {
      out += kBullet;
      return;
    }
    out += '(';
    self(self, left(node));
    self(self, right(node));
    out += ')';
  };
  rec(rec, root);
  return out;
}

std::vector<ParenTree> all_parenthesizations(int n, int bound) {
  if (n < 1) throw precondition_error("parenthesizations need at least one leaf");
  if (n > bound || n > kMaxParenLeaves) {
    std::ostringstream msg;
    msg << "parenthesization sweep over " << n << " leaves exceeds the bound "
        << std::min(bound, kMaxParenLeaves);
    throw resource_limit_error(msg.str());
  }
  std::vector<std::vector<ParenTree>> memo(static_cast<std::size_t>(n) + 1);
  memo[1] = {ParenTree::leaf()};
  for (int size = 2; size <= n; ++size) {
    // Leftmost split first: the left factor grows from one leaf upward.
    for (int split = 1; split < size; ++split) {
      for (const ParenTree& left : memo[split]) {
        for (const ParenTree& right : memo[size - split]) {
          memo[size].push_back(ParenTree::combine(left, right));
        }
      }
    }
  }
  return std::move(memo[n]);
}

std::span<const ParenTree> parenthesizations(int n) {
  if (n < 1 || n > kMaxParenLeaves) throw precondition_error("leaf count out of cache range");
  static std::once_flag flag;
  static std::vector<std::vector<ParenTree>> cache;
  std::call_once(flag, [] {
    cache.resize(kMaxParenLeaves + 1);
    for (int size = 1; size <= kMaxParenLeaves; ++size) {
      cache[size] = all_parenthesizations(size);
    }
  });
  return cache[n];
}

ParenTree mirror(const ParenTree& t) {
  const auto rec = [&](auto&& self, int node) -> ParenTree {
    if (t.is_leaf(node)) return ParenTree::leaf();
    return ParenTree::combine(self(self, t.right(node)), self(self, t.left(node)));
  };
  return rec(rec, ParenTree::root);
}

namespace {

// Subtree leaf counts, indexed by node.
void leaf_counts(const ParenTree& t, std::vector<int>& out, int node) {
  if (t.is_leaf(node)) {
    out[node] = 1;
  } else {
    leaf_counts(t, out, t.left(node));
    leaf_counts(t, out, t.right(node));
    out[node] = out[t.left(node)] + out[t.right(node)];
  }
}

}  // namespace

std::optional<Element> evaluate(const PartialMagma& P, const Word& w, const ParenTree& t) {
  if (t.leaf_count() != static_cast<int>(w.size())) {
    throw precondition_error("tree leaf count differs from word length");
  }
  for (const Element e : w) {
    if (e.index >= P.size()) throw structural_error("word entry out of range");
  }
  std::vector<int> counts(w.size() * 2);
  leaf_counts(t, counts, ParenTree::root);
  const auto rec = [&](auto&& self, int node, int lo) -> std::optional<Element> {
    if (t.is_leaf(node)) return w[lo];
    const auto left = self(self, t.left(node), lo);
    if (!left) return std::nullopt;
    const auto right = self(self, t.right(node), lo + counts[t.left(node)]);
    if (!right) return std::nullopt;
    return P.product(*left, *right);
  };
  return rec(rec, ParenTree::root, 0);
}

Word word_dagger(const BinaryPartialGroup& P, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(P.dagger(*it));
  return out;
}

std::optional<Element> common_product(const PartialMagma& P, const Word& w, int bound) {
  const int n = static_cast<int>(w.size());
  if (n > bound) {
    std::ostringstream msg;
    msg << "word of length " << n << " exceeds the membership bound " << bound;
    throw resource_limit_error(msg.str());
  }
  if (n == 0) return P.unit();
  for (const Element e : w) {
    if (e.index >= P.size()) throw structural_error("word entry out of range");
  }
  if (n == 1) return w[0];
  const std::span<const ParenTree> trees = parenthesizations(n);
  const std::optional<Element> first = evaluate(P, w, trees[0]);
  if (!first) return std::nullopt;
  for (std::size_t i = 1; i < trees.size(); ++i) {
    if (evaluate(P, w, trees[i]) != first) return std::nullopt;
  }
  return first;
}

std::optional<Element> bp_membership(const BinaryPartialGroup& P, const Word& w, int bound) {
  return common_product(P.magma(), w, bound);
}

BpDiagnosis bp_membership_diagnose(const BinaryPartialGroup& P, const Word& w, int bound) {
  BpDiagnosis result;
  const int n = static_cast<int>(w.size());
  if (n > bound) {
    std::ostringstream msg;
    msg << "word of length " << n << " exceeds the membership bound " << bound;
    throw resource_limit_error(msg.str());
  }
  if (n == 0) {
    result.value = P.unit();
    return result;
  }
  const PartialMagma& M = P.magma();
  if (n == 1) {
    if (w[0].index >= M.size()) throw structural_error("word entry out of range");
    result.value = w[0];
    return result;
  }
  const std::span<const ParenTree> trees = parenthesizations(n);
  std::optional<Element> first;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const std::optional<Element> v = evaluate(M, w, trees[i]);
    if (!v) {
      result.witness = trees[i];
      result.detail = "undefined under this parenthesization";
      return result;
    }
    if (i == 0) {
      first = v;
    } else if (v != first) {
      result.witness = trees[i];
      result.detail = "value " + M.name(*v) + " disagrees with " + M.name(*first) +
                      " from " + trees[0].str();
      return result;
    }
  }
  result.value = first;
  return result;
}

ValidationReport check_mirror_identity(const BinaryPartialGroup& P, const Word& w,
                                       const ParenTree& t) {
  ValidationReport report;
  const PartialMagma& M = P.magma();
  const std::optional<Element> lhs = evaluate(M, w, t);
  const std::optional<Element> inner = evaluate(M, word_dagger(P, w), mirror(t));
  const std::optional<Element> rhs =
      inner ? std::optional<Element>(P.dagger(*inner)) : std::nullopt;
  if (lhs != rhs) {
    report.add("mirror", {word_str(M, w), t.str()},
               "both sides undefined or both defined and equal",
               "direct = " + show(M, lhs) + ", mirrored = " + show(M, rhs));
  }
  return report;
}

bool next_word(Word& w, std::uint32_t alphabet) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i].index + 1 < alphabet) {
      ++w[i].index;
      std::fill(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end(), Element{0});
      return true;
    }
  }
  return false;
}

ValidationReport check_mirror_sweep(const BinaryPartialGroup& P, int max_length, int bound) {
  if (max_length > bound) {
    throw resource_limit_error("mirror sweep length exceeds the word bound");
  }
  ValidationReport report;
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  std::uint64_t checked = 0;
  for (int n = 1; n <= max_length; ++n) {
    const std::span<const ParenTree> trees = parenthesizations(n);
    Word w(static_cast<std::size_t>(n), Element{0});
    do {
      for (const ParenTree& t : trees) {
        report.merge(check_mirror_identity(P, w, t));
        ++checked;
      }
    } while (next_word(w, k));
  }
  std::ostringstream note;
  note << "mirror identity checked on " << checked << " word/parenthesization pairs up to length "
       << max_length;
  report.note(note.str());
  return report;
}

ValidationReport check_inversion_closure(const BinaryPartialGroup& P, int max_length, int bound) {
  if (max_length > bound) {
    throw resource_limit_error("inversion sweep length exceeds the word bound");
  }
  ValidationReport report;
  const PartialMagma& M = P.magma();
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  std::uint64_t checked = 0;
  for (int n = 0; n <= max_length; ++n) {
    Word w(static_cast<std::size_t>(n), Element{0});
    do {
      const std::optional<Element> direct = bp_membership(P, w, bound);
      const std::optional<Element> reversed = bp_membership(P, word_dagger(P, w), bound);
      ++checked;
      if (direct.has_value() != reversed.has_value()) {
        report.add("inversion-closure-membership", {word_str(M, w)},
                   "w and w† both members or both non-members",
                   "w: " + show(M, direct) + ", w†: " + show(M, reversed));
      } else if (direct && P.dagger(*direct) != *reversed) {
        report.add("inversion-closure-value", {word_str(M, w)},
                   "product of w† is the inversion of the product of w",
                   "w: " + M.name(*direct) + ", w†: " + M.name(*reversed));
      }
    } while (next_word(w, k));
  }
  std::ostringstream note;
  note << "inversion closure checked on " << checked << " words up to length " << max_length;
  report.note(note.str());
  return report;
}

std::string word_str(const PartialMagma& P, const Word& w) {
  if (w.empty()) return "(empty)";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ",";
    out << P.name(w[i]);
  }
  return out.str();
}

Word parse_word(const PartialMagma& P, std::string_view text) {
  Word out;
  if (text.empty() || text == "(empty)") return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    const std::optional<Element> e = P.find(token);
    if (!e) throw structural_error("unknown element name in word: " + std::string(token));
    out.push_back(*e);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace pgroup
