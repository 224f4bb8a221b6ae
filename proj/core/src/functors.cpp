#include "pgroup/functors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "detail_edges.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/words.hpp"

namespace pgroup {

namespace {

int word_bound(int truncation) { return std::max(truncation, kMaxWordLength); }

// All value tuples of maps [n] -> [m], as an odometer over n+1 digits in
// base m+1.
bool next_map(std::vector<int>& values, int m) {
  for (std::size_t i = values.size(); i-- > 0;) {
    if (values[i] < m) {
      ++values[i];
      std::fill(values.begin() + static_cast<std::ptrdiff_t>(i) + 1, values.end(), 0);
      return true;
    }
  }
  return false;
}

bool is_monotone(const std::vector<int>& values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i - 1] > values[i]) return false;
  }
  return true;
}

std::vector<Word> multipliable_pairs(const BinaryPartialGroup& P) {
  std::vector<Word> level;
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) {
      if (P.magma().defined(Element{i}, Element{j})) level.push_back({Element{i}, Element{j}});
    }
  }
  return level;
}

// Pullbacks of the words stored at levels m <= 2 along every map
// [n] -> [m], optionally restricted to monotone maps.
std::vector<Word> generated_level(const BinaryPartialGroup& P,
                                  const std::vector<std::vector<Word>>& base_levels, int n,
                                  bool monotone_only, int bound) {
  std::set<Word> out;
  for (int m = 0; m < static_cast<int>(base_levels.size()); ++m) {
    for (const Word& w : base_levels[static_cast<std::size_t>(m)]) {
      const std::vector<std::int32_t> codes =
          detail::edge_codes(P.magma(), P.dagger_map(), w, bound);
      std::vector<int> values(static_cast<std::size_t>(n) + 1, 0);
      do {
        if (monotone_only && !is_monotone(values)) continue;
        const SimplexMap f(n, m, values);
        const std::optional<Word> image = detail::act_codes(codes, m, f);
        if (image) out.insert(*image);
      } while (next_map(values, m));
    }
  }
  return {out.begin(), out.end()};
}

TruncatedPartialGroup embed_from_base(const BinaryPartialGroup& P, int truncation,
                                      bool monotone_only, int bound) {
  if (truncation < 2) throw precondition_error("truncation level must be at least 2");
  std::vector<std::vector<Word>> base(3);
  base[0] = {Word{}};
  for (std::uint32_t i = 0; i < P.size(); ++i) base[1].push_back({Element{i}});
  base[2] = multipliable_pairs(P);
  std::vector<std::vector<Word>> levels;
  levels.push_back(base[2]);
  for (int n = 3; n <= truncation; ++n) {
    levels.push_back(generated_level(P, base, n, monotone_only, word_bound(truncation)));
  }
  return TruncatedPartialGroup(truncation, P, std::move(levels), bound);
}

}  // namespace

TruncatedPartialGroup big_embed(const BinaryPartialGroup& P, int truncation, int bound) {
  if (truncation < 2) throw precondition_error("truncation level must be at least 2");
  if (truncation > std::min(bound, kUnsafeTruncation)) {
    throw resource_limit_error("truncation level " + std::to_string(truncation) +
                               " exceeds the bound");
  }
  std::vector<std::vector<Word>> levels;
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  for (int n = 2; n <= truncation; ++n) {
    std::vector<Word> level;
    Word w(static_cast<std::size_t>(n), Element{0});
    do {
      if (bp_membership(P, w, word_bound(truncation))) level.push_back(w);
    } while (next_word(w, k));
    levels.push_back(std::move(level));
  }
  return TruncatedPartialGroup(truncation, P, std::move(levels), bound);
}

TruncatedPartialGroup small_embed(const BinaryPartialGroup& P, int truncation, int bound) {
  if (truncation > std::min(bound, kUnsafeTruncation)) {
    throw resource_limit_error("truncation level " + std::to_string(truncation) +
                               " exceeds the bound");
  }
  return embed_from_base(P, truncation, false, bound);
}

TruncatedPartialGroup simplicial_two_skeleton(const BinaryPartialGroup& P, int truncation,
                                              int bound) {
  if (truncation > std::min(bound, kUnsafeTruncation)) {
    throw resource_limit_error("truncation level " + std::to_string(truncation) +
                               " exceeds the bound");
  }
  return embed_from_base(P, truncation, true, bound);
}

TruncatedPartialGroup skeleton(const TruncatedPartialGroup& X, int k) {
  const int N = X.truncation();
  if (k < 2 || k > N) throw precondition_error("skeleton degree must lie in [2, truncation]");
  const int bound = word_bound(N);
  std::vector<std::vector<Word>> levels;
  for (int n = 2; n <= k; ++n) {
    levels.emplace_back(X.level(n).begin(), X.level(n).end());
  }
  for (int n = k + 1; n <= N; ++n) {
    std::set<Word> generated;
    for (int m = 0; m <= k; ++m) {
      for (const Word& w : X.level(m)) {
        const std::vector<std::int32_t> codes =
            detail::edge_codes(X.carrier(), X.dagger_map(), w, bound);
        std::vector<int> values(static_cast<std::size_t>(n) + 1, 0);
        do {
          const SimplexMap f(n, m, values);
          const std::optional<Word> image = detail::act_codes(codes, m, f);
          if (image) generated.insert(*image);
        } while (next_map(values, m));
      }
    }
    for (const Word& w : generated) {
      if (!X.contains(n, w)) {
        throw integrity_error("skeleton generated " + word_str(X.carrier(), w) +
                              " at level " + std::to_string(n) +
                              ", which the input does not store");
      }
    }
    levels.emplace_back(generated.begin(), generated.end());
  }
  return TruncatedPartialGroup(N, X.carrier(),
                               std::vector<Element>(X.dagger_map().begin(), X.dagger_map().end()),
                               std::move(levels), std::max(N, kMaxTruncation));
}

BinaryPartialGroup underlying_group(const TruncatedPartialGroup& X) {
  const PartialMagma& M = X.carrier();
  const std::size_t k = M.size();
  const auto table_from = [&](const TruncatedPartialGroup& Y) {
    std::vector<std::optional<Element>> table(k * k);
    for (const Word& w : Y.level(2)) {
      const std::optional<Element> value = M.product(w[0], w[1]);
      if (!value) {
        throw integrity_error("stored pair " + word_str(M, w) + " has an undefined product");
      }
      table[w[0].index * k + w[1].index] = value;
    }
    return table;
  };
  std::vector<std::optional<Element>> table = table_from(X);
  // The 2-skeleton must exist inside X and induce the same table.
  const TruncatedPartialGroup sk2 = skeleton(X, 2);
  if (table_from(sk2) != table) {
    throw integrity_error("2-skeleton induces a different product table");
  }
  PartialMagma underlying(std::vector<std::string>(M.names().begin(), M.names().end()), M.unit(),
                          std::move(table));
  DaggerSearch search = find_dagger(underlying);
  if (!search.group) {
    std::string axiom = search.report.violations.empty()
                            ? std::string("unknown")
                            : search.report.violations.front().axiom;
    throw integrity_error("underlying table admits no inversion (" + axiom + ")");
  }
  return *search.group;
}

SymSetHom induced_hom(const MagmaHom& f, int truncation) {
  return {big_embed(f.source, truncation), big_embed(f.target, truncation), f.map};
}

FunctorReport check_unit_eta(const TruncatedPartialGroup& X, std::uint64_t seed) {
  FunctorReport report;
  report.construction = "unit-eta";
  report.instances.push_back(signature(X.carrier()));
  report.instances.push_back("truncation " + std::to_string(X.truncation()));
  const BinaryPartialGroup P = underlying_group(X);
  const TruncatedPartialGroup Y = big_embed(P, X.truncation());
  for (int n = 0; n <= X.truncation(); ++n) {
    const std::span<const Word> xs = X.level(n);
    const std::span<const Word> ys = Y.level(n);
    const Word* missing = nullptr;
    for (const Word& w : xs) {
      if (!Y.contains(n, w)) {
        missing = &w;
        break;
      }
    }
    std::ostringstream claim;
    claim << "eta-inclusion-level-" << n;
    if (missing) {
      report.add(claim.str(), false,
                 word_str(X.carrier(), *missing) + " is not a simplex of the big embedding");
    } else {
      std::ostringstream witness;
      witness << xs.size() << " of " << ys.size() << " simplices";
      report.add(claim.str(), true, witness.str());
      if (xs.size() < ys.size()) {
        std::ostringstream proper;
        proper << "eta-proper-level-" << n;
        report.add(proper.str(), true,
                   "inclusion is proper: " + std::to_string(ys.size() - xs.size()) +
                       " simplices are not in the image");
      }
    }
  }
  std::vector<Element> id_map(X.carrier().size());
  for (std::uint32_t i = 0; i < id_map.size(); ++i) id_map[i] = Element{i};
  const ValidationReport hom = validate_symset_hom(X, Y, id_map, seed);
  report.add("eta-symset-hom", hom.passed(),
             hom.passed() ? "inclusion is a valid map of symmetric sets"
                          : render(hom, ReportFormat::text));
  return report;
}

FunctorReport check_triangle_identities(const BinaryPartialGroup& P, int truncation,
                                        std::uint64_t seed) {
  FunctorReport report;
  report.construction = "triangle-identities";
  report.instances.push_back(signature(P.magma()));
  report.instances.push_back("truncation " + std::to_string(truncation));
  const TruncatedPartialGroup X = big_embed(P, truncation);
  const BinaryPartialGroup TX = underlying_group(X);
  report.add("counit-tb-identity", TX == P,
             TX == P ? "underlying group of the big embedding is the input itself"
                     : "tables or inversions differ");
  const TruncatedPartialGroup Y = big_embed(TX, truncation);
  report.add("unit-identity-at-big-embedding", Y == X,
             Y == X ? "unit at a big embedding is the identity"
                    : "levels differ after the round trip");
  const SymSetHom eta = identity_symset_hom(X);
  const ValidationReport eta_valid = validate_symset_hom(X, Y, eta.level1_map, seed);
  bool identity_map = true;
  for (std::uint32_t i = 0; i < eta.level1_map.size(); ++i) {
    identity_map = identity_map && eta.level1_map[i] == Element{i};
  }
  report.add("t-of-unit-identity", eta_valid.passed() && identity_map,
             eta_valid.passed() ? "underlying map of the unit is the identity"
                                : render(eta_valid, ReportFormat::text));
  return report;
}

FunctorReport check_fully_faithful(const BinaryPartialGroup& P, const BinaryPartialGroup& Q,
                                   int truncation) {
  if (P.size() > 4 || Q.size() > 4) {
    throw precondition_error("exhaustive hom-set comparison needs carriers of size at most 4");
  }
  FunctorReport report;
  report.construction = "fully-faithful";
  report.instances.push_back(signature(P.magma()));
  report.instances.push_back(signature(Q.magma()));
  const TruncatedPartialGroup BP = big_embed(P, truncation);
  const TruncatedPartialGroup BQ = big_embed(Q, truncation);
  std::vector<std::vector<Element>> magma_homs;
  std::vector<std::vector<Element>> symset_homs;
  const std::uint32_t kp = static_cast<std::uint32_t>(P.size());
  const std::uint32_t kq = static_cast<std::uint32_t>(Q.size());
  Word map(kp, Element{0});
  do {
    const std::vector<Element> candidate(map.begin(), map.end());
    if (validate_hom({P, Q, candidate}).passed()) magma_homs.push_back(candidate);
    if (validate_symset_hom(BP, BQ, candidate).passed()) symset_homs.push_back(candidate);
  } while (next_word(map, kq));
  std::ostringstream counts;
  counts << magma_homs.size() << " maps of binary partial groups, " << symset_homs.size()
         << " maps of symmetric sets, out of " << [&] {
              std::uint64_t total = 1;
              for (std::uint32_t i = 0; i < kp; ++i) total *= kq;
              return total;
            }()
         << " functions";
  report.add("hom-count", magma_homs.size() == symset_homs.size(), counts.str());
  report.add("hom-sets-equal", magma_homs == symset_homs,
             magma_homs == symset_homs ? "identical underlying maps in identical order"
                                       : "the two hom-sets differ");
  return report;
}

FunctorReport check_2skeletal_equivalence(const TruncatedPartialGroup& X) {
  if (!(skeleton(X, 2) == X)) {
    throw precondition_error("input is not 2-skeletal");
  }
  FunctorReport report;
  report.construction = "2-skeletal-equivalence";
  report.instances.push_back(signature(X.carrier()));
  report.instances.push_back("truncation " + std::to_string(X.truncation()));
  const BinaryPartialGroup P = underlying_group(X);
  const TruncatedPartialGroup Y = small_embed(P, X.truncation());
  for (int n = 0; n <= X.truncation(); ++n) {
    const std::span<const Word> xs = X.level(n);
    const std::span<const Word> ys = Y.level(n);
    std::ostringstream claim;
    claim << "eta-prime-bijective-level-" << n;
    const bool equal = xs.size() == ys.size() &&
                       std::equal(xs.begin(), xs.end(), ys.begin());
    std::ostringstream witness;
    if (equal) {
      witness << xs.size() << " simplices on each side";
    } else {
      witness << xs.size() << " vs " << ys.size() << " simplices";
    }
    report.add(claim.str(), equal, witness.str());
  }
  return report;
}

FunctorReport check_final_remark(const PartialMagma& P, const TruncatedPartialGroup& X) {
  const PartialMagma& M = X.carrier();
  if (P.size() != M.size() || P.unit() != M.unit()) {
    throw precondition_error("magma does not match the level-2 data: size or unit differ");
  }
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) {
      const Element a{i}, b{j};
      const bool stored = X.contains(2, {a, b});
      const std::optional<Element> value = P.product(a, b);
      if (stored != value.has_value() ||
          (value && value != M.product(a, b))) {
        throw precondition_error("magma does not match the level-2 data at (" + P.name(a) +
                                 ", " + P.name(b) + ")");
      }
    }
  }
  FunctorReport report;
  report.construction = "final-remark";
  report.instances.push_back(signature(P));
  const DaggerSearch search = find_dagger(P);
  std::string rendered;
  if (search.group) {
    std::ostringstream out;
    for (std::uint32_t i = 0; i < k; ++i) {
      if (i) out << ", ";
      out << P.name(Element{i}) << "†=" << P.name(search.group->dagger(Element{i}));
    }
    rendered = out.str();
  }
  report.add("inversion-recovered", search.group.has_value(),
             search.group ? rendered : render(search.report, ReportFormat::text));
  if (search.group) {
    const BinaryPartialGroup TX = underlying_group(X);
    const bool same =
        std::equal(TX.dagger_map().begin(), TX.dagger_map().end(),
                   search.group->dagger_map().begin(), search.group->dagger_map().end());
    report.add("matches-underlying-inversion", same,
               same ? "same inversion as the underlying group" : "inversions differ");
  }
  return report;
}

FunctorReport check_main_theorem(const BinaryPartialGroup& P, int truncation) {
  FunctorReport report;
  report.construction = "main-theorem";
  report.instances.push_back(signature(P.magma()));
  report.instances.push_back("truncation " + std::to_string(truncation));
  const int bound = word_bound(truncation);
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  for (int n = 0; 2 * n <= truncation; ++n) {
    std::uint64_t members = 0;
    std::uint64_t instances = 0;
    std::string failure;
    Word w(static_cast<std::size_t>(n), Element{0});
    do {
      const std::optional<Element> value = bp_membership(P, w, bound);
      if (!value) continue;
      ++members;
      for (int p = 0; p <= n && failure.empty(); ++p) {
        Word extended;
        extended.reserve(static_cast<std::size_t>(n + p));
        for (int q = p - 1; q >= 0; --q) extended.push_back(P.dagger(w[static_cast<std::size_t>(q)]));
        extended.insert(extended.end(), w.begin(), w.end());
        const std::optional<Element> got = bp_membership(P, extended, bound);
        const Word suffix(w.begin() + p, w.end());
        const std::optional<Element> expected = bp_membership(P, suffix, bound);
        ++instances;
        if (!got) {
          failure = word_str(P.magma(), extended) + " is not a member at level " +
                    std::to_string(n + p);
        } else if (!expected) {
          failure = "suffix " + word_str(P.magma(), suffix) + " of member word " +
                    word_str(P.magma(), w) + " is not a member";
        } else if (*got != *expected) {
          failure = word_str(P.magma(), extended) + " has product " + P.name(*got) +
                    ", expected " + P.name(*expected);
        }
      }
    } while (!w.empty() && next_word(w, k) && failure.empty());
    std::ostringstream claim;
    claim << "main-theorem-length-" << n;
    std::ostringstream witness;
    if (failure.empty()) {
      witness << instances << " prefix instances over " << members << " member words";
    } else {
      witness << failure;
    }
    report.add(claim.str(), failure.empty(), witness.str());
  }
  return report;
}

}  // namespace pgroup
