#include "pgroup/enumerate.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "pgroup/errors.hpp"
#include "pgroup/functors.hpp"
#include "pgroup/words.hpp"

namespace pgroup {

std::uint64_t unital_magma_count(int k) {
  if (k < 1) throw precondition_error("size must be positive");
  const int cells = (k - 1) * (k - 1);
  std::uint64_t result = 1;
  for (int i = 0; i < cells; ++i) result *= static_cast<std::uint64_t>(k) + 1;
  return result;
}

namespace {

std::vector<std::string> default_names(int k) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(k));
  names.emplace_back("1");
  for (int i = 1; i < k; ++i) names.emplace_back(1, static_cast<char>('a' + i - 1));
  return names;
}

// Cell codes: 0 is undefined, 1 + e is element e. The unit row and column
// are forced, leaving (k-1)^2 free cells in row-major order.
struct TableOdometer {
  int k;
  std::vector<std::uint8_t> codes;  // (k-1)^2 cells

  explicit TableOdometer(int size) : k(size), codes(static_cast<std::size_t>(size - 1) * (size - 1), 0) {}

  bool advance() {
    for (std::size_t i = codes.size(); i-- > 0;) {
      if (codes[i] < k) {
        ++codes[i];
        std::fill(codes.begin() + static_cast<std::ptrdiff_t>(i) + 1, codes.end(),
                  std::uint8_t{0});
        return true;
      }
    }
    return false;
  }

  void fill_table(std::vector<std::optional<Element>>& table) const {
    for (int i = 0; i < k; ++i) {
      table[static_cast<std::size_t>(0) * k + i] = Element{static_cast<std::uint32_t>(i)};
      table[static_cast<std::size_t>(i) * k + 0] = Element{static_cast<std::uint32_t>(i)};
    }
    std::size_t cell = 0;
    for (int i = 1; i < k; ++i) {
      for (int j = 1; j < k; ++j, ++cell) {
        const std::uint8_t code = codes[cell];
        table[static_cast<std::size_t>(i) * k + j] =
            code == 0 ? std::optional<Element>()
                      : std::optional<Element>(Element{static_cast<std::uint32_t>(code - 1)});
      }
    }
  }
};

void check_enumeration_size(int k, bool allow_large) {
  if (k < 2 || k > 5) throw precondition_error("enumeration supports sizes 2 through 5");
  if (k == 5 && !allow_large) {
    throw resource_limit_error(
        "size 5 enumerates 6^16 tables; pass the large-run flag to proceed");
  }
}

// Sweeps the tables whose first free cell carries the given code; the
// full sweep is the disjoint union over codes 0..k.
template <typename Visit>
bool enumerate_partition(int k, int first_code, Visit&& visit) {
  const std::vector<std::string> names = default_names(k);
  TableOdometer odo(k);
  odo.codes[0] = static_cast<std::uint8_t>(first_code);
  std::vector<std::optional<Element>> table(static_cast<std::size_t>(k) * k);
  while (true) {
    odo.fill_table(table);
    if (!visit(PartialMagma(names, Element{0}, std::vector<std::optional<Element>>(table)))) {
      return false;
    }
    if (!odo.advance()) return true;
    if (odo.codes[0] != first_code) return true;
  }
}

// Exactly one inversion image per element, without allocating candidate
// lists; the hot path of the classification sweep.
bool unique_dagger(const PartialMagma& P, std::vector<Element>& dagger) {
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  for (std::uint32_t a = 0; a < k; ++a) {
    int found = -1;
    for (std::uint32_t x = 0; x < k; ++x) {
      bool ok = true;
      for (std::uint32_t b = 0; b < k && ok; ++b) {
        const auto ab = P.product(Element{a}, Element{b});
        if (ab && P.product(Element{x}, *ab) != Element{b}) ok = false;
        if (ok) {
          const auto ba = P.product(Element{b}, Element{a});
          if (ba && P.product(*ba, Element{x}) != Element{b}) ok = false;
        }
      }
      if (ok) {
        if (found >= 0) return false;
        found = static_cast<int>(x);
      }
    }
    if (found < 0) return false;
    dagger[a] = Element{static_cast<std::uint32_t>(found)};
  }
  return true;
}

std::vector<std::uint8_t> encode_relabeled(const PartialMagma& P,
                                           const std::vector<std::uint32_t>& inverse) {
  const std::size_t k = P.size();
  std::vector<std::uint32_t> sigma(k);
  for (std::uint32_t x = 0; x < k; ++x) sigma[inverse[x]] = x;
  std::vector<std::uint8_t> out(k * k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      const auto v = P.product(Element{inverse[x]}, Element{inverse[y]});
      out[x * k + y] = v ? static_cast<std::uint8_t>(sigma[v->index] + 1) : std::uint8_t{0};
    }
  }
  return out;
}

std::vector<std::uint8_t> canonical_encoding(const PartialMagma& P) {
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  std::vector<std::uint32_t> rest;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (i != P.unit().index) rest.push_back(i);
  }
  std::vector<std::uint32_t> inverse(k);
  std::vector<std::uint8_t> best;
  do {
    inverse[0] = P.unit().index;
    std::copy(rest.begin(), rest.end(), inverse.begin() + 1);
    std::vector<std::uint8_t> enc = encode_relabeled(P, inverse);
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

PartialMagma decode(int k, const std::vector<std::uint8_t>& encoding) {
  std::vector<std::optional<Element>> table(static_cast<std::size_t>(k) * k);
  for (std::size_t i = 0; i < encoding.size(); ++i) {
    if (encoding[i] != 0) table[i] = Element{static_cast<std::uint32_t>(encoding[i] - 1)};
  }
  return PartialMagma(default_names(k), Element{0}, std::move(table));
}

struct PartitionResult {
  std::uint64_t candidates = 0;
  std::set<std::vector<std::uint8_t>> canon;
};

PartitionResult classify_partition(int k, int first_code) {
  PartitionResult result;
  std::vector<Element> dagger(static_cast<std::size_t>(k));
  enumerate_partition(k, first_code, [&](const PartialMagma& P) {
    ++result.candidates;
    if (unique_dagger(P, dagger)) result.canon.insert(canonical_encoding(P));
    return true;
  });
  return result;
}

}  // namespace

void enumerate_unital_partial_magmas(int k,
                                     const std::function<bool(const PartialMagma&)>& visit,
                                     bool allow_large) {
  check_enumeration_size(k, allow_large);
  for (int code = 0; code <= k; ++code) {
    if (!enumerate_partition(k, code, visit)) return;
  }
}

Atlas classify_bpgs(int k, bool allow_large) {
  check_enumeration_size(k, allow_large);
  std::vector<PartitionResult> parts(static_cast<std::size_t>(k) + 1);
  const unsigned hardware = std::thread::hardware_concurrency();
  if (hardware > 1) {
    std::vector<std::future<PartitionResult>> futures;
    for (int code = 0; code <= k; ++code) {
      futures.push_back(std::async(std::launch::async, classify_partition, k, code));
    }
    for (int code = 0; code <= k; ++code) parts[static_cast<std::size_t>(code)] = futures[code].get();
  } else {
    for (int code = 0; code <= k; ++code) {
      parts[static_cast<std::size_t>(code)] = classify_partition(k, code);
    }
  }
  // Ordered merge: per-partition maps collapse into one sorted set, so the
  // result is independent of how the partitions were scheduled.
  Atlas atlas;
  atlas.size = k;
  std::set<std::vector<std::uint8_t>> canon;
  for (const PartitionResult& part : parts) {
    atlas.candidates += part.candidates;
    canon.insert(part.canon.begin(), part.canon.end());
  }
  atlas.groups = canon.size();
  for (const auto& enc : canon) {
    const PartialMagma canonical = decode(k, enc);
    DaggerSearch search = find_dagger(canonical);
    if (!search.group) {
      throw integrity_error("canonical form lost the inversion");
    }
    atlas.entries.push_back(std::move(*search.group));
  }
  return atlas;
}

PartialMagma canonical_form(const PartialMagma& P) {
  return decode(static_cast<int>(P.size()), canonical_encoding(P));
}

std::optional<std::vector<Element>> isomorphic(const PartialMagma& P, const PartialMagma& Q) {
  if (P.size() != Q.size()) return std::nullopt;
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  std::vector<std::uint32_t> targets;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (i != Q.unit().index) targets.push_back(i);
  }
  std::vector<Element> sigma(k);
  do {
    sigma[P.unit().index] = Q.unit();
    std::size_t next = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      if (i != P.unit().index) sigma[i] = Element{targets[next++]};
    }
    bool ok = true;
    for (std::uint32_t a = 0; a < k && ok; ++a) {
      for (std::uint32_t b = 0; b < k && ok; ++b) {
        const auto ab = P.product(Element{a}, Element{b});
        const auto image = Q.product(sigma[a], sigma[b]);
        if (ab.has_value() != image.has_value()) {
          ok = false;
        } else if (ab && image != sigma[ab->index]) {
          ok = false;
        }
      }
    }
    if (ok) return sigma;
  } while (std::next_permutation(targets.begin(), targets.end()));
  return std::nullopt;
}

std::vector<std::string> witness_predicates() {
  return {"dagger-non-unique", "violates-a3", "violates-i2", "b-ne-bprime",
          "hom-count-mismatch"};
}

WitnessResult find_witness(int k, std::string_view predicate, int truncation, bool allow_large) {
  WitnessResult result;
  result.predicate = std::string(predicate);
  if (predicate == "dagger-non-unique") {
    enumerate_unital_partial_magmas(
        k,
        [&](const PartialMagma& P) {
          ++result.examined;
          bool all_have_one = true;
          std::string doubled;
          for (std::uint32_t a = 0; a < P.size() && all_have_one; ++a) {
            const std::vector<Element> cands = dagger_candidates(P, Element{a});
            if (cands.empty()) all_have_one = false;
            if (cands.size() > 1 && doubled.empty()) {
              doubled = P.name(Element{a}) + " admits " + P.name(cands[0]) + " and " +
                        P.name(cands[1]);
            }
          }
          if (all_have_one && !doubled.empty()) {
            result.found = true;
            result.details = "two distinct inversions: " + doubled;
            result.structure = P;
            return false;
          }
          return true;
        },
        allow_large);
    return result;
  }
  if (predicate == "violates-a3" || predicate == "violates-i2") {
    const Atlas atlas = classify_bpgs(k, allow_large);
    for (const BinaryPartialGroup& entry : atlas.entries) {
      ++result.examined;
      const ValidationReport report = predicate == "violates-a3"
                                          ? check_A3(entry.magma())
                                          : check_I2(entry.magma(), entry.dagger_map());
      if (!report.passed()) {
        const Violation& v = report.violations.front();
        std::ostringstream details;
        details << v.axiom << " fails at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
          if (i) details << ", ";
          details << v.witness[i];
        }
        details << "): " << v.found;
        result.found = true;
        result.details = details.str();
        result.structure = entry.magma();
        return result;
      }
    }
    return result;
  }
  if (predicate == "b-ne-bprime") {
    const Atlas atlas = classify_bpgs(k, allow_large);
    for (const BinaryPartialGroup& entry : atlas.entries) {
      ++result.examined;
      const TruncatedPartialGroup big = big_embed(entry, truncation);
      const TruncatedPartialGroup small = small_embed(entry, truncation);
      for (int n = 3; n <= truncation; ++n) {
        const std::span<const Word> bs = big.level(n);
        const std::span<const Word> ss = small.level(n);
        if (bs.size() == ss.size() && std::equal(bs.begin(), bs.end(), ss.begin())) continue;
        // The generated levels sit inside the big ones, so the first size
        // difference exhibits a word present only in the big embedding.
        const Word* witness = nullptr;
        for (const Word& w : big.level(n)) {
          if (!small.contains(n, w)) {
            witness = &w;
            break;
          }
        }
        std::ostringstream details;
        details << "level " << n << ": " << big.level(n).size() << " vs "
                << small.level(n).size() << " simplices";
        if (witness) details << "; " << word_str(entry.magma(), *witness)
                             << " is not generated from levels <= 2";
        result.found = true;
        result.details = details.str();
        result.structure = entry.magma();
        return result;
      }
    }
    return result;
  }
  if (predicate == "hom-count-mismatch") {
    if (k > 3 && !allow_large) {
      throw resource_limit_error(
          "hom-set sweep over all ordered pairs is quartic; pass the large-run flag for size 4");
    }
    const Atlas atlas = classify_bpgs(k, allow_large);
    for (const BinaryPartialGroup& P : atlas.entries) {
      for (const BinaryPartialGroup& Q : atlas.entries) {
        ++result.examined;
        const FunctorReport report = check_fully_faithful(P, Q, truncation);
        if (!report.passed()) {
          result.found = true;
          result.details = "pair (" + signature(P.magma()) + "; " + signature(Q.magma()) +
                           "): " + report.checks.front().witness;
          result.structure = P.magma();
          return result;
        }
      }
    }
    return result;
  }
  throw structural_error("unknown witness predicate: " + std::string(predicate));
}

}  // namespace pgroup
