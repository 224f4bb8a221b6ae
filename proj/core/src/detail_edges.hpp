#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pgroup/element.hpp"
#include "pgroup/magma.hpp"
#include "pgroup/symset.hpp"
#include "pgroup/words.hpp"

namespace pgroup::detail {

// Flat (n+1) x (n+1) spine-edge matrix of w: entry i*(n+1)+j holds the
// element index of the edge between vertices i and j, or -1 when the
// subword between them is not coherently multipliable. Below-diagonal
// entries are the inversion of their transpose.
inline std::vector<std::int32_t> edge_codes(const PartialMagma& carrier,
                                            std::span<const Element> dagger, const Word& w,
                                            int bound) {
  const int n = static_cast<int>(w.size());
  std::vector<std::int32_t> codes(static_cast<std::size_t>(n + 1) * (n + 1), -1);
  for (int i = 0; i <= n; ++i) codes[i * (n + 1) + i] = static_cast<std::int32_t>(carrier.unit().index);
  Word sub;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      sub.assign(w.begin() + i, w.begin() + j);
      const std::optional<Element> value = common_product(carrier, sub, bound);
      if (value) {
        codes[i * (n + 1) + j] = static_cast<std::int32_t>(value->index);
        codes[j * (n + 1) + i] = static_cast<std::int32_t>(dagger[value->index].index);
      }
    }
  }
  return codes;
}

// Entrywise action along f over a precomputed matrix; nullopt when the
// needed edge is incoherent.
inline std::optional<Word> act_codes(std::span<const std::int32_t> codes, int n,
                                     const SimplexMap& f) {
  Word out;
  out.reserve(static_cast<std::size_t>(f.source_dim));
  for (int p = 1; p <= f.source_dim; ++p) {
    const std::int32_t code = codes[static_cast<std::size_t>(f(p - 1)) * (n + 1) + f(p)];
    if (code < 0) return std::nullopt;
    out.push_back(Element{static_cast<std::uint32_t>(code)});
  }
  return out;
}

}  // namespace pgroup::detail
