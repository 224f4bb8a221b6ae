#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace pgroup {

// Index into the ordered element list of the structure that owns it.
// Display names live on the owning structure.
struct Element {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

using Word = std::vector<Element>;

}  // namespace pgroup
