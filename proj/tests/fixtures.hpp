#pragma once

#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pgroup/magma.hpp"

namespace pgroup::testing {

// find_dagger must succeed on these; failure is a broken fixture.
inline BinaryPartialGroup group_of(const PartialMagma& P) {
  DaggerSearch search = find_dagger(P);
  if (!search.group) throw std::logic_error("fixture is not a binary partial group");
  return std::move(*search.group);
}

// {1, a} with aa = a: unital, a has no inversion image.
inline PartialMagma idempotent_pair() {
  std::vector<std::optional<Element>> table(4);
  table[0] = Element{0};
  table[1] = Element{1};
  table[2] = Element{1};
  table[3] = Element{1};
  return PartialMagma({"1", "a"}, Element{0}, std::move(table));
}

// {1, a, b} with aa = b, ba = a, ab undefined: (aa)a = a defined while
// a(aa) is not, so A3 fails at (a, a, a). Not a binary partial group.
inline PartialMagma a3_violator() {
  std::vector<std::optional<Element>> table(9);
  auto set = [&](std::uint32_t i, std::uint32_t j, std::uint32_t v) {
    table[i * 3 + j] = Element{v};
  };
  set(0, 0, 0);
  set(0, 1, 1);
  set(0, 2, 2);
  set(1, 0, 1);
  set(2, 0, 2);
  set(1, 1, 2);
  set(2, 1, 1);
  return PartialMagma({"1", "a", "b"}, Element{0}, std::move(table));
}

// {1, a, b} with aa = bb = 1 and mixed products undefined: two copies of
// the two-element group glued at the unit.
inline PartialMagma double_z2() {
  std::vector<std::optional<Element>> table(9);
  auto set = [&](std::uint32_t i, std::uint32_t j, std::uint32_t v) {
    table[i * 3 + j] = Element{v};
  };
  set(0, 0, 0);
  set(0, 1, 1);
  set(0, 2, 2);
  set(1, 0, 1);
  set(2, 0, 2);
  set(1, 1, 0);
  set(2, 2, 0);
  return PartialMagma({"1", "a", "b"}, Element{0}, std::move(table));
}

// {1, a, b, c}: the cyclic group of order three on {1, a, b} with an
// extra self-inverse element c, mixed products undefined.
inline PartialMagma z3_z2_wedge() {
  std::vector<std::optional<Element>> table(16);
  auto set = [&](std::uint32_t i, std::uint32_t j, std::uint32_t v) {
    table[i * 4 + j] = Element{v};
  };
  for (std::uint32_t i = 0; i < 4; ++i) {
    set(0, i, i);
    set(i, 0, i);
  }
  set(1, 1, 2);
  set(1, 2, 0);
  set(2, 1, 0);
  set(2, 2, 1);
  set(3, 3, 0);
  return PartialMagma({"1", "a", "b", "c"}, Element{0}, std::move(table));
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::mt19937_64 rng(std::random_device{}());
    path = std::filesystem::temp_directory_path() /
           ("pgroup_test_" + std::to_string(rng()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
};

}  // namespace pgroup::testing
