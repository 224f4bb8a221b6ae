#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "pgroup/enumerate.hpp"
#include "pgroup/magma.hpp"
#include "pgroup/symset.hpp"

namespace pgroup {

// Serialization keeps a fixed key order and sorted entries, so equal
// values produce byte-identical documents. Products implied by the unit
// laws are omitted on write and restored on read; explicit unit-row
// entries in a document are kept as written.

std::string to_json(const PartialMagma& P, int indent = 2);
PartialMagma magma_from_json(std::string_view text);

std::string to_json(const TruncatedPartialGroup& X, int indent = 2);
TruncatedPartialGroup tpg_from_json(std::string_view text, int bound = kMaxTruncation);

enum class DocKind { magma, truncated_partial_group };
// A document with an "N" key is a truncated structure, else a magma.
DocKind detect_kind(std::string_view text);

PartialMagma load_magma(const std::filesystem::path& path);
TruncatedPartialGroup load_tpg(const std::filesystem::path& path, int bound = kMaxTruncation);
DocKind detect_kind_file(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

// FNV-1a over the exact document bytes; the manifest stores these so a
// modified atlas entry is caught on load.
std::uint64_t fnv1a(std::string_view bytes);

// Directory layout: manifest.json plus one magma document per entry.
void write_atlas(const Atlas& atlas, const std::filesystem::path& dir);
// Reverifies every content hash and re-runs the inversion search; any
// mismatch is a structural_error.
Atlas read_atlas(const std::filesystem::path& dir);

}  // namespace pgroup
