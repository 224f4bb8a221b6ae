#include "pgroup/json_io.hpp"

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "pgroup/errors.hpp"
#include "pgroup/words.hpp"

namespace pgroup {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse_document(std::string_view text) {
  try {
    ordered_json doc = ordered_json::parse(text);
    if (!doc.is_object()) throw structural_error("document is not a JSON object");
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw structural_error(std::string("invalid JSON: ") + e.what());
  }
}

std::uint32_t resolve_name(const PartialMagma& P, const std::string& name,
                           const char* context) {
  const std::optional<Element> e = P.find(name);
  if (!e) {
    throw structural_error(std::string("unknown element name in ") + context + ": " + name);
  }
  return e->index;
}

ordered_json magma_doc(const PartialMagma& P) {
  ordered_json doc;
  doc["elements"] = ordered_json::array();
  for (const std::string& n : P.names()) doc["elements"].push_back(n);
  doc["unit"] = P.name(P.unit());
  doc["products"] = ordered_json::array();
  const std::uint32_t k = static_cast<std::uint32_t>(P.size());
  const std::uint32_t u = P.unit().index;
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = 0; j < k; ++j) {
      const auto v = P.product(Element{i}, Element{j});
      if (!v) continue;
      // Unit products implied by the unit laws stay implicit.
      if (i == u && v->index == j) continue;
      if (j == u && v->index == i) continue;
      doc["products"].push_back(ordered_json::array(
          {P.name(Element{i}), P.name(Element{j}), P.name(*v)}));
    }
  }
  return doc;
}

PartialMagma magma_from_doc(const ordered_json& doc) {
  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    throw structural_error("missing or malformed \"elements\"");
  }
  std::vector<std::string> names;
  for (const auto& n : doc["elements"]) {
    if (!n.is_string()) throw structural_error("element names must be strings");
    names.push_back(n.get<std::string>());
  }
  if (!doc.contains("unit") || !doc["unit"].is_string()) {
    throw structural_error("missing or malformed \"unit\"");
  }
  const std::string unit_name = doc["unit"].get<std::string>();
  const std::size_t k = names.size();
  std::size_t unit_index = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (names[i] == unit_name) {
      unit_index = i;
      break;
    }
  }
  if (unit_index == k) throw structural_error("unit \"" + unit_name + "\" is not an element");
  // Start from the implied unit products, then lay explicit entries over
  // them; duplicates among the explicit entries are rejected.
  std::vector<std::optional<Element>> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    table[unit_index * k + i] = Element{static_cast<std::uint32_t>(i)};
    table[i * k + unit_index] = Element{static_cast<std::uint32_t>(i)};
  }
  PartialMagma skeleton_magma(names, Element{static_cast<std::uint32_t>(unit_index)},
                              std::vector<std::optional<Element>>(table));
  if (doc.contains("products")) {
    if (!doc["products"].is_array()) throw structural_error("\"products\" must be an array");
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto& entry : doc["products"]) {
      if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() ||
          !entry[1].is_string() || !entry[2].is_string()) {
        throw structural_error("product entries must be [left, right, value] name triples");
      }
      const std::uint32_t l = resolve_name(skeleton_magma, entry[0].get<std::string>(), "products");
      const std::uint32_t r = resolve_name(skeleton_magma, entry[1].get<std::string>(), "products");
      const std::uint32_t v = resolve_name(skeleton_magma, entry[2].get<std::string>(), "products");
      if (!seen.insert({l, r}).second) {
        throw structural_error("duplicate product entry for (" + entry[0].get<std::string>() +
                               ", " + entry[1].get<std::string>() + ")");
      }
      table[l * k + r] = Element{v};
    }
  }
  return PartialMagma(std::move(names), Element{static_cast<std::uint32_t>(unit_index)},
                      std::move(table));
}

}  // namespace

std::string to_json(const PartialMagma& P, int indent) {
  return magma_doc(P).dump(indent) + "\n";
}

PartialMagma magma_from_json(std::string_view text) {
  return magma_from_doc(parse_document(text));
}

std::string to_json(const TruncatedPartialGroup& X, int indent) {
  ordered_json doc;
  doc["N"] = X.truncation();
  doc["carrier"] = magma_doc(X.carrier());
  doc["dagger"] = ordered_json::array();
  const PartialMagma& M = X.carrier();
  for (std::uint32_t i = 0; i < M.size(); ++i) {
    doc["dagger"].push_back(
        ordered_json::array({M.name(Element{i}), M.name(X.dagger(Element{i}))}));
  }
  doc["levels"] = ordered_json::object();
  for (int n = 2; n <= X.truncation(); ++n) {
    ordered_json level = ordered_json::array();
    for (const Word& w : X.level(n)) {
      ordered_json jw = ordered_json::array();
      for (const Element e : w) jw.push_back(M.name(e));
      level.push_back(jw);
    }
    doc["levels"][std::to_string(n)] = level;
  }
  return doc.dump(indent) + "\n";
}

TruncatedPartialGroup tpg_from_json(std::string_view text, int bound) {
  const ordered_json doc = parse_document(text);
  if (!doc.contains("N") || !doc["N"].is_number_integer()) {
    throw structural_error("missing or malformed \"N\"");
  }
  const int truncation = doc["N"].get<int>();
  if (truncation < 2) throw structural_error("truncation level must be at least 2");
  if (!doc.contains("carrier") || !doc["carrier"].is_object()) {
    throw structural_error("missing or malformed \"carrier\"");
  }
  const PartialMagma carrier = magma_from_doc(doc["carrier"]);
  const std::size_t k = carrier.size();
  if (!doc.contains("dagger") || !doc["dagger"].is_array()) {
    throw structural_error("missing or malformed \"dagger\"");
  }
  std::vector<Element> dagger(k);
  std::vector<bool> assigned(k, false);
  for (const auto& pair : doc["dagger"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      throw structural_error("inversion entries must be [element, image] name pairs");
    }
    const std::uint32_t a = resolve_name(carrier, pair[0].get<std::string>(), "dagger");
    const std::uint32_t img = resolve_name(carrier, pair[1].get<std::string>(), "dagger");
    if (assigned[a]) {
      throw structural_error("duplicate inversion entry for " + pair[0].get<std::string>());
    }
    assigned[a] = true;
    dagger[a] = Element{img};
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!assigned[i]) {
      throw structural_error("inversion image missing for " + carrier.name(Element{static_cast<std::uint32_t>(i)}));
    }
  }
  std::vector<std::vector<Word>> levels(static_cast<std::size_t>(truncation) - 1);
  if (doc.contains("levels")) {
    if (!doc["levels"].is_object()) throw structural_error("\"levels\" must be an object");
    for (const auto& [key, value] : doc["levels"].items()) {
      int n = 0;
      try {
        std::size_t pos = 0;
        n = std::stoi(key, &pos);
        if (pos != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw structural_error("level keys must be integers, got \"" + key + "\"");
      }
      if (n < 2 || n > truncation) {
        throw structural_error("level key " + key + " outside 2..N");
      }
      if (!value.is_array()) throw structural_error("level " + key + " must be an array");
      std::vector<Word>& level = levels[static_cast<std::size_t>(n) - 2];
      for (const auto& jw : value) {
        if (!jw.is_array()) throw structural_error("simplices must be arrays of element names");
        Word w;
        for (const auto& jn : jw) {
          if (!jn.is_string()) throw structural_error("simplices must be arrays of element names");
          w.push_back(Element{resolve_name(carrier, jn.get<std::string>(), "levels")});
        }
        if (w.size() != static_cast<std::size_t>(n)) {
          throw structural_error("level " + key + " contains a word of length " +
                                 std::to_string(w.size()));
        }
        level.push_back(std::move(w));
      }
    }
  }
  return TruncatedPartialGroup(truncation, carrier, std::move(dagger), std::move(levels), bound);
}

DocKind detect_kind(std::string_view text) {
  const ordered_json doc = parse_document(text);
  return doc.contains("N") ? DocKind::truncated_partial_group : DocKind::magma;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw structural_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw structural_error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw structural_error("write failed for " + path.string());
}

PartialMagma load_magma(const std::filesystem::path& path) {
  return magma_from_json(read_file(path));
}

TruncatedPartialGroup load_tpg(const std::filesystem::path& path, int bound) {
  return tpg_from_json(read_file(path), bound);
}

DocKind detect_kind_file(const std::filesystem::path& path) {
  return detect_kind(read_file(path));
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (const char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ull;
  }
  return hash;
}

namespace {

std::string hash_string(std::uint64_t value) {
  std::ostringstream out;
  out << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << value;
  return out.str();
}

std::string entry_file_name(std::size_t index, std::size_t total) {
  std::size_t width = 3;
  for (std::size_t bound = 1000; total > bound; bound *= 10) ++width;
  std::ostringstream out;
  out << "bpg_" << std::setw(static_cast<int>(width)) << std::setfill('0') << index << ".json";
  return out.str();
}

}  // namespace

void write_atlas(const Atlas& atlas, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  ordered_json manifest;
  manifest["format"] = "pgroup-atlas";
  manifest["size"] = atlas.size;
  manifest["candidates"] = atlas.candidates;
  manifest["groups"] = atlas.groups;
  manifest["entries"] = ordered_json::array();
  for (std::size_t i = 0; i < atlas.entries.size(); ++i) {
    const std::string file = entry_file_name(i, atlas.entries.size());
    const std::string text = to_json(atlas.entries[i].magma());
    write_file(dir / file, text);
    ordered_json entry;
    entry["file"] = file;
    entry["hash"] = hash_string(fnv1a(text));
    manifest["entries"].push_back(entry);
  }
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

Atlas read_atlas(const std::filesystem::path& dir) {
  const ordered_json manifest = parse_document(read_file(dir / "manifest.json"));
  if (!manifest.contains("format") || manifest["format"] != "pgroup-atlas") {
    throw structural_error("not an atlas manifest: " + (dir / "manifest.json").string());
  }
  Atlas atlas;
  if (!manifest.contains("size") || !manifest["size"].is_number_integer()) {
    throw structural_error("manifest missing \"size\"");
  }
  atlas.size = manifest["size"].get<int>();
  atlas.candidates = manifest.value("candidates", std::uint64_t{0});
  atlas.groups = manifest.value("groups", std::uint64_t{0});
  if (!manifest.contains("entries") || !manifest["entries"].is_array()) {
    throw structural_error("manifest missing \"entries\"");
  }
  for (const auto& entry : manifest["entries"]) {
    if (!entry.is_object() || !entry.contains("file") || !entry.contains("hash")) {
      throw structural_error("malformed manifest entry");
    }
    const std::string file = entry["file"].get<std::string>();
    const std::string text = read_file(dir / file);
    if (hash_string(fnv1a(text)) != entry["hash"].get<std::string>()) {
      throw structural_error("content hash mismatch for " + (dir / file).string());
    }
    const PartialMagma magma = magma_from_json(text);
    DaggerSearch search = find_dagger(magma);
    if (!search.group) {
      throw structural_error("atlas entry " + file + " is not a binary partial group");
    }
    atlas.entries.push_back(std::move(*search.group));
  }
  return atlas;
}

}  // namespace pgroup
