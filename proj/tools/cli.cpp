#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pgroup/enumerate.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/functors.hpp"
#include "pgroup/json_io.hpp"
#include "pgroup/magma.hpp"
#include "pgroup/symset.hpp"
#include "pgroup/words.hpp"

namespace pgroup::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Ctx {
  std::ostream& out;
  std::ostream& err;
  ReportFormat fmt = ReportFormat::text;
  int levels = kDefaultTruncation;
  int size = 3;
  int dim = 2;
  std::uint64_t seed = kDefaultSeed;
  bool unsafe = false;

  int bound() const { return unsafe ? kUnsafeTruncation : kMaxTruncation; }
  int word_cap() const {
    return std::min(levels, unsafe ? kUnsafeWordLength : kMaxWordLength);
  }
};

void require_levels(const Ctx& c) {
  if (c.levels < 2 || c.levels > c.bound()) {
    std::ostringstream msg;
    msg << "--levels must be between 2 and " << kMaxTruncation << " ("
        << kUnsafeTruncation << " with --unsafe-large)";
    throw precondition_error(msg.str());
  }
}

// Unordered inversion pairs over the non-unit elements; "a<->b" printed
// once per orbit, fixed points as "c<->c".
std::string dagger_pairs(const BinaryPartialGroup& G) {
  std::ostringstream out;
  bool first = true;
  for (std::uint32_t i = 0; i < G.size(); ++i) {
    if (Element{i} == G.unit()) continue;
    const Element d = G.dagger(Element{i});
    if (d.index < i) continue;
    if (!first) out << ", ";
    out << G.name(Element{i}) << "↔" << G.name(d);
    first = false;
  }
  if (first) out << "trivial";
  return out.str();
}

struct LoadedDoc {
  std::optional<PartialMagma> magma;
  std::optional<TruncatedPartialGroup> tpg;
};

LoadedDoc load_doc(const Ctx& c, const std::string& path, const char* what,
                   bool magma_ok = true, bool tpg_ok = true) {
  const std::string text = read_file(path);
  if (detect_kind(text) == DocKind::magma) {
    if (!magma_ok) {
      throw precondition_error(std::string(what) + " expects a truncated partial group document");
    }
    return {magma_from_json(text), std::nullopt};
  }
  if (!tpg_ok) {
    throw precondition_error(std::string(what) + " expects a partial magma document");
  }
  return {std::nullopt, tpg_from_json(text, c.bound())};
}

// Prints the failure report when the table admits no inversion.
std::optional<BinaryPartialGroup> require_group(Ctx& c, const PartialMagma& P) {
  DaggerSearch search = find_dagger(P);
  if (!search.group) {
    if (c.fmt == ReportFormat::text) c.out << "not a binary partial group\n";
    c.out << render(search.report, c.fmt);
  }
  return std::move(search.group);
}

int finish(Ctx& c, const ValidationReport& report) {
  c.out << render(report, c.fmt);
  return report.passed() ? 0 : 1;
}

int finish(Ctx& c, const FunctorReport& report) {
  c.out << render(report, c.fmt);
  return report.passed() ? 0 : 1;
}

int cmd_validate(Ctx& c, const std::string& file) {
  LoadedDoc doc = load_doc(c, file, "validate");
  if (doc.magma) {
    DaggerSearch search = find_dagger(*doc.magma);
    if (search.group) {
      search.report.note("dagger: " + dagger_pairs(*search.group));
      if (c.fmt == ReportFormat::text) {
        c.out << "binary partial group; dagger: " << dagger_pairs(*search.group) << "\n";
        return 0;
      }
      c.out << render(search.report, ReportFormat::json);
      return 0;
    }
    if (c.fmt == ReportFormat::text) c.out << "not a binary partial group\n";
    c.out << render(search.report, c.fmt);
    return 1;
  }
  const ValidationReport report = validate_partial_group(*doc.tpg);
  if (report.passed() && c.fmt == ReportFormat::text) {
    c.out << "truncated partial group through level " << doc.tpg->truncation() << ": valid\n";
    return 0;
  }
  return finish(c, report);
}

int cmd_dagger(Ctx& c, const std::string& file) {
  LoadedDoc doc = load_doc(c, file, "dagger", true, false);
  DaggerSearch search = find_dagger(*doc.magma);
  if (search.group) {
    search.report.note("dagger: " + dagger_pairs(*search.group));
    if (c.fmt == ReportFormat::text) {
      c.out << "dagger: " << dagger_pairs(*search.group) << "\n";
      return 0;
    }
    c.out << render(search.report, ReportFormat::json);
    return 0;
  }
  return finish(c, search.report);
}

int cmd_classify(Ctx& c) {
  const Atlas atlas = classify_bpgs(c.size, c.unsafe);
  if (c.fmt == ReportFormat::text) {
    c.out << "size " << atlas.size << ": " << atlas.candidates << " candidates, " << atlas.groups
          << " binary partial groups\n";
    for (std::size_t i = 0; i < atlas.entries.size(); ++i) {
      c.out << "  entry " << i << ": " << signature(atlas.entries[i].magma()) << "\n";
    }
    return 0;
  }
  ordered_json doc;
  doc["size"] = atlas.size;
  doc["candidates"] = atlas.candidates;
  doc["groups"] = atlas.groups;
  doc["entries"] = ordered_json::array();
  for (const auto& entry : atlas.entries) {
    doc["entries"].push_back(ordered_json::parse(to_json(entry.magma())));
  }
  c.out << doc.dump(2) << "\n";
  return 0;
}

int cmd_build_bp(Ctx& c, const std::string& file) {
  require_levels(c);
  LoadedDoc doc = load_doc(c, file, "build-bp", true, false);
  std::optional<BinaryPartialGroup> G = require_group(c, *doc.magma);
  if (!G) return 1;
  c.out << to_json(big_embed(*G, c.levels, c.bound()));
  return 0;
}

int cmd_skeleton(Ctx& c, const std::string& file) {
  LoadedDoc doc = load_doc(c, file, "skeleton", false, true);
  c.out << to_json(skeleton(*doc.tpg, c.dim));
  return 0;
}

int cmd_enumerate(Ctx& c, const std::string& predicate) {
  if (predicate.empty()) {
    std::uint64_t candidates = 0;
    enumerate_unital_partial_magmas(
        c.size,
        [&](const PartialMagma&) {
          ++candidates;
          return true;
        },
        c.unsafe);
    if (c.fmt == ReportFormat::text) {
      c.out << "size " << c.size << ": " << candidates << " unital partial magmas\n";
    } else {
      ordered_json doc;
      doc["size"] = c.size;
      doc["candidates"] = candidates;
      c.out << doc.dump(2) << "\n";
    }
    return 0;
  }
  require_levels(c);
  const WitnessResult w = find_witness(c.size, predicate, c.levels, c.unsafe);
  if (c.fmt == ReportFormat::text) {
    c.out << "predicate " << w.predicate << " over size " << c.size << ": "
          << (w.found ? "found" : "not found") << " (examined " << w.examined << ")\n";
    if (!w.details.empty()) c.out << "  " << w.details << "\n";
    if (w.structure) c.out << "  " << signature(*w.structure) << "\n";
  } else {
    ordered_json doc;
    doc["predicate"] = w.predicate;
    doc["size"] = c.size;
    doc["found"] = w.found;
    doc["examined"] = w.examined;
    doc["details"] = w.details;
    doc["structure"] =
        w.structure ? ordered_json::parse(to_json(*w.structure)) : ordered_json(nullptr);
    c.out << doc.dump(2) << "\n";
  }
  return 0;
}

int cmd_atlas(Ctx& c, const std::string& dir, bool write) {
  if (write) {
    const Atlas atlas = classify_bpgs(c.size, c.unsafe);
    write_atlas(atlas, dir);
    if (c.fmt == ReportFormat::text) {
      c.out << "atlas written: size " << atlas.size << ", " << atlas.candidates
            << " candidates, " << atlas.groups << " groups\n";
    } else {
      ordered_json doc;
      doc["size"] = atlas.size;
      doc["candidates"] = atlas.candidates;
      doc["groups"] = atlas.groups;
      doc["written"] = atlas.entries.size();
      c.out << doc.dump(2) << "\n";
    }
    return 0;
  }
  const Atlas atlas = read_atlas(dir);
  if (c.fmt == ReportFormat::text) {
    c.out << "atlas: size " << atlas.size << ", " << atlas.candidates << " candidates, "
          << atlas.groups << " groups, " << atlas.entries.size() << " entries verified\n";
    for (std::size_t i = 0; i < atlas.entries.size(); ++i) {
      c.out << "  entry " << i << ": " << signature(atlas.entries[i].magma()) << "\n";
    }
  } else {
    ordered_json doc;
    doc["size"] = atlas.size;
    doc["candidates"] = atlas.candidates;
    doc["groups"] = atlas.groups;
    doc["entries"] = atlas.entries.size();
    c.out << doc.dump(2) << "\n";
  }
  return 0;
}

int cmd_check(Ctx& c, const std::string& claim, const std::string& file,
              const std::string& file2) {
  require_levels(c);
  const bool pair_claim = claim == "fully-faithful";
  if (pair_claim && file2.empty()) {
    throw precondition_error("claim fully-faithful compares two structures; give two files");
  }
  if (!pair_claim && !file2.empty()) {
    throw precondition_error("claim " + claim + " takes a single file");
  }

  if (claim == "anti-auto") {
    LoadedDoc doc = load_doc(c, file, "check anti-auto", true, false);
    std::optional<BinaryPartialGroup> G = require_group(c, *doc.magma);
    if (!G) return 1;
    ValidationReport report = check_anti_automorphism(*G);
    report.merge(check_I2(*doc.magma, G->dagger_map()));
    return finish(c, report);
  }
  if (claim == "mirror") {
    LoadedDoc doc = load_doc(c, file, "check mirror", true, false);
    std::optional<BinaryPartialGroup> G = require_group(c, *doc.magma);
    if (!G) return 1;
    return finish(c, check_mirror_sweep(*G, c.word_cap()));
  }
  if (claim == "inversion-closure") {
    LoadedDoc doc = load_doc(c, file, "check inversion-closure", true, false);
    std::optional<BinaryPartialGroup> G = require_group(c, *doc.magma);
    if (!G) return 1;
    return finish(c, check_inversion_closure(*G, c.word_cap()));
  }
  if (claim == "main-theorem") {
    LoadedDoc doc = load_doc(c, file, "check main-theorem", true, false);
    std::optional<BinaryPartialGroup> G = require_group(c, *doc.magma);
    if (!G) return 1;
    return finish(c, check_main_theorem(*G, c.levels));
  }
  if (claim == "tb-id") {
    LoadedDoc doc = load_doc(c, file, "check tb-id", true, false);
    std::optional<BinaryPartialGroup> G = require_group(c, *doc.magma);
    if (!G) return 1;
    FunctorReport report;
    report.construction = "tb-identity";
    report.instances.push_back(signature(*doc.magma));
    report.instances.push_back("truncation " + std::to_string(c.levels));
    const TruncatedPartialGroup X = big_embed(*G, c.levels, c.bound());
    const BinaryPartialGroup TX = underlying_group(X);
    report.add("tb-identity", TX == *G,
               TX == *G ? "underlying group of the big embedding is the input itself"
                        : "tables or inversions differ");
    return finish(c, report);
  }
  if (claim == "eta") {
    LoadedDoc doc = load_doc(c, file, "check eta");
    if (doc.magma) {
      std::optional<BinaryPartialGroup> G = require_group(c, *doc.magma);
      if (!G) return 1;
      return finish(c, check_unit_eta(big_embed(*G, c.levels, c.bound()), c.seed));
    }
    return finish(c, check_unit_eta(*doc.tpg, c.seed));
  }
  if (claim == "triangles") {
    LoadedDoc doc = load_doc(c, file, "check triangles", true, false);
    std::optional<BinaryPartialGroup> G = require_group(c, *doc.magma);
    if (!G) return 1;
    return finish(c, check_triangle_identities(*G, c.levels, c.seed));
  }
  if (claim == "fully-faithful") {
    LoadedDoc doc1 = load_doc(c, file, "check fully-faithful", true, false);
    LoadedDoc doc2 = load_doc(c, file2, "check fully-faithful", true, false);
    std::optional<BinaryPartialGroup> G1 = require_group(c, *doc1.magma);
    if (!G1) return 1;
    std::optional<BinaryPartialGroup> G2 = require_group(c, *doc2.magma);
    if (!G2) return 1;
    return finish(c, check_fully_faithful(*G1, *G2, c.levels));
  }
  if (claim == "two-skeletal") {
    LoadedDoc doc = load_doc(c, file, "check two-skeletal");
    if (doc.magma) {
      std::optional<BinaryPartialGroup> G = require_group(c, *doc.magma);
      if (!G) return 1;
      return finish(c, check_2skeletal_equivalence(small_embed(*G, c.levels, c.bound())));
    }
    return finish(c, check_2skeletal_equivalence(*doc.tpg));
  }
  if (claim == "baer") {
    LoadedDoc doc = load_doc(c, file, "check baer", true, false);
    return finish(c, check_baer_criterion(*doc.magma));
  }
  if (claim == "final-remark") {
    LoadedDoc doc = load_doc(c, file, "check final-remark");
    if (doc.magma) {
      std::optional<BinaryPartialGroup> G = require_group(c, *doc.magma);
      if (!G) return 1;
      return finish(c, check_final_remark(*doc.magma, big_embed(*G, c.levels, c.bound())));
    }
    const BinaryPartialGroup G = underlying_group(*doc.tpg);
    return finish(c, check_final_remark(G.magma(), *doc.tpg));
  }
  throw precondition_error("unknown claim " + claim);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Ctx ctx{out, err};
  std::string format = "text";
  std::string file;
  std::string file2;
  std::string claim;
  std::string predicate;
  std::string dir;
  bool size_given = false;

  CLI::App app{"workbench for finite binary partial groups and their symmetric-set embeddings"};
  app.name("pgroup");
  app.require_subcommand(0, 1);
  app.fallthrough();
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--levels", ctx.levels, "truncation level / word length ceiling")
      ->capture_default_str();
  app.add_option("--seed", ctx.seed, "seed for sampled spot-checks")->capture_default_str();
  app.add_flag("--unsafe-large", ctx.unsafe,
               "allow size-5 enumeration and truncation levels up to 10");

  const std::vector<std::string> claims = {
      "anti-auto",    "mirror",    "inversion-closure", "main-theorem",
      "tb-id",        "eta",       "triangles",         "fully-faithful",
      "two-skeletal", "baer",      "final-remark"};

  CLI::App* validate = app.add_subcommand("validate", "validate a structure document");
  validate->add_option("file", file, "input document")->required();

  CLI::App* dagger = app.add_subcommand("dagger", "search a partial magma for its inversion");
  dagger->add_option("file", file, "partial magma document")->required();

  CLI::App* classify = app.add_subcommand("classify", "catalog binary partial groups of one size");
  classify->add_option("--size", ctx.size, "carrier size")->capture_default_str();

  CLI::App* build_bp = app.add_subcommand("build-bp", "construct the big embedding");
  build_bp->add_option("file", file, "partial magma document")->required();

  CLI::App* skeleton_cmd = app.add_subcommand("skeleton", "skeleton of a truncated document");
  skeleton_cmd->add_option("file", file, "truncated partial group document")->required();
  skeleton_cmd->add_option("--dim", ctx.dim, "levels kept before regeneration")
      ->capture_default_str();

  CLI::App* check = app.add_subcommand("check", "verify one claim on concrete structures");
  check->add_option("claim", claim, "claim identifier")
      ->required()
      ->check(CLI::IsMember(claims));
  check->add_option("file", file, "input document")->required();
  check->add_option("file2", file2, "second input (fully-faithful only)");

  CLI::App* enumerate = app.add_subcommand("enumerate", "sweep all unital partial magmas");
  enumerate->add_option("--size", ctx.size, "carrier size")->capture_default_str();
  enumerate->add_option("--predicate", predicate, "witness predicate to search for")
      ->check(CLI::IsMember(witness_predicates()));

  CLI::App* atlas = app.add_subcommand("atlas", "write or inspect a persisted atlas");
  atlas->add_option("dir", dir, "atlas directory")->required();
  atlas->add_option("--size", ctx.size, "carrier size; writes a fresh atlas when given")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  ctx.fmt = format == "json" ? ReportFormat::json : ReportFormat::text;
  if (atlas->parsed()) size_given = atlas->count("--size") > 0;

  try {
    if (validate->parsed()) return cmd_validate(ctx, file);
    if (dagger->parsed()) return cmd_dagger(ctx, file);
    if (classify->parsed()) return cmd_classify(ctx);
    if (build_bp->parsed()) return cmd_build_bp(ctx, file);
    if (skeleton_cmd->parsed()) return cmd_skeleton(ctx, file);
    if (check->parsed()) return cmd_check(ctx, claim, file, file2);
    if (enumerate->parsed()) return cmd_enumerate(ctx, predicate);
    if (atlas->parsed()) return cmd_atlas(ctx, dir, size_given);
    err << "usage error: a command is required; see --help\n";
    return 2;
  } catch (const resource_limit_error& e) {
    err << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const integrity_error& e) {
    err << "integrity error: " << e.what() << "\n";
    return 2;
  } catch (const structural_error& e) {
    err << "structural error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pgroup::cli
