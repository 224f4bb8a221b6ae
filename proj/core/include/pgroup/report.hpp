#pragma once

#include <string>
#include <vector>

namespace pgroup {

// One concrete axiom failure. expected/found are rendered values so a
// report stays readable without the structure at hand.
struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
  std::string expected;
  std::string found;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Validators collect every violation they find rather than failing fast;
// the verdict is pass exactly when the list is empty. vacuous marks a
// conditional check whose hypothesis did not hold.
struct ValidationReport {
  std::vector<Violation> violations;
  bool vacuous = false;
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }

  void add(std::string axiom, std::vector<std::string> witness,
           std::string expected, std::string found);
  void note(std::string text);
  void merge(const ValidationReport& other, const std::string& axiom_prefix = "");
};

struct FunctorCheck {
  std::string claim;
  bool passed = false;
  std::string witness;  // failure detail, or context worth keeping on a pass

  friend bool operator==(const FunctorCheck&, const FunctorCheck&) = default;
};

// Outcome of checking a functorial construction on concrete instances.
struct FunctorReport {
  std::string construction;
  std::vector<std::string> instances;
  std::vector<FunctorCheck> checks;

  bool passed() const;
  void add(std::string claim, bool ok, std::string witness = "");
};

enum class ReportFormat { text, json };

std::string render(const ValidationReport& report, ReportFormat format);
std::string render(const FunctorReport& report, ReportFormat format);

}  // namespace pgroup
