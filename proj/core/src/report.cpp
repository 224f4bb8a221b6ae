#include "pgroup/report.hpp"

#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

namespace pgroup {

using ordered_json = nlohmann::ordered_json;

void ValidationReport::add(std::string axiom, std::vector<std::string> witness,
                           std::string expected, std::string found) {
  violations.push_back({std::move(axiom), std::move(witness), std::move(expected),
                        std::move(found)});
}

void ValidationReport::note(std::string text) { notes.push_back(std::move(text)); }

void ValidationReport::merge(const ValidationReport& other, const std::string& axiom_prefix) {
  for (const Violation& v : other.violations) {
    violations.push_back({axiom_prefix + v.axiom, v.witness, v.expected, v.found});
  }
  for (const std::string& n : other.notes) notes.push_back(n);
}

bool FunctorReport::passed() const {
  for (const FunctorCheck& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

void FunctorReport::add(std::string claim, bool ok, std::string witness) {
  checks.push_back({std::move(claim), ok, std::move(witness)});
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ", ";
    out << parts[i];
  }
  return out.str();
}

std::string violation_line(const Violation& v) {
  std::ostringstream out;
  out << "VIOLATION " << v.axiom << " witness=(" << join(v.witness) << ")";
  if (!v.expected.empty() || !v.found.empty()) {
    out << " expected=" << v.expected << " found=" << v.found;
  }
  return out.str();
}

}  // namespace

std::string render(const ValidationReport& report, ReportFormat format) {
  if (format == ReportFormat::text) {
    std::ostringstream out;
    if (report.passed()) {
      out << "PASS (0 violations)";
      if (report.vacuous) out << " [vacuous]";
      out << "\n";
    } else {
      out << "FAIL (" << report.violations.size() << " violation"
          << (report.violations.size() == 1 ? "" : "s") << ")\n";
      for (const Violation& v : report.violations) out << "  " << violation_line(v) << "\n";
    }
    for (const std::string& n : report.notes) out << "  NOTE " << n << "\n";
    return out.str();
  }
  ordered_json doc;
  doc["verdict"] = report.passed() ? "pass" : "fail";
  doc["vacuous"] = report.vacuous;
  doc["violations"] = ordered_json::array();
  for (const Violation& v : report.violations) {
    ordered_json jv;
    jv["axiom"] = v.axiom;
    jv["witness"] = v.witness;
    jv["expected"] = v.expected;
    jv["found"] = v.found;
    doc["violations"].push_back(jv);
  }
  doc["notes"] = report.notes;
  return doc.dump(2) + "\n";
}

std::string render(const FunctorReport& report, ReportFormat format) {
  if (format == ReportFormat::text) {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const FunctorCheck& c : report.checks) {
      if (!c.passed) ++failed;
    }
    if (failed == 0) {
      out << "PASS " << report.construction << " (" << report.checks.size() << " check"
          << (report.checks.size() == 1 ? "" : "s") << ")\n";
    } else {
      out << "FAIL " << report.construction << " (" << failed << "/" << report.checks.size()
          << " checks failed)\n";
    }
    for (const std::string& inst : report.instances) out << "  instance " << inst << "\n";
    for (const FunctorCheck& c : report.checks) {
      out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.claim;
      if (!c.witness.empty()) out << " :: " << c.witness;
      out << "\n";
    }
    return out.str();
  }
  ordered_json doc;
  doc["construction"] = report.construction;
  doc["verdict"] = report.passed() ? "pass" : "fail";
  doc["instances"] = report.instances;
  doc["checks"] = ordered_json::array();
  for (const FunctorCheck& c : report.checks) {
    ordered_json jc;
    jc["claim"] = c.claim;
    jc["verdict"] = c.passed ? "pass" : "fail";
    jc["witness"] = c.witness;
    doc["checks"].push_back(jc);
  }
  return doc.dump(2) + "\n";
}

}  // namespace pgroup
