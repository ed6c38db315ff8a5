#include "cwidth/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cwidth/common.hpp"

namespace cwidth {

const char* to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::Eq: return "eq";
    case CheckKind::Le: return "le";
    case CheckKind::Ge: return "ge";
  }
  return "eq";
}

double ReportEntry::slack() const {
  switch (kind) {
    case CheckKind::Eq: return tolerance - std::abs(computed - reference);
    case CheckKind::Le: return reference + tolerance - computed;
    case CheckKind::Ge: return computed - (reference - tolerance);
  }
  return 0.0;
}

const ReportEntry& VerificationReport::add(std::string name, double computed, double reference,
                                           double tolerance, CheckKind kind) {
  ReportEntry e{std::move(name), computed, reference, tolerance, kind, false};
  e.pass = std::isfinite(computed) && e.slack() >= 0.0;
  entries_.push_back(std::move(e));
  return entries_.back();
}

const ReportEntry& VerificationReport::add_flag(std::string name, bool ok) {
  return add(std::move(name), ok ? 1.0 : 0.0, 1.0, 0.0, CheckKind::Eq);
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
  for (const auto& e : other.entries()) {
    entries_.push_back(e);
    entries_.back().name = prefix + e.name;
  }
}

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const ReportEntry& e) { return !e.pass; }));
}

const ReportEntry* VerificationReport::find(const std::string& name) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const ReportEntry& e) { return e.name == name; });
  return it == entries_.end() ? nullptr : &*it;
}

namespace {

double round10(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(fmt10(v).c_str(), nullptr);
}

std::vector<ReportEntry> sorted(const std::vector<ReportEntry>& entries) {
  auto out = entries;
  std::stable_sort(out.begin(), out.end(),
                   [](const ReportEntry& a, const ReportEntry& b) { return a.name < b.name; });
  return out;
}

}  // namespace

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : sorted(entries_)) {
    nlohmann::ordered_json row;
    row["name"] = e.name;
    row["computed"] = round10(e.computed);
    row["reference"] = round10(e.reference);
    row["tolerance"] = round10(e.tolerance);
    row["kind"] = to_string(e.kind);
    row["pass"] = e.pass;
    j["entries"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& e : sorted(entries_)) {
    os << (e.pass ? "PASS " : "FAIL ") << e.name << "  computed=" << fmt10(e.computed)
       << " reference=" << fmt10(e.reference) << " tol=" << fmt10(e.tolerance) << " ["
       << to_string(e.kind) << "]\n";
  }
  os << suite_ << ": " << (entries_.size() - failures()) << "/" << entries_.size() << " passed\n";
  return os.str();
}

}  // namespace cwidth
