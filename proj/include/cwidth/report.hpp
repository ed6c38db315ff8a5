#pragma once

#include <string>
#include <vector>

namespace cwidth {

// How an entry compares its computed value against the reference.
//   Eq: |computed - reference| <= tolerance
//   Le: computed <= reference + tolerance
//   Ge: computed >= reference - tolerance
enum class CheckKind { Eq, Le, Ge };

const char* to_string(CheckKind kind);

struct ReportEntry {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  CheckKind kind = CheckKind::Eq;
  bool pass = false;

  // Signed margin: nonnegative exactly when the entry passes.
  double slack() const;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<ReportEntry>& entries() const { return entries_; }

  const ReportEntry& add(std::string name, double computed, double reference, double tolerance,
                         CheckKind kind = CheckKind::Eq);
  // Boolean checks are stored as eq entries of 1 vs 1 (or 0 vs 1).
  const ReportEntry& add_flag(std::string name, bool ok);
  void append(const VerificationReport& other, const std::string& prefix = {});

  bool all_passed() const;
  std::size_t failures() const;
  const ReportEntry* find(const std::string& name) const;

  // Entries sorted by name; numbers rounded to 10 significant digits.
  std::string to_json() const;
  std::string to_text() const;

 private:
  std::string suite_;
  std::vector<ReportEntry> entries_;
};

}  // namespace cwidth
