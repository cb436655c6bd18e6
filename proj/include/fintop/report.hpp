#ifndef FINTOP_REPORT_HPP
#define FINTOP_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace fintop {

enum class CheckStatus { pass, fail, skipped_budget };

const char* status_name(CheckStatus s);

struct CheckRecord {
  std::string id;
  std::string params;
  CheckStatus status = CheckStatus::pass;
  std::string witness;  // replayable DSL text for failures
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> records;

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  bool all_passed() const { return failed() == 0; }
};

// Stable text layout, one record per line:
//   suite <name>
//   check id=<id> params=<params> status=<status>[ witness="<escaped>"]
//   summary suite=<name> pass=<n> fail=<n> skipped=<n>
std::string render_text(const SuiteReport& r);

// One JSON object per line carrying the same fields.
std::string render_records(const SuiteReport& r);

// format: "text" or "records"
std::string render(const SuiteReport& r, const std::string& format);

std::string escape_witness(const std::string& s);
std::string unescape_witness(const std::string& s);

}  // namespace fintop

#endif
