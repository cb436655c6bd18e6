#include "fintop/report.hpp"

#include <sstream>

#include <json.hpp>

#include "fintop/error.hpp"

namespace fintop {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped_budget: return "skipped-budget";
  }
  return "?";
}

std::size_t SuiteReport::passed() const {
  std::size_t c = 0;
  for (const auto& r : records) c += r.status == CheckStatus::pass;
  return c;
}

std::size_t SuiteReport::failed() const {
  std::size_t c = 0;
  for (const auto& r : records) c += r.status == CheckStatus::fail;
  return c;
}

std::size_t SuiteReport::skipped() const {
  std::size_t c = 0;
  for (const auto& r : records) c += r.status == CheckStatus::skipped_budget;
  return c;
}

std::string escape_witness(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_witness(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      ++i;
      if (s[i] == 'n')
        out += '\n';
      else
        out += s[i];
    } else {
      out += s[i];
    }
  }
  return out;
}

std::string render_text(const SuiteReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite << "\n";
  for (const auto& rec : r.records) {
    out << "check id=" << rec.id << " params=" << rec.params << " status=" << status_name(rec.status);
    if (!rec.witness.empty()) out << " witness=\"" << escape_witness(rec.witness) << "\"";
    out << "\n";
  }
  out << "summary suite=" << r.suite << " pass=" << r.passed() << " fail=" << r.failed()
      << " skipped=" << r.skipped() << "\n";
  return out.str();
}

std::string render_records(const SuiteReport& r) {
  std::ostringstream out;
  for (const auto& rec : r.records) {
    nlohmann::json j{{"suite", r.suite},
                     {"id", rec.id},
                     {"params", rec.params},
                     {"status", status_name(rec.status)}};
    if (!rec.witness.empty()) j["witness"] = rec.witness;
    out << j.dump() << "\n";
  }
  nlohmann::json summary{{"suite", r.suite},
                         {"pass", r.passed()},
                         {"fail", r.failed()},
                         {"skipped", r.skipped()}};
  out << summary.dump() << "\n";
  return out.str();
}

std::string render(const SuiteReport& r, const std::string& format) {
  if (format == "text") return render_text(r);
  if (format == "records" || format == "json-like-records") return render_records(r);
  fail(Errc::invalid_argument, "unknown report format '" + format + "'");
}

}  // namespace fintop
