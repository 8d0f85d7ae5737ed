#include "report.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace oscroll::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::info:
      return "info";
  }
  return "?";
}

bool Report::any_failed() const {
  return std::any_of(records.begin(), records.end(), [](const Record& r) { return r.status == Status::fail; });
}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

namespace {

std::string tsv_cell(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::string render_table(const Report& r) {
  const std::array<std::string, 5> head{"subject", "operation", "value", "check", "status"};
  std::array<std::size_t, 5> width{};
  for (std::size_t i = 0; i < 5; ++i) width[i] = head[i].size();
  auto cells = [](const Record& rec) {
    return std::array<std::string, 5>{rec.subject, rec.operation, rec.value, rec.check, to_string(rec.status)};
  };
  for (const auto& rec : r.records) {
    const auto c = cells(rec);
    for (std::size_t i = 0; i < 5; ++i) width[i] = std::max(width[i], c[i].size());
  }
  std::ostringstream os;
  os << "# " << r.command;
  if (r.seed) os << "  (seed " << *r.seed << ")";
  os << "\n";
  auto line = [&](const std::array<std::string, 5>& c) {
    for (std::size_t i = 0; i < 5; ++i) {
      os << c[i];
      if (i + 1 < 5) os << std::string(width[i] - c[i].size() + 2, ' ');
    }
    os << "\n";
  };
  line(head);
  std::array<std::string, 5> rule;
  for (std::size_t i = 0; i < 5; ++i) rule[i] = std::string(width[i], '-');
  line(rule);
  for (const auto& rec : r.records) line(cells(rec));
  return os.str();
}

}  // namespace

std::string render(const Report& r, Format f) {
  if (f == Format::table) return render_table(r);
  if (f == Format::tsv) {
    std::ostringstream os;
    os << "subject\toperation\tvalue\tcheck\tstatus\n";
    for (const auto& rec : r.records)
      os << tsv_cell(rec.subject) << '\t' << tsv_cell(rec.operation) << '\t' << tsv_cell(rec.value) << '\t'
         << tsv_cell(rec.check) << '\t' << to_string(rec.status) << '\n';
    return os.str();
  }
  nlohmann::ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["tool_version"] = OSCROLL_VERSION;
  doc["command"] = r.command;
  doc["input_digest"] = r.input_digest;
  doc["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
  auto& recs = doc["records"] = nlohmann::ordered_json::array();
  for (const auto& rec : r.records)
    recs.push_back({{"subject", rec.subject},
                    {"operation", rec.operation},
                    {"value", rec.value},
                    {"check", rec.check},
                    {"status", to_string(rec.status)}});
  doc["summary"] = {{"records", r.records.size()}, {"failed", r.any_failed()}};
  return doc.dump(2) + "\n";
}

}  // namespace oscroll::cli
