#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oscroll::cli {

enum class Status { pass, fail, info };
std::string to_string(Status s);

enum class Format { table, json, tsv };

// One result row. `check` says where the value comes from or how it was
// checked (e.g. "computed", "certified rank", "STATED, expected 4").
struct Record {
  std::string subject;
  std::string operation;
  std::string value;
  std::string check;
  Status status = Status::info;
};

struct Report {
  std::string command;
  std::string input_digest;  // hex SHA-256
  std::optional<std::uint64_t> seed;
  std::vector<Record> records;

  void add(std::string subject, std::string operation, std::string value, std::string check,
           Status status = Status::info) {
    records.push_back({std::move(subject), std::move(operation), std::move(value), std::move(check), status});
  }
  bool any_failed() const;
};

inline constexpr const char* kReportSchema = "oscroll-report/1";

std::string sha256_hex(const std::string& bytes);
std::string render(const Report& r, Format f);

}  // namespace oscroll::cli
