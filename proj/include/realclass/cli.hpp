#pragma once

// Command-line driver: parse, classify, print as text or JSON, batch mode.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "realclass/classify.hpp"

namespace realclass::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParseError = 2,
  kNotIsolated = 3,
  kNotSimple = 4,  // also corank >= 3
  kNotInM2 = 5,
};

struct Record {
  std::string input;
  std::string status = "ok";  // ok | parse-error | not-isolated | ...
  std::string message;
  int exit_code = kOk;
  std::optional<Report> report;
};

// Never throws for bad input; failures land in status/message/exit_code.
Record process(std::string_view text, const std::vector<std::string>& vars);

// Non-blank lines that do not start with '#', surrounding whitespace trimmed.
std::vector<std::string> read_batch(std::istream& in);

// Classifies every line; results come back in input order.
std::vector<Record> process_batch(const std::vector<std::string>& lines,
                                  const std::vector<std::string>& vars);

std::string format_text(const Record& r, bool steps);
nlohmann::ordered_json to_json(const Record& r, bool steps);

// argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace realclass::cli
