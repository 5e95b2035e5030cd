#include "realclass/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "realclass/errors.hpp"
#include "realclass/parser.hpp"

namespace realclass::cli {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotIsolated: return kNotIsolated;
    case ErrorKind::NotInM2: return kNotInM2;
    case ErrorKind::NotSimple:
    case ErrorKind::CorankTooLarge: return kNotSimple;
    case ErrorKind::Internal: return kInternal;
  }
  return kInternal;
}

std::string quote_field(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

Record process(std::string_view text, const std::vector<std::string>& vars) {
  Record r;
  r.input = std::string(text);
  auto fail = [&](std::string status, std::string message, int code) {
    r.status = std::move(status);
    r.message = std::move(message);
    r.exit_code = code;
  };
  try {
    const Poly f = parse_poly(text, vars);
    r.report = classify(f);
  } catch (const ParseError& e) {
    fail("parse-error", e.what(), kParseError);
  } catch (const ClassificationError& e) {
    fail(to_string(e.kind()), e.what(), exit_code_for(e.kind()));
  } catch (const std::exception& e) {
    fail("internal-error", e.what(), kInternal);
  }
  return r;
}

std::vector<std::string> read_batch(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    lines.push_back(std::move(t));
  }
  return lines;
}

std::vector<Record> process_batch(const std::vector<std::string>& lines,
                                  const std::vector<std::string>& vars) {
  std::vector<Record> out(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < lines.size();) out[i] = process(lines[i], vars);
  };
  const std::size_t n = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1,
                                                std::max<std::size_t>(lines.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::string format_text(const Record& r, bool steps) {
  std::ostringstream os;
  if (!r.report) {
    os << "error(" << r.status << ") message=" << quote_field(r.message)
       << " input=" << quote_field(r.input);
    return os.str();
  }
  const Report& rep = *r.report;
  os << std::left << std::setw(4) << to_string(rep.real_type) << " mu=" << rep.mu
     << " corank=" << rep.corank << " inertia=" << rep.inertia
     << " determinacy=" << rep.determinacy << " residual=" << quote_field(to_string(rep.residual))
     << " normal_form=" << quote_field(to_string(rep.normal_form)) << " input=" << quote_field(r.input);
  if (steps)
    for (const Step& s : rep.change_log) os << "\n  step " << s.label << ": " << to_string(s.change);
  return os.str();
}

nlohmann::ordered_json to_json(const Record& r, bool steps) {
  nlohmann::ordered_json j;
  j["input"] = r.input;
  j["status"] = r.status;
  if (r.report) {
    const Report& rep = *r.report;
    j["type"] = to_string(rep.real_type);
    j["mu"] = rep.mu;
    j["corank"] = rep.corank;
    j["inertia_index"] = rep.inertia;
    j["determinacy"] = rep.determinacy;
    j["residual"] = to_string(rep.residual);
    j["normal_form"] = to_string(rep.normal_form);
    j["message"] = nullptr;
  } else {
    for (const char* key : {"type", "mu", "corank", "inertia_index", "determinacy", "residual",
                            "normal_form"})
      j[key] = nullptr;
    j["message"] = r.message;
  }
  if (steps) {
    j["steps"] = nlohmann::ordered_json::array();
    if (r.report)
      for (const Step& s : r.report->change_log)
        j["steps"].push_back({{"label", s.label}, {"change", to_string(s.change)}});
  }
  return j;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify real simple singularities over Q (A_k, D_k, E6, E7, E8)."};
  app.name(argc > 0 ? argv[0] : "realclassify");
  std::string vars_text, format = "text", batch_path, expression;
  bool steps = false;
  app.add_option("--vars", vars_text, "comma-separated variable list, e.g. x,y,z")->required();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--batch", batch_path, "file with one expression per line ('-' for stdin)");
  app.add_flag("--steps", steps, "include the coordinate changes applied");
  app.add_option("expression", expression, "polynomial, e.g. \"x^2*y - y^4\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kParseError;
  }
  if (batch_path.empty() == expression.empty()) {
    err << "error: give exactly one of an expression or --batch\n";
    return kParseError;
  }

  std::vector<std::string> vars;
  try {
    vars = parse_variable_list(vars_text);
  } catch (const std::exception& e) {
    err << "error: --vars: " << e.what() << '\n';
    return kParseError;
  }

  const bool json = format == "json";
  if (expression.size()) {
    const Record r = process(expression, vars);
    if (json)
      out << to_json(r, steps).dump(2) << '\n';
    else
      out << format_text(r, steps) << '\n';
    return r.exit_code;
  }

  std::vector<std::string> lines;
  if (batch_path == "-") {
    lines = read_batch(std::cin);
  } else {
    std::ifstream in(batch_path);
    if (!in) {
      err << "error: cannot open " << batch_path << '\n';
      return kParseError;
    }
    lines = read_batch(in);
  }
  const std::vector<Record> records = process_batch(lines, vars);
  int code = kOk;
  for (const Record& r : records)
    if (code == kOk) code = r.exit_code;
  if (json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Record& r : records) arr.push_back(to_json(r, steps));
    out << arr.dump(2) << '\n';
  } else {
    for (const Record& r : records) out << format_text(r, steps) << '\n';
  }
  return code;
}

}  // namespace realclass::cli
