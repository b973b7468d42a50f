#pragma once

#include <optional>
#include <string>
#include <vector>

#include "io.hpp"

namespace ainf::cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<int> cap;            // overrides the document caps
  std::optional<std::string> name;   // restrict to one entity
  std::optional<std::string> to;     // base-change target ring
  std::vector<std::string> at;       // evaluation point for base-change
};

const std::vector<std::string>& command_names();
std::string command_summary(const std::string& command);

// Reports in a fixed order: entities in file order, checks in a fixed
// sequence per entity. Throws UsageError on unknown commands or flags that
// do not apply.
std::vector<CheckReport> run(const std::string& command, const io::SpecDocument& doc, const Options& opts);

enum ExitCode { Ok = 0, Failed = 1, Usage = 2, Undecided = 3 };

ExitCode exit_code(const std::vector<CheckReport>& reports, bool strict);

std::string format_json(const std::vector<CheckReport>& reports);
std::string format_text(const std::vector<CheckReport>& reports);

}  // namespace ainf::cli
