//   Copyright 2026 The Wirtinger Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "wirtinger/core.hpp"

namespace wirtinger::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNumeric = 2 };

/// Malformed matrix file; `line()` is 1-based.
class CsvError : public ConfigError {
 public:
  CsvError(const std::string& source, std::size_t line, const std::string& what)
      : ConfigError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// One matrix row per line, comma-separated complex literals, no header.
/// Blank lines are skipped.
Tensor read_matrix_csv(std::istream& in, const std::string& source = "<input>");
Tensor read_matrix_csv_file(const std::string& path);

/// Runs the `wirt` command line (arguments exclude the program name) and
/// returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wirtinger::cli
