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

#include <fstream>
#include <istream>
#include <string>

#include "wirtinger/cli.hpp"

namespace wirtinger::cli {

Tensor read_matrix_csv(std::istream& in, const std::string& source) {
  std::vector<std::vector<Complex>> rows;
  std::string line;
  std::size_t lineno = 0;
  std::size_t first_line = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    std::vector<Complex> row;
    std::size_t start = 0;
    for (std::size_t column = 1;; ++column) {
      const std::size_t comma = line.find(',', start);
      const std::string field = line.substr(start, comma == std::string::npos ? comma : comma - start);
      try {
        row.push_back(parse_complex(field));
      } catch (const ConfigError& e) {
        throw CsvError(source, lineno, "column " + std::to_string(column) + ": " + e.what());
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw CsvError(source, lineno,
                     "expected " + std::to_string(rows.front().size()) + " values (as on line " +
                         std::to_string(first_line) + "), got " + std::to_string(row.size()));
    }
    if (rows.empty()) first_line = lineno;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw CsvError(source, lineno == 0 ? 1 : lineno, "no matrix rows");

  const Index m = static_cast<Index>(rows.size());
  const Index n = static_cast<Index>(rows.front().size());
  Tensor::Storage a(m, n);
  for (Index r = 0; r < m; ++r) {
    for (Index c = 0; c < n; ++c) a(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return Tensor::matrix(a);
}

Tensor read_matrix_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open matrix file '" + path + "'");
  return read_matrix_csv(in, path);
}

}  // namespace wirtinger::cli
