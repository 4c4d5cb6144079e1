// Copyright 2026 The icoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace icoq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

using Cell = std::variant<double, std::uint64_t, std::string>;

/// Column-ordered result table; the column list is the output schema.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// JSON-only fields appended to every object (e.g. the RNG identifier).
  std::vector<std::pair<std::string, std::string>> json_extras;
};

/// %.12g, the serialization used for every floating-point cell.
std::string format_number(double v);

void write_csv(const Table& t, std::ostream& os);
void write_json(const Table& t, std::ostream& os);

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icoq::cli
