// Copyright 2026 The uniwkb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNIWKB_TOOLS_CLI_HPP_
#define UNIWKB_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace uniwkb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitTableMismatch = 1;
inline constexpr int kExitSolverFailure = 2;
inline constexpr int kExitUsage = 64;

/// Runs the command line in-process; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int count = 0;
};

/// Parses "min:max:count". Throws std::invalid_argument on malformed input.
GridSpec parse_grid(const std::string& text);
std::vector<double> expand_grid(const GridSpec& g);

/// Shortest decimal string that reads back to the same double.
std::string format_double(double v);

}  // namespace uniwkb::cli

#endif  // UNIWKB_TOOLS_CLI_HPP_
