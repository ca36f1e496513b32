// Copyright 2026 The sunitary Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sunitary::cli {

enum ExitCode : int {
  kVerdictTrue = 0,
  kVerdictFalse = 1,
  kUsageError = 2,
};

struct CommandInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> operations;  // library operations this command exposes
};

/// Every subcommand, in help order.
const std::vector<CommandInfo>& command_table();

/// Runs the tool on `args` (program name excluded). The report goes to `out`,
/// diagnostics to `err`. Returns 0 (true/success), 1 (false) or 2 (error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sunitary::cli
