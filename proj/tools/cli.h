/* Copyright 2026 The Pavelka Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// The pavelka command line, as a library so that tests can drive it without
// spawning processes.

#ifndef PAVELKA_TOOLS_CLI_H_
#define PAVELKA_TOOLS_CLI_H_

#include <string>
#include <vector>

namespace pavelka::cli {

// Exit codes.
enum class Status {
  kOk = 0,
  kRefuted = 1,      // invalid proof, violated model, bound not met
  kInputError = 2,   // parse errors, unreadable files, unbound atoms
  kUnsupported = 3,  // construct outside the supported fragment
  kLimit = 4,        // resource limit exceeded
  kInfeasible = 5,   // theory has no model
};

struct CommandResult {
  Status status = Status::kOk;
  std::string out;  // key=value records
  std::string err;  // human-readable report
  int exit_code() const { return static_cast<int>(status); }
};

// argv[0] is the program name.
CommandResult Run(const std::vector<std::string>& argv);

}  // namespace pavelka::cli

#endif  // PAVELKA_TOOLS_CLI_H_
