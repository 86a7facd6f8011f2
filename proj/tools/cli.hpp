// Copyright 2026 The qsk Authors
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

#ifndef QSK_TOOLS_CLI_HPP
#define QSK_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qsk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitDomain = 3;

inline constexpr const char* kSchemaVersion = "1";

/// Runs one `qsk` invocation. `args` excludes the program name. Results go
/// to `out` unless an output file is named; diagnostics go to `err`.
/// Returns 0 on success, 2 on input or validation errors and 3 on domain
/// errors (singular parameters, unphysical states).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsk::cli

#endif  // QSK_TOOLS_CLI_HPP
