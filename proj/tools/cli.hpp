/*
 * Copyright 2026 The brauer Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brauer::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,    // unreadable/unwritable file, malformed export
  kUsage = 2,      // bad flags or parameters
  kCheckFailed = 3 // equivariance or dimension assertion failed
};

/// Environment variable naming the default directory for written exports.
inline constexpr const char* kOutDirEnv = "BRAUER_OUT_DIR";

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brauer::cli
