//
// Copyright 2026 The bias-kit Authors
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
//

#ifndef BIASKIT_CLI_H_
#define BIASKIT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace biaskit {

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitInternalError = 2 };

// Bundled data directory: $BIAS_KIT_DATA if set, else the install-time path.
std::string DataDir();

// Runs one `bias_kit` invocation. `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace biaskit

#endif  // BIASKIT_CLI_H_
