// Copyright 2026 The Paradise Authors.
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

#ifndef PARADISE_CLI_H_
#define PARADISE_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace paradise::cli {

enum ExitCode { kOk = 0, kDataError = 1, kUsageError = 2 };

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

}  // namespace paradise::cli

#endif  // PARADISE_CLI_H_
