// Copyright 2026 The divkit Authors
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

#ifndef DIVKIT_CLI_HPP_
#define DIVKIT_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace divkit::cli {

// Entry point of the `divkit` tool with injected streams. `args` excludes
// the program name. Returns 0 on success, 2 on a usage error, and 1 on
// domain/capacity/numeric/sampling errors (reported as one-line JSON on the
// error stream).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace divkit::cli

#endif  // DIVKIT_CLI_HPP_
