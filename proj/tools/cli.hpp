// Copyright 2026 The dyckcluster Authors.
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

#ifndef DYCKCLUSTER_TOOLS_CLI_HPP_
#define DYCKCLUSTER_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "dyckcluster/dyckcluster.hpp"
#include "json.hpp"

namespace dyckcluster::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kGuardExceeded = 3,
};

inline constexpr const char* kMaxObjectsEnv = "DYCKCLUSTER_MAX_OBJECTS";

// Runs one command line (without the program name). Output goes to `out`
// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

Json polynomial_to_json(const LaurentPoly& p);
LaurentPoly polynomial_from_json(const Json& j);
Json quantum_to_json(const QuantumElement& x);
QuantumElement quantum_from_json(const Json& j);
Json collection_to_json(const ColoredCollection& beta);
Json pair_to_json(const EdgePair& pair);
Json bijection_report_to_json(const BijectionReport& report);

}  // namespace dyckcluster::cli

#endif  // DYCKCLUSTER_TOOLS_CLI_HPP_
