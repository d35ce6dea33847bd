// Copyright 2026 The UniDim Authors.
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

// Command-line front end: convert, stats, synth, train, transfer, ablate,
// predict-dims.

#ifndef UNIDIM_CLI_H_
#define UNIDIM_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace unidim {

inline constexpr char kOutputRootEnv[] = "UNIDIM_OUTPUT_ROOT";
inline constexpr char kSeedEnv[] = "UNIDIM_SEED";
inline constexpr char kDeviceEnv[] = "UNIDIM_DEVICE";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;

// Runs one invocation. args[0] is the program name. Errors are printed to
// err as a single line "error[E_CODE]: message".
int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err);

}  // namespace unidim

#endif  // UNIDIM_CLI_H_
