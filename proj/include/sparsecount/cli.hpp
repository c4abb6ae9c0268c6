// Copyright 2026 The sparsecount Authors
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

// Command-line front end.
//
//   count-hom <host> <pattern> [--t N] [--exact-fallback] [--threads N]
//   count-sub <host> <pattern> [--exact-fallback] [--threads N]
//   analyze <pattern> [--t N] [--witnesses N]
//   gen subdiv|subdiv2 <graph> --t N  |  gen degen --n N --c C --seed S
//   gen gnp --n N --p P --seed S
//   verify <host> <pattern> [--sub]  |  verify --random N [--seed S]
//   bench <pattern> --sizes m1,m2,... [--c C] [--seed S]
//
// --json (before the subcommand) switches every report to JSON.
// Exit codes: 0 ok, 1 verify mismatch, 2 usage or input error,
// 3 no width-1 decomposition (extension dumped to stderr), 4 other failure.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sparsecount {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNoWidth1 = 3;
inline constexpr int kExitFailure = 4;

/// args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace sparsecount
