// Copyright 2026 The opmagic Authors
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

#ifndef OPMAGIC_CLI_H
#define OPMAGIC_CLI_H

// Batch front end. Every study is a subcommand writing one CSV or JSON record.
//
// The record header carries the tool version, the seed, the worker count, the
// resolved parameters and the argument vector (minus --out). Feeding that
// vector back into `run_cli` reproduces the data rows exactly.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace opmagic {

constexpr int EXIT_OK = 0;
constexpr int EXIT_BAD_INPUT = 1;
constexpr int EXIT_INTERNAL = 2;

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// The argument vector embedded in a CSV or JSON record produced by `run_cli`.
std::vector<std::string> replay_args(std::string_view record);

/// Data portion of a record: CSV rows (including the column line) or the JSON "rows" array.
std::string record_rows(std::string_view record);

}  // namespace opmagic

#endif
