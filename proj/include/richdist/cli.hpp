// Copyright 2026 The richdist Authors.
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

#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "richdist/constructions.hpp"

namespace richdist {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// A figure configuration and the claim its caption makes.
struct FigureClaim {
  int figure;
  int theorem;
  long n;
  long m;
  std::size_t classes;
  std::size_t multiplicity;
};

const std::array<FigureClaim, 4>& figure_claims();

struct FigureResult {
  FigureClaim claim;
  Construction construction;
  Verdict verdict;
  bool pass = false;
  std::string svg;
};

/// Builds every figure configuration and checks its caption exactly.
std::vector<FigureResult> reproduce_figures();

/// Runs the `richdist` command line. Subcommands: generate, verify,
/// spectrum, svg, oracle, reproduce-figures.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace richdist
