/*
Copyright 2026 The folf Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/


// TPTP FOF export and an external prover hook.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folf/formula.hpp"

namespace folf {

struct TptpProblem {
  std::vector<std::pair<std::string, Formula>> axioms;  // empty names become ax1, ax2, ..
  std::optional<Formula> conjecture;
};

struct TptpExport {
  std::string text;
  std::map<std::string, std::string> symbols;  // source name -> TPTP name, when they differ
};

/// Throws NotFirstOrder for second-order content and NotSentence for open
/// formulas.
TptpExport export_tptp(const TptpProblem& problem);

/// Single formula in FOF syntax, names mangled through `symbols`.
std::string to_tptp(const Formula& f, const std::map<std::string, std::string>& symbols = {});

enum class SzsStatus { Theorem, CounterSatisfiable, Timeout, Unknown, Unavailable };
const char* to_string(SzsStatus s);

/// Reads the first "SZS status" line. Unsatisfiable counts as Theorem and
/// Satisfiable as CounterSatisfiable.
SzsStatus parse_szs(const std::string& output);

struct ProverRun {
  SzsStatus status = SzsStatus::Unknown;
  std::string output;
};

/// Writes `problem` to a temporary file, runs `command` through /bin/sh with
/// {file} replaced by its path, and kills it after `timeout_s` seconds.
ProverRun run_prover(const std::string& problem, const std::string& command, int timeout_s);

}  // namespace folf
