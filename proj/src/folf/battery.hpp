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


// Loop-formula batteries: finite-universe checks of the characterizations
// of stable models by first-order and propositional loop formulas.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "folf/oracle.hpp"
#include "folf/program.hpp"

namespace folf {

enum class BatteryMode {
  AllSets,      // every atom set up to renaming, within per-predicate size bounds (tiny inputs)
  Loops,        // first-order loops: a complete set, or bounded loops for unary signatures
  SizeIndexed,  // one set per nonempty predicate subset, sized |I|^arity
};

/// True when i satisfies every loop formula of f selected by `mode`.
bool check_flf_battery(const Formula& f, const Interpretation& i, BatteryMode mode);

struct Prop1Row {
  std::string model;   // the Herbrand model, as ground atoms
  bool a, b, c, d, e;  // answer set / all FLFs / loop FLFs / all ground LFs / ground loop LFs
};

struct Prop1Report {
  std::size_t models = 0;
  std::vector<Prop1Row> disagreements;
  std::size_t ground_loops = 0;
  bool ok() const { return disagreements.empty(); }
};

/// Evaluates conditions (a)-(e) on every Herbrand model of a small
/// nondisjunctive program in normal form.
Prop1Report prop1_harness(const Program& p, const std::set<std::string>& extra = {});

}  // namespace folf
