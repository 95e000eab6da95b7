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


// Stable models over a fixed finite universe, found by search on the
// grounding and confirmed by an exact minimality check.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folf/oracle.hpp"
#include "folf/program.hpp"

namespace folf {

struct StableLimits {
  std::size_t max_atoms = 256;
  std::size_t max_loops = 2000;  // loop formulas used for pruning only
};

/// Every interpretation with universe {0..size-1} and the given constant map
/// that satisfies SM[f], sorted.
std::vector<Interpretation> stable_models(const Formula& f, const Signature& sig, int size,
                                          const std::map<std::string, int>& constants, const StableLimits& limits = {});

/// Herbrand stable models over the constants of the input plus `extra`.
std::vector<Interpretation> answer_sets(const Formula& f, const std::set<std::string>& extra = {},
                                        const StableLimits& limits = {});
std::vector<Interpretation> answer_sets(const Program& p, const std::set<std::string>& extra = {},
                                        const StableLimits& limits = {});

struct SizeVerdict {
  int size = 0;
  bool entailed = true;
  std::size_t stable_models = 0;
  std::optional<Interpretation> counter_model;
};

/// Bounded check, not a proof.
struct EntailmentReport {
  std::vector<SizeVerdict> sizes;
  bool entailed() const;
};

EntailmentReport entails_sm(const Formula& gamma, const Formula& query, int max_universe,
                            const StableLimits& limits = {});
EntailmentReport entails_sm(const Program& gamma, const Formula& query, int max_universe,
                            const StableLimits& limits = {});

/// Ground atoms of an interpretation, e.g. "{p(0), q(1)}"; constants naming an
/// element are used instead of the number when `names` is set.
std::string to_string(const Interpretation& i, bool names = true);

}  // namespace folf
