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


#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "json.hpp"

#include "folf/folf.h"
#include "folf/grounder.hpp"
#include "folf/loops.hpp"
#include "folf/oracle.hpp"
#include "folf/parser.hpp"
#include "folf/program.hpp"
#include "folf/safety.hpp"
#include "folf/stable.hpp"
#include "folf/tptp.hpp"

using json = nlohmann::json;

struct folf_theory {
  bool is_program = false;
  folf::Program program;
  folf::Formula sentence;
  std::string source;
};

namespace {

thread_local std::string last_error;

folf_status status_of(folf::ErrorKind k) {
  using folf::ErrorKind;
  switch (k) {
    case ErrorKind::Syntax: return FOLF_E_SYNTAX;
    case ErrorKind::Arity: return FOLF_E_ARITY;
    case ErrorKind::Kind: return FOLF_E_KIND;
    case ErrorKind::Capture: return FOLF_E_CAPTURE;
    case ErrorKind::NotSentence: return FOLF_E_NOT_SENTENCE;
    case ErrorKind::EmptyUniverse: return FOLF_E_EMPTY_UNIVERSE;
    case ErrorKind::NotReducible: return FOLF_E_NOT_REDUCIBLE;
    case ErrorKind::NotFirstOrder: return FOLF_E_NOT_FIRST_ORDER;
    case ErrorKind::CapExceeded: return FOLF_E_CAP_EXCEEDED;
    case ErrorKind::Io: return FOLF_E_IO;
    case ErrorKind::Internal: return FOLF_E_INTERNAL;
  }
  return FOLF_E_INTERNAL;
}

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Fn>
folf_status guard(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return FOLF_OK;
  } catch (const folf::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const ArgumentError& e) {
    last_error = e.what();
    return FOLF_E_ARGUMENT;
  } catch (const json::exception& e) {
    last_error = std::string("bad JSON: ") + e.what();
    return FOLF_E_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FOLF_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FOLF_E_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) throw ArgumentError(std::string(what) + " is null");
}

std::set<std::string> constant_list(const char* csv) {
  std::set<std::string> out;
  if (!csv) return out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    auto e = item.find_last_not_of(" \t");
    std::string name = item.substr(b, e - b + 1);
    // Validate through the parser: a constant is a lowercase identifier.
    auto f = folf::parse_formula("p__(" + name + ")");
    if (!folf::is_sentence(f)) throw ArgumentError("not a constant: " + name);
    out.insert(name);
  }
  return out;
}

// Program loops are computed on the program normal form, as in reduce().
folf::Program loop_program(const folf::Program& p) {
  return p.kind() != folf::RuleKind::Extended && !folf::is_normal_form(p) ? folf::program_normal_form(p) : p;
}

folf::Formula parse_query(const char* query) {
  need(query, "query");
  auto q = folf::parse_formula(query);
  if (!folf::is_sentence(q)) throw folf::Error(folf::ErrorKind::NotSentence, "query has free variables");
  return q;
}

folf::Interpretation read_interpretation(const folf_theory& t, const std::string& text, folf::Signature& sig) {
  json j = json::parse(text);
  sig = folf::joint_signature(t.sentence);
  if (j.contains("atoms")) {
    std::vector<folf::Formula> atoms;
    for (const auto& a : j.at("atoms")) {
      auto f = folf::parse_formula(a.get<std::string>());
      if (f.op() != folf::Op::Pred || !folf::is_sentence(f))
        throw ArgumentError("not a ground atom: " + a.get<std::string>());
      atoms.push_back(f);
      folf::merge_signature(sig, folf::signature_of(f));
    }
    return folf::herbrand(sig, atoms);
  }
  folf::Interpretation i;
  i.size = j.at("size").get<int>();
  if (i.size < 1) throw ArgumentError("size must be positive");
  if (j.contains("constants"))
    for (auto& [c, v] : j.at("constants").items()) {
      int e = v.get<int>();
      if (e < 0 || e >= i.size) throw ArgumentError("constant " + c + " outside the universe");
      i.constants[c] = e;
      sig.constants.insert(c);
    }
  for (const auto& c : sig.constants)
    if (!i.constants.count(c)) throw ArgumentError("no element for constant " + c);
  if (j.contains("relations"))
    for (auto& [p, tuples] : j.at("relations").items()) {
      for (const auto& tj : tuples) {
        auto tup = tj.get<std::vector<int>>();
        for (int e : tup)
          if (e < 0 || e >= i.size) throw ArgumentError("element outside the universe in " + p);
        auto it = sig.predicates.find(p);
        if (it == sig.predicates.end()) sig.predicates[p] = static_cast<int>(tup.size());
        else if (it->second != static_cast<int>(tup.size())) throw ArgumentError("arity mismatch for " + p);
        i.relations[p].insert(tup);
      }
    }
  return i;
}

folf::Reduction reduction_of(const folf_theory& t, int bound) {
  return t.is_program ? folf::reduce(t.program, bound) : folf::reduce(t.sentence, bound);
}

std::string export_text(const folf_theory& t, const char* query, int bound) {
  auto r = reduction_of(t, bound);
  folf::TptpProblem problem;
  std::size_t n = r.parts.size();
  std::size_t first_loop = r.path == folf::ReductionPath::Safety ? 2 : 1;
  problem.axioms.emplace_back("theory", r.parts.at(0));
  if (first_loop == 2 && n > 1) problem.axioms.emplace_back("domain", r.parts[1]);
  for (std::size_t k = first_loop; k < n; ++k)
    problem.axioms.emplace_back("loop" + std::to_string(k - first_loop + 1), r.parts[k]);
  if (query) problem.conjecture = parse_query(query);
  auto out = folf::export_tptp(problem);
  std::string header;
  for (const auto& [from, to] : out.symbols) header += "% symbol " + from + " -> " + to + "\n";
  return header + out.text;
}

}  // namespace

extern "C" {

const char* folf_version(void) { return "0.1.0"; }

const char* folf_status_name(folf_status s) {
  switch (s) {
    case FOLF_OK: return "ok";
    case FOLF_E_SYNTAX: return "syntax";
    case FOLF_E_ARITY: return "arity";
    case FOLF_E_KIND: return "kind";
    case FOLF_E_CAPTURE: return "capture";
    case FOLF_E_NOT_SENTENCE: return "not-sentence";
    case FOLF_E_EMPTY_UNIVERSE: return "empty-universe";
    case FOLF_E_NOT_REDUCIBLE: return "not-reducible";
    case FOLF_E_NOT_FIRST_ORDER: return "not-first-order";
    case FOLF_E_CAP_EXCEEDED: return "cap-exceeded";
    case FOLF_E_IO: return "io";
    case FOLF_E_INTERNAL: return "internal";
    case FOLF_E_ARGUMENT: return "argument";
  }
  return "unknown";
}

const char* folf_last_error(void) { return last_error.c_str(); }

void folf_string_free(char* s) { std::free(s); }

folf_status folf_theory_parse_program(const char* text, folf_theory** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = nullptr;
    auto t = std::make_unique<folf_theory>();
    t->is_program = true;
    t->program = folf::parse_program(text);
    t->sentence = folf::fol_representation(t->program);
    t->source = folf::to_string(t->program);
    *out = t.release();
  });
}

folf_status folf_theory_parse_formula(const char* text, folf_theory** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = nullptr;
    auto t = std::make_unique<folf_theory>();
    t->sentence = folf::parse_formula(text);
    if (!folf::is_sentence(t->sentence))
      throw folf::Error(folf::ErrorKind::NotSentence, "formula has free variables");
    t->source = folf::to_string(t->sentence);
    *out = t.release();
  });
}

void folf_theory_free(folf_theory* t) { delete t; }

folf_status folf_theory_text(const folf_theory* t, char** text) {
  return guard([&] {
    need(t, "theory");
    need(text, "text");
    *text = dup(t->source);
  });
}

folf_status folf_theory_sentence(const folf_theory* t, char** text) {
  return guard([&] {
    need(t, "theory");
    need(text, "text");
    *text = dup(folf::to_string(t->sentence));
  });
}

folf_status folf_theory_queries(const folf_theory* t, char** out) {
  return guard([&] {
    need(t, "theory");
    need(out, "json");
    json j = json::array();
    if (t->is_program)
      for (const auto& q : t->program.queries) j.push_back(folf::to_string(q));
    *out = dup(j.dump());
  });
}

folf_status folf_loops(const folf_theory* t, int bound, char** out) {
  return guard([&] {
    need(t, "theory");
    need(out, "json");
    if (bound < 1) throw ArgumentError("bound must be positive");
    folf::Program q;
    if (t->is_program) q = loop_program(t->program);
    auto report = t->is_program ? folf::complete_set(folf::LoopSubject::of(q), bound)
                                : folf::complete_set(folf::LoopSubject::of(t->sentence), bound);
    json j;
    j["status"] = folf::to_string(report.status);
    j["reason"] = report.reason;
    j["loops"] = json::array();
    for (const auto& y : report.loops) {
      auto lf = t->is_program ? folf::flf(q, y) : folf::flf(t->sentence, y);
      j["loops"].push_back({{"atoms", folf::to_string(y)}, {"formula", folf::to_string(lf)}});
    }
    *out = dup(j.dump());
  });
}

folf_status folf_safety(const folf_theory* t, char** out) {
  return guard([&] {
    need(t, "theory");
    need(out, "json");
    auto r = folf::unsafe_vars(t->sentence);
    json j;
    j["safe"] = r.safe();
    j["unsafe_variables"] = r.unsafe_variables;
    j["restricted"] = json::array();
    for (const auto& [g, vars] : r.annotations) j["restricted"].push_back({{"formula", g}, {"variables", vars}});
    *out = dup(j.dump());
  });
}

folf_status folf_reduce(const folf_theory* t, int bound, char** out) {
  return guard([&] {
    need(t, "theory");
    need(out, "json");
    if (bound < 1) throw ArgumentError("bound must be positive");
    auto r = reduction_of(*t, bound);
    json j;
    j["path"] = folf::to_string(r.path);
    j["loops"] = json::array();
    for (const auto& y : r.loops) j["loops"].push_back(folf::to_string(y));
    j["formula"] = folf::to_string(r.formula);
    *out = dup(j.dump());
  });
}

folf_status folf_ground(const folf_theory* t, const char* constants, char** text) {
  return guard([&] {
    need(t, "theory");
    need(text, "text");
    auto extra = constant_list(constants);
    *text = dup(t->is_program ? folf::to_string(folf::ground_program(t->program, extra))
                              : folf::to_string(folf::ground_sentence(t->sentence, extra)));
  });
}

folf_status folf_answer_sets(const folf_theory* t, const char* constants, char** out) {
  return guard([&] {
    need(t, "theory");
    need(out, "json");
    auto extra = constant_list(constants);
    auto models = t->is_program ? folf::answer_sets(t->program, extra) : folf::answer_sets(t->sentence, extra);
    json j;
    j["answer_sets"] = json::array();
    for (const auto& m : models) j["answer_sets"].push_back(folf::to_string(m));
    *out = dup(j.dump());
  });
}

folf_status folf_check_stable(const folf_theory* t, const char* interpretation, char** out) {
  return guard([&] {
    need(t, "theory");
    need(interpretation, "interpretation");
    need(out, "json");
    folf::Signature sig;
    auto i = read_interpretation(*t, interpretation, sig);
    bool model = folf::evaluate(t->sentence, i);
    bool stable = false;
    if (model) {
      auto target = folf::to_structure(i, sig);
      for (const auto& m : folf::stable_models(t->sentence, sig, i.size, i.constants))
        if (folf::to_structure(m, sig) == target) stable = true;
    }
    json j{{"model", model}, {"stable", stable}};
    *out = dup(j.dump());
  });
}

folf_status folf_entail(const folf_theory* t, const char* query, int max_universe, char** out) {
  return guard([&] {
    need(t, "theory");
    need(out, "json");
    if (max_universe < 1) throw ArgumentError("max_universe must be positive");
    auto q = parse_query(query);
    auto r = t->is_program ? folf::entails_sm(t->program, q, max_universe)
                           : folf::entails_sm(t->sentence, q, max_universe);
    json j;
    j["entailed"] = r.entailed();
    j["bounded"] = true;
    j["sizes"] = json::array();
    for (const auto& s : r.sizes) {
      json v{{"size", s.size}, {"entailed", s.entailed}, {"stable_models", s.stable_models}};
      v["counter_model"] = s.counter_model ? json(folf::to_string(*s.counter_model)) : json(nullptr);
      j["sizes"].push_back(v);
    }
    *out = dup(j.dump());
  });
}

folf_status folf_export_tptp(const folf_theory* t, const char* query, int bound, char** text) {
  return guard([&] {
    need(t, "theory");
    need(text, "text");
    if (bound < 1) throw ArgumentError("bound must be positive");
    *text = dup(export_text(*t, query, bound));
  });
}

folf_status folf_prove(const folf_theory* t, const char* query, int bound, const char* prover, int timeout_s,
                       char** out) {
  return guard([&] {
    need(t, "theory");
    need(prover, "prover");
    need(out, "json");
    if (bound < 1 || timeout_s < 1) throw ArgumentError("bound and timeout must be positive");
    auto run = folf::run_prover(export_text(*t, query, bound), prover, timeout_s);
    json j{{"status", folf::to_string(run.status)}, {"output", run.output}};
    *out = dup(j.dump());
  });
}

}  // extern "C"
