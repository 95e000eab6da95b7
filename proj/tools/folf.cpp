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


// folf command-line driver. Talks to the library only through folf.h.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "folf/folf.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kNo = 1, kNotReducible = 2, kUsage = 3, kProver = 4 };

struct Failure {
  int code;
  std::string message;
};

struct Options {
  std::string file;
  bool formula = false;
  bool as_json = false;
  bool dump_ground = false;
  int bound = 6;
  int max_universe = 3;
  int timeout = 60;
  std::string constants;
  std::vector<std::string> queries;
  std::string prover;
  std::string interpretation;
  std::string atoms;
  std::string output;
};

void check(folf_status s) {
  if (s == FOLF_OK) return;
  int code = s == FOLF_E_NOT_REDUCIBLE ? kNotReducible : kUsage;
  throw Failure{code, std::string(folf_status_name(s)) + ": " + folf_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  folf_string_free(s);
  return out;
}

using TheoryPtr = std::unique_ptr<folf_theory, decltype(&folf_theory_free)>;

TheoryPtr load(const Options& o) {
  std::string text;
  if (o.file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.file, std::ios::binary);
    if (!in) throw Failure{kUsage, "cannot read " + o.file};
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  folf_theory* t = nullptr;
  check(o.formula ? folf_theory_parse_formula(text.c_str(), &t) : folf_theory_parse_program(text.c_str(), &t));
  return TheoryPtr(t, folf_theory_free);
}

const char* constants_arg(const Options& o) { return o.constants.empty() ? nullptr : o.constants.c_str(); }

// Queries from the command line, else those declared in the file.
std::vector<std::string> queries_of(const Options& o, const folf_theory* t) {
  if (!o.queries.empty()) return o.queries;
  char* out = nullptr;
  check(folf_theory_queries(t, &out));
  return json::parse(take(out)).get<std::vector<std::string>>();
}

void dump_ground(const Options& o, const folf_theory* t) {
  if (!o.dump_ground) return;
  char* out = nullptr;
  check(folf_ground(t, constants_arg(o), &out));
  std::cerr << take(out) << "\n";
}

int cmd_loops(const Options& o) {
  auto t = load(o);
  char* out = nullptr;
  check(folf_loops(t.get(), o.bound, &out));
  json j = json::parse(take(out));
  if (o.as_json) {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "status: " << j["status"].get<std::string>();
  if (!j["reason"].get<std::string>().empty()) std::cout << " (" << j["reason"].get<std::string>() << ")";
  std::cout << "\n";
  for (const auto& l : j["loops"])
    std::cout << l["atoms"].get<std::string>() << "\n  " << l["formula"].get<std::string>() << "\n";
  return kOk;
}

int cmd_safety(const Options& o) {
  auto t = load(o);
  char* out = nullptr;
  check(folf_safety(t.get(), &out));
  json j = json::parse(take(out));
  if (o.as_json) {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << (j["safe"].get<bool>() ? "safe" : "unsafe");
  if (!j["unsafe_variables"].empty()) {
    std::cout << ": {";
    const char* sep = "";
    for (const auto& v : j["unsafe_variables"]) std::cout << std::exchange(sep, ", ") << v.get<std::string>();
    std::cout << "}";
  }
  std::cout << "\n";
  for (const auto& r : j["restricted"]) {
    std::cout << "  RV(" << r["formula"].get<std::string>() << ") = {";
    const char* sep = "";
    for (const auto& v : r["variables"]) std::cout << std::exchange(sep, ", ") << v.get<std::string>();
    std::cout << "}\n";
  }
  return kOk;
}

int cmd_reduce(const Options& o) {
  auto t = load(o);
  char* out = nullptr;
  folf_status s = folf_reduce(t.get(), o.bound, &out);
  if (s == FOLF_E_NOT_REDUCIBLE && o.as_json) {
    std::cout << json{{"reducible", false}, {"reason", folf_last_error()}}.dump(2) << "\n";
    return kNotReducible;
  }
  check(s);
  json j = json::parse(take(out));
  if (o.as_json) {
    j["reducible"] = true;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "% path: " << j["path"].get<std::string>() << ", " << j["loops"].size() << " loops\n";
  std::cout << j["formula"].get<std::string>() << "\n";
  return kOk;
}

int cmd_ground(const Options& o) {
  auto t = load(o);
  char* out = nullptr;
  check(folf_ground(t.get(), constants_arg(o), &out));
  std::cout << take(out) << "\n";
  return kOk;
}

int cmd_answersets(const Options& o) {
  auto t = load(o);
  dump_ground(o, t.get());
  char* out = nullptr;
  check(folf_answer_sets(t.get(), constants_arg(o), &out));
  json j = json::parse(take(out));
  if (o.as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& a : j["answer_sets"]) std::cout << a.get<std::string>() << "\n";
    if (j["answer_sets"].empty()) std::cout << "no answer sets\n";
  }
  return kOk;
}

int cmd_check_stable(const Options& o) {
  auto t = load(o);
  std::string interp = o.interpretation;
  if (interp.empty()) {
    // "p(a), q(b)" as a list of ground atoms; split at top-level commas.
    json atoms = json::array();
    std::string cur;
    int depth = 0;
    for (char c : o.atoms) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        atoms.push_back(cur);
        cur.clear();
      } else if (c != '{' && c != '}') {
        cur += c;
      }
    }
    if (cur.find_first_not_of(" \t") != std::string::npos) atoms.push_back(cur);
    interp = json{{"atoms", atoms}}.dump();
  }
  char* out = nullptr;
  check(folf_check_stable(t.get(), interp.c_str(), &out));
  json j = json::parse(take(out));
  if (o.as_json) std::cout << j.dump(2) << "\n";
  else std::cout << (j["stable"].get<bool>() ? "stable" : j["model"].get<bool>() ? "model, not stable" : "not a model")
                 << "\n";
  return j["stable"].get<bool>() ? kOk : kNo;
}

int cmd_entail(const Options& o) {
  auto t = load(o);
  dump_ground(o, t.get());
  auto qs = queries_of(o, t.get());
  if (qs.empty()) throw Failure{kUsage, "no query: pass --query or add a #query directive"};
  bool all = true;
  json reports = json::array();
  for (const auto& q : qs) {
    char* out = nullptr;
    check(folf_entail(t.get(), q.c_str(), o.max_universe, &out));
    json j = json::parse(take(out));
    j["query"] = q;
    all = all && j["entailed"].get<bool>();
    if (o.as_json) {
      reports.push_back(j);
      continue;
    }
    std::cout << q << ": " << (j["entailed"].get<bool>() ? "entailed" : "not entailed") << " (universes up to "
              << o.max_universe << ")\n";
    for (const auto& s : j["sizes"])
      if (!s["counter_model"].is_null())
        std::cout << "  counter-model of size " << s["size"] << ": " << s["counter_model"].get<std::string>() << "\n";
  }
  if (o.as_json) std::cout << reports.dump(2) << "\n";
  return all ? kOk : kNo;
}

std::optional<std::string> single_query(const Options& o, const folf_theory* t) {
  auto qs = queries_of(o, t);
  if (qs.size() > 1) throw Failure{kUsage, "export-tptp and prove take one query"};
  if (qs.empty()) return std::nullopt;
  return qs[0];
}

int cmd_export(const Options& o) {
  auto t = load(o);
  auto q = single_query(o, t.get());
  char* out = nullptr;
  check(folf_export_tptp(t.get(), q ? q->c_str() : nullptr, o.bound, &out));
  std::string text = take(out);
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!(f << text)) throw Failure{kUsage, "cannot write " + o.output};
  }
  return kOk;
}

int cmd_prove(const Options& o) {
  auto t = load(o);
  auto q = single_query(o, t.get());
  if (!q) throw Failure{kUsage, "no query: pass --query or add a #query directive"};
  std::string prover = o.prover;
  if (prover.empty())
    if (const char* env = std::getenv("FOLF_PROVER")) prover = env;
  if (prover.empty()) {
    std::cerr << "folf: no prover configured (--prover or FOLF_PROVER)\n";
    return kProver;
  }
  char* out = nullptr;
  check(folf_prove(t.get(), q->c_str(), o.bound, prover.c_str(), o.timeout, &out));
  json j = json::parse(take(out));
  std::string status = j["status"].get<std::string>();
  if (o.as_json) std::cout << j.dump(2) << "\n";
  else std::cout << "SZS status " << status << "\n";
  if (status == "Theorem") return kOk;
  if (status == "CounterSatisfiable") return kNo;
  return kProver;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-order loop formulas and stable models"};
  app.set_version_flag("--version", std::string(folf_version()));
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Program file, or - for stdin")->required();
    sub->add_flag("--formula", o.formula, "Read the file as a single sentence");
    sub->add_flag("--json", o.as_json, "JSON report");
    return sub;
  };
  auto bound = [&](CLI::App* sub) {
    sub->add_option("--bound", o.bound, "Largest loop size explored")->check(CLI::PositiveNumber);
  };
  auto constants = [&](CLI::App* sub) {
    sub->add_option("--constants", o.constants, "Extra constants, comma separated");
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands;
  auto* loops = common(app.add_subcommand("loops", "Loops and their loop formulas"));
  bound(loops);
  commands.emplace_back(loops, cmd_loops);

  commands.emplace_back(common(app.add_subcommand("safety", "Unsafe variables")), cmd_safety);

  auto* reduce = common(app.add_subcommand("reduce", "First-order sentence equivalent under stable models"));
  bound(reduce);
  commands.emplace_back(reduce, cmd_reduce);

  auto* ground = common(app.add_subcommand("ground", "Ground program in input syntax"));
  constants(ground);
  commands.emplace_back(ground, cmd_ground);

  auto* answersets = common(app.add_subcommand("answersets", "Herbrand stable models"));
  constants(answersets);
  answersets->add_flag("--dump-ground", o.dump_ground, "Print the ground program to stderr");
  commands.emplace_back(answersets, cmd_answersets);

  auto* check_stable = common(app.add_subcommand("check-stable", "Is an interpretation a stable model?"));
  auto* atoms_opt = check_stable->add_option("--atoms", o.atoms, "Herbrand interpretation, e.g. \"p(a), q(b)\"");
  auto* interp_opt = check_stable->add_option("--interpretation", o.interpretation,
                                              "JSON {\"size\",\"constants\",\"relations\"} or {\"atoms\"}");
  atoms_opt->excludes(interp_opt);
  check_stable->callback([&] {
    if (atoms_opt->count() == 0 && interp_opt->count() == 0)
      throw CLI::ValidationError("check-stable", "pass --atoms or --interpretation");
  });
  commands.emplace_back(check_stable, cmd_check_stable);

  auto* entail = common(app.add_subcommand("entail", "Bounded entailment under stable models"));
  entail->add_option("--query", o.queries, "Query sentence (repeatable); defaults to #query directives");
  entail->add_option("--max-universe", o.max_universe, "Largest universe checked")->check(CLI::PositiveNumber);
  entail->add_flag("--dump-ground", o.dump_ground, "Print the ground program to stderr");
  constants(entail);
  commands.emplace_back(entail, cmd_entail);

  auto* exp = common(app.add_subcommand("export-tptp", "TPTP FOF problem of the reduction"));
  exp->add_option("--query", o.queries, "Conjecture");
  exp->add_option("-o,--output", o.output, "Output file");
  bound(exp);
  commands.emplace_back(exp, cmd_export);

  auto* prove = common(app.add_subcommand("prove", "Export and run a first-order prover"));
  prove->add_option("--query", o.queries, "Conjecture");
  prove->add_option("--prover", o.prover, "Command template, {file} is the problem path (default $FOLF_PROVER)");
  prove->add_option("--timeout", o.timeout, "Seconds")->check(CLI::PositiveNumber);
  bound(prove);
  commands.emplace_back(prove, cmd_prove);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    for (auto& [sub, run] : commands)
      if (sub->parsed()) return run(o);
  } catch (const Failure& f) {
    std::cerr << "folf: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "folf: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
