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


#include "folf/tptp.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>

namespace folf {

namespace {

std::string legal(const std::string& name, bool upper) {
  std::string out;
  for (char c : name) out += std::isalnum(static_cast<unsigned char>(c)) || c == '_' ? c : '_';
  if (out.empty()) out = upper ? "V" : "s";
  unsigned char first = static_cast<unsigned char>(out[0]);
  if (upper && !std::isupper(first)) out = "V" + out;
  if (!upper && !std::islower(first)) out = std::isupper(first) ? std::string(1, static_cast<char>(std::tolower(first))) + out.substr(1) : "s" + out;
  return out;
}

void collect_symbols(const Formula& f, std::set<std::string>& out) {
  if (f.op() == Op::Pred) out.insert(f.symbol());
  if (f.op() == Op::Pred || f.op() == Op::Equal)
    for (const auto& t : f.args())
      if (t.is_const()) out.insert(t.name);
  for (const auto& k : f.kids()) collect_symbols(k, out);
}

std::string sym(const std::string& s, const std::map<std::string, std::string>& symbols) {
  auto it = symbols.find(s);
  return it == symbols.end() ? legal(s, false) : it->second;
}

std::string term(const Term& t, const std::map<std::string, std::string>& symbols) {
  return t.is_var() ? legal(t.name, true) : sym(t.name, symbols);
}

std::string print(const Formula& f, const std::map<std::string, std::string>& symbols) {
  if (f.is_top()) return "$true";
  switch (f.op()) {
    case Op::Bottom:
      return "$false";
    case Op::Pred: {
      std::string out = sym(f.symbol(), symbols);
      if (!f.args().empty()) {
        out += "(";
        for (std::size_t i = 0; i < f.args().size(); ++i) out += (i ? "," : "") + term(f.args()[i], symbols);
        out += ")";
      }
      return out;
    }
    case Op::Equal:
      return term(f.args()[0], symbols) + " = " + term(f.args()[1], symbols);
    case Op::And:
    case Op::Or: {
      std::vector<Formula> parts;
      std::vector<Formula> stack{f};
      while (!stack.empty()) {
        Formula g = stack.back();
        stack.pop_back();
        if (g.op() == f.op() && !g.is_top()) {
          stack.push_back(g.rhs());
          stack.push_back(g.lhs());
        } else {
          parts.push_back(g);
        }
      }
      std::string out = "(";
      for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? (f.op() == Op::And ? " & " : " | ") : "") + print(parts[i], symbols);
      return out + ")";
    }
    case Op::Implies:
      if (f.rhs().is_bottom() && f.lhs().op() == Op::Equal)
        return "(" + term(f.lhs().args()[0], symbols) + " != " + term(f.lhs().args()[1], symbols) + ")";
      if (f.rhs().is_bottom() && f.lhs().op() != Op::Pred) return "~ " + print(f.lhs(), symbols);
      return "(" + print(f.lhs(), symbols) + " => " + print(f.rhs(), symbols) + ")";
    case Op::Forall:
    case Op::Exists: {
      std::vector<std::string> vars;
      Formula body = f;
      while (body.op() == f.op()) {
        vars.push_back(legal(body.symbol(), true));
        body = body.body();
      }
      std::string out = f.op() == Op::Forall ? "![" : "?[";
      for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? "," : "") + vars[i];
      return out + "]: " + print(body, symbols);
    }
    default:
      throw Error(ErrorKind::NotFirstOrder, "not first-order reducible");
  }
}

}  // namespace

std::string to_tptp(const Formula& f, const std::map<std::string, std::string>& symbols) {
  if (!is_first_order(f)) throw Error(ErrorKind::NotFirstOrder, "not first-order reducible");
  return print(f, symbols);
}

TptpExport export_tptp(const TptpProblem& problem) {
  std::vector<Formula> all;
  for (const auto& [_, f] : problem.axioms) all.push_back(f);
  if (problem.conjecture) all.push_back(*problem.conjecture);
  std::set<std::string> names;
  for (const auto& f : all) {
    if (!is_first_order(f)) throw Error(ErrorKind::NotFirstOrder, "not first-order reducible");
    if (!is_sentence(f)) throw Error(ErrorKind::NotSentence, "TPTP formulas must be closed");
    collect_symbols(f, names);
  }

  TptpExport out;
  std::set<std::string> taken;
  std::map<std::string, std::string> table;
  // unchanged names first so that mangled ones never steal them
  for (const auto& n : names)
    if (legal(n, false) == n) {
      table[n] = n;
      taken.insert(n);
    }
  for (const auto& n : names) {
    if (table.count(n)) continue;
    std::string base = legal(n, false), cand = base;
    for (int k = 2; taken.count(cand); ++k) cand = base + "_" + std::to_string(k);
    table[n] = cand;
    taken.insert(cand);
    out.symbols[n] = cand;
  }

  std::size_t k = 0;
  std::set<std::string> used_names;
  for (const auto& [name, f] : problem.axioms) {
    ++k;
    std::string id = name.empty() ? "ax" + std::to_string(k) : legal(name, false);
    while (used_names.count(id)) id += "_";
    used_names.insert(id);
    out.text += "fof(" + id + ", axiom, " + print(f, table) + ").\n";
  }
  if (problem.conjecture) out.text += "fof(goal, conjecture, " + print(*problem.conjecture, table) + ").\n";
  return out;
}

const char* to_string(SzsStatus s) {
  switch (s) {
    case SzsStatus::Theorem:
      return "Theorem";
    case SzsStatus::CounterSatisfiable:
      return "CounterSatisfiable";
    case SzsStatus::Timeout:
      return "Timeout";
    case SzsStatus::Unknown:
      return "Unknown";
    case SzsStatus::Unavailable:
      return "Unavailable";
  }
  return "Unknown";
}

SzsStatus parse_szs(const std::string& output) {
  auto pos = output.find("SZS status");
  if (pos == std::string::npos) return SzsStatus::Unknown;
  pos += 10;
  while (pos < output.size() && output[pos] == ' ') ++pos;
  std::string word;
  while (pos < output.size() && std::isalpha(static_cast<unsigned char>(output[pos]))) word += output[pos++];
  if (word == "Theorem" || word == "Unsatisfiable" || word == "ContradictoryAxioms") return SzsStatus::Theorem;
  if (word == "CounterSatisfiable" || word == "Satisfiable") return SzsStatus::CounterSatisfiable;
  if (word == "Timeout" || word == "ResourceOut") return SzsStatus::Timeout;
  return SzsStatus::Unknown;
}

ProverRun run_prover(const std::string& problem, const std::string& command, int timeout_s) {
  ProverRun run;
  char path[] = "/tmp/folf_XXXXXX.p";
  int fd = mkstemps(path, 2);
  if (fd < 0) throw Error(ErrorKind::Io, "cannot create a temporary problem file");
  if (write(fd, problem.data(), problem.size()) != static_cast<ssize_t>(problem.size())) {
    close(fd);
    unlink(path);
    throw Error(ErrorKind::Io, "cannot write the problem file");
  }
  close(fd);

  std::string cmd = command;
  auto at = cmd.find("{file}");
  if (at == std::string::npos)
    cmd += std::string(" ") + path;
  else
    cmd.replace(at, 6, path);

  int pipefd[2];
  if (pipe(pipefd) != 0) throw Error(ErrorKind::Io, "pipe failed");
  pid_t pid = fork();
  if (pid == 0) {
    setpgid(0, 0);
    dup2(pipefd[1], 1);
    dup2(pipefd[1], 2);
    close(pipefd[0]);
    close(pipefd[1]);
    execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(pipefd[1]);
  auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(timeout_s);
  bool timed_out = false;
  char buf[4096];
  while (true) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      timed_out = true;
      break;
    }
    pollfd p{pipefd[0], POLLIN, 0};
    int r = poll(&p, 1, static_cast<int>(left.count()));
    if (r <= 0) continue;
    ssize_t n = read(pipefd[0], buf, sizeof buf);
    if (n <= 0) break;
    run.output.append(buf, static_cast<std::size_t>(n));
  }
  if (timed_out) kill(-pid, SIGKILL);
  close(pipefd[0]);
  int status = 0;
  waitpid(pid, &status, 0);
  unlink(path);

  if (timed_out) {
    run.status = SzsStatus::Timeout;
  } else if (WIFEXITED(status) && WEXITSTATUS(status) == 127 && run.output.find("SZS") == std::string::npos) {
    run.status = SzsStatus::Unavailable;
  } else {
    run.status = parse_szs(run.output);
  }
  return run;
}

}  // namespace folf
