// Copyright 2026 The Skolem Toolkit Authors
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

// skolem: command-line front end over the C interface. Each command
// translates its arguments, calls the library and reports the result as
// text or JSON.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skolem/skolem.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

// A failed library call, carrying its status.
struct Failure {
  skolem_status status;
  std::string message;
};

void check(skolem_status s) {
  if (s != SKOLEM_OK) {
    throw Failure{s, skolem_last_error()};
  }
}

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  skolem_string_free(s);
  return out;
}

struct FormulaDeleter {
  void operator()(skolem_formula* f) const { skolem_formula_free(f); }
};
struct EngineDeleter {
  void operator()(skolem_engine* e) const { skolem_engine_free(e); }
};
struct AssignmentDeleter {
  void operator()(skolem_assignment* a) const { skolem_assignment_free(a); }
};
struct RewriteDeleter {
  void operator()(skolem_rewrite* r) const { skolem_rewrite_free(r); }
};
using FormulaPtr = std::unique_ptr<skolem_formula, FormulaDeleter>;
using EnginePtr = std::unique_ptr<skolem_engine, EngineDeleter>;
using AssignmentPtr = std::unique_ptr<skolem_assignment, AssignmentDeleter>;
using RewritePtr = std::unique_ptr<skolem_rewrite, RewriteDeleter>;

std::string print(const skolem_formula* f) {
  char* s = nullptr;
  check(skolem_formula_print(f, &s));
  return take(s);
}

// One formula to process and the text it came from.
struct Input {
  std::string text;
  FormulaPtr formula;
};

// A formula argument, or every formula of a corpus file given as @path.
std::vector<Input> read_inputs(const std::string& arg) {
  std::vector<Input> out;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) {
      throw Failure{SKOLEM_ERR_INVALID_ARGUMENT,
                    "cannot read '" + arg.substr(1) + "'"};
    }
    std::stringstream buf;
    buf << in.rdbuf();
    skolem_formula** fs = nullptr;
    std::size_t n = 0;
    check(skolem_parse_corpus(buf.str().c_str(), &fs, &n));
    for (std::size_t i = 0; i < n; ++i) {
      FormulaPtr f(fs[i]);
      fs[i] = nullptr;
      std::string text = print(f.get());
      out.push_back(Input{std::move(text), std::move(f)});
    }
    skolem_formula_array_free(fs, n);
    return out;
  }
  skolem_formula* f = nullptr;
  check(skolem_parse(arg.c_str(), &f));
  out.push_back(Input{arg, FormulaPtr(f)});
  return out;
}

FormulaPtr read_one(const std::string& arg) {
  std::vector<Input> in = read_inputs(arg);
  if (in.size() != 1) {
    throw Failure{SKOLEM_ERR_INVALID_ARGUMENT,
                  "expected exactly one formula in '" + arg + "'"};
  }
  return std::move(in.front().formula);
}

AssignmentPtr assignment(const std::vector<std::string>& lets) {
  AssignmentPtr a(skolem_assignment_new());
  for (const auto& l : lets) {
    auto eq = l.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Failure{SKOLEM_ERR_INVALID_ARGUMENT,
                    "--let expects var=number, got '" + l + "'"};
    }
    check(skolem_assignment_set(a.get(), l.substr(0, eq).c_str(),
                                l.substr(eq + 1).c_str()));
  }
  return a;
}

// Settings shared by every command.
struct Globals {
  bool json = false;
  std::string caps;
  bool raw = false;
  bool allocation = false;
};

EnginePtr make_engine(const Globals& g) {
  EnginePtr e(skolem_engine_new());
  if (const char* env = std::getenv("SKOLEM_CAPS")) {
    check(skolem_engine_set_caps(e.get(), env));
  }
  if (!g.caps.empty()) check(skolem_engine_set_caps(e.get(), g.caps.c_str()));
  if (g.raw) {
    check(skolem_engine_set_option(e.get(), "prune", 0));
    check(skolem_engine_set_option(e.get(), "compact", 0));
  }
  if (g.allocation) check(skolem_engine_set_option(e.get(), "allocation", 1));
  return e;
}

// Emits one result in the selected format.
class Reporter {
 public:
  Reporter(const Globals& g, std::string command)
      : g_(g), command_(std::move(command)) {}

  void start() { t0_ = std::chrono::steady_clock::now(); }

  void emit(const std::string& input, const ordered_json& result,
            const std::string& text, const skolem_engine* engine) {
    if (!g_.json) {
      std::cout << text << "\n";
      return;
    }
    skolem_stats stats{};
    if (engine != nullptr) check(skolem_engine_stats(engine, &stats));
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0_)
                          .count();
    ordered_json j;
    j["command"] = command_;
    j["input"] = input;
    j["result"] = result;
    j["stats"] = {{"elapsed_ms", static_cast<std::int64_t>(ms)},
                  {"presburger_calls", stats.presburger_calls},
                  {"dnf_size", stats.dnf_size}};
    std::cout << j.dump() << "\n";
  }

 private:
  const Globals& g_;
  std::string command_;
  std::chrono::steady_clock::time_point t0_;
};

const char* polarity_name(skolem_polarity p) {
  return p == SKOLEM_POLARITY_DIRECT ? "direct" : "complement";
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "skolem: decision procedure and formula toolkit for Skolem arithmetic "
      "(the naturals under multiplication).\n\n"
      "Formulas use the syntax  v = w*u^2, divides(v, w), prime(v), rad(v),\n"
      "ppart(v, u) = w, #[u: body] >= n, ~, /\\, \\/, ->, exists v. ,"
      " forall v. .\n"
      "A formula argument @path reads a corpus file (one formula per line,\n"
      "'#' comments).\n\n"
      "Exit codes: 0 success/true, 1 false or counterexample, 2 usage or\n"
      "parse error, 3 resource cap exceeded.\n\n"
      "Resource caps (defaults): dnf=50000 clauses per quantifier,\n"
      "pres=2000000 Presburger nodes per step, systems=200000 counting\n"
      "systems, alloc=2000000 allocations; override with --caps or the\n"
      "SKOLEM_CAPS environment variable, e.g. SKOLEM_CAPS=dnf=1000,pres=5000."};
  app.set_version_flag("--version", std::string(skolem_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Print one JSON object per result");
  app.add_option("--caps", g.caps, "Resource caps, e.g. dnf=1000,pres=50000");
  app.add_flag("--raw", g.raw,
               "Disable semantic pruning and body compaction");
  app.add_flag("--allocation", g.allocation,
               "Use allocation enumeration for the subset conditions");

  std::string formula, formula2, u = "u", vars;
  std::vector<std::string> lets;
  bool desugar = false, dump_rel = false, simplify = false, dump_pres = false;
  std::string base = "2,3,5";
  unsigned maxexp = 3;
  std::uint64_t k = 1;
  std::string m_demands, n_demands;
  bool with_u = false;
  std::vector<std::string> args;

  auto* parse_cmd = app.add_subcommand("parse", "Parse and print canonically");
  parse_cmd->add_option("formula", formula, "Formula or @file")->required();
  parse_cmd->add_flag("--desugar", desugar, "Expand the sugar first");
  parse_cmd->add_flag("--dump-relativized", dump_rel,
                      "Print the Presburger relativization");

  auto* qe_cmd = app.add_subcommand("qe", "Eliminate quantifiers");
  qe_cmd->add_option("formula", formula, "Formula or @file")->required();
  qe_cmd->add_flag("--simplify", simplify, "Fold atoms decided by Presburger");
  qe_cmd->add_flag("--dump-presburger", dump_pres,
                   "Print each atom's quantifier-free Presburger body");

  auto* decide_cmd = app.add_subcommand("decide", "Decide a sentence");
  decide_cmd->add_option("sentence", formula, "Sentence or @file")->required();

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate at an assignment");
  eval_cmd->add_option("formula", formula, "Formula or @file")->required();
  eval_cmd->add_option("--let", lets, "Binding var=number (repeatable)");

  auto* equiv_cmd =
      app.add_subcommand("equiv", "Compare two formulas on a grid");
  equiv_cmd->add_option("f", formula, "First formula")->required();
  equiv_cmd->add_option("g", formula2, "Second formula")->required();
  equiv_cmd->add_option("--base", base, "Grid primes")->capture_default_str();
  equiv_cmd->add_option("--maxexp", maxexp, "Largest exponent")->capture_default_str();

  auto* arith_cmd = app.add_subcommand("arith", "Arithmetic on naturals");
  arith_cmd->require_subcommand(1);
  auto* a_factor = arith_cmd->add_subcommand("factor", "Prime factorization");
  a_factor->add_option("n", args)->required()->expected(1);
  auto* a_radical = arith_cmd->add_subcommand("radical", "Squarefree kernel");
  a_radical->add_option("n", args)->required()->expected(1);
  auto* a_support = arith_cmd->add_subcommand("support", "Prime divisors");
  a_support->add_option("n", args)->required()->expected(1);
  auto* a_ppart = arith_cmd->add_subcommand("ppart", "p-part of n: N P");
  a_ppart->add_option("n_p", args)->required()->expected(2);
  auto* a_gamma = arith_cmd->add_subcommand(
      "gcd-gamma", "Per-prime least tuple of a set: tuples like 12,18");
  a_gamma->add_option("tuples", args)->required();
  auto* a_min = arith_cmd->add_subcommand("min-elems",
                                          "Minimal tuples of a finite set");
  a_min->add_option("tuples", args)->required();
  auto* a_prec = arith_cmd->add_subcommand(
      "precedes", "Divisibility-lexicographic order: A B");
  a_prec->add_option("a_b", args)->required()->expected(2);

  auto* rc_cmd = app.add_subcommand("radical-code",
                                    "Code a definable set of primes");
  rc_cmd->add_option("theta", formula, "Formula in u and parameters")
      ->required();
  rc_cmd->add_option("--u", u, "Prime variable")->capture_default_str();
  rc_cmd->add_option("--let", lets, "Parameter binding var=number");

  auto* er_cmd = app.add_subcommand(
      "embed-rewrite", "Rewrite #[p: theta] >= k with radical parameters");
  er_cmd->add_option("theta", formula, "Body over tuple variables")
      ->required();
  er_cmd->add_option("--k", k, "Counting bound")->capture_default_str();
  er_cmd->add_option("--vars", vars,
                     "Tuple variables (default: the unbound free variables)");
  er_cmd->add_option("--let", lets, "Parameter binding var=number");

  auto* b2_cmd = app.add_subcommand(
      "dump-b2", "Print the subset-existence condition for given demands");
  b2_cmd->add_option("--m", m_demands, "Demands m_1,...,m_k");
  b2_cmd->add_option("--n", n_demands, "Demands n_1,...,n_l");
  b2_cmd->add_flag("--with-u", with_u, "Require the P sets to cover U");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  std::string name = cmd->get_name();
  if (name == "arith") name += " " + cmd->get_subcommands().front()->get_name();
  Reporter out(g, name);

  try {
    int status = kExitOk;
    if (cmd == parse_cmd) {
      for (auto& in : read_inputs(formula)) {
        out.start();
        FormulaPtr f = std::move(in.formula);
        if (desugar || dump_rel) {
          skolem_formula* d = nullptr;
          check(skolem_desugar(f.get(), &d));
          f.reset(d);
        }
        std::string text = print(f.get());
        ordered_json result = text;
        if (dump_rel) {
          char* r = nullptr;
          check(skolem_dump_relativized(f.get(), &r));
          std::string rel = take(r);
          result = {{"formula", text}, {"relativized", rel}};
          text += "\n" + rel;
        }
        out.emit(in.text, result, text, nullptr);
      }
    } else if (cmd == qe_cmd) {
      for (auto& in : read_inputs(formula)) {
        out.start();
        EnginePtr e = make_engine(g);
        skolem_formula* nf = nullptr;
        check(skolem_eliminate(e.get(), in.formula.get(), &nf));
        FormulaPtr result(nf);
        if (simplify) {
          skolem_formula* s = nullptr;
          check(skolem_simplify(e.get(), result.get(), &s));
          result.reset(s);
        }
        std::string text = print(result.get());
        ordered_json j = text;
        if (dump_pres) {
          char* d = nullptr;
          check(skolem_dump_presburger(e.get(), in.formula.get(), &d));
          std::string dump = take(d);
          j = {{"normal_form", text}, {"presburger", dump}};
          text += "\n" + dump;
        }
        out.emit(in.text, j, text, e.get());
      }
    } else if (cmd == decide_cmd) {
      for (auto& in : read_inputs(formula)) {
        out.start();
        EnginePtr e = make_engine(g);
        int truth = 0;
        check(skolem_decide(e.get(), in.formula.get(), &truth));
        if (!truth) status = kExitFalse;
        out.emit(in.text, truth != 0, truth ? "true" : "false", e.get());
      }
    } else if (cmd == eval_cmd) {
      AssignmentPtr a = assignment(lets);
      for (auto& in : read_inputs(formula)) {
        out.start();
        EnginePtr e = make_engine(g);
        int truth = 0;
        check(skolem_eval(e.get(), in.formula.get(), a.get(), &truth));
        if (!truth) status = kExitFalse;
        out.emit(in.text, truth != 0, truth ? "true" : "false", e.get());
      }
    } else if (cmd == equiv_cmd) {
      out.start();
      FormulaPtr f = read_one(formula);
      FormulaPtr h = read_one(formula2);
      EnginePtr e = make_engine(g);
      int same = 0;
      char* cex = nullptr;
      check(skolem_check_equiv(e.get(), f.get(), h.get(), base.c_str(), maxexp,
                               &same, &cex));
      std::string c = take(cex);
      ordered_json j = {{"equivalent", same != 0},
                        {"counterexample", same ? ordered_json(nullptr)
                                                : ordered_json(c)}};
      if (!same) status = kExitFalse;
      out.emit(formula + " <-> " + formula2, j,
               same ? "equivalent" : "counterexample: " + c, e.get());
    } else if (cmd == arith_cmd) {
      out.start();
      CLI::App* sub = cmd->get_subcommands().front();
      std::vector<const char*> cargs;
      for (const auto& s : args) cargs.push_back(s.c_str());
      char* s = nullptr;
      ordered_json j;
      std::string text;
      if (sub == a_factor) {
        check(skolem_arith_factor(cargs[0], &s));
        text = take(s);
      } else if (sub == a_radical) {
        check(skolem_arith_radical(cargs[0], &s));
        text = take(s);
      } else if (sub == a_support) {
        check(skolem_arith_support(cargs[0], &s));
        text = take(s);
      } else if (sub == a_ppart) {
        check(skolem_arith_ppart(cargs[0], cargs[1], &s));
        text = take(s);
      } else if (sub == a_gamma) {
        check(skolem_arith_gamma(cargs.data(), cargs.size(), &s));
        text = take(s);
      } else if (sub == a_min) {
        check(skolem_arith_min_elements(cargs.data(), cargs.size(), &s));
        text = take(s);
        if (!text.empty() && text.back() == '\n') text.pop_back();
      } else {
        int r = 0;
        check(skolem_arith_precedes(cargs[0], cargs[1], &r));
        text = r ? "true" : "false";
        j = r != 0;
      }
      if (j.is_null()) j = text;
      out.emit(join(args, " "), j, text, nullptr);
    } else if (cmd == rc_cmd) {
      out.start();
      FormulaPtr f = read_one(formula);
      AssignmentPtr a = assignment(lets);
      EnginePtr e = make_engine(g);
      skolem_polarity pol{};
      char* code = nullptr;
      check(skolem_radical_code(e.get(), f.get(), u.c_str(), a.get(), &pol,
                                &code));
      std::string c = take(code);
      out.emit(formula, {{"polarity", polarity_name(pol)}, {"code", c}},
               std::string(polarity_name(pol)) + " " + c, e.get());
    } else if (cmd == er_cmd) {
      out.start();
      FormulaPtr f = read_one(formula);
      AssignmentPtr a = assignment(lets);
      if (vars.empty()) {
        // Tuple variables: the free variables without a binding.
        char* fv = nullptr;
        check(skolem_formula_free_vars(f.get(), &fv));
        std::stringstream ss(take(fv));
        std::string v;
        std::vector<std::string> tuple;
        while (std::getline(ss, v, ',')) {
          bool bound = false;
          for (const auto& l : lets) bound = bound || l.rfind(v + "=", 0) == 0;
          if (!bound) tuple.push_back(v);
        }
        vars = join(tuple, ",");
      }
      EnginePtr e = make_engine(g);
      skolem_rewrite* r = nullptr;
      check(skolem_embed_rewrite(e.get(), f.get(), vars.c_str(), k, a.get(),
                                 &r));
      RewritePtr rw(r);
      skolem_formula* psi = nullptr;
      check(skolem_rewrite_psi(rw.get(), &psi));
      FormulaPtr p(psi);
      std::string psi_text = print(p.get());
      ordered_json params = ordered_json::array();
      std::string text = psi_text;
      for (std::size_t i = 0; i < skolem_rewrite_param_count(rw.get()); ++i) {
        char *pname = nullptr, *pat = nullptr, *code = nullptr;
        skolem_polarity pol{};
        check(skolem_rewrite_param(rw.get(), i, &pname, &pat, &pol, &code));
        std::string n = take(pname), t = take(pat), c = take(code);
        params.push_back({{"name", n},
                          {"pattern", t},
                          {"polarity", polarity_name(pol)},
                          {"code", c}});
        text += "\n" + n + " = " + c + " (" + polarity_name(pol) +
                ", pattern " + t + ")";
      }
      out.emit(formula, {{"psi", psi_text}, {"params", params}}, text,
               e.get());
    } else if (cmd == b2_cmd) {
      out.start();
      char* s = nullptr;
      check(skolem_dump_b2(m_demands.c_str(), n_demands.c_str(), with_u ? 1 : 0,
                           g.allocation ? 1 : 0, &s));
      std::string text = take(s);
      out.emit("m=" + m_demands + " n=" + n_demands + (with_u ? " U" : ""),
               text, text, nullptr);
    }
    return status;
  } catch (const Failure& f) {
    if (g.json) {
      ordered_json j;
      j["command"] = name;
      j["error"] = {{"status", skolem_status_name(f.status)},
                    {"message", f.message}};
      std::cout << j.dump() << "\n";
    }
    std::cerr << "skolem: " << skolem_status_name(f.status) << ": "
              << f.message << "\n";
    return f.status == SKOLEM_ERR_RESOURCE ? kExitResource : kExitUsage;
  }
}
