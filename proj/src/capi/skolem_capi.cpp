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

// The C interface: a thin translation layer between opaque handles and the
// C++ core. Exceptions never cross the boundary.

#include "skolem/skolem.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <iterator>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "skolem/arith.hpp"
#include "skolem/counting.hpp"
#include "skolem/definable.hpp"
#include "skolem/engine.hpp"
#include "skolem/error.hpp"
#include "skolem/formula.hpp"
#include "skolem/qe.hpp"
#include "skolem/relativize.hpp"
#include "skolem/semantics.hpp"
#include "skolem/syntax.hpp"

struct skolem_formula {
  skolem::Formula f;
};

struct skolem_engine {
  skolem::Engine engine;
};

struct skolem_assignment {
  skolem::Assignment a;
};

struct skolem_rewrite {
  skolem::EmbedRewrite rw;
};

namespace {

thread_local std::string g_error;
thread_local std::size_t g_line = 0;
thread_local std::size_t g_column = 0;

void set_error(const std::string& msg, std::size_t line = 0,
               std::size_t column = 0) {
  g_error = msg;
  g_line = line;
  g_column = column;
}

// Runs body, mapping exceptions to status codes.
template <typename Body>
skolem_status guarded(Body&& body) {
  try {
    set_error("");
    body();
    return SKOLEM_OK;
  } catch (const skolem::SyntaxError& e) {
    set_error(e.what(), e.line(), e.column());
    return SKOLEM_ERR_SYNTAX;
  } catch (const skolem::InvalidArgument& e) {
    set_error(e.what());
    return SKOLEM_ERR_INVALID_ARGUMENT;
  } catch (const skolem::ResourceError& e) {
    set_error(e.what());
    return SKOLEM_ERR_RESOURCE;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return SKOLEM_ERR_RESOURCE;
  } catch (const std::exception& e) {
    set_error(e.what());
    return SKOLEM_ERR_INTERNAL;
  }
}

skolem_status null_error(const char* what) {
  set_error(std::string("null argument: ") + what);
  return SKOLEM_ERR_NULL;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

skolem::BigInt positive(const char* text) {
  skolem::BigInt n = skolem::parse_bigint(text);
  if (n < 1) {
    throw skolem::InvalidArgument(std::string("expected a positive integer, "
                                              "got '") +
                                  text + "'");
  }
  return n;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::uint64_t> demands(const char* text) {
  std::vector<std::uint64_t> out;
  if (text == nullptr || *text == '\0') return out;
  for (const auto& s : split(text, ',')) {
    out.push_back(skolem::to_uint64(skolem::parse_bigint(s)));
  }
  return out;
}

skolem::arith::Tuple tuple(const char* text) {
  skolem::arith::Tuple t;
  for (const auto& s : split(text, ',')) {
    t.push_back(skolem::arith::factor(positive(s.c_str())));
  }
  return t;
}

std::vector<skolem::arith::Tuple> tuples(const char* const* items,
                                         std::size_t count) {
  std::vector<skolem::arith::Tuple> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (items[i] == nullptr) throw skolem::InvalidArgument("null tuple");
    out.push_back(tuple(items[i]));
  }
  return out;
}

std::string factored(const skolem::arith::FactoredNat& n) {
  return n.value().str() + " = " + n.to_string();
}

}  // namespace

extern "C" {

const char* skolem_version(void) { return "1.0.0"; }

const char* skolem_status_name(skolem_status status) {
  switch (status) {
    case SKOLEM_OK:
      return "ok";
    case SKOLEM_ERR_SYNTAX:
      return "syntax error";
    case SKOLEM_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SKOLEM_ERR_RESOURCE:
      return "resource limit";
    case SKOLEM_ERR_NULL:
      return "null argument";
    case SKOLEM_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* skolem_last_error(void) { return g_error.c_str(); }
size_t skolem_last_error_line(void) { return g_line; }
size_t skolem_last_error_column(void) { return g_column; }
void skolem_string_free(char* s) { std::free(s); }

skolem_status skolem_parse(const char* text, skolem_formula** out) {
  if (text == nullptr) return null_error("text");
  if (out == nullptr) return null_error("out");
  return guarded([&] { *out = new skolem_formula{skolem::parse(text)}; });
}

void skolem_formula_free(skolem_formula* f) { delete f; }

skolem_status skolem_formula_print(const skolem_formula* f, char** out) {
  if (f == nullptr) return null_error("formula");
  if (out == nullptr) return null_error("out");
  return guarded([&] { *out = dup(skolem::pretty(f->f)); });
}

skolem_status skolem_formula_free_vars(const skolem_formula* f, char** out) {
  if (f == nullptr) return null_error("formula");
  if (out == nullptr) return null_error("out");
  return guarded([&] {
    std::string s;
    for (const auto& v : f->f.free_vars()) s += (s.empty() ? "" : ",") + v;
    *out = dup(s);
  });
}

skolem_status skolem_formula_equal(const skolem_formula* a,
                                   const skolem_formula* b, int* out) {
  if (a == nullptr || b == nullptr) return null_error("formula");
  if (out == nullptr) return null_error("out");
  return guarded([&] { *out = a->f == b->f ? 1 : 0; });
}

skolem_status skolem_desugar(const skolem_formula* f, skolem_formula** out) {
  if (f == nullptr) return null_error("formula");
  if (out == nullptr) return null_error("out");
  return guarded([&] { *out = new skolem_formula{skolem::desugar(f->f)}; });
}

skolem_status skolem_parse_corpus(const char* text, skolem_formula*** out,
                                  size_t* count) {
  if (text == nullptr) return null_error("text");
  if (out == nullptr || count == nullptr) return null_error("out");
  return guarded([&] {
    std::vector<skolem::Formula> fs;
    for (const auto& line : skolem::split_corpus(text)) {
      fs.push_back(skolem::parse(line));
    }
    auto** arr = new skolem_formula*[fs.size() == 0 ? 1 : fs.size()];
    for (std::size_t i = 0; i < fs.size(); ++i) {
      arr[i] = new skolem_formula{fs[i]};
    }
    *out = arr;
    *count = fs.size();
  });
}

void skolem_formula_array_free(skolem_formula** fs, size_t count) {
  if (fs == nullptr) return;
  for (std::size_t i = 0; i < count; ++i) delete fs[i];
  delete[] fs;
}

skolem_engine* skolem_engine_new(void) {
  try {
    return new skolem_engine{};
  } catch (...) {
    set_error("out of memory");
    return nullptr;
  }
}

void skolem_engine_free(skolem_engine* e) { delete e; }

skolem_status skolem_engine_set_caps(skolem_engine* e, const char* caps) {
  if (e == nullptr) return null_error("engine");
  if (caps == nullptr) return null_error("caps");
  return guarded(
      [&] { skolem::apply_caps(e->engine.mutable_options(), caps); });
}

skolem_status skolem_engine_set_option(skolem_engine* e, const char* name,
                                       int value) {
  if (e == nullptr) return null_error("engine");
  if (name == nullptr) return null_error("name");
  return guarded([&] {
    auto& o = e->engine.mutable_options();
    const std::string n = name;
    if (n == "prune") {
      o.prune = value != 0;
    } else if (n == "compact") {
      o.compact_bodies = value != 0;
    } else if (n == "allocation") {
      o.b2 = value != 0 ? skolem::counting::B2Method::kAllocation
                        : skolem::counting::B2Method::kHall;
    } else {
      throw skolem::InvalidArgument("unknown engine option '" + n + "'");
    }
  });
}

skolem_status skolem_engine_stats(const skolem_engine* e, skolem_stats* out) {
  if (e == nullptr) return null_error("engine");
  if (out == nullptr) return null_error("out");
  const auto& s = e->engine.stats();
  out->presburger_calls = s.presburger_calls;
  out->dnf_size = s.dnf_size;
  out->systems = s.systems;
  out->exists_steps = s.exists_steps;
  return SKOLEM_OK;
}

skolem_assignment* skolem_assignment_new(void) {
  try {
    return new skolem_assignment{};
  } catch (...) {
    set_error("out of memory");
    return nullptr;
  }
}

void skolem_assignment_free(skolem_assignment* a) { delete a; }

skolem_status skolem_assignment_set(skolem_assignment* a, const char* var,
                                    const char* decimal) {
  if (a == nullptr) return null_error("assignment");
  if (var == nullptr || decimal == nullptr) return null_error("binding");
  return guarded(
      [&] { a->a[var] = skolem::arith::factor(positive(decimal)); });
}

skolem_status skolem_eliminate(skolem_engine* e, const skolem_formula* f,
                               skolem_formula** out) {
  if (e == nullptr) return null_error("engine");
  if (f == nullptr) return null_error("formula");
  if (out == nullptr) return null_error("out");
  return guarded([&] {
    *out = new skolem_formula{skolem::eliminate(f->f, e->engine)};
  });
}

skolem_status skolem_simplify(skolem_engine* e, const skolem_formula* nf,
                              skolem_formula** out) {
  if (e == nullptr) return null_error("engine");
  if (nf == nullptr) return null_error("formula");
  if (out == nullptr) return null_error("out");
  return guarded([&] {
    *out = new skolem_formula{skolem::simplify(nf->f, e->engine)};
  });
}

skolem_status skolem_eval(skolem_engine* e, const skolem_formula* f,
                          const skolem_assignment* a, int* out) {
  if (e == nullptr) return null_error("engine");
  if (f == nullptr) return null_error("formula");
  if (a == nullptr) return null_error("assignment");
  if (out == nullptr) return null_error("out");
  return guarded([&] {
    // Only the formula's own variables take part.
    skolem::Assignment used;
    for (const auto& v : f->f.free_vars()) {
      auto it = a->a.find(v);
      if (it != a->a.end()) used.insert(*it);
    }
    *out = skolem::eval(f->f, used, e->engine) ? 1 : 0;
  });
}

skolem_status skolem_decide(skolem_engine* e, const skolem_formula* sentence,
                            int* out) {
  if (e == nullptr) return null_error("engine");
  if (sentence == nullptr) return null_error("formula");
  if (out == nullptr) return null_error("out");
  return guarded(
      [&] { *out = skolem::decide(sentence->f, e->engine) ? 1 : 0; });
}

skolem_status skolem_check_equiv(skolem_engine* e, const skolem_formula* f,
                                 const skolem_formula* g, const char* base,
                                 unsigned max_exp, int* equivalent,
                                 char** counterexample) {
  if (e == nullptr) return null_error("engine");
  if (f == nullptr || g == nullptr) return null_error("formula");
  if (base == nullptr) return null_error("base");
  if (equivalent == nullptr || counterexample == nullptr) {
    return null_error("out");
  }
  return guarded([&] {
    skolem::Grid grid;
    grid.base.clear();
    for (const auto& s : split(base, ',')) {
      grid.base.push_back(skolem::parse_bigint(s));
    }
    if (grid.base.empty()) throw skolem::InvalidArgument("empty grid base");
    grid.max_exp = max_exp;
    auto cex = skolem::check_equiv(f->f, g->f, grid, e->engine);
    *equivalent = cex ? 0 : 1;
    *counterexample = nullptr;
    if (cex) {
      std::string s;
      for (const auto& [v, n] : *cex) {
        s += (s.empty() ? "" : ", ") + v + "=" + n.value().str();
      }
      *counterexample = dup(s);
    }
  });
}

skolem_status skolem_dump_relativized(const skolem_formula* f, char** out) {
  if (f == nullptr) return null_error("formula");
  if (out == nullptr) return null_error("out");
  return guarded([&] {
    *out = dup(skolem::pres::to_string(
        skolem::relativize(skolem::desugar(f->f))));
  });
}

skolem_status skolem_dump_presburger(skolem_engine* e, const skolem_formula* f,
                                     char** out) {
  if (e == nullptr) return null_error("engine");
  if (f == nullptr) return null_error("formula");
  if (out == nullptr) return null_error("out");
  return guarded([&] {
    skolem::Formula nf = skolem::eliminate(f->f, e->engine);
    std::vector<skolem::Formula> atoms;
    std::vector<skolem::Formula> stack{nf};
    while (!stack.empty()) {
      skolem::Formula g = stack.back();
      stack.pop_back();
      if (g.kind() == skolem::Kind::kCountGE) {
        bool seen = false;
        for (const auto& a : atoms) seen = seen || a == g;
        if (!seen) atoms.push_back(g);
        continue;
      }
      for (auto it = g.children().rbegin(); it != g.children().rend(); ++it) {
        stack.push_back(*it);
      }
    }
    std::string s;
    for (const auto& a : atoms) {
      s += skolem::pretty(a) + "\n    " +
           skolem::pres::to_string(e->engine.qf(a.child(), a.var())) + "\n";
    }
    *out = dup(s);
  });
}

skolem_status skolem_dump_b2(const char* m, const char* n, int with_u,
                             int allocation, char** out) {
  if (out == nullptr) return null_error("out");
  return guarded([&] {
    auto e = skolem::counting::b2_express(
        demands(m), demands(n), with_u != 0,
        allocation ? skolem::counting::B2Method::kAllocation
                   : skolem::counting::B2Method::kHall,
        skolem::counting::CountingLimits{});
    *out = dup(e.to_string());
  });
}

skolem_status skolem_arith_factor(const char* n, char** out) {
  if (n == nullptr) return null_error("n");
  if (out == nullptr) return null_error("out");
  return guarded([&] { *out = dup(factored(skolem::arith::factor(positive(n)))); });
}

skolem_status skolem_arith_radical(const char* n, char** out) {
  if (n == nullptr) return null_error("n");
  if (out == nullptr) return null_error("out");
  return guarded([&] {
    *out = dup(factored(skolem::arith::radical(skolem::arith::factor(positive(n)))));
  });
}

skolem_status skolem_arith_support(const char* n, char** out) {
  if (n == nullptr) return null_error("n");
  if (out == nullptr) return null_error("out");
  return guarded([&] {
    std::string s = "{";
    bool first = true;
    for (const auto& p : skolem::arith::support(skolem::arith::factor(positive(n)))) {
      s += (first ? "" : ", ") + p.str();
      first = false;
    }
    *out = dup(s + "}");
  });
}

skolem_status skolem_arith_ppart(const char* n, const char* p, char** out) {
  if (n == nullptr || p == nullptr) return null_error("n");
  if (out == nullptr) return null_error("out");
  return guarded([&] {
    *out = dup(skolem::arith::ppart(skolem::arith::factor(positive(n)),
                                    skolem::parse_bigint(p))
                   .value()
                   .str());
  });
}

skolem_status skolem_arith_gamma(const char* const* items, size_t count,
                                 char** out) {
  if (items == nullptr && count != 0) return null_error("tuples");
  if (out == nullptr) return null_error("out");
  return guarded([&] {
    *out = dup(skolem::arith::to_string(skolem::arith::gamma(tuples(items, count))));
  });
}

skolem_status skolem_arith_min_elements(const char* const* items, size_t count,
                                        char** out) {
  if (items == nullptr && count != 0) return null_error("tuples");
  if (out == nullptr) return null_error("out");
  return guarded([&] {
    std::string s;
    for (const auto& t : skolem::arith::min_elements(tuples(items, count))) {
      s += skolem::arith::to_string(t) + "\n";
    }
    *out = dup(s);
  });
}

skolem_status skolem_arith_precedes(const char* a, const char* b, int* out) {
  if (a == nullptr || b == nullptr) return null_error("tuple");
  if (out == nullptr) return null_error("out");
  return guarded(
      [&] { *out = skolem::arith::precedes(tuple(a), tuple(b)) ? 1 : 0; });
}

skolem_status skolem_radical_code(skolem_engine* e, const skolem_formula* theta,
                                  const char* u,
                                  const skolem_assignment* params,
                                  skolem_polarity* polarity, char** code) {
  if (e == nullptr) return null_error("engine");
  if (theta == nullptr) return null_error("formula");
  if (u == nullptr) return null_error("u");
  if (params == nullptr) return null_error("assignment");
  if (polarity == nullptr || code == nullptr) return null_error("out");
  return guarded([&] {
    skolem::RadicalCode rc =
        skolem::radical_code(theta->f, u, params->a, e->engine);
    *polarity = rc.polarity == skolem::Polarity::kDirect
                    ? SKOLEM_POLARITY_DIRECT
                    : SKOLEM_POLARITY_COMPLEMENT;
    *code = dup(rc.code.value().str());
  });
}

skolem_status skolem_embed_rewrite(skolem_engine* e,
                                   const skolem_formula* theta,
                                   const char* vars, uint64_t k,
                                   const skolem_assignment* params,
                                   skolem_rewrite** out) {
  if (e == nullptr) return null_error("engine");
  if (theta == nullptr) return null_error("formula");
  if (vars == nullptr) return null_error("vars");
  if (params == nullptr) return null_error("assignment");
  if (out == nullptr) return null_error("out");
  return guarded([&] {
    std::vector<std::string> vs;
    for (const auto& v : split(vars, ',')) {
      if (!v.empty()) vs.push_back(v);
    }
    *out = new skolem_rewrite{skolem::stable_embed_rewrite(
        theta->f, vs, k, params->a, "", e->engine)};
  });
}

void skolem_rewrite_free(skolem_rewrite* r) { delete r; }

skolem_status skolem_rewrite_psi(const skolem_rewrite* r, skolem_formula** out) {
  if (r == nullptr) return null_error("rewrite");
  if (out == nullptr) return null_error("out");
  return guarded([&] { *out = new skolem_formula{r->rw.psi}; });
}

size_t skolem_rewrite_param_count(const skolem_rewrite* r) {
  return r == nullptr ? 0 : r->rw.param_of.size();
}

skolem_status skolem_rewrite_param(const skolem_rewrite* r, size_t i,
                                   char** name, char** pattern,
                                   skolem_polarity* polarity, char** code) {
  if (r == nullptr) return null_error("rewrite");
  if (name == nullptr || pattern == nullptr || polarity == nullptr ||
      code == nullptr) {
    return null_error("out");
  }
  if (i >= r->rw.param_of.size()) {
    set_error("parameter index out of range");
    return SKOLEM_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    auto it = r->rw.param_of.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(i));
    const skolem::RadicalCode& rc = r->rw.params.at(it->second);
    *pattern = dup(it->first);
    *name = dup(it->second);
    *polarity = rc.polarity == skolem::Polarity::kDirect
                    ? SKOLEM_POLARITY_DIRECT
                    : SKOLEM_POLARITY_COMPLEMENT;
    *code = dup(rc.code.value().str());
  });
}

}  // extern "C"
