#include <cstring>
#include <map>
#include <memory>
#include <string>
#include <variant>

#include "artinmut.h"
#include "artinmut/error.hpp"
#include "artinmut/io.hpp"

using namespace artinmut;

struct am_diagram {
  Diagram g;
};

struct am_options {
  PresentationOptions present;
  VerifyBudget budget;
};

struct am_presentation {
  Presentation p;
};

struct am_report {
  std::variant<InvarianceReport, HomomorphismReport> r;
};

namespace {

thread_local std::string last_error;

am_status code_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return AM_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return AM_ERR_PARSE;
    case ErrorCode::NotSkewSymmetrizable: return AM_ERR_NOT_SKEW_SYMMETRIZABLE;
    case ErrorCode::OutOfRange: return AM_ERR_OUT_OF_RANGE;
    case ErrorCode::NotSquare: return AM_ERR_NOT_SQUARE;
    case ErrorCode::NotCyclicallyOriented: return AM_ERR_NOT_CYCLICALLY_ORIENTED;
    case ErrorCode::NotFiniteType: return AM_ERR_NOT_FINITE_TYPE;
    case ErrorCode::NotConnected: return AM_ERR_NOT_CONNECTED;
    case ErrorCode::BoundExceeded: return AM_ERR_BOUND_EXCEEDED;
    case ErrorCode::BudgetExhausted: return AM_ERR_BUDGET_EXHAUSTED;
    case ErrorCode::AlphabetMismatch: return AM_ERR_ALPHABET_MISMATCH;
    case ErrorCode::UnsupportedCycle: return AM_ERR_UNSUPPORTED_CYCLE;
    case ErrorCode::Internal: return AM_ERR_INTERNAL;
  }
  return AM_ERR_INTERNAL;
}

am_status fail(am_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs body, translating exceptions into status codes.
template <typename Fn>
am_status guarded(Fn body) {
  try {
    last_error.clear();
    body();
    return AM_OK;
  } catch (const Error& e) {
    return fail(code_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(AM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(AM_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

const am_options& defaults() {
  static const am_options d{};
  return d;
}

const am_options& opts_or_default(const am_options* o) { return o ? *o : defaults(); }

Mode mode_of(am_mode m) { return m == AM_MODE_AFFINE ? Mode::Affine : Mode::Finite; }

int vertex(const am_diagram* g, int k) {
  if (k < 1 || k > g->g.size()) {
    throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(k) + " is not in 1.." +
                                           std::to_string(g->g.size()));
  }
  return k - 1;
}

}  // namespace

extern "C" {

const char* am_version(void) { return "1.0.0"; }

const char* am_status_name(am_status status) {
  switch (status) {
    case AM_OK: return "ok";
    case AM_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case AM_ERR_PARSE: return "parse";
    case AM_ERR_NOT_SKEW_SYMMETRIZABLE: return "not-skew-symmetrizable";
    case AM_ERR_OUT_OF_RANGE: return "out-of-range";
    case AM_ERR_NOT_SQUARE: return "not-square";
    case AM_ERR_NOT_CYCLICALLY_ORIENTED: return "not-cyclically-oriented";
    case AM_ERR_NOT_FINITE_TYPE: return "not-finite-type";
    case AM_ERR_NOT_CONNECTED: return "not-connected";
    case AM_ERR_BOUND_EXCEEDED: return "bound-exceeded";
    case AM_ERR_BUDGET_EXHAUSTED: return "budget-exhausted";
    case AM_ERR_ALPHABET_MISMATCH: return "alphabet-mismatch";
    case AM_ERR_UNSUPPORTED_CYCLE: return "unsupported-cycle";
    case AM_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* am_last_error(void) { return last_error.c_str(); }

void am_string_free(char* s) { delete[] s; }

am_status am_diagram_from_json(const char* json, am_mode mode, am_diagram** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = new am_diagram{io::diagram_from_json(io::parse(json), mode_of(mode))};
  });
}

void am_diagram_free(am_diagram* g) { delete g; }

int am_diagram_size(const am_diagram* g) { return g ? g->g.size() : 0; }

int am_diagram_equal(const am_diagram* a, const am_diagram* b) {
  return a && b && a->g == b->g ? 1 : 0;
}

am_status am_diagram_to_string(const am_diagram* g, am_format format, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    switch (format) {
      case AM_FORMAT_JSON: *out = dup(io::diagram_to_json(g->g).dump()); break;
      case AM_FORMAT_DOT: *out = dup(io::diagram_to_dot(g->g)); break;
      case AM_FORMAT_TEXT: *out = dup(diagram_signature(g->g)); break;
      default: require(false, "unknown format");
    }
  });
}

am_status am_diagram_mutate(const am_diagram* g, int k, am_diagram** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new am_diagram{mutate_diagram(g->g, vertex(g, k))};
  });
}

am_status am_diagram_opposite(const am_diagram* g, am_diagram** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new am_diagram{opposite(g->g)};
  });
}

am_status am_diagram_cycles(const am_diagram* g, am_mode mode, char** json_out) {
  return guarded([&] {
    require(g && json_out, "null argument");
    const Mode m = mode_of(mode);
    *json_out = dup(io::cycles_to_json(chordless_cycles(g->g, m), m).dump());
  });
}

am_status am_diagram_finite_type(const am_diagram* g, size_t cap, am_finite_type* out) {
  return guarded([&] {
    require(g && out, "null argument");
    switch (is_finite_type(g->g, cap)) {
      case FiniteTypeVerdict::Finite: *out = AM_FINITE; break;
      case FiniteTypeVerdict::Infinite: *out = AM_INFINITE; break;
      case FiniteTypeVerdict::BudgetExhausted: *out = AM_FINITE_TYPE_UNDECIDED; break;
    }
  });
}

am_status am_mutation_class(const am_diagram* g, size_t cap, am_diagram*** members,
                            size_t* count) {
  return guarded([&] {
    require(g && members && count, "null argument");
    const auto cls = mutation_class(g->g, cap, resolve_threads(0));
    auto arr = std::make_unique<am_diagram*[]>(cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) arr[i] = new am_diagram{cls[i].diagram};
    *count = cls.size();
    *members = arr.release();
  });
}

void am_diagram_array_free(am_diagram** members, size_t count) {
  if (!members) return;
  for (size_t i = 0; i < count; ++i) delete members[i];
  delete[] members;
}

am_status am_enumerate(const am_diagram* g, const am_options* opts, char** json_out) {
  return guarded([&] {
    require(g && json_out, "null argument");
    const am_options& o = opts_or_default(opts);
    const auto cls = mutation_class(g->g, kDefaultClassCap, resolve_threads(o.budget.threads));
    io::json members = io::json::array();
    std::map<std::string, std::size_t> totals;
    io::json shared = nullptr;
    bool agree = true;
    for (const CanonicalDiagram& c : cls) {
      std::map<std::string, std::size_t> census;
      for (const ChordlessCycle& cyc : chordless_cycles(c.diagram)) {
        census[to_string(cyc.cls)]++;
        totals[to_string(cyc.cls)]++;
      }
      const CosetTable t = todd_coxeter(coxeter_presentation(c.diagram), o.budget.coset_cap);
      io::json order = t.status == CosetStatus::Complete ? io::json(t.order) : io::json(nullptr);
      if (members.empty()) {
        shared = order;
      } else if (order != shared) {
        agree = false;
      }
      members.push_back({{"diagram", io::diagram_to_json(c.diagram)},
                         {"signature", diagram_signature(c.diagram)},
                         {"cycles", census},
                         {"coxeter_order", order}});
    }
    io::json out = {{"size", cls.size()},
                    {"members", members},
                    {"cycle_totals", totals},
                    {"coxeter_order", agree ? shared : io::json(nullptr)},
                    {"orders_agree", agree}};
    *json_out = dup(out.dump());
  });
}

am_options* am_options_new(void) { return new (std::nothrow) am_options{}; }

void am_options_free(am_options* opts) { delete opts; }

am_status am_options_set_mode(am_options* opts, am_mode mode) {
  return guarded([&] {
    require(opts, "null argument");
    opts->present.mode = mode_of(mode);
  });
}

am_status am_options_set_minimal_t3(am_options* opts, int on) {
  return guarded([&] {
    require(opts, "null argument");
    opts->present.minimal_t3 = on != 0;
  });
}

am_status am_options_set_patterns_json(am_options* opts, const char* json) {
  return guarded([&] {
    require(opts && json, "null argument");
    opts->present.patterns = io::patterns_from_json(io::parse(json));
  });
}

am_status am_options_set_budget_nodes(am_options* opts, size_t nodes) {
  return guarded([&] {
    require(opts && nodes > 0, "node budget must be positive");
    opts->budget.search.max_nodes = nodes;
  });
}

am_status am_options_set_budget_len(am_options* opts, size_t extra_len) {
  return guarded([&] {
    require(opts && extra_len > 0, "length budget must be positive");
    opts->budget.search.extra_len = extra_len;
  });
}

am_status am_options_set_coset_cap(am_options* opts, size_t cap) {
  return guarded([&] {
    require(opts && cap > 0, "coset cap must be positive");
    opts->budget.coset_cap = cap;
  });
}

am_status am_options_set_threads(am_options* opts, int threads) {
  return guarded([&] {
    require(opts && threads >= 0, "thread count must be non-negative");
    opts->budget.threads = threads;
  });
}

am_status am_present(const am_diagram* g, am_presentation_kind kind, const am_options* opts,
                     am_presentation** out) {
  return guarded([&] {
    require(g && out, "null argument");
    const am_options& o = opts_or_default(opts);
    Presentation p = kind == AM_PRESENT_COXETER ? coxeter_presentation(g->g)
                                                : build_artin(g->g, o.present);
    *out = new am_presentation{std::move(p)};
  });
}

void am_presentation_free(am_presentation* p) { delete p; }

size_t am_presentation_relator_count(const am_presentation* p) {
  return p ? p->p.relators.size() : 0;
}

am_status am_presentation_to_string(const am_presentation* p, am_format format, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    require(format != AM_FORMAT_DOT, "presentations have no DOT form");
    *out = dup(format == AM_FORMAT_JSON ? io::presentation_to_json(p->p).dump()
                                        : io::presentation_to_text(p->p));
  });
}

am_status am_presentation_order(const am_presentation* p, size_t cap, size_t* order) {
  return guarded([&] {
    require(p && order, "null argument");
    const CosetTable t = todd_coxeter(p->p, cap);
    if (t.status != CosetStatus::Complete) {
      throw Error(ErrorCode::BudgetExhausted,
                  "coset enumeration reached the cap of " + std::to_string(cap));
    }
    *order = t.order;
  });
}

am_status am_verify_mutation(const am_diagram* g, int k, const am_options* opts,
                             am_report** out) {
  return guarded([&] {
    require(g && out, "null argument");
    const am_options& o = opts_or_default(opts);
    *out = new am_report{verify_mutation_invariance(g->g, vertex(g, k), o.present, o.budget)};
  });
}

am_status am_verify_map_json(const char* json, const am_options* opts, am_report** out) {
  return guarded([&] {
    require(json && out, "null argument");
    const am_options& o = opts_or_default(opts);
    const GroupMap m = io::map_from_json(io::parse(json), o.present);
    *out = new am_report{verify_homomorphism(m, o.budget)};
  });
}

void am_report_free(am_report* r) { delete r; }

am_verdict am_report_verdict(const am_report* r) {
  if (!r) return AM_INCONCLUSIVE;
  const Verdict v = std::visit([](const auto& x) { return x.verdict; }, r->r);
  switch (v) {
    case Verdict::Pass: return AM_PASS;
    case Verdict::Fail: return AM_FAIL;
    case Verdict::Inconclusive: return AM_INCONCLUSIVE;
  }
  return AM_INCONCLUSIVE;
}

am_status am_report_to_string(const am_report* r, am_format format, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    require(format != AM_FORMAT_DOT, "reports have no DOT form");
    *out = dup(std::visit(
        [&](const auto& x) {
          return format == AM_FORMAT_JSON ? io::report_to_json(x).dump() : io::report_summary(x);
        },
        r->r));
  });
}

am_status am_fuzz_soundness(const am_diagram* g, const am_options* opts, uint64_t seed,
                            size_t count, char** json_out) {
  return guarded([&] {
    require(g && json_out, "null argument");
    const am_options& o = opts_or_default(opts);
    const SoundnessReport s = fuzz_soundness(build_artin(g->g, o.present), seed, count, o.budget);
    const io::json out = {{"seed", seed},
                          {"words", s.words},
                          {"quotient_trivial", s.quotient_trivial},
                          {"abelian_trivial", s.abelian_trivial},
                          {"certified", s.certified},
                          {"violations", s.violations}};
    *json_out = dup(out.dump());
  });
}

}  // extern "C"
