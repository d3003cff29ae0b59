// Command-line front end. Talks to the library only through artinmut.h.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "artinmut.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitError = 1;

struct Failure {
  std::string message;
};

void check(am_status s) {
  if (s != AM_OK) throw Failure{std::string(am_status_name(s)) + ": " + am_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  am_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct DiagramDeleter {
  void operator()(am_diagram* g) const { am_diagram_free(g); }
};
struct OptionsDeleter {
  void operator()(am_options* o) const { am_options_free(o); }
};
struct PresentationDeleter {
  void operator()(am_presentation* p) const { am_presentation_free(p); }
};
struct ReportDeleter {
  void operator()(am_report* r) const { am_report_free(r); }
};
using DiagramPtr = std::unique_ptr<am_diagram, DiagramDeleter>;
using OptionsPtr = std::unique_ptr<am_options, OptionsDeleter>;
using PresentationPtr = std::unique_ptr<am_presentation, PresentationDeleter>;
using ReportPtr = std::unique_ptr<am_report, ReportDeleter>;

struct ClassMembers {
  am_diagram** items = nullptr;
  std::size_t count = 0;
  ~ClassMembers() { am_diagram_array_free(items, count); }
};

struct Config {
  std::string input;
  std::string mode = "finite";
  std::string format = "json";
  std::string kind = "artin";
  std::string patterns;
  std::vector<int> vertices;
  bool minimal_t3 = false;
  bool all_vertices = false;
  bool whole_class = false;
  std::size_t budget_nodes = 1000000;
  std::size_t budget_len = 16;
  std::size_t coset_cap = 1000000;
  std::uint64_t seed = 1;
  std::size_t fuzz = 0;
};

am_mode mode_of(const Config& c) { return c.mode == "affine" ? AM_MODE_AFFINE : AM_MODE_FINITE; }

am_format format_of(const Config& c) {
  if (c.format == "text") return AM_FORMAT_TEXT;
  if (c.format == "dot") return AM_FORMAT_DOT;
  return AM_FORMAT_JSON;
}

DiagramPtr load_diagram(const Config& c, const std::string& text) {
  am_diagram* g = nullptr;
  check(am_diagram_from_json(text.c_str(), mode_of(c), &g));
  return DiagramPtr(g);
}

OptionsPtr make_options(const Config& c) {
  OptionsPtr o(am_options_new());
  if (!o) throw Failure{"out of memory"};
  check(am_options_set_mode(o.get(), mode_of(c)));
  check(am_options_set_minimal_t3(o.get(), c.minimal_t3 ? 1 : 0));
  check(am_options_set_budget_nodes(o.get(), c.budget_nodes));
  check(am_options_set_budget_len(o.get(), c.budget_len));
  check(am_options_set_coset_cap(o.get(), c.coset_cap));
  if (!c.patterns.empty()) check(am_options_set_patterns_json(o.get(), read_file(c.patterns).c_str()));
  return o;
}

// Indented JSON with arrays of scalars kept on one line.
void write_json(std::ostream& out, const json& j, int depth = 0) {
  const std::string pad(static_cast<std::size_t>(2 * depth + 2), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  auto flat = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& x) {
      return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(), [](const json& y) {
                                    return y.is_primitive();
                                  }));
    });
  };
  if (j.is_object() && !j.empty()) {
    out << "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out << pad << json(key).dump() << ": ";
      write_json(out, value, depth + 1);
      out << (++i < j.size() ? ",\n" : "\n");
    }
    out << close << "}";
  } else if (j.is_array() && !j.empty() && !flat(j)) {
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << pad;
      write_json(out, j[i], depth + 1);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << close << "]";
  } else {
    out << j.dump();
  }
}

void print_json(const json& j) {
  write_json(std::cout, j);
  std::cout << "\n";
}

void print_json(const std::string& text) { print_json(json::parse(text)); }

void print_diagram(const Config& c, const am_diagram* g) {
  char* s = nullptr;
  check(am_diagram_to_string(g, format_of(c), &s));
  const std::string out = take(s);
  if (format_of(c) == AM_FORMAT_JSON) {
    print_json(out);
  } else {
    std::cout << out << (out.ends_with('\n') ? "" : "\n");
  }
}

int cmd_mutate(const Config& c) {
  DiagramPtr g = load_diagram(c, read_file(c.input));
  for (int k : c.vertices) {
    am_diagram* next = nullptr;
    check(am_diagram_mutate(g.get(), k, &next));
    g.reset(next);
  }
  print_diagram(c, g.get());
  return 0;
}

int cmd_opposite(const Config& c) {
  DiagramPtr g = load_diagram(c, read_file(c.input));
  am_diagram* op = nullptr;
  check(am_diagram_opposite(g.get(), &op));
  print_diagram(c, DiagramPtr(op).get());
  return 0;
}

int cmd_present(const Config& c) {
  DiagramPtr g = load_diagram(c, read_file(c.input));
  OptionsPtr o = make_options(c);
  am_presentation* p = nullptr;
  check(am_present(g.get(), c.kind == "coxeter" ? AM_PRESENT_COXETER : AM_PRESENT_ARTIN, o.get(), &p));
  PresentationPtr pp(p);
  char* s = nullptr;
  check(am_presentation_to_string(pp.get(), c.format == "text" ? AM_FORMAT_TEXT : AM_FORMAT_JSON, &s));
  const std::string out = take(s);
  if (c.format == "text") {
    std::cout << out;
  } else {
    print_json(out);
  }
  return 0;
}

int cmd_cycles(const Config& c) {
  DiagramPtr g = load_diagram(c, read_file(c.input));
  char* s = nullptr;
  check(am_diagram_cycles(g.get(), mode_of(c), &s));
  const json cycles = json::parse(take(s));
  if (c.format != "text") {
    print_json(cycles);
    return 0;
  }
  for (const json& cyc : cycles) {
    std::cout << "cycle";
    for (int v : cyc["vertices"]) std::cout << " " << v;
    std::cout << " weights";
    for (int w : cyc["weights"]) std::cout << " " << w;
    std::cout << " " << cyc["class"].get<std::string>();
    if (!cyc["oriented"].get<bool>()) std::cout << " (not oriented)";
    std::cout << "\n";
    if (cyc.contains("rotations")) {
      for (const json& r : cyc["rotations"]) {
        std::cout << "  from " << r["start"] << ": t = "
                  << (r["t"].is_null() ? "unsupported" : r["t"].get<std::string>()) << ", m = "
                  << (r["m"].is_null() ? "none" : std::to_string(r["m"].get<int>())) << "\n";
      }
    }
  }
  return 0;
}

int cmd_enumerate(const Config& c) {
  DiagramPtr g = load_diagram(c, read_file(c.input));
  OptionsPtr o = make_options(c);
  char* s = nullptr;
  check(am_enumerate(g.get(), o.get(), &s));
  const json census = json::parse(take(s));
  if (c.format != "text") {
    print_json(census);
    return 0;
  }
  for (const json& m : census["members"]) {
    std::cout << m["signature"].get<std::string>() << " order "
              << (m["coxeter_order"].is_null() ? "capped" : m["coxeter_order"].dump());
    for (const auto& [cls, count] : m["cycles"].items()) std::cout << " " << cls << "=" << count;
    std::cout << "\n";
  }
  std::cout << "class size " << census["size"] << ", Coxeter order "
            << (census["orders_agree"].get<bool>() ? census["coxeter_order"].dump() : "differs")
            << "\n";
  return 0;
}

int exit_code(am_verdict v) { return static_cast<int>(v); }

am_verdict worse(am_verdict a, am_verdict b) {
  if (a == AM_FAIL || b == AM_FAIL) return AM_FAIL;
  if (a == AM_INCONCLUSIVE || b == AM_INCONCLUSIVE) return AM_INCONCLUSIVE;
  return AM_PASS;
}

int cmd_verify(const Config& c) {
  const std::string text = read_file(c.input);
  OptionsPtr o = make_options(c);
  const bool is_map = json::parse(text).contains("images");
  std::vector<ReportPtr> reports;
  json fuzz = json::array();

  if (is_map) {
    am_report* r = nullptr;
    check(am_verify_map_json(text.c_str(), o.get(), &r));
    reports.emplace_back(r);
  } else {
    if (c.vertices.empty() && !c.all_vertices) throw Failure{"verify needs -k or --all-vertices"};
    DiagramPtr seed = load_diagram(c, text);
    ClassMembers members;
    std::vector<const am_diagram*> targets{seed.get()};
    if (c.whole_class) {
      check(am_mutation_class(seed.get(), 100000, &members.items, &members.count));
      targets.assign(members.items, members.items + members.count);
    }
    for (const am_diagram* g : targets) {
      std::vector<int> ks = c.vertices;
      if (c.all_vertices) {
        ks.clear();
        for (int k = 1; k <= am_diagram_size(g); ++k) ks.push_back(k);
      }
      for (int k : ks) {
        am_report* r = nullptr;
        check(am_verify_mutation(g, k, o.get(), &r));
        reports.emplace_back(r);
      }
      if (c.fuzz > 0) {
        char* s = nullptr;
        check(am_fuzz_soundness(g, o.get(), c.seed, c.fuzz, &s));
        json f = json::parse(take(s));
        char* sig = nullptr;
        check(am_diagram_to_string(g, AM_FORMAT_TEXT, &sig));
        f["diagram"] = take(sig);
        fuzz.push_back(f);
      }
    }
  }

  am_verdict overall = AM_PASS;
  json out = {{"reports", json::array()}};
  for (const ReportPtr& r : reports) {
    overall = worse(overall, am_report_verdict(r.get()));
    char* s = nullptr;
    check(am_report_to_string(r.get(), c.format == "text" ? AM_FORMAT_TEXT : AM_FORMAT_JSON, &s));
    const std::string line = take(s);
    if (c.format == "text") {
      std::cout << line << "\n";
    } else {
      out["reports"].push_back(json::parse(line));
    }
  }
  for (const json& f : fuzz) {
    if (f["violations"].get<std::size_t>() > 0) overall = AM_FAIL;
  }
  const char* verdict = overall == AM_PASS ? "PASS" : overall == AM_FAIL ? "FAIL" : "INCONCLUSIVE";
  if (c.format == "text") {
    for (const json& f : fuzz) {
      std::cout << "fuzz " << f["diagram"].get<std::string>() << " seed " << f["seed"] << ": "
                << f["words"] << " words, " << f["quotient_trivial"] << " trivial in the quotient, "
                << f["certified"] << " certified, " << f["violations"] << " violations\n";
    }
    std::cout << "verdict " << verdict << "\n";
  } else {
    if (!fuzz.empty()) out["fuzz"] = fuzz;
    out["verdict"] = verdict;
    print_json(out);
  }
  return exit_code(overall);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutation of diagrams of finite type and their Artin groups"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&](CLI::App* sub, bool formats_dot) {
    sub->add_option("input", c.input, "Diagram or map JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--mode", c.mode, "finite or affine")
        ->check(CLI::IsMember({"finite", "affine"}));
    std::vector<std::string> formats{"json", "text"};
    if (formats_dot) formats.push_back("dot");
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
  };
  auto add_presentation = [&](CLI::App* sub) {
    sub->add_flag("--minimal-t3", c.minimal_t3, "One cycle relator per chordless cycle");
    sub->add_option("--patterns", c.patterns, "T4 pattern file (affine mode)")
        ->check(CLI::ExistingFile);
  };
  auto add_budgets = [&](CLI::App* sub) {
    sub->add_option("--budget-nodes", c.budget_nodes, "Prover node budget per word")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget-len", c.budget_len, "Prover extra length over the word")
        ->check(CLI::PositiveNumber);
    sub->add_option("--coset-cap", c.coset_cap, "Coset enumeration cap")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* mutate = app.add_subcommand("mutate", "Mutate at the given vertices in order");
  add_common(mutate, true);
  mutate->add_option("-k,--vertex", c.vertices, "Vertex (repeatable, 1-based)")
      ->required()
      ->delimiter(',');

  CLI::App* opposite = app.add_subcommand("opposite", "Reverse every arrow");
  add_common(opposite, true);

  CLI::App* present = app.add_subcommand("present", "Print a group presentation");
  add_common(present, false);
  add_presentation(present);
  present->add_option("--kind", c.kind, "artin or coxeter")
      ->check(CLI::IsMember({"artin", "coxeter"}));

  CLI::App* cycles = app.add_subcommand("cycles", "List chordless cycles");
  add_common(cycles, false);

  CLI::App* enumerate = app.add_subcommand("enumerate", "Mutation class census");
  add_common(enumerate, false);
  add_budgets(enumerate);

  CLI::App* verify = app.add_subcommand("verify", "Verify mutation invariance or a map file");
  add_common(verify, false);
  add_presentation(verify);
  add_budgets(verify);
  verify->add_option("-k,--vertex", c.vertices, "Vertex (repeatable, 1-based)")->delimiter(',');
  verify->add_flag("--all-vertices", c.all_vertices, "Every vertex");
  verify->add_flag("--class", c.whole_class, "Every member of the mutation class");
  verify->add_option("--fuzz", c.fuzz, "Random soundness words per diagram");
  verify->add_option("--seed", c.seed, "Seed for --fuzz");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (*mutate) return cmd_mutate(c);
    if (*opposite) return cmd_opposite(c);
    if (*present) return cmd_present(c);
    if (*cycles) return cmd_cycles(c);
    if (*enumerate) return cmd_enumerate(c);
    if (*verify) return cmd_verify(c);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitError;
  } catch (const json::exception& e) {
    std::cerr << "error: invalid JSON input: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
