#include "artinmut/io.hpp"

#include <sstream>

#include "artinmut/error.hpp"

namespace artinmut::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) parse_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

Word text_word(const json& j) {
  if (!j.is_string()) parse_error("pattern words must be strings");
  try {
    return Word::from_text(j.get<std::string>());
  } catch (const Error& e) {
    parse_error(e.what());
  }
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

std::size_t certified_count(const HomomorphismReport& r) {
  std::size_t n = 0;
  for (const RelatorRecord& rec : r.records) n += rec.status == RelatorStatus::Certified;
  return n;
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
}

Diagram diagram_from_json(const json& j, Mode mode) {
  if (!j.is_object()) parse_error("a diagram must be a JSON object");
  if (j.contains("B")) {
    const json& b = j.at("B");
    if (!b.is_array()) parse_error("'B' must be an array of rows");
    std::vector<std::vector<int>> rows;
    for (const json& row : b) {
      if (!row.is_array()) parse_error("'B' must be an array of rows");
      std::vector<int> r;
      for (const json& x : row) r.push_back(as_int(x, "matrix entry"));
      rows.push_back(std::move(r));
    }
    const Diagram g = diagram_from_matrix(ExchangeMatrix(rows));
    // Rebuilt so the mode's weight bound applies to matrices too.
    return Diagram(g.size(), g.edges(), mode);
  }
  const int n = as_int(field(j, "n"), "'n'");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) parse_error("'edges' must be an array");
    for (const json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) parse_error("an edge is [source, target, weight]");
      edges.push_back({as_int(e[0], "edge source") - 1, as_int(e[1], "edge target") - 1,
                       as_int(e[2], "edge weight")});
    }
  }
  return Diagram(n, edges, mode);
}

json diagram_to_json(const Diagram& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.source + 1, e.target + 1, e.weight});
  return {{"n", g.size()}, {"edges", edges}};
}

std::string diagram_to_dot(const Diagram& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (int v = 0; v < g.size(); ++v) out << "  " << v + 1 << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.source + 1 << " -> " << e.target + 1;
    if (e.weight != 1) out << " [label=\"" << e.weight << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

Word word_from_json(const json& j) {
  if (!j.is_array()) parse_error("a word is an array of [generator, sign] pairs");
  Word w;
  for (const json& l : j) {
    if (!l.is_array() || l.size() != 2) parse_error("a letter is [generator, sign]");
    const int g = as_int(l[0], "generator");
    const int s = as_int(l[1], "sign");
    if (g < 1) parse_error("generators are numbered from 1");
    if (s != 1 && s != -1) parse_error("a letter sign is 1 or -1");
    w.push_back({g - 1, s});
  }
  return w;
}

json word_to_json(const Word& w) {
  json out = json::array();
  for (Letter l : w) out.push_back({l.gen + 1, l.sign});
  return out;
}

json presentation_to_json(const Presentation& p) {
  json relators = json::array();
  for (const Relator& r : p.relators) {
    relators.push_back({{"word", word_to_json(r.word)},
                        {"text", r.word.to_text()},
                        {"family", to_string(r.family)},
                        {"provenance", r.provenance_text()}});
  }
  return {{"generators", p.n_generators},
          {"kind", to_string(p.kind)},
          {"alphabet", p.alphabet},
          {"relators", relators}};
}

std::string presentation_to_text(const Presentation& p) {
  std::string out;
  for (const Relator& r : p.relators) out += r.word.to_text() + "\n";
  return out;
}

json map_to_json(const GroupMap& m) {
  json images = json::array();
  for (const Word& w : m.images) images.push_back(word_to_json(w));
  json out = {{"label", m.label},
              {"source", m.source.alphabet},
              {"target", m.target.alphabet},
              {"images", images}};
  if (!m.parts.empty()) {
    json parts = json::array();
    for (const GroupMap& f : m.parts) parts.push_back(map_to_json(f));
    out["parts"] = parts;
  }
  return out;
}

GroupMap map_from_json(const json& j, const PresentationOptions& opts) {
  GroupMap m;
  m.label = j.is_object() && j.contains("label") && j.at("label").is_string()
                ? j.at("label").get<std::string>()
                : "Map";
  m.source = build_artin(diagram_from_json(field(j, "source"), opts.mode), opts);
  m.target = build_artin(diagram_from_json(field(j, "target"), opts.mode), opts);
  const json& images = field(j, "images");
  if (!images.is_array()) parse_error("'images' must be an array of words");
  for (const json& w : images) m.images.push_back(word_from_json(w));
  validate_map(m);
  return m;
}

std::vector<T4Pattern> patterns_from_json(const json& j) {
  const json& list = field(j, "patterns");
  if (!list.is_array()) parse_error("'patterns' must be an array");
  std::vector<T4Pattern> out;
  for (const json& pj : list) {
    T4Pattern p;
    p.name = pj.contains("name") && pj.at("name").is_string() ? pj.at("name").get<std::string>()
                                                              : "pattern";
    p.shape = diagram_from_json(field(pj, "shape"), Mode::Affine);
    if (pj.contains("row")) {
      const int row = as_int(pj.at("row"), "'row'");
      const int n = pj.contains("n") ? as_int(pj.at("n"), "'n'") : 0;
      if (t4_template_vertices(row, n) != p.shape.size()) {
        parse_error("pattern '" + p.name + "': template row " + std::to_string(row) + " needs " +
                    std::to_string(t4_template_vertices(row, n)) + " vertices");
      }
      p.equations = t4_template(row, n);
    } else {
      const json& eqs = field(pj, "equations");
      if (!eqs.is_array()) parse_error("'equations' must be an array");
      for (const json& e : eqs) {
        if (!e.is_array() || e.size() != 2) parse_error("an equation is [lhs, rhs]");
        p.equations.emplace_back(text_word(e[0]), text_word(e[1]));
      }
    }
    for (const auto& [lhs, rhs] : p.equations) {
      if (std::max(lhs.max_generator(), rhs.max_generator()) >= p.shape.size()) {
        parse_error("pattern '" + p.name + "' uses a vertex outside its shape");
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

json cycles_to_json(const std::vector<ChordlessCycle>& cycles, Mode mode) {
  json out = json::array();
  for (const ChordlessCycle& c : cycles) {
    json vs = json::array();
    for (int v : c.vertices) vs.push_back(v + 1);
    json cj = {{"vertices", vs},
               {"weights", c.weights},
               {"oriented", c.cyclically_oriented},
               {"class", to_string(c.cls)}};
    if (mode == Mode::Affine && c.cyclically_oriented) {
      json rot = json::array();
      for (std::size_t l = 0; l < c.length(); ++l) {
        json t = nullptr, m = nullptr;
        try {
          const Radical v = affine_t_value(c, l);
          t = v.to_text();
          if (v.is_integer() && v.a >= 0 && v.a <= 3) m = affine_m_value(c, l);
        } catch (const Error&) {
          // Weights outside Q(sqrt2, sqrt3) leave t and m null.
        }
        rot.push_back({{"start", c.vertex(l) + 1}, {"t", t}, {"m", m}});
      }
      cj["rotations"] = rot;
    }
    out.push_back(std::move(cj));
  }
  return out;
}

json certificate_to_json(const ProofCertificate& c) {
  json steps = json::array();
  for (const ProofStep& s : c.steps) {
    steps.push_back({{"position", s.position},
                     {"relator", s.relator},
                     {"inverse", s.inverse},
                     {"offset", s.offset}});
  }
  return {{"start", word_to_json(c.start)}, {"steps", steps}};
}

json report_to_json(const HomomorphismReport& r) {
  json records = json::array();
  for (const RelatorRecord& rec : r.records) {
    records.push_back({{"index", rec.index},
                       {"family", to_string(rec.relator.family)},
                       {"provenance", rec.relator.provenance_text()},
                       {"relator", rec.relator.word.to_text()},
                       {"image", rec.image.to_text()},
                       {"coxeter_trivial", optional_bool(rec.coxeter_trivial)},
                       {"abelian_trivial", rec.abelian_trivial},
                       {"status", to_string(rec.status)},
                       {"nodes", rec.nodes},
                       {"certificate", rec.certificate ? certificate_to_json(*rec.certificate)
                                                       : json(nullptr)}});
  }
  return {{"label", r.label},
          {"verdict", to_string(r.verdict)},
          {"quotient", r.coset_status == CosetStatus::Complete ? "complete" : "capped"},
          {"quotient_order", r.coset_status == CosetStatus::Complete ? json(r.quotient_order)
                                                                     : json(nullptr)},
          {"certified", certified_count(r)},
          {"records", records}};
}

json report_to_json(const InvarianceReport& r) {
  return {{"diagram", diagram_to_json(r.diagram)},
          {"k", r.k + 1},
          {"verdict", to_string(r.verdict)},
          {"phi", report_to_json(r.phi)},
          {"psi", report_to_json(r.psi)},
          {"psi_phi_identity", r.psi_phi_identity},
          {"phi_psi_identity", r.phi_psi_identity}};
}

std::string report_summary(const HomomorphismReport& r) {
  std::ostringstream out;
  out << r.label << " " << to_string(r.verdict) << " " << certified_count(r) << "/"
      << r.records.size() << " certified";
  return out.str();
}

std::string report_summary(const InvarianceReport& r) {
  std::ostringstream out;
  out << diagram_signature(r.diagram) << " k=" << r.k + 1 << " " << to_string(r.verdict)
      << " phi " << certified_count(r.phi) << "/" << r.phi.records.size() << " psi "
      << certified_count(r.psi) << "/" << r.psi.records.size() << " identities "
      << (r.psi_phi_identity && r.phi_psi_identity ? "ok" : "broken");
  return out.str();
}

}  // namespace artinmut::io
