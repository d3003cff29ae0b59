#pragma once

#include <string>
#include <vector>

#include "artinmut/diagram.hpp"
#include "artinmut/mapping.hpp"
#include "artinmut/presentation.hpp"
#include "artinmut/verifier.hpp"
#include "json.hpp"

// JSON, text and DOT forms. Every vertex and generator index in these forms
// is 1-based. Malformed input raises Error(Parse).
namespace artinmut::io {

using json = nlohmann::ordered_json;

// {"n": n, "edges": [[i, j, w], ...]} or {"B": [[...], ...]}.
Diagram diagram_from_json(const json& j, Mode mode = Mode::Finite);
json diagram_to_json(const Diagram& g);
std::string diagram_to_dot(const Diagram& g);

// [[g, 1], [g, -1], ...]
Word word_from_json(const json& j);
json word_to_json(const Word& w);

json presentation_to_json(const Presentation& p);
// One relator per line in "g1 g2 G1" form.
std::string presentation_to_text(const Presentation& p);

json map_to_json(const GroupMap& m);
// {"label", "source": diagram, "target": diagram, "images": [word, ...]};
// both sides get the Artin presentation built with `opts`.
GroupMap map_from_json(const json& j, const PresentationOptions& opts = {});

// {"patterns": [{"name", "shape": diagram, "equations": [[lhs, rhs], ...]}
// or {"name", "shape": diagram, "row": r, "n": n}]}; words are in text form.
std::vector<T4Pattern> patterns_from_json(const json& j);

json cycles_to_json(const std::vector<ChordlessCycle>& cycles, Mode mode);

json certificate_to_json(const ProofCertificate& c);
json report_to_json(const HomomorphismReport& r);
json report_to_json(const InvarianceReport& r);
// One line: signature, vertex, verdict and per-map certified counts.
std::string report_summary(const InvarianceReport& r);
std::string report_summary(const HomomorphismReport& r);

// Parses text, converting library exceptions to Error(Parse).
json parse(const std::string& text);

}  // namespace artinmut::io
