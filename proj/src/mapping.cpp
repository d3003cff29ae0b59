#include "artinmut/mapping.hpp"

#include "artinmut/error.hpp"

namespace artinmut {

Presentation build_artin(const Diagram& g, const PresentationOptions& opts) {
  if (opts.mode == Mode::Affine) return affine_artin_presentation(g, opts.patterns);
  return artin_presentation(g, opts.minimal_t3);
}

Word GroupMap::transport(const Word& w) const {
  Word out;
  for (Letter l : w) {
    if (l.gen < 0 || l.gen >= static_cast<int>(images.size())) {
      throw Error(ErrorCode::AlphabetMismatch,
                  "map '" + label + "': generator " + std::to_string(l.gen + 1) +
                      " is not in the source alphabet");
    }
    out *= l.sign > 0 ? images[static_cast<std::size_t>(l.gen)]
                      : images[static_cast<std::size_t>(l.gen)].inverse();
  }
  return out;
}

void validate_map(const GroupMap& m) {
  if (static_cast<int>(m.images.size()) != m.source.n_generators) {
    throw Error(ErrorCode::AlphabetMismatch,
                "map '" + m.label + "' has " + std::to_string(m.images.size()) +
                    " images for " + std::to_string(m.source.n_generators) + " generators");
  }
  for (const Word& w : m.images) {
    if (w.max_generator() >= m.target.n_generators) {
      throw Error(ErrorCode::AlphabetMismatch,
                  "map '" + m.label + "' has an image outside the target alphabet");
    }
  }
}

GroupMap phi(const Diagram& g, int k, const PresentationOptions& opts) {
  if (k < 0 || k >= g.size()) throw Error(ErrorCode::OutOfRange, "phi: vertex out of range");
  GroupMap m;
  m.label = "Phi(" + std::to_string(k + 1) + ")";
  m.source = build_artin(mutate_diagram(g, k), opts);
  m.target = build_artin(g, opts);
  const Word sk = Word::generator(k);
  for (int i = 0; i < g.size(); ++i) {
    Word si = Word::generator(i);
    m.images.push_back(g.weight(i, k) > 0 ? si.conjugated_by(sk) : si);
  }
  return m;
}

GroupMap delta(const Diagram& g, const PresentationOptions& opts) {
  GroupMap m;
  m.label = "Delta";
  m.source = build_artin(g, opts);
  m.target = build_artin(opposite(g), opts);
  for (int i = 0; i < g.size(); ++i) m.images.push_back(Word::generator(i, -1));
  return m;
}

GroupMap compose(const GroupMap& first, const GroupMap& second) {
  if (first.target.alphabet != second.source.alphabet) {
    throw Error(ErrorCode::AlphabetMismatch,
                "cannot compose '" + second.label + "' after '" + first.label +
                    "': alphabets differ");
  }
  GroupMap m;
  m.label = second.label + "*" + first.label;
  m.source = first.source;
  m.target = second.target;
  for (const Word& w : first.images) m.images.push_back(second.transport(w));
  auto flatten = [&](const GroupMap& f) {
    if (f.parts.empty()) {
      m.parts.push_back(f);
    } else {
      m.parts.insert(m.parts.end(), f.parts.begin(), f.parts.end());
    }
  };
  flatten(first);
  flatten(second);
  return m;
}

GroupMap psi(const Diagram& g, int k, const PresentationOptions& opts) {
  const Diagram op_mutated = mutate_diagram(opposite(g), k);
  GroupMap d = delta(g, opts);
  GroupMap phi_op = phi(op_mutated, k, opts);
  phi_op.label = "PhiOp(" + std::to_string(k + 1) + ")";
  GroupMap d_prime = delta(op_mutated, opts);
  d_prime.label = "DeltaPrime";
  GroupMap m = compose(compose(d, phi_op), d_prime);
  m.label = "Psi(" + std::to_string(k + 1) + ")";
  return m;
}

}  // namespace artinmut
