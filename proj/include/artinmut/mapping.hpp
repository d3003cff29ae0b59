#pragma once

#include <string>
#include <vector>

#include "artinmut/diagram.hpp"
#include "artinmut/presentation.hpp"
#include "artinmut/word.hpp"

namespace artinmut {

// How the Artin presentation of a diagram is built: finite (T2, T3) or
// affine (T2 without infinite pairs, affine T3, T4 from patterns).
struct PresentationOptions {
  Mode mode = Mode::Finite;
  bool minimal_t3 = false;
  std::vector<T4Pattern> patterns;
};

Presentation build_artin(const Diagram& g, const PresentationOptions& opts = {});

// Homomorphism given by one target word per source generator.
struct GroupMap {
  std::string label;
  Presentation source;
  Presentation target;
  std::vector<Word> images;
  // For a composite, the factors in application order; empty otherwise.
  std::vector<GroupMap> parts;

  // Substitutes images letter by letter and reduces. Throws AlphabetMismatch
  // for letters outside the source alphabet.
  Word transport(const Word& w) const;
};

// Checks the image count and that every image lies in the target alphabet.
void validate_map(const GroupMap& m);

// phi(G, k): A_{mu_k(G)} -> A_G, r_i -> s_k s_i s_k^-1 if G has an arrow
// i -> k, r_i -> s_i otherwise.
GroupMap phi(const Diagram& g, int k, const PresentationOptions& opts = {});
// delta(G): A_G -> A_{G^op}, s_i -> q_i^-1.
GroupMap delta(const Diagram& g, const PresentationOptions& opts = {});
// psi(G, k) = Delta' o phi_op o Delta : A_G -> A_{mu_k(G)}, where
// phi_op = phi(mu_k(G^op), k) and Delta' = delta(mu_k(G)^op).
GroupMap psi(const Diagram& g, int k, const PresentationOptions& opts = {});

// second o first. Throws AlphabetMismatch unless first.target and
// second.source share an alphabet.
GroupMap compose(const GroupMap& first, const GroupMap& second);

}  // namespace artinmut
