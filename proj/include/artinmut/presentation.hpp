#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artinmut/diagram.hpp"
#include "artinmut/word.hpp"

namespace artinmut {

enum class Family { R1, R2, R3a, R3b, T2, T3, T4, AffineT3 };

const char* to_string(Family f) noexcept;
std::optional<Family> family_from_string(std::string_view s);

// m = infinity is stored as 0 so tables stay integral.
inline constexpr int kInfinity = 0;

// 2/3/4/6 for weight 0/1/2/3; kInfinity for heavier edges in affine mode.
int m_value(const Diagram& g, int i, int j, Mode mode = Mode::Finite);

struct Relator {
  Word word;  // as produced by the defining formula, freely reduced, nonempty
  Family family = Family::T2;
  std::vector<int> provenance;  // vertex pair or rotated cycle tuple, 0-based
  std::string note;             // extra provenance, e.g. the pattern name

  // Least cyclic rotation of the word or its inverse: equal keys mean the
  // same relation up to conjugation and inversion.
  Word key() const;
  std::string provenance_text() const;
};

// Ordering used everywhere relators are listed: family, provenance, key.
bool relator_less(const Relator& a, const Relator& b);

enum class PresentationKind { Coxeter, Artin, AffineArtin, Custom };

const char* to_string(PresentationKind k) noexcept;

struct Presentation {
  int n_generators = 0;
  PresentationKind kind = PresentationKind::Custom;
  // Row-major n x n table of m_ij; diagonal entries are 1.
  std::vector<int> m;
  std::vector<Relator> relators;
  // Identifies the alphabet: maps may only be composed along equal ids.
  std::string alphabet;

  int m_at(int i, int j) const {
    return m[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_generators) +
             static_cast<std::size_t>(j)];
  }
  std::vector<Word> relator_words() const;
  // Sorts by relator_less and drops relators with a repeated (family, key).
  void normalize();
  // Adds s_i^2 for every generator (the quotient onto the Coxeter group).
  Presentation with_involutions() const;
};

// Description of a diagram used as part of an alphabet id.
std::string diagram_signature(const Diagram& g);

// <s_i, s_j>^m (<s_j, s_i>^m)^-1; nullopt when m is infinite.
std::optional<Relator> braid_relator(int i, int j, int m);

// p(i_a, i_{a+1}) = s_{a+1}^-1 ... s_{a-2}^-1 s_{a-1} s_{a-2} ... s_{a+1}.
Word p_word(const ChordlessCycle& c, std::size_t a);
// t(i_a, i_{a+1}) = [s_{i_a}, p(i_a, i_{a+1})].
Relator t_relator(const ChordlessCycle& c, std::size_t a);
// r(i_a, i_{a+1}) = s_{i_a} s_{i_{a+1}} ... s_{i_{a+d-1}} s_{i_{a+d-2}} ... s_{i_{a+1}}.
Word r_word(const ChordlessCycle& c, std::size_t a);
// Whether the tuple rotated to start at a carries a (T3) relation: all
// weights 1, or all weights in {1,2} with the closing edge of weight 2.
bool t3_applies(const ChordlessCycle& c, std::size_t a);

Presentation artin_presentation(const Diagram& g, bool minimal_t3 = false);
Presentation coxeter_presentation(const Diagram& g);

// Exact element a + b sqrt2 + c sqrt3 + d sqrt6 of Z[sqrt2, sqrt3].
struct Radical {
  long long a = 0, b = 0, c = 0, d = 0;

  static Radical sqrt_of(long long w);  // throws UnsupportedCycle
  Radical operator+(const Radical& o) const;
  Radical operator-(const Radical& o) const;
  Radical operator*(const Radical& o) const;
  bool is_integer() const { return b == 0 && c == 0 && d == 0; }
  std::string to_text() const;
  friend bool operator==(const Radical&, const Radical&) = default;
};

// t(l) = (prod_{j=l}^{l+d-2} sqrt(w_j) - sqrt(w_{l+d-1}))^2 for an oriented cycle.
Radical affine_t_value(const ChordlessCycle& c, std::size_t l);
// 2/3/4/6 for t(l) = 0/1/2/3; UnsupportedCycle otherwise.
int affine_m_value(const ChordlessCycle& c, std::size_t l);
// <s, p>^m = <p, s>^m with s = s_{i_l}, p = p(i_l, i_{l+1}), m = m(l).
Relator affine_t3_relator(const ChordlessCycle& c, std::size_t l);

// A (T4) pattern: whenever `shape` occurs as an induced subdiagram, each
// equation lhs = rhs is added with pattern vertex v renamed to its image.
struct T4Pattern {
  std::string name;
  Diagram shape;
  std::vector<std::pair<Word, Word>> equations;
};

// The (T4) equations of the given table row over pattern vertices 1..; rows
// 2 and 4 take the parameter n (the pattern then has n + 1 vertices).
std::vector<std::pair<Word, Word>> t4_template(int row, int n = 0);
// Number of pattern vertices for a template row.
int t4_template_vertices(int row, int n = 0);

// Injective vertex maps under which `shape` is an induced subdiagram of g.
std::vector<std::vector<int>> induced_matches(const Diagram& g, const Diagram& shape);

Presentation affine_artin_presentation(const Diagram& g,
                                       const std::vector<T4Pattern>& patterns = {});

}  // namespace artinmut
