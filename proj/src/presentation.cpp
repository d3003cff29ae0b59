#include "artinmut/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "artinmut/error.hpp"

namespace artinmut {

namespace {

constexpr std::pair<Family, const char*> kFamilyNames[] = {
    {Family::R1, "R1"}, {Family::R2, "R2"},   {Family::R3a, "R3a"},
    {Family::R3b, "R3b"}, {Family::T2, "T2"}, {Family::T3, "T3"},
    {Family::T4, "T4"}, {Family::AffineT3, "AffineT3"},
};

std::string tuple_text(const std::vector<int>& vs) {
  std::string out = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i] + 1);
  }
  return out + ")";
}

std::vector<int> rotated_tuple(const ChordlessCycle& c, std::size_t a) {
  std::vector<int> out;
  for (std::size_t i = 0; i < c.length(); ++i) out.push_back(c.vertex(a + i));
  return out;
}

std::vector<int> m_table(const Diagram& g, Mode mode) {
  const int n = g.size();
  std::vector<int> m(static_cast<std::size_t>(n * n), 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) m[static_cast<std::size_t>(i * n + j)] = m_value(g, i, j, mode);
    }
  }
  return m;
}

Relator make_relator(Word w, Family f, std::vector<int> provenance, std::string note = {}) {
  if (w.empty()) throw Error(ErrorCode::Internal, "relator reduced to the empty word");
  return Relator{std::move(w), f, std::move(provenance), std::move(note)};
}

void require_finite_cycle(const ChordlessCycle& c) {
  if (c.cls == CycleClass::AffineOther) {
    throw Error(ErrorCode::NotFiniteType,
                "chordless cycle " + tuple_text(c.vertices) +
                    " is not one of the finite-type cycle classes");
  }
}

}  // namespace

const char* to_string(Family f) noexcept {
  for (auto [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view s) {
  for (auto [fam, name] : kFamilyNames) {
    if (s == name) return fam;
  }
  return std::nullopt;
}

const char* to_string(PresentationKind k) noexcept {
  switch (k) {
    case PresentationKind::Coxeter: return "coxeter";
    case PresentationKind::Artin: return "artin";
    case PresentationKind::AffineArtin: return "affine-artin";
    case PresentationKind::Custom: return "custom";
  }
  return "?";
}

int m_value(const Diagram& g, int i, int j, Mode mode) {
  if (i < 0 || j < 0 || i >= g.size() || j >= g.size()) {
    throw Error(ErrorCode::OutOfRange, "m_value: vertex out of range");
  }
  if (i == j) throw Error(ErrorCode::InvalidArgument, "m_value: i = j");
  switch (g.undirected_weight(i, j)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default:
      if (mode == Mode::Affine) return kInfinity;
      throw Error(ErrorCode::NotFiniteType, "edge weight above 3 outside affine mode");
  }
}

Word Relator::key() const {
  return std::min(word.canonical_rotation(), word.inverse().canonical_rotation());
}

std::string Relator::provenance_text() const {
  std::string out;
  switch (family) {
    case Family::R1: out = "generator " + tuple_text(provenance); break;
    case Family::R2:
    case Family::T2: out = "pair " + tuple_text(provenance); break;
    case Family::T4: out = "match " + tuple_text(provenance); break;
    default: out = "cycle " + tuple_text(provenance); break;
  }
  if (!note.empty()) out += " " + note;
  return out;
}

bool relator_less(const Relator& a, const Relator& b) {
  if (a.family != b.family) return a.family < b.family;
  if (a.provenance != b.provenance) return a.provenance < b.provenance;
  if (a.note != b.note) return a.note < b.note;
  return a.key() < b.key();
}

std::vector<Word> Presentation::relator_words() const {
  std::vector<Word> out;
  out.reserve(relators.size());
  for (const Relator& r : relators) out.push_back(r.word);
  return out;
}

void Presentation::normalize() {
  std::stable_sort(relators.begin(), relators.end(), relator_less);
  std::set<std::pair<Family, Word>> seen;
  std::vector<Relator> kept;
  for (Relator& r : relators) {
    if (seen.insert({r.family, r.key()}).second) kept.push_back(std::move(r));
  }
  relators = std::move(kept);
}

Presentation Presentation::with_involutions() const {
  Presentation out = *this;
  for (int i = 0; i < n_generators; ++i) {
    out.relators.push_back(make_relator(Word{gen(i), gen(i)}, Family::R1, {i}));
  }
  out.kind = PresentationKind::Custom;
  out.alphabet = alphabet + "+R1";
  out.normalize();
  return out;
}

std::string diagram_signature(const Diagram& g) {
  std::ostringstream os;
  os << "n=" << g.size();
  for (const Edge& e : g.edges()) {
    os << ';' << e.source + 1 << '>' << e.target + 1 << ':' << e.weight;
  }
  return os.str();
}

std::optional<Relator> braid_relator(int i, int j, int m) {
  if (m == kInfinity) return std::nullopt;
  if (m != 2 && m != 3 && m != 4 && m != 6) {
    throw Error(ErrorCode::InvalidArgument, "braid order must be 2, 3, 4 or 6");
  }
  if (i == j) throw Error(ErrorCode::InvalidArgument, "braid relator needs i != j");
  Word si = Word::generator(i);
  Word sj = Word::generator(j);
  Word w = alternating(si, sj, m) * alternating(sj, si, m).inverse();
  return make_relator(std::move(w), Family::T2, {std::min(i, j), std::max(i, j)});
}

Word p_word(const ChordlessCycle& c, std::size_t a) {
  const std::size_t d = c.length();
  if (d < 3) throw Error(ErrorCode::InvalidArgument, "cycle of length below 3");
  Word w;
  for (std::size_t j = 1; j + 1 < d; ++j) w.push_back(inv(c.vertex(a + j)));
  w.push_back(gen(c.vertex(a + d - 1)));
  for (std::size_t j = d - 2; j >= 1; --j) w.push_back(gen(c.vertex(a + j)));
  return w;
}

Relator t_relator(const ChordlessCycle& c, std::size_t a) {
  Word s = Word::generator(c.vertex(a));
  return make_relator(commutator(s, p_word(c, a)), Family::T3, rotated_tuple(c, a));
}

Word r_word(const ChordlessCycle& c, std::size_t a) {
  const std::size_t d = c.length();
  Word w;
  for (std::size_t j = 0; j < d; ++j) w.push_back(gen(c.vertex(a + j)));
  for (std::size_t j = d - 2; j >= 1; --j) w.push_back(gen(c.vertex(a + j)));
  return w;
}

bool t3_applies(const ChordlessCycle& c, std::size_t a) {
  if (!c.cyclically_oriented) return false;
  const auto& ws = c.weights;
  if (std::all_of(ws.begin(), ws.end(), [](int w) { return w == 1; })) return true;
  if (!std::all_of(ws.begin(), ws.end(), [](int w) { return w == 1 || w == 2; })) {
    return false;
  }
  return c.weight_at(a + c.length() - 1) == 2;
}

Presentation artin_presentation(const Diagram& g, bool minimal_t3) {
  Presentation p;
  p.n_generators = g.size();
  p.kind = PresentationKind::Artin;
  p.m = m_table(g, Mode::Finite);
  p.alphabet = "artin:" + diagram_signature(g);
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      p.relators.push_back(*braid_relator(i, j, p.m_at(i, j)));
    }
  }
  for (const ChordlessCycle& c : chordless_cycles(g, Mode::Finite)) {
    require_finite_cycle(c);
    for (std::size_t a = 0; a < c.length(); ++a) {
      if (!t3_applies(c, a)) continue;
      p.relators.push_back(t_relator(c, a));
      if (minimal_t3) break;
    }
  }
  p.normalize();
  return p;
}

Presentation coxeter_presentation(const Diagram& g) {
  Presentation p;
  p.n_generators = g.size();
  p.kind = PresentationKind::Coxeter;
  p.m = m_table(g, Mode::Finite);
  p.alphabet = "coxeter:" + diagram_signature(g);
  for (int i = 0; i < g.size(); ++i) {
    p.relators.push_back(make_relator(Word{gen(i), gen(i)}, Family::R1, {i}));
    for (int j = i + 1; j < g.size(); ++j) {
      Word w = Word{gen(i), gen(j)}.pow(p.m_at(i, j));
      p.relators.push_back(make_relator(std::move(w), Family::R2, {i, j}));
    }
  }
  for (const ChordlessCycle& c : chordless_cycles(g, Mode::Finite)) {
    require_finite_cycle(c);
    const bool all_one = c.cls == CycleClass::AllWeightOne;
    for (std::size_t a = 0; a < c.length(); ++a) {
      // (R3b) exponent uses the weight of the edge i_{a-1} -> i_a.
      const int k = all_one ? 2 : 4 - c.weight_at(a + c.length() - 1);
      p.relators.push_back(make_relator(r_word(c, a).pow(k),
                                        all_one ? Family::R3a : Family::R3b,
                                        rotated_tuple(c, a)));
    }
  }
  p.normalize();
  return p;
}

// ---------------------------------------------------------------------------
// Affine extension

Radical Radical::sqrt_of(long long w) {
  if (w < 0) throw Error(ErrorCode::UnsupportedCycle, "square root of a negative weight");
  long long s = 1;
  long long f = w;
  for (long long q = 2; q * q <= f; ++q) {
    while (f % (q * q) == 0) {
      f /= q * q;
      s *= q;
    }
  }
  switch (f) {
    case 0: return {};
    case 1: return {s, 0, 0, 0};
    case 2: return {0, s, 0, 0};
    case 3: return {0, 0, s, 0};
    case 6: return {0, 0, 0, s};
    default:
      throw Error(ErrorCode::UnsupportedCycle,
                  "sqrt(" + std::to_string(w) + ") lies outside Z[sqrt2, sqrt3]");
  }
}

Radical Radical::operator+(const Radical& o) const {
  return {a + o.a, b + o.b, c + o.c, d + o.d};
}

Radical Radical::operator-(const Radical& o) const {
  return {a - o.a, b - o.b, c - o.c, d - o.d};
}

Radical Radical::operator*(const Radical& o) const {
  // sqrt2 sqrt3 = sqrt6, sqrt2 sqrt6 = 2 sqrt3, sqrt3 sqrt6 = 3 sqrt2.
  return {a * o.a + 2 * b * o.b + 3 * c * o.c + 6 * d * o.d,
          a * o.b + b * o.a + 3 * (c * o.d + d * o.c),
          a * o.c + c * o.a + 2 * (b * o.d + d * o.b),
          a * o.d + d * o.a + b * o.c + c * o.b};
}

std::string Radical::to_text() const {
  std::ostringstream os;
  bool any = false;
  auto term = [&](long long k, const char* unit) {
    if (k == 0) return;
    if (any) os << (k < 0 ? " - " : " + ");
    else if (k < 0) os << '-';
    long long mag = k < 0 ? -k : k;
    if (*unit == '\0' || mag != 1) os << mag;
    os << unit;
    any = true;
  };
  term(a, "");
  term(b, "sqrt2");
  term(c, "sqrt3");
  term(d, "sqrt6");
  if (!any) os << '0';
  return os.str();
}

Radical affine_t_value(const ChordlessCycle& c, std::size_t l) {
  const std::size_t d = c.length();
  Radical prod{1, 0, 0, 0};
  for (std::size_t j = l; j + 1 < l + d; ++j) prod = prod * Radical::sqrt_of(c.weight_at(j));
  Radical diff = prod - Radical::sqrt_of(c.weight_at(l + d - 1));
  return diff * diff;
}

int affine_m_value(const ChordlessCycle& c, std::size_t l) {
  Radical t = affine_t_value(c, l);
  if (t.is_integer()) {
    switch (t.a) {
      case 0: return 2;
      case 1: return 3;
      case 2: return 4;
      case 3: return 6;
      default: break;
    }
  }
  throw Error(ErrorCode::UnsupportedCycle,
              "t(l) = " + t.to_text() + " at position " + std::to_string(l) + " of cycle " +
                  tuple_text(c.vertices) + " has no braid order");
}

Relator affine_t3_relator(const ChordlessCycle& c, std::size_t l) {
  const int m = affine_m_value(c, l);
  Word s = Word::generator(c.vertex(l));
  Word p = p_word(c, l);
  Word w = alternating(s, p, m) * alternating(p, s, m).inverse();
  return make_relator(std::move(w), Family::AffineT3, rotated_tuple(c, l),
                      "m(l)=" + std::to_string(m));
}

namespace {

Word descending_inverses(int from, int to) {
  Word w;
  for (int v = from; v <= to; ++v) w.push_back(inv(v - 1));
  return w;
}

Word ascending_down(int from, int to) {
  Word w;
  for (int v = from; v >= to; --v) w.push_back(gen(v - 1));
  return w;
}

}  // namespace

int t4_template_vertices(int row, int n) {
  switch (row) {
    case 1:
    case 3: return 4;
    case 5: return 3;
    case 2:
    case 4:
      if (n < 3) throw Error(ErrorCode::InvalidArgument, "template row needs n >= 3");
      return n + 1;
    default: throw Error(ErrorCode::InvalidArgument, "template rows are 1..5");
  }
}

std::vector<std::pair<Word, Word>> t4_template(int row, int n) {
  auto W = [](const char* t) { return Word::from_text(t); };
  t4_template_vertices(row, n);
  switch (row) {
    case 1: return {{W("g2 g1 G2 G4 g3 g4"), W("G4 g3 g4 g2 g1 G2")}};
    case 3:
      return {{W("g2 G3 g4 g1 G4 g3"), W("G3 g4 g1 G4 g3 g2")},
              {W("g2 g1 G4 g3 g4 G1"), W("g1 G4 g3 g4 G1 g2")}};
    case 5:
      return {{W("g2 G1 g2 g3 G2 g1"), W("G1 g2 g3 G2 g1 g2")},
              {W("g1 g2 g3 g2 G3 G2"), W("g2 g3 g2 G3 G2 g1")}};
    case 2: {
      // X = s3^-1 ... sn^-1 s1 s_{n+1} s1^-1 sn ... s3; s2 X = X s2.
      Word x = descending_inverses(3, n) * Word{gen(0), gen(n), inv(0)} * ascending_down(n, 3);
      return {{Word::generator(1) * x, x * Word::generator(1)}};
    }
    default: {
      // X = s2^-1 ... s_{n-1}^-1 s_{n+1} sn s_{n+1}^-1 s_{n-1} ... s2; s1 X = X s1.
      Word x = descending_inverses(2, n - 1) * Word{gen(n), gen(n - 1), inv(n)} *
               ascending_down(n - 1, 2);
      return {{Word::generator(0) * x, x * Word::generator(0)}};
    }
  }
}

std::vector<std::vector<int>> induced_matches(const Diagram& g, const Diagram& shape) {
  const int n = g.size();
  const int k = shape.size();
  std::vector<std::vector<int>> out;
  if (k > n) return out;
  std::vector<int> map;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto extend = [&](auto&& self) -> void {
    const int p = static_cast<int>(map.size());
    if (p == k) {
      out.push_back(map);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int q = 0; q < p && ok; ++q) {
        ok = g.weight(map[q], v) == shape.weight(q, p) && g.weight(v, map[q]) == shape.weight(p, q);
      }
      if (!ok) continue;
      used[v] = 1;
      map.push_back(v);
      self(self);
      map.pop_back();
      used[v] = 0;
    }
  };
  extend(extend);
  return out;
}

Presentation affine_artin_presentation(const Diagram& g, const std::vector<T4Pattern>& patterns) {
  Presentation p;
  p.n_generators = g.size();
  p.kind = PresentationKind::AffineArtin;
  p.m = m_table(g, Mode::Affine);
  p.alphabet = "affine-artin:" + diagram_signature(g);
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      if (auto r = braid_relator(i, j, p.m_at(i, j))) p.relators.push_back(std::move(*r));
    }
  }
  for (const ChordlessCycle& c : chordless_cycles(g, Mode::Affine)) {
    if (!c.cyclically_oriented) continue;
    for (std::size_t l = 0; l < c.length(); ++l) p.relators.push_back(affine_t3_relator(c, l));
  }
  for (const T4Pattern& pat : patterns) {
    for (const auto& match : induced_matches(g, pat.shape)) {
      auto rename = [&](const Word& w) {
        Word out;
        for (Letter l : w) {
          if (l.gen >= static_cast<int>(match.size())) {
            throw Error(ErrorCode::InvalidArgument,
                        "pattern '" + pat.name + "' uses a generator beyond its shape");
          }
          out.push_back({match[l.gen], l.sign});
        }
        return out;
      };
      for (const auto& [lhs, rhs] : pat.equations) {
        Word w = rename(lhs) * rename(rhs).inverse();
        if (w.empty()) continue;
        p.relators.push_back(make_relator(std::move(w), Family::T4, match, pat.name));
      }
    }
  }
  p.normalize();
  return p;
}

}  // namespace artinmut
