#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "artinmut/presentation.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace artinmut;
using testing_support::dia;
using testing_support::w;

namespace {

ChordlessCycle cycle_with_weights(const std::vector<int>& ws) {
  ChordlessCycle c;
  for (std::size_t i = 0; i < ws.size(); ++i) c.vertices.push_back(static_cast<int>(i));
  c.weights = ws;
  c.cyclically_oriented = true;
  c.cls = classify_cycle(ws, true);
  return c;
}

std::vector<const Relator*> of_family(const Presentation& p, Family f) {
  std::vector<const Relator*> out;
  for (const Relator& r : p.relators) {
    if (r.family == f) out.push_back(&r);
  }
  return out;
}

std::set<Word> keys(const Presentation& p) {
  std::set<Word> out;
  for (const Relator& r : p.relators) out.insert(r.key());
  return out;
}

}  // namespace

TEST_CASE("m_value") {
  Diagram g = dia(3, {{1, 2, 2}, {2, 3, 3}});
  CHECK(m_value(g, 0, 2) == 2);
  CHECK(m_value(g, 0, 1) == 4);
  CHECK(m_value(g, 2, 1) == 6);
  CHECK(m_value(dia(2, {{1, 2, 1}}), 1, 0) == 3);
  CHECK(m_value(dia(2, {{1, 2, 4}}, Mode::Affine), 0, 1, Mode::Affine) == kInfinity);
  CHECK_THROWS_AS(m_value(g, 1, 1), Error);
}

TEST_CASE("braid_relator") {
  CHECK(braid_relator(0, 1, 3)->word == w("g1 g2 g1 G2 G1 G2"));
  CHECK(braid_relator(0, 1, 4)->word == w("g1 g2 g1 g2 G1 G2 G1 G2"));
  CHECK(braid_relator(0, 1, 2)->word == w("g1 g2 G1 G2"));
  CHECK(braid_relator(0, 1, 6)->word.size() == 12);
  CHECK_FALSE(braid_relator(0, 1, kInfinity));
  CHECK_THROWS_AS(braid_relator(0, 1, 5), Error);
}

TEST_CASE("p_word and t_relator on the square") {
  auto c = chordless_cycles(testing_support::square()).at(0);
  CHECK(p_word(c, 0) == w("G2 G3 g4 g3 g2"));
  // The four (T3) relations printed for the square, one per rotation.
  const char* printed[] = {
      "g1 G2 G3 g4 g3 g2 G1 G2 G3 G4 g3 g2",
      "g2 G3 G4 g1 g4 g3 G2 G3 G4 G1 g4 g3",
      "g3 G4 G1 g2 g1 g4 G3 G4 G1 G2 g1 g4",
      "g4 G1 G2 g3 g2 g1 G4 G1 G2 G3 g2 g1",
  };
  for (std::size_t a = 0; a < 4; ++a) CHECK(t_relator(c, a).word == w(printed[a]));
}

TEST_CASE("p_word and t_relator on the triangle") {
  auto c = chordless_cycles(testing_support::triangle()).at(0);
  CHECK(p_word(c, 0) == w("G2 g3 g2"));
  CHECK(t_relator(c, 0).word == w("g1 G2 g3 g2 G1 G2 G3 g2"));
  CHECK(t_relator(c, 1).word == w("g2 G3 g1 g3 G2 G3 G1 g3"));
}

TEST_CASE("property: p_word has length 2(d-2)+1") {
  for (int d = 3; d <= 8; ++d) {
    auto c = cycle_with_weights(std::vector<int>(static_cast<std::size_t>(d), 1));
    for (int a = 0; a < d; ++a) {
      CHECK(p_word(c, static_cast<std::size_t>(a)).size() == static_cast<std::size_t>(2 * (d - 2) + 1));
      CHECK(r_word(c, static_cast<std::size_t>(a)).size() == static_cast<std::size_t>(2 * d - 2));
    }
  }
}

TEST_CASE("t3 condition follows the closing edge") {
  auto tri = cycle_with_weights({2, 1, 2});
  CHECK(t3_applies(tri, 0));
  CHECK(t3_applies(tri, 1));
  CHECK_FALSE(t3_applies(tri, 2));
  auto sq = cycle_with_weights({1, 2, 1, 2});
  CHECK(t3_applies(sq, 0));
  CHECK_FALSE(t3_applies(sq, 1));
  CHECK(t3_applies(sq, 2));
  CHECK_FALSE(t3_applies(sq, 3));
  CHECK(t3_applies(cycle_with_weights({1, 1, 1, 1, 1}), 3));
}

TEST_CASE("artin_presentation of the square") {
  Presentation p = artin_presentation(testing_support::square());
  auto t2 = of_family(p, Family::T2);
  auto t3 = of_family(p, Family::T3);
  REQUIRE(t2.size() == 6);
  CHECK(t3.size() == 4);
  int commuting = 0;
  for (const Relator* r : t2) commuting += r->word.size() == 4;
  CHECK(commuting == 2);
  CHECK(t2[1]->provenance == std::vector<int>{0, 2});
  CHECK(t2[1]->word == w("g1 g3 G1 G3"));
  CHECK(t3[0]->provenance == std::vector<int>{0, 1, 2, 3});
  CHECK(t3[0]->provenance_text() == "cycle (1,2,3,4)");

  Presentation minimal = artin_presentation(testing_support::square(), true);
  CHECK(of_family(minimal, Family::T3).size() == 1);
}

TEST_CASE("artin_presentation of the triangle") {
  Presentation p = artin_presentation(testing_support::triangle());
  auto t2 = of_family(p, Family::T2);
  auto t3 = of_family(p, Family::T3);
  REQUIRE(t2.size() == 3);
  CHECK(t2[0]->word.size() == 8);   // (1,2), m = 4
  CHECK(t2[1]->word.size() == 8);   // (1,3), m = 4
  CHECK(t2[2]->word.size() == 6);   // (2,3), m = 3
  REQUIRE(t3.size() == 2);
  CHECK(t3[0]->provenance == std::vector<int>{0, 1, 2});
  CHECK(t3[1]->provenance == std::vector<int>{1, 2, 0});
}

TEST_CASE("artin_presentation edge cases") {
  CHECK(artin_presentation(Diagram(1)).relators.empty());
  Presentation e = artin_presentation(dia(2, {{1, 2, 1}}));
  REQUIRE(e.relators.size() == 1);
  CHECK(e.relators[0].family == Family::T2);
  // A square with all weights 2 is outside the finite classes.
  CHECK_THROWS_AS(artin_presentation(dia(4, {{1, 2, 2}, {2, 3, 2}, {3, 4, 2}, {4, 1, 2}})),
                  Error);
  CHECK_THROWS_AS(artin_presentation(dia(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}})), Error);
}

TEST_CASE("coxeter_presentation") {
  Presentation e = coxeter_presentation(dia(2, {{1, 2, 1}}));
  REQUIRE(e.relators.size() == 3);
  CHECK(e.relators[0].word == w("g1 g1"));
  CHECK(e.relators[1].word == w("g2 g2"));
  CHECK(e.relators[2].word == w("g1 g2 g1 g2 g1 g2"));

  Presentation t = coxeter_presentation(testing_support::triangle());
  auto r3 = of_family(t, Family::R3b);
  REQUIRE(r3.size() == 3);
  // r = s_a s_{a+1} s_{a+2} s_{a+1}; exponent 2 where the incoming edge has
  // weight 2, exponent 3 where it has weight 1.
  CHECK(r3[0]->word == w("g1 g2 g3 g2").pow(2));
  CHECK(r3[1]->word == w("g2 g3 g1 g3").pow(2));
  CHECK(r3[2]->word == w("g3 g1 g2 g1").pow(3));

  Presentation s = coxeter_presentation(testing_support::square());
  CHECK(of_family(s, Family::R3a).size() == 4);
  CHECK(of_family(s, Family::R1).size() == 4);
  CHECK(of_family(s, Family::R2).size() == 6);
}

TEST_CASE("property: relators are invariant under relabeling") {
  std::mt19937 rng(5);
  const std::vector<Diagram> fixtures{
      testing_support::square(), testing_support::triangle(),
      dia(4, {{1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {4, 1, 2}}),
      dia(5, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}, {3, 4, 1}, {4, 5, 2}})};
  for (const Diagram& g : fixtures) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> perm(static_cast<std::size_t>(g.size()));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Diagram h(g.size());
      for (const Edge& e : g.edges()) h.set_edge(perm[e.source], perm[e.target], e.weight);
      for (bool coxeter : {false, true}) {
        Presentation pg = coxeter ? coxeter_presentation(g) : artin_presentation(g);
        Presentation ph = coxeter ? coxeter_presentation(h) : artin_presentation(h);
        std::set<Word> renamed;
        for (const Relator& r : pg.relators) {
          Word x;
          for (Letter l : r.word) x.push_back({perm[l.gen], l.sign});
          renamed.insert(Relator{x, r.family, {}, {}}.key());
        }
        CHECK(renamed == keys(ph));
      }
    }
  }
}

TEST_CASE("every emitted relator is reduced and nonempty") {
  for (const Diagram& g : {testing_support::square(), testing_support::triangle()}) {
    for (const Presentation& p : {artin_presentation(g), coxeter_presentation(g)}) {
      for (const Relator& r : p.relators) {
        CHECK_FALSE(r.word.empty());
        CHECK(Word(r.word.letters()) == r.word);
      }
    }
  }
}

TEST_CASE("Radical arithmetic") {
  CHECK(Radical::sqrt_of(4) == Radical{2, 0, 0, 0});
  CHECK(Radical::sqrt_of(8) == Radical{0, 2, 0, 0});
  CHECK(Radical::sqrt_of(12) == Radical{0, 0, 2, 0});
  CHECK(Radical::sqrt_of(6) == Radical{0, 0, 0, 1});
  CHECK(Radical::sqrt_of(0) == Radical{});
  CHECK_THROWS_AS(Radical::sqrt_of(5), Error);
  CHECK(Radical{0, 0, 0, 1}.to_text() == "sqrt6");
  CHECK(Radical{6, -4, 0, 0}.to_text() == "6 - 4sqrt2");

  std::mt19937 rng(3);
  auto value = [](const Radical& r) {
    return r.a + r.b * std::sqrt(2.0) + r.c * std::sqrt(3.0) + r.d * std::sqrt(6.0);
  };
  for (int i = 0; i < 200; ++i) {
    auto pick = [&] { return static_cast<long long>(rng() % 11) - 5; };
    Radical x{pick(), pick(), pick(), pick()};
    Radical y{pick(), pick(), pick(), pick()};
    CHECK(value(x * y) == doctest::Approx(value(x) * value(y)));
    CHECK(value(x - y) == doctest::Approx(value(x) - value(y)));
  }
}

TEST_CASE("affine t(l) matches the symbolic oracle") {
  // Frozen from tests/oracles/affine_t_oracle.py.
  struct Row {
    std::vector<int> weights;
    std::vector<Radical> t;
  };
  const std::vector<Row> rows{
      {{1, 1, 1}, {{0}, {0}, {0}}},
      {{2, 1, 2}, {{0}, {0}, {1}}},
      {{4, 1, 1}, {{1}, {1}, {1}}},
      {{1, 2, 1, 2}, {{0}, {1}, {0}, {1}}},
      {{2, 2, 1}, {{1}, {0}, {0}}},
      {{1, 1, 1, 1, 1}, {{0}, {0}, {0}, {0}, {0}}},
      {{3, 1, 3}, {{0}, {0}, {4}}},
      {{2, 2, 2}, {{6, -4, 0, 0}, {6, -4, 0, 0}, {6, -4, 0, 0}}},
      {{1, 1, 4, 1}, {{1}, {1}, {1}, {1}}},
  };
  for (const Row& r : rows) {
    auto c = cycle_with_weights(r.weights);
    for (std::size_t l = 0; l < r.weights.size(); ++l) {
      CAPTURE(l);
      CHECK(affine_t_value(c, l) == r.t[l]);
    }
  }
  CHECK(affine_m_value(cycle_with_weights({4, 1, 1}), 0) == 3);
  CHECK(affine_m_value(cycle_with_weights({1, 2, 1, 2}), 0) == 2);
  CHECK_THROWS_AS(affine_m_value(cycle_with_weights({3, 1, 3}), 2), Error);
  CHECK_THROWS_AS(affine_m_value(cycle_with_weights({2, 2, 2}), 0), Error);
}

TEST_CASE("affine T3 with m = 2 reproduces the finite relator") {
  auto c = cycle_with_weights({2, 1, 2});
  CHECK(affine_t3_relator(c, 0).word == t_relator(c, 0).word);
  CHECK(affine_t3_relator(c, 1).word == t_relator(c, 1).word);
  // Position 2 gets m(l) = 3, the braid-type relation s p s = p s p.
  Word s = Word::generator(2);
  Word p = p_word(c, 2);
  CHECK(affine_t3_relator(c, 2).word == s * p * s * (p * s * p).inverse());
}

TEST_CASE("affine presentation of the mutated affine A2 triangle") {
  // The acyclic triangle mutated at its middle vertex: 1 -> 3 carries weight 4.
  Diagram g = dia(3, {{2, 1, 1}, {3, 2, 1}, {1, 3, 4}}, Mode::Affine);
  Presentation p = affine_artin_presentation(g);
  auto t2 = of_family(p, Family::T2);
  REQUIRE(t2.size() == 2);  // the pair (1,3) has m = infinity
  auto t3 = of_family(p, Family::AffineT3);
  REQUIRE(t3.size() == 3);
  for (const Relator* r : t3) CHECK(r->note == "m(l)=3");
  CHECK(p.m_at(0, 2) == kInfinity);
}

TEST_CASE("T4 templates") {
  auto r1 = t4_template(1);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].first == w("g2 g1 G2 G4 g3 g4"));
  CHECK(r1[0].second == w("G4 g3 g4 g2 g1 G2"));
  CHECK(t4_template(3).size() == 2);
  CHECK(t4_template(5)[1].first == w("g1 g2 g3 g2 G3 G2"));
  auto r2 = t4_template(2, 4);
  CHECK(r2[0].first == w("g2 G3 G4 g1 g5 G1 g4 g3"));
  CHECK(r2[0].second == w("G3 G4 g1 g5 G1 g4 g3 g2"));
  auto r4 = t4_template(4, 4);
  CHECK(r4[0].first == w("g1 G2 G3 g5 g4 G5 g3 g2"));
  CHECK(r4[0].second == w("G2 G3 g5 g4 G5 g3 g2 g1"));
  CHECK(t4_template(4, 3)[0].first == w("g1 G2 g4 g3 G4 g2"));
  CHECK(t4_template_vertices(2, 5) == 6);
  CHECK_THROWS_AS(t4_template(6), Error);
  CHECK_THROWS_AS(t4_template(2, 2), Error);
}

TEST_CASE("induced matches and T4 instantiation") {
  Diagram shape = dia(2, {{1, 2, 1}});
  Diagram g = dia(3, {{1, 2, 1}, {2, 3, 1}});
  auto m = induced_matches(g, shape);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == std::vector<int>{0, 1});
  CHECK(m[1] == std::vector<int>{1, 2});
  // Induced: a path does not occur inside a triangle.
  CHECK(induced_matches(dia(3, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}}), dia(3, {{1, 2, 1}, {2, 3, 1}}))
            .empty());

  T4Pattern pat{"demo", shape, {{w("g1 g2"), w("g2 g1")}}};
  Presentation p = affine_artin_presentation(g, {pat});
  auto t4 = of_family(p, Family::T4);
  REQUIRE(t4.size() == 2);
  CHECK(t4[0]->word == w("g1 g2 G1 G2"));
  CHECK(t4[1]->word == w("g2 g3 G2 G3"));
  CHECK(t4[0]->provenance_text() == "match (1,2) demo");
}
