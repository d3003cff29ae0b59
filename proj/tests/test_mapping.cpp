#include <random>

#include "artinmut/mapping.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace artinmut;
using testing_support::dia;
using testing_support::w;

namespace {

Word random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> g(0, n - 1), s(0, 1);
  Word out;
  for (int i = 0; i < len; ++i) out.push_back({g(rng), s(rng) ? 1 : -1});
  return out;
}

std::vector<Diagram> fixtures() {
  std::vector<Diagram> out{testing_support::square(), testing_support::triangle(),
                           dia(4, {{1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {4, 1, 2}})};
  for (const auto& b : {testing_support::a_n(4), testing_support::b3(), testing_support::d4(),
                        testing_support::g2()}) {
    for (const auto& c : mutation_class(diagram_from_matrix(b))) out.push_back(c.diagram);
  }
  return out;
}

}  // namespace

TEST_CASE("phi images") {
  // 1 -> 2 -> 3 at k = 2: r_1 conjugated by s_2, r_3 fixed, r_2 fixed.
  const GroupMap m = phi(dia(3, {{1, 2, 1}, {2, 3, 1}}), 1);
  CHECK(m.label == "Phi(2)");
  CHECK(m.images[0] == w("g2 g1 G2"));
  CHECK(m.images[0].size() == 3);
  CHECK(m.images[1] == w("g2"));
  CHECK(m.images[2] == w("g3"));
  CHECK(m.source.alphabet != m.target.alphabet);
  CHECK_NOTHROW(validate_map(m));
}

TEST_CASE("delta images") {
  const Diagram g = testing_support::triangle();
  const GroupMap d = delta(g);
  CHECK(d.label == "Delta");
  for (int i = 0; i < g.size(); ++i) CHECK(d.images[static_cast<std::size_t>(i)] == Word{inv(i)});
  CHECK(d.target.alphabet == artin_presentation(opposite(g)).alphabet);
  CHECK(d.transport(w("g1 g2")) == w("G1 G2"));
  CHECK(d.transport(Word{}).empty());

  const GroupMap twice = compose(d, delta(opposite(g)));
  for (int i = 0; i < g.size(); ++i) CHECK(twice.images[static_cast<std::size_t>(i)] == Word{gen(i)});
}

TEST_CASE("psi is stored as a composite") {
  const GroupMap p = psi(testing_support::square(), 0);
  CHECK(p.label == "Psi(1)");
  REQUIRE(p.parts.size() == 3);
  CHECK(p.parts[0].label == "Delta");
  CHECK(p.parts[1].label == "PhiOp(1)");
  CHECK(p.parts[2].label == "DeltaPrime");
  CHECK(p.source.alphabet == artin_presentation(testing_support::square()).alphabet);
  CHECK(p.target.alphabet ==
        artin_presentation(mutate_diagram(testing_support::square(), 0)).alphabet);
  CHECK_NOTHROW(validate_map(p));
}

TEST_CASE("psi after phi is the identity on generators") {
  for (const Diagram& g : fixtures()) {
    for (int k = 0; k < g.size(); ++k) {
      const GroupMap f = phi(g, k);
      const GroupMap s = psi(g, k);
      for (int i = 0; i < g.size(); ++i) {
        const Word r = Word::generator(i);
        CHECK(s.transport(f.transport(r)) == r);
        CHECK(f.transport(s.transport(r)) == r);
      }
      CHECK(compose(f, s).images == compose(s, f).images);
    }
  }
}

TEST_CASE("the arrow-into-k case traces through the opposite diagram") {
  // i -> k in G, so r_i goes to s_k s_i s_k^-1; psi undoes it through q and u.
  const Diagram g = dia(3, {{1, 2, 1}, {2, 3, 1}});
  const int k = 1;
  const GroupMap f = phi(g, k);
  const GroupMap s = psi(g, k);
  const Word image = f.transport(w("g1"));
  CHECK(image == w("g2 g1 G2"));
  const Word q = s.parts[0].transport(image);
  CHECK(q == w("G2 G1 g2"));
  const Word u = s.parts[1].transport(q);
  CHECK(u == w("G1"));
  CHECK(s.parts[2].transport(u) == w("g1"));
}

TEST_CASE("transport respects composition") {
  std::mt19937 rng(99);
  for (const Diagram& g : fixtures()) {
    const int k = static_cast<int>(rng() % static_cast<unsigned>(g.size()));
    const GroupMap f = phi(g, k);
    const GroupMap s = psi(g, k);
    const GroupMap sf = compose(f, s);
    CHECK(sf.label == "Psi(" + std::to_string(k + 1) + ")*Phi(" + std::to_string(k + 1) + ")");
    CHECK(sf.parts.size() == 4);
    for (int trial = 0; trial < 50; ++trial) {
      const Word x = random_word(rng, g.size(), trial % 12);
      CHECK(s.transport(f.transport(x)) == sf.transport(x));
      CHECK(f.transport(x).inverse() == f.transport(x.inverse()));
    }
  }
}

TEST_CASE("alphabet mismatches") {
  const Diagram g = dia(3, {{1, 2, 1}, {2, 3, 1}});
  const GroupMap f = phi(g, 1);
  CHECK_THROWS_AS(compose(f, f), Error);
  CHECK_THROWS_AS(f.transport(w("g4")), Error);
  GroupMap bad = f;
  bad.images.pop_back();
  CHECK_THROWS_AS(validate_map(bad), Error);
  bad = f;
  bad.images[0] = w("g7");
  CHECK_THROWS_AS(validate_map(bad), Error);
  CHECK_THROWS_AS(phi(g, 3), Error);
}
