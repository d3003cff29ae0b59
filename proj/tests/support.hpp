#pragma once

#include <array>
#include <string>
#include <vector>

#include "artinmut/diagram.hpp"
#include "artinmut/error.hpp"
#include "artinmut/word.hpp"

namespace testing_support {

using artinmut::Diagram;
using artinmut::Edge;
using artinmut::Mode;
using artinmut::Word;

// 1-based edge triples, as in the JSON form.
inline Diagram dia(int n, const std::vector<std::array<int, 3>>& edges,
                   Mode mode = Mode::Finite) {
  std::vector<Edge> es;
  for (const auto& e : edges) es.push_back({e[0] - 1, e[1] - 1, e[2]});
  return Diagram(n, es, mode);
}

inline Word w(const std::string& text) { return Word::from_text(text); }

inline artinmut::ExchangeMatrix a_n(int n) {
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  for (int i = 0; i + 1 < n; ++i) {
    b[i][i + 1] = 1;
    b[i + 1][i] = -1;
  }
  return artinmut::ExchangeMatrix(b);
}

inline artinmut::ExchangeMatrix b3() {
  return artinmut::ExchangeMatrix({{0, 1, 0}, {-1, 0, 1}, {0, -2, 0}});
}
inline artinmut::ExchangeMatrix b2() {
  return artinmut::ExchangeMatrix({{0, 1}, {-2, 0}});
}
inline artinmut::ExchangeMatrix d4() {
  return artinmut::ExchangeMatrix(
      {{0, 1, 0, 0}, {-1, 0, 1, 1}, {0, -1, 0, 0}, {0, -1, 0, 0}});
}
inline artinmut::ExchangeMatrix g2() {
  return artinmut::ExchangeMatrix({{0, 1}, {-3, 0}});
}

// The two worked examples of the Artin presentation.
inline Diagram square() { return dia(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 1, 1}}); }
inline Diagram triangle() { return dia(3, {{1, 2, 2}, {2, 3, 1}, {3, 1, 2}}); }

struct NamedClass {
  std::string name;
  artinmut::ExchangeMatrix seed;
  long long weyl_order;
};

}  // namespace testing_support
