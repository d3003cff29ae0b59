#include "artinmut/diagram.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "artinmut/error.hpp"

namespace artinmut {

namespace {

void check_vertex(int k, int n) {
  if (k < 0 || k >= n) {
    throw Error(ErrorCode::OutOfRange,
                "vertex " + std::to_string(k + 1) + " outside 1.." +
                    std::to_string(n));
  }
}

int64_t isqrt_exact(int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<int64_t>(std::llround(std::sqrt(static_cast<long double>(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Exchange matrices

std::optional<std::vector<int64_t>> find_symmetrizer(
    const std::vector<std::vector<int>>& rows) {
  const auto n = static_cast<int>(rows.size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) return std::nullopt;
  }
  for (int i = 0; i < n; ++i) {
    if (rows[i][i] != 0) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      int a = rows[i][j];
      int b = rows[j][i];
      if ((a == 0) != (b == 0)) return std::nullopt;
      if (a != 0 && (a > 0) == (b > 0)) return std::nullopt;
    }
  }
  // d_j / d_i = -B_ij / B_ji, propagated as reduced fractions per component.
  std::vector<int64_t> num(static_cast<std::size_t>(n), 0);
  std::vector<int64_t> den(static_cast<std::size_t>(n), 0);
  std::vector<int64_t> out(static_cast<std::size_t>(n), 0);
  for (int root = 0; root < n; ++root) {
    if (den[root] != 0) continue;
    num[root] = 1;
    den[root] = 1;
    std::vector<int> comp{root};
    for (std::size_t head = 0; head < comp.size(); ++head) {
      int i = comp[head];
      for (int j = 0; j < n; ++j) {
        if (rows[i][j] == 0) continue;
        int64_t p = num[i] * std::abs(rows[i][j]);
        int64_t q = den[i] * std::abs(rows[j][i]);
        int64_t g = std::gcd(p, q);
        p /= g;
        q /= g;
        if (den[j] == 0) {
          num[j] = p;
          den[j] = q;
          comp.push_back(j);
        } else if (num[j] != p || den[j] != q) {
          return std::nullopt;
        }
      }
    }
    int64_t l = 1;
    for (int v : comp) l = std::lcm(l, den[v]);
    int64_t g = 0;
    for (int v : comp) {
      out[v] = num[v] * (l / den[v]);
      g = std::gcd(g, out[v]);
    }
    for (int v : comp) out[v] /= g;
  }
  return out;
}

ExchangeMatrix::ExchangeMatrix(std::vector<std::vector<int>> rows) {
  auto d = find_symmetrizer(rows);
  if (!d) {
    throw Error(ErrorCode::NotSkewSymmetrizable,
                "exchange matrix is not skew-symmetrizable");
  }
  n_ = static_cast<int>(rows.size());
  symmetrizer_ = std::move(*d);
  entries_.reserve(static_cast<std::size_t>(n_ * n_));
  for (const auto& r : rows) entries_.insert(entries_.end(), r.begin(), r.end());
}

std::vector<std::vector<int>> ExchangeMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[i].push_back(at(i, j));
  }
  return out;
}

Diagram diagram_from_matrix(const ExchangeMatrix& b) {
  Diagram g(b.size());
  for (int i = 0; i < b.size(); ++i) {
    for (int j = 0; j < b.size(); ++j) {
      if (b.at(i, j) > 0) g.set_edge(i, j, std::abs(b.at(i, j) * b.at(j, i)));
    }
  }
  return g;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k) {
  const int n = b.size();
  check_vertex(k, n);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        rows[i][j] = -b.at(i, j);
      } else {
        int bik = b.at(i, k);
        int bkj = b.at(k, j);
        rows[i][j] = b.at(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
    }
  }
  return ExchangeMatrix(std::move(rows));
}

bool is_two_finite(const ExchangeMatrix& b) {
  for (int i = 0; i < b.size(); ++i) {
    for (int j = 0; j < b.size(); ++j) {
      if (std::abs(b.at(i, j) * b.at(j, i)) > 3) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Diagrams

Diagram::Diagram(int n, const std::vector<Edge>& edges, Mode mode) : Diagram(n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  for (const Edge& e : edges) {
    check_vertex(e.source, n);
    check_vertex(e.target, n);
    if (e.source == e.target) {
      throw Error(ErrorCode::InvalidArgument,
                  "self-loop at vertex " + std::to_string(e.source + 1));
    }
    if (e.weight < 1) {
      throw Error(ErrorCode::InvalidArgument, "edge weights must be positive");
    }
    if (mode == Mode::Finite && e.weight > 3) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge weight " + std::to_string(e.weight) +
                      " exceeds 3 (use affine mode)");
    }
    if (adjacent(e.source, e.target)) {
      throw Error(ErrorCode::InvalidArgument,
                  "more than one edge between vertices " +
                      std::to_string(e.source + 1) + " and " +
                      std::to_string(e.target + 1));
    }
    set_edge(e.source, e.target, e.weight);
  }
}

void Diagram::set_edge(int source, int target, int weight) {
  w_[index(source, target)] = weight;
  w_[index(target, source)] = 0;
}

std::vector<Edge> Diagram::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (weight(i, j) > 0) out.push_back({i, j, weight(i, j)});
    }
  }
  return out;
}

int Diagram::max_weight() const {
  int m = 0;
  for (int w : w_) m = std::max(m, w);
  return m;
}

std::vector<std::vector<int>> Diagram::components() const {
  std::vector<int> seen(static_cast<std::size_t>(n_), 0);
  std::vector<std::vector<int>> out;
  for (int root = 0; root < n_; ++root) {
    if (seen[root]) continue;
    std::vector<int> comp{root};
    seen[root] = 1;
    for (std::size_t h = 0; h < comp.size(); ++h) {
      for (int j = 0; j < n_; ++j) {
        if (!seen[j] && adjacent(comp[h], j)) {
          seen[j] = 1;
          comp.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Diagram::connected() const { return components().size() <= 1; }

Diagram opposite(const Diagram& g) {
  Diagram out(g.size());
  for (const Edge& e : g.edges()) out.set_edge(e.target, e.source, e.weight);
  return out;
}

// ---------------------------------------------------------------------------
// Mutation rule

namespace {

struct TableEntry {
  int a, b, c;
  bool oriented;
  int c_prime;
  bool toward_j;
};

// Every (a, b, c) with a, b in {1,2,3}, c in {0..3} and abc a perfect square.
// Rows with c = 0 create the edge i -> j of weight ab.
constexpr std::array<TableEntry, 32> kThirdSideTable{{
    {1, 1, 0, true, 1, true},   {1, 1, 0, false, 1, true},
    {1, 2, 0, true, 2, true},   {1, 2, 0, false, 2, true},
    {1, 3, 0, true, 3, true},   {1, 3, 0, false, 3, true},
    {2, 1, 0, true, 2, true},   {2, 1, 0, false, 2, true},
    {2, 2, 0, true, 4, true},   {2, 2, 0, false, 4, true},
    {2, 3, 0, true, 6, true},   {2, 3, 0, false, 6, true},
    {3, 1, 0, true, 3, true},   {3, 1, 0, false, 3, true},
    {3, 2, 0, true, 6, true},   {3, 2, 0, false, 6, true},
    {3, 3, 0, true, 9, true},   {3, 3, 0, false, 9, true},
    {1, 1, 1, true, 0, true},   {1, 1, 1, false, 4, true},
    {1, 2, 2, true, 0, true},   {1, 2, 2, false, 8, true},
    {2, 1, 2, true, 0, true},   {2, 1, 2, false, 8, true},
    {1, 3, 3, true, 0, true},   {1, 3, 3, false, 12, true},
    {3, 1, 3, true, 0, true},   {3, 1, 3, false, 12, true},
    {2, 2, 1, true, 1, true},   {2, 2, 1, false, 9, true},
    {3, 3, 1, true, 4, true},   {3, 3, 1, false, 16, true},
}};

}  // namespace

std::optional<ThirdSide> mutation_third_side_identity(int a, int b, int c,
                                                      bool oriented_cycle) {
  const int64_t ab = static_cast<int64_t>(a) * b;
  const int64_t root = isqrt_exact(ab * c);
  if (root < 0) return std::nullopt;
  if (!oriented_cycle) {
    return ThirdSide{static_cast<int>(ab + c + 2 * root), true};
  }
  // sqrt(c') = |sqrt(ab) - sqrt(c)|, edge i -> j iff ab > c.
  const int64_t cp = ab + c - 2 * root;
  return ThirdSide{static_cast<int>(cp), ab >= c};
}

ThirdSide mutation_third_side(int a, int b, int c, bool oriented_cycle) {
  if (a <= 3 && b <= 3 && c <= 3) {
    for (const TableEntry& e : kThirdSideTable) {
      if (e.a == a && e.b == b && e.c == c && e.oriented == oriented_cycle) {
        return {e.c_prime, e.toward_j};
      }
    }
  } else if (auto r = mutation_third_side_identity(a, b, c, oriented_cycle)) {
    return *r;
  }
  throw Error(ErrorCode::NotSquare,
              "no edge weight c' satisfies the mutation rule for (a,b,c) = (" +
                  std::to_string(a) + "," + std::to_string(b) + "," +
                  std::to_string(c) + ")");
}

Diagram mutate_diagram(const Diagram& g, int k) {
  const int n = g.size();
  check_vertex(k, n);
  Diagram out = g;
  for (int i = 0; i < n; ++i) {
    if (i == k) continue;
    const int a = g.weight(i, k);
    if (a == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (j == k || j == i) continue;
      const int b = g.weight(k, j);
      if (b == 0) continue;
      const bool oriented = g.weight(j, i) > 0;
      const int c = oriented ? g.weight(j, i) : g.weight(i, j);
      const ThirdSide t = mutation_third_side(a, b, c, oriented);
      if (t.toward_j) {
        out.set_edge(i, j, t.weight);
      } else {
        out.set_edge(j, i, t.weight);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (g.weight(i, k) > 0) out.set_edge(k, i, g.weight(i, k));
    if (g.weight(k, i) > 0) out.set_edge(i, k, g.weight(k, i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chordless cycles

const char* to_string(CycleClass c) noexcept {
  switch (c) {
    case CycleClass::AllWeightOne: return "AllWeightOne";
    case CycleClass::SquareTwoTwo: return "SquareTwoTwo";
    case CycleClass::TriangleTwoTwoOne: return "TriangleTwoTwoOne";
    case CycleClass::AffineOther: return "AffineOther";
  }
  return "?";
}

CycleClass classify_cycle(const std::vector<int>& weights, bool cyclically_oriented) {
  if (!cyclically_oriented) return CycleClass::AffineOther;
  if (std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; })) {
    return CycleClass::AllWeightOne;
  }
  if (weights.size() == 3) {
    auto s = weights;
    std::sort(s.begin(), s.end());
    if (s == std::vector<int>{1, 2, 2}) return CycleClass::TriangleTwoTwoOne;
  }
  if (weights.size() == 4 && weights[0] == weights[2] && weights[1] == weights[3] &&
      weights[0] + weights[1] == 3) {
    return CycleClass::SquareTwoTwo;
  }
  return CycleClass::AffineOther;
}

ChordlessCycle ChordlessCycle::rotated(std::size_t a) const {
  ChordlessCycle out = *this;
  const std::size_t d = length();
  for (std::size_t i = 0; i < d; ++i) {
    out.vertices[i] = vertex(a + i);
    out.weights[i] = weight_at(a + i);
  }
  return out;
}

std::vector<ChordlessCycle> chordless_cycles(const Diagram& g, Mode mode) {
  const int n = g.size();
  std::vector<ChordlessCycle> out;
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);

  auto record = [&](const std::vector<int>& cyc) {
    const std::size_t d = cyc.size();
    bool forward = true;
    bool backward = true;
    for (std::size_t a = 0; a < d; ++a) {
      int u = cyc[a];
      int v = cyc[(a + 1) % d];
      if (g.weight(u, v) == 0) forward = false;
      if (g.weight(v, u) == 0) backward = false;
    }
    ChordlessCycle c;
    c.vertices = cyc;
    if (backward) {
      std::reverse(c.vertices.begin() + 1, c.vertices.end());
    } else if (!forward && c.vertices[1] > c.vertices.back()) {
      std::reverse(c.vertices.begin() + 1, c.vertices.end());
    }
    c.cyclically_oriented = forward || backward;
    for (std::size_t a = 0; a < d; ++a) {
      c.weights.push_back(g.undirected_weight(c.vertices[a], c.vertices[(a + 1) % d]));
    }
    c.cls = classify_cycle(c.weights, c.cyclically_oriented);
    if (mode == Mode::Finite && !c.cyclically_oriented) {
      std::string desc;
      for (int v : c.vertices) desc += (desc.empty() ? "" : ",") + std::to_string(v + 1);
      throw Error(ErrorCode::NotCyclicallyOriented,
                  "chordless cycle (" + desc + ") is not cyclically oriented");
    }
    out.push_back(std::move(c));
  };

  // Induced paths from the smallest vertex s through larger vertices; a cycle
  // closes when the new end is adjacent to s. Each cycle is found in both
  // directions, so only the one with path[1] < last is kept.
  std::function<void(int)> extend = [&](int s) {
    const int last = path.back();
    for (int x = s + 1; x < n; ++x) {
      if (on_path[x] || !g.adjacent(last, x)) continue;
      bool chord = false;
      for (std::size_t p = 1; p + 1 < path.size(); ++p) {
        if (g.adjacent(path[p], x)) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (path.size() >= 2 && g.adjacent(s, x)) {
        if (path[1] < x) {
          path.push_back(x);
          record(path);
          path.pop_back();
        }
        continue;
      }
      path.push_back(x);
      on_path[x] = 1;
      extend(s);
      on_path[x] = 0;
      path.pop_back();
    }
  };

  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = 1;
    extend(s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end(), [](const ChordlessCycle& a, const ChordlessCycle& b) {
    return a.vertices < b.vertices;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

int signed_weight(const Diagram& g, int i, int j) {
  if (g.weight(i, j) > 0) return g.weight(i, j);
  return -g.weight(j, i);
}

// Iterated colour refinement; the returned colours are canonical ranks.
std::vector<int> refine_colours(const Diagram& g) {
  const int n = g.size();
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  std::size_t classes = 1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> nb;
      for (int x = 0; x < n; ++x) {
        if (x != v && g.adjacent(v, x)) nb.emplace_back(signed_weight(g, v, x), colour[x]);
      }
      std::sort(nb.begin(), nb.end());
      sig[v].push_back(colour[v]);
      for (auto [w, c] : nb) {
        sig[v].push_back(w);
        sig[v].push_back(c);
      }
    }
    std::vector<std::vector<int>> distinct(sig.begin(), sig.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return colour;
}

bool are_twins(const Diagram& g, int u, int v) {
  if (g.adjacent(u, v)) return false;
  for (int x = 0; x < g.size(); ++x) {
    if (x == u || x == v) continue;
    if (g.weight(u, x) != g.weight(v, x) || g.weight(x, u) != g.weight(x, v)) return false;
  }
  return true;
}

struct CanonSearch {
  const Diagram& g;
  std::vector<int> slot_colour;  // colour required at each position
  std::vector<int> colour;
  std::vector<int> order;        // order[pos] = original vertex
  std::vector<char> used;
  std::string current;
  std::string best;
  std::vector<int> best_order;
  bool have_best = false;

  void run(std::size_t pos, bool strictly_less) {
    const int n = g.size();
    if (pos == static_cast<std::size_t>(n)) {
      if (!have_best || strictly_less) {
        best = current;
        best_order = order;
        have_best = true;
      }
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (used[v] || colour[v] != slot_colour[pos]) continue;
      bool twin = false;
      for (int t : tried) {
        if (are_twins(g, t, v)) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried.push_back(v);

      const std::size_t mark = current.size();
      for (std::size_t i = 0; i < pos; ++i) {
        current.push_back(static_cast<char>(signed_weight(g, order[i], v) + 128));
      }
      bool less = strictly_less;
      bool prune = false;
      if (have_best && !strictly_less) {
        int cmp = current.compare(mark, std::string::npos, best, mark, current.size() - mark);
        if (cmp > 0) prune = true;
        if (cmp < 0) less = true;
      }
      if (!prune) {
        order.push_back(v);
        used[v] = 1;
        run(pos + 1, less);
        used[v] = 0;
        order.pop_back();
      }
      current.resize(mark);
    }
  }
};

}  // namespace

CanonicalDiagram canonical_form(const Diagram& g, int bound) {
  const int n = g.size();
  if (n > bound) {
    throw Error(ErrorCode::BoundExceeded,
                "canonical form limited to " + std::to_string(bound) + " vertices");
  }
  if (g.max_weight() > 127) {
    throw Error(ErrorCode::BoundExceeded, "edge weight too large to encode");
  }
  CanonSearch s{g, {}, refine_colours(g), {}, std::vector<char>(static_cast<std::size_t>(n), 0),
                std::string(1, static_cast<char>(n)), {}, {}, false};
  s.slot_colour = s.colour;
  std::sort(s.slot_colour.begin(), s.slot_colour.end());
  s.run(0, false);

  CanonicalDiagram out;
  out.encoding = s.best;
  out.relabel.assign(static_cast<std::size_t>(n), 0);
  for (int pos = 0; pos < n; ++pos) out.relabel[s.best_order[pos]] = pos;
  out.diagram = Diagram(n);
  for (const Edge& e : g.edges()) {
    out.diagram.set_edge(out.relabel[e.source], out.relabel[e.target], e.weight);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Mutation classes

const char* to_string(FiniteTypeVerdict v) noexcept {
  switch (v) {
    case FiniteTypeVerdict::Finite: return "finite";
    case FiniteTypeVerdict::Infinite: return "infinite";
    case FiniteTypeVerdict::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

namespace {

// Level-synchronous BFS. Expansion of a level may run on several workers;
// the dedup set is only touched by the merging thread. Returns false as soon
// as `stop` accepts a reached diagram.
template <typename Stop>
bool bfs_class(const Diagram& g, std::size_t cap, int threads,
               std::map<std::string, CanonicalDiagram>& seen, Stop stop) {
  if (!g.connected()) {
    throw Error(ErrorCode::NotConnected, "mutation class requires a connected diagram");
  }
  if (stop(g)) return false;
  auto start = canonical_form(g);
  std::vector<Diagram> frontier{start.diagram};
  seen.emplace(start.encoding, std::move(start));
  threads = std::max(1, threads);
  while (!frontier.empty()) {
    std::vector<std::vector<Diagram>> produced(frontier.size());
    auto expand = [&](std::size_t idx) {
      const Diagram& d = frontier[idx];
      for (int k = 0; k < d.size(); ++k) produced[idx].push_back(mutate_diagram(d, k));
    };
    if (threads == 1 || frontier.size() < 2) {
      for (std::size_t i = 0; i < frontier.size(); ++i) expand(i);
    } else {
      std::vector<std::future<void>> jobs;
      const std::size_t chunk = (frontier.size() + threads - 1) / static_cast<std::size_t>(threads);
      for (std::size_t lo = 0; lo < frontier.size(); lo += chunk) {
        const std::size_t hi = std::min(frontier.size(), lo + chunk);
        jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
          for (std::size_t i = lo; i < hi; ++i) expand(i);
        }));
      }
      for (auto& j : jobs) j.get();
    }
    std::vector<Diagram> next;
    for (auto& batch : produced) {
      for (Diagram& d : batch) {
        if (stop(d)) return false;
        auto c = canonical_form(d);
        if (seen.count(c.encoding)) continue;
        if (seen.size() >= cap) {
          throw Error(ErrorCode::BudgetExhausted,
                      "mutation class exceeds the node budget of " + std::to_string(cap));
        }
        next.push_back(c.diagram);
        seen.emplace(c.encoding, std::move(c));
      }
    }
    frontier = std::move(next);
  }
  return true;
}

}  // namespace

std::vector<CanonicalDiagram> mutation_class(const Diagram& g, std::size_t cap, int threads) {
  std::map<std::string, CanonicalDiagram> seen;
  bfs_class(g, cap, threads, seen, [](const Diagram&) { return false; });
  std::vector<CanonicalDiagram> out;
  out.reserve(seen.size());
  for (auto& [_, c] : seen) out.push_back(std::move(c));
  return out;
}

FiniteTypeVerdict is_finite_type(const Diagram& g, std::size_t cap) {
  std::map<std::string, CanonicalDiagram> seen;
  try {
    bool closed = bfs_class(g, cap, 1, seen, [](const Diagram& d) { return d.max_weight() > 3; });
    return closed ? FiniteTypeVerdict::Finite : FiniteTypeVerdict::Infinite;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BudgetExhausted) return FiniteTypeVerdict::BudgetExhausted;
    throw;
  }
}

}  // namespace artinmut
