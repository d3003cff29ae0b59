#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace artinmut {

// Finite mode enforces edge weights in {1,2,3}; affine mode admits any
// positive integer weight.
enum class Mode { Finite, Affine };

// Integer skew-symmetrizable matrix B (row-major).
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  // Throws NotSkewSymmetrizable unless some positive d makes d_i B_ij = -d_j B_ji.
  explicit ExchangeMatrix(std::vector<std::vector<int>> rows);

  int size() const { return n_; }
  int at(int i, int j) const { return entries_[index(i, j)]; }
  const std::vector<int64_t>& symmetrizer() const { return symmetrizer_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<int> entries_;
  std::vector<int64_t> symmetrizer_;
};

// Smallest positive integer symmetrizer, or nullopt when none exists.
std::optional<std::vector<int64_t>> find_symmetrizer(
    const std::vector<std::vector<int>>& rows);

struct Edge {
  int source = 0;
  int target = 0;
  int weight = 1;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Edge-weighted oriented graph with at most one edge per vertex pair.
// Vertices are 0-based here; the JSON form is 1-based.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(int n) : n_(n), w_(static_cast<std::size_t>(n * n), 0) {}
  Diagram(int n, const std::vector<Edge>& edges, Mode mode = Mode::Finite);

  int size() const { return n_; }
  // Weight of the edge i -> j, 0 if there is none.
  int weight(int i, int j) const { return w_[index(i, j)]; }
  // Weight of the edge between i and j in either direction.
  int undirected_weight(int i, int j) const {
    return weight(i, j) + weight(j, i);
  }
  bool adjacent(int i, int j) const { return undirected_weight(i, j) != 0; }
  std::vector<Edge> edges() const;  // sorted by (source, target)
  int max_weight() const;
  bool connected() const;
  std::vector<std::vector<int>> components() const;

  // Replaces whatever edge joins i and j. weight 0 removes it.
  void set_edge(int source, int target, int weight);

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<int> w_;
};

Diagram diagram_from_matrix(const ExchangeMatrix& b);
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k);
Diagram mutate_diagram(const Diagram& g, int k);
Diagram opposite(const Diagram& g);
bool is_two_finite(const ExchangeMatrix& b);

// Result of the mutation rule for one path i -a-> k -b-> j whose third side
// carries weight c (on j -> i when `oriented_cycle`, otherwise on i -> j).
struct ThirdSide {
  int weight = 0;          // c'
  bool toward_j = true;    // new edge is i -> j (false: j -> i)
};

// Exact table lookup for a, b, c <= 3; falls back to the integer identity
// c' = ab + c -/+ 2 sqrt(abc) for larger weights. Throws NotSquare when abc is
// not a perfect square.
ThirdSide mutation_third_side(int a, int b, int c, bool oriented_cycle);
// The integer identity alone (used to validate the table).
std::optional<ThirdSide> mutation_third_side_identity(int a, int b, int c,
                                                      bool oriented_cycle);

enum class CycleClass { AllWeightOne, SquareTwoTwo, TriangleTwoTwoOne, AffineOther };

const char* to_string(CycleClass c) noexcept;

struct ChordlessCycle {
  // Vertices in orientation order starting from the smallest label; for a
  // cycle that is not cyclically oriented the direction is chosen so that the
  // second vertex is the smaller neighbour of the first.
  std::vector<int> vertices;
  // weights[a] is the weight of the edge vertices[a] -> vertices[a+1 mod d].
  std::vector<int> weights;
  bool cyclically_oriented = true;
  CycleClass cls = CycleClass::AllWeightOne;

  std::size_t length() const { return vertices.size(); }
  int vertex(std::size_t a) const { return vertices[a % vertices.size()]; }
  int weight_at(std::size_t a) const { return weights[a % weights.size()]; }
  // The cycle tuple rotated to start at position a.
  ChordlessCycle rotated(std::size_t a) const;

  friend bool operator==(const ChordlessCycle&, const ChordlessCycle&) = default;
};

CycleClass classify_cycle(const std::vector<int>& weights, bool cyclically_oriented);

// Every chordless cycle of the underlying unoriented graph, sorted by vertex
// tuple. In finite mode a cycle that is not cyclically oriented is an error.
std::vector<ChordlessCycle> chordless_cycles(const Diagram& g, Mode mode = Mode::Finite);

inline constexpr int kDefaultCanonicalBound = 12;

struct CanonicalDiagram {
  std::string encoding;       // relabeling-invariant byte string
  Diagram diagram;            // g relabeled by `relabel`
  std::vector<int> relabel;   // relabel[old vertex] = new vertex
};

CanonicalDiagram canonical_form(const Diagram& g, int bound = kDefaultCanonicalBound);

inline constexpr std::size_t kDefaultClassCap = 100000;

// Canonical representatives of the mutation class, sorted by encoding.
// Throws NotConnected and BudgetExhausted.
std::vector<CanonicalDiagram> mutation_class(const Diagram& g,
                                             std::size_t cap = kDefaultClassCap,
                                             int threads = 1);

enum class FiniteTypeVerdict { Finite, Infinite, BudgetExhausted };
const char* to_string(FiniteTypeVerdict v) noexcept;

FiniteTypeVerdict is_finite_type(const Diagram& g, std::size_t cap = kDefaultClassCap);

}  // namespace artinmut
