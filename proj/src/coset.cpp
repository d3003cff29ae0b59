#include <numeric>

#include "artinmut/error.hpp"
#include "artinmut/verifier.hpp"

namespace artinmut {

namespace {

struct CapReached {};

// Invariant: T(c, x) = d iff T(d, x^1) = c for live c, d.
class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t cap)
      : n_(p.n_generators), cols_(2 * p.n_generators), cap_(std::max<std::size_t>(cap, 1)) {
    for (const Relator& r : p.relators) {
      std::vector<int> cols;
      for (Letter l : r.word) cols.push_back(l.code());
      if (!cols.empty()) rels_.push_back(std::move(cols));
    }
  }

  CosetTable run() {
    CosetTable out;
    out.n_generators = n_;
    add_row();
    std::size_t cur = 0;
    while (cur < fwd_.size()) {
      try {
        process(cur);
        ++cur;
      } catch (const CapReached&) {
        lookahead();
        cur = compact(cur);
        // Continue only if the lookahead freed a tenth of the table.
        if (fwd_.size() + cap_ / 10 >= cap_) {
          out.status = CosetStatus::Capped;
          out.defined = defined_;
          return out;
        }
      }
    }
    compact(0);
    out.status = CosetStatus::Complete;
    out.order = fwd_.size();
    out.defined = defined_;
    out.rows = std::move(tab_);
    return out;
  }

 private:
  int& T(int c, int x) {
    return tab_[static_cast<std::size_t>(c) * static_cast<std::size_t>(cols_) +
                static_cast<std::size_t>(x)];
  }

  void add_row() {
    fwd_.push_back(static_cast<int>(fwd_.size()));
    tab_.resize(tab_.size() + static_cast<std::size_t>(cols_), -1);
    ++defined_;
  }

  void define(int c, int x) {
    if (fwd_.size() >= cap_) throw CapReached{};
    const int d = static_cast<int>(fwd_.size());
    add_row();
    T(c, x) = d;
    T(d, x ^ 1) = c;
  }

  bool alive(std::size_t c) const { return fwd_[c] == static_cast<int>(c); }

  int rep(int c) {
    int r = c;
    while (fwd_[static_cast<std::size_t>(r)] != r) r = fwd_[static_cast<std::size_t>(r)];
    while (fwd_[static_cast<std::size_t>(c)] != r) {
      int next = fwd_[static_cast<std::size_t>(c)];
      fwd_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    fwd_[static_cast<std::size_t>(b)] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int e = queue[h];
      for (int x = 0; x < cols_; ++x) {
        const int f = T(e, x);
        if (f < 0) continue;
        T(f, x ^ 1) = -1;
        const int e1 = rep(e);
        const int f1 = rep(f);
        if (T(e1, x) >= 0) {
          merge(f1, T(e1, x), queue);
        } else if (T(f1, x ^ 1) >= 0) {
          merge(e1, T(f1, x ^ 1), queue);
        } else {
          T(e1, x) = f1;
          T(f1, x ^ 1) = e1;
        }
      }
    }
  }

  // Scans rel from coset c; `fill` defines cosets to close the gap.
  void scan(int c, const std::vector<int>& rel, bool fill) {
    int f = c;
    int b = c;
    int i = 0;
    int j = static_cast<int>(rel.size()) - 1;
    while (true) {
      while (i <= j && T(f, rel[i]) >= 0) f = T(f, rel[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && T(b, rel[j] ^ 1) >= 0) b = T(b, rel[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        T(f, rel[i]) = b;
        T(b, rel[i] ^ 1) = f;
        return;
      }
      if (!fill) return;
      define(f, rel[i]);
    }
  }

  void process(std::size_t cur) {
    const int c = static_cast<int>(cur);
    for (const auto& rel : rels_) {
      if (!alive(cur)) return;
      scan(c, rel, true);
    }
    for (int x = 0; x < cols_; ++x) {
      if (!alive(cur)) return;
      if (T(c, x) < 0) define(c, x);
    }
  }

  void lookahead() {
    for (std::size_t c = 0; c < fwd_.size(); ++c) {
      for (const auto& rel : rels_) {
        if (!alive(c)) break;
        scan(static_cast<int>(c), rel, false);
      }
    }
  }

  // Drops dead cosets keeping first-definition order; returns the new index
  // of the first live coset at or after `cur`.
  std::size_t compact(std::size_t cur) {
    std::vector<int> map(fwd_.size(), -1);
    int next = 0;
    std::size_t new_cur = std::string::npos;
    for (std::size_t c = 0; c < fwd_.size(); ++c) {
      if (c >= cur && new_cur == std::string::npos && alive(c)) new_cur = static_cast<std::size_t>(next);
      if (alive(c)) map[c] = next++;
    }
    std::vector<int> tab(static_cast<std::size_t>(next) * static_cast<std::size_t>(cols_), -1);
    for (std::size_t c = 0; c < fwd_.size(); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < cols_; ++x) {
        int d = T(static_cast<int>(c), x);
        if (d >= 0) d = map[static_cast<std::size_t>(rep(d))];
        tab[static_cast<std::size_t>(map[c]) * static_cast<std::size_t>(cols_) +
            static_cast<std::size_t>(x)] = d;
      }
    }
    tab_ = std::move(tab);
    fwd_.resize(static_cast<std::size_t>(next));
    std::iota(fwd_.begin(), fwd_.end(), 0);
    return new_cur == std::string::npos ? static_cast<std::size_t>(next) : new_cur;
  }

  int n_;
  int cols_;
  std::size_t cap_;
  std::vector<std::vector<int>> rels_;
  std::vector<int> tab_;
  std::vector<int> fwd_;
  std::size_t defined_ = 0;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, std::size_t cap) {
  return Enumerator(p, cap).run();
}

bool word_trivial_in_coxeter(const CosetTable& t, const Word& w) {
  if (t.status != CosetStatus::Complete) {
    throw Error(ErrorCode::BudgetExhausted, "coset table is capped; quotient undecided");
  }
  int c = 0;
  for (Letter l : w) {
    if (l.gen < 0 || l.gen >= t.n_generators) {
      throw Error(ErrorCode::AlphabetMismatch, "word uses a generator outside the table");
    }
    c = t.action(c, l);
  }
  return c == 0;
}

}  // namespace artinmut
