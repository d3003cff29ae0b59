#include <algorithm>
#include <array>
#include <deque>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_set>

#include "artinmut/error.hpp"
#include "artinmut/verifier.hpp"

namespace artinmut {

namespace {

// Letters are byte codes 2g (generator) and 2g+1 (inverse); c ^ 1 inverts.
using Bytes = std::string;

Bytes encode(const Word& w) {
  Bytes out;
  for (Letter l : w) out.push_back(static_cast<char>(l.code()));
  return out;
}

inline bool cancels(char a, char b) { return (a ^ b) == 1; }

Bytes inverse(std::string_view b) {
  Bytes out(b.rbegin(), b.rend());
  for (char& c : out) c ^= 1;
  return out;
}

// Free reduction followed by cyclic reduction, in place.
void reduce_cyclic(Bytes& s) {
  std::size_t top = 0;
  for (char c : s) {
    if (top > 0 && cancels(s[top - 1], c)) {
      --top;
    } else {
      s[top++] = c;
    }
  }
  s.resize(top);
  std::size_t lo = 0;
  std::size_t hi = s.size();
  while (hi - lo >= 2 && cancels(s[lo], s[hi - 1])) {
    ++lo;
    --hi;
  }
  if (lo > 0) s = s.substr(lo, hi - lo);
}

void reduce_linear(Bytes& s) {
  std::size_t top = 0;
  for (char c : s) {
    if (top > 0 && cancels(s[top - 1], c)) {
      --top;
    } else {
      s[top++] = c;
    }
  }
  s.resize(top);
}

// Booth's least rotation, comparing letters as unsigned bytes.
std::size_t least_rotation(const Bytes& str) {
  const std::size_t n = str.size();
  if (n == 0) return 0;
  auto at = [&](std::size_t i) { return static_cast<unsigned char>(str[i % n]); };
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const unsigned char sj = at(j);
    long i = f[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + static_cast<std::size_t>(i + 1))) {
      if (sj < at(k)) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}

Bytes rotate(const Bytes& s, std::size_t k) {
  if (s.empty()) return s;
  k %= s.size();
  return s.substr(k) + s.substr(0, k);
}

Bytes canonical(const Bytes& s) { return rotate(s, least_rotation(s)); }

struct Rule {
  Bytes u;
  Bytes v;  // the relator rotation is u v^-1
  std::size_t relator;
  bool inverse;  // rotation of core^-1
  std::size_t rotation;
};

struct TrieNode {
  std::vector<int> next;
  std::vector<int> rules;
};

class RuleSet {
 public:
  RuleSet(const Presentation& p) : cols_(2 * p.n_generators) {
    nodes_.push_back(TrieNode{std::vector<int>(static_cast<std::size_t>(cols_), -1), {}});
    std::unordered_set<std::string> seen;
    for (std::size_t idx = 0; idx < p.relators.size(); ++idx) {
      Bytes core = encode(p.relators[idx].word.cyclically_reduced());
      cores_.push_back(core);
      if (core.empty()) continue;
      for (bool inv : {false, true}) {
        const Bytes x = inv ? inverse(core) : core;
        for (std::size_t r = 0; r < x.size(); ++r) {
          const Bytes rho = rotate(x, r);
          for (std::size_t ulen = 1; ulen <= rho.size(); ++ulen) {
            Rule rule{rho.substr(0, ulen), inverse(std::string_view(rho).substr(ulen)), idx, inv, r};
            if (!seen.insert(rule.u + '\xff' + rule.v).second) continue;
            add(std::move(rule));
          }
        }
      }
    }
  }

  const TrieNode& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  const Rule& rule(int i) const { return rules_[static_cast<std::size_t>(i)]; }
  const Bytes& core(std::size_t relator) const { return cores_[relator]; }

 private:
  void add(Rule rule) {
    int t = 0;
    for (char c : rule.u) {
      auto col = static_cast<std::size_t>(static_cast<unsigned char>(c));
      int nx = nodes_[static_cast<std::size_t>(t)].next[col];
      if (nx < 0) {
        nx = static_cast<int>(nodes_.size());
        nodes_[static_cast<std::size_t>(t)].next[col] = nx;
        nodes_.push_back(TrieNode{std::vector<int>(static_cast<std::size_t>(cols_), -1), {}});
      }
      t = nx;
    }
    nodes_[static_cast<std::size_t>(t)].rules.push_back(static_cast<int>(rules_.size()));
    rules_.push_back(std::move(rule));
  }

  int cols_;
  std::vector<TrieNode> nodes_;
  std::vector<Rule> rules_;
  std::vector<Bytes> cores_;
};

struct Node {
  Bytes word;  // canonical rotation of a cyclically reduced word
  int parent;
  int rule;
  std::size_t pos;  // start of the matched u in the parent word
  std::size_t depth;
};

// Turns the cyclic rewriting path into insertions on the linear word.
ProofCertificate linearize(const Word& start, const std::deque<Node>& nodes, int goal,
                           const RuleSet& rules) {
  std::vector<int> path;
  for (int i = goal; i > 0; i = nodes[static_cast<std::size_t>(i)].parent) path.push_back(i);
  std::reverse(path.begin(), path.end());

  ProofCertificate cert;
  cert.start = start;
  Bytes w = encode(start);
  for (int id : path) {
    const Node& child = nodes[static_cast<std::size_t>(id)];
    const Bytes& parent = nodes[static_cast<std::size_t>(child.parent)].word;
    const Rule& r = rules.rule(child.rule);

    Bytes core = w;
    reduce_cyclic(core);
    const std::size_t L = core.size();
    const std::size_t xlen = (w.size() - L) / 2;
    std::size_t o = 0;
    while (o < L && rotate(core, o) != parent) ++o;
    if (o == L) throw Error(ErrorCode::Internal, "certificate: lost track of the cyclic word");

    const std::size_t i = (o + child.pos) % L;
    const std::size_t lrho = r.u.size() + r.v.size();
    // u v^-1 is rotation r of core^s; v u^-1 is rotation lrho - r of core^-s.
    std::size_t offset = (lrho - r.rotation) % lrho;
    ProofStep step;
    step.relator = r.relator;
    step.inverse = !r.inverse;
    if (i + r.u.size() <= L) {
      step.position = xlen + i;
    } else {
      // u = u1 u2 wraps: insert u1^-1 v u2^-1 after the core.
      const std::size_t u1 = L - i;
      step.position = xlen + L;
      offset = (offset + lrho - u1) % lrho;
    }
    step.offset = offset;

    const Bytes& base = rules.core(r.relator);
    Bytes ins = rotate(step.inverse ? inverse(base) : base, step.offset);
    w.insert(step.position, ins);
    reduce_linear(w);
    Bytes check = w;
    reduce_cyclic(check);
    if (canonical(check) != child.word) {
      throw Error(ErrorCode::Internal, "certificate: insertion does not reproduce the search step");
    }
    cert.steps.push_back(step);
  }
  if (!w.empty()) throw Error(ErrorCode::Internal, "certificate: final word is not empty");
  return cert;
}

}  // namespace

ProofResult prove_trivial(const Presentation& p, const Word& w, const SearchBudget& budget) {
  if (2 * p.n_generators > 255) throw Error(ErrorCode::InvalidArgument, "too many generators");
  if (w.max_generator() >= p.n_generators) {
    throw Error(ErrorCode::AlphabetMismatch, "word uses a generator outside the presentation");
  }
  ProofResult result;
  Bytes start = encode(w);
  reduce_cyclic(start);
  if (start.empty()) {
    result.certificate = ProofCertificate{w, {}};
    result.nodes = 1;
    return result;
  }

  const RuleSet rules(p);
  const std::size_t max_len = w.size() + budget.extra_len;

  std::deque<Node> nodes;
  std::unordered_set<std::string_view> seen;
  nodes.push_back(Node{canonical(start), -1, -1, 0, 0});
  seen.insert(nodes.back().word);

  // Shortest word first, then shallowest, then oldest.
  using Entry = std::tuple<std::size_t, std::size_t, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  open.emplace(nodes.back().word.size(), 0, 0);

  Bytes child;
  while (!open.empty()) {
    const int id = std::get<2>(open.top());
    open.pop();
    const Bytes cur = nodes[static_cast<std::size_t>(id)].word;
    const std::size_t depth = nodes[static_cast<std::size_t>(id)].depth;
    const std::size_t L = cur.size();
    for (std::size_t q = 0; q < L; ++q) {
      int t = 0;
      for (std::size_t s = 0; s < L; ++s) {
        const auto col = static_cast<std::size_t>(static_cast<unsigned char>(cur[(q + s) % L]));
        t = rules.node(t).next[col];
        if (t < 0) break;
        for (int rid : rules.node(t).rules) {
          const Rule& r = rules.rule(rid);
          const std::size_t rest = L - (s + 1);
          child.assign(r.v);
          for (std::size_t k = 0; k < rest; ++k) child.push_back(cur[(q + s + 1 + k) % L]);
          reduce_cyclic(child);
          if (child.size() > max_len) continue;
          Bytes canon = canonical(child);
          if (seen.count(canon)) continue;
          nodes.push_back(Node{std::move(canon), id, rid, q, depth + 1});
          seen.insert(nodes.back().word);
          const int cid = static_cast<int>(nodes.size() - 1);
          if (nodes.back().word.empty()) {
            result.nodes = nodes.size();
            result.certificate = linearize(w, nodes, cid, rules);
            return result;
          }
          if (nodes.size() >= budget.max_nodes) {
            result.nodes = nodes.size();
            return result;
          }
          open.emplace(nodes.back().word.size(), depth + 1, cid);
        }
      }
    }
  }
  result.nodes = nodes.size();
  return result;
}

}  // namespace artinmut
