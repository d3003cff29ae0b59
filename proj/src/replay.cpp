// Certificate replay. Deliberately shares no code with the searcher: words
// are plain (generator, sign) pairs and every operation is spelled out here.
#include <utility>
#include <vector>

#include "artinmut/verifier.hpp"

namespace artinmut {

namespace {

using Seq = std::vector<std::pair<int, int>>;

Seq to_seq(const Word& w) {
  Seq s;
  for (Letter l : w) s.emplace_back(l.gen, l.sign);
  return s;
}

bool inverse_pair(const std::pair<int, int>& a, const std::pair<int, int>& b) {
  return a.first == b.first && a.second == -b.second;
}

Seq freely_reduce(const Seq& s) {
  Seq out;
  for (const auto& x : s) {
    if (!out.empty() && inverse_pair(out.back(), x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Seq invert(const Seq& s) {
  Seq out;
  for (auto it = s.rbegin(); it != s.rend(); ++it) out.emplace_back(it->first, -it->second);
  return out;
}

Seq cyclic_core(Seq s) {
  s = freely_reduce(s);
  std::size_t lo = 0;
  std::size_t hi = s.size();
  while (hi >= lo + 2 && inverse_pair(s[lo], s[hi - 1])) {
    ++lo;
    --hi;
  }
  return Seq(s.begin() + static_cast<std::ptrdiff_t>(lo), s.begin() + static_cast<std::ptrdiff_t>(hi));
}

}  // namespace

bool replay_certificate(const Presentation& p, const ProofCertificate& c) {
  Seq w = to_seq(c.start);
  if (freely_reduce(w) != w) return false;
  for (const ProofStep& step : c.steps) {
    if (step.relator >= p.relators.size()) return false;
    Seq base = cyclic_core(to_seq(p.relators[step.relator].word));
    if (step.inverse) base = invert(base);
    if (base.empty() || step.offset >= base.size() || step.position > w.size()) return false;
    Seq inserted(base.begin() + static_cast<std::ptrdiff_t>(step.offset), base.end());
    inserted.insert(inserted.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(step.offset));
    Seq next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(step.position));
    next.insert(next.end(), inserted.begin(), inserted.end());
    next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(step.position), w.end());
    w = freely_reduce(next);
  }
  return w.empty();
}

}  // namespace artinmut
