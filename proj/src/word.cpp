#include "artinmut/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "artinmut/error.hpp"

namespace artinmut {

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter l : letters) push_back(l);
}

Word::Word(std::span<const Letter> letters) {
  for (Letter l : letters) push_back(l);
}

Word Word::generator(int g, int sign) {
  Word w;
  w.letters_.push_back({g, sign < 0 ? -1 : 1});
  return w;
}

void Word::push_back(Letter l) {
  if (!letters_.empty() && letters_.back().cancels(l)) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

Word& Word::operator*=(const Word& rhs) {
  for (Letter l : rhs.letters_) push_back(l);
  return *this;
}

Word Word::inverse() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(it->inverse());
  }
  return out;
}

Word Word::conjugated_by(const Word& x) const { return x * *this * x.inverse(); }

Word Word::pow(int exponent) const {
  Word base = exponent < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < std::abs(exponent); ++i) out *= base;
  return out;
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0;
  std::size_t hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo].cancels(letters_[hi - 1])) {
    ++lo;
    --hi;
  }
  Word out;
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                      letters_.begin() + static_cast<std::ptrdiff_t>(hi));
  return out;
}

Word Word::rotated(std::size_t offset) const {
  Word out;
  if (letters_.empty()) return out;
  offset %= letters_.size();
  out.letters_.reserve(letters_.size());
  out.letters_.insert(out.letters_.end(),
                      letters_.begin() + static_cast<std::ptrdiff_t>(offset),
                      letters_.end());
  out.letters_.insert(out.letters_.end(), letters_.begin(),
                      letters_.begin() + static_cast<std::ptrdiff_t>(offset));
  return out;
}

Word Word::canonical_rotation() const {
  Word core = cyclically_reduced();
  const std::size_t n = core.size();
  if (n == 0) return core;
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      Letter a = core.letters_[(r + i) % n];
      Letter b = core.letters_[(best + i) % n];
      if (a == b) continue;
      if (a < b) best = r;
      break;
    }
  }
  return core.rotated(best);
}

int Word::max_generator() const {
  int m = -1;
  for (Letter l : letters_) m = std::max(m, l.gen);
  return m;
}

std::vector<int> Word::exponent_sums(int n_generators) const {
  std::vector<int> sums(static_cast<std::size_t>(n_generators), 0);
  for (Letter l : letters_) {
    if (l.gen < 0 || l.gen >= n_generators) {
      throw Error(ErrorCode::AlphabetMismatch,
                  "generator index outside the alphabet");
    }
    sums[static_cast<std::size_t>(l.gen)] += l.sign;
  }
  return sums;
}

std::string Word::to_text() const {
  std::ostringstream os;
  bool first = true;
  for (Letter l : letters_) {
    if (!first) os << ' ';
    first = false;
    os << (l.sign > 0 ? 'g' : 'G') << (l.gen + 1);
  }
  return os.str();
}

Word Word::from_text(std::string_view text) {
  Word w;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                               text[i] == '*' || text[i] == ',')) {
      ++i;
    }
  };
  skip_space();
  if (text.substr(i) == "e") return w;
  while (i < text.size()) {
    char c = text[i];
    if (c != 'g' && c != 'G') {
      throw Error(ErrorCode::Parse,
                  "word text: expected 'g' or 'G' at offset " +
                      std::to_string(i));
    }
    ++i;
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || value < 1) {
      throw Error(ErrorCode::Parse, "word text: bad generator index");
    }
    i = static_cast<std::size_t>(ptr - text.data());
    w.push_back({value - 1, c == 'g' ? 1 : -1});
    skip_space();
  }
  return w;
}

Word alternating(const Word& x, const Word& y, int m) {
  Word out;
  for (int i = 0; i < m; ++i) out *= (i % 2 == 0) ? x : y;
  return out;
}

Word commutator(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

}  // namespace artinmut

std::size_t std::hash<artinmut::Word>::operator()(
    const artinmut::Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (artinmut::Letter l : w) {
    h ^= static_cast<std::size_t>(l.code() + 1);
    h *= 1099511628211ULL;
  }
  return h;
}
