#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace artinmut {

// One signed generator occurrence. Generators are 0-based internally; every
// textual and JSON form is 1-based.
struct Letter {
  int gen = 0;
  int sign = 1;  // +1 or -1

  constexpr Letter inverse() const { return {gen, -sign}; }
  constexpr bool cancels(Letter other) const {
    return gen == other.gen && sign == -other.sign;
  }
  // Dense code used for ordering and hashing: 2g for g, 2g+1 for g^-1.
  constexpr int code() const { return 2 * gen + (sign < 0 ? 1 : 0); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter a, Letter b) {
    return a.code() <=> b.code();
  }
};

constexpr Letter gen(int g) { return {g, 1}; }
constexpr Letter inv(int g) { return {g, -1}; }

// Element of a free group, always kept freely reduced.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::span<const Letter> letters);

  static Word generator(int g, int sign = 1);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // Appends one letter, cancelling against the current tail.
  void push_back(Letter l);
  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  Word inverse() const;
  // x * this * x^-1
  Word conjugated_by(const Word& x) const;
  Word pow(int exponent) const;

  // Cyclic reduction: strips x from x * core * x^-1.
  Word cyclically_reduced() const;
  // The lexicographically least rotation of the cyclic reduction.
  Word canonical_rotation() const;
  Word rotated(std::size_t offset) const;

  int max_generator() const;  // -1 for the empty word
  std::vector<int> exponent_sums(int n_generators) const;

  // "g1 g2 G1" style: lowercase = generator, uppercase = inverse.
  std::string to_text() const;
  static Word from_text(std::string_view text);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
        b.letters_.end());
  }

 private:
  std::vector<Letter> letters_;
};

// ⟨x, y⟩^m: alternating product x y x y ... with m factors.
Word alternating(const Word& x, const Word& y, int m);

// [a, b] = a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

}  // namespace artinmut

template <>
struct std::hash<artinmut::Word> {
  std::size_t operator()(const artinmut::Word& w) const noexcept;
};
