#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace magnus {

struct Config {
  int rank = 2;    // number of generators x_1..x_r
  int degree = 2;  // solvability class: 1 abelian, 2 metabelian, ...
};

// One generator or its formal inverse. The generating set is {x_1..x_r} only;
// inverse traversal is carried by the sign.
struct Letter {
  int gen;   // 1..rank
  int sign;  // +1 or -1

  Letter inverse() const { return Letter{gen, -sign}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Text syntax: whitespace-separated tokens `x<k>` or `x<k>^-1`, k in 1..rank;
  // the empty string is the identity. Errors name the offending token.
  static Word parse(std::string_view text, int rank);

  std::string str() const;

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word operator*(const Word& other) const;  // concatenation, no reduction
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Unique freely-reduced form: no adjacent x_i x_i^-1 or x_i^-1 x_i pairs.
Word freeReduce(const Word& w);

bool isFreelyReduced(const Word& w);

// a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

}  // namespace magnus
