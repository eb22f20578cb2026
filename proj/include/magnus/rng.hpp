#pragma once

#include <cstdint>

#include "magnus/word.hpp"

namespace magnus {

// splitmix64 with multiply-shift range reduction: identical streams on every
// platform, which the reproducibility contract needs (std::uniform_int_distribution
// is implementation-defined).
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

// Uniform freely-reduced word of the given length: first letter uniform over
// all 2r, each later letter uniform over the 2r-1 non-cancelling choices.
inline Word randomReducedWord(DetRng& rng, int rank, std::size_t length) {
  std::vector<Letter> letters;
  letters.reserve(length);
  auto letterAt = [rank](std::uint64_t idx) {
    return Letter{static_cast<int>(idx % rank) + 1, idx < static_cast<std::uint64_t>(rank) ? 1 : -1};
  };
  for (std::size_t i = 0; i < length; ++i) {
    if (letters.empty()) {
      letters.push_back(letterAt(rng.below(2 * rank)));
      continue;
    }
    Letter banned = letters.back().inverse();
    std::uint64_t bannedIdx = static_cast<std::uint64_t>(banned.gen - 1) + (banned.sign > 0 ? 0 : rank);
    std::uint64_t pick = rng.below(2 * rank - 1);
    if (pick >= bannedIdx) ++pick;
    letters.push_back(letterAt(pick));
  }
  return Word(std::move(letters));
}

}  // namespace magnus
