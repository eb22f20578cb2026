#include "magnus/word.hpp"

#include <cctype>
#include <sstream>

#include "magnus/errors.hpp"

namespace magnus {

namespace {

Letter parseToken(const std::string& token, std::size_t position, int rank) {
  auto fail = [&](const std::string& why) {
    throw ParseError("token " + std::to_string(position) + " ('" + token + "'): " + why);
  };

  if (token.size() < 2 || token[0] != 'x') fail("expected x<k> or x<k>^-1");
  std::size_t i = 1;
  while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) ++i;
  if (i == 1) fail("missing generator index");

  long long gen = 0;
  try {
    gen = std::stoll(token.substr(1, i - 1));
  } catch (const std::out_of_range&) {
    fail("generator index out of range");
  }
  if (gen < 1) fail("generator index must be at least 1");
  if (gen > rank) fail("generator index " + std::to_string(gen) + " exceeds rank " + std::to_string(rank));

  int sign = 1;
  if (i != token.size()) {
    if (token.substr(i) != "^-1") fail("expected x<k> or x<k>^-1");
    sign = -1;
  }
  return Letter{static_cast<int>(gen), sign};
}

}  // namespace

Word Word::parse(std::string_view text, int rank) {
  if (rank < 1) throw RankError("rank must be at least 1");
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  std::size_t position = 0;
  while (in >> token) {
    ++position;
    letters.push_back(parseToken(token, position, rank));
  }
  return Word(std::move(letters));
}

std::string Word::str() const {
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

Word Word::inverse() const {
  std::vector<Letter> rev;
  rev.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) rev.push_back(it->inverse());
  return Word(std::move(rev));
}

Word Word::operator*(const Word& other) const {
  std::vector<Letter> joined = letters_;
  joined.insert(joined.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(joined));
}

Word freeReduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back().gen == l.gen && stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

bool isFreelyReduced(const Word& w) {
  const auto& ls = w.letters();
  for (std::size_t i = 1; i < ls.size(); ++i) {
    if (ls[i].gen == ls[i - 1].gen && ls[i].sign == -ls[i - 1].sign) return false;
  }
  return true;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

}  // namespace magnus
