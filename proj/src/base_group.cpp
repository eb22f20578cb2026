#include "magnus/base_group.hpp"

#include <deque>
#include <unordered_map>

#include "magnus/errors.hpp"

namespace magnus {

BaseGroup::BaseGroup(int rank, ElemKey identity) : rank_(rank), identity_(std::move(identity)) {
  if (rank < 1) throw RankError("rank must be at least 1");
}

void BaseGroup::checkLetter(Letter l) const {
  if (l.gen < 1 || l.gen > rank_) {
    throw RankError("generator index " + std::to_string(l.gen) + " outside 1.." + std::to_string(rank_));
  }
  if (l.sign != 1 && l.sign != -1) throw StructureError("letter sign must be +1 or -1");
}

Int BaseGroup::distance(const ElemKey&, const ElemKey&) const {
  throw MetricError("exact word metric unavailable at degree " + std::to_string(degree()) +
                    "; use boundedDistance (BFS oracle)");
}

std::optional<Int> BaseGroup::boundedDistance(const ElemKey& a, const ElemKey& b, int radius,
                                              std::size_t stateCap) const {
  if (radius < 0) throw StructureError("negative BFS radius");
  if (a == b) return Int(0);
  // BFS from a; generators are symmetric so graph distance is symmetric.
  std::unordered_map<ElemKey, int> depth{{a, 0}};
  std::deque<ElemKey> queue{a};
  while (!queue.empty()) {
    ElemKey cur = std::move(queue.front());
    queue.pop_front();
    int d = depth.at(cur);
    if (d >= radius) continue;
    for (int g = 1; g <= rank(); ++g) {
      for (int sign : {1, -1}) {
        ElemKey next = mul(cur, Letter{g, sign});
        if (depth.contains(next)) continue;
        if (next == b) return Int(d + 1);
        if (depth.size() >= stateCap) {
          throw CapacityError("boundedDistance: state cap " + std::to_string(stateCap) + " hit at depth " +
                              std::to_string(d + 1));
        }
        depth.emplace(next, d + 1);
        queue.push_back(std::move(next));
      }
    }
  }
  return std::nullopt;
}

LatticeGroup::LatticeGroup(int rank) : BaseGroup(rank, [rank] {
  std::string k = "(0";
  for (int i = 1; i < rank; ++i) k += ",0";
  return k + ")";
}()) {}

std::vector<Int> LatticeGroup::coords(const ElemKey& x) const {
  if (x.size() < 2 || x.front() != '(' || x.back() != ')') {
    throw StructureError("not a lattice element key: '" + x + "'");
  }
  std::vector<Int> out;
  std::size_t i = 1;
  while (i < x.size() - 1) {
    std::size_t j = i;
    if (x[j] == '-') ++j;
    std::size_t digits = j;
    while (j < x.size() - 1 && x[j] >= '0' && x[j] <= '9') ++j;
    if (j == digits) throw StructureError("not a lattice element key: '" + x + "'");
    out.emplace_back(x.substr(i, j - i));
    if (j < x.size() - 1) {
      if (x[j] != ',') throw StructureError("not a lattice element key: '" + x + "'");
      ++j;
    }
    i = j;
  }
  if (static_cast<int>(out.size()) != rank()) {
    throw StructureError("lattice key '" + x + "' has " + std::to_string(out.size()) +
                         " coordinates, expected " + std::to_string(rank()));
  }
  return out;
}

ElemKey LatticeGroup::keyOf(const std::vector<Int>& coords) const {
  if (static_cast<int>(coords.size()) != rank()) {
    throw StructureError("coordinate count " + std::to_string(coords.size()) + " does not match rank " +
                         std::to_string(rank()));
  }
  std::string k = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) k += ',';
    k += coords[i].str();
  }
  return k + ")";
}

ElemKey LatticeGroup::mul(const ElemKey& x, Letter l) const {
  checkLetter(l);
  std::vector<Int> c = coords(x);
  c[l.gen - 1] += l.sign;
  return keyOf(c);
}

ElemKey LatticeGroup::inverse(const ElemKey& x) const {
  std::vector<Int> c = coords(x);
  for (Int& v : c) v = -v;
  return keyOf(c);
}

ElemKey LatticeGroup::leftMul(const ElemKey& g, const ElemKey& x) const {
  std::vector<Int> a = coords(g), b = coords(x);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return keyOf(a);
}

Json LatticeGroup::encode(const ElemKey& x) const {
  Json arr = Json::array();
  for (const Int& v : coords(x)) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
      arr.push_back(v.convert_to<long long>());
    } else {
      arr.push_back(v.str());  // decimal-string fallback beyond 64 bits
    }
  }
  return arr;
}

Int LatticeGroup::distance(const ElemKey& a, const ElemKey& b) const {
  std::vector<Int> ca = coords(a), cb = coords(b);
  Int d = 0;
  for (std::size_t i = 0; i < ca.size(); ++i) d += absInt(ca[i] - cb[i]);
  return d;
}

ElemKey evaluateInBase(const BaseGroup& B, const Word& w) {
  ElemKey cur = B.identity();
  for (const Letter& l : w.letters()) cur = B.mul(cur, l);
  return cur;
}

}  // namespace magnus
