#include "magnus/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>

#include "magnus/errors.hpp"

namespace magnus {

namespace {

constexpr int kMaxOracleRank = 4;

void checkOracleParams(int rank, int radius, const OracleLimits& limits) {
  if (rank < 1 || rank > kMaxOracleRank) {
    throw CapacityError("BFS oracle supports rank 1.." + std::to_string(kMaxOracleRank));
  }
  if (radius < 0 || radius > limits.hardRadiusCap) {
    throw CapacityError("BFS oracle radius " + std::to_string(radius) + " exceeds hard cap " +
                        std::to_string(limits.hardRadiusCap));
  }
}

// Packed coordinates: one signed byte per axis; safe while radius < 128.
using Coord = std::array<int8_t, kMaxOracleRank>;

std::optional<int8_t> narrow8(const Int& v, int bound) {
  if (v < -bound || v > bound) return std::nullopt;
  return static_cast<int8_t>(v.convert_to<int>());
}

// ---- degree-2 states: endpoint + sorted flow entries ----

struct FnEntry {
  Coord base{};
  int8_t gen = 0;
  int8_t val = 0;
};

struct FnState {
  Coord end{};
  std::vector<FnEntry> edges;  // sorted by (base prefix, gen)

  static FnState decode(const std::string& s, int rank) {
    FnState st;
    std::size_t at = 0;
    for (int a = 0; a < rank; ++a) st.end[a] = static_cast<int8_t>(s[at++]);
    while (at < s.size()) {
      FnEntry e;
      for (int a = 0; a < rank; ++a) e.base[a] = static_cast<int8_t>(s[at++]);
      e.gen = static_cast<int8_t>(s[at++]);
      e.val = static_cast<int8_t>(s[at++]);
      st.edges.push_back(e);
    }
    return st;
  }

  std::string encode(int rank) const {
    std::string s;
    s.reserve(rank + edges.size() * (rank + 2));
    for (int a = 0; a < rank; ++a) s.push_back(static_cast<char>(end[a]));
    for (const FnEntry& e : edges) {
      for (int a = 0; a < rank; ++a) s.push_back(static_cast<char>(e.base[a]));
      s.push_back(static_cast<char>(e.gen));
      s.push_back(static_cast<char>(e.val));
    }
    return s;
  }

  void bump(const Coord& base, int gen, int delta, int rank) {
    auto less = [rank](const FnEntry& e, const std::pair<Coord, int>& k) {
      for (int a = 0; a < rank; ++a) {
        if (e.base[a] != k.first[a]) return e.base[a] < k.first[a];
      }
      return e.gen < k.second;
    };
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(base, gen), less);
    if (it != edges.end() && it->gen == gen && std::equal(it->base.begin(), it->base.begin() + rank, base.begin())) {
      it->val = static_cast<int8_t>(it->val + delta);
      if (it->val == 0) edges.erase(it);
    } else {
      FnEntry e;
      e.base = base;
      e.gen = static_cast<int8_t>(gen);
      e.val = static_cast<int8_t>(delta);
      edges.insert(it, e);
    }
  }

  void apply(Letter l, int rank) {
    if (l.sign > 0) {
      bump(end, l.gen, 1, rank);
      end[l.gen - 1] = static_cast<int8_t>(end[l.gen - 1] + 1);
    } else {
      end[l.gen - 1] = static_cast<int8_t>(end[l.gen - 1] - 1);
      bump(end, l.gen, -1, rank);
    }
  }
};

}  // namespace

FnBfsOracle::FnBfsOracle(int rank, int radius, OracleLimits limits)
    : rank_(rank), radius_(radius), lattice_(rank) {
  checkOracleParams(rank, radius, limits);
  FnState identity;
  std::string idKey = identity.encode(rank_);
  dist_.emplace(idKey, 0);
  std::deque<std::string> queue{idKey};
  while (!queue.empty()) {
    std::string key = std::move(queue.front());
    queue.pop_front();
    int d = dist_.at(key);
    if (d >= radius_) continue;
    FnState st = FnState::decode(key, rank_);
    for (int g = 1; g <= rank_; ++g) {
      for (int sign : {1, -1}) {
        FnState next = st;
        next.apply(Letter{g, sign}, rank_);
        std::string nk = next.encode(rank_);
        if (dist_.emplace(nk, d + 1).second) {
          if (dist_.size() > limits.maxStates) {
            throw CapacityError("FN oracle: state cap exceeded at radius " + std::to_string(d + 1));
          }
          queue.push_back(std::move(nk));
        }
      }
    }
  }
}

std::optional<Int> FnBfsOracle::length(const Word& w) const {
  Flow f = flowOfWord(lattice_, w);
  FnState target;
  std::vector<Int> end = lattice_.coords(evaluateInBase(lattice_, w));
  for (int a = 0; a < rank_; ++a) {
    auto c = narrow8(end[a], radius_);
    if (!c) return std::nullopt;
    target.end[a] = *c;
  }
  for (const auto& [e, v] : f.entries()) {
    FnEntry entry;
    std::vector<Int> base = lattice_.coords(e.base);
    for (int a = 0; a < rank_; ++a) {
      auto c = narrow8(base[a], radius_);
      if (!c) return std::nullopt;
      entry.base[a] = *c;
    }
    auto val = narrow8(v, radius_);
    if (!val) return std::nullopt;
    entry.gen = static_cast<int8_t>(e.gen);
    entry.val = *val;
    target.edges.push_back(entry);
  }
  // Canonical key order differs from packed byte order once coordinates have
  // several digits; re-sort into the ball's order.
  std::sort(target.edges.begin(), target.edges.end(), [this](const FnEntry& a, const FnEntry& b) {
    for (int i = 0; i < rank_; ++i) {
      if (a.base[i] != b.base[i]) return a.base[i] < b.base[i];
    }
    return a.gen < b.gen;
  });
  auto it = dist_.find(target.encode(rank_));
  if (it == dist_.end()) return std::nullopt;
  return Int(it->second);
}

namespace {

// ---- wreath states: shadow + sorted lamps ----

struct WreathLamp {
  Coord pos{};
  Coord val{};
};

struct WreathState {
  Coord shadow{};
  std::vector<WreathLamp> lamps;  // sorted by pos

  std::string encode(int rank) const {
    std::string s;
    s.reserve(rank + lamps.size() * 2 * rank);
    for (int a = 0; a < rank; ++a) s.push_back(static_cast<char>(shadow[a]));
    for (const WreathLamp& l : lamps) {
      for (int a = 0; a < rank; ++a) s.push_back(static_cast<char>(l.pos[a]));
      for (int a = 0; a < rank; ++a) s.push_back(static_cast<char>(l.val[a]));
    }
    return s;
  }

  static WreathState decode(const std::string& s, int rank) {
    WreathState st;
    std::size_t at = 0;
    for (int a = 0; a < rank; ++a) st.shadow[a] = static_cast<int8_t>(s[at++]);
    while (at < s.size()) {
      WreathLamp l;
      for (int a = 0; a < rank; ++a) l.pos[a] = static_cast<int8_t>(s[at++]);
      for (int a = 0; a < rank; ++a) l.val[a] = static_cast<int8_t>(s[at++]);
      st.lamps.push_back(l);
    }
    return st;
  }

  void lampBump(int gen, int delta, int rank) {
    auto less = [rank](const WreathLamp& l, const Coord& p) {
      for (int a = 0; a < rank; ++a) {
        if (l.pos[a] != p[a]) return l.pos[a] < p[a];
      }
      return false;
    };
    auto it = std::lower_bound(lamps.begin(), lamps.end(), shadow, less);
    if (it != lamps.end() && std::equal(it->pos.begin(), it->pos.begin() + rank, shadow.begin())) {
      it->val[gen - 1] = static_cast<int8_t>(it->val[gen - 1] + delta);
      bool zero = true;
      for (int a = 0; a < rank; ++a) zero = zero && it->val[a] == 0;
      if (zero) lamps.erase(it);
    } else {
      WreathLamp l;
      l.pos = shadow;
      l.val[gen - 1] = static_cast<int8_t>(delta);
      lamps.insert(it, l);
    }
  }
};

// 4*rank neighbours: shadow moves then lamp writes.
template <typename Fn>
void forEachWreathNeighbour(const WreathState& st, int rank, Fn&& fn) {
  for (int g = 1; g <= rank; ++g) {
    for (int sign : {1, -1}) {
      WreathState next = st;
      next.shadow[g - 1] = static_cast<int8_t>(next.shadow[g - 1] + sign);
      fn(std::move(next));
    }
  }
  for (int g = 1; g <= rank; ++g) {
    for (int sign : {1, -1}) {
      WreathState next = st;
      next.lampBump(g, sign, rank);
      fn(std::move(next));
    }
  }
}

}  // namespace

WreathBfsOracle::WreathBfsOracle(int rank, int radius, OracleLimits limits)
    : rank_(rank), radius_(radius), limits_(limits), lattice_(rank) {
  checkOracleParams(rank, radius, limits_);
  forwardRadius_ = (radius + 1) / 2;
  WreathState identity;
  std::string idKey = identity.encode(rank_);
  forward_.emplace(idKey, 0);
  std::deque<std::string> queue{idKey};
  while (!queue.empty()) {
    std::string key = std::move(queue.front());
    queue.pop_front();
    int d = forward_.at(key);
    if (d >= forwardRadius_) continue;
    WreathState st = WreathState::decode(key, rank_);
    forEachWreathNeighbour(st, rank_, [&](WreathState next) {
      std::string nk = next.encode(rank_);
      if (forward_.try_emplace(nk, d + 1).second) {
        if (forward_.size() > limits_.maxStates) {
          throw CapacityError("wreath oracle: state cap exceeded");
        }
        queue.push_back(std::move(nk));
      }
    });
  }
}

std::optional<Int> WreathBfsOracle::length(const WreathElement& e) const {
  WreathState target;
  std::vector<Int> shadow = lattice_.coords(e.shadow());
  for (int a = 0; a < rank_; ++a) {
    auto c = narrow8(shadow[a], radius_);
    if (!c) return std::nullopt;
    target.shadow[a] = *c;
  }
  for (const auto& [at, v] : e.lamps()) {
    WreathLamp lamp;
    std::vector<Int> pos = lattice_.coords(at);
    for (int a = 0; a < rank_; ++a) {
      auto c = narrow8(pos[a], radius_);
      if (!c) return std::nullopt;
      lamp.pos[a] = *c;
    }
    for (int a = 0; a < rank_; ++a) {
      auto c = narrow8(v[a], radius_);
      if (!c) return std::nullopt;
      lamp.val[a] = *c;
    }
    target.lamps.push_back(lamp);
  }
  std::sort(target.lamps.begin(), target.lamps.end(), [this](const WreathLamp& a, const WreathLamp& b) {
    for (int i = 0; i < rank_; ++i) {
      if (a.pos[i] != b.pos[i]) return a.pos[i] < b.pos[i];
    }
    return false;
  });

  int backwardRadius = radius_ / 2;
  long long best = -1;
  std::unordered_map<std::string, int> back;
  std::string tKey = target.encode(rank_);
  back.emplace(tKey, 0);
  std::deque<std::string> queue{tKey};
  auto consider = [&](const std::string& key, int db) {
    auto it = forward_.find(key);
    if (it != forward_.end()) {
      long long cand = static_cast<long long>(it->second) + db;
      if (best < 0 || cand < best) best = cand;
    }
  };
  consider(tKey, 0);
  while (!queue.empty()) {
    std::string key = std::move(queue.front());
    queue.pop_front();
    int d = back.at(key);
    if (d >= backwardRadius) continue;
    WreathState st = WreathState::decode(key, rank_);
    forEachWreathNeighbour(st, rank_, [&](WreathState next) {
      std::string nk = next.encode(rank_);
      if (back.try_emplace(nk, d + 1).second) {
        if (back.size() > limits_.maxStates) {
          throw CapacityError("wreath oracle: state cap exceeded");
        }
        consider(nk, d + 1);
        queue.push_back(std::move(nk));
      }
    });
  }
  if (best < 0 || best > radius_) return std::nullopt;
  return Int(best);
}

std::optional<Int> bfsGeodesicOracleFN(const Word& w, int rank, int radius) {
  return FnBfsOracle(rank, radius).length(w);
}

std::optional<Int> bfsGeodesicOracleWreath(const LatticeGroup& B, const WreathElement& e, int radius) {
  WreathBfsOracle oracle(B.rank(), radius);
  return oracle.length(e);
}

}  // namespace magnus
