#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace socrank {

// A coalition is a bit pattern over player indices: bit i set = player i present.
using Coalition = std::uint32_t;

inline constexpr int kMaxPlayers = 24;

inline int coalition_size(Coalition c) { return std::popcount(c); }

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownPlayerError : Error {
  explicit UnknownPlayerError(std::string_view label)
      : Error("unknown player: " + std::string(label)) {}
};

struct SamePlayerError : Error {
  SamePlayerError() : Error("players i and j must differ") {}
};

struct SizeOutOfRangeError : Error {
  explicit SizeOutOfRangeError(int k) : Error("size out of range: " + std::to_string(k)) {}
};

struct ValidationError : Error {
  enum class Kind { DuplicateCoalition, MissingCoalition, EmptyClass, EmptyCoalitionListed };
  Kind kind;
  ValidationError(Kind k, const std::string& what) : Error(what), kind(k) {}
};

class PlayerSet {
 public:
  explicit PlayerSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty() || names_.size() > kMaxPlayers)
      throw Error("player count must be in [1, " + std::to_string(kMaxPlayers) + "]");
    for (const auto& name : names_) {
      if (name.empty()) throw Error("player labels must be non-empty");
    }
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("player labels must be unique");
  }

  // Convenience set with labels "1".."n".
  static PlayerSet of_size(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    return PlayerSet(std::move(names));
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> index_of(std::string_view label) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == label) return static_cast<int>(i);
    return std::nullopt;
  }

  int require(std::string_view label) const {
    if (auto i = index_of(label)) return *i;
    throw UnknownPlayerError(label);
  }

  bool operator==(const PlayerSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

// A coalitional ranking stored as its quotient order: an ordered list of
// equivalence classes (index 1 = strongest) plus a class lookup table over
// all 2^n bit patterns. The empty pattern is never ranked; class_of(0) = 0.
class PowerRelation {
 public:
  PowerRelation(PlayerSet players, std::vector<std::vector<Coalition>> classes)
      : players_(std::move(players)), classes_(std::move(classes)) {
    const Coalition full = full_mask();
    class_of_.assign(static_cast<std::size_t>(full) + 1, 0);
    std::uint32_t k = 0;
    for (const auto& cls : classes_) {
      ++k;
      if (cls.empty())
        throw ValidationError(ValidationError::Kind::EmptyClass,
                              "class " + std::to_string(k) + " is empty");
      for (Coalition c : cls) {
        if (c == 0)
          throw ValidationError(ValidationError::Kind::EmptyCoalitionListed,
                                "the empty coalition cannot be ranked");
        if (c > full) throw Error("coalition out of range for player set");
        if (class_of_[c] != 0)
          throw ValidationError(ValidationError::Kind::DuplicateCoalition,
                                "coalition listed twice: " + describe(c));
        class_of_[c] = k;
      }
    }
    for (Coalition c = 1; c <= full; ++c) {
      if (class_of_[c] == 0)
        throw ValidationError(ValidationError::Kind::MissingCoalition,
                              "coalition missing from the ranking: " + describe(c));
    }
  }

  const PlayerSet& players() const { return players_; }
  int player_count() const { return players_.size(); }
  Coalition full_mask() const {
    return static_cast<Coalition>((1u << players_.size()) - 1u);
  }
  std::uint32_t coalition_count() const { return full_mask(); }

  std::size_t class_count() const { return classes_.size(); }
  const std::vector<std::vector<Coalition>>& classes() const { return classes_; }

  // 1-based class index, smaller = stronger.
  std::uint32_t class_of(Coalition c) const { return class_of_[c]; }

  // Three-way strength comparison: >0 iff a is strictly stronger than b.
  int compare(Coalition a, Coalition b) const {
    const std::uint32_t ka = class_of_[a], kb = class_of_[b];
    return ka < kb ? 1 : (ka > kb ? -1 : 0);
  }

  PowerRelation reversed() const {
    std::vector<std::vector<Coalition>> rev(classes_.rbegin(), classes_.rend());
    return PowerRelation(players_, std::move(rev));
  }

  bool same_quotient(const PowerRelation& other) const {
    if (classes_.size() != other.classes_.size()) return false;
    for (std::size_t k = 0; k < classes_.size(); ++k) {
      auto a = classes_[k];
      auto b = other.classes_[k];
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return false;
    }
    return true;
  }

  std::string describe(Coalition c) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < players_.size(); ++i) {
      if (c & (Coalition{1} << i)) {
        if (!first) out += ',';
        out += players_.name(i);
        first = false;
      }
    }
    out += '}';
    return out;
  }

 private:
  PlayerSet players_;
  std::vector<std::vector<Coalition>> classes_;
  std::vector<std::uint32_t> class_of_;
};

// Builds a relation from an arbitrary per-coalition level assignment
// (lower level = stronger); levels need not be consecutive. assignment[0]
// is ignored. Classes come out ordered by level with empties dropped.
inline PowerRelation relation_from_assignment(const PlayerSet& players,
                                              const std::vector<std::uint32_t>& assignment) {
  const Coalition full = static_cast<Coalition>((1u << players.size()) - 1u);
  std::vector<std::uint32_t> levels;
  for (Coalition c = 1; c <= full; ++c) levels.push_back(assignment[c]);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<std::vector<Coalition>> classes(levels.size());
  for (Coalition c = 1; c <= full; ++c) {
    const auto it = std::lower_bound(levels.begin(), levels.end(), assignment[c]);
    classes[static_cast<std::size_t>(it - levels.begin())].push_back(c);
  }
  return PowerRelation(players, std::move(classes));
}

inline PowerRelation build_power_relation(PlayerSet players,
                                          std::vector<std::vector<Coalition>> classes) {
  return PowerRelation(std::move(players), std::move(classes));
}

// One cell of a total binary relation on players, seen from the row player.
enum class Cell : std::uint8_t { StrictlyBelow, Indifferent, StrictlyAbove };

inline Cell mirror(Cell c) {
  switch (c) {
    case Cell::StrictlyAbove: return Cell::StrictlyBelow;
    case Cell::StrictlyBelow: return Cell::StrictlyAbove;
    default: return Cell::Indifferent;
  }
}

inline Cell cell_from_compare(int cmp) {
  return cmp > 0 ? Cell::StrictlyAbove : (cmp < 0 ? Cell::StrictlyBelow : Cell::Indifferent);
}

// Total binary relation on players. One canonical writer per unordered pair
// keeps the antisymmetry consistency unviolable.
class PairwiseRelation {
 public:
  explicit PairwiseRelation(int n)
      : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                      Cell::Indifferent) {}

  int size() const { return n_; }

  Cell at(int i, int j) const { return cells_[idx(i, j)]; }

  void set(int i, int j, Cell c) {
    if (i == j) throw SamePlayerError();
    cells_[idx(i, j)] = c;
    cells_[idx(j, i)] = mirror(c);
  }

  // True iff i is weakly at least as relevant as j (i R j).
  bool weakly_above(int i, int j) const { return at(i, j) != Cell::StrictlyBelow; }

  bool operator==(const PairwiseRelation& other) const {
    return n_ == other.n_ && cells_ == other.cells_;
  }

  std::optional<std::array<int, 3>> transitivity_witness() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (j == i || !weakly_above(i, j)) continue;
        for (int k = 0; k < n_; ++k) {
          if (weakly_above(j, k) && !weakly_above(i, k)) return std::array<int, 3>{i, j, k};
        }
      }
    return std::nullopt;
  }

  bool transitive() const { return !transitivity_witness().has_value(); }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }
  int n_;
  std::vector<Cell> cells_;
};

// Standard competition ranking ("1224"): tied players share the smallest
// rank, the next distinct rank skips by the tie count.
struct RankingOutput {
  std::vector<int> rank;
};

struct IntransitivityReport {
  std::array<int, 3> witness;
};

inline std::variant<RankingOutput, IntransitivityReport> ranks_from_pairwise(
    const PairwiseRelation& rel) {
  if (auto w = rel.transitivity_witness()) return IntransitivityReport{*w};
  RankingOutput out;
  const int n = rel.size();
  out.rank.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int above = 0;
    for (int j = 0; j < n; ++j)
      if (rel.at(j, i) == Cell::StrictlyAbove) ++above;
    out.rank[static_cast<std::size_t>(i)] = 1 + above;
  }
  return out;
}

}  // namespace socrank
