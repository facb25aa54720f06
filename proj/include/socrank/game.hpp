#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "socrank/core.hpp"

namespace socrank {

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct NonPositiveQuotaError : Error {
  using Error::Error;
};

struct House {
  std::vector<std::int64_t> weights;  // one non-negative seat count per player
  std::int64_t quota = 0;
};

// Sequential-houses weighted voting game: a coalition's value is the length
// of the maximal prefix of houses whose quota it meets.
class MulticameralGame {
 public:
  MulticameralGame(PlayerSet players, std::vector<House> houses)
      : players_(std::move(players)), houses_(std::move(houses)) {
    if (houses_.empty()) throw Error("a game needs at least one house");
    for (std::size_t h = 0; h < houses_.size(); ++h) {
      const House& house = houses_[h];
      if (static_cast<int>(house.weights.size()) != players_.size())
        throw DimensionMismatchError("house " + std::to_string(h + 1) + " has " +
                                     std::to_string(house.weights.size()) + " weights for " +
                                     std::to_string(players_.size()) + " players");
      if (house.quota <= 0)
        throw NonPositiveQuotaError("house " + std::to_string(h + 1) +
                                    " quota must be positive");
      std::int64_t total = 0;
      for (std::int64_t w : house.weights) {
        if (w < 0) throw Error("weights must be non-negative");
        total += w;
      }
      if (house.quota > total + 1)
        warnings_.push_back("house " + std::to_string(h + 1) + " quota " +
                            std::to_string(house.quota) + " exceeds total weight " +
                            std::to_string(total) + " + 1; no coalition can pass it");
    }
  }

  const PlayerSet& players() const { return players_; }
  const std::vector<House>& houses() const { return houses_; }
  std::size_t house_count() const { return houses_.size(); }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  PlayerSet players_;
  std::vector<House> houses_;
  std::vector<std::string> warnings_;
};

// Value in {0, ..., m}: how many consecutive houses, starting from the
// first, the coalition carries. A later house only counts if every earlier
// one passed.
inline int game_value(const MulticameralGame& g, Coalition s) {
  int value = 0;
  for (const House& house : g.houses()) {
    std::int64_t total = 0;
    Coalition rest = s;
    while (rest) {
      total += house.weights[static_cast<std::size_t>(std::countr_zero(rest))];
      rest &= rest - 1;
    }
    if (total < house.quota) break;
    ++value;
  }
  return value;
}

// Classes are the nonempty value-level sets in descending value order.
inline PowerRelation game_to_power_relation(const MulticameralGame& g) {
  const Coalition full = static_cast<Coalition>((1u << g.players().size()) - 1u);
  const std::size_t m = g.house_count();
  std::vector<std::vector<Coalition>> buckets(m + 1);
  for (Coalition c = 1; c <= full; ++c)
    buckets[m - static_cast<std::size_t>(game_value(g, c))].push_back(c);
  std::vector<std::vector<Coalition>> classes;
  for (auto& bucket : buckets)
    if (!bucket.empty()) classes.push_back(std::move(bucket));
  return PowerRelation(g.players(), std::move(classes));
}

}  // namespace socrank
