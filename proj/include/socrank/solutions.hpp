#pragma once

#include <cstdint>
#include <vector>

#include "socrank/core.hpp"

namespace socrank {

// CP-comparison tallies for an ordered pair (i, j): wins_i = |D_ij|,
// wins_j = |D_ji|, ties = |E_ij|. They sum to 2^(n-2).
struct CPCounts {
  std::uint64_t wins_i = 0;
  std::uint64_t wins_j = 0;
  std::uint64_t ties = 0;
};

// Iterates all subsets S of N\{i,j} (including the empty one) by walking
// sub-bit-patterns of the complement mask.
template <typename Fn>
inline void for_each_cp_context(const PowerRelation& pr, int i, int j, Fn&& fn) {
  const Coalition rest = pr.full_mask() & ~((Coalition{1} << i) | (Coalition{1} << j));
  Coalition s = rest;
  while (true) {
    fn(s);
    if (s == 0) break;
    s = (s - 1) & rest;
  }
}

inline CPCounts cp_counts(const PowerRelation& pr, int i, int j) {
  if (i == j) throw SamePlayerError();
  CPCounts out;
  const Coalition bi = Coalition{1} << i, bj = Coalition{1} << j;
  for_each_cp_context(pr, i, j, [&](Coalition s) {
    const int cmp = pr.compare(s | bi, s | bj);
    if (cmp > 0)
      ++out.wins_i;
    else if (cmp < 0)
      ++out.wins_j;
    else
      ++out.ties;
  });
  return out;
}

inline Cell cp_cell(const PowerRelation& pr, int i, int j) {
  const CPCounts c = cp_counts(pr, i, j);
  return c.wins_i > c.wins_j ? Cell::StrictlyAbove
         : c.wins_i < c.wins_j ? Cell::StrictlyBelow
                               : Cell::Indifferent;
}

inline PairwiseRelation cp_majority(const PowerRelation& pr) {
  const int n = pr.player_count();
  PairwiseRelation rel(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) rel.set(i, j, cp_cell(pr, i, j));
  return rel;
}

// Per-class occurrence counts: entry k-1 = number of coalitions in class k
// containing the player. Entries sum to 2^(n-1).
using ThetaVector = std::vector<std::uint64_t>;

// One pass over all coalitions builds the vectors for every player at once.
inline std::vector<ThetaVector> theta_all(const PowerRelation& pr) {
  const int n = pr.player_count();
  const std::size_t l = pr.class_count();
  std::vector<ThetaVector> out(static_cast<std::size_t>(n), ThetaVector(l, 0));
  const Coalition full = pr.full_mask();
  for (Coalition c = 1; c <= full; ++c) {
    const std::size_t k = pr.class_of(c) - 1;
    Coalition rest = c;
    while (rest) {
      const int i = std::countr_zero(rest);
      ++out[static_cast<std::size_t>(i)][k];
      rest &= rest - 1;
    }
  }
  return out;
}

inline ThetaVector theta(const PowerRelation& pr, int i) {
  ThetaVector out(pr.class_count(), 0);
  const Coalition full = pr.full_mask();
  const Coalition bi = Coalition{1} << i;
  for (Coalition c = 1; c <= full; ++c)
    if (c & bi) ++out[pr.class_of(c) - 1];
  return out;
}

// Lexicographic comparison, best class first, more occurrences better.
inline int compare_lex(const ThetaVector& a, const ThetaVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] > b[k] ? 1 : -1;
  }
  return 0;
}

// Dual comparison, worst class first, fewer occurrences better.
inline int compare_dual_lex(const ThetaVector& a, const ThetaVector& b) {
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  }
  return 0;
}

inline PairwiseRelation lexcel(const PowerRelation& pr) {
  const auto thetas = theta_all(pr);
  const int n = pr.player_count();
  PairwiseRelation rel(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      rel.set(i, j, cell_from_compare(compare_lex(thetas[static_cast<std::size_t>(i)],
                                                  thetas[static_cast<std::size_t>(j)])));
  return rel;
}

inline PairwiseRelation dual_lex(const PowerRelation& pr) {
  const auto thetas = theta_all(pr);
  const int n = pr.player_count();
  PairwiseRelation rel(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      rel.set(i, j, cell_from_compare(compare_dual_lex(thetas[static_cast<std::size_t>(i)],
                                                       thetas[static_cast<std::size_t>(j)])));
  return rel;
}

// n x l count matrix: at(s, k) = number of coalitions of size s containing
// the player inside class k. Column sums reproduce the theta vector, row
// sums are C(n-1, s-1).
class L1Matrix {
 public:
  L1Matrix(int sizes, std::size_t classes)
      : sizes_(sizes), classes_(classes),
        m_(static_cast<std::size_t>(sizes) * classes, 0) {}

  int sizes() const { return sizes_; }
  std::size_t classes() const { return classes_; }

  // s in [1, n], k in [1, l].
  std::uint64_t at(int s, std::size_t k) const { return m_[idx(s, k)]; }
  std::uint64_t& at(int s, std::size_t k) { return m_[idx(s, k)]; }

  bool operator==(const L1Matrix& other) const {
    return sizes_ == other.sizes_ && classes_ == other.classes_ && m_ == other.m_;
  }

 private:
  std::size_t idx(int s, std::size_t k) const {
    return static_cast<std::size_t>(s - 1) * classes_ + (k - 1);
  }
  int sizes_;
  std::size_t classes_;
  std::vector<std::uint64_t> m_;
};

inline std::vector<L1Matrix> l1_matrix_all(const PowerRelation& pr) {
  const int n = pr.player_count();
  const std::size_t l = pr.class_count();
  std::vector<L1Matrix> out(static_cast<std::size_t>(n), L1Matrix(n, l));
  const Coalition full = pr.full_mask();
  for (Coalition c = 1; c <= full; ++c) {
    const std::size_t k = pr.class_of(c);
    const int s = coalition_size(c);
    Coalition rest = c;
    while (rest) {
      const int i = std::countr_zero(rest);
      ++out[static_cast<std::size_t>(i)].at(s, k);
      rest &= rest - 1;
    }
  }
  return out;
}

inline L1Matrix l1_matrix(const PowerRelation& pr, int i) {
  const int n = pr.player_count();
  L1Matrix out(n, pr.class_count());
  const Coalition full = pr.full_mask();
  const Coalition bi = Coalition{1} << i;
  for (Coalition c = 1; c <= full; ++c)
    if (c & bi) ++out.at(coalition_size(c), pr.class_of(c));
  return out;
}

// Column-major scan, classes first-to-(l-1), sizes ascending; first
// difference decides, larger count wins. Column l is forced equal by the
// row-sum identity once the others agree.
inline int compare_l1(const L1Matrix& a, const L1Matrix& b) {
  for (std::size_t k = 1; k < a.classes(); ++k) {
    for (int s = 1; s <= a.sizes(); ++s) {
      if (a.at(s, k) != b.at(s, k)) return a.at(s, k) > b.at(s, k) ? 1 : -1;
    }
  }
  return 0;
}

// Dual scan, classes last-to-second, sizes ascending; fewer wins.
inline int compare_l1_star(const L1Matrix& a, const L1Matrix& b) {
  for (std::size_t k = a.classes(); k >= 2; --k) {
    for (int s = 1; s <= a.sizes(); ++s) {
      if (a.at(s, k) != b.at(s, k)) return a.at(s, k) < b.at(s, k) ? 1 : -1;
    }
  }
  return 0;
}

inline PairwiseRelation l1(const PowerRelation& pr) {
  const auto mats = l1_matrix_all(pr);
  const int n = pr.player_count();
  PairwiseRelation rel(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      rel.set(i, j, cell_from_compare(compare_l1(mats[static_cast<std::size_t>(i)],
                                                 mats[static_cast<std::size_t>(j)])));
  return rel;
}

inline PairwiseRelation l1_star(const PowerRelation& pr) {
  const auto mats = l1_matrix_all(pr);
  const int n = pr.player_count();
  PairwiseRelation rel(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      rel.set(i, j, cell_from_compare(compare_l1_star(mats[static_cast<std::size_t>(i)],
                                                      mats[static_cast<std::size_t>(j)])));
  return rel;
}

// Outcome of comparing i against j over all contexts of one fixed size.
// The Weak variants are listed for completeness of the relation algebra;
// over a total preorder a weak domination without any strict comparison
// collapses to Indifferent, so they are never produced here.
enum class KDominanceCell {
  StrictForI,
  StrictForJ,
  Indifferent,
  WeakForI,
  WeakForJ,
  Incomparable
};

inline KDominanceCell k_dominance(const PowerRelation& pr, int i, int j, int k) {
  if (i == j) throw SamePlayerError();
  const int n = pr.player_count();
  if (k < 0 || k > n - 2) throw SizeOutOfRangeError(k);
  const Coalition bi = Coalition{1} << i, bj = Coalition{1} << j;
  bool i_strict = false, j_strict = false;
  for_each_cp_context(pr, i, j, [&](Coalition s) {
    if (coalition_size(s) != k) return;
    const int cmp = pr.compare(s | bi, s | bj);
    if (cmp > 0) i_strict = true;
    if (cmp < 0) j_strict = true;
  });
  if (i_strict && j_strict) return KDominanceCell::Incomparable;
  if (i_strict) return KDominanceCell::StrictForI;
  if (j_strict) return KDominanceCell::StrictForJ;
  return KDominanceCell::Indifferent;
}

// Strict desirability premise: i weakly beats j in every CP-comparison and
// strictly in at least one. Equivalent to d_ji = 0 and d_ij > 0.
inline bool sdes_premise(const PowerRelation& pr, int i, int j) {
  const CPCounts c = cp_counts(pr, i, j);
  return c.wins_j == 0 && c.wins_i > 0;
}

}  // namespace socrank
