#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "socrank/core.hpp"
#include "socrank/io.hpp"
#include "socrank/rng.hpp"
#include "socrank/solutions.hpp"

namespace socrank {

struct MalformedWitnessError : Error {
  using Error::Error;
};

struct UnsatisfiableAtSizeError : Error {
  using Error::Error;
};

enum class Axiom { SDes, Neu, CAT, Sym, EC, CA, IWS, IBS, KDD, PCA, CI, M };

inline constexpr std::array<Axiom, 11> kTable1Axioms = {
    Axiom::SDes, Axiom::Neu, Axiom::CAT, Axiom::Sym, Axiom::EC, Axiom::CA,
    Axiom::IWS,  Axiom::IBS, Axiom::KDD, Axiom::PCA, Axiom::CI};

inline std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::SDes: return "SDes";
    case Axiom::Neu: return "Neu";
    case Axiom::CAT: return "CAT";
    case Axiom::Sym: return "Sym";
    case Axiom::EC: return "EC";
    case Axiom::CA: return "CA";
    case Axiom::IWS: return "IWS";
    case Axiom::IBS: return "IBS";
    case Axiom::KDD: return "k-DD";
    case Axiom::PCA: return "PCA";
    case Axiom::CI: return "CI";
    case Axiom::M: return "M";
  }
  return "?";
}

inline std::optional<Axiom> axiom_from_string(std::string_view s) {
  for (Axiom a : kTable1Axioms)
    if (axiom_name(a) == s) return a;
  if (s == "M") return Axiom::M;
  if (s == "kDD" || s == "kdd" || s == "k-dd") return Axiom::KDD;
  return std::nullopt;
}

// The five studied solutions plus the independence counterexample catalog.
enum class Solution {
  CP,
  LexCel,
  DualLex,
  L1,
  L1Star,
  Id,
  NIndex,
  ECEmpty,
  CATPerClass,
  SDReversed,
  SIndex,
  CALargestSet,
  IWShiftedTheta,
  KDReversed,
  PCAMinPartner,
  CIMinimalTheta
};

inline constexpr std::array<Solution, 5> kMainSolutions = {
    Solution::CP, Solution::LexCel, Solution::DualLex, Solution::L1, Solution::L1Star};

inline constexpr std::array<Solution, 11> kCatalogSolutions = {
    Solution::Id,           Solution::NIndex,       Solution::ECEmpty,
    Solution::CATPerClass,  Solution::SDReversed,   Solution::SIndex,
    Solution::CALargestSet, Solution::IWShiftedTheta, Solution::KDReversed,
    Solution::PCAMinPartner, Solution::CIMinimalTheta};

inline std::string_view solution_name(Solution s) {
  switch (s) {
    case Solution::CP: return "cp";
    case Solution::LexCel: return "lexcel";
    case Solution::DualLex: return "duallex";
    case Solution::L1: return "l1";
    case Solution::L1Star: return "l1star";
    case Solution::Id: return "id";
    case Solution::NIndex: return "n-index";
    case Solution::ECEmpty: return "ec-empty";
    case Solution::CATPerClass: return "cat-perclass";
    case Solution::SDReversed: return "sd-reversed";
    case Solution::SIndex: return "s-index";
    case Solution::CALargestSet: return "ca-largestset";
    case Solution::IWShiftedTheta: return "iw-shiftedtheta";
    case Solution::KDReversed: return "kd-reversed";
    case Solution::PCAMinPartner: return "pca-minpartner";
    case Solution::CIMinimalTheta: return "ci-minimaltheta";
  }
  return "?";
}

inline std::optional<Solution> solution_from_string(std::string_view s) {
  const std::array<Solution, 16> all = {
      Solution::CP,           Solution::LexCel,        Solution::DualLex,
      Solution::L1,           Solution::L1Star,        Solution::Id,
      Solution::NIndex,       Solution::ECEmpty,       Solution::CATPerClass,
      Solution::SDReversed,   Solution::SIndex,        Solution::CALargestSet,
      Solution::IWShiftedTheta, Solution::KDReversed,  Solution::PCAMinPartner,
      Solution::CIMinimalTheta};
  for (Solution sol : all)
    if (solution_name(sol) == s) return sol;
  return std::nullopt;
}

namespace detail {

inline bool is_total_order(const PairwiseRelation& rel) {
  for (int i = 0; i < rel.size(); ++i)
    for (int j = i + 1; j < rel.size(); ++j)
      if (rel.at(i, j) == Cell::Indifferent) return false;
  return rel.transitive();
}

// Per-class strict CP-win tallies D^k_ij; used by the R_CAT counterexample.
inline Cell cat_per_class_cell(const PowerRelation& pr, int i, int j) {
  const std::size_t l = pr.class_count();
  std::vector<std::uint64_t> wi(l + 1, 0), wj(l + 1, 0);
  const Coalition bi = Coalition{1} << i, bj = Coalition{1} << j;
  for_each_cp_context(pr, i, j, [&](Coalition s) {
    const std::uint32_t ki = pr.class_of(s | bi), kj = pr.class_of(s | bj);
    if (ki < kj)
      ++wi[ki];
    else if (kj < ki)
      ++wj[kj];
  });
  for (std::size_t k = 1; k <= l; ++k) {
    if (wi[k] != wj[k]) return wi[k] > wj[k] ? Cell::StrictlyAbove : Cell::StrictlyBelow;
  }
  return Cell::Indifferent;
}

inline Cell index_fallback(int i, int j) {
  return i < j ? Cell::StrictlyAbove : Cell::StrictlyBelow;
}

// Largest coalition size containing the player inside one class; 0 if none.
inline int largest_member_size(const PowerRelation& pr, std::size_t k, int player) {
  int best = 0;
  for (Coalition c : pr.classes()[k - 1])
    if (c & (Coalition{1} << player)) best = std::max(best, coalition_size(c));
  return best;
}

// Smallest partner index x with {player, x} in class k; INT_MAX if none.
inline std::vector<int> min_pair_partner_by_class(const PowerRelation& pr, int player) {
  const std::size_t l = pr.class_count();
  std::vector<int> out(l + 1, std::numeric_limits<int>::max());
  const Coalition bp = Coalition{1} << player;
  for (int x = 0; x < pr.player_count(); ++x) {
    if (x == player) continue;
    const std::uint32_t k = pr.class_of(bp | (Coalition{1} << x));
    out[k] = std::min(out[k], x);
  }
  return out;
}

// Count of minimal-cardinality coalitions containing the player per class.
inline ThetaVector min_cardinality_theta(const PowerRelation& pr, int player) {
  const std::size_t l = pr.class_count();
  std::vector<int> min_size(l + 1, std::numeric_limits<int>::max());
  const Coalition bp = Coalition{1} << player;
  const Coalition full = pr.full_mask();
  for (Coalition c = 1; c <= full; ++c)
    if (c & bp) min_size[pr.class_of(c)] = std::min(min_size[pr.class_of(c)], coalition_size(c));
  ThetaVector out(l, 0);
  for (Coalition c = 1; c <= full; ++c)
    if ((c & bp) && coalition_size(c) == min_size[pr.class_of(c)]) ++out[pr.class_of(c) - 1];
  return out;
}

inline ThetaVector shifted_theta(const ThetaVector& t) {
  ThetaVector out(t.size(), 0);
  for (std::size_t k = 0; k < t.size(); ++k)
    out[k] = t[k] + (k + 1 < t.size() ? t[k + 1] : 0);
  return out;
}

// Column-major scan like L1 but rows compared bottom-up and fewer wins.
inline int compare_kd_reversed(const L1Matrix& a, const L1Matrix& b) {
  for (std::size_t k = 1; k < a.classes(); ++k) {
    for (int s = a.sizes(); s >= 1; --s) {
      if (a.at(s, k) != b.at(s, k)) return a.at(s, k) < b.at(s, k) ? 1 : -1;
    }
  }
  return 0;
}

}  // namespace detail

// Resolves a solution identifier to its total pairwise relation.
inline PairwiseRelation evaluate(Solution sol, const PowerRelation& pr) {
  const int n = pr.player_count();
  switch (sol) {
    case Solution::CP: return cp_majority(pr);
    case Solution::LexCel: return lexcel(pr);
    case Solution::DualLex: return dual_lex(pr);
    case Solution::L1: return l1(pr);
    case Solution::L1Star: return l1_star(pr);
    case Solution::Id: return PairwiseRelation(n);
    case Solution::NIndex: {
      PairwiseRelation base = cp_majority(pr);
      PairwiseRelation rel(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          rel.set(i, j, base.at(i, j) == Cell::Indifferent ? detail::index_fallback(i, j)
                                                           : base.at(i, j));
      return rel;
    }
    case Solution::ECEmpty: {
      PairwiseRelation base = cp_majority(pr);
      if (detail::is_total_order(base)) return base;
      PairwiseRelation rel(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const int empty_cmp = pr.compare(Coalition{1} << i, Coalition{1} << j);
          rel.set(i, j, empty_cmp != 0 ? cell_from_compare(empty_cmp) : base.at(i, j));
        }
      return rel;
    }
    case Solution::CATPerClass: {
      PairwiseRelation rel(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) rel.set(i, j, detail::cat_per_class_cell(pr, i, j));
      return rel;
    }
    case Solution::SDReversed: {
      const auto thetas = theta_all(pr);
      PairwiseRelation rel(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          rel.set(i, j, cell_from_compare(-compare_lex(thetas[static_cast<std::size_t>(i)],
                                                       thetas[static_cast<std::size_t>(j)])));
      return rel;
    }
    case Solution::SIndex: {
      PairwiseRelation base = lexcel(pr);
      PairwiseRelation rel(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          rel.set(i, j, base.at(i, j) == Cell::Indifferent ? detail::index_fallback(i, j)
                                                           : base.at(i, j));
      return rel;
    }
    case Solution::CALargestSet: {
      const auto thetas = theta_all(pr);
      PairwiseRelation rel(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const auto& ti = thetas[static_cast<std::size_t>(i)];
          const auto& tj = thetas[static_cast<std::size_t>(j)];
          const int cmp = compare_lex(ti, tj);
          if (cmp != 0) {
            rel.set(i, j, cell_from_compare(cmp));
            continue;
          }
          std::size_t khat = 1;
          while (khat <= ti.size() && ti[khat - 1] == 0) ++khat;
          const int li = detail::largest_member_size(pr, khat, i);
          const int lj = detail::largest_member_size(pr, khat, j);
          rel.set(i, j, cell_from_compare(li > lj ? 1 : (li < lj ? -1 : 0)));
        }
      return rel;
    }
    case Solution::IWShiftedTheta: {
      const auto thetas = theta_all(pr);
      PairwiseRelation rel(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          rel.set(i, j,
                  cell_from_compare(compare_lex(
                      detail::shifted_theta(thetas[static_cast<std::size_t>(i)]),
                      detail::shifted_theta(thetas[static_cast<std::size_t>(j)]))));
      return rel;
    }
    case Solution::KDReversed: {
      const auto mats = l1_matrix_all(pr);
      PairwiseRelation rel(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          rel.set(i, j,
                  cell_from_compare(detail::compare_kd_reversed(
                      mats[static_cast<std::size_t>(i)], mats[static_cast<std::size_t>(j)])));
      return rel;
    }
    case Solution::PCAMinPartner: {
      PairwiseRelation base = l1(pr);
      PairwiseRelation rel(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (base.at(i, j) != Cell::Indifferent) {
            rel.set(i, j, base.at(i, j));
            continue;
          }
          const auto mi = detail::min_pair_partner_by_class(pr, i);
          const auto mj = detail::min_pair_partner_by_class(pr, j);
          Cell cell = Cell::Indifferent;
          for (std::size_t k = 1; k < mi.size(); ++k) {
            if (mi[k] != mj[k]) {
              cell = mi[k] < mj[k] ? Cell::StrictlyAbove : Cell::StrictlyBelow;
              break;
            }
          }
          rel.set(i, j, cell);
        }
      return rel;
    }
    case Solution::CIMinimalTheta: {
      PairwiseRelation base = l1(pr);
      PairwiseRelation rel(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (base.at(i, j) != Cell::Indifferent) {
            rel.set(i, j, base.at(i, j));
            continue;
          }
          rel.set(i, j, cell_from_compare(compare_lex(detail::min_cardinality_theta(pr, i),
                                                      detail::min_cardinality_theta(pr, j))));
        }
      return rel;
    }
  }
  throw Error("unknown solution");
}

// One concrete instantiation of an axiom's hypothesis: the base relation, a
// player pair, and the axiom-specific datum.
struct AxiomWitness {
  Axiom axiom = Axiom::SDes;
  int i = 0;
  int j = 1;
  PowerRelation base;
  std::optional<PowerRelation> other;                 // Neu, EC, CA, PCA, CAT, M
  std::vector<std::pair<Coalition, Coalition>> pi;    // EC, CA, PCA (unlisted = fixed)
  std::vector<std::vector<Coalition>> partition;      // IWS, IBS
  std::vector<Coalition> sigma;                       // CI
  // CAT: the ordered refinement the removal set induces on one shared
  // tie class (two or more parts, strongest first)
  std::vector<std::vector<Coalition>> refinement;

  explicit AxiomWitness(PowerRelation base_) : base(std::move(base_)) {}
};

enum class CheckStatus { HypothesisFails, Holds, Violated };

struct CheckResult {
  CheckStatus status;
  std::string note;
};

namespace detail {

inline Coalition rest_mask(const PowerRelation& pr, int i, int j) {
  return pr.full_mask() & ~((Coalition{1} << i) | (Coalition{1} << j));
}

inline Coalition apply_pi(const AxiomWitness& w, Coalition s) {
  for (const auto& [from, to] : w.pi)
    if (from == s) return to;
  return s;
}

inline void validate_pi(const AxiomWitness& w, Coalition rest, bool size_preserving) {
  std::vector<Coalition> keys, values;
  for (const auto& [from, to] : w.pi) {
    if ((from & ~rest) || (to & ~rest))
      throw MalformedWitnessError("pi maps outside 2^(N\\{i,j})");
    if (size_preserving && coalition_size(from) != coalition_size(to))
      throw MalformedWitnessError("pi is not size-preserving");
    keys.push_back(from);
    values.push_back(to);
  }
  std::sort(keys.begin(), keys.end());
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end() ||
      std::adjacent_find(values.begin(), values.end()) != values.end() || keys != values)
    throw MalformedWitnessError("pi is not a bijection");
}

inline void require_other(const AxiomWitness& w) {
  if (!w.other) throw MalformedWitnessError("witness needs a second relation");
  if (!(w.other->players() == w.base.players()))
    throw MalformedWitnessError("relations must share the player set");
}

inline bool same_coalition_set(std::vector<Coalition> a, std::vector<Coalition> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Applies the CAT removal: the one shared tie class is replaced by the
// ordered parts of the refinement.
inline PowerRelation apply_refinement(const PowerRelation& pr,
                                      const std::vector<std::vector<Coalition>>& parts) {
  std::vector<Coalition> whole;
  for (const auto& part : parts) whole.insert(whole.end(), part.begin(), part.end());
  std::vector<std::vector<Coalition>> out;
  for (const auto& cls : pr.classes()) {
    if (same_coalition_set(cls, whole))
      out.insert(out.end(), parts.begin(), parts.end());
    else
      out.push_back(cls);
  }
  return PowerRelation(pr.players(), std::move(out));
}

inline void validate_refinement(const AxiomWitness& w) {
  // Per Remark 1 the removal refines exactly one equivalence class that
  // both quotient orders share; total-preorder survival forces the removed
  // pairs to order its members into these parts.
  if (w.refinement.size() < 2)
    throw MalformedWitnessError("removal set must actually break some tie");
  std::vector<Coalition> whole;
  for (const auto& part : w.refinement) {
    if (part.empty()) throw MalformedWitnessError("refinement parts must be nonempty");
    whole.insert(whole.end(), part.begin(), part.end());
  }
  std::sort(whole.begin(), whole.end());
  if (std::adjacent_find(whole.begin(), whole.end()) != whole.end())
    throw MalformedWitnessError("refinement parts overlap");
  auto is_class_of = [&](const PowerRelation& pr) {
    for (auto cls : pr.classes()) {
      std::sort(cls.begin(), cls.end());
      if (cls == whole) return true;
    }
    return false;
  };
  if (!is_class_of(w.base) || !is_class_of(*w.other))
    throw MalformedWitnessError(
        "removed pairs must refine a class present in both relations");
}

// Validates an ordered partition of the extreme class and rebuilds the
// refined relation for IWS/IBS.
inline PowerRelation apply_extreme_partition(const AxiomWitness& w, bool worst) {
  const auto& classes = w.base.classes();
  const std::vector<Coalition>& target = worst ? classes.back() : classes.front();
  std::vector<Coalition> joined;
  for (const auto& part : w.partition) {
    if (part.empty()) throw MalformedWitnessError("partition parts must be nonempty");
    joined.insert(joined.end(), part.begin(), part.end());
  }
  if (!same_coalition_set(joined, target))
    throw MalformedWitnessError("partition must cover the extreme class exactly");
  std::vector<std::vector<Coalition>> out;
  if (worst) {
    out.assign(classes.begin(), classes.end() - 1);
    out.insert(out.end(), w.partition.begin(), w.partition.end());
  } else {
    out.assign(w.partition.begin(), w.partition.end());
    out.insert(out.end(), classes.begin() + 1, classes.end());
  }
  return PowerRelation(w.base.players(), std::move(out));
}

// Builds the two CI relations: ranks with sigma promoted one class up, and
// the dichotomous collapse with everything above the residue merged.
inline std::pair<PowerRelation, PowerRelation> apply_ci(const AxiomWitness& w) {
  const auto& classes = w.base.classes();
  const std::size_t l = classes.size();
  std::vector<Coalition> last = classes.back();
  for (Coalition c : w.sigma) {
    if (std::find(last.begin(), last.end(), c) == last.end())
      throw MalformedWitnessError("sigma must be a subset of the worst class");
  }
  {
    std::vector<Coalition> sorted = w.sigma;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw MalformedWitnessError("sigma lists a coalition twice");
    if (sorted.size() == last.size())
      throw MalformedWitnessError("sigma must be a proper subset of the worst class");
  }
  std::vector<Coalition> residue;
  for (Coalition c : last)
    if (std::find(w.sigma.begin(), w.sigma.end(), c) == w.sigma.end()) residue.push_back(c);

  std::vector<std::vector<Coalition>> refined;
  refined.assign(classes.begin(), classes.end() - 1);
  refined.back().insert(refined.back().end(), w.sigma.begin(), w.sigma.end());
  refined.push_back(residue);

  std::vector<Coalition> merged;
  for (std::size_t k = 0; k + 1 < l; ++k)
    merged.insert(merged.end(), classes[k].begin(), classes[k].end());
  merged.insert(merged.end(), w.sigma.begin(), w.sigma.end());
  std::vector<std::vector<Coalition>> dicho = {merged, residue};

  return {PowerRelation(w.base.players(), std::move(refined)),
          PowerRelation(w.base.players(), std::move(dicho))};
}

// Structural test for "other is i-improving and j-invariant w.r.t. base":
// some nonempty moved set A of coalitions containing i but not j explains
// every changed comparison, each mover only gains against non-movers, and
// each mover strictly gains against at least one.
inline bool is_i_improving_j_invariant(const PowerRelation& base, const PowerRelation& other,
                                       int i, int j) {
  const Coalition full = base.full_mask();
  const Coalition bi = Coalition{1} << i, bj = Coalition{1} << j;
  std::vector<Coalition> touched;
  for (Coalition a = 1; a <= full; ++a) {
    for (Coalition b = a + 1; b <= full; ++b) {
      if (base.compare(a, b) != other.compare(a, b)) {
        if (std::find(touched.begin(), touched.end(), a) == touched.end()) touched.push_back(a);
        if (std::find(touched.begin(), touched.end(), b) == touched.end()) touched.push_back(b);
      }
    }
  }
  if (touched.empty()) return false;
  std::vector<Coalition> cand;
  for (Coalition t : touched)
    if ((t & bi) && !(t & bj)) cand.push_back(t);
  if (cand.empty() || cand.size() > 12) return false;

  const std::size_t subsets = std::size_t{1} << cand.size();
  for (std::size_t pick = 1; pick < subsets; ++pick) {
    std::vector<Coalition> moved;
    for (std::size_t b = 0; b < cand.size(); ++b)
      if (pick & (std::size_t{1} << b)) moved.push_back(cand[b]);
    auto in_moved = [&](Coalition c) {
      return std::find(moved.begin(), moved.end(), c) != moved.end();
    };
    bool ok = true;
    // every changed pair involves a mover; movers only gain vs non-movers
    for (Coalition a = 1; a <= full && ok; ++a) {
      for (Coalition b = a + 1; b <= full && ok; ++b) {
        if (base.compare(a, b) == other.compare(a, b)) continue;
        const bool ma = in_moved(a), mb = in_moved(b);
        if (!ma && !mb) ok = false;
        if (ma && !mb && other.compare(a, b) < base.compare(a, b)) ok = false;
        if (mb && !ma && other.compare(b, a) < base.compare(b, a)) ok = false;
      }
    }
    if (!ok) continue;
    for (Coalition t : moved) {
      bool improved = false;
      for (Coalition v = 1; v <= full; ++v) {
        if (v == t || in_moved(v)) continue;
        if (other.compare(t, v) > base.compare(t, v)) improved = true;
      }
      if (!improved) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace detail

// Evaluates one axiom for one solution on one witness. The hypothesis is
// re-verified from the witness before the conclusion is consulted;
// structurally broken data throws MalformedWitnessError instead.
inline CheckResult check_axiom(Axiom axiom, Solution sol, const AxiomWitness& w) {
  const PowerRelation& pr = w.base;
  const int i = w.i, j = w.j;
  if (i == j || i < 0 || j < 0 || i >= pr.player_count() || j >= pr.player_count())
    throw MalformedWitnessError("witness pair out of range");
  const Coalition bi = Coalition{1} << i, bj = Coalition{1} << j;
  const Coalition rest = detail::rest_mask(pr, i, j);

  auto conclusion = [&](bool ok, const char* what) {
    return ok ? CheckResult{CheckStatus::Holds, ""} : CheckResult{CheckStatus::Violated, what};
  };

  switch (axiom) {
    case Axiom::SDes: {
      if (!sdes_premise(pr, i, j)) return {CheckStatus::HypothesisFails, ""};
      return conclusion(evaluate(sol, pr).at(i, j) == Cell::StrictlyAbove,
                        "strictly desirable player not ranked strictly above");
    }
    case Axiom::Sym: {
      const CPCounts c = cp_counts(pr, i, j);
      if (c.wins_i != 0 || c.wins_j != 0) return {CheckStatus::HypothesisFails, ""};
      return conclusion(evaluate(sol, pr).at(i, j) == Cell::Indifferent,
                        "symmetric players not ranked indifferent");
    }
    case Axiom::Neu: {
      detail::require_other(w);
      bool hyp = true;
      for_each_cp_context(pr, i, j, [&](Coalition s) {
        if (pr.compare(s | bi, s | bj) != -w.other->compare(s | bi, s | bj)) hyp = false;
      });
      if (!hyp) return {CheckStatus::HypothesisFails, ""};
      const bool lhs = evaluate(sol, pr).weakly_above(i, j);
      const bool rhs = evaluate(sol, *w.other).weakly_above(j, i);
      return conclusion(lhs == rhs, "ranking not invariant under role reversal");
    }
    case Axiom::EC: {
      detail::require_other(w);
      detail::validate_pi(w, rest, false);
      bool hyp = true;
      for_each_cp_context(pr, i, j, [&](Coalition s) {
        const Coalition t = detail::apply_pi(w, s);
        if (pr.compare(s | bi, s | bj) != w.other->compare(t | bi, t | bj)) hyp = false;
      });
      if (!hyp) return {CheckStatus::HypothesisFails, ""};
      const bool lhs = evaluate(sol, pr).weakly_above(i, j);
      const bool rhs = evaluate(sol, *w.other).weakly_above(i, j);
      return conclusion(lhs == rhs, "ranking depends on non-CP comparisons");
    }
    case Axiom::CA:
    case Axiom::PCA: {
      detail::require_other(w);
      detail::validate_pi(w, rest, axiom == Axiom::PCA);
      bool hyp = true;
      for_each_cp_context(pr, i, j, [&](Coalition s) {
        const Coalition ms = detail::apply_pi(w, s);
        for_each_cp_context(pr, i, j, [&](Coalition t) {
          if (axiom == Axiom::PCA && coalition_size(s) != coalition_size(t)) return;
          if (pr.compare(s | bi, t | bj) != w.other->compare(ms | bi, t | bj)) hyp = false;
        });
      });
      if (!hyp) return {CheckStatus::HypothesisFails, ""};
      const bool lhs = evaluate(sol, pr).weakly_above(i, j);
      const bool rhs = evaluate(sol, *w.other).weakly_above(i, j);
      return conclusion(lhs == rhs, "ranking not invariant under coalitional anonymity");
    }
    case Axiom::CAT: {
      detail::require_other(w);
      detail::validate_refinement(w);
      if (evaluate(sol, pr).at(i, j) != Cell::Indifferent ||
          evaluate(sol, *w.other).at(i, j) != Cell::Indifferent)
        return {CheckStatus::HypothesisFails, ""};
      const PowerRelation a = detail::apply_refinement(pr, w.refinement);
      const PowerRelation b = detail::apply_refinement(*w.other, w.refinement);
      const bool lhs = evaluate(sol, a).weakly_above(i, j);
      const bool rhs = evaluate(sol, b).weakly_above(i, j);
      return conclusion(lhs == rhs, "tie resolved inconsistently across the two rankings");
    }
    case Axiom::IWS:
    case Axiom::IBS: {
      if (w.partition.empty()) throw MalformedWitnessError("witness needs a partition");
      if (pr.class_count() < 2) return {CheckStatus::HypothesisFails, ""};
      const PowerRelation refined = detail::apply_extreme_partition(w, axiom == Axiom::IWS);
      if (evaluate(sol, pr).at(i, j) != Cell::StrictlyAbove)
        return {CheckStatus::HypothesisFails, ""};
      return conclusion(evaluate(sol, refined).at(i, j) == Cell::StrictlyAbove,
                        "strict ranking lost after refining the extreme class");
    }
    case Axiom::KDD: {
      if (pr.class_count() != 2) return {CheckStatus::HypothesisFails, ""};
      const int n = pr.player_count();
      int min_i = -1, min_j = -1;
      for (int k = 0; k <= n - 2; ++k) {
        switch (k_dominance(pr, i, j, k)) {
          case KDominanceCell::StrictForI:
            if (min_i < 0) min_i = k;
            break;
          case KDominanceCell::StrictForJ:
            if (min_j < 0) min_j = k;
            break;
          case KDominanceCell::Indifferent:
            break;
          default:
            return {CheckStatus::HypothesisFails, ""};  // coverage broken
        }
      }
      if (min_i < 0 || min_j < 0 || min_i >= min_j) return {CheckStatus::HypothesisFails, ""};
      return conclusion(evaluate(sol, pr).at(i, j) == Cell::StrictlyAbove,
                        "smaller-coalition dominance not rewarded");
    }
    case Axiom::CI: {
      if (pr.class_count() < 2) return {CheckStatus::HypothesisFails, ""};
      const auto [refined, dicho] = detail::apply_ci(w);
      if (evaluate(sol, pr).at(i, j) != Cell::Indifferent)
        return {CheckStatus::HypothesisFails, ""};
      const bool lhs = evaluate(sol, refined).weakly_above(i, j);
      const bool rhs = evaluate(sol, dicho).weakly_above(i, j);
      return conclusion(lhs == rhs,
                        "inconsistent ranking between refined and dichotomous relations");
    }
    case Axiom::M: {
      detail::require_other(w);
      if (!detail::is_i_improving_j_invariant(pr, *w.other, i, j))
        return {CheckStatus::HypothesisFails, ""};
      if (evaluate(sol, pr).at(i, j) != Cell::Indifferent)
        return {CheckStatus::HypothesisFails, ""};
      return conclusion(evaluate(sol, *w.other).at(i, j) == Cell::StrictlyAbove,
                        "improvement not rewarded with a strict ranking");
    }
  }
  throw Error("unknown axiom");
}

// ---------------------------------------------------------------------------
// Witness generation. Witnesses are constructed so that the structural part
// of each hypothesis holds by construction; sampling two independent
// relations and hoping the hypothesis holds would essentially never work
// for axioms like CA.
// ---------------------------------------------------------------------------

inline PowerRelation random_relation(int n, Rng& rng) {
  const PlayerSet players = PlayerSet::of_size(n);
  const Coalition full = static_cast<Coalition>((1u << n) - 1u);
  const std::uint64_t max_l = full;
  const std::uint64_t l = (rng.below(4) == 0)
                              ? 1 + rng.below(max_l)
                              : 1 + rng.below(std::min<std::uint64_t>(max_l, 8));
  std::vector<std::uint32_t> assignment(static_cast<std::size_t>(full) + 1, 0);
  for (Coalition c = 1; c <= full; ++c)
    assignment[c] = 1 + static_cast<std::uint32_t>(rng.below(l));
  return relation_from_assignment(players, assignment);
}

namespace detail {

inline PowerRelation random_relation_min_classes(int n, Rng& rng, std::size_t min_l) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    PowerRelation pr = random_relation(n, rng);
    if (pr.class_count() >= min_l) return pr;
  }
  const PlayerSet players = PlayerSet::of_size(n);
  const Coalition full = static_cast<Coalition>((1u << n) - 1u);
  std::vector<std::uint32_t> assignment(static_cast<std::size_t>(full) + 1, 0);
  for (Coalition c = 1; c <= full; ++c) assignment[c] = 1 + (c & 1);
  return relation_from_assignment(players, assignment);
}

inline std::pair<int, int> random_pair(int n, Rng& rng) {
  const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
  if (j >= i) ++j;
  return {i, j};
}

inline std::vector<Coalition> subsets_of(Coalition rest) {
  std::vector<Coalition> out;
  Coalition s = rest;
  while (true) {
    out.push_back(s);
    if (s == 0) break;
    s = (s - 1) & rest;
  }
  return out;
}

inline std::vector<std::uint32_t> assignment_of(const PowerRelation& pr) {
  const Coalition full = pr.full_mask();
  std::vector<std::uint32_t> out(static_cast<std::size_t>(full) + 1, 0);
  for (Coalition c = 1; c <= full; ++c) out[c] = pr.class_of(c);
  return out;
}

}  // namespace detail


// Samples an axiom datum on the given base relation. Returns nullopt when
// the base cannot host the axiom's construction (no splittable class for
// CAT, fewer than two classes for IWS/IBS/CI, nothing movable for M,
// non-dichotomous base for k-DD).
inline std::optional<AxiomWitness> witness_on(Axiom axiom, const PowerRelation& base,
                                              Rng& rng) {
  const int n = base.player_count();
  const PlayerSet& players = base.players();
  const Coalition full = base.full_mask();
  const auto [i, j] = detail::random_pair(n, rng);
  const Coalition bi = Coalition{1} << i, bj = Coalition{1} << j;

  switch (axiom) {
    case Axiom::SDes: {
      auto assignment = detail::assignment_of(base);
      bool strict = false;
      for_each_cp_context(base, i, j, [&](Coalition s) {
        if (assignment[s | bi] > assignment[s | bj])
          std::swap(assignment[s | bi], assignment[s | bj]);
        if (assignment[s | bi] < assignment[s | bj]) strict = true;
      });
      if (!strict) {
        for (Coalition c = 1; c <= full; ++c) assignment[c] = (c & bi) ? 1 : 2;
      }
      AxiomWitness w(relation_from_assignment(players, assignment));
      w.axiom = axiom;
      w.i = i;
      w.j = j;
      return w;
    }
    case Axiom::Sym: {
      auto assignment = detail::assignment_of(base);
      for_each_cp_context(base, i, j,
                          [&](Coalition s) { assignment[s | bj] = assignment[s | bi]; });
      AxiomWitness w(relation_from_assignment(players, assignment));
      w.axiom = axiom;
      w.i = i;
      w.j = j;
      return w;
    }
    case Axiom::Neu: {
      auto assignment = detail::assignment_of(base);
      for_each_cp_context(base, i, j,
                          [&](Coalition s) { std::swap(assignment[s | bi], assignment[s | bj]); });
      AxiomWitness w(base);
      w.axiom = axiom;
      w.i = i;
      w.j = j;
      w.other = relation_from_assignment(players, assignment);
      return w;
    }
    case Axiom::EC: {
      auto subsets = detail::subsets_of(detail::rest_mask(base, i, j));
      auto image = subsets;
      rng.shuffle(image);
      PowerRelation fresh = detail::random_relation_min_classes(n, rng, 2);
      auto assignment = detail::assignment_of(fresh);
      const std::uint32_t l2 = static_cast<std::uint32_t>(fresh.class_count());
      AxiomWitness w(base);
      for (std::size_t idx = 0; idx < subsets.size(); ++idx) {
        const Coalition s = subsets[idx], t = image[idx];
        w.pi.emplace_back(s, t);
        const int sign = base.compare(s | bi, s | bj);
        if (sign == 0) {
          const std::uint32_t c = 1 + static_cast<std::uint32_t>(rng.below(l2));
          assignment[t | bi] = c;
          assignment[t | bj] = c;
        } else {
          const std::uint32_t c1 = 1 + static_cast<std::uint32_t>(rng.below(l2 - 1));
          const std::uint32_t c2 = c1 + 1 + static_cast<std::uint32_t>(rng.below(l2 - c1));
          assignment[t | bi] = sign > 0 ? c1 : c2;
          assignment[t | bj] = sign > 0 ? c2 : c1;
        }
      }
      w.axiom = axiom;
      w.i = i;
      w.j = j;
      w.other = relation_from_assignment(players, assignment);
      return w;
    }
    case Axiom::CA:
    case Axiom::PCA: {
      auto subsets = detail::subsets_of(detail::rest_mask(base, i, j));
      auto image = subsets;
      if (axiom == Axiom::PCA) {
        for (int size = 0; size <= n - 2; ++size) {
          std::vector<std::size_t> idxs;
          for (std::size_t idx = 0; idx < subsets.size(); ++idx)
            if (coalition_size(subsets[idx]) == size) idxs.push_back(idx);
          auto pool = idxs;
          rng.shuffle(pool);
          for (std::size_t p = 0; p < idxs.size(); ++p) image[idxs[p]] = subsets[pool[p]];
        }
      } else {
        rng.shuffle(image);
      }
      auto assignment = detail::assignment_of(base);
      AxiomWitness w(base);
      for (std::size_t idx = 0; idx < subsets.size(); ++idx) {
        w.pi.emplace_back(subsets[idx], image[idx]);
        assignment[image[idx] | bi] = base.class_of(subsets[idx] | bi);
      }
      for (auto& level : assignment) level *= 3;
      const std::uint32_t span = 3 * static_cast<std::uint32_t>(base.class_count()) + 4;
      const std::uint64_t moves = rng.below(4);
      for (std::uint64_t mv = 0; mv < moves; ++mv) {
        const Coalition c = 1 + static_cast<Coalition>(rng.below(full));
        const bool has_i = (c >> i) & 1u, has_j = (c >> j) & 1u;
        if (has_i != has_j) continue;
        assignment[c] = 1 + static_cast<std::uint32_t>(rng.below(span));
      }
      w.axiom = axiom;
      w.i = i;
      w.j = j;
      w.other = relation_from_assignment(players, assignment);
      return w;
    }
    case Axiom::CAT: {
      std::vector<std::size_t> fat;
      for (std::size_t k = 0; k < base.class_count(); ++k)
        if (base.classes()[k].size() >= 2) fat.push_back(k);
      if (fat.empty()) return std::nullopt;
      const std::size_t cls = fat[static_cast<std::size_t>(rng.below(fat.size()))];
      std::vector<Coalition> shared = base.classes()[cls];
      std::vector<Coalition> shuffled = shared;
      rng.shuffle(shuffled);
      const std::size_t parts_wanted =
          2 + rng.below(std::min<std::uint64_t>(shuffled.size(), 4) - 1);
      std::vector<std::vector<Coalition>> refinement(parts_wanted);
      for (std::size_t idx = 0; idx < shuffled.size(); ++idx)
        refinement[idx < parts_wanted ? idx : rng.below(parts_wanted)].push_back(shuffled[idx]);

      const std::uint64_t levels = 2 + rng.below(6);
      std::vector<std::uint32_t> assignment(static_cast<std::size_t>(full) + 1, 0);
      const std::uint32_t slot = 2 * static_cast<std::uint32_t>(rng.below(levels + 1)) + 1;
      for (Coalition c = 1; c <= full; ++c)
        assignment[c] = 2 * (1 + static_cast<std::uint32_t>(rng.below(levels)));
      for (Coalition c : shared) assignment[c] = slot;

      AxiomWitness w(base);
      w.axiom = axiom;
      w.i = i;
      w.j = j;
      w.other = relation_from_assignment(players, assignment);
      w.refinement = std::move(refinement);
      return w;
    }
    case Axiom::IWS:
    case Axiom::IBS: {
      if (base.class_count() < 2) return std::nullopt;
      const auto& extreme =
          axiom == Axiom::IWS ? base.classes().back() : base.classes().front();
      std::vector<Coalition> items = extreme;
      rng.shuffle(items);
      std::size_t parts = 1;
      if (items.size() >= 2)
        parts = 2 + rng.below(std::min<std::uint64_t>(items.size(), 4) - 1);
      std::vector<std::vector<Coalition>> partition(parts);
      for (std::size_t idx = 0; idx < items.size(); ++idx)
        partition[idx < parts ? idx : rng.below(parts)].push_back(items[idx]);
      AxiomWitness w(base);
      w.axiom = axiom;
      w.i = i;
      w.j = j;
      w.partition = std::move(partition);
      return w;
    }
    case Axiom::KDD: {
      if (base.class_count() != 2) return std::nullopt;
      AxiomWitness w(base);
      w.axiom = axiom;
      w.i = i;
      w.j = j;
      return w;
    }
    case Axiom::CI: {
      if (base.class_count() < 2) return std::nullopt;
      const auto& last = base.classes().back();
      std::vector<Coalition> sigma;
      for (Coalition c : last)
        if (rng.coin()) sigma.push_back(c);
      if (sigma.size() == last.size())
        sigma.erase(sigma.begin() + static_cast<long>(rng.below(sigma.size())));
      AxiomWitness w(base);
      w.axiom = axiom;
      w.i = i;
      w.j = j;
      w.sigma = std::move(sigma);
      return w;
    }
    case Axiom::M: {
      std::vector<Coalition> movable;
      for (Coalition c = 1; c <= full; ++c)
        if ((c & bi) && !(c & bj) && base.class_of(c) >= 2) movable.push_back(c);
      if (movable.empty()) return std::nullopt;
      const Coalition t = movable[static_cast<std::size_t>(rng.below(movable.size()))];
      const std::uint32_t cls = base.class_of(t);
      const bool alone = base.classes()[cls - 1].size() == 1;
      auto assignment = detail::assignment_of(base);
      for (auto& level : assignment) level *= 2;
      const std::uint32_t target = 1 + static_cast<std::uint32_t>(rng.below(cls - 1));
      assignment[t] = (alone || rng.coin()) ? 2 * target : 2 * target - 1;
      AxiomWitness w(base);
      w.axiom = axiom;
      w.i = i;
      w.j = j;
      w.other = relation_from_assignment(players, assignment);
      return w;
    }
  }
  throw Error("unknown axiom");
}

// Deterministic in (axiom, n, seed). Builds the datum so the hypothesis
// holds by construction; throws UnsatisfiableAtSizeError where no witness
// exists at the given player count (k-DD needs conflicting dominance).
inline AxiomWitness generate_witness(Axiom axiom, int n, std::uint64_t seed) {
  if (n < 2 || n > kMaxPlayers) throw Error("witness size out of range");
  Rng rng(seed);
  const PlayerSet players = PlayerSet::of_size(n);
  const Coalition full = static_cast<Coalition>((1u << n) - 1u);

  if (axiom == Axiom::KDD) {
    // Constructed outright: per coalition size, either all CP-comparisons
    // tie or one player wins them all, with i taking the smallest strict
    // size and j a larger one.
    if (n < 3)
      throw UnsatisfiableAtSizeError(
          "k-DD needs strict dominance in both directions, impossible at n=2");
    const auto [i, j] = detail::random_pair(n, rng);
    const Coalition bi = Coalition{1} << i, bj = Coalition{1} << j;
    const int top = n - 2;
    const int k1 = static_cast<int>(rng.below(static_cast<std::uint64_t>(top)));
    const int k2 = k1 + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(top - k1)));
    enum Pat { Tie, IWins, JWins };
    std::vector<Pat> pattern(static_cast<std::size_t>(top) + 1, Tie);
    pattern[static_cast<std::size_t>(k1)] = IWins;
    pattern[static_cast<std::size_t>(k2)] = JWins;
    for (int k = k1 + 1; k < k2; ++k)
      pattern[static_cast<std::size_t>(k)] = rng.coin() ? Tie : IWins;
    for (int k = k2 + 1; k <= top; ++k)
      pattern[static_cast<std::size_t>(k)] = static_cast<Pat>(rng.below(3));

    std::vector<std::uint32_t> assignment(static_cast<std::size_t>(full) + 1, 0);
    for (Coalition c = 1; c <= full; ++c) assignment[c] = rng.coin() ? 1 : 2;
    std::vector<bool> strict_done(static_cast<std::size_t>(top) + 1, false);
    const Coalition rest = full & ~(bi | bj);
    Coalition s = rest;
    while (true) {
      const int size = coalition_size(s);
      const Pat pat = pattern[static_cast<std::size_t>(size)];
      const bool may_tie = strict_done[static_cast<std::size_t>(size)] && rng.below(3) == 0;
      if (pat == Tie || may_tie) {
        const std::uint32_t c = rng.coin() ? 1 : 2;
        assignment[s | bi] = c;
        assignment[s | bj] = c;
      } else if (pat == IWins) {
        assignment[s | bi] = 1;
        assignment[s | bj] = 2;
        strict_done[static_cast<std::size_t>(size)] = true;
      } else {
        assignment[s | bj] = 1;
        assignment[s | bi] = 2;
        strict_done[static_cast<std::size_t>(size)] = true;
      }
      if (s == 0) break;
      s = (s - 1) & rest;
    }
    AxiomWitness w(relation_from_assignment(players, assignment));
    w.axiom = axiom;
    w.i = i;
    w.j = j;
    return w;
  }

  const std::size_t min_classes =
      (axiom == Axiom::IWS || axiom == Axiom::IBS || axiom == Axiom::CI || axiom == Axiom::M)
          ? 2
          : 1;
  for (int attempt = 0; attempt < 300; ++attempt) {
    PowerRelation base = detail::random_relation_min_classes(n, rng, min_classes);
    if (auto w = witness_on(axiom, base, rng)) return *std::move(w);
  }
  // Forced fallback bases for the structurally picky axioms.
  std::vector<std::uint32_t> assignment(static_cast<std::size_t>(full) + 1, 1);
  if (axiom == Axiom::CAT) {
    // one big class plus a singleton gives a splittable shared class
    assignment[1] = 2;
  } else if (axiom == Axiom::M) {
    assignment[1] = 2;  // the singleton {player 0} sits below and can move up
  } else {
    for (Coalition c = 1; c <= full; ++c) assignment[c] = 1 + (c & 1);
  }
  PowerRelation base = relation_from_assignment(players, assignment);
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (auto w = witness_on(axiom, base, rng)) return *std::move(w);
  }
  throw Error("witness generation failed");
}

}  // namespace socrank
