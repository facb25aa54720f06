#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "socrank/axioms.hpp"
#include "socrank/enumerate.hpp"
#include "socrank/io.hpp"
#include "socrank/rng.hpp"

namespace socrank {

namespace detail {

inline AxiomWitness fixture(Axiom axiom, int n, std::vector<std::vector<Coalition>> base,
                            int i, int j) {
  AxiomWitness w(PowerRelation(PlayerSet::of_size(n), std::move(base)));
  w.axiom = axiom;
  w.i = i;
  w.j = j;
  return w;
}

}  // namespace detail

// Hand-built counterexample witnesses. The grid runs these before any
// randomized search so every expected refutation is found deterministically.
inline std::vector<AxiomWitness> paper_fixtures(Axiom axiom) {
  std::vector<AxiomWitness> out;
  const PlayerSet p3 = PlayerSet::of_size(3);
  const PlayerSet p4 = PlayerSet::of_size(4);
  switch (axiom) {
    case Axiom::CA: {
      // j > ik > jk ~ i with an empty/{k} swap: CP flips from tie to strict.
      auto w = detail::fixture(Axiom::CA, 3, {{2}, {5}, {6, 1}, {4, 3, 7}}, 0, 1);
      w.other = PowerRelation(p3, {{2}, {1}, {6, 5}, {4, 3, 7}});
      w.pi = {{0, 4}, {4, 0}};
      out.push_back(std::move(w));
      // symmetric pair whose singletons/pairs swap sizes: flips L1 and L1*.
      auto w2 = detail::fixture(Axiom::CA, 3, {{1, 2}, {5, 6}, {4, 3, 7}}, 0, 1);
      w2.other = PowerRelation(p3, {{5, 2}, {1, 6}, {4, 3, 7}});
      w2.pi = {{0, 4}, {4, 0}};
      out.push_back(std::move(w2));
      break;
    }
    case Axiom::EC: {
      // identical CP signs, rearranged classes: flips lex-cel, dual-lex,
      // L1 and L1*.
      auto w = detail::fixture(Axiom::EC, 3, {{5}, {6}, {2}, {1}, {4, 3, 7}}, 0, 1);
      w.other = PowerRelation(p3, {{2}, {1}, {5}, {6}, {4, 3, 7}});
      out.push_back(std::move(w));
      // empty-set rule solution: i-win at {} and j-win at {k} swapped by pi.
      auto w2 = detail::fixture(Axiom::EC, 4,
                                {{1, 6, 9, 10}, {2, 5, 13, 14}, {3, 4, 7, 8, 11, 12, 15}}, 0, 1);
      w2.other = PowerRelation(p4, {{2, 5, 9, 10}, {1, 6, 13, 14}, {3, 4, 7, 8, 11, 12, 15}});
      w2.pi = {{0, 4}, {4, 0}};
      out.push_back(std::move(w2));
      break;
    }
    case Axiom::PCA: {
      // jl > ik > jk ~ il with k/l swapped: CP flips from tie to strict.
      auto w = detail::fixture(Axiom::PCA, 4,
                               {{10}, {5}, {6, 9}, {1, 2, 3, 4, 7, 8, 11, 12, 13, 14, 15}}, 0, 1);
      w.other =
          PowerRelation(p4, {{10}, {9}, {6, 5}, {1, 2, 3, 4, 7, 8, 11, 12, 13, 14, 15}});
      w.pi = {{4, 8}, {8, 4}};
      out.push_back(std::move(w));
      break;
    }
    case Axiom::KDD: {
      // i ~ jk ~ jl winning, everything else losing: i 0-dominates, j
      // 1-dominates; CP, lex-cel and dual-lex all prefer j.
      out.push_back(detail::fixture(
          Axiom::KDD, 4, {{1, 6, 10}, {2, 3, 4, 5, 7, 8, 9, 11, 12, 13, 14, 15}}, 0, 1));
      break;
    }
    case Axiom::CI: {
      // jk ~ jl > ik ~ il ~ i ~ ikl > rest with sigma = {j}: CP answers
      // differently in the refined and dichotomous relations.
      auto w = detail::fixture(Axiom::CI, 4,
                               {{6, 10}, {5, 9, 1, 13}, {2, 3, 4, 7, 8, 11, 12, 14, 15}}, 0, 1);
      w.sigma = {2};
      out.push_back(std::move(w));
      break;
    }
    case Axiom::Neu: {
      // all-tied relation: any index fallback breaks role reversal.
      auto w = detail::fixture(Axiom::Neu, 3, {{1, 2, 3, 4, 5, 6, 7}}, 0, 1);
      w.other = PowerRelation(p3, {{1, 2, 3, 4, 5, 6, 7}});
      out.push_back(std::move(w));
      break;
    }
    case Axiom::Sym: {
      out.push_back(detail::fixture(Axiom::Sym, 3, {{1, 2, 3, 4, 5, 6, 7}}, 0, 1));
      break;
    }
    case Axiom::IBS: {
      // i ~ j on top; pulling {j} out first flips CP, lex-cel and L1.
      auto w = detail::fixture(Axiom::IBS, 3, {{1, 2}, {5}, {6, 4, 3, 7}}, 0, 1);
      w.partition = {{2}, {1}};
      out.push_back(std::move(w));
      break;
    }
    case Axiom::IWS: {
      // worst class {j, ik, jk}; splitting {j, jk} above {ik} flips CP,
      // dual-lex and L1*.
      auto w = detail::fixture(Axiom::IWS, 3, {{3, 7, 4}, {1}, {2, 5, 6}}, 0, 1);
      w.partition = {{2, 6}, {5}};
      out.push_back(std::move(w));
      break;
    }
    default:
      break;
  }
  return out;
}

// Table 1 of the axiom study: which of the eleven properties each of the
// five solutions satisfies.
inline bool expected_table1(Solution sol, Axiom axiom) {
  switch (axiom) {
    case Axiom::SDes:
    case Axiom::Neu:
    case Axiom::CAT:
    case Axiom::Sym:
      return true;
    case Axiom::EC:
      return sol == Solution::CP;
    case Axiom::CA:
      return sol == Solution::LexCel || sol == Solution::DualLex;
    case Axiom::IWS:
      return sol == Solution::LexCel || sol == Solution::L1;
    case Axiom::IBS:
      return sol == Solution::DualLex || sol == Solution::L1Star;
    case Axiom::KDD:
      return sol == Solution::L1 || sol == Solution::L1Star;
    case Axiom::PCA:
      return sol != Solution::CP;
    case Axiom::CI:
      return sol != Solution::CP;
    case Axiom::M:
      return false;  // not part of the grid
  }
  return false;
}

enum class Verdict { Satisfied, Refuted, Unsatisfiable };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Satisfied: return "satisfied";
    case Verdict::Refuted: return "refuted";
    case Verdict::Unsatisfiable: return "unsatisfiable";
  }
  return "?";
}

struct GridCell {
  Solution solution;
  Axiom axiom;
  Verdict verdict = Verdict::Satisfied;
  std::uint64_t trials_run = 0;
  std::optional<AxiomWitness> witness;  // stored refutation, replayable
  std::string witness_source;           // "fixture" or "random"
};

struct GridReport {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<GridCell> cells;

  const GridCell* find(Solution sol, Axiom axiom) const {
    for (const auto& cell : cells)
      if (cell.solution == sol && cell.axiom == axiom) return &cell;
    return nullptr;
  }

  // True iff every cell over the five main solutions and eleven grid axioms
  // matches the published pattern.
  bool matches_table1() const {
    for (const auto& cell : cells) {
      if (cell.axiom == Axiom::M) continue;
      bool is_main = false;
      for (Solution s : kMainSolutions) is_main |= (s == cell.solution);
      if (!is_main) continue;
      const bool expect_ok = expected_table1(cell.solution, cell.axiom);
      if (expect_ok != (cell.verdict == Verdict::Satisfied)) return false;
    }
    return true;
  }
};

enum class GridMode { Randomized, ExhaustiveRelations };

// Runs the (solution x axiom) grid. Fixtures first, then `trials` seeded
// random witnesses per cell (or one sampled datum per enumerated quotient
// order in exhaustive mode). Per-trial seeds are derived by a splittable
// scheme so parallel and serial schedules would report identically.
inline GridReport run_grid(const std::vector<Solution>& solutions,
                           const std::vector<Axiom>& axioms, int n, std::uint64_t trials,
                           std::uint64_t seed, bool use_fixtures = true,
                           GridMode mode = GridMode::Randomized) {
  GridReport report;
  report.n = n;
  report.seed = seed;

  std::vector<PowerRelation> universe;
  if (mode == GridMode::ExhaustiveRelations) {
    if (n > 3) throw Error("exhaustive relation sweeps are only feasible at n <= 3");
    for_each_quotient_order(n, [&](PowerRelation pr) { universe.push_back(std::move(pr)); });
  }

  for (std::size_t ai = 0; ai < axioms.size(); ++ai) {
    const Axiom axiom = axioms[ai];
    for (std::size_t si = 0; si < solutions.size(); ++si) {
      const Solution sol = solutions[si];
      GridCell cell;
      cell.solution = sol;
      cell.axiom = axiom;

      if (use_fixtures) {
        for (const AxiomWitness& w : paper_fixtures(axiom)) {
          if (check_axiom(axiom, sol, w).status == CheckStatus::Violated) {
            cell.verdict = Verdict::Refuted;
            cell.witness = w;
            cell.witness_source = "fixture";
            break;
          }
        }
      }

      if (cell.verdict == Verdict::Satisfied) {
        const std::uint64_t budget =
            mode == GridMode::ExhaustiveRelations ? universe.size() : trials;
        for (std::uint64_t t = 0; t < budget; ++t) {
          const std::uint64_t wseed = mix_seed(seed, ai, si, t);
          std::optional<AxiomWitness> w;
          try {
            if (mode == GridMode::ExhaustiveRelations) {
              Rng rng(wseed);
              w = witness_on(axiom, universe[t], rng);
              if (!w) continue;
            } else {
              w = generate_witness(axiom, n, wseed);
            }
          } catch (const UnsatisfiableAtSizeError&) {
            cell.verdict = Verdict::Unsatisfiable;
            break;
          }
          ++cell.trials_run;
          if (check_axiom(axiom, sol, *w).status == CheckStatus::Violated) {
            cell.verdict = Verdict::Refuted;
            cell.witness = std::move(w);
            cell.witness_source = "random";
            break;
          }
        }
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

// Serializes a witness as a .pr document for the base relation followed by
// a commented datum section (comments keep the file loadable as plain .pr).
inline std::string witness_to_text(const AxiomWitness& w) {
  std::ostringstream out;
  serialize_power_relation(w.base, out);
  out << "# axiom: " << axiom_name(w.axiom) << '\n';
  out << "# pair: " << w.base.players().name(w.i) << ' ' << w.base.players().name(w.j) << '\n';
  if (w.other) {
    std::ostringstream inner;
    serialize_power_relation(*w.other, inner);
    std::string text = inner.str();
    const auto nl = text.find('\n');
    out << "# ranking2:" << text.substr(text.find(':', nl) + 1);
  }
  if (!w.pi.empty()) {
    out << "# pi:";
    for (const auto& [from, to] : w.pi)
      out << ' ' << w.base.describe(from) << "->" << w.base.describe(to);
    out << '\n';
  }
  if (!w.partition.empty()) {
    out << "# partition:";
    bool first_part = true;
    for (const auto& part : w.partition) {
      if (!first_part) out << " >";
      first_part = false;
      for (Coalition c : part) out << ' ' << w.base.describe(c);
    }
    out << '\n';
  }
  if (w.axiom == Axiom::CI) {
    out << "# sigma:";
    for (Coalition c : w.sigma) out << ' ' << w.base.describe(c);
    out << '\n';
  }
  if (!w.refinement.empty()) {
    out << "# refinement:";
    bool first_part = true;
    for (const auto& part : w.refinement) {
      if (!first_part) out << " >";
      first_part = false;
      for (Coalition c : part) out << ' ' << w.base.describe(c);
    }
    out << '\n';
  }
  return out.str();
}

// writer(cell, text) returns the stored filename (or "" to skip).
inline std::string grid_to_csv(
    const GridReport& report,
    const std::function<std::string(const GridCell&, const std::string&)>& writer = {}) {
  std::ostringstream out;
  out << "solution,axiom,verdict,trials,witness_file\n";
  for (const auto& cell : report.cells) {
    std::string file;
    if (cell.witness && writer) file = writer(cell, witness_to_text(*cell.witness));
    out << solution_name(cell.solution) << ',' << axiom_name(cell.axiom) << ','
        << verdict_name(cell.verdict) << ',' << cell.trials_run << ',' << file << '\n';
  }
  return out.str();
}

// Randomized search for a CP-majority output that is not transitive.
inline std::optional<PowerRelation> find_cp_intransitivity(int n, std::uint64_t max_samples,
                                                           std::uint64_t seed) {
  Rng rng(seed);
  for (std::uint64_t t = 0; t < max_samples; ++t) {
    PowerRelation pr = random_relation(n, rng);
    if (!cp_majority(pr).transitive()) return pr;
  }
  return std::nullopt;
}

}  // namespace socrank
