#pragma once

#include <array>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "socrank/core.hpp"
#include "socrank/game.hpp"
#include "socrank/solutions.hpp"

namespace socrank {

// States General of the Netherlands: 17 parties with their seat counts in
// the House of Representatives (150 seats, quota 76) and the Senate
// (75 seats, quota 38). A bill needs a majority in the lower house first,
// then in the upper house.
struct NetherlandsParty {
  const char* label;
  std::int64_t lower;
  std::int64_t upper;
};

inline constexpr std::array<NetherlandsParty, 17> kNetherlandsParties = {{
    {"VVD", 40, 13},
    {"PvdA", 36, 8},
    {"SP", 15, 9},
    {"CDA", 13, 12},
    {"D66", 12, 10},
    {"PVV", 12, 9},
    {"CU", 5, 3},
    {"GL", 4, 4},
    {"SGP", 3, 2},
    {"PvdD", 2, 2},
    {"GrKO", 2, 0},
    {"GrBvK", 2, 0},
    {"50PLUS", 1, 2},
    {"Houwers", 1, 0},
    {"Klein", 1, 0},
    {"Van_Vliet", 1, 0},
    {"OSF", 0, 1},
}};

inline constexpr std::int64_t kNetherlandsLowerQuota = 76;
inline constexpr std::int64_t kNetherlandsUpperQuota = 38;

inline MulticameralGame netherlands_game() {
  std::vector<std::string> names;
  House lower, upper;
  lower.quota = kNetherlandsLowerQuota;
  upper.quota = kNetherlandsUpperQuota;
  for (const auto& party : kNetherlandsParties) {
    names.emplace_back(party.label);
    lower.weights.push_back(party.lower);
    upper.weights.push_back(party.upper);
  }
  return MulticameralGame(PlayerSet(std::move(names)), {lower, upper});
}

// Published rankings for the three solutions with a reference column
// (competition ranks, party order as above).
inline constexpr std::array<int, 17> kExpectedLexcelRanks = {
    1, 2, 4, 3, 5, 6, 8, 7, 9, 10, 12, 12, 11, 15, 15, 15, 14};
inline constexpr std::array<int, 17> kExpectedL1Ranks = {
    1, 2, 4, 3, 5, 6, 8, 7, 9, 10, 13, 13, 11, 15, 15, 15, 12};
inline constexpr std::array<int, 17> kExpectedCpRanks = {
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 12, 11, 14, 14, 14, 17};

inline constexpr std::array<std::uint64_t, 3> kExpectedThetaGrKO = {28838, 4442, 32256};
inline constexpr std::array<std::uint64_t, 3> kExpectedThetaOSF = {28747, 3517, 33272};

// First seven rows of the published size-by-class matrices, plus the
// grand-coalition row (1, 0, 0) at size 17.
inline constexpr std::array<std::array<std::uint64_t, 3>, 7> kExpectedL1RowsGrKO = {{
    {0, 0, 1},
    {0, 0, 16},
    {0, 1, 119},
    {0, 14, 546},
    {12, 86, 1722},
    {161, 307, 3900},
    {910, 696, 6402},
}};
inline constexpr std::array<std::array<std::uint64_t, 3>, 7> kExpectedL1RowsOSF = {{
    {0, 0, 1},
    {0, 0, 16},
    {0, 1, 119},
    {0, 14, 546},
    {13, 84, 1723},
    {159, 284, 3925},
    {886, 581, 6541},
}};

// Strict CP-win counts among GrKO, Van Vliet and OSF (row beats column).
inline constexpr std::array<std::array<std::uint64_t, 3>, 3> kExpectedCpSubmatrix = {{
    {0, 512, 1016},
    {0, 0, 504},
    {405, 437, 0},
}};

struct CaseStudyResult {
  bool ok = true;
  int checks = 0;
  int failures = 0;
};

namespace detail {

template <typename T, typename U>
inline void expect_eq(CaseStudyResult& res, std::ostream& out, const std::string& what,
                      const T& got, const U& want) {
  ++res.checks;
  if (!(got == static_cast<T>(want))) {
    ++res.failures;
    res.ok = false;
    out << "MISMATCH " << what << ": computed " << got << ", expected " << want << '\n';
  }
}

}  // namespace detail

// Computes the full bicameral case study from the embedded data, prints the
// rank table, the occurrence vectors, the matrix rows and the CP submatrix,
// and checks every printed value against the embedded expectations.
inline CaseStudyResult run_case_study(std::ostream& out) {
  CaseStudyResult res;
  const MulticameralGame game = netherlands_game();
  const PowerRelation pr = game_to_power_relation(game);
  const PlayerSet& players = pr.players();

  auto ranks_of = [&](const PairwiseRelation& rel) {
    return std::get<RankingOutput>(ranks_from_pairwise(rel)).rank;
  };
  const auto lex_ranks = ranks_of(lexcel(pr));
  const auto l1_ranks = ranks_of(l1(pr));
  const auto cp_ranks = ranks_of(cp_majority(pr));
  const auto dual_ranks = ranks_of(dual_lex(pr));
  const auto l1s_ranks = ranks_of(l1_star(pr));

  out << "party        w_l  w_u  lexcel  l1  cp  | duallex  l1star (no paper reference)\n";
  for (int p = 0; p < players.size(); ++p) {
    const auto& party = kNetherlandsParties[static_cast<std::size_t>(p)];
    out << std::left << std::setw(12) << party.label << std::right << std::setw(4)
        << party.lower << std::setw(5) << party.upper << std::setw(7)
        << lex_ranks[static_cast<std::size_t>(p)] << std::setw(5)
        << l1_ranks[static_cast<std::size_t>(p)] << std::setw(4)
        << cp_ranks[static_cast<std::size_t>(p)] << "  |" << std::setw(8)
        << dual_ranks[static_cast<std::size_t>(p)] << std::setw(8)
        << l1s_ranks[static_cast<std::size_t>(p)] << '\n';
    detail::expect_eq(res, out, std::string(party.label) + " lexcel rank",
                      lex_ranks[static_cast<std::size_t>(p)],
                      kExpectedLexcelRanks[static_cast<std::size_t>(p)]);
    detail::expect_eq(res, out, std::string(party.label) + " l1 rank",
                      l1_ranks[static_cast<std::size_t>(p)],
                      kExpectedL1Ranks[static_cast<std::size_t>(p)]);
    detail::expect_eq(res, out, std::string(party.label) + " cp rank",
                      cp_ranks[static_cast<std::size_t>(p)],
                      kExpectedCpRanks[static_cast<std::size_t>(p)]);
  }

  const int grko = players.require("GrKO");
  const int osf = players.require("OSF");
  const int vvliet = players.require("Van_Vliet");

  const ThetaVector theta_grko = theta(pr, grko);
  const ThetaVector theta_osf = theta(pr, osf);
  out << "\ntheta(GrKO) = (" << theta_grko[0] << ", " << theta_grko[1] << ", " << theta_grko[2]
      << ")\ntheta(OSF)  = (" << theta_osf[0] << ", " << theta_osf[1] << ", " << theta_osf[2]
      << ")\n";
  for (std::size_t k = 0; k < 3; ++k) {
    detail::expect_eq(res, out, "theta(GrKO)[" + std::to_string(k + 1) + "]", theta_grko[k],
                      kExpectedThetaGrKO[k]);
    detail::expect_eq(res, out, "theta(OSF)[" + std::to_string(k + 1) + "]", theta_osf[k],
                      kExpectedThetaOSF[k]);
  }

  const L1Matrix m_grko = l1_matrix(pr, grko);
  const L1Matrix m_osf = l1_matrix(pr, osf);
  out << "\nsize-by-class counts, rows 1-7 and 17 (GrKO | OSF):\n";
  for (int s = 1; s <= 7; ++s) {
    out << "  s=" << s << ": (" << m_grko.at(s, 1) << ", " << m_grko.at(s, 2) << ", "
        << m_grko.at(s, 3) << ") | (" << m_osf.at(s, 1) << ", " << m_osf.at(s, 2) << ", "
        << m_osf.at(s, 3) << ")\n";
    for (std::size_t k = 1; k <= 3; ++k) {
      detail::expect_eq(res, out,
                        "M(GrKO)[" + std::to_string(s) + "][" + std::to_string(k) + "]",
                        m_grko.at(s, k), kExpectedL1RowsGrKO[static_cast<std::size_t>(s - 1)][k - 1]);
      detail::expect_eq(res, out,
                        "M(OSF)[" + std::to_string(s) + "][" + std::to_string(k) + "]",
                        m_osf.at(s, k), kExpectedL1RowsOSF[static_cast<std::size_t>(s - 1)][k - 1]);
    }
  }
  out << "  s=17: (" << m_grko.at(17, 1) << ", " << m_grko.at(17, 2) << ", " << m_grko.at(17, 3)
      << ") | (" << m_osf.at(17, 1) << ", " << m_osf.at(17, 2) << ", " << m_osf.at(17, 3)
      << ")\n";
  for (std::size_t k = 1; k <= 3; ++k) {
    detail::expect_eq(res, out, "M(GrKO)[17][" + std::to_string(k) + "]", m_grko.at(17, k),
                      k == 1 ? 1u : 0u);
    detail::expect_eq(res, out, "M(OSF)[17][" + std::to_string(k) + "]", m_osf.at(17, k),
                      k == 1 ? 1u : 0u);
  }

  const std::array<int, 3> trio = {grko, vvliet, osf};
  const std::array<const char*, 3> trio_names = {"GrKO", "Van_Vliet", "OSF"};
  out << "\nCP-comparison wins (row beats column):\n";
  for (std::size_t r = 0; r < 3; ++r) {
    out << "  " << std::left << std::setw(10) << trio_names[r] << std::right;
    for (std::size_t c = 0; c < 3; ++c) {
      const std::uint64_t wins =
          r == c ? 0 : cp_counts(pr, trio[r], trio[c]).wins_i;
      out << std::setw(6) << wins;
      detail::expect_eq(res, out,
                        std::string("cp(") + trio_names[r] + "," + trio_names[c] + ")", wins,
                        kExpectedCpSubmatrix[r][c]);
    }
    out << '\n';
  }

  out << "\ncase study checks: " << (res.checks - res.failures) << "/" << res.checks
      << " matched\n";
  return res;
}

}  // namespace socrank
