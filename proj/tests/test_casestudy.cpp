#include <sstream>

#include "doctest.h"
#include "socrank/casestudy.hpp"

using namespace socrank;

namespace {

// Full matrix of strict CP-comparison wins for the 17 parties, row beats
// column, in embedded party order.
constexpr std::uint64_t kFullCpMatrix[17][17] = {
    {0, 5772, 12289, 12561, 13571, 13718, 16957, 17281, 17948, 18306, 18594, 18594, 18655,
     18948, 18948, 18948, 19198},
    {0, 0, 6766, 8162, 8816, 8816, 11882, 12276, 13038, 13501, 13736, 13736, 13944, 14176,
     14176, 14176, 14495},
    {0, 476, 0, 1396, 2050, 2050, 5879, 6121, 7314, 7803, 8362, 8362, 8272, 8838, 8838, 8838,
     9015},
    {0, 1133, 1366, 0, 1723, 2277, 6292, 6217, 7525, 7889, 8748, 8748, 8228, 9090, 9090, 9090,
     9008},
    {0, 558, 401, 0, 0, 573, 4886, 4879, 6205, 6593, 7361, 7361, 6970, 7736, 7736, 7736, 7718},
    {0, 274, 0, 0, 0, 0, 4431, 4429, 5762, 6163, 6911, 6911, 6560, 7304, 7304, 7304, 7339},
    {0, 0, 0, 0, 0, 0, 0, 660, 1664, 2167, 2938, 2938, 2651, 3371, 3371, 3371, 3443},
    {0, 0, 0, 0, 0, 0, 570, 0, 1619, 2080, 2952, 2952, 2518, 3349, 3349, 3349, 3368},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 526, 1467, 1467, 1038, 1917, 1917, 1917, 1974},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1003, 1003, 512, 1450, 1450, 1450, 1481},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 512, 512, 512, 512, 1016},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 512, 512, 512, 512, 1016},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 939, 939, 0, 1005, 1005, 1005, 1005},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 504},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 504},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 504},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 405, 405, 0, 437, 437, 437, 0},
};

}  // namespace

TEST_CASE("case study self-check passes") {
  std::ostringstream sink;
  const CaseStudyResult res = run_case_study(sink);
  CHECK(res.ok);
  CHECK(res.failures == 0);
  CHECK(res.checks == 114);
}

TEST_CASE("full pairwise comparison matrix of the legislature") {
  const PowerRelation pr = game_to_power_relation(netherlands_game());
  for (int i = 0; i < 17; ++i)
    for (int j = 0; j < 17; ++j) {
      const std::uint64_t wins = i == j ? 0 : cp_counts(pr, i, j).wins_i;
      CHECK(wins == kFullCpMatrix[i][j]);
    }
}

TEST_CASE("dual solutions on the legislature are transitive and computed") {
  const PowerRelation pr = game_to_power_relation(netherlands_game());
  CHECK(dual_lex(pr).transitive());
  CHECK(l1_star(pr).transitive());
  // the duals agree with their bridge definitions on the full instance
  const PowerRelation rev = pr.reversed();
  const PairwiseRelation dl = dual_lex(pr), le_rev = lexcel(rev);
  for (int i = 0; i < 17; ++i)
    for (int j = 0; j < 17; ++j)
      CHECK(dl.at(i, j) == mirror(le_rev.at(i, j)));
}
