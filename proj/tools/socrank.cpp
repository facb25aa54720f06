// socrank: social rankings of players from ordinal rankings of coalitions.
//
// Subcommands: rank, cp-matrix, theta, l1-matrix, gen, axioms, casestudy.
// Exit codes: 0 success, 1 input error, 2 expectation mismatch.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "socrank/casestudy.hpp"
#include "socrank/enumerate.hpp"
#include "socrank/io.hpp"
#include "socrank/lab.hpp"

using namespace socrank;

namespace {

struct InputError : Error {
  using Error::Error;
};

PowerRelation load_relation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::string ext = std::filesystem::path(path).extension().string();
  if (ext == ".game") {
    MulticameralGame game = parse_game(in);
    for (const std::string& warning : game.warnings())
      std::cerr << "warning: " << warning << "\n";
    return game_to_power_relation(game);
  }
  if (ext == ".pr") return parse_power_relation(in);
  // no recognized extension: sniff the first keyword
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (text.find("houses:") != std::string::npos &&
      text.find("players:") == std::string::npos) {
    MulticameralGame game = parse_game(text);
    return game_to_power_relation(game);
  }
  return parse_power_relation(text);
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

Solution method_from_name(const std::string& name) {
  const auto sol = solution_from_string(name);
  if (!sol) throw InputError("unknown method: " + name);
  return *sol;
}

int cmd_rank(const std::string& input, const std::string& methods_csv,
             const std::string& format) {
  const PowerRelation pr = load_relation(input);
  const auto method_names = split_list(methods_csv);
  if (method_names.empty()) throw InputError("at least one method is required");

  const bool csv = format == "csv";
  if (csv) std::cout << "player,method,rank\n";
  for (const std::string& name : method_names) {
    const Solution sol = method_from_name(name);
    const PairwiseRelation rel = evaluate(sol, pr);
    const auto outcome = ranks_from_pairwise(rel);
    if (std::holds_alternative<IntransitivityReport>(outcome)) {
      const auto w = std::get<IntransitivityReport>(outcome).witness;
      std::ostream& out = csv ? std::cerr : std::cout;
      out << "# " << name << ": relation is not transitive; witness "
          << pr.players().name(w[0]) << " >= " << pr.players().name(w[1])
          << " >= " << pr.players().name(w[2]) << " but not "
          << pr.players().name(w[0]) << " >= " << pr.players().name(w[2]) << "\n";
      if (!csv) {
        out << "# pairwise matrix (A=above, I=indifferent, B=below):\n";
        for (int i = 0; i < pr.player_count(); ++i) {
          out << "# " << std::left << std::setw(12) << pr.players().name(i) << std::right;
          for (int j = 0; j < pr.player_count(); ++j)
            out << (rel.at(i, j) == Cell::StrictlyAbove   ? " A"
                    : rel.at(i, j) == Cell::StrictlyBelow ? " B"
                                                          : " I");
          out << "\n";
        }
      }
      continue;
    }
    const auto& ranks = std::get<RankingOutput>(outcome).rank;
    if (csv) {
      for (int p = 0; p < pr.player_count(); ++p)
        std::cout << pr.players().name(p) << ',' << name << ','
                  << ranks[static_cast<std::size_t>(p)] << "\n";
    } else {
      std::cout << name << ":\n";
      for (int p = 0; p < pr.player_count(); ++p)
        std::cout << "  " << std::left << std::setw(12) << pr.players().name(p) << std::right
                  << std::setw(4) << ranks[static_cast<std::size_t>(p)] << "\n";
    }
  }
  return 0;
}

int cmd_cp_matrix(const std::string& input, const std::string& players_csv,
                  const std::string& format) {
  const PowerRelation pr = load_relation(input);
  std::vector<int> subset;
  if (players_csv.empty()) {
    for (int p = 0; p < pr.player_count(); ++p) subset.push_back(p);
  } else {
    for (const std::string& label : split_list(players_csv))
      subset.push_back(pr.players().require(label));
  }
  const bool csv = format == "csv";
  if (csv) {
    std::cout << "player";
    for (int q : subset) std::cout << ',' << pr.players().name(q);
    std::cout << "\n";
  }
  for (int p : subset) {
    if (csv)
      std::cout << pr.players().name(p);
    else
      std::cout << std::left << std::setw(12) << pr.players().name(p) << std::right;
    for (int q : subset) {
      const std::uint64_t wins = p == q ? 0 : cp_counts(pr, p, q).wins_i;
      if (csv)
        std::cout << ',' << wins;
      else
        std::cout << std::setw(8) << wins;
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_theta(const std::string& input, const std::string& player, const std::string& format) {
  const PowerRelation pr = load_relation(input);
  const ThetaVector t = theta(pr, pr.players().require(player));
  if (format == "csv") {
    std::cout << "class,count\n";
    for (std::size_t k = 0; k < t.size(); ++k) std::cout << k + 1 << ',' << t[k] << "\n";
  } else {
    std::cout << "theta(" << player << ") = (";
    for (std::size_t k = 0; k < t.size(); ++k) std::cout << (k ? ", " : "") << t[k];
    std::cout << ")\n";
  }
  return 0;
}

int cmd_l1_matrix(const std::string& input, const std::string& player,
                  const std::string& format) {
  const PowerRelation pr = load_relation(input);
  const L1Matrix m = l1_matrix(pr, pr.players().require(player));
  if (format == "csv") {
    std::cout << "size";
    for (std::size_t k = 1; k <= m.classes(); ++k) std::cout << ",class" << k;
    std::cout << "\n";
    for (int s = 1; s <= m.sizes(); ++s) {
      std::cout << s;
      for (std::size_t k = 1; k <= m.classes(); ++k) std::cout << ',' << m.at(s, k);
      std::cout << "\n";
    }
  } else {
    for (int s = 1; s <= m.sizes(); ++s) {
      std::cout << "s=" << std::setw(2) << s << ":";
      for (std::size_t k = 1; k <= m.classes(); ++k) std::cout << std::setw(10) << m.at(s, k);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_gen(const std::string& input) {
  std::ifstream in(input);
  if (!in) throw InputError("cannot open " + input);
  MulticameralGame game = parse_game(in);
  for (const std::string& warning : game.warnings())
    std::cerr << "warning: " << warning << "\n";
  const PowerRelation pr = game_to_power_relation(game);
  if (pr.player_count() <= 12) {
    serialize_power_relation(pr, std::cout);
  } else {
    std::cout << "class,count\n";
    for (std::size_t k = 0; k < pr.class_count(); ++k)
      std::cout << k + 1 << ',' << pr.classes()[k].size() << "\n";
  }
  return 0;
}

int cmd_axioms(int n, std::uint64_t trials, bool trials_given, std::uint64_t seed,
               const std::string& solutions_csv, const std::string& axioms_csv,
               bool expect_paper, const std::string& witness_dir) {
  if (n < 3 || n > 5) throw InputError("player count must be 3, 4 or 5");
  std::vector<Solution> sols;
  if (solutions_csv.empty())
    sols.assign(kMainSolutions.begin(), kMainSolutions.end());
  else
    for (const std::string& name : split_list(solutions_csv))
      sols.push_back(method_from_name(name));
  std::vector<Axiom> axs;
  if (axioms_csv.empty())
    axs.assign(kTable1Axioms.begin(), kTable1Axioms.end());
  else
    for (const std::string& name : split_list(axioms_csv)) {
      const auto ax = axiom_from_string(name);
      if (!ax) throw InputError("unknown axiom: " + name);
      axs.push_back(*ax);
    }

  // without an explicit trial count, n=3 sweeps every quotient order
  const GridMode mode = (!trials_given && n == 3) ? GridMode::ExhaustiveRelations
                                                  : GridMode::Randomized;
  const GridReport rep = run_grid(sols, axs, n, trials, seed, true, mode);

  int written = 0;
  auto writer = [&](const GridCell& cell, const std::string& text) -> std::string {
    if (witness_dir.empty()) return "";
    std::ostringstream name;
    name << solution_name(cell.solution) << '_' << axiom_name(cell.axiom) << '_' << written++
         << ".pr";
    const std::filesystem::path path = std::filesystem::path(witness_dir) / name.str();
    std::filesystem::create_directories(witness_dir);
    std::ofstream out(path);
    out << text;
    return path.string();
  };
  std::cout << grid_to_csv(rep, writer);

  if (expect_paper && !rep.matches_table1()) {
    std::cerr << "grid does not match the published pattern\n";
    return 2;
  }
  return 0;
}

int cmd_casestudy(bool dump_game) {
  if (dump_game) {
    serialize_game(netherlands_game(), std::cout);
    return 0;
  }
  const CaseStudyResult res = run_case_study(std::cout);
  return res.ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"social rankings of players from ordinal rankings of coalitions"};
  app.require_subcommand(1);

  std::string input, format = "text", methods = "cp,lexcel,duallex,l1,l1star";
  std::string players_list, player, solutions_csv, axioms_csv, witness_dir;
  std::uint64_t seed = 7, trials = 1000;
  int n = 4;
  bool expect_paper = false, dump_game = false;

  auto* rank = app.add_subcommand("rank", "competition ranks per method");
  rank->add_option("--input", input, "a .pr or .game file")->required();
  rank->add_option("--methods", methods, "comma list from cp,lexcel,duallex,l1,l1star");
  rank->add_option("--format", format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  auto* cpm = app.add_subcommand("cp-matrix", "matrix of strict CP-comparison wins");
  cpm->add_option("--input", input, "a .pr or .game file")->required();
  cpm->add_option("--players", players_list, "optional comma list of players");
  cpm->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  auto* th = app.add_subcommand("theta", "per-class occurrence counts of one player");
  th->add_option("--input", input, "a .pr or .game file")->required();
  th->add_option("--player", player, "player label")->required();
  th->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  auto* l1m = app.add_subcommand("l1-matrix", "size-by-class counts of one player");
  l1m->add_option("--input", input, "a .pr or .game file")->required();
  l1m->add_option("--player", player, "player label")->required();
  l1m->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  auto* gen = app.add_subcommand("gen", "expand a .game file into its coalitional ranking");
  gen->add_option("--input", input, "a .game file")->required();

  auto* ax = app.add_subcommand("axioms", "run the axiom verification grid");
  ax->add_option("-n,--players-count", n, "player count (3-5)");
  auto* trials_opt = ax->add_option("--trials", trials, "randomized trials per cell");
  ax->add_option("--seed", seed, "master seed");
  ax->add_option("--solutions", solutions_csv, "comma list of solutions (default: the five)");
  ax->add_option("--axioms", axioms_csv, "comma list of axioms (default: the grid eleven)");
  ax->add_flag("--expect-paper", expect_paper, "exit 2 unless the grid matches the table");
  ax->add_option("--witness-dir", witness_dir, "directory for refutation witness files");

  auto* cs = app.add_subcommand("casestudy", "reproduce the bicameral legislature study");
  cs->add_flag("--dump-game", dump_game, "print the embedded .game file and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rank->parsed()) return cmd_rank(input, methods, format);
    if (cpm->parsed()) return cmd_cp_matrix(input, players_list, format);
    if (th->parsed()) return cmd_theta(input, player, format);
    if (l1m->parsed()) return cmd_l1_matrix(input, player, format);
    if (gen->parsed()) return cmd_gen(input);
    if (ax->parsed())
      return cmd_axioms(n, trials, trials_opt->count() > 0, seed, solutions_csv, axioms_csv,
                        expect_paper, witness_dir);
    if (cs->parsed()) return cmd_casestudy(dump_game);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
