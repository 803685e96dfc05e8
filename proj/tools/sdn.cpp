// Command-line front end for the self-dual neighbor toolkit.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sdn/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace sdn::cli;

  CLI::App app{"Self-dual code neighbors: construction, distances and weight enumerators"};
  app.require_subcommand(1);
  std::string data_dir;
  app.add_option("--data-dir", data_dir, "Directory holding the bundled reference data");

  auto* verify = app.add_subcommand("verify", "Check whether a generator file defines a self-dual code");
  std::string verify_path;
  verify->add_option("code", verify_path, "Generator matrix file")->required();

  auto* wenum = app.add_subcommand("wenum", "Exact weight distribution (and W68 parameters for length 68)");
  WenumArgs wenum_args;
  wenum->add_option("code", wenum_args.path, "Generator matrix file")->required();
  wenum->add_option("--threads,-t", wenum_args.threads, "Worker threads (default: logical CPUs)");
  wenum->add_option("--early-exit", wenum_args.early_exit, "Stop at the first nonzero codeword lighter than this");
  wenum->add_flag("--json", wenum_args.json, "Emit one JSON object");
  wenum->add_flag("--halve", wenum_args.halve, "Use the all-ones symmetry to halve the walk");

  auto* nb = app.add_subcommand("neighbor", "Apply neighbor steps and print the resulting generator");
  NeighborArgs nb_args;
  nb->add_option("code", nb_args.path, "Generator matrix file")->required();
  nb->add_option("--x", nb_args.xs, "Neighbor vector (n bits, or n/2 bits on the second half); repeatable");
  nb->add_option("--x-file", nb_args.x_file, "File with one vector per line");
  nb->add_option("--out,-o", nb_args.out_path, "Output file (default stdout)");
  nb->add_flag("--standard-form", nb_args.standard_form,
               "Put the code in standard form (I | A) before each step; the output is in those coordinates");

  auto* dist = app.add_subcommand("distance", "Neighbor distance between two self-dual codes");
  std::string dist_a;
  std::string dist_b;
  dist->add_option("code1", dist_a)->required();
  dist->add_option("code2", dist_b)->required();

  auto* exp = app.add_subcommand("export", "Write the generator of a bundled code (N_0..N_4, C_i)");
  std::string exp_label;
  std::string exp_out;
  exp->add_option("label", exp_label)->required();
  exp->add_option("--out,-o", exp_out, "Output file (default stdout)");
  bool exp_base = false;
  exp->add_flag("--base-coordinates", exp_base,
                "Use the coordinates of N_0 instead of those the published vectors refer to");

  auto* rep = app.add_subcommand("reproduce", "Rebuild bundled codes and check their (gamma, beta)");
  ReproduceArgs rep_args;
  rep->add_option("--table", rep_args.table, "Table 1..6 or all");
  rep->add_option("--labels", rep_args.labels, "Labels such as C_1 N_3")->delimiter(',');
  rep->add_option("--threads,-t", rep_args.threads, "Worker threads (default: logical CPUs)");

  auto* search = app.add_subcommand("search", "Seeded randomized neighbor search; prints hits as JSON lines");
  SearchArgs search_args;
  search->add_option("code", search_args.path, "Origin generator matrix file")->required();
  search->add_option("--seed", search_args.seed, "RNG seed");
  search->add_option("--depth", search_args.depth, "Chain advances after the origin");
  search->add_option("--candidates", search_args.candidates, "Samples per chain position");
  search->add_option("--gamma", search_args.gamma, "Target gamma");
  search->add_option("--beta", search_args.betas, "Target beta values (with --gamma)")->delimiter(',');
  search->add_option("--threads,-t", search_args.threads, "Worker threads (default: logical CPUs)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(kUsage);
  }

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*verify) return cmd_verify(verify_path, out, err);
  if (*wenum) return cmd_wenum(wenum_args, out, err);
  if (*nb) return cmd_neighbor(nb_args, out, err);
  if (*dist) return cmd_distance(dist_a, dist_b, out, err);
  if (*exp) return cmd_export(data_dir, exp_label, exp_out, exp_base, out, err);
  if (*rep) {
    rep_args.data_dir = data_dir;
    return cmd_reproduce(rep_args, out, err);
  }
  if (*search) return cmd_search(search_args, out, err);
  return static_cast<int>(kUsage);
}
