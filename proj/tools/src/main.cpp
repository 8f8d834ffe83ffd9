#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "moca/errors.hpp"

namespace {

unsigned env_threads() {
  const char* env = std::getenv("MOCA_KIT_THREADS");
  if (!env) return 1;
  const long v = std::strtol(env, nullptr, 10);
  return v > 0 ? static_cast<unsigned>(v) : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial designs from cellular automata: Latin squares, "
               "orthogonal CA families, secret sharing, PRNG, Boolean functions"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  mocakit::GlobalOptions opt;
  opt.threads = env_threads();
  std::string out_path;
  app.add_option("--seed", opt.seed, "64-bit RNG seed for sampled values")->capture_default_str();
  app.add_flag("--json", opt.json, "emit JSON instead of text");
  app.add_option("--threads", opt.threads, "worker threads (never affects output)");
  app.add_option("--out", out_path, "also write the output to this file");

  std::string rule_arg, rule_b, pair_path, family_path, in_path, checkpoint_path, seed_hex;
  std::string method = "auto";
  std::vector<std::string> share_args;
  std::uint32_t q = 2;
  unsigned n = 2, d = 3, t_max = 0;
  std::uint64_t secret = 1, bits = 64;
  std::optional<std::uint64_t> randomness;
  std::optional<unsigned> player;
  bool count_only = false, size_only = false, nonlinear_only = false, unordered = false;
  bool confirm_long = false, entries_only = false, binary = false;

  CLI::App* latin = app.add_subcommand("latin", "Latin square of a bipermutive rule");
  latin->add_option("--rule", rule_arg, "rule spec, e.g. wolfram:150:d3 or linear:q2:1,0,1")
      ->required();

  CLI::App* orth = app.add_subcommand("orthogonal", "orthogonality of two rules");
  orth->add_option("--rule", rule_arg, "first rule (with a second --rule-b)");
  orth->add_option("--rule-b", rule_b, "second rule");
  orth->add_option("--pair", pair_path, "pair JSON file");

  CLI::App* enum_lin = app.add_subcommand("enumerate-linear", "coprime polynomial pairs");
  enum_lin->add_option("--q", q)->required();
  enum_lin->add_option("--n", n)->required();
  enum_lin->add_flag("--count-only", count_only);

  CLI::App* maxfam = app.add_subcommand("max-family", "maximal MOCA family");
  maxfam->add_option("--q", q)->required();
  maxfam->add_option("--n", n)->required();
  maxfam->add_flag("--size-only", size_only);

  CLI::App* search = app.add_subcommand("search-nonlinear", "exhaustive orthogonal pair search");
  search->add_option("--d", d, "diameter (3..6)")->required();
  search->add_flag("--nonlinear-only", nonlinear_only);
  search->add_flag("--unordered", unordered, "deduplicate swapped pairs");
  search->add_flag("--confirm-long", confirm_long);
  search->add_option("--checkpoint", checkpoint_path, "resume file for long searches");

  CLI::App* sss = app.add_subcommand("sss", "threshold secret sharing");
  sss->require_subcommand(1);
  CLI::App* deal = sss->add_subcommand("deal", "deal shares");
  deal->add_option("--family", family_path)->required();
  deal->add_option("--secret", secret, "secret in 1..N")->required();
  deal->add_option("--randomness", randomness, "explicit column in 1..N (else sampled)");
  CLI::App* rec = sss->add_subcommand("reconstruct", "recover the secret from two shares");
  rec->add_option("--family", family_path)->required();
  rec->add_option("--shares", share_args, "two player:value shares, e.g. 1:4 2:4")
      ->required()
      ->expected(2);
  rec->add_option("--method", method, "auto|sylvester|coupled|both")->capture_default_str();
  CLI::App* audit = sss->add_subcommand("audit", "perfect secrecy audit");
  audit->add_option("--family", family_path)->required();
  audit->add_option("--player", player, "audit a single player (default: all)");

  CLI::App* prng = app.add_subcommand("prng", "orthogonal-CA pseudorandom generator");
  prng->require_subcommand(1);
  CLI::App* stream = prng->add_subcommand("stream", "emit keystream bits");
  stream->add_option("--pair", pair_path)->required();
  stream->add_option("--seed-hex", seed_hex, "state seed, hex, LSB-first")->required();
  stream->add_option("--bits", bits)->capture_default_str();
  CLI::App* cycles = prng->add_subcommand("cycles", "full cycle decomposition");
  cycles->add_option("--pair", pair_path)->required();
  CLI::App* report = prng->add_subcommand("report", "linear pair max-period report");
  report->add_option("--pair", pair_path)->required();

  CLI::App* bent = app.add_subcommand("bent", "partial-spread bent function from a family");
  bent->add_option("--family", family_path)->required();

  CLI::App* ci = app.add_subcommand("ci", "correlation-immune function from a family");
  ci->add_option("--family", family_path)->required();
  ci->add_flag("--entries-only", entries_only, "omit the two coordinate columns");
  ci->add_option("--t-max", t_max, "cap the computed immunity order");

  CLI::App* oa = app.add_subcommand("oa-strength", "verify orthogonal array strength");
  oa->add_option("--family", family_path, "build the OA from a family file");
  oa->add_option("--in", in_path, "symbol matrix JSON file");
  oa->add_flag("--binary", binary, "binary-expand before measuring");
  oa->add_option("--t-max", t_max);

  CLI11_PARSE(app, argc, argv);
  if (!out_path.empty()) opt.out_path = out_path;
  if (opt.threads == 0) opt.threads = 1;

  try {
    if (app.got_subcommand(latin)) return mocakit::run_latin(opt, rule_arg);
    if (app.got_subcommand(orth)) return mocakit::run_orthogonal(opt, rule_arg, rule_b, pair_path);
    if (app.got_subcommand(enum_lin)) return mocakit::run_enumerate_linear(opt, q, n, count_only);
    if (app.got_subcommand(maxfam)) return mocakit::run_max_family(opt, q, n, size_only);
    if (app.got_subcommand(search)) {
      return mocakit::run_search_nonlinear(opt, d, nonlinear_only, unordered, confirm_long,
                                           checkpoint_path);
    }
    if (app.got_subcommand(sss)) {
      if (sss->got_subcommand(deal)) return mocakit::run_sss_deal(opt, family_path, secret, randomness);
      if (sss->got_subcommand(rec)) {
        return mocakit::run_sss_reconstruct(opt, family_path, share_args, method);
      }
      return mocakit::run_sss_audit(opt, family_path, player);
    }
    if (app.got_subcommand(prng)) {
      if (prng->got_subcommand(stream)) {
        return mocakit::run_prng_stream(opt, pair_path, seed_hex, bits);
      }
      if (prng->got_subcommand(cycles)) return mocakit::run_prng_cycles(opt, pair_path);
      return mocakit::run_prng_report(opt, pair_path);
    }
    if (app.got_subcommand(bent)) return mocakit::run_bent(opt, family_path);
    if (app.got_subcommand(ci)) return mocakit::run_ci(opt, family_path, entries_only, t_max);
    if (app.got_subcommand(oa)) {
      return mocakit::run_oa_strength(opt, family_path, in_path, binary, t_max);
    }
    std::cerr << "no subcommand selected\n";
    return 1;
  } catch (const moca::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
