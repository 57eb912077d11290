#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cartan/blocks.hpp"
#include "cartan/charring.hpp"
#include "cartan/checks.hpp"
#include "cartan/flags.hpp"
#include "cartan/io.hpp"

using namespace cartan;

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2, kUnsupported = 3 };

struct RunConfig {
  std::string family = "W";
  int n = 3;
  int cutoff = 6;
  std::uint64_t seed = 1;
  bool json = false;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--family,-f", cfg.family, "W, S, H or CH")->capture_default_str();
  cmd->add_option("--n,-n", cfg.n, "number of odd generators")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "seed for randomized sweeps")->capture_default_str();
  cmd->add_option("--cutoff", cfg.cutoff, "truncation depth for series")->check(CLI::NonNegativeNumber)->capture_default_str();
  cmd->add_flag("--json", cfg.json, "emit JSON");
}

AlgebraSpec spec_of(const RunConfig& cfg) { return AlgebraSpec(parse_family(cfg.family), cfg.n); }

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_roots(const RunConfig& cfg) {
  AlgebraSpec s = spec_of(cfg);
  json j = roots_json(s);
  if (cfg.json) {
    print(j);
    return kPass;
  }
  std::cout << s.name() << " dim " << j["dimension"].get<std::size_t>() << "\n";
  for (auto& w : root_system(s).all_roots) std::cout << "  " << format_weight(w) << "\n";
  return kPass;
}

int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& which) {
  AlgebraSpec s = spec_of(cfg);
  std::vector<std::string> names = which.empty() ? checks::suite_names() : which;
  checks::SuiteConfig sc;
  sc.seed = cfg.seed;
  sc.cutoff = cfg.cutoff;
  json report = json::array();
  bool ok = true;
  for (auto& name : names)
    for (auto& r : checks::run_suite(s, name, sc)) {
      ok = ok && (r.pass || r.skipped);
      const char* status = r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL";
      if (cfg.json)
        report.push_back({{"suite", name}, {"check", r.name}, {"status", status}, {"detail", r.detail}});
      else
        std::cout << status << " " << r.name << ": " << r.detail << std::endl;
    }
  if (cfg.json) print({{"algebra", s.name()}, {"seed", cfg.seed}, {"pass", ok}, {"checks", report}});
  return ok ? kPass : kCheckFailed;
}

int cmd_char(const RunConfig& cfg, const std::string& type, const std::string& weight) {
  AlgebraSpec s = spec_of(cfg);
  Weight w = parse_weight(s, weight);
  if (!is_dominant(s, w)) throw DominanceError("weight " + format_weight(w) + " is not dominant");
  json j = {{"algebra", s.name()}, {"type", type}, {"weight", to_json(w)}};
  auto finite = [&](const FormalCharacter& f) {
    j["mass"] = f.mass();
    j["character"] = to_json(f);
  };
  if (type == "irreducible") finite(irreducible_character(s, w));
  else if (type == "nabla") finite(ch_costandard(s, w));
  else if (type == "kac") finite(ch_kac(s, w));
  else if (type == "delta") j["character"] = to_json(ch_standard(s, w, cfg.cutoff));
  else if (type == "tilting") j["character"] = to_json(ch_tilting(s, w, cfg.cutoff));
  else if (type == "projective") j["character"] = to_json(ch_projective(s, w, cfg.cutoff));
  else throw ParseError("unknown character type '" + type + "'");
  print(j);
  return kPass;
}

int cmd_block(const RunConfig& cfg, const std::string& a, const std::string& b, bool dot) {
  AlgebraSpec s = spec_of(cfg);
  SimpleParam pa = parse_simple(s, a);
  if (dot) {
    std::cout << linkage_oracle(s, pa).dot();
    return kPass;
  }
  if (b.empty()) throw ParseError("block needs --b unless --dot is given");
  SimpleParam pb = parse_simple(s, b);
  print({{"same_block", same_block(s, pa, pb)}, {"key_a", to_json(block_key(s, pa))}, {"key_b", to_json(block_key(s, pb))}});
  return kPass;
}

int cmd_flag(const RunConfig& cfg, bool tilting, const std::string& weight, bool with_character) {
  AlgebraSpec s = spec_of(cfg);
  Weight w = parse_weight(s, weight);
  FlagTable t = tilting ? tilting_flag(s, w) : projective_flag(s, w);
  json j = {{"top", to_json(t.top)}, {"flag", to_json(t)}};
  if (with_character) j["character"] = to_json(flag_character(s, t, cfg.cutoff));
  print(j);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal-parabolic category O for Cartan-type superalgebras"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* roots = app.add_subcommand("roots", "root data and basis");
  add_common(roots, cfg);

  std::vector<std::string> which;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, cfg);
  verify->add_option("--check", which, "suite name (repeatable)")->check(CLI::IsMember(checks::suite_names()));

  std::string type = "delta", weight, a, b;
  bool dot = false, with_character = false;
  auto* chr = app.add_subcommand("char", "character of a module");
  add_common(chr, cfg);
  chr->add_option("--type", type, "delta, nabla, kac, irreducible, tilting or projective")
      ->check(CLI::IsMember({"delta", "nabla", "kac", "irreducible", "tilting", "projective"}))
      ->capture_default_str();
  chr->add_option("--weight,-w", weight, "weight p/q,...;delta=p/q")->required();

  auto* block = app.add_subcommand("block", "compare blocks of two simples");
  add_common(block, cfg);
  block->add_option("--a", a, "simple weight[@dK,pB]")->required();
  block->add_option("--b", b, "simple weight[@dK,pB]");
  block->add_flag("--dot", dot, "print the linkage component of --a as DOT");

  auto* tilt = app.add_subcommand("tilting", "Delta-flag of a tilting module");
  auto* proj = app.add_subcommand("projective", "Delta-flag of a projective cover");
  for (auto* c : {tilt, proj}) {
    add_common(c, cfg);
    c->add_option("--weight,-w", weight, "weight p/q,...;delta=p/q")->required();
    c->add_flag("--character", with_character, "include the truncated character");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*roots) return cmd_roots(cfg);
    if (*verify) return cmd_verify(cfg, which);
    if (*chr) return cmd_char(cfg, type, weight);
    if (*block) return cmd_block(cfg, a, b, dot);
    if (*tilt) return cmd_flag(cfg, true, weight, with_character);
    if (*proj) return cmd_flag(cfg, false, weight, with_character);
  } catch (const UnsupportedShapeError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const RankError& e) {
    std::cerr << "rank error: " << e.what() << "\n";
    return kUsage;
  } catch (const DominanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
