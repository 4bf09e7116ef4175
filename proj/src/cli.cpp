#include "fibered/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibered/bundle.hpp"
#include "fibered/errors.hpp"
#include "fibered/verify.hpp"
#include "fibered/words.hpp"

namespace fibered {

namespace {

using ordered_json = nlohmann::ordered_json;

struct reduce_opts {
  int genus = 2;
  int euler = 1;
  std::string word;
  bool json = false;
};

struct verify_opts {
  std::string statement;
  int genus = 2;
  int euler = 1;
  std::uint64_t seed = 0;
  int trials = 100;
  int max_word_len = 6;
  int oracle_depth = 2;
  bool json = false;
};

struct info_opts {
  int genus = 2;
  int euler = 1;
  bool json = false;
};

struct fixture_opts {
  int genus = 2;
  std::uint64_t seed = 424242;
  int count = 10000;
  int max_word_len = 12;
  std::string out = "data/words_g2.txt";
};

int run_reduce(const reduce_opts& o) {
  bundle_context ctx(o.genus, o.euler);
  bundle_element x = ctx.parse(o.word);
  ordered_json j;
  j["command"] = "reduce";
  j["genus"] = o.genus;
  j["euler"] = o.euler;
  j["input"] = o.word;
  if (o.genus == 1) {
    torus_normal_form nf = ctx.torus_form(x);
    bool trivial = nf.p == 0 && nf.q == 0;
    j["trivial"] = trivial;
    if (trivial) {
      j["z_exponent"] = nf.r;
      if (o.json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "trivial; z^" << nf.r << "\n";
      }
    } else {
      j["normal_form"] = {{"p", nf.p}, {"q", nf.q}, {"r", nf.r}};
      if (o.json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "nontrivial\n";
        std::cout << "normal form: a1^" << nf.p << " b1^" << nf.q << " z^" << nf.r << "\n";
      }
    }
    return 0;
  }
  dehn_result red = ctx.surface().dehn_reduce(x.word);
  bool trivial = red.residual.letters().empty();
  j["trivial"] = trivial;
  if (trivial) {
    long long ze = x.zexp + (long long)o.euler * red.relator_count;
    j["z_exponent"] = ze;
    if (o.json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "trivial; z^" << ze << "\n";
    }
  } else {
    j["residual"] = format_word(red.residual);
    if (o.json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "nontrivial\n";
      std::cout << "residual: " << format_word(red.residual) << "\n";
    }
  }
  return 0;
}

int run_verify(const verify_opts& o) {
  static const std::set<std::string> statements = {
      "splitting",    "kernel-tau",  "prop-3-3",           "cor-3-4",
      "theorem-A", "k-linearity", "word-problem-oracle"};
  if (statements.count(o.statement) == 0) {
    std::cerr << "unknown statement: " << o.statement << "\n";
    std::cerr << "known statements:";
    for (const auto& s : statements) std::cerr << " " << s;
    std::cerr << "\n";
    return 2;
  }
  run_config cfg;
  cfg.genus = o.genus;
  cfg.euler = o.euler;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.max_word_len = o.max_word_len;
  cfg.oracle_depth = o.oracle_depth;

  verification_report rep;
  if (o.statement == "splitting") {
    rep = verify_splitting(cfg);
  } else if (o.statement == "kernel-tau") {
    rep = verify_kernel_tau(cfg);
  } else if (o.statement == "prop-3-3") {
    rep = verify_prop_3_3(cfg);
  } else if (o.statement == "cor-3-4") {
    rep = verify_cor_3_4(cfg);
  } else if (o.statement == "theorem-A") {
    rep = verify_theorem_a(cfg);
  } else if (o.statement == "k-linearity") {
    rep = verify_k_linearity(cfg);
  } else if (cfg.genus == 1) {
    rep = verify_torus_oracle(cfg);
  } else {
    auto words = generate_fixture_words(cfg.genus, cfg.seed, cfg.trials, cfg.max_word_len);
    rep = verify_word_problem_oracle(cfg, words);
  }

  if (o.json) {
    ordered_json j;
    j["statement"] = rep.statement;
    j["genus"] = rep.genus;
    j["euler"] = rep.euler;
    j["seed"] = rep.seed;
    j["trials"] = rep.trials;
    j["passed"] = rep.passed;
    j["failed"] = rep.failed;
    j["convention"] = rep.convention;
    j["notes"] = rep.notes;
    ordered_json cex = ordered_json::array();
    for (const auto& f : rep.failures) cex.push_back({{"trial", f.index}, {"detail", f.detail}});
    j["counterexamples"] = cex;
    j["result"] = rep.ok() ? "PASS" : "FAIL";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format_report(rep);
  }
  return rep.ok() ? 0 : 1;
}

int run_info(const info_opts& o) {
  bundle_context ctx(o.genus, o.euler);
  std::string relator = format_word(ctx.surface().relator());
  int divisor = 2 * o.genus - 2;
  bool splits = o.genus == 1 || (divisor != 0 && o.euler % divisor == 0);
  if (o.json) {
    ordered_json j;
    j["command"] = "info";
    j["genus"] = o.genus;
    j["euler"] = o.euler;
    j["relator"] = relator;
    j["center"] = "infinite cyclic, generated by z";
    j["mapping_class_extension_splits"] = splits;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "genus: " << o.genus << "\n";
  std::cout << "euler number: " << o.euler << "\n";
  std::cout << "relator: " << relator << "\n";
  std::cout << "bundle relation: relator = z^" << o.euler << "\n";
  std::cout << "center: infinite cyclic, generated by z\n";
  if (o.genus == 1) {
    std::cout << "genus 1: the mapping class extension splits for every euler number\n";
  } else if (splits) {
    std::cout << "2g-2 = " << divisor << " divides k = " << o.euler
              << ": the mapping class extension splits\n";
  } else {
    std::cout << "2g-2 = " << divisor << " does not divide k = " << o.euler
              << ": the mapping class extension does not split\n";
  }
  return 0;
}

int run_fixtures(const fixture_opts& o) {
  auto words = generate_fixture_words(o.genus, o.seed, o.count, o.max_word_len);
  std::ofstream out(o.out);
  if (!out) throw precondition_error("cannot write fixture file " + o.out);
  out << "# genus=" << o.genus << " seed=" << o.seed << " count=" << o.count
      << " max_len=" << o.max_word_len << "\n";
  for (const auto& w : words) out << format_word(w) << "\n";
  std::cout << "wrote " << words.size() << " words to " << o.out << "\n";
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"fundamental groups of circle bundles over closed surfaces"};
  app.require_subcommand(1);

  reduce_opts ro;
  auto* red = app.add_subcommand("reduce", "decide whether a word is trivial or central");
  red->add_option("-g,--genus", ro.genus, "surface genus")->capture_default_str();
  red->add_option("-k,--euler", ro.euler, "euler number")->capture_default_str();
  red->add_option("word", ro.word, "word over a_i, b_i, z with ~ or uppercase for inverses")
      ->required();
  red->add_flag("--json", ro.json, "machine readable output");

  verify_opts vo;
  auto* ver = app.add_subcommand("verify", "machine-check one of the structure statements");
  ver->add_option("statement", vo.statement,
                  "splitting | kernel-tau | prop-3-3 | cor-3-4 | theorem-A | k-linearity | "
                  "word-problem-oracle")
      ->required();
  ver->add_option("-g,--genus", vo.genus, "surface genus")->capture_default_str();
  ver->add_option("-k,--euler", vo.euler, "euler number")->capture_default_str();
  ver->add_option("--seed", vo.seed, "base seed for per-trial randomness")->capture_default_str();
  ver->add_option("--trials", vo.trials, "randomized trial count")->capture_default_str();
  ver->add_option("--max-word-len", vo.max_word_len, "length bound for sampled loops and words")
      ->capture_default_str();
  ver->add_option("--oracle-depth", vo.oracle_depth, "insertion budget for certificate search")
      ->capture_default_str();
  ver->add_flag("--json", vo.json, "machine readable report");

  info_opts io;
  auto* inf = app.add_subcommand("info", "print the presentation for a genus and euler number");
  inf->add_option("-g,--genus", io.genus, "surface genus")->capture_default_str();
  inf->add_option("-k,--euler", io.euler, "euler number")->capture_default_str();
  inf->add_flag("--json", io.json, "machine readable output");

  fixture_opts fo;
  auto* fix = app.add_subcommand("fixtures", "regenerate the frozen word corpus");
  fix->add_option("-g,--genus", fo.genus, "surface genus")->capture_default_str();
  fix->add_option("--seed", fo.seed, "corpus seed")->capture_default_str();
  fix->add_option("--count", fo.count, "number of words")->capture_default_str();
  fix->add_option("--max-word-len", fo.max_word_len, "length bound")->capture_default_str();
  fix->add_option("--out", fo.out, "output path")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (red->parsed()) return run_reduce(ro);
    if (ver->parsed()) return run_verify(vo);
    if (inf->parsed()) return run_info(io);
    if (fix->parsed()) return run_fixtures(fo);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const context_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace fibered
