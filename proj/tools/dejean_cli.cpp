#include <algorithm>
#include <cctype>
#include <iostream>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dejean/carpi.hpp"
#include "dejean/kernel.hpp"
#include "dejean/pansiot.hpp"
#include "dejean/rational.hpp"
#include "dejean/verify.hpp"
#include "dejean/word.hpp"

namespace {

// "-" reads the word from standard input, ignoring whitespace.
std::string read_word_arg(const std::string& arg) {
  if (arg != "-") return arg;
  const std::string raw((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  std::string out;
  out.reserve(raw.size());
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Exponents only depend on the equality pattern, so any characters are
// accepted and relabeled 1, 2, ... by first occurrence.
dejean::Word parse_pattern(const std::string& text, int alphabet) {
  std::vector<int> letters;
  letters.reserve(text.size());
  std::map<char, int> code;
  for (char c : text) {
    const auto [it, fresh] = code.try_emplace(c, static_cast<int>(code.size()) + 1);
    letters.push_back(it->second);
  }
  int sigma = static_cast<int>(code.size());
  if (alphabet > 0) {
    if (alphabet < sigma)
      throw std::invalid_argument("alphabet " + std::to_string(alphabet) + " smaller than the " +
                                  std::to_string(sigma) + " distinct letters in the word");
    sigma = alphabet;
  }
  return dejean::Word(std::move(letters), std::max(sigma, 1));
}

std::string witness_line(const dejean::RepetitionWitness& w) {
  return w.exponent.str() + " (start=" + std::to_string(w.start) + " len=" + std::to_string(w.length) +
         " period=" + std::to_string(w.period) + ")";
}

// y alternates and ends in 1: even length prints as (01)^k, odd as 1(01)^k.
std::string compressed_y(const dejean::BinaryWord& y) {
  const std::string power = "(01)^" + std::to_string(y.size() / 2);
  return y.size() % 2 == 0 ? power : "1" + power;
}

void print_report_text(const dejean::VerificationReport& report) {
  std::cout << "n=" << report.n << " m=" << report.m << " p=" << report.p
            << " uniform_length=" << report.uniform_length << "\n";
  for (const auto& stats : report.per_r)
    std::cout << "r=" << stats.r << " factor_length=" << stats.factor_length
              << " words_examined=" << stats.words_examined
              << " factors_checked=" << stats.factors_checked << "\n";
  for (const auto& v : report.violations)
    std::cout << "violation triple=" << v.triple.str() << " start=" << v.start << " length=" << v.length
              << " max_stabilized=" << v.max_stabilized << "\n";
  std::cout << "status=" << (report.pass() ? "PASS" : "FAIL") << "\n";
}

struct VerifyArgs {
  int n = 0;
  bool all = false;
  int jobs = 1;
  bool json = false;
  bool legacy = false;
  bool override_range = false;
};

int run_verify(const VerifyArgs& args) {
  const int lo = args.all ? 27 : args.n;
  const int hi = args.all ? 29 : args.n;
  dejean::VerifyOptions options;
  options.jobs = args.jobs;
  options.override_range = args.override_range;

  const std::vector<dejean::VerificationReport> reports = dejean::verify_range(lo, hi, options);
  bool ok = true;
  for (const auto& report : reports) {
    ok = ok && report.pass();
    std::cerr << "n=" << report.n << " elapsed " << report.elapsed_seconds << "s\n";
    if (report.per_r.empty())
      std::cerr << "dejean: " << dejean::admissible_search_space(report.n, args.override_range).note << "\n";
  }

  if (args.json) {
    if (args.all)
      std::cout << dejean::to_json_string(reports, /*zero_elapsed=*/true) << "\n";
    else
      std::cout << dejean::to_json_string(reports.front(), /*zero_elapsed=*/true) << "\n";
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) std::cout << "\n";
      print_report_text(reports[i]);
    }
  }

  if (args.legacy) {
    for (const auto& report : reports) {
      const dejean::Word triple = dejean::Word::parse("111", report.m);
      const auto found = dejean::legacy_exhaustive_probe(report.n, triple, args.override_range);
      std::cerr << "legacy-exhaustive n=" << report.n << " triple=" << triple.str() << " ";
      if (found) {
        std::cerr << "(" << found->start << "," << found->length << ",k=" << found->k << ")\n";
        ok = false;
      } else {
        std::cerr << "none\n";
      }
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabilizing-factor verification for Dejean's conjecture (n = 27, 28, 29)"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check that no admissible factor of an f-image triple is k-stabilizing");
  auto* verify_n = verify_cmd->add_option("--n", verify_args.n, "Alphabet size, 27..29");
  verify_cmd->add_flag("--all", verify_args.all, "Run n = 27, 28 and 29");
  verify_cmd->add_option("--jobs", verify_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify_args.json, "JSON report on standard output");
  verify_cmd->add_flag("--legacy-exhaustive", verify_args.legacy,
                       "Also scan one triple over every factor length below (n-1)^2");
  verify_cmd->add_flag("--override-range", verify_args.override_range, "Accept n outside 27..29");

  std::string exp_word;
  int exp_alphabet = 0;
  std::string exp_threshold;
  bool exp_expect_none = false;
  auto* exp_cmd = app.add_subcommand("exponent", "Largest factor exponent of a word, with a witness");
  exp_cmd->add_option("word", exp_word, "Word over any characters; '-' reads standard input")->required();
  exp_cmd->add_option("--alphabet", exp_alphabet, "Declared alphabet size")->check(CLI::PositiveNumber);
  auto* exp_threshold_opt =
      exp_cmd->add_option("--threshold", exp_threshold, "Report the first factor of exponent above a/b");
  exp_cmd->add_flag("--expect-none", exp_expect_none, "Exit 1 when a factor above the threshold exists")
      ->needs(exp_threshold_opt);

  int gamma_n = 0;
  std::string gamma_bits;
  auto* gamma_cmd = app.add_subcommand("gamma", "Pansiot coding of a binary word over n letters");
  gamma_cmd->add_option("--n", gamma_n, "Alphabet size, at least 2")->required();
  gamma_cmd->add_option("bits", gamma_bits, "Binary word; '-' reads standard input")->required();

  int fimage_n = 0;
  int fimage_letter = 0;
  std::string fimage_word;
  auto* fimage_cmd = app.add_subcommand("f-image", "Image of a letter or word under the morphism f");
  fimage_cmd->add_option("--n", fimage_n, "Alphabet size, at least 9")->required();
  auto* fimage_src = fimage_cmd->add_option_group("source");
  auto* fimage_letter_opt = fimage_src->add_option("--letter", fimage_letter, "Letter in 1..m");
  fimage_src->add_option("--word", fimage_word, "Word over 1..m; '-' reads standard input");
  fimage_src->require_option(1);

  int scan_n = 0;
  int scan_m = 0;
  std::string scan_word;
  bool scan_json = false;
  auto* scan_cmd = app.add_subcommand("kernel-scan", "List psi-kernel repetitions in a word");
  scan_cmd->add_option("--n", scan_n, "Order of the repetition inequality")->required();
  scan_cmd->add_option("--m", scan_m, "Alphabet size")->required();
  scan_cmd->add_option("word", scan_word, "Word over 1..m; '-' reads standard input")->required();
  scan_cmd->add_flag("--json", scan_json, "JSON witness list");

  int gen_n = 0;
  int gen_m = 0;
  std::int64_t gen_length = 0;
  std::uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("kernel-generate", "Search for a word avoiding psi-kernel repetitions");
  gen_cmd->add_option("--n", gen_n, "Order of the repetition inequality")->required();
  gen_cmd->add_option("--m", gen_m, "Alphabet size")->required();
  gen_cmd->add_option("--length", gen_length, "Target length")->required();
  gen_cmd->add_option("--seed", gen_seed, "Rotation of the letter order");

  int params_n = 0;
  auto* params_cmd = app.add_subcommand("params", "Morphism parameters m, p, image length, y and x");
  params_cmd->add_option("--n", params_n, "Alphabet size, at least 9")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify_cmd->parsed()) {
      if (verify_args.all == (verify_n->count() > 0)) {
        std::cerr << "dejean: verify needs exactly one of --n and --all\n";
        return 2;
      }
      return run_verify(verify_args);
    }

    if (exp_cmd->parsed()) {
      const dejean::Word w = parse_pattern(read_word_arg(exp_word), exp_alphabet);
      if (w.empty()) {
        std::cerr << "dejean: empty word\n";
        return 2;
      }
      if (exp_threshold_opt->count() > 0) {
        const auto witness = dejean::has_factor_exceeding(w, dejean::Rational::parse(exp_threshold));
        if (!witness) {
          std::cout << "none\n";
          return 0;
        }
        std::cout << witness_line(*witness) << "\n";
        return exp_expect_none ? 1 : 0;
      }
      const auto [exponent, witness] = dejean::max_exponent_factor(w);
      std::cout << witness_line(witness) << "\n";
      return 0;
    }

    if (gamma_cmd->parsed()) {
      const dejean::BinaryWord v = dejean::BinaryWord::parse(read_word_arg(gamma_bits));
      std::cout << dejean::gamma(v, gamma_n).str() << "\n";
      return 0;
    }

    if (fimage_cmd->parsed()) {
      const dejean::MorphismTable table(dejean::carpi_params(fimage_n));
      if (fimage_letter_opt->count() > 0)
        std::cout << table.image(fimage_letter).str() << "\n";
      else
        std::cout << table.apply(dejean::Word::parse(read_word_arg(fimage_word), table.params().m)).str()
                  << "\n";
      return 0;
    }

    if (scan_cmd->parsed()) {
      const dejean::Word w = dejean::Word::parse(read_word_arg(scan_word), scan_m);
      const auto witnesses = dejean::scan_kernel_repetitions(w, scan_n, scan_m);
      if (scan_json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& witness : witnesses)
          j.push_back({{"start", witness.start}, {"length", witness.length}, {"q", witness.q}, {"n", witness.n}});
        std::cout << j.dump(2) << "\n";
      } else if (witnesses.empty()) {
        std::cout << "none\n";
      } else {
        for (const auto& witness : witnesses)
          std::cout << "(" << witness.start << "," << witness.length << ",q=" << witness.q << ")\n";
      }
      return 0;
    }

    if (gen_cmd->parsed()) {
      const auto word = dejean::generate_kernel_avoiding(gen_m, gen_n, gen_length, gen_seed);
      if (!word) {
        std::cout << "EXHAUSTED\n";
        return 1;
      }
      std::cout << word->str() << "\n";
      return 0;
    }

    if (params_cmd->parsed()) {
      const dejean::CarpiParams params = dejean::carpi_params(params_n);
      std::cout << "m=" << params.m << " p=" << params.p << " r=" << params.uniform_length
                << " y=" << compressed_y(params.y) << " x=" << params.x.str() << "\n";
      return 0;
    }
    std::cerr << "dejean: no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "dejean: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "dejean: " << e.what() << "\n";
    return 2;
  }
}
