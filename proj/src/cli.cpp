#include "pisot/cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "pisot/normalizer.hpp"
#include "pisot/verify.hpp"

namespace pisot {
namespace {

struct Common {
  std::vector<std::string> system_files;
  std::string semiring = "nat";
  long long seed = 0;
  std::string output;
  std::string format = "json";
};

SystemTuple load_systems(const Common& c) {
  require(!c.system_files.empty(), "pass at least one --system FILE");
  SystemTuple systems;
  for (const auto& f : c.system_files) systems.push_back(load_numeration(f));
  return systems;
}

void emit(const Common& c, std::ostream& out, std::string text) {
  if (text.empty() || text.back() != '\n') text += '\n';
  if (c.output.empty())
    out << text;
  else
    write_text_file(c.output, text);
}

BigInt parse_integer_arg(const std::string& text) {
  try {
    return BigInt(text);
  } catch (const std::exception&) {
    throw ContractViolation("'" + text + "' is not an integer");
  }
}

std::vector<int> parse_digit_set(const std::string& text) {
  std::vector<int> digits;
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    long long lo = 0, hi = 0;
    try {
      lo = std::stoll(text.substr(0, dots));
      hi = std::stoll(text.substr(dots + 2));
    } catch (const std::exception&) {
      throw ContractViolation("digit range must look like lo..hi");
    }
    require(lo <= hi && hi - lo < 1000, "digit range must be nonempty and modest");
    for (long long v = lo; v <= hi; ++v) digits.push_back(int(v));
  } else {
    json j = parse_json_text(text);
    require(j.is_array() && !j.empty(), "digit set must be lo..hi or a JSON array");
    for (const json& v : j) {
      require(v.is_number_integer(), "digit set entries must be integers");
      digits.push_back(v.get<int>());
    }
  }
  std::sort(digits.begin(), digits.end());
  digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
  return digits;
}

std::vector<Letter> parse_alphabet_arg(const std::string& text, int dim) {
  if (text.find("..") != std::string::npos) {
    require(dim == 1, "the lo..hi shorthand only works for one system");
    std::vector<Letter> out;
    for (int d : parse_digit_set(text)) out.push_back({d});
    return out;
  }
  json j = parse_json_text(text);
  require(j.is_array() && !j.empty(), "alphabet must be a nonempty JSON array");
  std::vector<Letter> letters;
  if (j[0].is_number_integer()) {
    require(dim == 1, "flat digit lists only work for one system");
    for (const json& v : j) letters.push_back({v.get<int>()});
  } else {
    for (const json& l : j) {
      require(l.is_array() && int(l.size()) == dim,
              "alphabet letters must be arrays of one digit per system");
      Letter letter;
      for (const json& v : l) {
        require(v.is_number_integer(), "alphabet digits must be integers");
        letter.push_back(v.get<int>());
      }
      letters.push_back(std::move(letter));
    }
  }
  letters = sorted_alphabet(letters);
  for (std::size_t i = 1; i < letters.size(); ++i)
    require(letters[i] != letters[i - 1], "alphabet letters must be distinct");
  return letters;
}

std::vector<Letter> canonical_cartesian(const SystemTuple& systems) {
  std::vector<Letter> out = {{}};
  for (const auto& ns : systems) {
    std::vector<Letter> next;
    for (const auto& prefix : out)
      for (int d = 0; d <= ns.digit_bound(); ++d) {
        Letter l = prefix;
        l.push_back(d);
        next.push_back(std::move(l));
      }
    out = std::move(next);
  }
  return sorted_alphabet(out);
}

std::string semiring_field(const json& j) {
  require(j.is_object() && j.contains("semiring") && j["semiring"].is_string(),
          "file needs a string 'semiring' field");
  return j["semiring"].get<std::string>();
}

json report_to_json(const ConversionReport& r) {
  json j;
  j["g_dim"] = r.g_dim;
  j["normalizer_states"] = r.normalizer_states;
  j["dim_untrimmed"] = r.dim_untrimmed;
  j["dim_trimmed"] = r.dim_trimmed;
  j["zero_adjoined"] = r.zero_adjoined;
  j["trimmed"] = r.trimmed;
  j["paddings_unique"] = r.paddings_unique;
  json table = json::object();
  for (const auto& [letter, per_state] : r.padding_table) table[letter_key(letter)] = per_state;
  j["padding_table"] = std::move(table);
  return j;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pisot numeration systems, normalizer automata, and weighted-series conversion"};
  app.name("pisot");
  app.require_subcommand(1);

  Common c;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--system", c.system_files, "numeration system JSON file (repeat for tuples)")
        ->allow_extra_args(false);  // one file per occurrence, keep positionals free
    s->add_option("--semiring", c.semiring, "weight semiring: nat, int, rat, bool, tropical");
    s->add_option("--seed", c.seed, "seed for sampled checks");
    s->add_option("--output", c.output, "write to this file instead of stdout");
    s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "dot"}));
  };

  std::vector<std::string> rep_numbers;
  CLI::App* cmd_rep = app.add_subcommand("rep", "greedy representation of nonnegative integers");
  add_common(cmd_rep);
  cmd_rep->add_option("n", rep_numbers, "one integer per --system")->required();

  std::string val_word;
  CLI::App* cmd_val = app.add_subcommand("val", "numeric value of a digit word");
  add_common(cmd_val);
  cmd_val->add_option("--word", val_word, "digit word (JSON letters or digit string)")->required();

  std::string norm_word;
  CLI::App* cmd_normalize = app.add_subcommand("normalize", "zero-stripped normal form of a word");
  add_common(cmd_normalize);
  cmd_normalize->add_option("--word", norm_word, "digit word (JSON letters or digit string)")
      ->required();

  std::string bn_kind, bn_alphabet;
  int bn_check = -1, bn_samples = 2000;
  bool bn_assume = false;
  CLI::App* cmd_build = app.add_subcommand("build-normalizer", "normalizer pair automaton");
  add_common(cmd_build);
  cmd_build->add_option("--kind", bn_kind, "base, extended, or multidim (default: base for one "
                                           "system, multidim for tuples)")
      ->check(CLI::IsMember({"base", "extended", "multidim"}));
  cmd_build->add_option("--alphabet", bn_alphabet, "input digits: lo..hi or JSON list");
  cmd_build->add_option("--check-oracle", bn_check,
                        "compare against the arithmetic oracle up to this word length");
  cmd_build->add_option("--samples", bn_samples, "samples per length when too big to exhaust");
  cmd_build->add_flag("--assume-pisot", bn_assume, "skip the dominant-root test");

  CLI::App* cmd_greedy = app.add_subcommand("greedy-language", "automaton of 0*rep(N)");
  add_common(cmd_greedy);

  std::string cv_input, cv_alphabet;
  int cv_verify = -1;
  bool cv_no_trim = false, cv_report = false, cv_reverse = false, cv_assume = false;
  CLI::App* cmd_convert =
      app.add_subcommand("convert", "greedy-indexed series to value-indexed series");
  add_common(cmd_convert);
  cmd_convert->add_option("--input", cv_input,
                          "linear representation JSON (default: embedded demo series)");
  cmd_convert->add_option("--alphabet", cv_alphabet, "target alphabet (default: canonical digits)");
  cmd_convert->add_flag("--no-trim", cv_no_trim, "keep unreachable/dead states");
  CLI::Option* cv_verify_opt = cmd_convert->add_option(
      "--verify", cv_verify, "check the result against the value oracle up to this length");
  cmd_convert->add_flag("--report", cv_report, "wrap the output with a construction report");
  CLI::Option* cv_reverse_opt = cmd_convert->add_flag(
      "--reverse", cv_reverse, "value-indexed back to greedy-indexed (restriction to 0*rep(N))");
  cv_verify_opt->excludes(cv_reverse_opt);

  std::string ev_input, ev_word;
  CLI::App* cmd_eval = app.add_subcommand("eval", "coefficient of a word in a representation");
  add_common(cmd_eval);
  cmd_eval->add_option("--input", ev_input,
                       "linear representation JSON (default: embedded demo series)");
  cmd_eval->add_option("--word", ev_word, "digit word (JSON letters or digit string)")->required();

  int vf_max_len = 7, vf_samples = 2000;
  std::string vf_series;
  CLI::App* cmd_verify = app.add_subcommand("verify", "run the whole invariant suite");
  add_common(cmd_verify);
  cmd_verify->add_option("--max-len", vf_max_len, "word length bound for the swept checks")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--samples", vf_samples, "samples per length for sampled checks");
  cmd_verify->add_option("--series", vf_series,
                         "replace the embedded input series (nat semiring) with this file");

  std::string xd_input;
  int xd_split = -1;
  CLI::App* cmd_export = app.add_subcommand("export-dot", "graphviz view of a JSON automaton");
  add_common(cmd_export);
  cmd_export->add_option("--input", xd_input, "automaton / weighted automaton / representation")
      ->required();
  cmd_export->add_option("--split", xd_split, "show letters as u/v split at this track");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_rep->parsed()) {
      SystemTuple systems = load_systems(c);
      require(rep_numbers.size() == systems.size(),
              "expected one integer per --system, got " + std::to_string(rep_numbers.size()));
      std::vector<BigInt> values;
      for (const auto& t : rep_numbers) values.push_back(parse_integer_arg(t));
      emit(c, out, word_to_display(rep_vec(systems, values)));
      return 0;
    }

    if (cmd_val->parsed()) {
      SystemTuple systems = load_systems(c);
      Word w = parse_word_arg(val_word);
      require(w.dim == int(systems.size()), "word width differs from the number of systems");
      std::vector<BigInt> values = val_vec(systems, w);
      if (values.size() == 1) {
        emit(c, out, values[0].str());
      } else {
        std::string line = "[";
        for (std::size_t i = 0; i < values.size(); ++i)
          line += (i ? ", " : "") + values[i].str();
        emit(c, out, line + "]");
      }
      return 0;
    }

    if (cmd_normalize->parsed()) {
      SystemTuple systems = load_systems(c);
      Word w = parse_word_arg(norm_word);
      require(w.dim == int(systems.size()), "word width differs from the number of systems");
      emit(c, out, word_to_display(normalize_word(systems, w)));
      return 0;
    }

    if (cmd_build->parsed()) {
      SystemTuple systems = load_systems(c);
      const int d = int(systems.size());
      std::string kind = bn_kind.empty() ? (d > 1 ? "multidim" : "base") : bn_kind;
      MultiTapeDFA n;
      std::vector<Letter> first_blocks;
      bool signed_second = false;
      if (kind == "multidim") {
        first_blocks = bn_alphabet.empty() ? canonical_cartesian(systems)
                                           : parse_alphabet_arg(bn_alphabet, d);
        n = build_multidim_normalizer(systems, first_blocks, bn_assume);
        signed_second = true;
      } else {
        require(d == 1, kind + " normalizers take exactly one --system");
        int b = systems[0].digit_bound();
        std::vector<int> digits;
        if (!bn_alphabet.empty()) {
          digits = parse_digit_set(bn_alphabet);
        } else {
          for (int x = kind == "extended" ? -b : 0; x <= b; ++x) digits.push_back(x);
        }
        n = kind == "extended" ? build_extended_normalizer(systems[0], digits, bn_assume)
                               : build_base_normalizer(systems[0], digits, bn_assume);
        signed_second = kind == "extended";
        for (int x : digits) first_blocks.push_back({x});
      }
      if (bn_check >= 0) {
        long double seconds = 1;
        for (const auto& ns : systems)
          seconds *= signed_second ? 2 * ns.digit_bound() + 1 : ns.digit_bound() + 1;
        long double cost = 1;
        for (int i = 0; i < bn_check && cost < 1e18; ++i) cost *= seconds * first_blocks.size();
        std::optional<std::string> bad =
            cost <= 5e7 ? oracle::check_normalizer_exhaustive(n, systems, bn_check, first_blocks,
                                                              signed_second)
                        : oracle::check_normalizer_sampled(
                              n, systems, bn_check, first_blocks, signed_second,
                              std::max(1, bn_samples / std::max(1, bn_check)),
                              (unsigned long long)c.seed);
        if (bad) {
          err << "oracle mismatch: " << *bad << "\n";
          return 3;
        }
      }
      emit(c, out, c.format == "dot" ? dfa_to_dot(n) : dump_json(dfa_to_json(n)));
      return 0;
    }

    if (cmd_greedy->parsed()) {
      SystemTuple systems = load_systems(c);
      require(systems.size() == 1, "greedy-language takes exactly one --system");
      MultiTapeDFA lang = greedy_language_dfa(systems[0]);
      emit(c, out, c.format == "dot" ? dfa_to_dot(lang) : dump_json(dfa_to_json(lang)));
      return 0;
    }

    if (cmd_convert->parsed()) {
      SystemTuple systems = load_systems(c);
      const int d = int(systems.size());
      json input_json;
      if (!cv_input.empty()) input_json = load_json_file(cv_input);
      std::string sem = cmd_convert->count("--semiring") || cv_input.empty()
                            ? c.semiring
                            : semiring_field(input_json);
      std::vector<Letter> alpha = cv_alphabet.empty() ? canonical_cartesian(systems)
                                                      : parse_alphabet_arg(cv_alphabet, d);
      return with_semiring(sem, [&](auto tag) -> int {
        using K = typename decltype(tag)::Semiring;
        LinearRepresentation<K> g;
        if (!cv_input.empty()) {
          g = linrep_from_json<K>(input_json);
        } else {
          require(d == 1, "the embedded demo series is one-dimensional; pass --input");
          g = fixture_series_phi2<K>();
        }
        if (cv_reverse) {
          LinearRepresentation<K> back = value_to_greedy_linrep(g, systems);
          emit(c, out, c.format == "dot" ? wfa_to_dot(linrep_to_wfa(back))
                                         : dump_json(linrep_to_json(back)));
          return 0;
        }
        auto [v, report] = greedy_to_value_linrep(g, systems, alpha, !cv_no_trim, cv_assume);
        if (cv_verify >= 0) {
          auto bad = oracle::first_against_reference(
              v, [&](const Word& w) { return oracle::value_oracle(g, systems, w); }, cv_verify);
          if (bad) {
            err << "verification failed: " << *bad << "\n";
            return 3;
          }
        }
        if (c.format == "dot") {
          emit(c, out, wfa_to_dot(linrep_to_wfa(v)));
        } else {
          json j = linrep_to_json(v);
          if (cv_report) {
            json wrap;
            wrap["representation"] = std::move(j);
            wrap["report"] = report_to_json(report);
            j = std::move(wrap);
          }
          emit(c, out, dump_json(j));
        }
        return 0;
      });
    }

    if (cmd_eval->parsed()) {
      Word w = parse_word_arg(ev_word);
      json input_json;
      if (!ev_input.empty()) input_json = load_json_file(ev_input);
      std::string sem = cmd_eval->count("--semiring") || ev_input.empty()
                            ? c.semiring
                            : semiring_field(input_json);
      return with_semiring(sem, [&](auto tag) -> int {
        using K = typename decltype(tag)::Semiring;
        LinearRepresentation<K> r =
            ev_input.empty() ? fixture_series_phi2<K>() : linrep_from_json<K>(input_json);
        require(w.dim == r.dim, "word width differs from the representation");
        emit(c, out, K::to_string(linrep_eval(r, w)));
        return 0;
      });
    }

    if (cmd_verify->parsed()) {
      VerificationConfig cfg;
      cfg.max_word_length = vf_max_len;
      cfg.sample_count = vf_samples;
      cfg.seed = (unsigned long long)c.seed;
      std::optional<LinearRepresentation<NatSemiring>> series;
      if (!vf_series.empty())
        series = linrep_from_json<NatSemiring>(load_json_file(vf_series));
      std::vector<CheckResult> results = run_verification(cfg, series ? &*series : nullptr);
      for (const auto& r : results) {
        err << (r.pass ? "pass  " : "FAIL  ") << r.name;
        if (!r.detail.empty()) err << " — " << r.detail;
        err << "\n";
      }
      emit(c, out, dump_json(verification_to_json(cfg, results)));
      return all_passed(results) ? 0 : 3;
    }

    if (cmd_export->parsed()) {
      json j = load_json_file(xd_input);
      std::string dot;
      if (j.is_object() && j.contains("lambda")) {
        dot = with_semiring(semiring_field(j), [&](auto tag) {
          using K = typename decltype(tag)::Semiring;
          return wfa_to_dot(linrep_to_wfa(linrep_from_json<K>(j)));
        });
      } else if (j.is_object() && j.contains("I")) {
        dot = with_semiring(semiring_field(j), [&](auto tag) {
          using K = typename decltype(tag)::Semiring;
          return wfa_to_dot(wfa_from_json<K>(j));
        });
      } else {
        dot = dfa_to_dot(dfa_from_json(j), xd_split);
      }
      emit(c, out, dot);
      return 0;
    }
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace pisot
