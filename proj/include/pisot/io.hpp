#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"
#include "pisot/common.hpp"
#include "pisot/dfa.hpp"
#include "pisot/numeration.hpp"
#include "pisot/semiring.hpp"
#include "pisot/wfa.hpp"
#include "pisot/words.hpp"

namespace pisot {

/* ordered_json keeps fields in insertion order, so every emitter below
 * produces byte-identical output for equal inputs. */
using json = nlohmann::ordered_json;

/* File and parse helpers.  Anything malformed becomes a ContractViolation so
 * the CLI can map it to its contract-violation exit code. */
json load_json_file(const std::string& path);
json parse_json_text(const std::string& text);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string dump_json(const json& j);  // 2-space indent + trailing newline

/* {"name": .., "recurrence": [c_1..c_m], "initial": [U(0)..U(m-1)]} */
json numeration_to_json(const NumerationSystem& s);
NumerationSystem numeration_from_json(const json& j);
NumerationSystem load_numeration(const std::string& path);

/* Words serialize as arrays of letter arrays, most significant first. */
json word_to_json(const Word& w);
Word word_from_json(const json& j);
/* CLI argument forms: JSON array of letter arrays, JSON array of ints
 * (width-1 shorthand), or a plain digit string like "1121" (width 1,
 * digits 0-9 only; negative digits need the array form). */
Word parse_word_arg(const std::string& text);
std::string word_to_display(const Word& w);

/* {"states": n, "initial": q0, "finals": [..], "alphabet": [[..]],
 *  "transitions": [[from, letter_index, to]..]} (+ "tape_split" when set) */
json dfa_to_json(const MultiTapeDFA& a);
MultiTapeDFA dfa_from_json(const json& j);

std::string letter_key(const Letter& l);
Letter letter_from_key(const std::string& key);
/* "a" / "a/b" / "a1,a2/b1,b2" depending on width and split */
std::string format_letter(const Letter& l, int tape_split);

/* DOT with doubled circles on finals and pair letters shown "a/b".
 * split_override >= 0 replaces the automaton's own tape_split. */
std::string dfa_to_dot(const MultiTapeDFA& a, int split_override = -1);

/* ------------------------------------------------------------------ */

template <class K>
json weight_to_json(const typename K::Value& v) {
  if constexpr (std::is_same_v<typename K::Value, bool>)
    return json(v);
  else
    return json(K::to_string(v));
}

template <class K>
typename K::Value weight_from_json(const json& j) {
  if (j.is_boolean()) return K::from_int(j.get<bool>() ? 1 : 0);
  if (j.is_number_integer()) return K::from_int(j.get<long long>());
  if (j.is_string()) return K::parse(j.get<std::string>());
  throw ContractViolation("weight must be a string, an integer, or a boolean");
}

namespace detail {
std::vector<Letter> alphabet_from_json(const json& j);
json alphabet_to_json(const std::vector<Letter>& alphabet);
void check_semiring_field(const json& j, const char* expected);
}  // namespace detail

/* {"semiring": .., "dim": r, "alphabet": [[..]], "lambda": [..],
 *  "mu": {"letter,key": [[..]..]}, "gamma": [..]} */
template <class K>
json linrep_to_json(const LinearRepresentation<K>& rep) {
  rep.check_well_formed();
  json j;
  j["semiring"] = K::name();
  j["dim"] = rep.r;
  j["alphabet"] = detail::alphabet_to_json(rep.alphabet);
  json lambda = json::array();
  for (int i = 0; i < rep.r; ++i) lambda.push_back(weight_to_json<K>(rep.lambda.at(0, i)));
  j["lambda"] = std::move(lambda);
  json mu = json::object();
  for (std::size_t li = 0; li < rep.alphabet.size(); ++li) {
    json rows = json::array();
    for (int i = 0; i < rep.r; ++i) {
      json row = json::array();
      for (int c = 0; c < rep.r; ++c) row.push_back(weight_to_json<K>(rep.mu[li].at(i, c)));
      rows.push_back(std::move(row));
    }
    mu[letter_key(rep.alphabet[li])] = std::move(rows);
  }
  j["mu"] = std::move(mu);
  json gamma = json::array();
  for (int i = 0; i < rep.r; ++i) gamma.push_back(weight_to_json<K>(rep.gamma.at(i, 0)));
  j["gamma"] = std::move(gamma);
  return j;
}

template <class K>
LinearRepresentation<K> linrep_from_json(const json& j) {
  detail::check_semiring_field(j, K::name());
  require(j.contains("dim") && j["dim"].is_number_integer(), "representation needs integer 'dim'");
  LinearRepresentation<K> rep;
  rep.r = j["dim"].get<int>();
  require(rep.r >= 1, "representation dimension must be >= 1");
  require(j.contains("alphabet"), "representation needs 'alphabet'");
  rep.alphabet = detail::alphabet_from_json(j["alphabet"]);
  require(!rep.alphabet.empty(), "representation alphabet must be nonempty");
  rep.dim = int(rep.alphabet[0].size());

  require(j.contains("lambda") && j["lambda"].is_array() && int(j["lambda"].size()) == rep.r,
          "'lambda' must be an array of length dim");
  rep.lambda = Matrix<K>(1, rep.r);
  for (int i = 0; i < rep.r; ++i) rep.lambda.at(0, i) = weight_from_json<K>(j["lambda"][i]);

  require(j.contains("gamma") && j["gamma"].is_array() && int(j["gamma"].size()) == rep.r,
          "'gamma' must be an array of length dim");
  rep.gamma = Matrix<K>(rep.r, 1);
  for (int i = 0; i < rep.r; ++i) rep.gamma.at(i, 0) = weight_from_json<K>(j["gamma"][i]);

  require(j.contains("mu") && j["mu"].is_object(), "'mu' must be an object keyed by letters");
  require(j["mu"].size() == rep.alphabet.size(), "'mu' must have one matrix per alphabet letter");
  for (const auto& l : rep.alphabet) {
    const std::string key = letter_key(l);
    require(j["mu"].contains(key), "'mu' is missing letter " + key);
    const json& rows = j["mu"][key];
    require(rows.is_array() && int(rows.size()) == rep.r, "mu[" + key + "] must have dim rows");
    Matrix<K> m(rep.r, rep.r);
    for (int i = 0; i < rep.r; ++i) {
      require(rows[i].is_array() && int(rows[i].size()) == rep.r,
              "mu[" + key + "] must be square");
      for (int c = 0; c < rep.r; ++c) m.at(i, c) = weight_from_json<K>(rows[i][c]);
    }
    rep.mu.push_back(std::move(m));
  }
  rep.check_well_formed();
  return rep;
}

/* WFA: the DFA layout with I/T weight arrays and a weight per transition. */
template <class K>
json wfa_to_json(const WeightedAutomaton<K>& a) {
  a.check_well_formed();
  json j;
  j["semiring"] = K::name();
  j["states"] = a.num_states;
  j["alphabet"] = detail::alphabet_to_json(a.alphabet);
  json iw = json::array(), tw = json::array();
  for (int q = 0; q < a.num_states; ++q) {
    iw.push_back(weight_to_json<K>(a.initial[q]));
    tw.push_back(weight_to_json<K>(a.final_weights[q]));
  }
  j["I"] = std::move(iw);
  j["T"] = std::move(tw);
  json ts = json::array();
  for (const auto& e : a.edges) {
    json t = json::array();
    t.push_back(e.from);
    t.push_back(e.letter);
    t.push_back(e.to);
    t.push_back(weight_to_json<K>(e.weight));
    ts.push_back(std::move(t));
  }
  j["transitions"] = std::move(ts);
  return j;
}

template <class K>
WeightedAutomaton<K> wfa_from_json(const json& j) {
  detail::check_semiring_field(j, K::name());
  WeightedAutomaton<K> a;
  require(j.contains("states") && j["states"].is_number_integer(),
          "automaton needs integer 'states'");
  a.num_states = j["states"].get<int>();
  require(a.num_states >= 0, "'states' must be >= 0");
  require(j.contains("alphabet"), "automaton needs 'alphabet'");
  a.alphabet = detail::alphabet_from_json(j["alphabet"]);
  a.dim = a.alphabet.empty() ? 1 : int(a.alphabet[0].size());
  require(j.contains("I") && j["I"].is_array() && int(j["I"].size()) == a.num_states,
          "'I' must be an array with one weight per state");
  require(j.contains("T") && j["T"].is_array() && int(j["T"].size()) == a.num_states,
          "'T' must be an array with one weight per state");
  for (int q = 0; q < a.num_states; ++q) {
    a.initial.push_back(weight_from_json<K>(j["I"][q]));
    a.final_weights.push_back(weight_from_json<K>(j["T"][q]));
  }
  require(j.contains("transitions") && j["transitions"].is_array(),
          "automaton needs 'transitions'");
  for (const json& t : j["transitions"]) {
    require(t.is_array() && t.size() == 4, "weighted transitions are [from, letter, to, weight]");
    typename WeightedAutomaton<K>::Edge e;
    e.from = t[0].get<int>();
    e.letter = t[1].get<int>();
    e.to = t[2].get<int>();
    e.weight = weight_from_json<K>(t[3]);
    a.edges.push_back(std::move(e));
  }
  a.check_well_formed();
  return a;
}

/* DOT with "a|k" edge labels and the initial/final weights drawn on dangling
 * arrows, one auxiliary point node per nonzero entry. */
template <class K>
std::string wfa_to_dot(const WeightedAutomaton<K>& a) {
  std::string out = "digraph wfa {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (int q = 0; q < a.num_states; ++q)
    out += "  q" + std::to_string(q) + " [label=\"" + std::to_string(q) + "\"];\n";
  for (int q = 0; q < a.num_states; ++q) {
    if (!K::eq(a.initial[q], K::zero())) {
      out += "  __i" + std::to_string(q) + " [shape=none, label=\"\"];\n";
      out += "  __i" + std::to_string(q) + " -> q" + std::to_string(q) + " [label=\"" +
             K::to_string(a.initial[q]) + "\"];\n";
    }
    if (!K::eq(a.final_weights[q], K::zero())) {
      out += "  __f" + std::to_string(q) + " [shape=none, label=\"\"];\n";
      out += "  q" + std::to_string(q) + " -> __f" + std::to_string(q) + " [label=\"" +
             K::to_string(a.final_weights[q]) + "\"];\n";
    }
  }
  for (const auto& e : a.edges)
    out += "  q" + std::to_string(e.from) + " -> q" + std::to_string(e.to) + " [label=\"" +
           format_letter(a.alphabet[e.letter], 0) + "|" + K::to_string(e.weight) + "\"];\n";
  out += "}\n";
  return out;
}

/* Runtime semiring dispatch: f receives a tag whose ::Semiring is the
 * selected instance.  All branches must yield the same type. */
template <class K>
struct SemiringTag {
  using Semiring = K;
};

template <class F>
auto with_semiring(const std::string& name, F&& f) {
  if (name == "nat") return f(SemiringTag<NatSemiring>{});
  if (name == "int") return f(SemiringTag<IntSemiring>{});
  if (name == "rat") return f(SemiringTag<RatSemiring>{});
  if (name == "bool") return f(SemiringTag<BoolSemiring>{});
  if (name == "tropical") return f(SemiringTag<TropicalSemiring>{});
  throw ContractViolation("unknown semiring '" + name +
                          "' (expected nat, int, rat, bool, or tropical)");
}

}  // namespace pisot
