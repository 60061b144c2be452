#include "pisot/io.hpp"

#include <fstream>
#include <sstream>

namespace pisot {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractViolation("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ContractViolation("malformed JSON");
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractViolation("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ContractViolation("cannot write file: " + path);
  out << text;
  if (!out) throw ContractViolation("write failed: " + path);
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

/* ------------------------------------------------------------------ */

json numeration_to_json(const NumerationSystem& s) {
  json j;
  j["name"] = s.name();
  j["recurrence"] = s.recurrence();
  json init = json::array();
  for (int i = 0; i < s.order(); ++i) init.push_back(s.term(i).convert_to<long long>());
  j["initial"] = std::move(init);
  return j;
}

NumerationSystem numeration_from_json(const json& j) {
  require(j.is_object(), "numeration system file must hold a JSON object");
  require(j.contains("recurrence") && j["recurrence"].is_array(),
          "numeration system needs a 'recurrence' array");
  require(j.contains("initial") && j["initial"].is_array(),
          "numeration system needs an 'initial' array");
  std::string name = j.value("name", std::string("unnamed"));
  std::vector<long long> rec, init;
  for (const json& c : j["recurrence"]) {
    require(c.is_number_integer(), "recurrence coefficients must be integers");
    rec.push_back(c.get<long long>());
  }
  for (const json& c : j["initial"]) {
    require(c.is_number_integer(), "initial terms must be integers");
    init.push_back(c.get<long long>());
  }
  return NumerationSystem(name, rec, init);
}

NumerationSystem load_numeration(const std::string& path) {
  return numeration_from_json(load_json_file(path));
}

/* ------------------------------------------------------------------ */

json word_to_json(const Word& w) {
  json arr = json::array();
  for (const auto& l : w.letters) arr.push_back(l);
  return arr;
}

Word word_from_json(const json& j) {
  require(j.is_array(), "a word is a JSON array of letters");
  std::vector<Letter> letters;
  bool flat = !j.empty() && j[0].is_number_integer();
  for (const json& item : j) {
    if (flat) {
      require(item.is_number_integer(), "mixed letter forms in word");
      letters.push_back({item.get<int>()});
    } else {
      require(item.is_array() && !item.empty(), "letters are nonempty integer arrays");
      Letter l;
      for (const json& c : item) {
        require(c.is_number_integer(), "letter entries must be integers");
        l.push_back(c.get<int>());
      }
      letters.push_back(std::move(l));
    }
  }
  int dim = letters.empty() ? 1 : int(letters[0].size());
  return Word(dim, std::move(letters));
}

Word parse_word_arg(const std::string& text) {
  if (!text.empty() && (text[0] == '[' || text[0] == ']')) return word_from_json(parse_json_text(text));
  for (char c : text)
    require(c >= '0' && c <= '9',
            "word shorthand allows digits 0-9 only; use the JSON array form otherwise");
  return word_from_digits(text);
}

std::string word_to_display(const Word& w) {
  bool stringy = w.dim == 1;
  for (const auto& l : w.letters) stringy = stringy && l[0] >= 0 && l[0] <= 9;
  if (stringy && !w.letters.empty()) {
    std::string s;
    for (const auto& l : w.letters) s += char('0' + l[0]);
    return s;
  }
  return word_to_json(w).dump();
}

/* ------------------------------------------------------------------ */

namespace detail {

std::vector<Letter> alphabet_from_json(const json& j) {
  require(j.is_array(), "'alphabet' must be an array of letters");
  std::vector<Letter> letters;
  std::size_t width = 0;
  for (const json& item : j) {
    require(item.is_array() && !item.empty(), "alphabet letters are nonempty integer arrays");
    Letter l;
    for (const json& c : item) {
      require(c.is_number_integer(), "letter entries must be integers");
      l.push_back(c.get<int>());
    }
    if (width == 0) width = l.size();
    require(l.size() == width, "alphabet letters must share one width");
    letters.push_back(std::move(l));
  }
  return letters;
}

json alphabet_to_json(const std::vector<Letter>& alphabet) {
  json arr = json::array();
  for (const auto& l : alphabet) arr.push_back(l);
  return arr;
}

void check_semiring_field(const json& j, const char* expected) {
  require(j.is_object(), "expected a JSON object");
  if (j.contains("semiring")) {
    require(j["semiring"].is_string(), "'semiring' must be a string");
    require(j["semiring"].get<std::string>() == expected,
            "file is over semiring '" + j["semiring"].get<std::string>() + "', expected '" +
                expected + "'");
  }
}

}  // namespace detail

/* ------------------------------------------------------------------ */

json dfa_to_json(const MultiTapeDFA& a) {
  a.check_well_formed();
  json j;
  j["states"] = a.num_states();
  j["initial"] = a.initial;
  json finals = json::array();
  for (int q = 0; q < a.num_states(); ++q)
    if (a.is_final[q]) finals.push_back(q);
  j["finals"] = std::move(finals);
  j["alphabet"] = detail::alphabet_to_json(a.alphabet);
  json ts = json::array();
  for (int q = 0; q < a.num_states(); ++q)
    for (int li = 0; li < a.num_letters(); ++li)
      if (a.next[q][li] >= 0) ts.push_back(json::array({q, li, a.next[q][li]}));
  j["transitions"] = std::move(ts);
  if (a.tape_split != 0) j["tape_split"] = a.tape_split;
  return j;
}

MultiTapeDFA dfa_from_json(const json& j) {
  require(j.is_object(), "automaton file must hold a JSON object");
  MultiTapeDFA a;
  require(j.contains("states") && j["states"].is_number_integer(),
          "automaton needs integer 'states'");
  int n = j["states"].get<int>();
  require(n >= 1, "automaton needs at least one state");
  require(j.contains("alphabet"), "automaton needs 'alphabet'");
  a.alphabet = detail::alphabet_from_json(j["alphabet"]);
  a.dim = a.alphabet.empty() ? 1 : int(a.alphabet[0].size());
  a.tape_split = j.value("tape_split", 0);
  require(j.contains("initial") && j["initial"].is_number_integer(),
          "automaton needs integer 'initial'");
  a.initial = j["initial"].get<int>();
  a.is_final.assign(n, 0);
  require(j.contains("finals") && j["finals"].is_array(), "automaton needs 'finals'");
  for (const json& f : j["finals"]) {
    int q = f.get<int>();
    require(q >= 0 && q < n, "final state out of range");
    a.is_final[q] = 1;
  }
  a.next.assign(n, std::vector<int>(a.alphabet.size(), -1));
  require(j.contains("transitions") && j["transitions"].is_array(),
          "automaton needs 'transitions'");
  for (const json& t : j["transitions"]) {
    require(t.is_array() && t.size() == 3, "transitions are [from, letter, to]");
    int from = t[0].get<int>(), li = t[1].get<int>(), to = t[2].get<int>();
    require(from >= 0 && from < n && to >= 0 && to < n, "transition endpoint out of range");
    require(li >= 0 && li < int(a.alphabet.size()), "transition letter out of range");
    require(a.next[from][li] < 0, "duplicate transition for one (state, letter)");
    a.next[from][li] = to;
  }
  a.check_well_formed();
  return a;
}

std::string letter_key(const Letter& l) {
  std::string key;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(l[i]);
  }
  return key;
}

Letter letter_from_key(const std::string& key) {
  Letter l;
  std::istringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    require(!part.empty(), "empty entry in letter key '" + key + "'");
    std::size_t used = 0;
    int v = std::stoi(part, &used);
    require(used == part.size(), "bad letter key '" + key + "'");
    l.push_back(v);
  }
  require(!l.empty(), "empty letter key");
  return l;
}

std::string format_letter(const Letter& l, int tape_split) {
  auto join = [](const Letter& part) {
    std::string s;
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(part[i]);
    }
    return s;
  };
  if (tape_split > 0 && tape_split < int(l.size()))
    return join(Letter(l.begin(), l.begin() + tape_split)) + "/" +
           join(Letter(l.begin() + tape_split, l.end()));
  return join(l);
}

std::string dfa_to_dot(const MultiTapeDFA& a, int split_override) {
  int split = split_override >= 0 ? split_override : a.tape_split;
  std::string out = "digraph dfa {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (int q = 0; q < a.num_states(); ++q) {
    out += "  q" + std::to_string(q) + " [label=\"" + std::to_string(q) + "\"";
    if (a.is_final[q]) out += ", shape=doublecircle";
    out += "];\n";
  }
  out += "  __init [shape=none, label=\"\"];\n";
  out += "  __init -> q" + std::to_string(a.initial) + ";\n";
  for (int q = 0; q < a.num_states(); ++q)
    for (int li = 0; li < a.num_letters(); ++li)
      if (a.next[q][li] >= 0)
        out += "  q" + std::to_string(q) + " -> q" + std::to_string(a.next[q][li]) +
               " [label=\"" + format_letter(a.alphabet[li], split) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace pisot
