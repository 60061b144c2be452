#pragma once

#include <string>
#include <vector>

#include "pisot/common.hpp"

namespace pisot {

/* One column of a d-track word: the i-th entry is the digit on track i.
 * Digits may be negative (signed-digit alphabets). */
using Letter = std::vector<int>;

/* A word over Z^d, most significant letter first.  dim is kept explicit so
 * the empty word still knows its track count. */
struct Word {
  int dim = 1;
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(int d) : dim(d) { require(d >= 1, "word dimension must be >= 1"); }
  Word(int d, std::vector<Letter> ls) : dim(d), letters(std::move(ls)) {
    for (const auto& l : letters)
      require(int(l.size()) == d, "letter width differs from word dimension");
  }

  int size() const { return int(letters.size()); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word& a, const Word& b) {
    return a.dim == b.dim && a.letters == b.letters;
  }
};

inline Letter zero_letter(int dim) { return Letter(dim, 0); }

inline bool is_zero_letter(const Letter& l) {
  for (int x : l)
    if (x != 0) return false;
  return true;
}

inline Letter abs_letter(const Letter& l) {
  Letter r = l;
  for (int& x : r) x = x < 0 ? -x : x;
  return r;
}

inline Letter negate_letter(const Letter& l) {
  Letter r = l;
  for (int& x : r) x = -x;
  return r;
}

/* Track-wise absolute value; an involution together with negate_word. */
inline Word abs_word(const Word& w) {
  Word r(w.dim);
  r.letters.reserve(w.letters.size());
  for (const auto& l : w.letters) r.letters.push_back(abs_letter(l));
  return r;
}

inline Word negate_word(const Word& w) {
  Word r(w.dim);
  r.letters.reserve(w.letters.size());
  for (const auto& l : w.letters) r.letters.push_back(negate_letter(l));
  return r;
}

/* Digit rows -> word over Z^d, left-padding every row with 0 to the longest
 * row.  This is the padding convention used everywhere: representations of
 * vectors align their least significant digits. */
inline Word pad_tuple(const std::vector<std::vector<int>>& rows) {
  require(!rows.empty(), "pad_tuple: no rows");
  std::size_t len = 0;
  for (const auto& r : rows) len = std::max(len, r.size());
  Word w(int(rows.size()));
  w.letters.assign(len, zero_letter(w.dim));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t off = len - rows[i].size();
    for (std::size_t j = 0; j < rows[i].size(); ++j) w.letters[off + j][int(i)] = rows[i][j];
  }
  return w;
}

/* Row i of the word, as a plain digit sequence. */
inline std::vector<int> word_track(const Word& w, int track) {
  require(track >= 0 && track < w.dim, "word_track: track out of range");
  std::vector<int> r;
  r.reserve(w.letters.size());
  for (const auto& l : w.letters) r.push_back(l[track]);
  return r;
}

/* "021" -> dim-1 word; only plain digits, so digits 0..9. */
inline Word word_from_digits(const std::string& s) {
  Word w(1);
  for (char c : s) {
    require(c >= '0' && c <= '9', "digit string may only contain 0..9");
    w.letters.push_back({c - '0'});
  }
  return w;
}

inline Word prepend_zeros(const Word& w, int k) {
  Word r(w.dim);
  r.letters.assign(std::size_t(k), zero_letter(w.dim));
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
  return r;
}

}  // namespace pisot
