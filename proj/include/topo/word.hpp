#pragma once

#include <string>
#include <vector>

#include "topo/error.hpp"

namespace topo {

/// A letter is +(g+1) for generator g, -(g+1) for its inverse.
using Letter = int;
using Word = std::vector<Letter>;

inline Letter letter_of(int gen, bool inverse = false) {
  return inverse ? -(gen + 1) : gen + 1;
}
inline int gen_of(Letter l) { return (l > 0 ? l : -l) - 1; }
inline bool is_inverse(Letter l) { return l < 0; }

inline Word free_reduce(Word w) {
  Word out;
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline Word word_inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

std::string word_str(const Word& w, const std::vector<std::string>& gens);

/// Parses "a b a^-1 b^-1" against a generator list.
Word parse_word(const std::string& text, const std::vector<std::string>& gens);

}  // namespace topo
