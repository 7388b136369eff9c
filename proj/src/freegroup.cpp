#include "linkrep/freegroup.hpp"

#include <algorithm>
#include <cctype>

namespace linkrep {

namespace {

bool valid_letter(char c) {
  char l = (char)std::tolower((unsigned char)c);
  return l == 'a' || l == 'b' || l == 'c';
}

char inverse_letter(char c) {
  return std::isupper((unsigned char)c) ? (char)std::tolower((unsigned char)c)
                                        : (char)std::toupper((unsigned char)c);
}

void check_word(const Word& w) {
  for (char c : w)
    if (!valid_letter(c))
      throw InputError(Err::BadArgument,
                       std::string("invalid letter '") + c + "' in word (use aAbBcC)");
}

}  // namespace

Word reduce(const Word& w) {
  check_word(w);
  Word out;
  for (char c : w) {
    if (!out.empty() && out.back() == inverse_letter(c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

Word invert(const Word& w) {
  check_word(w);
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_letter(*it));
  return reduce(out);
}

Word multiply(const Word& u, const Word& v) { return reduce(u + v); }

int word_len(const Word& w) { return (int)reduce(w).size(); }

Word cyclic_reduce(const Word& w) {
  Word r = reduce(w);
  size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == inverse_letter(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return r.substr(lo, hi - lo);
}

bool conjugate_in_free(const Word& u, const Word& v) {
  Word cu = cyclic_reduce(u), cv = cyclic_reduce(v);
  if (cu.size() != cv.size()) return false;
  if (cu.empty()) return true;
  return (cu + cu).find(cv) != std::string::npos;
}

bool centralizer_check(const Word& x, const Word& w) {
  return multiply(x, w) == multiply(w, x);
}

bool in_subgroup_ab(const Word& w) {
  Word r = reduce(w);
  return r.find('c') == std::string::npos && r.find('C') == std::string::npos;
}

std::vector<Word> all_reduced_words(int max_len) {
  if (max_len < 0) throw InputError(Err::BadArgument, "negative word length");
  static const char kLetters[] = {'a', 'A', 'b', 'B', 'c', 'C'};
  std::vector<Word> all;
  all.emplace_back();
  size_t layer_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t layer_end = all.size();
    for (size_t i = layer_begin; i < layer_end; ++i) {
      for (char c : kLetters) {
        if (!all[i].empty() && all[i].back() == inverse_letter(c)) continue;
        all.push_back(all[i] + c);
      }
    }
    layer_begin = layer_end;
  }
  return all;
}

ConjugacyLemmaReport conjugacy_lemma_check(int max_len) {
  ConjugacyLemmaReport rep;
  const int signs[2] = {+1, -1};
  for (const Word& w : all_reduced_words(max_len)) {
    ++rep.words_checked;
    Word wi = invert(w);
    bool hit = false;
    for (int e1 : signs)
      for (int e2 : signs) {
        Word u = reduce(Word(1, e1 > 0 ? 'a' : 'A') + w + Word(1, e2 > 0 ? 'b' : 'B') + wi);
        for (int e3 : signs)
          for (int e4 : signs) {
            Word v = Word(1, e3 > 0 ? 'a' : 'A') + Word(1, e4 > 0 ? 'b' : 'B');
            if (conjugate_in_free(u, v)) {
              ++rep.hypothesis_hits;
              hit = true;
            }
          }
      }
    if (hit && !in_subgroup_ab(w)) rep.counterexamples.push_back(w);
  }
  return rep;
}

}  // namespace linkrep
