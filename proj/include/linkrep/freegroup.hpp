#pragma once

#include <string>
#include <vector>

#include "linkrep/errors.hpp"

namespace linkrep {

// Words in the free group on three generators a, b, c. Uppercase letters
// denote inverses, so "aB" means a * b^{-1}. The empty string is the
// identity. Every operation accepts unreduced input and validates letters.

using Word = std::string;

Word reduce(const Word& w);
Word invert(const Word& w);
Word multiply(const Word& u, const Word& v);
int word_len(const Word& w);

// Shortest word in the conjugacy class of w (free + cyclic reduction).
Word cyclic_reduce(const Word& w);

// True iff u and v are conjugate: their cyclic reductions are rotations
// of one another.
bool conjugate_in_free(const Word& u, const Word& v);

// True iff x and w commute.
bool centralizer_check(const Word& x, const Word& w);

// True iff the reduced form of w uses only the first two generators.
bool in_subgroup_ab(const Word& w);

// Every reduced word of length <= max_len, shortest first.
std::vector<Word> all_reduced_words(int max_len);

struct ConjugacyLemmaReport {
  long long words_checked = 0;
  long long hypothesis_hits = 0;
  std::vector<Word> counterexamples;
};

// Checks, for every reduced word w with |w| <= max_len and every sign tuple
// (e1,e2,e3,e4) in {+1,-1}^4: if a^{e1} w b^{e2} w^{-1} is conjugate to
// a^{e3} b^{e4}, then w lies in the subgroup generated by a and b. Words
// violating the implication are reported as counterexamples.
ConjugacyLemmaReport conjugacy_lemma_check(int max_len);

}  // namespace linkrep
