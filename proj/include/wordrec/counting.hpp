#ifndef WORDREC_COUNTING_HPP
#define WORDREC_COUNTING_HPP

#include "wordrec/bigcount.hpp"
#include "wordrec/word.hpp"

namespace wordrec {

// Exact number of occurrences of u as a subword (scattered factor) of w.
// Dynamic programming over prefix pairs, one row of |u|+1 big integers swept
// once per letter of w. The empty word counts once: C(w, eps) = 1.
BigCount count_subword_occurrences(const Word& w, const Word& u);

// Same value as count_subword_occurrences but with closed-form shortcuts for
// the run-structured query words the reconstruction strategies emit
// (a^p b^m a^q shapes); falls back to the dynamic program otherwise.
// The oracle answers through this path; tests cross-check it against the DP.
BigCount count_subword_occurrences_fast(const Word& w, const Word& u);

}  // namespace wordrec

#endif
