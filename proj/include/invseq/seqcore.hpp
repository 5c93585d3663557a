#pragma once

#include <functional>
#include <set>
#include <vector>

#include "invseq/word.hpp"

namespace invseq {

// 0 <= e_i <= i-1 at every position (1-indexed).
bool is_inversion_sequence(const Word& e);

struct StatProfile {
  int srpt = 0;            // smallest repeated letter; n-1 when all distinct
  int last = 0;            // final entry
  std::set<int> repeated;  // letters occurring at least twice
};

// Throws std::invalid_argument on the empty sequence.
StatProfile stat_profile(const Word& e);

// Length-(n-1) prefix; requires n >= 2.
Word drop_last(const Word& e);

// For e in I_n(0012) with srpt(e) = last(e) = k, 0 <= k <= n-2, returns
// e' of length n-k with e'_i = e_{k+i} - k. The precondition is checked
// and violations throw std::invalid_argument.
Word shift_reduce(const Word& e, int k);

// The pattern 0012, used throughout the counting layer.
const Pattern& pattern_0012();

using SequenceVisitor = std::function<void(const Word&)>;

// Visits every member of I_n avoiding all listed patterns, each exactly
// once, in lexicographic order. n = 0 visits the empty sequence.
void enumerate(int n, const std::vector<Pattern>& patterns,
               const SequenceVisitor& visit);

// Same traversal restricted to sequences extending the given prefix;
// callers may partition by prefix entries and run partitions in parallel.
// Visits nothing when the prefix itself already contains a pattern.
void enumerate_with_prefix(int n, const std::vector<Pattern>& patterns,
                           const Word& prefix, const SequenceVisitor& visit);

std::vector<Word> enumerate_collect(int n, const std::vector<Pattern>& patterns);

}  // namespace invseq
