#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace invseq {

// A finite word of non-negative integer letters.
using Word = std::vector<int>;

// Canonical relabeling: the k-th smallest distinct value of w maps to k-1.
// Preserves all order and equality relations between positions.
Word reduce(const Word& w);

bool is_reduced(const Word& w);

// A word in reduced (canonical) form. Construction rejects non-reduced
// input instead of silently reducing it; callers canonicalize via reduce().
class Pattern {
 public:
  explicit Pattern(Word letters);

  const Word& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  bool operator==(const Pattern& other) const = default;

 private:
  Word letters_;
};

// True iff some (not necessarily contiguous) subsequence of e has
// reduction equal to p.
bool contains(const Word& e, const Pattern& p);
bool avoids(const Word& e, const Pattern& p);

// Variant used by the pruned enumerator: only occurrences whose final
// pattern letter sits at the last position of e are considered.
bool contains_at_last(const Word& e, const Pattern& p);

// Text format: comma-separated decimal letters ("0,0,2,3,2,5,2").
// Digits-only input is accepted when every letter is a single digit.
Word parse_word(const std::string& text);
std::string word_to_string(const Word& w);

}  // namespace invseq
