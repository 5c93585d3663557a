#include "invseq/seqcore.hpp"

#include <map>
#include <stdexcept>

namespace invseq {

bool is_inversion_sequence(const Word& e) {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] > static_cast<int>(i)) return false;
  return true;
}

StatProfile stat_profile(const Word& e) {
  if (e.empty())
    throw std::invalid_argument("stat_profile: srpt undefined on the empty sequence");
  std::map<int, int> multiplicity;
  for (int v : e) ++multiplicity[v];
  StatProfile prof;
  for (const auto& [letter, count] : multiplicity)
    if (count >= 2) prof.repeated.insert(letter);
  prof.srpt = prof.repeated.empty() ? static_cast<int>(e.size()) - 1
                                    : *prof.repeated.begin();
  prof.last = e.back();
  return prof;
}

Word drop_last(const Word& e) {
  if (e.size() < 2)
    throw std::invalid_argument("drop_last: sequence must have length >= 2");
  return Word(e.begin(), e.end() - 1);
}

const Pattern& pattern_0012() {
  static const Pattern p(Word{0, 0, 1, 2});
  return p;
}

Word shift_reduce(const Word& e, int k) {
  const int n = static_cast<int>(e.size());
  if (k < 0 || k > n - 2)
    throw std::invalid_argument("shift_reduce: need 0 <= k <= n-2");
  if (!is_inversion_sequence(e) || contains(e, pattern_0012()))
    throw std::invalid_argument("shift_reduce: input not in I_n(0012)");
  StatProfile prof = stat_profile(e);
  if (prof.srpt != k || prof.last != k)
    throw std::invalid_argument("shift_reduce: srpt(e) = last(e) = k required");
  Word out;
  out.reserve(n - k);
  for (int i = k; i < n; ++i) out.push_back(e[i] - k);
  return out;
}

namespace {

void extend(Word& e, int n, const std::vector<Pattern>& patterns,
            const SequenceVisitor& visit) {
  if (static_cast<int>(e.size()) == n) {
    visit(e);
    return;
  }
  const int bound = static_cast<int>(e.size());  // next letter in 0..bound
  for (int v = 0; v <= bound; ++v) {
    e.push_back(v);
    // A new occurrence must end at the appended letter, so only those
    // embeddings are searched.
    bool pruned = false;
    for (const Pattern& p : patterns)
      if (contains_at_last(e, p)) {
        pruned = true;
        break;
      }
    if (!pruned) extend(e, n, patterns, visit);
    e.pop_back();
  }
}

}  // namespace

void enumerate(int n, const std::vector<Pattern>& patterns,
               const SequenceVisitor& visit) {
  enumerate_with_prefix(n, patterns, {}, visit);
}

void enumerate_with_prefix(int n, const std::vector<Pattern>& patterns,
                           const Word& prefix, const SequenceVisitor& visit) {
  if (n < 0) throw std::invalid_argument("enumerate: n must be >= 0");
  if (static_cast<int>(prefix.size()) > n)
    throw std::invalid_argument("enumerate: prefix longer than n");
  if (!is_inversion_sequence(prefix))
    throw std::invalid_argument("enumerate: prefix is not an inversion sequence");
  for (const Pattern& p : patterns)
    if (contains(prefix, p)) return;
  Word e = prefix;
  e.reserve(n);
  extend(e, n, patterns, visit);
}

std::vector<Word> enumerate_collect(int n, const std::vector<Pattern>& patterns) {
  std::vector<Word> out;
  enumerate(n, patterns, [&](const Word& e) { out.push_back(e); });
  return out;
}

}  // namespace invseq
