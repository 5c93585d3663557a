#include "invseq/word.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace invseq {

Word reduce(const Word& w) {
  std::map<int, int> rank;
  for (int v : w) {
    if (v < 0) throw std::invalid_argument("word letters must be non-negative");
    rank[v] = 0;
  }
  int r = 0;
  for (auto& [value, index] : rank) index = r++;
  Word out;
  out.reserve(w.size());
  for (int v : w) out.push_back(rank[v]);
  return out;
}

bool is_reduced(const Word& w) { return reduce(w) == w; }

Pattern::Pattern(Word letters) : letters_(std::move(letters)) {
  if (!is_reduced(letters_))
    throw std::invalid_argument("pattern is not in reduced form: " +
                                word_to_string(letters_));
}

namespace {

// Depth-first subsequence search. chosen[t] must relate to the candidate
// letter exactly as p[t] relates to p[j] (tie vs. strict order).
bool match_from(const Word& e, const Word& p, std::vector<int>& chosen,
                std::size_t j, std::size_t start, std::size_t stop) {
  if (j == p.size()) return true;
  // The last pattern letter may be pinned to the last word position.
  std::size_t first = start;
  std::size_t last = e.size() - (p.size() - j - 1);
  if (j + 1 == p.size() && stop != 0) first = std::max(first, stop - 1);
  for (std::size_t i = first; i < last; ++i) {
    bool ok = true;
    for (std::size_t t = 0; t < j && ok; ++t) {
      if (p[t] < p[j]) ok = chosen[t] < e[i];
      else if (p[t] > p[j]) ok = chosen[t] > e[i];
      else ok = chosen[t] == e[i];
    }
    if (!ok) continue;
    chosen.push_back(e[i]);
    if (match_from(e, p, chosen, j + 1, i + 1, stop)) return true;
    chosen.pop_back();
  }
  return false;
}

bool search(const Word& e, const Pattern& p, std::size_t stop) {
  const Word& pat = p.letters();
  if (pat.empty()) return true;
  if (e.size() < pat.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(pat.size());
  return match_from(e, pat, chosen, 0, 0, stop);
}

}  // namespace

bool contains(const Word& e, const Pattern& p) { return search(e, p, 0); }

bool avoids(const Word& e, const Pattern& p) { return !contains(e, p); }

bool contains_at_last(const Word& e, const Pattern& p) {
  if (e.empty()) return p.size() == 0;
  return search(e, p, e.size());
}

Word parse_word(const std::string& text) {
  Word out;
  if (text.empty()) return out;
  if (text.find(',') == std::string::npos) {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("invalid letter in word: " + text);
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos
                                           ? std::string::npos
                                           : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("invalid letter in word: " + text);
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace invseq
