#include <stdexcept>
#include <random>

#include "doctest.h"
#include "invseq/word.hpp"

using namespace invseq;

TEST_CASE("reduce maps values to dense ranks") {
  CHECK(reduce({0, 0, 2, 3, 2, 5, 2}) == Word{0, 0, 1, 2, 1, 3, 1});
  CHECK(reduce({}) == Word{});
  CHECK(reduce({7}) == Word{0});
}

TEST_CASE("reduce is idempotent and preserves comparisons") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> len(0, 12), letter(0, 9);
  for (int trial = 0; trial < 300; ++trial) {
    Word w(len(rng));
    for (int& v : w) v = letter(rng);
    Word r = reduce(w);
    CHECK(reduce(r) == r);
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < w.size(); ++j) {
        CHECK((w[i] < w[j]) == (r[i] < r[j]));
        CHECK((w[i] == w[j]) == (r[i] == r[j]));
      }
  }
}

TEST_CASE("pattern construction rejects non-reduced words") {
  CHECK_NOTHROW(Pattern({0, 0, 1, 2}));
  CHECK_NOTHROW(Pattern({1, 1, 0}));
  CHECK_THROWS_AS(Pattern({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Pattern({0, 2}), std::invalid_argument);
}

TEST_CASE("containment matches the worked examples") {
  Word e{0, 0, 2, 3, 2, 5, 2};
  CHECK(contains(e, Pattern({0, 1, 1})));
  CHECK_FALSE(contains(e, Pattern({1, 1, 0})));
  CHECK(avoids(e, Pattern({1, 1, 0})));
}

TEST_CASE("every nonempty word contains its own reduction") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(1, 8), letter(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    Word w(len(rng));
    for (int& v : w) v = letter(rng);
    CHECK(contains(w, Pattern(reduce(w))));
  }
}

TEST_CASE("contains_at_last only sees occurrences ending at the back") {
  // 0,0,1 contains 001 but not with the final letter at the last position
  // once a 0 is appended.
  Word w{0, 0, 1, 0};
  CHECK(contains(w, Pattern({0, 0, 1})));
  CHECK_FALSE(contains_at_last(w, Pattern({0, 0, 1})));
  CHECK(contains_at_last(Word{0, 0, 1}, Pattern({0, 0, 1})));
}

TEST_CASE("word text round trip") {
  CHECK(parse_word("0,0,2,3,2,5,2") == Word{0, 0, 2, 3, 2, 5, 2});
  CHECK(parse_word("0023252") == Word{0, 0, 2, 3, 2, 5, 2});
  CHECK(parse_word("0,10,2") == Word{0, 10, 2});
  CHECK(word_to_string(Word{0, 10, 2}) == "0,10,2");
  CHECK(parse_word("") == Word{});
  CHECK_THROWS_AS(parse_word("0,,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("0,a"), std::invalid_argument);
}
