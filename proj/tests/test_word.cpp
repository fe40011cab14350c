#include <doctest.h>

#include <random>

#include "pillow/word.hpp"

using namespace pillow;

namespace {

Word W(const char* s) { return Word::parse(s); }

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, 3), sign(0, 1);
  Word w;
  for (std::size_t i = 0, n = len(rng); i < n; ++i)
    w.push_back({static_cast<Gen>(gen(rng)), sign(rng) ? 1 : -1});
  return w;
}

// Words over few generators cancel far more often.
Word random_word_narrow(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, 1), sign(0, 1);
  Word w;
  for (std::size_t i = 0, n = len(rng); i < n; ++i)
    w.push_back({gen(rng) ? Gen::z : Gen::x, sign(rng) ? 1 : -1});
  return w;
}

bool reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].cancels(w[i + 1])) return false;
  return true;
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(W("bz'xb'zb'y").size() == 7);
  CHECK(W("bz'xb'zb'y").str() == "bz'xb'zb'y");
  CHECK(W("b z' x").str() == "bz'x");
  CHECK(W("").empty());
  CHECK(W("1").empty());
  CHECK(Word().str().empty());
  CHECK(W("x'")[0] == Letter{Gen::x, -1});
  CHECK_THROWS_AS(W("q"), std::invalid_argument);
  CHECK_THROWS_AS(W("'x"), std::invalid_argument);
  CHECK_THROWS_AS(W("x''"), std::invalid_argument);
}

TEST_CASE("free reduction examples") {
  CHECK(free_reduce(W("")).empty());
  CHECK(free_reduce(W("xx'")).empty());
  CHECK(free_reduce(W("zzzz'z'x")) == W("zx"));
  CHECK(free_reduce(W("xyy'zz'x'b")) == W("b"));
}

TEST_CASE("is_trivial examples") {
  CHECK(is_trivial(W("xx'")));
  CHECK_FALSE(is_trivial(W("zy'z'")));
  CHECK(is_trivial(W("z'z'z'zzz")));
  CHECK(is_trivial(W("")));
  CHECK_FALSE(is_trivial(W("b")));
}

TEST_CASE("expected prefixes") {
  CHECK(expected_prefix(2, 1) == W("bz'xb'zb'y"));
  CHECK(expected_prefix(1, 1) == W("bz'xb'zy'b"));
  CHECK(expected_prefix(3, 1) == W("bz'bx'zb'zy'b"));
  CHECK(expected_prefix(4, 1) == W("bz'bx'zb'zb'y"));
  CHECK(expected_prefix(1, 2) == W("bz'bz'xb'zb'zy'b"));
  CHECK_THROWS_AS(expected_prefix(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(expected_prefix(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(expected_prefix(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(expected_prefix(1, kMaxPrefixIndex + 1), std::invalid_argument);
}

TEST_CASE("expected prefixes are reduced and have the printed lengths") {
  for (int i = 1; i <= 4; ++i)
    for (long k = 1; k <= 10; ++k) {
      const Word w = expected_prefix(i, k);
      CHECK(nesting_profile(w).empty());
      CHECK(free_reduce(w) == w);
      CHECK(w.size() == static_cast<std::size_t>(4 * k + (i <= 2 ? 3 : 5)));
    }
}

TEST_CASE("nesting profile examples") {
  using V = std::vector<NestingSite>;
  CHECK(nesting_profile(W("zzz'z'x")) == V{{Gen::z, 2, 0}});
  CHECK(nesting_profile(W("z'z'zzy'")) == V{{Gen::z, 2, 0}});
  CHECK(nesting_profile(W("xy")).empty());
  CHECK(nesting_profile(W("zzzz'z'x")) == V{{Gen::z, 2, 1}});
  CHECK(nesting_profile(W("xx'yy'")) == V{{Gen::x, 1, 0}, {Gen::y, 1, 2}});
  CHECK(nesting_profile(W("zy'z'")).empty());
}

TEST_CASE("has_prefix examples") {
  CHECK(has_prefix(W("bz'xb'zb'yz'b"), W("bz'xb'zb'y")));
  CHECK(has_prefix(W("z"), W("z")));
  CHECK_FALSE(has_prefix(W("xy"), W("xz")));
  CHECK_FALSE(has_prefix(W("x"), W("xy")));
  CHECK(has_prefix(W("x"), W("")));
}

TEST_CASE("free group laws on random words") {
  std::mt19937_64 rng(20261018);
  int checked = 0;
  for (int round = 0; round < 12000; ++round) {
    const Word u = round % 2 ? random_word(rng, 64) : random_word_narrow(rng, 64);
    const Word v = round % 3 ? random_word(rng, 64) : random_word_narrow(rng, 64);
    const Word ru = free_reduce(u);

    REQUIRE(reduced(ru));
    REQUIRE(free_reduce(ru) == ru);
    REQUIRE(ru.size() <= u.size());
    REQUIRE(ru.size() % 2 == u.size() % 2);
    REQUIRE(free_reduce(concat(u, v)) == free_reduce(concat(ru, free_reduce(v))));
    REQUIRE(is_trivial(concat(u, u.inverse())));
    REQUIRE(is_trivial(concat(u.inverse(), u)));
    REQUIRE(nesting_profile(u).empty() == reduced(u));
    REQUIRE(Word::parse(u.str()) == u);
    ++checked;
  }
  CHECK(checked == 12000);
}

TEST_CASE("nesting sites are genuine palindromic blocks") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 2000; ++round) {
    const Word w = random_word_narrow(rng, 32);
    for (const auto& site : nesting_profile(w)) {
      REQUIRE(site.depth >= 1);
      REQUIRE(site.position + 2 * static_cast<std::size_t>(site.depth) <= w.size());
      const Letter head = w[site.position];
      for (int d = 0; d < site.depth; ++d) {
        REQUIRE(w[site.position + d] == head);
        REQUIRE(w[site.position + 2 * site.depth - 1 - d] == head.inverse());
      }
    }
  }
}
