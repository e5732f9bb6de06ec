#include <doctest.h>

#include <array>
#include <random>

#include "blf/error.hpp"
#include "blf/mcg.hpp"

using namespace blf::mcg;

namespace {

// Independent torus oracle: plain 2x2 arrays and the transvection written out
// by hand, x -> x + <x,c> c with <a,b> = 1.
using M2 = std::array<std::array<long long, 2>, 2>;

M2 twist2(long long p, long long q, int sign) {
  return {{{1 + sign * p * q, -sign * p * p}, {sign * q * q, 1 - sign * p * q}}};
}

M2 mul2(const M2& a, const M2& b) {
  M2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

IntMatrix to_int(const M2& m) { return IntMatrix::from_rows({{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}); }

TwistWord torus_word(const std::vector<std::pair<long long, long long>>& curves, Handedness h = Handedness::right) {
  std::vector<TwistLetter> letters;
  for (auto [p, q] : curves) letters.push_back({HomologyClass(1, {p, q}), h});
  return TwistWord(1, letters);
}

}  // namespace

TEST_SUITE("mcg") {

TEST_CASE("three twists on the torus") {
  const auto word = torus_word({{1, 1}, {-1, 2}, {2, -1}});
  const M2 oracle = mul2(mul2(twist2(1, 1, 1), twist2(-1, 2, 1)), twist2(2, -1, 1));
  CHECK(oracle == M2{{{1, 9}, {0, 1}}});
  CHECK(compose_word(word) == to_int(oracle));
  CHECK(round_handle_check(word, HomologyClass(1, {1, 0})));
  CHECK_FALSE(round_handle_check(word, HomologyClass(1, {0, 1})));
}

TEST_CASE("random torus words agree with the 2x2 oracle") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::pair<long long, long long>> curves;
    const int n = static_cast<int>(rng() % 6);
    const bool left = rng() % 2;
    M2 oracle{{{1, 0}, {0, 1}}};
    for (int i = 0; i < n; ++i) {
      const long long p = static_cast<int>(rng() % 5) - 2, q = static_cast<int>(rng() % 5) - 2;
      curves.emplace_back(p, q);
      oracle = mul2(oracle, twist2(p, q, left ? -1 : 1));
    }
    const auto m = compose_word(torus_word(curves, left ? Handedness::left : Handedness::right));
    CHECK(m == to_int(oracle));
    CHECK(m.determinant() == 1);
  }
}

TEST_CASE("twists are symplectic and a word times its inverse is the identity") {
  std::mt19937 rng(5);
  for (int genus = 1; genus <= 3; ++genus) {
    const auto j = symplectic_form(genus);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<TwistLetter> letters;
      for (int i = 0; i < 4; ++i) {
        std::vector<std::int64_t> c(2 * genus);
        for (auto& x : c) x = static_cast<int>(rng() % 5) - 2;
        letters.push_back({HomologyClass(genus, c), rng() % 2 ? Handedness::left : Handedness::right});
      }
      const TwistWord w(genus, letters);
      const auto m = compose_word(w);
      CHECK(m.transpose() * j * m == j);
      const auto inv = w.inverse();
      std::vector<TwistLetter> both = letters;
      both.insert(both.end(), inv.letters().begin(), inv.letters().end());
      CHECK(compose_word(TwistWord(genus, both)) == IntMatrix::identity(2 * genus));
    }
  }
}

TEST_CASE("a twist fixes its own curve") {
  const HomologyClass c(2, {1, -1, 0, 2});
  CHECK(twist_matrix(c, Handedness::right) * c.coords() == c.coords());
  CHECK(intersection_pairing(HomologyClass(1, {1, 0}), HomologyClass(1, {0, 1})) == 1);
  CHECK(round_handle_check(TwistWord(2, {{c, Handedness::left}}), c));
}

TEST_CASE("genus mismatch is rejected") {
  CHECK_THROWS_AS(compose_word(TwistWord(2, {{HomologyClass(1, {1, 0}), Handedness::right}})), blf::Error);
}

}
