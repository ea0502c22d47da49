#include <algorithm>

#include "doctest.h"
#include "hecke/errors.hpp"
#include "hecke/partition.hpp"
#include "test_util.hpp"

using namespace hecke;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }
}  // namespace

TEST_CASE("conjugate") {
  CHECK(P("3,2").conjugate() == P("2,2,1"));
  CHECK(P("").conjugate() == P(""));
  CHECK(P("4,4").conjugate() == P("2,2,2,2"));
  for (int n = 0; n <= 12; ++n)
    for (const Partition& p : Partition::all(n)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("content and hooks") {
  CHECK(content(Box{1, 1}) == 0);
  CHECK(content(Box{2, 1}) == -1);
  CHECK(content(Box{1, 3}) == 2);

  CHECK(hook_product(P("1")) == 1);
  CHECK(hook_product(P("3,2")) == 24);  // hooks 4,3,1,2,1
  CHECK(hook_product(P("2,2")) == 12);  // hooks 3,2,2,1

  std::vector<int> hooks;
  for (const Box& b : P("3,2").boxes()) hooks.push_back(hook_length(P("3,2"), b));
  CHECK(hooks == std::vector<int>{4, 3, 1, 2, 1});
}

TEST_CASE("mixed hooks") {
  CHECK(mixed_hook(P("1"), P("1"), Box{1, 1}, MixedHookKind::First) == 1);
  CHECK(mixed_hook(P("1"), P("1"), Box{1, 1}, MixedHookKind::Second) == 1);
  CHECK(mixed_hook(P("3,2"), P("2,1"), Box{1, 1}, MixedHookKind::First) == 4);
  CHECK(mixed_hook(P("3,2"), P("2,1"), Box{1, 1}, MixedHookKind::Second) == 3);
  CHECK(mixed_hook(P("3,2"), P("2,1"), Box{2, 1}, MixedHookKind::First) == 2);
  CHECK(mixed_hook(P("3,2"), P("2,1"), Box{2, 1}, MixedHookKind::Second) == 1);
  CHECK_THROWS_AS(mixed_hook(P("3,2"), P("2,1"), Box{2, 2}, MixedHookKind::First),
                  PreconditionError);
}

TEST_CASE("mixed hooks are positive on every intersection box") {
  for (int l = 1; l <= 8; ++l)
    for (int m = 1; m <= 8; ++m)
      for (const Partition& lam : Partition::all(l))
        for (const Partition& mu : Partition::all(m))
          for (const Box& b : Partition::intersection(lam, mu).boxes()) {
            CHECK(mixed_hook(lam, mu, b, MixedHookKind::First) > 0);
            CHECK(mixed_hook(lam, mu, b, MixedHookKind::Second) > 0);
          }
}

TEST_CASE("mixed hook with equal shapes is the ordinary hook") {
  for (int n = 1; n <= 7; ++n)
    for (const Partition& p : Partition::all(n))
      for (const Box& b : p.boxes()) {
        CHECK(mixed_hook(p, p, b, MixedHookKind::First) == hook_length(p, b));
        CHECK(mixed_hook(p, p, b, MixedHookKind::Second) == hook_length(p, b));
      }
}

TEST_CASE("gamma construction") {
  ShapeResult g = build_gamma(P("3,2"), P("2,1"), IndexSequence::rows({2, 1}));
  REQUIRE(g.accepted());
  CHECK(*g.shape == P("4,4"));

  CHECK(*build_gamma(P("1"), P(""), IndexSequence::rows({1})).shape == P("1"));
  CHECK(*build_gamma(P("1,1"), P("1"), IndexSequence::rows({1, 2})).shape == P("2,1"));

  ShapeResult bad = build_gamma(P("1"), P(""), IndexSequence::rows({2}));
  CHECK(!bad.accepted());
  CHECK(bad.first_violation == 2);

  CHECK_THROWS_AS(build_gamma(P("3,2"), P("2,1"), IndexSequence::rows({1})), PreconditionError);
  CHECK_THROWS_AS(build_gamma(P("3,2"), P("2,1"), IndexSequence::rows({1, 1})),
                  PreconditionError);
  CHECK_THROWS_AS(build_gamma(P("3,2"), P("2,1"), IndexSequence::columns({1, 2})),
                  PreconditionError);
}

TEST_CASE("delta construction") {
  ShapeResult d = build_delta(P("1"), P("1"), IndexSequence::columns({1}));
  REQUIRE(d.accepted());
  CHECK(*d.shape == P("1,1"));

  CHECK(*build_delta(P("1,1"), P("1"), IndexSequence::columns({1})).shape == P("1,1,1"));

  // Columnwise sums 2+2, 1+2, 0+1 give delta' = (4,3,1).
  ShapeResult big = build_delta(P("3,2"), P("2,1"), IndexSequence::columns({1, 2, 3}));
  REQUIRE(big.accepted());
  CHECK(*big.shape == P("3,2,2,1"));
  CHECK(big.shape->conjugate() == P("4,3,1"));
}

namespace {

// Independent brute-force oracle that filters every injective sequence over
// a deliberately larger range than the documented bound.
std::vector<std::vector<int>> oracle_sequences(const Partition& lam, const Partition& mu,
                                               IndexSequence::Kind kind, int extra) {
  int len = kind == IndexSequence::Kind::Rows ? lam.rows() : lam.part(1);
  int bound = (kind == IndexSequence::Kind::Rows ? mu.rows() + lam.rows()
                                                 : mu.part(1) + lam.part(1)) +
              extra;
  std::vector<std::vector<int>> accepted;
  std::vector<int> cur;
  std::vector<bool> used(bound + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == len) {
      IndexSequence s{cur, kind};
      ShapeResult r = kind == IndexSequence::Kind::Rows ? build_gamma(lam, mu, s)
                                                        : build_delta(lam, mu, s);
      if (r.accepted()) accepted.push_back(cur);
      return;
    }
    for (int v = 1; v <= bound; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[v] = false;
    }
  };
  if (len == 0) return {{}};
  rec(rec);
  std::sort(accepted.begin(), accepted.end());
  return accepted;
}

std::vector<std::vector<int>> values_of(const std::vector<IndexSequence>& xs) {
  std::vector<std::vector<int>> out;
  for (const auto& x : xs) out.push_back(x.values);
  return out;
}

}  // namespace

TEST_CASE("index sequence enumeration matches the brute-force oracle") {
  CHECK(values_of(enumerate_index_sequences(P("1"), P(""), IndexSequence::Kind::Rows)) ==
        std::vector<std::vector<int>>{{1}});

  // All four survivors, frozen from the oracle: both orders on {1,2} give
  // (2,1) and both orders on {2,3} give (1,1,1).
  CHECK(values_of(enumerate_index_sequences(P("1,1"), P("1"), IndexSequence::Kind::Rows)) ==
        std::vector<std::vector<int>>{{1, 2}, {2, 1}, {2, 3}, {3, 2}});

  auto rows32 = values_of(enumerate_index_sequences(P("3,2"), P("2,1"), IndexSequence::Kind::Rows));
  CHECK(std::find(rows32.begin(), rows32.end(), std::vector<int>{1, 2}) != rows32.end());
  CHECK(std::find(rows32.begin(), rows32.end(), std::vector<int>{2, 1}) != rows32.end());

  for (int l = 1; l <= 4; ++l)
    for (int m = 0; m <= 3; ++m)
      for (const Partition& lam : Partition::all(l))
        for (const Partition& mu : Partition::all(m))
          for (IndexSequence::Kind kind :
               {IndexSequence::Kind::Rows, IndexSequence::Kind::Columns}) {
            CAPTURE(lam.str());
            CAPTURE(mu.str());
            CHECK(values_of(enumerate_index_sequences(lam, mu, kind)) ==
                  oracle_sequences(lam, mu, kind, 0));
          }
}

TEST_CASE("the enumeration bound is exhaustive") {
  // Values beyond mu'_1 + lam'_1 (rows) or mu_1 + lam_1 (columns) would
  // place a nonzero entry after a zero entry; widening the oracle range
  // must not add sequences.
  for (int l = 1; l <= 4; ++l)
    for (int m = 0; m <= 3; ++m)
      for (const Partition& lam : Partition::all(l))
        for (const Partition& mu : Partition::all(m))
          for (IndexSequence::Kind kind :
               {IndexSequence::Kind::Rows, IndexSequence::Kind::Columns}) {
            CHECK(oracle_sequences(lam, mu, kind, 0) == oracle_sequences(lam, mu, kind, 3));
          }
}

TEST_CASE("accepted shapes have full size and contain mu") {
  for (int l = 1; l <= 4; ++l)
    for (int m = 1; m <= 3; ++m)
      for (const Partition& lam : Partition::all(l))
        for (const Partition& mu : Partition::all(m)) {
          for (const IndexSequence& a :
               enumerate_index_sequences(lam, mu, IndexSequence::Kind::Rows)) {
            Partition g = *build_gamma(lam, mu, a).shape;
            CHECK(g.size() == l + m);
            for (int i = 1; i <= mu.rows(); ++i) CHECK(g.part(i) >= mu.part(i));
            // Removing mu leaves at most one box of lambda per column.
            for (int i = 1; i <= g.rows(); ++i) {
              int row_added = g.part(i) - mu.part(i);
              CHECK((row_added == 0 || std::count(a.values.begin(), a.values.end(), i) == 1));
            }
          }
          for (const IndexSequence& b :
               enumerate_index_sequences(lam, mu, IndexSequence::Kind::Columns)) {
            CHECK(build_delta(lam, mu, b).shape->size() == l + m);
          }
        }
}

TEST_CASE("skew complement") {
  SkewShape s = skew_complement(P("3,2"), P("2,1"));
  CHECK(s.boxes == std::vector<Box>{{1, 3}, {2, 2}});
  CHECK_THROWS_AS(skew_complement(P("2"), P("1,1")), PreconditionError);
}

TEST_CASE("partition text round trip") {
  CHECK(P("3,2").str() == "3,2");
  CHECK(P("").str() == "");
  // Trailing zeros are accepted and trimmed, matching the infinite-sequence
  // convention; an interior zero is not weakly-decreasing-positive.
  CHECK(P("0") == P(""));
  CHECK(P("2,0").str() == "2");
  CHECK_THROWS_AS(Partition::parse("2,3"), ParseError);
  CHECK_THROWS_AS(Partition::parse("a"), ParseError);
  CHECK_THROWS_AS(Partition::parse("0,2"), ParseError);
}
