#include <algorithm>

#include "doctest.h"
#include "hecke/errors.hpp"
#include "hecke/tableau.hpp"

using namespace hecke;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }
}  // namespace

TEST_CASE("standard tableau validation and text format") {
  StandardTableau t = StandardTableau::parse("1,3,5/2,4");
  CHECK(t.shape() == P("3,2"));
  CHECK(t.str() == "1,3,5/2,4");
  CHECK(t.entry({2, 2}) == 4);
  CHECK(t.box_of(5) == Box{1, 3});

  CHECK_THROWS_AS(StandardTableau::parse("2,1/3"), ParseError);   // row not increasing
  CHECK_THROWS_AS(StandardTableau::parse("1,2/1"), ParseError);   // not a bijection
  CHECK_THROWS_AS(StandardTableau::parse("1/2,3"), ParseError);   // shape not a partition
}

TEST_CASE("enumeration counts and order") {
  CHECK(enumerate_standard(P("1,1")).size() == 1);
  CHECK(enumerate_standard(P("2,1")).size() == 2);
  CHECK(enumerate_standard(P("3,2")).size() == 5);

  // Lexicographic by row-reading word, so the row tableau comes first.
  auto list = enumerate_standard(P("2,1"));
  CHECK(list[0].str() == "1,2/3");
  CHECK(list[1].str() == "1,3/2");

  auto words_sorted = [&](const Partition& shape) {
    auto ts = enumerate_standard(shape);
    for (size_t i = 0; i + 1 < ts.size(); ++i)
      if (!(ts[i].row_word() < ts[i + 1].row_word())) return false;
    return true;
  };
  CHECK(words_sorted(P("3,2,1")));
}

TEST_CASE("column tableau") {
  CHECK(column_tableau(P("3,2")).str() == "1,3,5/2,4");
  CHECK(column_tableau(P("1,1,1")).str() == "1/2/3");
  CHECK(column_tableau(P("2,2")).str() == "1,3/2,4");
}

TEST_CASE("content vector") {
  CHECK(content_vector(column_tableau(P("3,2"))) == std::vector<int>{0, -1, 1, 0, 2});
  CHECK(content_vector(StandardTableau::parse("1,2,3")) == std::vector<int>{0, 1, 2});
  CHECK(content_vector(column_tableau(P("2,2"))) == std::vector<int>{0, -1, 1, 0});
}

TEST_CASE("Gamma construction and the figure of section 3") {
  StandardTableau M = StandardTableau::parse("1,2/3");
  StandardTableau Gamma = build_Gamma(P("3,2"), P("2,1"), IndexSequence::rows({2, 1}), M);
  CHECK(Gamma.str() == "6,7,2,4/8,1,3,5");
  CHECK(Gamma.shape() == P("4,4"));

  CHECK(build_Gamma(P("1"), P(""), IndexSequence::rows({1}), StandardTableau()).str() == "1");
  CHECK(build_Gamma(P("1,1"), P("1"), IndexSequence::rows({1, 2}),
                    StandardTableau::parse("1"))
            .str() == "3,1/2");
}

TEST_CASE("Gamma is standard under the reordered chain for all small cases") {
  for (int l = 1; l <= 6; ++l)
    for (int m = 0; l + m <= 6; ++m)
      for (const Partition& lam : Partition::all(l))
        for (const Partition& mu : Partition::all(m))
          for (const IndexSequence& a :
               enumerate_index_sequences(lam, mu, IndexSequence::Kind::Rows))
            for (const StandardTableau& M : enumerate_standard(mu)) {
              // Construction throws if standardness fails.
              StandardTableau Gamma = build_Gamma(lam, mu, a, M);
              CHECK(Gamma.size() == l + m);
              StandardTableau nat = relabel_to_natural(Gamma, l, m);
              CHECK(nat.order().is_natural());
            }
}

TEST_CASE("reflection") {
  CHECK(reflect(column_tableau(P("1,1,1"))).str() == "1,2,3");
  CHECK(reflect(column_tableau(P("3,2"))).str() == "1,2/3,4/5");
  CHECK(reflect(StandardTableau::parse("1")).str() == "1");

  for (const Partition& shape : {P("3,2"), P("2,2,1"), P("4,1")})
    for (const StandardTableau& t : enumerate_standard(shape)) {
      CHECK(reflect(reflect(t)) == t);
      std::vector<int> c = content_vector(t);
      std::vector<int> cr = content_vector(reflect(t));
      for (size_t i = 0; i < c.size(); ++i) CHECK(cr[i] == -c[i]);
    }
}

TEST_CASE("Theta construction") {
  CHECK(build_Theta(StandardTableau::parse("1"), 1).str() == "1/2");
  CHECK(build_Theta(StandardTableau::parse("1,2"), 2).str() == "1,2/3,4");
  CHECK(build_Theta(StandardTableau::parse("1,3,5/2,4"), 2).str() == "1,3,5/2,4/6,7");
  CHECK_THROWS_AS(build_Theta(StandardTableau::parse("1,3,5/2,4"), 3), PreconditionError);
}
