#include "doctest.h"

#include "fibered/errors.hpp"
#include "fibered/rng.hpp"
#include "fibered/surface.hpp"
#include "fibered/words.hpp"

using namespace fibered;

// the oracle is the independent ground truth here; its frozen values come
// first and the dehn path is checked against them afterwards

TEST_CASE("oracle certifies the relator with count +1") {
  surface_context ctx(2);
  oracle_limits lim;
  lim.max_insertions = 2;
  auto r = ctx.oracle_count(ctx.relator(), lim);
  REQUIRE(r.has_value());
  CHECK(*r == 1);
}

TEST_CASE("oracle certifies the inverse relator with count -1") {
  surface_context ctx(2);
  oracle_limits lim;
  lim.max_insertions = 2;
  auto r = ctx.oracle_count(ctx.relator().inverse(), lim);
  REQUIRE(r.has_value());
  CHECK(*r == -1);
}

TEST_CASE("oracle nets zero on relator times inverse rotation") {
  surface_context ctx(2);
  free_word w = ctx.relator() * ctx.rotations()[3].word.inverse();
  oracle_limits lim;
  lim.max_insertions = 3;
  lim.max_word_len = 40;
  auto r = ctx.oracle_count(w, lim);
  REQUIRE(r.has_value());
  CHECK(*r == 0);
}

TEST_CASE("oracle sees through conjugation") {
  surface_context ctx(2);
  free_word x = parse_surface_word("a1 b2", 2);
  oracle_limits lim;
  lim.max_insertions = 2;
  auto r = ctx.oracle_count(conjugate(ctx.relator(), x), lim);
  REQUIRE(r.has_value());
  CHECK(*r == 1);
}

TEST_CASE("oracle gives no verdict on a short nontrivial word") {
  surface_context ctx(2);
  oracle_limits lim;
  lim.max_insertions = 2;
  CHECK_FALSE(ctx.oracle_count(parse_surface_word("a1", 2), lim).has_value());
  CHECK(ctx.oracle_count(free_word(), lim) == 0);
}

TEST_CASE("oracle handles the genus one relator both ways") {
  surface_context ctx(1);
  oracle_limits lim;
  lim.max_insertions = 3;
  CHECK(ctx.oracle_count(ctx.relator(), lim) == 1);
  CHECK(ctx.oracle_count(ctx.relator().inverse(), lim) == -1);
  // b a ~b ~a equals the inverse relator rotated
  CHECK(ctx.oracle_count(parse_surface_word("b1 a1 ~b1 ~a1", 1), lim) == -1);
  free_word sq = ctx.relator() * ctx.relator();
  lim.max_word_len = 24;
  CHECK(ctx.oracle_count(sq, lim) == 2);
}

TEST_CASE("oracle enforces its state budget") {
  surface_context ctx(2);
  oracle_limits lim;
  lim.max_insertions = 4;
  lim.max_states = 50;
  lim.max_word_len = 60;
  CHECK_THROWS_AS(ctx.oracle_count(parse_surface_word("a1 b1 a2", 2), lim), resource_error);
}

TEST_CASE("trivial closure covers rotations and matches the oracle") {
  surface_context ctx(1);
  auto closure = ctx.trivial_closure(8, 10, 400000);
  CHECK(closure.at(ctx.relator()) == 1);
  CHECK(closure.at(ctx.relator().inverse()) == -1);
  for (const auto& rot : ctx.rotations()) {
    CHECK(closure.at(rot.word) == rot.tag);
  }
  CHECK(closure.at(free_word()) == 0);
  CHECK(closure.at(ctx.relator() * ctx.relator()) == 2);
  CHECK(closure.count(parse_surface_word("a1", 1)) == 0);
  CHECK(closure.count(parse_surface_word("a1 b1", 1)) == 0);

  // spot agreement with the per-word search
  oracle_limits lim;
  lim.max_insertions = 4;
  lim.max_word_len = 14;
  int checked = 0;
  for (const auto& [word, count] : closure) {
    if (word.size() != 4 && word.size() != 6) continue;
    auto r = ctx.oracle_count(word, lim);
    REQUIRE(r.has_value());
    CHECK(*r == count);
    if (++checked == 20) break;
  }
  CHECK(checked == 20);
}

TEST_CASE("rotation table has the advertised shape") {
  for (int g = 1; g <= 3; ++g) {
    surface_context ctx(g);
    CHECK(ctx.relator().size() == 4u * g);
    CHECK(ctx.rotations().size() == 8u * g);
    for (const auto& rot : ctx.rotations()) {
      CHECK(rot.word.size() == 4u * g);
      CHECK(cyclic_reduce(rot.word) == rot.word);
    }
    CHECK(ctx.rotations()[0].word == ctx.relator());
    CHECK(ctx.rotations()[0].tag == 1);
    CHECK(ctx.rotations()[4 * g].word == ctx.relator().inverse());
    CHECK(ctx.rotations()[4 * g].tag == -1);
  }
}

TEST_CASE("dehn reduces the relator to nothing with count +1") {
  surface_context ctx(2);
  auto r = ctx.dehn_reduce(ctx.relator());
  CHECK(r.residual.empty());
  CHECK(r.relator_count == 1);
}

TEST_CASE("dehn on the empty word") {
  surface_context ctx(2);
  auto r = ctx.dehn_reduce(free_word());
  CHECK(r.residual.empty());
  CHECK(r.relator_count == 0);
}

TEST_CASE("dehn sees through conjugation") {
  surface_context ctx(2);
  free_word x = parse_surface_word("a1 b2", 2);
  auto r = ctx.dehn_reduce(conjugate(ctx.relator(), x));
  CHECK(r.residual.empty());
  CHECK(r.relator_count == 1);
}

TEST_CASE("dehn handles inverse and powers") {
  surface_context ctx(2);
  CHECK(ctx.dehn_reduce(ctx.relator().inverse()).relator_count == -1);
  CHECK(ctx.dehn_reduce(ctx.relator().inverse()).residual.empty());
  free_word sq = ctx.relator() * ctx.relator();
  auto r = ctx.dehn_reduce(sq);
  CHECK(r.residual.empty());
  CHECK(r.relator_count == 2);
  free_word mix = ctx.relator() * ctx.relator().inverse();
  CHECK(ctx.dehn_reduce(mix).relator_count == 0);
}

TEST_CASE("dehn leaves nontrivial words alone") {
  surface_context ctx(2);
  auto r = ctx.dehn_reduce(parse_surface_word("a1 b1 a2", 2));
  CHECK(r.residual.size() == 3);
  CHECK(r.relator_count == 0);
  auto s = ctx.dehn_reduce(parse_surface_word("a1 a1 a1", 2));
  CHECK_FALSE(s.residual.empty());
}

TEST_CASE("dehn rejects genus one") {
  surface_context ctx(1);
  CHECK_THROWS_AS(ctx.dehn_reduce(parse_surface_word("a1", 1)), context_error);
}

TEST_CASE("alphabet beyond the genus is rejected") {
  surface_context ctx(2);
  free_word w = parse_surface_word("a3", 3);
  CHECK_THROWS_AS(ctx.dehn_reduce(w), precondition_error);
  CHECK_THROWS_AS(ctx.is_trivial(w), precondition_error);
  CHECK_THROWS_AS(ctx.oracle_count(w), precondition_error);
}

TEST_CASE("dehn and oracle agree on trivial words, counts included") {
  surface_context ctx(2);
  rng r(2026);
  oracle_limits lim;
  lim.max_insertions = 3;
  lim.max_word_len = 36;
  int certified = 0;
  for (int i = 0; i < 30; ++i) {
    // conjugates of tagged rotations are trivial by construction
    const auto& rot = ctx.rotations()[r.below(ctx.rotations().size())];
    free_word x = random_reduced_word(r, 2, 1 + r.below(3));
    free_word w = conjugate(rot.word, x);
    auto d = ctx.dehn_reduce(w);
    REQUIRE(d.residual.empty());
    CHECK(d.relator_count == rot.tag);
    auto o = ctx.oracle_count(w, lim);
    REQUIRE(o.has_value());
    CHECK(*o == d.relator_count);
    ++certified;
  }
  CHECK(certified == 30);
}

TEST_CASE("oracle never certifies a word dehn calls nontrivial") {
  surface_context ctx(2);
  rng r(99);
  oracle_limits lim;
  lim.max_insertions = 2;
  for (int i = 0; i < 40; ++i) {
    free_word w = random_reduced_word(r, 2, 4 + r.below(9));
    auto d = ctx.dehn_reduce(w);
    auto o = ctx.oracle_count(w, lim);
    if (o.has_value()) {
      CHECK(d.residual.empty());
      CHECK(*o == d.relator_count);
    }
  }
}

TEST_CASE("dehn count ignores the conjugator on trivial words") {
  surface_context ctx(2);
  rng r(7);
  for (int i = 0; i < 20; ++i) {
    free_word x = random_reduced_word(r, 2, 1 + r.below(4));
    free_word w = ctx.relator() * conjugate(ctx.relator().inverse(), random_reduced_word(r, 2, 2));
    CHECK(ctx.dehn_reduce(conjugate(w, x)).relator_count == ctx.dehn_reduce(w).relator_count);
  }
}

TEST_CASE("surface equality") {
  surface_context g2(2);
  CHECK(g2.equal(g2.relator(), free_word()));
  CHECK_FALSE(g2.equal(parse_surface_word("a1 b1", 2), parse_surface_word("b1 a1", 2)));
  CHECK(g2.is_trivial(conjugate(g2.relator(), parse_surface_word("b2 a1", 2))));

  surface_context g1(1);
  CHECK(g1.is_trivial(g1.relator()));
  CHECK(g1.equal(parse_surface_word("a1 b1", 1), parse_surface_word("b1 a1", 1)));
  CHECK_FALSE(g1.is_trivial(parse_surface_word("a1", 1)));
  CHECK_FALSE(g1.equal(parse_surface_word("a1 a1", 1), parse_surface_word("a1", 1)));
}

TEST_CASE("cyclic reduce split returns a valid conjugator") {
  free_word w = parse_surface_word("b1 a1 ~b1", 1);
  auto [core, conj] = cyclic_reduce_split(w);
  CHECK(format_word(core) == "a1");
  CHECK(format_word(conj) == "b1");
  CHECK(conj * core * conj.inverse() == w);

  rng r(5);
  for (int i = 0; i < 25; ++i) {
    free_word u = random_reduced_word(r, 2, r.below(10));
    auto [c2, x2] = cyclic_reduce_split(u);
    CHECK(x2 * c2 * x2.inverse() == u);
    CHECK(cyclic_reduce(c2) == c2);
  }
}
