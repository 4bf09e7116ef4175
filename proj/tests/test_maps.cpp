#include "doctest.h"

#include "fibered/bundle.hpp"
#include "fibered/endo.hpp"
#include "fibered/errors.hpp"
#include "fibered/homology.hpp"
#include "fibered/maps.hpp"
#include "fibered/rng.hpp"
#include "fibered/surface.hpp"
#include "fibered/words.hpp"

using namespace fibered;

namespace {

homology_class basis_class(int genus, int idx) {
  homology_class x = zero_homology(genus);
  x.c[idx] = 1;
  return x;
}

free_endo conj_by_relator_power(const surface_context& s, int m) {
  free_word cm;
  for (int t = 0; t < (m < 0 ? -m : m); ++t) {
    cm = cm * (m > 0 ? s.relator() : s.relator().inverse());
  }
  std::vector<free_word> images;
  for (int code = 1; code <= 2 * s.genus(); ++code) {
    images.push_back(conjugate(free_word::single(static_cast<letter>(code)), cm));
  }
  return {s.genus(), std::move(images)};
}

}  // namespace

TEST_CASE("iota relabels and sends the relator into the center") {
  bundle_context ctx(2, 3);
  bundle_element x = iota(ctx, parse_surface_word("a1 ~b2", 2));
  CHECK(ctx.format(x) == "a1 ~b2");
  CHECK(x.zexp == 0);
  CHECK(ctx.eq(iota(ctx, ctx.surface().relator()), ctx.z_power(3)));
  CHECK(ctx.is_identity(iota(ctx, free_word())));
}

TEST_CASE("transvection on basis classes follows the pairing") {
  bundle_context ctx(2, 1);
  bundle_endo tb1 = transvection(ctx, basis_class(2, 1));  // gamma = [b1]
  CHECK(ctx.eq(tb1.image(1), ctx.parse("a1 z")));  // <a1, b1> = 1
  CHECK(ctx.eq(tb1.image(2), ctx.parse("b1")));
  CHECK(ctx.eq(tb1.image(3), ctx.parse("a2")));
  bundle_endo ta1 = transvection(ctx, basis_class(2, 0));  // gamma = [a1]
  CHECK(ctx.eq(ta1.image(2), ctx.parse("b1 ~z")));  // <b1, a1> = -1
  CHECK(ctx.eq(ta1.image(1), ctx.parse("a1")));
  CHECK(is_identity_endo(ctx, transvection(ctx, zero_homology(2))));
}

TEST_CASE("transvections are additive and sit in the kernel") {
  bundle_context ctx(2, 2);
  rng r(51);
  for (int i = 0; i < 10; ++i) {
    homology_class g1 = zero_homology(2), g2 = zero_homology(2);
    for (auto& v : g1.c) v = static_cast<long long>(r.below(7)) - 3;
    for (auto& v : g2.c) v = static_cast<long long>(r.below(7)) - 3;
    bundle_endo lhs = transvection(ctx, add(g1, g2));
    bundle_endo rhs = compose(ctx, transvection(ctx, g1), transvection(ctx, g2));
    CHECK(endo_eq(ctx, lhs, rhs));
    CHECK(endo_eq(ctx.surface(), phi(ctx, lhs), free_endo(2)) == true);
    CHECK(tau(ctx, transvection(ctx, g1)) == poincare_delta(g1));
    CHECK(preserves_bundle_relation(ctx, lhs));
    CHECK(is_symplectic_action(action_matrix(lhs)) == 1);
  }
}

TEST_CASE("fiber twist is the section of tau") {
  bundle_context ctx(3, 2);
  rng r(53);
  for (int i = 0; i < 8; ++i) {
    cohomology_class phi_fn = zero_cohomology(3);
    for (auto& v : phi_fn.c) v = static_cast<long long>(r.below(9)) - 4;
    CHECK(tau(ctx, fiber_twist(ctx, phi_fn)) == phi_fn);
  }
  CHECK(tau(ctx, bundle_endo(3)) == zero_cohomology(3));
}

TEST_CASE("tau rejects endos outside the kernel") {
  bundle_context ctx(2, 1);
  CHECK_THROWS_AS(tau(ctx, inner(ctx, ctx.parse("a1"))), precondition_error);
}

TEST_CASE("tau is additive under composition") {
  bundle_context ctx(2, 3);
  rng r(59);
  for (int i = 0; i < 10; ++i) {
    cohomology_class p1 = zero_cohomology(2), p2 = zero_cohomology(2);
    for (auto& v : p1.c) v = static_cast<long long>(r.below(7)) - 3;
    for (auto& v : p2.c) v = static_cast<long long>(r.below(7)) - 3;
    bundle_endo e1 = fiber_twist(ctx, p1), e2 = fiber_twist(ctx, p2);
    CHECK(tau(ctx, compose(ctx, e1, e2)) == add(p1, p2));
  }
}

TEST_CASE("inner automorphisms compose by multiplying conjugators") {
  bundle_context ctx(2, 2);
  CHECK(is_identity_endo(ctx, inner(ctx, ctx.identity())));
  CHECK(is_identity_endo(ctx, inner(ctx, ctx.z_power(4))));
  rng r(61);
  for (int i = 0; i < 8; ++i) {
    bundle_element x = ctx.from_word(random_reduced_word(r, 2, r.below(5)),
                                     static_cast<long long>(r.below(3)) - 1);
    bundle_element y = ctx.from_word(random_reduced_word(r, 2, r.below(5)), 0);
    CHECK(endo_eq(ctx, compose(ctx, inner(ctx, x), inner(ctx, y)), inner(ctx, ctx.mul(x, y))));
    CHECK(is_inner_by(ctx, inner(ctx, x), x));
    CHECK(preserves_bundle_relation(ctx, inner(ctx, x)));
    CHECK(action_matrix(inner(ctx, x)) == identity_matrix(4));
  }
}

TEST_CASE("transvections commute with inner automorphisms") {
  bundle_context ctx(2, 2);
  rng r(67);
  for (int i = 0; i < 8; ++i) {
    homology_class gamma = zero_homology(2);
    for (auto& v : gamma.c) v = static_cast<long long>(r.below(5)) - 2;
    bundle_element x = ctx.from_word(random_reduced_word(r, 2, 1 + r.below(4)), 0);
    bundle_endo t = transvection(ctx, gamma);
    bundle_endo cx = inner(ctx, x);
    CHECK(endo_eq(ctx, compose(ctx, t, cx), compose(ctx, cx, t)));
  }
}

TEST_CASE("push table entries at genus one are the identity") {
  push_table tab(1);
  free_endo id(1);
  for (letter l : {letter(1), letter(2), letter(-1), letter(-2)}) {
    for (int i = 0; i < 2; ++i) CHECK(tab.entry(l).images()[i] == id.images()[i]);
  }
}

TEST_CASE("push table genus two golden entries") {
  push_table tab(2);
  // pushing along alpha_1 drags beta_1 through the relator
  CHECK(format_word(tab.entry(1).image(2)) == "b2 a2 ~b2 ~a2 b1");
  CHECK(format_word(tab.entry(1).image(1)) == "a1");
  // pushing along beta_1 drags alpha_1 the other way
  CHECK(format_word(tab.entry(2).image(1)) == "a1 b1 ~a1 ~b1 a2 b2 ~a2 ~b2 b1 a1 ~b1");
  CHECK(format_word(tab.entry(2).image(2)) == "b1");
  // spectator handles ride conjugators on both sides
  CHECK(format_word(tab.entry(3).image(1)) ==
        "a2 b2 a2 ~b2 ~a2 b1 a1 ~b1 a1 b1 ~a1 ~b1 a2 b2 ~a2 ~b2 ~a2");
}

TEST_CASE("push is trivial on the empty word and inverts cleanly") {
  push_table tab(2);
  free_endo id(2);
  for (int i = 0; i < 4; ++i) CHECK(tab.push(free_word()).images()[i] == id.images()[i]);
  rng r(71);
  for (int t = 0; t < 6; ++t) {
    free_word w = random_reduced_word(r, 2, 1 + r.below(5));
    free_endo fwd = tab.push(w);
    free_endo bwd = tab.push(w.inverse());
    free_endo both = compose(fwd, bwd);
    for (int i = 0; i < 4; ++i) CHECK(both.images()[i] == id.images()[i]);
  }
}

TEST_CASE("push concatenation matches composition exactly") {
  push_table tab(2);
  rng r(73);
  for (int t = 0; t < 6; ++t) {
    free_word u = random_reduced_word(r, 2, r.below(4));
    free_word v = random_reduced_word(r, 2, r.below(4));
    free_endo lhs = tab.push(u * v);
    free_endo rhs = compose(tab.push(u), tab.push(v));
    for (int i = 0; i < 4; ++i) CHECK(lhs.images()[i] == rhs.images()[i]);
  }
}

TEST_CASE("pushes fix the relator and act trivially on homology") {
  for (int g = 1; g <= 3; ++g) {
    surface_context s(g);
    push_table tab(g);
    rng r(79 + g);
    for (int t = 0; t < 5; ++t) {
      free_endo e = tab.push(random_reduced_word(r, g, 1 + r.below(5)));
      CHECK(fixes_c(s, e));
      CHECK(action_matrix(e) == identity_matrix(2 * g));
    }
  }
}

TEST_CASE("pushing around the relator is conjugation by a pinned relator power") {
  // exponent found by exact search; equals 2 - 2g on the computed range
  const int pinned[] = {0, 0, -2, -4};
  for (int g = 1; g <= 3; ++g) {
    surface_context s(g);
    push_table tab(g);
    free_endo e = tab.push(s.relator());
    free_endo want = conj_by_relator_power(s, pinned[g]);
    for (int i = 0; i < 2 * g; ++i) CHECK(e.images()[i] == want.images()[i]);
  }
}

TEST_CASE("sigma lifts the identity and kills relator conjugation") {
  bundle_context ctx(2, 3);
  CHECK(is_identity_endo(ctx, sigma(ctx, free_endo(2))));
  free_endo cc = conj_by_relator_power(ctx.surface(), 1);
  CHECK(fixes_c(ctx.surface(), cc));
  CHECK(is_identity_endo(ctx, sigma(ctx, cc)));
}

TEST_CASE("sigma demands the relator fixed on the nose") {
  bundle_context ctx(2, 1);
  std::vector<free_word> images;
  for (int code = 1; code <= 4; ++code) {
    images.push_back(conjugate(free_word::single(static_cast<letter>(code)),
                               parse_surface_word("a1", 2)));
  }
  free_endo conj_a1(2, images);
  CHECK_FALSE(fixes_c(ctx.surface(), conj_a1));
  CHECK_THROWS_AS(sigma(ctx, conj_a1), precondition_error);
}

TEST_CASE("sigma is a homomorphism on push composites") {
  bundle_context ctx(2, 2);
  push_table tab(2);
  rng r(83);
  for (int t = 0; t < 5; ++t) {
    free_endo f1 = tab.push(random_reduced_word(r, 2, 1 + r.below(3)));
    free_endo f2 = tab.push(random_reduced_word(r, 2, 1 + r.below(3)));
    bundle_endo lhs = sigma(ctx, compose(f1, f2));
    bundle_endo rhs = compose(ctx, sigma(ctx, f1), sigma(ctx, f2));
    CHECK(endo_eq(ctx, lhs, rhs));
  }
}

TEST_CASE("phi undoes sigma and collapses the kernel") {
  bundle_context ctx(2, 3);
  push_table tab(2);
  rng r(89);
  for (int t = 0; t < 5; ++t) {
    free_endo f = tab.push(random_reduced_word(r, 2, 1 + r.below(4)));
    CHECK(endo_eq(ctx.surface(), phi(ctx, sigma(ctx, f)), f));
  }
  homology_class gamma = basis_class(2, 2);
  CHECK(endo_eq(ctx.surface(), phi(ctx, transvection(ctx, gamma)), free_endo(2)));

  // phi of conjugation by a lift is conjugation by the projection
  free_word t = parse_surface_word("a1 b2", 2);
  free_endo downstairs = phi(ctx, inner(ctx, iota(ctx, t)));
  std::vector<free_word> images;
  for (int code = 1; code <= 4; ++code) {
    images.push_back(conjugate(free_word::single(static_cast<letter>(code)), t));
  }
  CHECK(endo_eq(ctx.surface(), downstairs, free_endo(2, images)));
}

TEST_CASE("lifted pushes factor as inner times transvection") {
  // single generators, both handles, two contexts
  for (auto [g, k] : {std::pair{2, 1}, std::pair{2, 3}, std::pair{1, 2}}) {
    bundle_context ctx(g, k);
    push_table tab(g);
    for (int code = 1; code <= 2 * g; ++code) {
      free_word t = free_word::single(static_cast<letter>(code));
      bundle_endo lhs = sigma(ctx, tab.push(t));
      homology_class kt = scale(k, abelianize(t, g));
      bundle_endo rhs = compose(ctx, inner(ctx, iota(ctx, t)), transvection(ctx, kt));
      CHECK(endo_eq(ctx, lhs, rhs));
    }
  }
}

TEST_CASE("the factorization survives a change of lift") {
  bundle_context ctx(2, 2);
  push_table tab(2);
  free_word t = parse_surface_word("a1 b2", 2);
  free_word u = parse_surface_word("b1", 2);
  free_word other_lift = u * ctx.surface().relator() * u.inverse() * t;
  bundle_endo first = sigma(ctx, tab.push(t));
  bundle_endo second = sigma(ctx, tab.push(other_lift));
  CHECK(endo_eq(ctx, first, second));
  // and conjugation upstairs only sees the image of the lift up to center
  CHECK(endo_eq(ctx, inner(ctx, iota(ctx, t)), inner(ctx, iota(ctx, other_lift))));
}

TEST_CASE("every named construction lands in the automorphism class") {
  bundle_context ctx(2, 2);
  push_table tab(2);
  rng r(97);
  for (int t = 0; t < 4; ++t) {
    bundle_endo candidates[] = {
        sigma(ctx, tab.push(random_reduced_word(r, 2, 1 + r.below(4)))),
        transvection(ctx, abelianize(random_reduced_word(r, 2, 3), 2)),
        inner(ctx, ctx.from_word(random_reduced_word(r, 2, 3), 1)),
    };
    for (const auto& e : candidates) {
      CHECK(preserves_bundle_relation(ctx, e));
      CHECK(is_symplectic_action(action_matrix(e)) == 1);
    }
  }
}
