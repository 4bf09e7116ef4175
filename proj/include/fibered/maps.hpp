#pragma once

#include <vector>

#include "fibered/bundle.hpp"
#include "fibered/endo.hpp"
#include "fibered/homology.hpp"
#include "fibered/words.hpp"

namespace fibered {

// alpha_i -> A_i, beta_i -> B_i with fiber exponent zero
bundle_element iota(const bundle_context& ctx, const free_word& w);

// lift of a relator-fixing free endo: generators go to iota of their images,
// z stays z; requires exact f(c) = c, a conjugate is not enough
bundle_endo sigma(const bundle_context& ctx, const free_endo& f);

// generator-wise projection back to the surface level
free_endo phi(const bundle_context& ctx, const bundle_endo& e);

// fiber exponents (m1, n1, ..., mg, ng) of an endo projecting to the identity
cohomology_class tau(const bundle_context& ctx, const bundle_endo& e);

// generator x_i picks up z^(phi value on x_i); these are exactly the endos
// tau inverts
bundle_endo fiber_twist(const bundle_context& ctx, const cohomology_class& phi_fn);

// w -> w * z^<[w], gamma>; equals fiber_twist of the duality functional
bundle_endo transvection(const bundle_context& ctx, const homology_class& gamma);

// conjugation w -> x w x^-1; the direction is pinned by the requirement that
// lifted point pushes factor as inner times transvection, and the bootstrap
// verifier reports which direction validates
bundle_endo inner(const bundle_context& ctx, const bundle_element& x);

// word images of the point push along each standard generator, with certified
// inverses; entries fix the relator exactly and act trivially on homology,
// both enforced at construction
class push_table {
 public:
  explicit push_table(int genus);

  int genus() const { return genus_; }
  const free_endo& entry(letter l) const;  // negative letters give the inverse entry

  // composite along the letters of t, rightmost letter applied first
  free_endo push(const free_word& t) const;

 private:
  int genus_;
  std::vector<free_endo> pos_, neg_;
};

}  // namespace fibered
