#pragma once

#include <vector>

#include "fibered/bundle.hpp"
#include "fibered/homology.hpp"
#include "fibered/surface.hpp"
#include "fibered/words.hpp"

namespace fibered {

// endomorphism of the free group on a1, b1, ..., ag, bg by generator images;
// index i holds the image of the positive letter with code i+1
class free_endo {
 public:
  explicit free_endo(int genus);  // identity
  free_endo(int genus, std::vector<free_word> images);

  int genus() const { return genus_; }
  const free_word& image(letter positive) const;
  const std::vector<free_word>& images() const { return images_; }

  free_word apply(const free_word& w) const;

 private:
  int genus_;
  std::vector<free_word> images_;
};

// compose(e1, e2) applies e2 first, matching functional notation e1 . e2
free_endo compose(const free_endo& e1, const free_endo& e2);
bool endo_eq(const surface_context& ctx, const free_endo& e1, const free_endo& e2);
// exact free-group equality of e(relator) and relator, not up to conjugacy
bool fixes_c(const surface_context& ctx, const free_endo& e);
int_matrix action_matrix(const free_endo& e);  // columns are abelianized images

// endomorphism of the bundle group; z maps to z, which every class in scope
// (lifts, transvections, inner automorphisms) does
class bundle_endo {
 public:
  explicit bundle_endo(int genus);  // identity
  bundle_endo(int genus, std::vector<bundle_element> images);

  int genus() const { return genus_; }
  const bundle_element& image(letter positive) const;
  const std::vector<bundle_element>& images() const { return images_; }

  bundle_element apply(const bundle_context& ctx, const bundle_element& x) const;

 private:
  int genus_;
  std::vector<bundle_element> images_;
};

bundle_endo compose(const bundle_context& ctx, const bundle_endo& e1, const bundle_endo& e2);
bool endo_eq(const bundle_context& ctx, const bundle_endo& e1, const bundle_endo& e2);
bool is_identity_endo(const bundle_context& ctx, const bundle_endo& e);
// product of commutators of the generator images lands back on z^k
bool preserves_bundle_relation(const bundle_context& ctx, const bundle_endo& e);
// e agrees with conjugation w -> x w x^-1 on every generator
bool is_inner_by(const bundle_context& ctx, const bundle_endo& e, const bundle_element& x);
int_matrix action_matrix(const bundle_endo& e);

}  // namespace fibered
