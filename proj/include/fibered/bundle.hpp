#pragma once

#include <string>

#include "fibered/surface.hpp"
#include "fibered/words.hpp"

namespace fibered {

// word * z^zexp; z is central, so the split form represents every element
struct bundle_element {
  free_word word;
  long long zexp = 0;
};

// genus one collected form a^p b^q z^r, obtained with the rule ba = ab z^-k
struct torus_normal_form {
  long long p = 0, q = 0, r = 0;
  bool operator==(const torus_normal_form&) const = default;
};

class bundle_context {
 public:
  bundle_context(int genus, int euler);  // (1, 0) is rejected

  int genus() const { return genus_; }
  int euler() const { return euler_; }
  const surface_context& surface() const { return surface_; }

  bundle_element identity() const { return {}; }
  bundle_element z_power(long long m) const { return {free_word(), m}; }
  bundle_element from_word(const free_word& w, long long zexp = 0) const;
  bundle_element relator_element() const { return {surface_.relator(), 0}; }

  bundle_element mul(const bundle_element& x, const bundle_element& y) const;
  bundle_element inv(const bundle_element& x) const;
  bool eq(const bundle_element& x, const bundle_element& y) const;
  bool is_identity(const bundle_element& x) const;

  free_word project(const bundle_element& x) const { return x.word; }
  bool is_central(const bundle_element& x) const;  // center is the z powers
  long long z_exponent(const bundle_element& x) const;  // only for central x

  torus_normal_form torus_form(const bundle_element& x) const;  // genus 1 only

  // word tokens extended with z and ~z, folded into zexp
  bundle_element parse(const std::string& text) const;
  std::string format(const bundle_element& x) const;

 private:
  int genus_;
  int euler_;
  surface_context surface_;

  void check(const bundle_element& x) const;
};

}  // namespace fibered
