#pragma once

#include <optional>
#include <vector>

#include "fibered/words.hpp"

namespace fibered {

// basis [a1],[b1],...,[ag],[bg]; index 2(i-1) for [a_i], 2(i-1)+1 for [b_i]
struct homology_class {
  std::vector<long long> c;
  bool operator==(const homology_class&) const = default;
};

// functional values on the same basis
struct cohomology_class {
  std::vector<long long> c;
  bool operator==(const cohomology_class&) const = default;
};

using int_matrix = std::vector<std::vector<long long>>;

homology_class zero_homology(int genus);
homology_class abelianize(const free_word& w, int genus);
homology_class add(const homology_class& x, const homology_class& y);
homology_class scale(long long m, const homology_class& x);
cohomology_class zero_cohomology(int genus);
cohomology_class add(const cohomology_class& x, const cohomology_class& y);
cohomology_class scale(long long m, const cohomology_class& x);

// algebraic intersection form, <a_i, b_i> = +1
long long intersection(const homology_class& x, const homology_class& y);

// the functional w -> <w, x>; unimodular, inverse below
cohomology_class poincare_delta(const homology_class& x);
homology_class poincare_delta_inverse(const cohomology_class& phi);
long long evaluate(const cohomology_class& phi, const homology_class& x);

// M^T J M = J gives +1, = -J gives -1, anything else nothing
std::optional<int> is_symplectic_action(const int_matrix& m);

int_matrix identity_matrix(int n);
int_matrix matrix_mul(const int_matrix& x, const int_matrix& y);

}  // namespace fibered
