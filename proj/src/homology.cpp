#include "fibered/homology.hpp"

#include "fibered/errors.hpp"

namespace fibered {

namespace {

void check_even_dim(std::size_t n) {
  if (n == 0 || n % 2 != 0) throw precondition_error("homology vectors have length 2g");
}

}  // namespace

homology_class zero_homology(int genus) {
  return {std::vector<long long>(2 * genus, 0)};
}

homology_class abelianize(const free_word& w, int genus) {
  if (max_handle(w) > genus) throw precondition_error("word uses handles beyond the genus");
  homology_class out = zero_homology(genus);
  for (letter l : w.letters()) {
    int idx = (l < 0 ? -l : l) - 1;
    out.c[idx] += l < 0 ? -1 : 1;
  }
  return out;
}

homology_class add(const homology_class& x, const homology_class& y) {
  if (x.c.size() != y.c.size()) throw precondition_error("dimension mismatch");
  homology_class out = x;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += y.c[i];
  return out;
}

homology_class scale(long long m, const homology_class& x) {
  homology_class out = x;
  for (auto& v : out.c) v *= m;
  return out;
}

cohomology_class zero_cohomology(int genus) {
  return {std::vector<long long>(2 * genus, 0)};
}

cohomology_class add(const cohomology_class& x, const cohomology_class& y) {
  if (x.c.size() != y.c.size()) throw precondition_error("dimension mismatch");
  cohomology_class out = x;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += y.c[i];
  return out;
}

cohomology_class scale(long long m, const cohomology_class& x) {
  cohomology_class out = x;
  for (auto& v : out.c) v *= m;
  return out;
}

long long intersection(const homology_class& x, const homology_class& y) {
  if (x.c.size() != y.c.size()) throw precondition_error("dimension mismatch");
  check_even_dim(x.c.size());
  long long s = 0;
  for (std::size_t j = 0; j + 1 < x.c.size(); j += 2) {
    s += x.c[j] * y.c[j + 1] - x.c[j + 1] * y.c[j];
  }
  return s;
}

cohomology_class poincare_delta(const homology_class& x) {
  check_even_dim(x.c.size());
  cohomology_class out{std::vector<long long>(x.c.size(), 0)};
  for (std::size_t j = 0; j + 1 < x.c.size(); j += 2) {
    out.c[j] = x.c[j + 1];       // <a_i, x>
    out.c[j + 1] = -x.c[j];      // <b_i, x>
  }
  return out;
}

homology_class poincare_delta_inverse(const cohomology_class& phi) {
  check_even_dim(phi.c.size());
  homology_class out{std::vector<long long>(phi.c.size(), 0)};
  for (std::size_t j = 0; j + 1 < phi.c.size(); j += 2) {
    out.c[j] = -phi.c[j + 1];
    out.c[j + 1] = phi.c[j];
  }
  return out;
}

long long evaluate(const cohomology_class& phi, const homology_class& x) {
  if (phi.c.size() != x.c.size()) throw precondition_error("dimension mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < phi.c.size(); ++i) s += phi.c[i] * x.c[i];
  return s;
}

std::optional<int> is_symplectic_action(const int_matrix& m) {
  std::size_t n = m.size();
  check_even_dim(n);
  for (const auto& row : m) {
    if (row.size() != n) throw precondition_error("matrix is not square");
  }
  // t = M^T J M, built via (J M) first; J is block diagonal [[0,1],[-1,0]]
  int_matrix jm(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    jm[i] = m[i + 1];
    for (std::size_t j = 0; j < n; ++j) jm[i + 1][j] = -m[i][j];
  }
  bool plus = true, minus = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long long t = 0;
      for (std::size_t l = 0; l < n; ++l) t += m[l][i] * jm[l][j];
      long long want = 0;
      if (j == i + 1 && i % 2 == 0) want = 1;
      if (j + 1 == i && j % 2 == 0) want = -1;
      if (t != want) plus = false;
      if (t != -want) minus = false;
    }
  }
  if (plus) return 1;
  if (minus) return -1;
  return std::nullopt;
}

int_matrix identity_matrix(int n) {
  int_matrix m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

int_matrix matrix_mul(const int_matrix& x, const int_matrix& y) {
  std::size_t n = x.size();
  if (y.size() != n) throw precondition_error("dimension mismatch");
  int_matrix out(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      long long v = x[i][l];
      if (v == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += v * y[l][j];
    }
  }
  return out;
}

}  // namespace fibered
