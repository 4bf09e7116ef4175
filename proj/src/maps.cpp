#include "fibered/maps.hpp"

#include <stdexcept>

#include "fibered/errors.hpp"
#include "fibered/surface.hpp"

namespace fibered {

bundle_element iota(const bundle_context& ctx, const free_word& w) {
  return ctx.from_word(w, 0);
}

bundle_endo sigma(const bundle_context& ctx, const free_endo& f) {
  if (f.genus() != ctx.genus()) throw precondition_error("genus mismatch");
  if (!fixes_c(ctx.surface(), f))
    throw precondition_error("lift needs the relator fixed exactly, not up to conjugacy");
  std::vector<bundle_element> images;
  for (const auto& im : f.images()) images.push_back(iota(ctx, im));
  return {ctx.genus(), std::move(images)};
}

free_endo phi(const bundle_context& ctx, const bundle_endo& e) {
  if (e.genus() != ctx.genus()) throw precondition_error("genus mismatch");
  std::vector<free_word> images;
  for (const auto& im : e.images()) images.push_back(ctx.project(im));
  return {ctx.genus(), std::move(images)};
}

cohomology_class tau(const bundle_context& ctx, const bundle_endo& e) {
  if (e.genus() != ctx.genus()) throw precondition_error("genus mismatch");
  const int n = 2 * ctx.genus();
  for (int code = 1; code <= n; ++code) {
    if (!ctx.surface().equal(e.image(static_cast<letter>(code)).word,
                             free_word::single(static_cast<letter>(code))))
      throw precondition_error("endo is not in the kernel of the projection");
  }
  cohomology_class out{std::vector<long long>(n, 0)};
  for (int code = 1; code <= n; ++code) {
    bundle_element gen{free_word::single(static_cast<letter>(code)), 0};
    out.c[code - 1] = ctx.z_exponent(ctx.mul(e.image(static_cast<letter>(code)), ctx.inv(gen)));
  }
  return out;
}

bundle_endo fiber_twist(const bundle_context& ctx, const cohomology_class& phi_fn) {
  const int n = 2 * ctx.genus();
  if (phi_fn.c.size() != static_cast<std::size_t>(n)) throw precondition_error("dimension mismatch");
  std::vector<bundle_element> images;
  for (int code = 1; code <= n; ++code) {
    images.push_back({free_word::single(static_cast<letter>(code)), phi_fn.c[code - 1]});
  }
  return {ctx.genus(), std::move(images)};
}

bundle_endo transvection(const bundle_context& ctx, const homology_class& gamma) {
  if (gamma.c.size() != static_cast<std::size_t>(2 * ctx.genus()))
    throw precondition_error("dimension mismatch");
  return fiber_twist(ctx, poincare_delta(gamma));
}

bundle_endo inner(const bundle_context& ctx, const bundle_element& x) {
  std::vector<bundle_element> images;
  for (int code = 1; code <= 2 * ctx.genus(); ++code) {
    bundle_element gen{free_word::single(static_cast<letter>(code)), 0};
    images.push_back(ctx.mul(ctx.mul(x, gen), ctx.inv(x)));
  }
  return {ctx.genus(), std::move(images)};
}

namespace {

// one basis loop pushed around handle i; the two directions conjugate the
// handle pair through the relator so that the full relator product survives
// letter by letter, and the loops before the handle see a different
// conjugator than the loops after it
struct push_images {
  std::vector<free_word> forward;
  std::vector<free_word> backward;
};

push_images alpha_entry(int genus, int i, const free_word& c) {
  free_word a = free_word::single(alpha_letter(i));
  free_word b = free_word::single(beta_letter(i));
  free_word ci = c.inverse();
  push_images out;
  out.forward.resize(2 * genus);
  out.backward.resize(2 * genus);
  for (int j = 1; j <= genus; ++j) {
    for (letter y : {alpha_letter(j), beta_letter(j)}) {
      free_word yw = free_word::single(y);
      free_word fwd, bwd;
      if (j == i) {
        if (!is_beta(y)) {
          fwd = yw;
          bwd = yw;
        } else {
          fwd = ci * a * b * a.inverse();
          bwd = a.inverse() * c * b * a;
        }
      } else if (j < i) {
        fwd = a * ci * yw * c * a.inverse();
        bwd = c * a.inverse() * yw * a * ci;
      } else {
        fwd = ci * a * yw * a.inverse() * c;
        bwd = a.inverse() * c * yw * ci * a;
      }
      out.forward[y - 1] = fwd;
      out.backward[y - 1] = bwd;
    }
  }
  return out;
}

push_images beta_entry(int genus, int i, const free_word& c) {
  free_word a = free_word::single(alpha_letter(i));
  free_word b = free_word::single(beta_letter(i));
  free_word ci = c.inverse();
  push_images out;
  out.forward.resize(2 * genus);
  out.backward.resize(2 * genus);
  for (int j = 1; j <= genus; ++j) {
    for (letter y : {alpha_letter(j), beta_letter(j)}) {
      free_word yw = free_word::single(y);
      free_word fwd, bwd;
      if (j == i) {
        if (is_beta(y)) {
          fwd = yw;
          bwd = yw;
        } else {
          fwd = c * b * a * b.inverse();
          bwd = b.inverse() * ci * a * b;
        }
      } else if (j < i) {
        fwd = c * b * yw * b.inverse() * ci;
        bwd = b.inverse() * ci * yw * c * b;
      } else {
        fwd = b * c * yw * ci * b.inverse();
        bwd = ci * b.inverse() * yw * b * c;
      }
      out.forward[y - 1] = fwd;
      out.backward[y - 1] = bwd;
    }
  }
  return out;
}

}  // namespace

push_table::push_table(int genus) : genus_(genus) {
  surface_context ctx(genus);
  const free_word& c = ctx.relator();
  pos_.reserve(2 * genus);
  neg_.reserve(2 * genus);
  for (int i = 1; i <= genus; ++i) {
    push_images pa = alpha_entry(genus, i, c);
    pos_.emplace_back(genus, std::move(pa.forward));
    neg_.emplace_back(genus, std::move(pa.backward));
    push_images pb = beta_entry(genus, i, c);
    pos_.emplace_back(genus, std::move(pb.forward));
    neg_.emplace_back(genus, std::move(pb.backward));
  }

  free_endo id(genus);
  for (int idx = 0; idx < 2 * genus; ++idx) {
    const free_endo& e = pos_[idx];
    const free_endo& f = neg_[idx];
    // the table is wrong if any of this fires; these are construction
    // invariants, not input validation
    if (!fixes_c(ctx, e) || !fixes_c(ctx, f)) throw std::logic_error("push entry moves the relator");
    if (action_matrix(e) != identity_matrix(2 * genus))
      throw std::logic_error("push entry acts on homology");
    free_endo ef = compose(e, f), fe = compose(f, e);
    for (int t = 0; t < 2 * genus; ++t) {
      if (ef.images()[t] != id.images()[t] || fe.images()[t] != id.images()[t])
        throw std::logic_error("push entry inverse fails");
    }
  }
}

const free_endo& push_table::entry(letter l) const {
  if (l == 0 || handle_of(l) > genus_) throw precondition_error("letter outside the table");
  return l > 0 ? pos_[l - 1] : neg_[-l - 1];
}

free_endo push_table::push(const free_word& t) const {
  if (max_handle(t) > genus_) throw precondition_error("word uses handles beyond the genus");
  free_endo acc(genus_);
  for (letter l : t.letters()) acc = compose(acc, entry(l));
  return acc;
}

}  // namespace fibered
