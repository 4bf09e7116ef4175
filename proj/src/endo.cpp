#include "fibered/endo.hpp"

#include "fibered/errors.hpp"

namespace fibered {

namespace {

void check_genus_range(int genus) {
  if (genus < 1 || genus > 64) throw context_error("genus out of range");
}

}  // namespace

free_endo::free_endo(int genus) : genus_(genus) {
  check_genus_range(genus);
  for (int code = 1; code <= 2 * genus; ++code) {
    images_.push_back(free_word::single(static_cast<letter>(code)));
  }
}

free_endo::free_endo(int genus, std::vector<free_word> images)
    : genus_(genus), images_(std::move(images)) {
  check_genus_range(genus);
  if (images_.size() != static_cast<std::size_t>(2 * genus))
    throw precondition_error("need one image per generator");
  for (const auto& w : images_) {
    if (max_handle(w) > genus) throw precondition_error("image uses handles beyond the genus");
  }
}

const free_word& free_endo::image(letter positive) const {
  if (positive <= 0 || positive > 2 * genus_) throw precondition_error("not a positive generator");
  return images_[positive - 1];
}

free_word free_endo::apply(const free_word& w) const {
  if (max_handle(w) > genus_) throw precondition_error("word uses handles beyond the genus");
  free_word out;
  for (letter l : w.letters()) {
    const free_word& im = images_[(l < 0 ? -l : l) - 1];
    if (l > 0) {
      for (letter m : im.letters()) out.push(m);
    } else {
      const auto& ls = im.letters();
      for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push(inv(*it));
    }
  }
  return out;
}

free_endo compose(const free_endo& e1, const free_endo& e2) {
  if (e1.genus() != e2.genus()) throw precondition_error("genus mismatch");
  std::vector<free_word> images;
  for (const auto& im : e2.images()) images.push_back(e1.apply(im));
  return {e1.genus(), std::move(images)};
}

bool endo_eq(const surface_context& ctx, const free_endo& e1, const free_endo& e2) {
  if (e1.genus() != e2.genus() || e1.genus() != ctx.genus()) return false;
  for (int i = 0; i < 2 * ctx.genus(); ++i) {
    if (!ctx.equal(e1.images()[i], e2.images()[i])) return false;
  }
  return true;
}

bool fixes_c(const surface_context& ctx, const free_endo& e) {
  return e.apply(ctx.relator()) == ctx.relator();
}

int_matrix action_matrix(const free_endo& e) {
  int n = 2 * e.genus();
  int_matrix m(n, std::vector<long long>(n, 0));
  for (int j = 0; j < n; ++j) {
    homology_class col = abelianize(e.images()[j], e.genus());
    for (int i = 0; i < n; ++i) m[i][j] = col.c[i];
  }
  return m;
}

bundle_endo::bundle_endo(int genus) : genus_(genus) {
  check_genus_range(genus);
  for (int code = 1; code <= 2 * genus; ++code) {
    images_.push_back({free_word::single(static_cast<letter>(code)), 0});
  }
}

bundle_endo::bundle_endo(int genus, std::vector<bundle_element> images)
    : genus_(genus), images_(std::move(images)) {
  check_genus_range(genus);
  if (images_.size() != static_cast<std::size_t>(2 * genus))
    throw precondition_error("need one image per generator");
  for (const auto& x : images_) {
    if (max_handle(x.word) > genus) throw precondition_error("image uses handles beyond the genus");
  }
}

const bundle_element& bundle_endo::image(letter positive) const {
  if (positive <= 0 || positive > 2 * genus_) throw precondition_error("not a positive generator");
  return images_[positive - 1];
}

bundle_element bundle_endo::apply(const bundle_context& ctx, const bundle_element& x) const {
  if (ctx.genus() != genus_) throw precondition_error("genus mismatch");
  bundle_element out = ctx.z_power(x.zexp);  // z maps to z
  for (letter l : x.word.letters()) {
    const bundle_element& im = images_[(l < 0 ? -l : l) - 1];
    out = ctx.mul(out, l > 0 ? im : ctx.inv(im));
  }
  return out;
}

bundle_endo compose(const bundle_context& ctx, const bundle_endo& e1, const bundle_endo& e2) {
  if (e1.genus() != e2.genus() || e1.genus() != ctx.genus())
    throw precondition_error("genus mismatch");
  std::vector<bundle_element> images;
  for (const auto& im : e2.images()) images.push_back(e1.apply(ctx, im));
  return {ctx.genus(), std::move(images)};
}

bool endo_eq(const bundle_context& ctx, const bundle_endo& e1, const bundle_endo& e2) {
  if (e1.genus() != e2.genus() || e1.genus() != ctx.genus()) return false;
  for (int i = 0; i < 2 * ctx.genus(); ++i) {
    if (!ctx.eq(e1.images()[i], e2.images()[i])) return false;
  }
  return true;
}

bool is_identity_endo(const bundle_context& ctx, const bundle_endo& e) {
  return endo_eq(ctx, e, bundle_endo(ctx.genus()));
}

bool preserves_bundle_relation(const bundle_context& ctx, const bundle_endo& e) {
  if (e.genus() != ctx.genus()) return false;
  bundle_element acc = ctx.identity();
  for (int i = 1; i <= ctx.genus(); ++i) {
    const bundle_element& a = e.image(alpha_letter(i));
    const bundle_element& b = e.image(beta_letter(i));
    bundle_element comm = ctx.mul(ctx.mul(a, b), ctx.mul(ctx.inv(a), ctx.inv(b)));
    acc = ctx.mul(acc, comm);
  }
  return ctx.eq(acc, ctx.z_power(ctx.euler()));
}

bool is_inner_by(const bundle_context& ctx, const bundle_endo& e, const bundle_element& x) {
  if (e.genus() != ctx.genus()) return false;
  for (int code = 1; code <= 2 * ctx.genus(); ++code) {
    bundle_element gen{free_word::single(static_cast<letter>(code)), 0};
    bundle_element want = ctx.mul(ctx.mul(x, gen), ctx.inv(x));
    if (!ctx.eq(e.image(static_cast<letter>(code)), want)) return false;
  }
  return true;
}

int_matrix action_matrix(const bundle_endo& e) {
  int n = 2 * e.genus();
  int_matrix m(n, std::vector<long long>(n, 0));
  for (int j = 0; j < n; ++j) {
    homology_class col = abelianize(e.images()[j].word, e.genus());
    for (int i = 0; i < n; ++i) m[i][j] = col.c[i];
  }
  return m;
}

}  // namespace fibered
