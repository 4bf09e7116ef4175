#include "fibered/bundle.hpp"

#include <sstream>

#include "fibered/errors.hpp"

namespace fibered {

bundle_context::bundle_context(int genus, int euler)
    : genus_(genus), euler_(euler), surface_(genus) {
  if (genus == 1 && euler == 0) throw context_error("(genus, euler) = (1, 0) is not supported");
}

void bundle_context::check(const bundle_element& x) const {
  if (max_handle(x.word) > genus_) throw precondition_error("element word uses handles beyond the genus");
}

bundle_element bundle_context::from_word(const free_word& w, long long zexp) const {
  bundle_element x{w, zexp};
  check(x);
  return x;
}

bundle_element bundle_context::mul(const bundle_element& x, const bundle_element& y) const {
  check(x);
  check(y);
  return {x.word * y.word, x.zexp + y.zexp};
}

bundle_element bundle_context::inv(const bundle_element& x) const {
  check(x);
  return {x.word.inverse(), -x.zexp};
}

bool bundle_context::is_identity(const bundle_element& x) const {
  check(x);
  if (genus_ == 1) {
    torus_normal_form nf = torus_form(x);
    return nf == torus_normal_form{};
  }
  dehn_result d = surface_.dehn_reduce(x.word);
  return d.residual.empty() && x.zexp + static_cast<long long>(euler_) * d.relator_count == 0;
}

bool bundle_context::eq(const bundle_element& x, const bundle_element& y) const {
  return is_identity(mul(x, inv(y)));
}

bool bundle_context::is_central(const bundle_element& x) const {
  check(x);
  return surface_.is_trivial(x.word);
}

long long bundle_context::z_exponent(const bundle_element& x) const {
  check(x);
  if (genus_ == 1) {
    torus_normal_form nf = torus_form(x);
    if (nf.p != 0 || nf.q != 0) throw precondition_error("element is not a z power");
    return nf.r;
  }
  dehn_result d = surface_.dehn_reduce(x.word);
  if (!d.residual.empty()) throw precondition_error("element is not a z power");
  return x.zexp + static_cast<long long>(euler_) * d.relator_count;
}

torus_normal_form bundle_context::torus_form(const bundle_element& x) const {
  if (genus_ != 1) throw context_error("normal form is a genus one operation");
  check(x);
  torus_normal_form nf;
  for (letter l : x.word.letters()) {
    if (is_beta(l)) {
      nf.q += l < 0 ? -1 : 1;
    } else if (l > 0) {
      ++nf.p;
      nf.r -= euler_ * nf.q;  // b^q a = a b^q z^(-k q)
    } else {
      --nf.p;
      nf.r += euler_ * nf.q;
    }
  }
  nf.r += x.zexp;
  return nf;
}

bundle_element bundle_context::parse(const std::string& text) const {
  std::istringstream in(text);
  bundle_element out;
  std::string token;
  while (in >> token) {
    std::size_t tildes = 0;
    while (tildes < token.size() && token[tildes] == '~') ++tildes;
    if (token.size() == tildes + 1 && token[tildes] == 'z') {
      out.zexp += (tildes % 2 == 0) ? 1 : -1;
    } else {
      out.word.push(parse_letter_token(token, genus_));
    }
  }
  return out;
}

std::string bundle_context::format(const bundle_element& x) const {
  check(x);
  std::string out = format_word(x.word);
  for (long long i = 0; i < x.zexp; ++i) {
    if (!out.empty()) out += ' ';
    out += 'z';
  }
  for (long long i = 0; i > x.zexp; --i) {
    if (!out.empty()) out += ' ';
    out += "~z";
  }
  return out;
}

}  // namespace fibered
