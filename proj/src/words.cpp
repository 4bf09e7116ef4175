#include "fibered/words.hpp"

#include <cctype>
#include <sstream>

#include "fibered/errors.hpp"
#include "fibered/rng.hpp"

namespace fibered {

free_word::free_word(std::vector<letter> raw) {
  letters_.reserve(raw.size());
  for (letter l : raw) push(l);
}

free_word free_word::single(letter l) {
  free_word w;
  w.push(l);
  return w;
}

void free_word::push(letter l) {
  if (!letters_.empty() && letters_.back() == inv(l)) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

free_word free_word::inverse() const {
  free_word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(inv(*it));  // already reduced, no cancellation possible
  }
  return out;
}

free_word operator*(const free_word& x, const free_word& y) {
  free_word out = x;
  for (letter l : y.letters()) out.push(l);
  return out;
}

free_word conjugate(const free_word& x, const free_word& by) {
  return by * x * by.inverse();
}

free_word cyclic_reduce(const free_word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == inv(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  free_word out;
  for (std::size_t i = lo; i < hi; ++i) out.push(ls[i]);
  return out;
}

std::pair<free_word, free_word> cyclic_reduce_split(const free_word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == inv(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  free_word core, conj;
  for (std::size_t i = lo; i < hi; ++i) core.push(ls[i]);
  for (std::size_t i = 0; i < lo; ++i) conj.push(ls[i]);
  return {core, conj};
}

int max_handle(const free_word& w) {
  int m = 0;
  for (letter l : w.letters()) {
    int h = handle_of(l);
    if (h > m) m = h;
  }
  return m;
}

letter parse_letter_token(const std::string& token, int genus) {
  std::size_t pos = 0;
  bool invert = false;
  while (pos < token.size() && token[pos] == '~') {
    invert = !invert;
    ++pos;
  }
  if (pos >= token.size()) throw parse_error("bare '~' in word: '" + token + "'");
  char c = token[pos++];
  bool beta_kind;
  switch (c) {
    case 'a': beta_kind = false; break;
    case 'b': beta_kind = true; break;
    case 'A': beta_kind = false; invert = !invert; break;
    case 'B': beta_kind = true; invert = !invert; break;
    default: throw parse_error("bad generator letter in token '" + token + "'");
  }
  if (pos == token.size()) throw parse_error("missing handle index in token '" + token + "'");
  if (token.size() - pos > 6) throw parse_error("handle index too long in token '" + token + "'");
  int idx = 0;
  for (; pos < token.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(token[pos])))
      throw parse_error("bad handle index in token '" + token + "'");
    idx = idx * 10 + (token[pos] - '0');
  }
  if (idx < 1 || idx > genus)
    throw parse_error("handle index out of range for genus " + std::to_string(genus) +
                      ": '" + token + "'");
  letter l = beta_kind ? beta_letter(idx) : alpha_letter(idx);
  return invert ? inv(l) : l;
}

free_word parse_surface_word(const std::string& text, int genus) {
  std::istringstream in(text);
  free_word w;
  std::string token;
  while (in >> token) w.push(parse_letter_token(token, genus));
  return w;
}

std::string format_word(const free_word& w) {
  std::string out;
  for (letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    if (is_inverse(l)) out += '~';
    out += is_beta(l) ? 'b' : 'a';
    out += std::to_string(handle_of(l));
  }
  return out;
}

free_word random_reduced_word(rng& r, int genus, std::size_t length) {
  const int n = 4 * genus;
  free_word w;
  while (w.size() < length) {
    std::uint64_t pick = r.below(static_cast<std::uint64_t>(n));
    int code = static_cast<int>(pick) / 2 + 1;  // 1..2g
    letter l = static_cast<letter>((pick & 1) ? -code : code);
    if (!w.empty() && w.letters().back() == inv(l)) continue;  // resample, stay reduced
    w.push(l);
  }
  return w;
}

std::size_t word_hash::operator()(const free_word& w) const {
  std::uint64_t h = 1469598103934665603ULL;  // fnv-1a
  for (letter l : w.letters()) {
    std::uint16_t u = static_cast<std::uint16_t>(l);
    h = (h ^ (u & 0xff)) * 1099511628211ULL;
    h = (h ^ (u >> 8)) * 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace fibered
