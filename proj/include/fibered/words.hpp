#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fibered {

class rng;

// letter of F(alpha_1, beta_1, ..., alpha_g, beta_g):
// alpha_i = +(2i-1), beta_i = +2i, inverse = negation, 0 never occurs
using letter = std::int16_t;

constexpr letter alpha_letter(int handle) { return static_cast<letter>(2 * handle - 1); }
constexpr letter beta_letter(int handle) { return static_cast<letter>(2 * handle); }
constexpr letter inv(letter l) { return static_cast<letter>(-l); }
constexpr int handle_of(letter l) { int a = l < 0 ? -l : l; return (a + 1) / 2; }
constexpr bool is_beta(letter l) { int a = l < 0 ? -l : l; return a % 2 == 0; }
constexpr bool is_inverse(letter l) { return l < 0; }

// freely reduced word; reducedness is a class invariant
class free_word {
 public:
  free_word() = default;
  explicit free_word(std::vector<letter> raw);  // reduces
  static free_word single(letter l);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<letter>& letters() const { return letters_; }
  letter at(std::size_t i) const { return letters_[i]; }

  void push(letter l);  // right multiply by one letter, cancelling if possible
  free_word inverse() const;

  bool operator==(const free_word& o) const { return letters_ == o.letters_; }
  bool operator!=(const free_word& o) const { return letters_ != o.letters_; }

 private:
  std::vector<letter> letters_;
};

free_word operator*(const free_word& x, const free_word& y);
free_word conjugate(const free_word& x, const free_word& by);  // by x by^-1
free_word cyclic_reduce(const free_word& w);
// (core, conjugator) with w = conjugator * core * conjugator^-1
std::pair<free_word, free_word> cyclic_reduce_split(const free_word& w);
int max_handle(const free_word& w);  // 0 for the identity

// token syntax: a1 b1 A1 B1 with optional ~ prefix for inverse, whitespace
// separated; uppercase means inverse, ~ flips again. empty input is the
// identity. handles above genus are rejected.
letter parse_letter_token(const std::string& token, int genus);
free_word parse_surface_word(const std::string& text, int genus);
std::string format_word(const free_word& w);  // identity formats as ""

// uniform over reduced words of exactly the given length
free_word random_reduced_word(rng& r, int genus, std::size_t length);

struct word_hash {
  std::size_t operator()(const free_word& w) const;
};

}  // namespace fibered
