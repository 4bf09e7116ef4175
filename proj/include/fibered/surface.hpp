#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fibered/words.hpp"

namespace fibered {

// one cyclic rotation of the relator or of its inverse; under the bundle
// relation every entry equals z^(tag*k)
struct relator_rotation {
  free_word word;
  int tag;  // +1 for rotations of the relator, -1 for rotations of its inverse
};

struct dehn_result {
  free_word residual;  // cyclically reduced; empty iff the input is trivial (g >= 2)
  int relator_count;   // input = z^(k*relator_count) * conjugate(residual) under the bundle relation
};

struct oracle_limits {
  int max_insertions = 6;
  std::size_t max_word_len = 0;  // 0 means input length + 16
  std::size_t max_states = 1000000;
};

// immutable after construction; every member is a pure query, safe to share
class surface_context {
 public:
  explicit surface_context(int genus);  // genus >= 1

  int genus() const { return genus_; }
  const free_word& relator() const { return relator_; }
  const std::vector<relator_rotation>& rotations() const { return rotations_; }

  // replaces cyclic subwords matching more than half of a rotation, strict
  // threshold 2g+1 out of 4g; genus >= 2 only
  dehn_result dehn_reduce(const free_word& w) const;

  bool is_trivial(const free_word& w) const;  // genus 1 decided by exponent sums
  bool equal(const free_word& u, const free_word& v) const;

  // breadth-first certificate search: insert tagged rotations at any position
  // and free reduce; reaching the empty word certifies w = z^(k*count).
  // absent result means the budget ran out, never that w is nontrivial
  std::optional<int> oracle_count(const free_word& w, const oracle_limits& lim = {}) const;

  // all words of length <= max_len reachable from the identity by insertions
  // whose intermediate states stay within corridor_len, mapped to their count;
  // exhaustive over that corridor
  std::unordered_map<free_word, int, word_hash> trivial_closure(std::size_t max_len,
                                                                std::size_t corridor_len,
                                                                std::size_t max_states) const;

 private:
  int genus_;
  free_word relator_;
  std::vector<relator_rotation> rotations_;
  std::vector<int> prefix_entry_;  // two-letter prefix -> rotation index, -1 if none

  int pair_code(letter l1, letter l2) const;
};

}  // namespace fibered
