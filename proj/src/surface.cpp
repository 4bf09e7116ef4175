#include "fibered/surface.hpp"

#include <deque>
#include <stdexcept>

#include "fibered/errors.hpp"

namespace fibered {

namespace {

free_word insert_rotation(const std::vector<letter>& u, std::size_t pos, const free_word& rot) {
  free_word out;
  for (std::size_t i = 0; i < pos; ++i) out.push(u[i]);
  for (letter l : rot.letters()) out.push(l);
  for (std::size_t i = pos; i < u.size(); ++i) out.push(u[i]);
  return out;
}

}  // namespace

surface_context::surface_context(int genus) : genus_(genus) {
  if (genus < 1) throw context_error("genus must be >= 1");
  if (genus > 64) throw context_error("genus too large");

  for (int i = 1; i <= genus; ++i) {
    relator_.push(alpha_letter(i));
    relator_.push(beta_letter(i));
    relator_.push(inv(alpha_letter(i)));
    relator_.push(inv(beta_letter(i)));
  }

  const int n = 4 * genus;
  const auto& rl = relator_.letters();
  free_word rinv = relator_.inverse();
  const auto& il = rinv.letters();
  for (int j = 0; j < n; ++j) {
    free_word rot;
    for (int t = 0; t < n; ++t) rot.push(rl[(j + t) % n]);
    rotations_.push_back({rot, +1});
  }
  for (int j = 0; j < n; ++j) {
    free_word rot;
    for (int t = 0; t < n; ++t) rot.push(il[(j + t) % n]);
    rotations_.push_back({rot, -1});
  }

  // two-letter prefixes must pin the rotation uniquely (pieces have length 1);
  // dehn matching and its determinism both lean on this
  prefix_entry_.assign(static_cast<std::size_t>(4 * genus + 1) * (4 * genus + 1), -1);
  for (std::size_t e = 0; e < rotations_.size(); ++e) {
    const auto& w = rotations_[e].word.letters();
    int code = pair_code(w[0], w[1]);
    if (prefix_entry_[code] != -1) throw std::logic_error("rotation prefixes collide");
    prefix_entry_[code] = static_cast<int>(e);
  }
}

int surface_context::pair_code(letter l1, letter l2) const {
  int base = 2 * genus_;
  return (l1 + base) * (4 * genus_ + 1) + (l2 + base);
}

namespace {

void check_alphabet(const free_word& w, int genus) {
  if (max_handle(w) > genus) throw precondition_error("word uses handles beyond the genus");
}

}  // namespace

dehn_result surface_context::dehn_reduce(const free_word& w) const {
  if (genus_ < 2) throw context_error("dehn reduction needs genus >= 2");
  check_alphabet(w, genus_);
  const int rlen = 4 * genus_;
  const int threshold = 2 * genus_ + 1;

  free_word cur = cyclic_reduce(w);
  int count = 0;
  for (;;) {
    const int n = static_cast<int>(cur.size());
    if (n < threshold) break;

    std::vector<letter> d(cur.letters());
    d.insert(d.end(), cur.letters().begin(), cur.letters().end());

    int best_len = 0, best_pos = -1, best_entry = -1;
    const int cap = n < rlen ? n : rlen;
    for (int p = 0; p < n; ++p) {
      int e = prefix_entry_[pair_code(d[p], d[p + 1])];
      if (e < 0) continue;
      const auto& ew = rotations_[e].word.letters();
      int m = 2;
      while (m < cap && ew[m] == d[p + m]) ++m;
      if (m > best_len) {
        best_len = m;
        best_pos = p;
        best_entry = e;
      }
    }
    if (best_len < threshold) break;

    const auto& ew = rotations_[best_entry].word.letters();
    free_word next;
    for (int i = rlen - 1; i >= best_len; --i) next.push(inv(ew[i]));
    for (int i = best_pos + best_len; i < best_pos + n; ++i) next.push(d[i]);
    count += rotations_[best_entry].tag;
    cur = cyclic_reduce(next);
  }
  return {cur, count};
}

bool surface_context::is_trivial(const free_word& w) const {
  check_alphabet(w, genus_);
  if (genus_ == 1) {
    int sa = 0, sb = 0;
    for (letter l : w.letters()) {
      int sgn = l < 0 ? -1 : 1;
      (is_beta(l) ? sb : sa) += sgn;
    }
    return sa == 0 && sb == 0;
  }
  return dehn_reduce(w).residual.empty();
}

bool surface_context::equal(const free_word& u, const free_word& v) const {
  return is_trivial(u * v.inverse());
}

std::optional<int> surface_context::oracle_count(const free_word& w, const oracle_limits& lim) const {
  check_alphabet(w, genus_);
  if (w.empty()) return 0;
  const std::size_t len_cap = lim.max_word_len ? lim.max_word_len : w.size() + 16;

  std::unordered_map<free_word, int, word_hash> seen;
  std::deque<std::pair<free_word, int>> queue;  // word, depth
  seen.emplace(w, 0);
  queue.emplace_back(w, 0);

  while (!queue.empty()) {
    auto [cur, depth] = std::move(queue.front());
    queue.pop_front();
    if (depth >= lim.max_insertions) continue;
    int cur_count = seen.at(cur);

    for (const auto& rot : rotations_) {
      for (std::size_t pos = 0; pos <= cur.size(); ++pos) {
        free_word cand = insert_rotation(cur.letters(), pos, rot.word);
        if (cand.size() > len_cap) continue;
        int cand_count = cur_count - rot.tag;
        if (cand.empty()) return cand_count;
        auto [it, fresh] = seen.emplace(cand, cand_count);
        if (!fresh) {
          // counts per word are forced by the group, a mismatch is a bug
          if (it->second != cand_count) throw std::logic_error("oracle count mismatch");
          continue;
        }
        if (seen.size() > lim.max_states) throw resource_error("oracle state budget exceeded");
        queue.emplace_back(std::move(cand), depth + 1);
      }
    }
  }
  return std::nullopt;
}

std::unordered_map<free_word, int, word_hash> surface_context::trivial_closure(
    std::size_t max_len, std::size_t corridor_len, std::size_t max_states) const {
  std::unordered_map<free_word, int, word_hash> seen;
  std::deque<free_word> queue;
  seen.emplace(free_word(), 0);
  queue.emplace_back();

  while (!queue.empty()) {
    free_word cur = std::move(queue.front());
    queue.pop_front();
    int cur_count = seen.at(cur);

    for (const auto& rot : rotations_) {
      for (std::size_t pos = 0; pos <= cur.size(); ++pos) {
        free_word cand = insert_rotation(cur.letters(), pos, rot.word);
        if (cand.size() > corridor_len) continue;
        int cand_count = cur_count + rot.tag;
        auto [it, fresh] = seen.emplace(cand, cand_count);
        if (!fresh) {
          if (it->second != cand_count) throw std::logic_error("closure count mismatch");
          continue;
        }
        if (seen.size() > max_states) throw resource_error("closure state budget exceeded");
        queue.emplace_back(std::move(cand));
      }
    }
  }

  std::unordered_map<free_word, int, word_hash> out;
  for (const auto& [word, count] : seen) {
    if (word.size() <= max_len) out.emplace(word, count);
  }
  return out;
}

}  // namespace fibered
