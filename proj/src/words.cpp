#include "surfcc/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace surfcc {

Word free_reduce(Word w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word least_rotation(Word w) {
  if (w.empty()) return w;
  Word best = w;
  for (size_t i = 1; i < w.size(); ++i) {
    std::rotate(w.begin(), w.begin() + 1, w.end());
    if (w < best) best = w;
  }
  return best;
}

bool conjugate_in_free_group(const Word& a, const Word& b) {
  return least_rotation(cyclic_reduce(a)) == least_rotation(cyclic_reduce(b));
}

bool conjugate_up_to_inversion_free(const Word& a, const Word& b) {
  return conjugate_in_free_group(a, b) || conjugate_in_free_group(a, inverse_word(b));
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ".";
    int g = std::abs(w[i]) - 1;
    os << (w[i] < 0 ? "-" : "") << (g < static_cast<int>(names.size()) ? names[g] : "g" + std::to_string(g));
  }
  return os.str();
}

DualPresentation::DualPresentation(const PolySurface& surface) {
  require(surface.num_faces() >= 1, "presentation needs a surface");
  require(surface.num_vertices() == 1,
          "dual presentation requires a one-vertex surface (project cover words to the base)");
  num_gens_ = surface.num_edges();
  relator_ = surface.vertex_link_word(0);
  abelian_ = (surface.genus() == 1);
  if (abelian_) return;

  const int L = static_cast<int>(relator_.size());
  Word rinv = inverse_word(relator_);
  for (int s = 0; s < 2; ++s) {
    Word base = (s == 0) ? relator_ : rinv;
    for (int i = 0; i < L; ++i) {
      Word rot(base.begin() + i, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + i);
      relator_rotations_.push_back(std::move(rot));
    }
  }
  // Small-cancellation check: Dehn's algorithm needs C'(1/6).
  int max_piece = 0;
  for (size_t i = 0; i < relator_rotations_.size(); ++i)
    for (size_t j = 0; j < relator_rotations_.size(); ++j) {
      if (i == j) continue;
      const Word &a = relator_rotations_[i], &b = relator_rotations_[j];
      int k = 0;
      while (k < L && a[k] == b[k]) ++k;
      if (k == L) check_internal(false, "vertex link relator has a nontrivial symmetry");
      max_piece = std::max(max_piece, k);
    }
  check_internal(6 * max_piece < L, "vertex link relator is not C'(1/6)");
}

bool DualPresentation::find_relator_subword(const Word& w, bool cyclic, int min_len,
                                            Match* out) const {
  const int L = static_cast<int>(relator_.size());
  const int n = static_cast<int>(w.size());
  if (n == 0) return false;
  int best_len = min_len - 1;
  Match best;
  const int span = cyclic ? n : 1;
  for (int pos = 0; pos < (cyclic ? n : n); ++pos) {
    (void)span;
    for (const Word& rot : relator_rotations_) {
      int k = 0;
      while (k < L && k < n) {
        int idx = pos + k;
        if (!cyclic && idx >= n) break;
        if (w[idx % n] != rot[k]) break;
        ++k;
      }
      if (k > best_len) {
        best_len = k;
        best.pos = pos;
        best.len = k;
        Word tail(rot.begin() + k, rot.end());
        best.replacement = inverse_word(tail);
      }
    }
  }
  if (best_len >= min_len) {
    *out = best;
    return true;
  }
  return false;
}

bool DualPresentation::is_trivial(Word w) const {
  w = free_reduce(std::move(w));
  if (abelian_) {
    std::vector<long long> sums(num_gens_, 0);
    for (int x : w) sums[std::abs(x) - 1] += (x > 0 ? 1 : -1);
    return std::all_of(sums.begin(), sums.end(), [](long long s) { return s == 0; });
  }
  const int L = static_cast<int>(relator_.size());
  while (!w.empty()) {
    Match m;
    if (!find_relator_subword(w, /*cyclic=*/false, L / 2 + 1, &m)) return false;
    Word next(w.begin(), w.begin() + m.pos);
    next.insert(next.end(), m.replacement.begin(), m.replacement.end());
    next.insert(next.end(), w.begin() + m.pos + m.len, w.end());
    w = free_reduce(std::move(next));
  }
  return true;
}

Word DualPresentation::geodesic_cyclic(Word w) const {
  if (abelian_) {
    std::vector<long long> sums(num_gens_, 0);
    for (int x : w) sums[std::abs(x) - 1] += (x > 0 ? 1 : -1);
    Word out;
    for (int g = 0; g < num_gens_; ++g)
      for (long long i = 0; i < std::llabs(sums[g]); ++i) out.push_back(sums[g] > 0 ? g + 1 : -(g + 1));
    return out;
  }
  const int L = static_cast<int>(relator_.size());
  w = cyclic_reduce(std::move(w));
  while (true) {
    Match m;
    if (!find_relator_subword(w, /*cyclic=*/true, L / 2 + 1, &m)) break;
    const int n = static_cast<int>(w.size());
    // Rotate so the match starts at 0, then replace.
    Word rot(w.begin() + m.pos, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + m.pos);
    Word next = m.replacement;
    next.insert(next.end(), rot.begin() + std::min(m.len, n), rot.end());
    w = cyclic_reduce(std::move(next));
  }
  return w;
}

std::vector<DualPresentation::Match> DualPresentation::all_half_matches_cyclic(const Word& w) const {
  std::vector<Match> out;
  const int L = static_cast<int>(relator_.size());
  const int half = L / 2;
  const int n = static_cast<int>(w.size());
  if (n < half) return out;
  for (int pos = 0; pos < n; ++pos)
    for (const Word& rot : relator_rotations_) {
      int k = 0;
      while (k < half && w[(pos + k) % n] == rot[k]) ++k;
      if (k == half) {
        Match m;
        m.pos = pos;
        m.len = half;
        Word tail(rot.begin() + half, rot.end());
        m.replacement = inverse_word(tail);
        out.push_back(std::move(m));
      }
    }
  return out;
}

std::vector<Word> DualPresentation::geodesic_class(const Word& w) const {
  if (abelian_) return {geodesic_cyclic(w)};
  std::set<Word> seen;
  std::vector<Word> queue;
  Word start = geodesic_cyclic(w);
  size_t cur_len = start.size();
  auto push = [&](Word cand) {
    // A half-relator move that shortens the word means the input was
    // not geodesic after all; restart at the shorter length.
    if (cand.size() < cur_len) {
      cur_len = cand.size();
      seen.clear();
      queue.clear();
    }
    if (cand.size() > cur_len) return;
    cand = least_rotation(std::move(cand));
    if (seen.insert(cand).second) queue.push_back(cand);
  };
  push(std::move(start));
  while (!queue.empty()) {
    Word cur = queue.back();
    queue.pop_back();
    const int n = static_cast<int>(cur.size());
    for (const Match& m : all_half_matches_cyclic(cur)) {
      Word rot(cur.begin() + m.pos, cur.end());
      rot.insert(rot.end(), cur.begin(), cur.begin() + m.pos);
      Word next = m.replacement;
      next.insert(next.end(), rot.begin() + std::min(m.len, n), rot.end());
      push(geodesic_cyclic(std::move(next)));
    }
  }
  return {seen.begin(), seen.end()};
}

Word DualPresentation::conjugacy_canonical(Word w, bool unoriented) const {
  if (abelian_) {
    Word g = geodesic_cyclic(std::move(w));
    if (unoriented) {
      Word gi = geodesic_cyclic(inverse_word(g));
      if (gi < g) g = gi;
    }
    return g;
  }
  Word best = geodesic_class(w).front();
  if (unoriented) {
    Word binv = geodesic_class(inverse_word(w)).front();
    if (binv.size() < best.size() || (binv.size() == best.size() && binv < best)) best = binv;
  }
  return best;
}

}  // namespace surfcc
