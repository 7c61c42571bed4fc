#pragma once

#include <vector>

#include "surfcc/surface.hpp"

namespace surfcc {

// Words over signed generator letters: +(i+1) is generator i, -(i+1)
// its inverse.  Used both for crossing words in the dual presentation
// of pi_1 and for handlebody words in a free group.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word cyclic_reduce(Word w);
Word inverse_word(const Word& w);
// Lex-least rotation of a cyclic word (free-group conjugacy canonical
// form after cyclic reduction).
Word least_rotation(Word w);
bool conjugate_in_free_group(const Word& a, const Word& b);
bool conjugate_up_to_inversion_free(const Word& a, const Word& b);
std::string word_to_string(const Word& w, const std::vector<std::string>& names);

// Dual presentation of pi_1 of a one-vertex polygon surface:
// generators are the transverse edge loops, the single relator is the
// vertex link word.  For genus >= 2 this is a C'(1/6) presentation
// (checked at construction) and Dehn's algorithm solves the word
// problem; genus 1 falls back to homology.
class DualPresentation {
 public:
  explicit DualPresentation(const PolySurface& surface);

  int num_generators() const { return num_gens_; }
  const Word& relator() const { return relator_; }
  bool is_trivial(Word w) const;
  // Shortest cyclic representative of the conjugacy class (Dehn
  // reduction plus cyclic free reduction).
  Word geodesic_cyclic(Word w) const;
  // All shortest cyclic representatives of the conjugacy class, one
  // per rotation orbit (least rotation), sorted.  Closure of the input
  // under rotations and half-relator moves; for the abelian (genus 1)
  // case the sorted-exponent form is the single representative.
  std::vector<Word> geodesic_class(const Word& w) const;
  // Lex-least word among all shortest cyclic representatives, closed
  // under rotations, half-relator moves and (if unoriented) inversion.
  Word conjugacy_canonical(Word w, bool unoriented) const;

 private:
  struct Match {
    int pos;  // position in w
    int len;
    Word replacement;  // same group element, shorter or equal length
  };
  bool find_relator_subword(const Word& w, bool cyclic, int min_len, Match* out) const;
  std::vector<Match> all_half_matches_cyclic(const Word& w) const;

  int num_gens_ = 0;
  bool abelian_ = false;  // genus 1
  Word relator_;
  std::vector<Word> relator_rotations_;  // doubled rotations of R and R^-1
};

}  // namespace surfcc
