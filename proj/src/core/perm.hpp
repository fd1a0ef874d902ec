#pragma once

#include <string>
#include <vector>

#include "coweight.hpp"

namespace hivemv {

// Permutation of {1..n}, stored by images: img[i-1] = w(i).
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  static Perm longest(int n);  // w_0: i -> n+1-i
  static Perm simple(int n, int i);

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[static_cast<size_t>(i - 1)]; }

  // Function composition: (w.after(u))(i) = w(u(i)).
  Perm after(const Perm& u) const;
  Perm inverse() const;

  // Right multiplication by s_i swaps the images in positions i, i+1.
  Perm times_simple(int i) const;

  int length() const;  // inversion count

  // Image of {1..i} under w, as a subset mask.
  SubsetMask prefix_image(int i) const;

  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }

  std::string str() const;  // "[2,3,1]"
};

std::vector<Perm> all_perms(int n);  // lexicographic by image vector

// Words in the simple reflections s_1..s_{n-1}, letters 1-based.
using Word = std::vector<int>;

Perm word_to_perm(const Word& w, int n);
bool is_reduced(const Word& w, int n);

// The staircase word (1,2,...,n-1, 1,2,...,n-2, ..., 1), a reduced word
// for w_0 whose prefix chamber sets consist of all proper intervals.
Word staircase_word(int n);

// Per-letter chamber weights of a reduced word w = s_{i_1}...s_{i_m}:
// entry m is w_m({1..i_m}) where w_m = s_{i_1}...s_{i_m}.  Throws if the
// word is not reduced.
std::vector<SubsetMask> chamber_weights_of_word(const Word& w, int n);

// All chamber weights w_m({1..j}) over every prefix w_m (including the
// empty one) and every j in 1..n-1, deduplicated, canonically sorted.
std::vector<SubsetMask> chamber_set_of_word(const Word& w, int n);

struct BraidMove {
  int kind = 0;  // 2 = commutation, 3 = braid
  int pos = 0;   // 1-based position of the move's leftmost letter
};

// All words one braid move away.  Inputs must be reduced; every output is
// then reduced as well.
std::vector<std::pair<Word, BraidMove>> braid_neighbors(const Word& w, int n);

// Every reduced word for w (descent recursion; intended for small n).
std::vector<Word> all_reduced_words(const Perm& w);

}  // namespace hivemv
