#include "perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hivemv {

Perm::Perm(std::vector<int> images) : img(std::move(images)) {
  std::vector<bool> seen(img.size() + 1, false);
  for (int v : img) {
    if (v < 1 || v > n() || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("not a permutation of {1..n}");
    seen[static_cast<size_t>(v)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Perm(std::move(im));
}

Perm Perm::longest(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) im[static_cast<size_t>(i - 1)] = n + 1 - i;
  return Perm(std::move(im));
}

Perm Perm::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("simple reflection out of range");
  Perm w = identity(n);
  std::swap(w.img[static_cast<size_t>(i - 1)], w.img[static_cast<size_t>(i)]);
  return w;
}

Perm Perm::after(const Perm& u) const {
  if (u.n() != n()) throw std::invalid_argument("perm size mismatch");
  Perm r;
  r.img.resize(img.size());
  for (int i = 1; i <= n(); ++i) r.img[static_cast<size_t>(i - 1)] = (*this)(u(i));
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img.resize(img.size());
  for (int i = 1; i <= n(); ++i) r.img[static_cast<size_t>((*this)(i)-1)] = i;
  return r;
}

Perm Perm::times_simple(int i) const {
  if (i < 1 || i >= n()) throw std::invalid_argument("simple reflection out of range");
  Perm r = *this;
  std::swap(r.img[static_cast<size_t>(i - 1)], r.img[static_cast<size_t>(i)]);
  return r;
}

int Perm::length() const {
  int inv = 0;
  for (int i = 1; i <= n(); ++i)
    for (int j = i + 1; j <= n(); ++j)
      if ((*this)(i) > (*this)(j)) ++inv;
  return inv;
}

SubsetMask Perm::prefix_image(int i) const {
  if (i < 0 || i > n()) throw std::invalid_argument("prefix_image: bad i");
  SubsetMask m = 0;
  for (int a = 1; a <= i; ++a) m |= SubsetMask{1} << ((*this)(a)-1);
  return m;
}

std::string Perm::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < img.size(); ++i) {
    if (i) os << ',';
    os << img[i];
  }
  os << ']';
  return os.str();
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

Perm word_to_perm(const Word& w, int n) {
  Perm p = Perm::identity(n);
  for (int letter : w) p = p.times_simple(letter);
  return p;
}

bool is_reduced(const Word& w, int n) {
  return word_to_perm(w, n).length() == static_cast<int>(w.size());
}

Word staircase_word(int n) {
  Word w;
  for (int top = n - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) w.push_back(i);
  return w;
}

std::vector<SubsetMask> chamber_weights_of_word(const Word& w, int n) {
  if (!is_reduced(w, n)) throw std::invalid_argument("word is not reduced");
  std::vector<SubsetMask> out;
  Perm p = Perm::identity(n);
  for (int letter : w) {
    p = p.times_simple(letter);
    out.push_back(p.prefix_image(letter));
  }
  return out;
}

std::vector<SubsetMask> chamber_set_of_word(const Word& w, int n) {
  if (!is_reduced(w, n)) throw std::invalid_argument("word is not reduced");
  std::set<SubsetMask, bool (*)(SubsetMask, SubsetMask)> seen(subset_canonical_less);
  Perm p = Perm::identity(n);
  for (int j = 1; j < n; ++j) seen.insert(p.prefix_image(j));
  for (int letter : w) {
    p = p.times_simple(letter);
    for (int j = 1; j < n; ++j) seen.insert(p.prefix_image(j));
  }
  return std::vector<SubsetMask>(seen.begin(), seen.end());
}

std::vector<std::pair<Word, BraidMove>> braid_neighbors(const Word& w, int n) {
  if (!is_reduced(w, n)) throw std::invalid_argument("word is not reduced");
  std::vector<std::pair<Word, BraidMove>> out;
  for (size_t p = 0; p + 1 < w.size(); ++p) {
    if (std::abs(w[p] - w[p + 1]) >= 2) {
      Word v = w;
      std::swap(v[p], v[p + 1]);
      out.push_back({std::move(v), BraidMove{2, static_cast<int>(p) + 1}});
    }
  }
  for (size_t p = 0; p + 2 < w.size(); ++p) {
    if (w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1) {
      Word v = w;
      std::swap(v[p], v[p + 1]);
      v[p + 2] = v[p];
      out.push_back({std::move(v), BraidMove{3, static_cast<int>(p) + 1}});
    }
  }
  return out;
}

namespace {

void reduced_words_rec(const Perm& w, std::map<Perm, std::vector<Word>>& memo) {
  if (memo.count(w)) return;
  std::vector<Word> words;
  if (w.length() == 0) {
    words.push_back({});
  } else {
    for (int i = 1; i < w.n(); ++i) {
      if (w(i) > w(i + 1)) {  // descent: l(w s_i) = l(w) - 1
        Perm shorter = w.times_simple(i);
        reduced_words_rec(shorter, memo);
        for (const Word& base : memo[shorter]) {
          Word full = base;
          full.push_back(i);
          words.push_back(std::move(full));
        }
      }
    }
  }
  memo[w] = std::move(words);
}

}  // namespace

std::vector<Word> all_reduced_words(const Perm& w) {
  std::map<Perm, std::vector<Word>> memo;
  reduced_words_rec(w, memo);
  std::vector<Word> out = memo[w];
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hivemv
