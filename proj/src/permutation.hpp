#pragma once

#include <vector>

namespace bce {

// Permutation of {0..n-1} in one-line notation. Adjacent transposition
// letters in reduced words are 1-based: s_i swaps positions i-1 and i.
class Permutation {
public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation adjacent(int n, int letter);  // s_letter

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_.at(i); }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  // Function composition: (a.compose(b))(x) = a(b(x)).
  Permutation compose(const Permutation& o) const;

  int length() const;  // inversion count
  int sign() const { return length() % 2 == 0 ? 1 : -1; }
  bool is_identity() const;

  // Canonical minimal word: bubble-sort order, repeatedly moving the
  // largest misplaced value rightward. Letters multiply left to right,
  // p == s_{w1} . s_{w2} ... s_{wl}.
  std::vector<int> reduced_word() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img_ < b.img_;
  }

private:
  std::vector<int> img_;
};

// All of S_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

// (n,k)-shuffles: permutations of S_{n+k} increasing on the first n and on
// the last k values, in lexicographic order of the first block's image set.
std::vector<Permutation> shuffles(int n, int k);

// Every reduced word of p (exponential; meant for small symmetric groups).
std::vector<std::vector<int>> all_reduced_words(const Permutation& p);

}  // namespace bce
