#include "permutation.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace bce {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw_invalid("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::adjacent(int n, int letter) {
  if (letter < 1 || letter > n - 1) throw_invalid("adjacent letter out of range");
  Permutation p = identity(n);
  std::swap(p.img_[letter - 1], p.img_[letter]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& o) const {
  if (size() != o.size()) throw_internal("composing permutations of different size");
  std::vector<int> img(img_.size());
  for (int i = 0; i < size(); ++i) img[i] = img_[o.img_[i]];
  return Permutation(std::move(img));
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> work = img_;
  std::vector<int> letters;  // applied by right multiplication, in order
  for (int v = size() - 1; v >= 0; --v) {
    int p = static_cast<int>(std::find(work.begin(), work.end(), v) - work.begin());
    for (int j = p; j < v; ++j) {
      std::swap(work[j], work[j + 1]);
      letters.push_back(j + 1);
    }
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Permutation> shuffles(int n, int k) {
  int total = n + k;
  std::vector<Permutation> out;
  // Choose the image positions of the first block, in lexicographic order.
  std::vector<int> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<int> img(total);
    std::vector<bool> used(total, false);
    for (int i = 0; i < n; ++i) {
      img[i] = pick[i];
      used[pick[i]] = true;
    }
    int j = n;
    for (int pos = 0; pos < total; ++pos)
      if (!used[pos]) img[j++] = pos;
    out.push_back(Permutation(std::move(img)));
    // next combination
    int i = n - 1;
    while (i >= 0 && pick[i] == total - n + i) --i;
    if (i < 0) break;  // n == 0 and k == 0 fall out here after the identity
    ++pick[i];
    for (int j2 = i + 1; j2 < n; ++j2) pick[j2] = pick[j2 - 1] + 1;
  }
  return out;
}

namespace {

void collect_words(const Permutation& p, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
  if (p.is_identity()) {
    out.push_back(prefix);
    return;
  }
  int n = p.size();
  // First letter i of a reduced word satisfies l(s_i p) = l(p) - 1, i.e.
  // value i-1 occurs after value i in one-line notation.
  std::vector<int> pos(n);
  for (int x = 0; x < n; ++x) pos[p(x)] = x;
  for (int i = 1; i <= n - 1; ++i) {
    if (pos[i - 1] > pos[i]) {
      prefix.push_back(i);
      collect_words(Permutation::adjacent(n, i).compose(p), prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<int>> all_reduced_words(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  collect_words(p, prefix, out);
  return out;
}

}  // namespace bce
