#include "coiso/ring/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace coiso {

std::vector<IndexTuple> increasing_tuples(int n, int k) {
  std::vector<IndexTuple> out;
  if (k < 0 || k > n) return out;
  IndexTuple t(k);
  std::iota(t.begin(), t.end(), 0);
  for (;;) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[i] == n - k + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

SignedTuple sort_with_sign(IndexTuple t) {
  SignedTuple r;
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) {
        r.sorted = std::move(t);
        r.sign = 0;
        return r;
      }
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  }
  r.sorted = std::move(t);
  r.sign = sign;
  return r;
}

int permutation_sign(const std::vector<int>& image) {
  int inversions = 0;
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = i + 1; j < image.size(); ++j)
      if (image[i] > image[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

std::vector<SignedPermutation> permutations(int m) {
  std::vector<SignedPermutation> out;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back({p, permutation_sign(p)});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<SignedPermutation> unshuffles(int p, int q) {
  std::vector<SignedPermutation> out;
  for (const IndexTuple& chosen : increasing_tuples(p + q, p)) {
    std::vector<int> image = chosen;
    std::vector<bool> used(p + q, false);
    for (int c : chosen) used[c] = true;
    for (int i = 0; i < p + q; ++i)
      if (!used[i]) image.push_back(i);
    const int sign = permutation_sign(image);
    out.push_back({std::move(image), sign});
  }
  return out;
}

int koszul_sign(const std::vector<int>& image, const std::vector<int>& degrees) {
  int parity = 0;
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = i + 1; j < image.size(); ++j)
      if (image[i] > image[j]) parity += (degrees[image[i]] & 1) * (degrees[image[j]] & 1);
  return parity % 2 ? -1 : 1;
}

}  // namespace coiso
