#pragma once

#include <vector>

namespace coiso {

using IndexTuple = std::vector<int>;

// All strictly increasing k-tuples drawn from 0..n-1, in lexicographic order.
std::vector<IndexTuple> increasing_tuples(int n, int k);

struct SignedTuple {
  IndexTuple sorted;
  int sign = 0;  // 0 when an index repeats
};
SignedTuple sort_with_sign(IndexTuple t);

struct SignedPermutation {
  std::vector<int> image;  // image[i] = sigma(i)
  int sign = 1;
};

// All permutations of 0..m-1 with their signs.
std::vector<SignedPermutation> permutations(int m);

// (p, q)-unshuffles: image lists the p chosen positions in increasing order,
// followed by the remaining q positions in increasing order.
std::vector<SignedPermutation> unshuffles(int p, int q);

int permutation_sign(const std::vector<int>& image);

// Koszul sign of reordering graded elements with the given degrees into the order `image`,
// i.e. x_{image[0]} ... x_{image[n-1]} = sign * x_0 ... x_{n-1} in a graded-commutative algebra.
int koszul_sign(const std::vector<int>& image, const std::vector<int>& degrees);

}  // namespace coiso
