#pragma once

#include <vector>

#include "coiso/ring/linalg.hpp"
#include "coiso/vdata/vdata.hpp"

namespace coiso::testing {

inline std::vector<Polynomial> base_monomials(const Patch& patch, int max_degree) {
  std::vector<Polynomial> out{Polynomial(1)};
  std::vector<Polynomial> layer{Polynomial(1)};
  for (int deg = 1; deg <= max_degree; ++deg) {
    std::vector<Polynomial> next;
    for (const Polynomial& m : layer) {
      const VarMask support = m.terms().front().mono.support();
      const int last = support ? 31 - __builtin_clz(support) : 0;
      for (int v = last; v < patch.n(); ++v) next.push_back(m * Polynomial::variable(v));
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Basis of the degree-`degree` normal sections with entries of degree <= max_degree.
inline std::vector<NormalMultiSection> ansatz(const PatchPtr& patch, int degree, int max_degree) {
  std::vector<NormalMultiSection> out;
  for (const IndexTuple& t : increasing_tuples(patch->d(), degree))
    for (const Polynomial& m : base_monomials(*patch, max_degree)) {
      NormalMultiSection xi(patch, degree);
      xi.set(t, m);
      out.push_back(xi);
    }
  return out;
}

// Solutions of sum_i c_i m_1(b_i) = target over the ansatz basis b: returns a particular solution
// (or nothing) and the kernel basis.
struct LinearSolution {
  bool solvable = false;
  NormalMultiSection particular;
  std::vector<NormalMultiSection> kernel;
};

inline LinearSolution solve_m1(const VData& V, const std::vector<NormalMultiSection>& basis,
                               const NormalMultiSection& target) {
  std::vector<NormalMultiSection> images;
  for (const auto& b : basis) images.push_back(derived_mk(V, {b}));
  images.push_back(-1 * target);
  // Rows: (tensor index, monomial) pairs.
  std::vector<std::pair<IndexTuple, Monomial>> rows;
  auto row_of = [&](const IndexTuple& t, const Monomial& m) {
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r].first == t && rows[r].second == m) return r;
    rows.emplace_back(t, m);
    return rows.size() - 1;
  };
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(images.size());
  for (std::size_t c = 0; c < images.size(); ++c)
    for (const auto& [t, p] : images[c].tensor().entries())
      for (const Term& term : p.terms()) cols[c].emplace_back(row_of(t, term.mono), term.coeff);
  RationalMatrix a(rows.size(), std::vector<Rational>(images.size()));
  for (std::size_t c = 0; c < images.size(); ++c)
    for (const auto& [r, v] : cols[c]) a[r][c] += v;
  LinearSolution sol;
  sol.particular = NormalMultiSection(V.patch(), basis.empty() ? 1 : basis.front().degree());
  const std::size_t last = basis.size();
  for (const auto& v : nullspace(a, static_cast<int>(images.size()))) {
    NormalMultiSection xi(V.patch(), sol.particular.degree());
    for (std::size_t i = 0; i < last; ++i)
      if (!is_zero(v[i])) xi += v[i] * basis[i];
    if (is_zero(v[last])) {
      sol.kernel.push_back(xi);
    } else if (!sol.solvable) {
      sol.solvable = true;
      sol.particular = (1 / v[last]) * xi;
    }
  }
  return sol;
}

}  // namespace coiso::testing
