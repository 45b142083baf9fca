#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "coiso/ring/linalg.hpp"
#include "coiso/vdata/vdata.hpp"

namespace coiso {

// Local pre-symplectic model on (x^i leaf, u^a transverse): omega = 1/2 W_ab du^a ^ du^b and the
// complement spanned by GG_a = d_{u^a} + G^i_a d_{x^i}. The patch has base (x, u) and fiber p_i.
struct PreSympData {
  PatchPtr patch;
  int n = 0;  // leaf dimension
  int d = 0;  // transverse dimension
  PolyMatrix W;                               // d x d
  std::vector<std::vector<Polynomial>> G;     // G[i][a] = G^i_a
  std::vector<Rational> reference;            // (x0, u0)

  int x(int i) const { return i; }
  int u(int a) const { return n + a; }
  int p(int i) const { return n + d + i; }
};

class SingularForm : public std::runtime_error {
 public:
  SingularForm() : std::runtime_error("W is singular at the reference point") {}
};

// Validates shapes, antisymmetry of W, base-only entries and invertibility of W at the reference
// point (which defaults to the origin). Fiber names default to p1..pn.
PreSympData make_presymplectic(const std::vector<std::string>& x, const std::vector<std::string>& u, PolyMatrix W,
                               std::vector<std::vector<Polynomial>> G, std::vector<Rational> reference = {},
                               std::vector<std::string> p = {});

Polynomial frame_derivative(const PreSympData& data, int a, const Polynomial& f);

// F[i] is the d x d matrix F^i_ab = GG_a(G^i_b) - GG_b(G^i_a).
std::vector<PolyMatrix> curvature_F(const PreSympData& data);

// W^{-1} as adjugate / det when det W is a nonzero constant; otherwise the constant matrix
// W(x0, u0)^{-1}, in which case every result is meaningful at the reference point only.
struct InverseForm {
  PolyMatrix inverse;
  bool exact = false;
};
InverseForm w_inverse(const PreSympData& data);

// d^m (W + p_i F^i)^{-1} / dp_{i_1}..dp_{i_m} at p = 0:
// (-1)^m sum_sigma W^{-1} F^{i_sigma(1)} W^{-1} .. F^{i_sigma(m)} W^{-1}.
PolyMatrix wtilde_inverse_jet(const PreSympData& data, const std::vector<int>& indices);
// All jets of order m, keyed by nondecreasing index tuples.
std::map<IndexTuple, PolyMatrix> wtilde_inverse_jets(const PreSympData& data, int m);

struct ThickenedPoisson {
  VData V;        // Gamma = 0, X = Pi / 2
  int order = 4;  // p-jet truncation of the inverse form
  bool exact = false;
};
// Pi = -1/2 w~^{ab} X_a ^ X_b - d_{p_i} ^ d_{x^i} with X_a = GG_a - p_j d_{x^i} G^j_a d_{p_i}
// and w~^{-1} truncated at p-order K.
ThickenedPoisson thickening_poisson(const PreSympData& data, int K = 4);

class InsufficientJets : public std::runtime_error {
 public:
  InsufficientJets() : std::runtime_error("arity exceeds available jet data") {}
};

// Closed multibrackets on generators: constant deltas (leafwise differentials dx^i) and
// functions of (x, u). Chains longer than K inverse-jet factors are rejected.
NormalMultiSection ohpark_mk(const PreSympData& data, const std::vector<NormalMultiSection>& args, int K = 4);

// Substitutes the reference point into every entry.
NormalMultiSection at_reference(const PreSympData& data, const NormalMultiSection& xi);

}  // namespace coiso
