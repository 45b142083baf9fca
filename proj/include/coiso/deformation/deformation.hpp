#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "coiso/vdata/vdata.hpp"

namespace coiso {

// s(eps) = sum_{i=1}^{N} eps^i s_i with degree-1 coefficients; coefficients[i-1] = s_i.
struct FormalSeries {
  PatchPtr patch;
  std::vector<NormalMultiSection> coefficients;

  int order() const { return static_cast<int>(coefficients.size()); }
  void validate() const;
};

// s_t(eps) and lambda_t(eps) with entries polynomial in the base coordinate named `time`.
// lambda[i] is the eps^i coefficient (degree 0), i = 0..N.
struct GaugeFamily {
  std::string time;
  FormalSeries s;
  std::vector<NormalMultiSection> lambda;
  void validate() const;
};

class NotACocycle : public std::runtime_error {
 public:
  explicit NotACocycle(std::vector<std::string> witness)
      : std::runtime_error("not a cocycle"), witness_(std::move(witness)) {}
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  std::vector<std::string> witness_;
};

// Largest degree in the fiber variables among the components of J.
int fiber_degree(const MultiOperator& op);

// MC(-s) = sum_{k>=0} (1/k!) m_k(-s, .., -s), with m_0 = P(J).
NormalMultiSection mc_series(const VData& V, const NormalMultiSection& s);

// sum_{k>=0} (1/k!) m_{k+1}(-s, .., -s, lambda) for a degree-0 normal section lambda.
NormalMultiSection delta_mc(const VData& V, const NormalMultiSection& s, const NormalMultiSection& lambda);
// -P((exp I(s))_* Delta_lambda), computed through the fiber translation y -> y - s.
NormalMultiSection delta_mc_pushforward(const VData& V, const NormalMultiSection& s, const Polynomial& lambda);
// lambda restricted to S and to the graph y = s(x).
NormalMultiSection restrict_to_zero_section(const VData& V, const Polynomial& lambda);
NormalMultiSection restrict_to_graph(const VData& V, const NormalMultiSection& s, const Polynomial& lambda);

// m_2(s, s) for a cocycle s; throws NotACocycle when m_1(s) != 0.
NormalMultiSection kuranishi(const VData& V, const NormalMultiSection& s);

struct FormalCheck {
  bool holds = true;
  int first_failing_order = -1;  // -1 when every order vanishes
  std::vector<std::string> witness;
};

// Expands MC(-s(eps)) and checks that the coefficients of eps^0..eps^N vanish.
FormalCheck verify_formal_mc(const VData& V, const FormalSeries& s, int N);

struct GaugeCheck {
  bool equation_holds = false;
  bool samples_hold = false;
  bool mc_at_samples = false;
  bool holds() const { return equation_holds && samples_hold && mc_at_samples; }
  std::vector<std::string> witness;
};

// d/dt s_t(eps) = sum_k (1/k!) m_{k+1}(s_t(eps), .., s_t(eps), lambda_t(eps)) through eps^N, as a
// polynomial identity in t and at N + 2 sampled values of t; MC(s_t(eps)) = 0 at the samples.
GaugeCheck verify_gauge(const VData& V, const GaugeFamily& family, int N);

// Adds an inert base coordinate; J and sections are transported by coordinate name.
VData extend_base(const VData& V, const std::string& name);
NormalMultiSection transplant(const NormalMultiSection& xi, const PatchPtr& target);

}  // namespace coiso
