#pragma once

#include <memory>
#include <string>
#include <vector>

#include "coiso/ring/polynomial.hpp"

namespace coiso {

// Fibered coordinate patch z = (x^1..x^n, y^1..y^d). Variable z^alpha has universal index alpha.
class Patch {
 public:
  Patch(std::vector<std::string> base, std::vector<std::string> fiber);

  int n() const { return static_cast<int>(base_.size()); }
  int d() const { return static_cast<int>(fiber_.size()); }
  int dim() const { return n() + d(); }
  const std::vector<std::string>& base() const { return base_; }
  const std::vector<std::string>& fiber() const { return fiber_; }
  const VariableContext& context() const { return ctx_; }

  int fiber_index(int a) const { return n() + a; }
  VarMask base_mask() const { return var_range(0, n()); }
  VarMask fiber_mask() const { return var_range(n(), d()); }
  VarMask mask() const { return var_range(0, dim()); }

  bool operator==(const Patch& o) const { return base_ == o.base_ && fiber_ == o.fiber_; }
  bool operator!=(const Patch& o) const { return !(*this == o); }

  std::string describe() const;

 private:
  std::vector<std::string> base_;
  std::vector<std::string> fiber_;
  VariableContext ctx_;
};

using PatchPtr = std::shared_ptr<const Patch>;

PatchPtr make_patch(std::vector<std::string> base, std::vector<std::string> fiber);
void require_same_patch(const PatchPtr& a, const PatchPtr& b);

}  // namespace coiso
