#include "coiso/operators/patch.hpp"

#include <stdexcept>

namespace coiso {

namespace {

std::vector<std::string> concat(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

Patch::Patch(std::vector<std::string> base, std::vector<std::string> fiber)
    : base_(std::move(base)), fiber_(std::move(fiber)), ctx_(concat(base_, fiber_)) {
  if (2 * dim() > kMaxVars)
    throw std::invalid_argument("patch too large: at most " + std::to_string(kMaxVars / 2) + " coordinates");
}

std::string Patch::describe() const {
  std::string s = "(";
  for (int i = 0; i < n(); ++i) s += (i ? "," : "") + base_[i];
  s += ";";
  for (int a = 0; a < d(); ++a) s += (a ? "," : "") + fiber_[a];
  return s + ")";
}

PatchPtr make_patch(std::vector<std::string> base, std::vector<std::string> fiber) {
  return std::make_shared<const Patch>(std::move(base), std::move(fiber));
}

void require_same_patch(const PatchPtr& a, const PatchPtr& b) {
  if (a != b && (!a || !b || *a != *b)) throw std::invalid_argument("patch mismatch");
}

}  // namespace coiso
