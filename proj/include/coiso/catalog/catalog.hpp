#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "coiso/vdata/vdata.hpp"

namespace coiso {

struct NamedStructure {
  std::string name;
  PatchPtr patch;
  JacobiStructure J;
  std::vector<std::string> provenance;
};

class JacobiFailure : public std::runtime_error {
 public:
  JacobiFailure(const std::string& what, std::vector<std::string> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  std::vector<std::string> witness_;
};

// Jacobi structure of the contact form du - p_i dx^i on coordinates (x^i, u, p_i), with the
// bracket {f, g} = theta([X_f, X_g]) where theta(X_f) = f and i_{X_f} d theta = (R f) theta - df.
// Coordinates are laid out on `patch` by name; names default to x,u,p (n = 1) or x1..,u,p1.. .
NamedStructure darboux_contact(int n);
NamedStructure contact_structure_on(const PatchPtr& patch, const std::vector<std::string>& x,
                                    const std::string& u, const std::vector<std::string>& p);

std::vector<std::string> contact_x_names(int n);
std::vector<std::string> contact_p_names(int n);

// Zero section of J^1: base x, fibers (u, p).
VData legendrian_patch(int n);
// Flowout {p = 0}: base (x, u), fibers p.
VData flowout_patch(int n);

// Jacobi structure with Gamma = 0 and the given bivector Lambda (J's X-tensor is Lambda / 2).
NamedStructure poisson_as_jacobi(const PatchPtr& patch, const AntisymTensor& bivector);

}  // namespace coiso
