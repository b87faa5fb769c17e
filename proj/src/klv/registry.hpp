#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace klv::core {

// Roles drive truncation and specialization policies: TorusZ variables are the
// series variables z1, z2; FramingW are the framing weights w1..wr; AuxX are
// scratch alphabet variables x1..xn used for restricted expansions; AuxV is
// the interpolation variable of the finite-probe sums.
enum class VarRole { TorusZ = 0, FramingW = 1, AuxX = 2, AuxV = 3 };

class VarRegistry;
using RegistryPtr = std::shared_ptr<const VarRegistry>;

// Immutable, shared variable table. All polynomials participating in one
// computation must share the same instance (checked by pointer identity).
class VarRegistry {
 public:
  static RegistryPtr make(std::vector<std::pair<std::string, VarRole>> vars);

  // z1, z2, w1..wr, optionally x1..xnx, optionally v.
  static RegistryPtr standard(int r, int nx = 0, bool with_v = false);

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  VarRole role(size_t i) const { return roles_[i]; }
  int find(const std::string& name) const;  // -1 if absent
  const std::vector<size_t>& indices(VarRole r) const { return by_role_[static_cast<int>(r)]; }

 private:
  VarRegistry() = default;
  std::vector<std::string> names_;
  std::vector<VarRole> roles_;
  std::map<std::string, int> index_;
  std::vector<std::vector<size_t>> by_role_{4};
};

}  // namespace klv::core
