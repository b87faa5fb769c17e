#include "klv/registry.hpp"

#include "klv/error.hpp"

namespace klv::core {

RegistryPtr VarRegistry::make(std::vector<std::pair<std::string, VarRole>> vars) {
  auto reg = std::shared_ptr<VarRegistry>(new VarRegistry());
  for (auto& [name, role] : vars) {
    if (name.empty()) fail(Status::InvalidArg, "empty variable name");
    if (reg->index_.count(name)) fail(Status::InvalidArg, "duplicate variable name: " + name);
    int idx = static_cast<int>(reg->names_.size());
    reg->index_[name] = idx;
    reg->names_.push_back(name);
    reg->roles_.push_back(role);
    reg->by_role_[static_cast<int>(role)].push_back(static_cast<size_t>(idx));
  }
  return reg;
}

RegistryPtr VarRegistry::standard(int r, int nx, bool with_v) {
  if (r < 0 || nx < 0) fail(Status::InvalidArg, "negative registry dimensions");
  std::vector<std::pair<std::string, VarRole>> vars;
  vars.emplace_back("z1", VarRole::TorusZ);
  vars.emplace_back("z2", VarRole::TorusZ);
  for (int i = 1; i <= r; ++i) vars.emplace_back("w" + std::to_string(i), VarRole::FramingW);
  for (int i = 1; i <= nx; ++i) vars.emplace_back("x" + std::to_string(i), VarRole::AuxX);
  if (with_v) vars.emplace_back("v", VarRole::AuxV);
  return make(std::move(vars));
}

int VarRegistry::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

}  // namespace klv::core
