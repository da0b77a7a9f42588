#include "tamegraph/interner.hpp"

#include <stdexcept>

namespace tamegraph {

std::int32_t Interner::intern(std::string_view label) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = ids_.find(label);
  if (it != ids_.end()) return it->second;
  labels_.emplace_back(label);
  std::int32_t id = static_cast<std::int32_t>(labels_.size()) - 1;
  ids_.emplace(std::string_view(labels_.back()), id);
  return id;
}

std::optional<std::int32_t> Interner::find(std::string_view label) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = ids_.find(label);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::int32_t Interner::require(std::string_view label) const {
  auto id = find(label);
  if (!id) throw std::invalid_argument("unknown arc or vertex label: " + std::string(label));
  return *id;
}

const std::string& Interner::label(std::int32_t id) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (id < 0 || static_cast<std::size_t>(id) >= labels_.size())
    throw std::invalid_argument("interner id out of range");
  return labels_[static_cast<std::size_t>(id)];
}

std::size_t Interner::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return labels_.size();
}

}  // namespace tamegraph
