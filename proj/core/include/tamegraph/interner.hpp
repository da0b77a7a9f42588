#pragma once

#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace tamegraph {

using ArcId = std::int32_t;
using VertexId = std::int32_t;

// Bidirectional label <-> dense id table.  Rule-backed matrices intern new
// labels lazily from const accessors, so lookups are mutex guarded.  Labels
// live in a deque; references returned by label() stay valid forever.
class Interner {
 public:
  std::int32_t intern(std::string_view label);
  std::optional<std::int32_t> find(std::string_view label) const;

  // Throws std::invalid_argument for unknown labels.
  std::int32_t require(std::string_view label) const;

  const std::string& label(std::int32_t id) const;
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string_view, std::int32_t> ids_;
  std::deque<std::string> labels_;
};

}  // namespace tamegraph
