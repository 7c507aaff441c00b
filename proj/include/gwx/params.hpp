#pragma once

#include "gwx/types.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace gwx {

// Named parameter tensors, ordered by name. Map order is the canonical
// order for checkpoints, optimizer state, and gradient maps.
class ParamDict {
 public:
  using Map = std::map<std::string, Mat>;

  void add(const std::string& name, Mat value) {
    if (store_.count(name)) throw ContractError("ParamDict: duplicate parameter '" + name + "'");
    store_.emplace(name, std::move(value));
  }

  bool has(const std::string& name) const { return store_.count(name) > 0; }

  Mat& at(const std::string& name) {
    auto it = store_.find(name);
    if (it == store_.end()) throw ContractError("ParamDict: unknown parameter '" + name + "'");
    return it->second;
  }
  const Mat& at(const std::string& name) const {
    auto it = store_.find(name);
    if (it == store_.end()) throw ContractError("ParamDict: unknown parameter '" + name + "'");
    return it->second;
  }

  size_t size() const { return store_.size(); }
  bool empty() const { return store_.empty(); }

  Map::iterator begin() { return store_.begin(); }
  Map::iterator end() { return store_.end(); }
  Map::const_iterator begin() const { return store_.begin(); }
  Map::const_iterator end() const { return store_.end(); }

  // Total trainable scalar count.
  int64_t count_scalars() const {
    int64_t n = 0;
    for (const auto& [name, m] : store_) n += static_cast<int64_t>(m.size());
    return n;
  }

  // Copy every entry of `other` in under `prefix`.
  void merge(const std::string& prefix, const ParamDict& other) {
    for (const auto& [name, m] : other) add(prefix + name, m);
  }

  // Sub-dictionary of entries whose names start with `prefix` (stripped).
  ParamDict extract(const std::string& prefix) const {
    ParamDict out;
    for (const auto& [name, m] : store_)
      if (name.rfind(prefix, 0) == 0) out.add(name.substr(prefix.size()), m);
    return out;
  }

  bool same_values(const ParamDict& other) const {
    if (store_.size() != other.store_.size()) return false;
    auto it = other.store_.begin();
    for (const auto& [name, m] : store_) {
      if (it->first != name || it->second.rows() != m.rows() || it->second.cols() != m.cols())
        return false;
      if (std::memcmp(it->second.data(), m.data(), sizeof(Scalar) * static_cast<size_t>(m.size())) != 0)
        return false;
      ++it;
    }
    return true;
  }

 private:
  Map store_;
};

using GradMap = std::map<std::string, Mat>;

}  // namespace gwx
