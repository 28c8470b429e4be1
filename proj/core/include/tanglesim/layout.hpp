// Copyright 2026 The tanglesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tanglesim {

struct Subsystem {
  std::string label;
  std::size_t dim = 2;

  friend bool operator==(const Subsystem&, const Subsystem&) = default;
};

/// Ordered list of labelled tensor factors. The leftmost part is the most
/// significant (slowest-varying) index of the flattened state.
class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  explicit SubsystemLayout(std::vector<Subsystem> parts);
  SubsystemLayout(std::initializer_list<Subsystem> parts)
      : SubsystemLayout(std::vector<Subsystem>(parts)) {}

  const std::vector<Subsystem>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  std::size_t total_dim() const noexcept { return total_dim_; }

  bool contains(const std::string& label) const;
  /// Position of `label`; throws Error for unknown labels.
  std::size_t index_of(const std::string& label) const;
  std::size_t dim_of(const std::string& label) const;

  std::vector<std::string> labels() const;
  std::vector<std::size_t> dims() const;

  /// Layout restricted to `labels`, kept in this layout's relative order.
  SubsystemLayout restricted_to(const std::vector<std::string>& labels) const;
  /// Layout permuted into exactly the order given.
  SubsystemLayout permuted(const std::vector<std::string>& order) const;

  /// Mixed-radix digits of a flat index, most significant first.
  std::vector<std::size_t> digits(std::size_t flat) const;
  std::size_t flat_index(const std::vector<std::size_t>& digits) const;

  friend bool operator==(const SubsystemLayout& a, const SubsystemLayout& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<Subsystem> parts_;
  std::size_t total_dim_ = 1;
};

}  // namespace tanglesim
