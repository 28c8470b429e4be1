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

#include "tanglesim/layout.hpp"

#include <algorithm>
#include <set>

#include "tanglesim/error.hpp"

namespace tanglesim {

SubsystemLayout::SubsystemLayout(std::vector<Subsystem> parts) : parts_(std::move(parts)) {
  std::set<std::string> seen;
  for (const auto& p : parts_) {
    if (p.label.empty()) throw Error("SubsystemLayout: empty label");
    if (p.dim < 2) throw Error("SubsystemLayout: part '" + p.label + "' has dim < 2");
    if (!seen.insert(p.label).second)
      throw Error("SubsystemLayout: duplicate label '" + p.label + "'");
    total_dim_ *= p.dim;
  }
}

bool SubsystemLayout::contains(const std::string& label) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [&](const Subsystem& p) { return p.label == label; });
}

std::size_t SubsystemLayout::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i].label == label) return i;
  throw Error("unknown subsystem label '" + label + "'");
}

std::size_t SubsystemLayout::dim_of(const std::string& label) const {
  return parts_[index_of(label)].dim;
}

std::vector<std::string> SubsystemLayout::labels() const {
  std::vector<std::string> out;
  for (const auto& p : parts_) out.push_back(p.label);
  return out;
}

std::vector<std::size_t> SubsystemLayout::dims() const {
  std::vector<std::size_t> out;
  for (const auto& p : parts_) out.push_back(p.dim);
  return out;
}

SubsystemLayout SubsystemLayout::restricted_to(const std::vector<std::string>& labels) const {
  for (const auto& l : labels) (void)index_of(l);
  std::vector<Subsystem> kept;
  for (const auto& p : parts_)
    if (std::find(labels.begin(), labels.end(), p.label) != labels.end()) kept.push_back(p);
  return SubsystemLayout(std::move(kept));
}

SubsystemLayout SubsystemLayout::permuted(const std::vector<std::string>& order) const {
  if (order.size() != parts_.size()) throw Error("permutation has wrong length");
  std::vector<Subsystem> out;
  for (const auto& l : order) out.push_back(parts_[index_of(l)]);
  return SubsystemLayout(std::move(out));  // rejects repeated labels
}

std::vector<std::size_t> SubsystemLayout::digits(std::size_t flat) const {
  std::vector<std::size_t> d(parts_.size());
  for (std::size_t i = parts_.size(); i-- > 0;) {
    d[i] = flat % parts_[i].dim;
    flat /= parts_[i].dim;
  }
  return d;
}

std::size_t SubsystemLayout::flat_index(const std::vector<std::size_t>& digits) const {
  if (digits.size() != parts_.size()) throw Error("flat_index: wrong number of digits");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (digits[i] >= parts_[i].dim)
      throw Error("flat_index: level " + std::to_string(digits[i]) + " out of range for '" +
                  parts_[i].label + "'");
    flat = flat * parts_[i].dim + digits[i];
  }
  return flat;
}

}  // namespace tanglesim
