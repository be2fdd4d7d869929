#include "dnt/labels.hpp"

#include <stdexcept>
#include <unordered_set>

namespace dnt {

LabelSet::LabelSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw std::invalid_argument("label set must be nonempty");
  }
  if (labels_.size() > 63) {
    throw std::invalid_argument("label set supports at most 63 labels");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) {
      throw std::invalid_argument("labels must be nonempty");
    }
    if (!seen.insert(l).second) {
      throw std::invalid_argument("duplicate label \"" + l + "\"");
    }
  }
}

std::optional<std::size_t> LabelSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) {
      return i;
    }
  }
  return std::nullopt;
}

std::uint64_t LabelSet::mask_of(std::span<const std::string> subset) const {
  std::uint64_t mask = 0;
  for (const auto& l : subset) {
    auto idx = index_of(l);
    if (!idx) {
      throw std::invalid_argument("label \"" + l + "\" is not in the set");
    }
    mask |= std::uint64_t{1} << *idx;
  }
  return mask;
}

std::uint64_t LabelSet::mask_of(std::initializer_list<std::string_view> subset) const {
  std::uint64_t mask = 0;
  for (auto l : subset) {
    auto idx = index_of(l);
    if (!idx) {
      throw std::invalid_argument("label \"" + std::string(l) + "\" is not in the set");
    }
    mask |= std::uint64_t{1} << *idx;
  }
  return mask;
}

std::vector<std::string> LabelSet::labels_of(std::uint64_t mask) const {
  if ((mask & ~full_mask()) != 0) {
    throw std::invalid_argument("subset mask has bits outside the label set");
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (mask & (std::uint64_t{1} << i)) {
      out.push_back(labels_[i]);
    }
  }
  return out;
}

}  // namespace dnt
