#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dnt {

/// Ordered set of unique hypothesis labels. Subsets are bitmasks over the
/// label order (bit i set = label i is a member), which keeps mass maps
/// compact and deterministically ordered. At most 63 labels.
class LabelSet {
 public:
  explicit LabelSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Mask with every label's bit set (the whole set / Theta).
  std::uint64_t full_mask() const {
    return (std::uint64_t{1} << labels_.size()) - 1;
  }

  /// Mask for a subset given by labels. Throws std::invalid_argument on an
  /// unknown label.
  std::uint64_t mask_of(std::span<const std::string> subset) const;
  std::uint64_t mask_of(std::initializer_list<std::string_view> subset) const;

  /// Labels of a subset mask, in set order. Throws if the mask has bits
  /// outside the set.
  std::vector<std::string> labels_of(std::uint64_t mask) const;

  bool operator==(const LabelSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

/// Classical evidence-theory vocabulary: a frame of discernment is an ordered
/// set of mutually exclusive, exhaustive hypotheses.
using Frame = LabelSet;

/// Number of elements in a subset mask.
inline int subset_size(std::uint64_t mask) { return __builtin_popcountll(mask); }

}  // namespace dnt
