#include "evclust/frame.hpp"

#include "evclust/error.hpp"

#include <unordered_set>

namespace evclust {

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) fail(Errc::invalid_argument, "frame must have at least one atom");
  if (labels_.size() > max_atoms) {
    fail(Errc::too_large, "frame has " + std::to_string(labels_.size()) + " atoms; at most 64 supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) fail(Errc::invalid_argument, "duplicate frame atom '" + l + "'");
  }
  full_ = labels_.size() == 64 ? Subset(~std::uint64_t{0})
                               : Subset((std::uint64_t{1} << labels_.size()) - 1);
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

Subset Frame::atom(std::size_t index) const {
  if (index >= labels_.size()) fail(Errc::invalid_argument, "atom index out of range");
  return Subset(std::uint64_t{1} << index);
}

Subset Frame::subset_of(std::span<const std::string> labels) const {
  std::uint64_t bits = 0;
  for (const auto& l : labels) {
    auto i = index_of(l);
    if (!i) fail(Errc::unknown_atom, "unknown atom '" + l + "'");
    bits |= std::uint64_t{1} << *i;
  }
  return Subset(bits);
}

std::vector<std::string> Frame::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (s.contains(i)) out.push_back(labels_[i]);
  }
  return out;
}

FramePtr numbered_frame(std::string_view prefix, std::size_t n, std::size_t first) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(prefix) + std::to_string(first + i));
  return make_frame(std::move(labels));
}

}  // namespace evclust
