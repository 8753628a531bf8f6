#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evclust {

/// A subset of a frame of at most 64 atoms, one bit per atom in frame order.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t atom) const { return (bits_ >> atom) & 1U; }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Ordered, immutable set of uniquely labelled atoms.
class Frame {
 public:
  static constexpr std::size_t max_atoms = 64;

  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t atom) const { return labels_.at(atom); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  Subset full() const { return full_; }
  Subset atom(std::size_t index) const;
  /// Complement relative to this frame.
  Subset complement(Subset s) const { return Subset(full_.bits() & ~s.bits()); }
  bool owns(Subset s) const { return s.is_subset_of(full_); }

  /// Throws Errc::unknown_atom on an undeclared label.
  Subset subset_of(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(Subset s) const;

  friend bool operator==(const Frame& a, const Frame& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  Subset full_;
};

using FramePtr = std::shared_ptr<const Frame>;

inline FramePtr make_frame(std::vector<std::string> labels) {
  return std::make_shared<const Frame>(std::move(labels));
}

/// Frame of labels "<prefix>1".."<prefix>n".
FramePtr numbered_frame(std::string_view prefix, std::size_t n, std::size_t first = 1);

inline bool same_frame(const FramePtr& a, const FramePtr& b) { return a == b || *a == *b; }

}  // namespace evclust
