#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "qdst/errors.hpp"

namespace qdst {

/// Subsets of a frame are bitmasks: bit i set <=> atom i present.
using focal_set = std::uint32_t;

inline constexpr std::size_t max_frame_atoms = 16;

inline int set_cardinality(focal_set s) { return std::popcount(s); }

/// |A∩B| / |A∪B| for non-empty masks.
inline double jaccard(focal_set a, focal_set b) {
  return static_cast<double>(std::popcount(a & b)) / static_cast<double>(std::popcount(a | b));
}

/// Ordered frame of discernment: mutually exclusive atoms, order fixed at
/// construction (bit i of a focal_set refers to atoms()[i]).
class frame {
 public:
  frame() = default;

  explicit frame(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty() || atoms_.size() > max_frame_atoms)
      throw_input(errc::bad_input,
                  "frame needs 1.." + std::to_string(max_frame_atoms) + " atoms, got " +
                      std::to_string(atoms_.size()));
    std::unordered_set<std::string> seen;
    for (const auto& a : atoms_) {
      if (a.empty()) throw_input(errc::bad_input, "empty atom label");
      if (!seen.insert(a).second) throw_input(errc::bad_input, "duplicate atom label '" + a + "'");
    }
  }

  std::size_t size() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& atom(std::size_t i) const { return atoms_[i]; }

  focal_set full_set() const {
    return static_cast<focal_set>((std::uint32_t{1} << atoms_.size()) - 1);
  }

  bool contains(focal_set s) const { return (s & ~full_set()) == 0; }

  /// Index of a labelled atom; input error if absent.
  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (atoms_[i] == label) return i;
    throw_input(errc::bad_input, "unknown atom '" + label + "'");
  }

  friend bool operator==(const frame& a, const frame& b) { return a.atoms_ == b.atoms_; }
  friend bool operator!=(const frame& a, const frame& b) { return !(a == b); }

 private:
  std::vector<std::string> atoms_;
};

inline void require_same_frame(const frame& a, const frame& b) {
  if (a != b) throw_input(errc::frame_mismatch, "operands live on different frames");
}

}  // namespace qdst
