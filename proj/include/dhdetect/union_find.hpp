#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dhd {

/// Disjoint-set forest with union by rank and path compression. Element count
/// is fixed at construction; elements start as singletons.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  /// Canonical representative of a's set; stable until the next unite().
  std::size_t find(std::size_t a);

  /// Merges the sets of a and b; returns the surviving root.
  std::size_t unite(std::size_t a, std::size_t b);

  std::size_t size() const { return parent_.size(); }

 private:
  void check_index(std::size_t a) const;

  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace dhd
