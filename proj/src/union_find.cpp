#include "dhdetect/union_find.hpp"

#include <string>

#include "dhdetect/error.hpp"

namespace dhd {

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
  for (std::size_t i = 0; i < n; ++i) {
    parent_[i] = static_cast<std::uint32_t>(i);
  }
}

void UnionFind::check_index(std::size_t a) const {
  if (a >= parent_.size()) {
    throw IndexError("union-find index " + std::to_string(a) + " out of range (size " +
                     std::to_string(parent_.size()) + ")");
  }
}

std::size_t UnionFind::find(std::size_t a) {
  check_index(a);
  std::size_t root = a;
  while (parent_[root] != root) {
    root = parent_[root];
  }
  while (parent_[a] != root) {
    std::size_t next = parent_[a];
    parent_[a] = static_cast<std::uint32_t>(root);
    a = next;
  }
  return root;
}

std::size_t UnionFind::unite(std::size_t a, std::size_t b) {
  std::size_t ra = find(a);
  std::size_t rb = find(b);
  if (ra == rb) {
    return ra;
  }
  if (rank_[ra] < rank_[rb]) {
    std::swap(ra, rb);
  }
  parent_[rb] = static_cast<std::uint32_t>(ra);
  if (rank_[ra] == rank_[rb]) {
    ++rank_[ra];
  }
  return ra;
}

}  // namespace dhd
