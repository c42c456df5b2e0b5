#pragma once

#include "freeloop/base.hpp"

#include <set>
#include <utility>

namespace freeloop {

// Sparse matrix over Z (or Z/p when paired with a Ring at call sites).
struct SparseMat {
  int rows = 0;
  int cols = 0;
  std::map<std::pair<int, int>, Int> entries;  // only nonzero values

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c) {}

  static SparseMat identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.entries[{i, i}] = 1;
    return m;
  }

  Int get(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? Int(0) : it->second;
  }

  void set(int r, int c, Int v) {
    if (v == 0)
      entries.erase({r, c});
    else
      entries[{r, c}] = std::move(v);
  }

  void add(int r, int c, const Int& v, const Ring& R = {}) { set(r, c, R.norm(get(r, c) + v)); }

  int nnz() const { return static_cast<int>(entries.size()); }

  SparseMat transpose() const {
    SparseMat m(cols, rows);
    for (const auto& [rc, v] : entries) m.entries[{rc.second, rc.first}] = v;
    return m;
  }

  SparseMat mul(const SparseMat& o, const Ring& R = {}) const;
  std::vector<Int> apply(const std::vector<Int>& v, const Ring& R = {}) const;

  bool operator==(const SparseMat& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
  }
};

// L * A * R = D with D diagonal. Over Z the diagonal is positive and each
// entry divides the next; over Z/p every diagonal entry is 1.
struct SmithResult {
  std::vector<Int> diag;
  int rank = 0;
  bool with_transforms = false;
  SparseMat L, Linv, R, Rinv;
};

SmithResult smith(const SparseMat& A, const Ring& ring = {}, bool transforms = false);

int rank_of(const SparseMat& A, const Ring& ring = {});

}  // namespace freeloop
