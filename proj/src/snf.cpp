#include "freeloop/snf.hpp"

#include <algorithm>
#include <limits>

namespace freeloop {

Int Ring::inv(const Int& a) const {
  expect(p > 0, "inverse needs a field");
  Int t = 0, newt = 1, r = p, newr = norm(a);
  while (newr != 0) {
    Int q = r / newr;
    Int tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  expect(r == 1, "not invertible mod p");
  return norm(t);
}

Ring Ring::parse(const std::string& s) {
  if (s == "Z") return Ring{0};
  if (s.rfind("Z/", 0) == 0) {
    long p = std::stol(s.substr(2));
    expect(p >= 2, "bad modulus in ring name");
    return Ring{p};
  }
  fail("unknown ring: " + s);
}

SparseMat SparseMat::mul(const SparseMat& o, const Ring& R) const {
  expect(cols == o.rows, "matrix shape mismatch in mul");
  // index o by row
  std::vector<std::vector<std::pair<int, Int>>> orows(o.rows);
  for (const auto& [rc, v] : o.entries) orows[rc.first].push_back({rc.second, v});
  SparseMat out(rows, o.cols);
  for (const auto& [rc, v] : entries) {
    for (const auto& [c2, v2] : orows[rc.second]) out.add(rc.first, c2, v * v2, R);
  }
  return out;
}

std::vector<Int> SparseMat::apply(const std::vector<Int>& v, const Ring& R) const {
  expect(static_cast<int>(v.size()) == cols, "vector length mismatch in apply");
  std::vector<Int> out(rows, 0);
  for (const auto& [rc, val] : entries) {
    if (v[rc.second] != 0) out[rc.first] = R.norm(out[rc.first] + val * v[rc.second]);
  }
  return out;
}

namespace {

// Row-major sparse workspace with a column occupancy index, plus optional
// transform tracking. Linv and R are kept transposed so that every update
// is a row operation on the stored form.
struct Work {
  int rows, cols;
  Ring R;
  bool tf;
  std::vector<std::map<int, Int>> a;
  std::vector<std::set<int>> colrows;
  std::vector<std::map<int, Int>> tL, tLinvT, tRT, tRinv;

  Work(const SparseMat& m, const Ring& ring, bool transforms)
      : rows(m.rows), cols(m.cols), R(ring), tf(transforms), a(m.rows), colrows(m.cols) {
    for (const auto& [rc, v] : m.entries) {
      Int nv = R.norm(v);
      if (nv == 0) continue;
      a[rc.first][rc.second] = nv;
      colrows[rc.second].insert(rc.first);
    }
    if (tf) {
      tL.resize(rows);
      tLinvT.resize(rows);
      tRT.resize(cols);
      tRinv.resize(cols);
      for (int i = 0; i < rows; ++i) tL[i][i] = tLinvT[i][i] = 1;
      for (int j = 0; j < cols; ++j) tRT[j][j] = tRinv[j][j] = 1;
    }
  }

  Int at(int r, int c) const {
    auto it = a[r].find(c);
    return it == a[r].end() ? Int(0) : it->second;
  }

  void put(int r, int c, const Int& v) {
    if (v == 0) {
      a[r].erase(c);
      colrows[c].erase(r);
    } else {
      a[r][c] = v;
      colrows[c].insert(r);
    }
  }

  static void vec_axpy(std::map<int, Int>& dst, const std::map<int, Int>& src, const Int& q,
                       const Ring& R) {
    for (const auto& [k, v] : src) {
      auto it = dst.find(k);
      if (it == dst.end()) {
        Int nv = R.norm(q * v);
        if (nv != 0) dst[k] = nv;
      } else {
        it->second = R.norm(it->second + q * v);
        if (it->second == 0) dst.erase(it);
      }
    }
  }

  static void vec_scale(std::map<int, Int>& v, const Int& c, const Ring& R) {
    for (auto it = v.begin(); it != v.end();) {
      it->second = R.norm(it->second * c);
      if (it->second == 0)
        it = v.erase(it);
      else
        ++it;
    }
  }

  // row i += q * row j
  void row_axpy(int i, int j, const Int& q) {
    if (q == 0) return;
    for (const auto& [c, v] : a[j]) put(i, c, R.norm(at(i, c) + q * v));
    if (tf) {
      vec_axpy(tL[i], tL[j], q, R);
      vec_axpy(tLinvT[j], tLinvT[i], R.neg(q), R);
    }
  }

  void row_swap(int i, int j) {
    if (i == j) return;
    std::set<int> touched;
    for (const auto& [c, v] : a[i]) touched.insert(c);
    for (const auto& [c, v] : a[j]) touched.insert(c);
    std::swap(a[i], a[j]);
    for (int c : touched) {
      colrows[c].erase(i);
      colrows[c].erase(j);
      if (a[i].count(c)) colrows[c].insert(i);
      if (a[j].count(c)) colrows[c].insert(j);
    }
    if (tf) {
      std::swap(tL[i], tL[j]);
      std::swap(tLinvT[i], tLinvT[j]);
    }
  }

  void row_scale(int i, const Int& c) {
    if (c == 1) return;
    std::vector<int> gone;
    for (auto& [col, v] : a[i]) {
      v = R.norm(v * c);
      if (v == 0) gone.push_back(col);
    }
    for (int col : gone) {
      a[i].erase(col);
      colrows[col].erase(i);
    }
    if (tf) {
      vec_scale(tL[i], c, R);
      vec_scale(tLinvT[i], R.p > 0 ? R.inv(c) : c, R);  // c = ±1 over Z
    }
  }

  // col j += q * col i
  void col_axpy(int j, int i, const Int& q) {
    if (q == 0) return;
    std::vector<int> rs(colrows[i].begin(), colrows[i].end());
    for (int r : rs) put(r, j, R.norm(at(r, j) + q * at(r, i)));
    if (tf) {
      vec_axpy(tRT[j], tRT[i], q, R);
      vec_axpy(tRinv[i], tRinv[j], R.neg(q), R);
    }
  }

  void col_swap(int i, int j) {
    if (i == j) return;
    std::set<int> touched;
    for (int r : colrows[i]) touched.insert(r);
    for (int r : colrows[j]) touched.insert(r);
    for (int r : touched) {
      Int vi = at(r, i), vj = at(r, j);
      put(r, i, vj);
      put(r, j, vi);
    }
    if (tf) {
      std::swap(tRT[i], tRT[j]);
      std::swap(tRinv[i], tRinv[j]);
    }
  }

  SparseMat emit(const std::vector<std::map<int, Int>>& m, int n, bool transposed) const {
    SparseMat out(n, n);
    for (int i = 0; i < n; ++i)
      for (const auto& [j, v] : m[i]) {
        if (transposed)
          out.entries[{j, i}] = v;
        else
          out.entries[{i, j}] = v;
      }
    return out;
  }
};

Int nearest_quot(const Int& n, const Int& d) {
  Int q = n / d;
  Int best = q;
  Int bestr = abs(n - q * d);
  for (int off : {-1, 1}) {
    Int cand = q + off;
    Int r = abs(n - cand * d);
    if (r < bestr) {
      bestr = r;
      best = cand;
    }
  }
  return best;
}

}  // namespace

SmithResult smith(const SparseMat& A, const Ring& ring, bool transforms) {
  Work w(A, ring, transforms);
  const int n = std::min(A.rows, A.cols);
  SmithResult res;
  int t = 0;
  while (t < n) {
    // pick pivot: smallest magnitude (Z) then least fill, then position
    int pr = -1, pc = -1;
    Int pv = 0;
    long long pfill = std::numeric_limits<long long>::max();
    for (int r = t; r < w.rows; ++r) {
      for (const auto& [c, v] : w.a[r]) {
        if (c < t) continue;
        Int av = abs(v);
        long long fill = (static_cast<long long>(w.a[r].size()) - 1) *
                         (static_cast<long long>(w.colrows[c].size()) - 1);
        bool better;
        if (pr < 0)
          better = true;
        else if (ring.p == 0 && av != pv)
          better = av < pv;
        else
          better = fill < pfill;
        if (better) {
          pr = r;
          pc = c;
          pv = av;
          pfill = fill;
        }
      }
    }
    if (pr < 0) break;
    w.row_swap(t, pr);
    w.col_swap(t, pc);

    if (ring.is_field()) {
      w.row_scale(t, ring.inv(w.at(t, t)));
      std::vector<int> below(w.colrows[t].begin(), w.colrows[t].end());
      for (int r : below)
        if (r != t) w.row_axpy(r, t, ring.neg(w.at(r, t)));
      std::vector<int> right;
      for (const auto& [c, v] : w.a[t])
        if (c != t) right.push_back(c);
      for (int c : right) w.col_axpy(c, t, ring.neg(w.at(t, c)));
      res.diag.push_back(1);
      ++t;
      continue;
    }

    for (;;) {
      bool moved = false;
      // clear column t
      for (;;) {
        int r2 = -1;
        for (int r : w.colrows[t])
          if (r != t) {
            r2 = r;
            break;
          }
        if (r2 < 0) break;
        Int q = nearest_quot(w.at(r2, t), w.at(t, t));
        w.row_axpy(r2, t, -q);
        if (w.at(r2, t) != 0) {
          w.row_swap(t, r2);
          moved = true;
        }
      }
      if (moved) continue;
      // clear row t
      for (;;) {
        int c2 = -1;
        for (const auto& [c, v] : w.a[t])
          if (c != t) {
            c2 = c;
            break;
          }
        if (c2 < 0) break;
        Int q = nearest_quot(w.at(t, c2), w.at(t, t));
        w.col_axpy(c2, t, -q);
        if (w.at(t, c2) != 0) {
          w.col_swap(t, c2);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      // pivot divides everything below/right?
      Int piv = w.at(t, t);
      int br = -1;
      for (int r = t + 1; r < w.rows && br < 0; ++r)
        for (const auto& [c, v] : w.a[r]) {
          if (c <= t) continue;
          if (v % piv != 0) {
            br = r;
            break;
          }
        }
      if (br < 0) break;
      w.row_axpy(t, br, 1);
    }
    if (w.at(t, t) < 0) w.row_scale(t, -1);
    res.diag.push_back(w.at(t, t));
    ++t;
  }
  res.rank = static_cast<int>(res.diag.size());
  if (transforms) {
    res.with_transforms = true;
    res.L = w.emit(w.tL, w.rows, false);
    res.Linv = w.emit(w.tLinvT, w.rows, true);
    res.R = w.emit(w.tRT, w.cols, true);
    res.Rinv = w.emit(w.tRinv, w.cols, false);
  }
  return res;
}

int rank_of(const SparseMat& A, const Ring& ring) { return smith(A, ring, false).rank; }

}  // namespace freeloop
