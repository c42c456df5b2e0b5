#include "freeloop/diagonal.hpp"

#include <algorithm>
#include <set>
#include <variant>

namespace freeloop {

namespace {

// subsets ordered by size, then lexicographically within a size
std::vector<std::vector<int>> all_subsets(const std::vector<int>& items) {
  std::vector<std::vector<int>> out;
  int n = static_cast<int>(items.size());
  for (int r = 0; r <= n; ++r) {
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    for (;;) {
      std::vector<int> sub(r);
      for (int i = 0; i < r; ++i) sub[i] = items[idx[i]];
      out.push_back(sub);
      int i = r - 1;
      while (i >= 0 && idx[i] == n - r + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (r == 0 && n == 0) break;
  }
  return out;
}

std::vector<int> range_vec(int lo, int hi) {  // [lo, hi)
  std::vector<int> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

int a_sign(int m, int n, const std::vector<int>& J, const std::vector<int>& C) {
  std::set<int> L;
  for (int c : C) L.insert(m + c);
  if (m > 0) {
    for (int j : J) L.insert(j + 1);
    L.insert(1);
  }
  long crossings = 0;
  for (int k = 1; k <= m + n; ++k) {
    if (L.count(k)) continue;
    for (int l : L)
      if (l < k) ++crossings;
  }
  return sign_pow(crossings);
}

Word b_left_word(int m, const std::vector<int>& J, int r, int cube_left) {
  Word wL;
  int p = static_cast<int>(J.size());
  if (r >= 1) {
    int jr = J[r - 1];
    wL.push_back({2, jr});
    for (int s = r - 2; s >= 0; --s) wL.push_back({0, (m - jr) + cube_left + J[s]});
    for (int s = p - 1; s >= r; --s) wL.push_back({0, J[s] - jr + 1});
  } else {
    for (int s = p - 1; s >= 0; --s) wL.push_back({0, J[s] + 1});
  }
  return wL;
}

struct GidB {
  std::vector<int> J;
  int t = 0;
  std::vector<int> C;
  int r = 0;

  bool operator<(const GidB& o) const {
    if (J != o.J) return J < o.J;
    if (t != o.t) return t < o.t;
    if (C != o.C) return C < o.C;
    return r < o.r;
  }
  bool operator==(const GidB& o) const { return J == o.J && t == o.t && C == o.C && r == o.r; }
};

struct RawTerm {
  std::variant<int, GidB> gid;
  Word left, right;
};

std::vector<RawTerm> terms_for(int m, int n) {
  std::vector<RawTerm> out;
  for (const auto& C : all_subsets(range_vec(1, n + 1))) {
    std::set<int> cset(C.begin(), C.end());
    std::vector<int> comp;
    for (int j = n; j >= 1; --j)
      if (!cset.count(j)) comp.push_back(j);
    Word wCL, wCR;
    for (auto it = C.rbegin(); it != C.rend(); ++it) wCL.push_back({0, m + *it});
    for (int j : comp) wCR.push_back({1, m + j});
    int cube_left = n - static_cast<int>(C.size());
    if (m == 0) {
      out.push_back({a_sign(m, n, {}, C), wCL, wCR});
      continue;
    }
    for (const auto& Jp : all_subsets(range_vec(1, m))) {
      Word wFL, wFR;
      std::vector<int> withzero{0};
      withzero.insert(withzero.end(), Jp.begin(), Jp.end());
      for (auto it = withzero.rbegin(); it != withzero.rend(); ++it) wFL.push_back({0, *it + 1});
      std::set<int> jset(Jp.begin(), Jp.end());
      for (int s = m - 1; s >= 1; --s)
        if (!jset.count(s)) wFR.push_back({1, s + 1});
      Word L = wCL, R = wCR;
      L.insert(L.end(), wFL.begin(), wFL.end());
      R.insert(R.end(), wFR.begin(), wFR.end());
      out.push_back({a_sign(m, n, Jp, C), L, R});
    }
    for (const auto& J : all_subsets(range_vec(1, m))) {
      int p = static_cast<int>(J.size());
      std::set<int> jset(J.begin(), J.end());
      Word wDel;
      for (int s = m - 1; s >= 1; --s)
        if (!jset.count(s)) wDel.push_back({1, s + 1});
      for (int r = 0; r <= p; ++r) {
        Word wFL = b_left_word(m, J, r, cube_left);
        for (int t = r + 1; t <= p + 1; ++t) {
          Word L = wCL, R = wCR;
          L.insert(L.end(), wFL.begin(), wFL.end());
          R.insert(R.end(), wDel.begin(), wDel.end());
          R.push_back({2, t});
          out.push_back({GidB{J, t, C, r}, L, R});
        }
      }
    }
  }
  return out;
}

using GKey = std::optional<GidB>;  // nullopt marks the constant slot
using Mono = std::pair<Elem, Elem>;

std::map<std::pair<int, int>, std::vector<DiagTerm>>& memo() {
  static std::map<std::pair<int, int>, std::vector<DiagTerm>> t;
  return t;
}

const std::vector<DiagTerm>& table_impl(int m, int n);

std::vector<DiagTerm> solve_table(int m, int n) {
  Elem topelem{top_cell(m, n), {}};
  auto terms = terms_for(m, n);

  std::map<Mono, std::map<GKey, Int>> eqs;
  auto bump = [&](const Mono& mono, const GKey& g, const Int& c) {
    auto& d = eqs[mono];
    auto it = d.find(g);
    if (it == d.end()) {
      if (c != 0) d.emplace(g, c);
      return;
    }
    it->second += c;
    if (it->second == 0) d.erase(it);
  };

  for (const auto& term : terms) {
    Elem L = apply_word(topelem, term.left);
    Elem R = apply_word(topelem, term.right);
    GKey g;
    Int mul = 1;
    if (std::holds_alternative<int>(term.gid))
      mul = std::get<int>(term.gid);
    else
      g = std::get<GidB>(term.gid);
    for (const auto& [f, c] : boundary(L)) bump({f, R}, g, mul * c);
    Int s = sign_pow(elem_dim(L));
    for (const auto& [f, c] : boundary(R)) bump({L, f}, g, mul * s * c);
  }
  for (const auto& [y, c] : boundary(topelem)) {
    auto [myp, npc] = intrinsic(y.cell);
    for (const auto& t : table_impl(myp, npc + static_cast<int>(y.tower.size())))
      bump({apply_word(y, t.left), apply_word(y, t.right)}, GKey{}, -c * t.sign);
  }

  std::map<GidB, Int> sol;
  if (m > 0) sol[GidB{{}, 1, {}, 0}] = 1;
  std::map<Mono, std::map<GKey, Int>> pend;
  for (const auto& [mono, d] : eqs)
    if (!d.empty()) pend[mono] = d;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Mono> drop;
    for (auto& [mono, d] : pend) {
      Int cst = 0;
      if (auto it = d.find(GKey{}); it != d.end()) {
        cst = it->second;
        d.erase(it);
      }
      std::vector<GidB> solved;
      for (const auto& [g, c] : d)
        if (g && sol.count(*g)) solved.push_back(*g);
      for (const auto& g : solved) {
        cst += d.at(GKey{g}) * sol.at(g);
        d.erase(GKey{g});
      }
      if (d.empty()) {
        expect(cst == 0, "coproduct solver: inconsistent equation");
        drop.push_back(mono);
      } else if (d.size() == 1) {
        const auto& [g, a] = *d.begin();
        Int b = -cst;
        expect(a != 0 && b % a == 0 && abs(b / a) == 1, "coproduct solver: non-unit coefficient");
        sol[*g] = b / a;
        drop.push_back(mono);
        changed = true;
      } else if (cst != 0) {
        d[GKey{}] = cst;
      }
    }
    for (const auto& mono : drop) pend.erase(mono);
  }

  std::vector<DiagTerm> out;
  for (const auto& term : terms) {
    Int s;
    if (std::holds_alternative<int>(term.gid)) {
      s = std::get<int>(term.gid);
    } else {
      auto it = sol.find(std::get<GidB>(term.gid));
      expect(it != sol.end(), "coproduct solver: unresolved coefficient");
      s = it->second;
    }
    out.push_back({s, term.left, term.right});
  }
  return out;
}

const std::vector<DiagTerm>& table_impl(int m, int n) {
  auto key = std::make_pair(m, n);
  auto it = memo().find(key);
  if (it != memo().end()) return it->second;
  for (int tot = 0; tot < m + n; ++tot)
    for (int mm = 0; mm <= tot; ++mm) table_impl(mm, tot - mm);
  auto res = solve_table(m, n);
  return memo().emplace(key, std::move(res)).first->second;
}

}  // namespace

const std::vector<DiagTerm>& diag_table(int m, int n) { return table_impl(m, n); }

PairSum diagonal(const Elem& e) {
  auto [mp, npc] = intrinsic(e.cell);
  PairSum acc;
  for (const auto& t : diag_table(mp, npc + static_cast<int>(e.tower.size()))) {
    auto key = std::make_pair(apply_word(e, t.left), apply_word(e, t.right));
    auto it = acc.find(key);
    if (it == acc.end()) {
      acc.emplace(key, t.sign);
    } else {
      it->second += t.sign;
      if (it->second == 0) acc.erase(it);
    }
  }
  return acc;
}

PairSum diagonal_chain(const ElemSum& ch) {
  PairSum acc;
  for (const auto& [e, c] : ch) {
    for (const auto& [k, c2] : diagonal(e)) {
      auto it = acc.find(k);
      if (it == acc.end()) {
        if (c * c2 != 0) acc.emplace(k, c * c2);
      } else {
        it->second += c * c2;
        if (it->second == 0) acc.erase(it);
      }
    }
  }
  return acc;
}

std::optional<std::vector<int>> project_phi(const Cell& cell) {
  int open_dim = static_cast<int>(cell.blocks[0].elems.size()) - 1;
  if (open_dim != dim_cell(cell)) return std::nullopt;
  return cell.blocks[0].elems;
}

}  // namespace freeloop
