#include "freeloop/fnset.hpp"

#include "freeloop/diagonal.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace freeloop {

bool op_legal(std::pair<int, int> bid, Op op) {
  auto [m, n] = bid;
  if (op.k == 3) return 1 <= op.i && op.i <= n + 1;
  if (op.k == 2) return 1 <= op.i && op.i <= m;
  return 1 <= op.i && op.i <= m + n;
}

std::pair<int, int> bid_after(std::pair<int, int> bid, Op op) {
  auto [m, n] = bid;
  int i = op.i;
  if (op.k == 3) return {m, n + 1};
  if (op.k == 2) return {m - i, n + i - 1};
  if (op.k == 1 && i == 1 && m > 0) return {m - 1, n};
  if (op.k == 0) return i <= m ? std::make_pair(i - 1, m + n - i) : std::make_pair(m, n - 1);
  return i <= m ? std::make_pair(m - 1, n) : std::make_pair(m, n - 1);
}

namespace {

std::string apply_op(const FnSet& fs, const std::string& el, Op op) {
  switch (op.k) {
    case 0: return fs.d0(el, op.i);
    case 1: return fs.d1(el, op.i);
    case 2: return fs.d2(el, op.i);
    default: return fs.eta(el, op.i);
  }
}

// ops applied right to left; nullopt when any step leaves the legal range
std::optional<std::string> run_chain(const FnSet& fs, std::string el, const std::vector<Op>& ops) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (!op_legal(fs.bidegree(el), *it)) return std::nullopt;
    el = apply_op(fs, el, *it);
  }
  return el;
}

struct Battery {
  const FnSet& fs;
  BatteryReport rep;

  void both(const std::string& el, const std::vector<Op>& a, const std::vector<Op>& b,
            const std::string& tag) {
    auto x = run_chain(fs, el, a);
    auto y = run_chain(fs, el, b);
    if (!x || !y) return;
    ++rep.instances;
    if (*x != *y) rep.failures.push_back(tag + " on " + el);
  }

  void run(const std::string& el) {
    auto [m, n] = fs.bidegree(el);
    int r = m + n;
    for (int j = 1; j <= r; ++j) {
      for (int i = 1; i <= r; ++i) {
        std::string sfx = " " + std::to_string(i) + "," + std::to_string(j);
        if (i < j) {
          both(el, {{0, i}, {0, j}}, {{0, j - 1}, {0, i}}, "I1" + sfx);
          if (!(m > 0 && i == 1 && j == 2))
            both(el, {{1, i}, {1, j}}, {{1, j - 1}, {1, i}}, "I2" + sfx);
          both(el, {{1, i}, {0, j}}, {{0, j - 1}, {1, i}}, "I3a" + sfx);
        }
        if (i >= j) both(el, {{1, i}, {0, j}}, {{0, j}, {1, i + 1}}, "I3b" + sfx);
        both(el, {{2, i}, {0, j}}, {{0, j - i}, {2, i}}, "I4" + sfx);
        if (i < j - 1) both(el, {{2, i}, {1, j}}, {{1, j - i}, {2, i}}, "I5a" + sfx);
        if (i >= j - 1 && j - 1 > 0)
          both(el, {{2, i}, {1, j}}, {{1, m + n + j - i - 2}, {2, i + 1}}, "I5b" + sfx);
        both(el, {{2, i}, {2, j}}, {{0, m + n - i}, {2, i + j}}, "I6" + sfx);
      }
    }
    for (int j = 1; j <= n + 1; ++j) {
      for (int i = m + 1; i <= m + n + 1; ++i) {
        std::string sfx = " " + std::to_string(i) + "," + std::to_string(j);
        if (i < m + j) {
          both(el, {{0, i}, {3, j}}, {{3, j - 1}, {0, i}}, "I7a0" + sfx);
          both(el, {{1, i}, {3, j}}, {{3, j - 1}, {1, i}}, "I7a1" + sfx);
        } else if (i == m + j) {
          for (int eps : {0, 1}) {
            auto got = run_chain(fs, el, {{eps, i}, {3, j}});
            if (!got) continue;
            ++rep.instances;
            if (*got != el)
              rep.failures.push_back("I7b " + std::to_string(eps) + sfx + " on " + el);
          }
        } else {
          both(el, {{0, i}, {3, j}}, {{3, j}, {0, i - 1}}, "I7c0" + sfx);
          both(el, {{1, i}, {3, j}}, {{3, j}, {1, i - 1}}, "I7c1" + sfx);
        }
      }
      for (int i = 1; i <= m; ++i)
        both(el, {{2, i}, {3, j}}, {{3, j}, {2, i}},
             "I8 " + std::to_string(i) + "," + std::to_string(j));
      for (int i = 1; i <= j; ++i)
        both(el, {{3, i}, {3, j}}, {{3, j + 1}, {3, i}},
             "I9 " + std::to_string(i) + "," + std::to_string(j));
    }
  }
};

}  // namespace

BatteryReport verify_fnset(const FnSet& fs, const std::vector<std::string>& els) {
  Battery b{fs, {}};
  for (const auto& el : els) b.run(el);
  return b.rep;
}

Sum fnset_boundary(const FnSet& fs, const std::string& el, bool keep_degenerate) {
  auto [m, n] = fs.bidegree(el);
  int r = m + n;
  Sum acc;
  auto put = [&](const std::string& f, int c) {
    if (!keep_degenerate && fs.degenerate(f)) return;
    add_to(acc, f, c);
  };
  for (int i = 1; i <= r; ++i) {
    put(fs.d0(el, i), sign_pow(i));
    put(fs.d1(el, i), -sign_pow(i));
  }
  for (int i = 2; i <= m; ++i) put(fs.d2(el, i), sign_pow((i - 1) * r));
  return acc;
}

ChainComplex normalized_chains(const FnSet& fs, int bound, const Ring& ring) {
  ChainComplex C;
  C.ring = ring;
  std::map<int, std::vector<std::string>> by_deg;
  for (const auto& el : fs.elements(bound)) {
    if (fs.degenerate(el)) continue;
    auto [m, n] = fs.bidegree(el);
    if (m + n <= bound) by_deg[m + n].push_back(el);
  }
  std::map<std::string, std::pair<int, int>> index;
  for (auto& [k, v] : by_deg) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (size_t i = 0; i < v.size(); ++i) index[v[i]] = {k, static_cast<int>(i)};
    C.basis[k] = v;
  }
  for (auto& [k, v] : by_deg) {
    if (k == 0) continue;
    SparseMat d(C.dim(k - 1), C.dim(k));
    for (size_t ci = 0; ci < v.size(); ++ci)
      for (const auto& [f, c] : fnset_boundary(fs, v[ci])) {
        auto it = index.find(f);
        expect(it != index.end() && it->second.first == k - 1,
               "boundary left the enumerated range at " + f);
        d.add(it->second.second, static_cast<int>(ci), c, ring);
      }
    C.set_diff(k, std::move(d));
  }
  return C;
}

std::pair<int, int> CellFnSet::bidegree(const std::string& el) const {
  Elem e = parse_elem(el);
  auto [m, n] = intrinsic(e.cell);
  return {m, n + static_cast<int>(e.tower.size())};
}

bool CellFnSet::degenerate(const std::string& el) const {
  return !parse_elem(el).tower.empty();
}

std::string CellFnSet::d0(const std::string& el, int i) const {
  return show(face(parse_elem(el), 0, i));
}

std::string CellFnSet::d1(const std::string& el, int i) const {
  return show(face(parse_elem(el), 1, i));
}

std::string CellFnSet::d2(const std::string& el, int i) const {
  return show(face(parse_elem(el), 2, i));
}

std::string CellFnSet::eta(const std::string& el, int i) const {
  return show(freeloop::eta(parse_elem(el), i));
}

std::vector<std::string> CellFnSet::elements(int degree_bound) const {
  std::set<std::string> out;
  std::vector<Elem> frontier;
  for (const Cell& c : enumerate_cells(m_, n_)) {
    if (dim_cell(c) > degree_bound) continue;
    Elem e{c, {}};
    out.insert(show(e));
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (const Elem& e : frontier) {
      if (elem_dim(e) >= degree_bound) continue;
      auto [mp, np] = intrinsic(e.cell);
      int ntot = np + static_cast<int>(e.tower.size());
      for (int i = 1; i <= ntot + 1; ++i) {
        Elem d = freeloop::eta(e, i);
        if (out.insert(show(d)).second) next.push_back(d);
      }
    }
    frontier = std::move(next);
  }
  return {out.begin(), out.end()};
}

nlohmann::json fnset_to_json(const FnSet& fs, int degree_bound) {
  auto els = fs.elements(degree_bound);
  std::sort(els.begin(), els.end(), [&](const std::string& a, const std::string& b) {
    auto [ma, na] = fs.bidegree(a);
    auto [mb, nb] = fs.bidegree(b);
    if (ma + na != mb + nb) return ma + na < mb + nb;
    return a < b;
  });
  nlohmann::json j;
  j["elements"] = nlohmann::json::array();
  nlohmann::json jd0 = nlohmann::json::object(), jd1 = nlohmann::json::object(),
                 jd2 = nlohmann::json::object(), jeta = nlohmann::json::object();
  for (const auto& el : els) {
    auto [m, n] = fs.bidegree(el);
    j["elements"].push_back({{"m", m}, {"n", n}, {"label", el}});
    nlohmann::json v0 = nlohmann::json::array(), v1 = nlohmann::json::array(),
                   v2 = nlohmann::json::array(), ve = nlohmann::json::array();
    for (int i = 1; i <= m + n; ++i) {
      v0.push_back(fs.d0(el, i));
      v1.push_back(fs.d1(el, i));
    }
    for (int i = 1; i <= m; ++i) v2.push_back(fs.d2(el, i));
    if (m + n < degree_bound)
      for (int i = 1; i <= n + 1; ++i) ve.push_back(fs.eta(el, i));
    jd0[el] = v0;
    jd1[el] = v1;
    jd2[el] = v2;
    jeta[el] = ve;
  }
  j["d0"] = jd0;
  j["d1"] = jd1;
  j["d2"] = jd2;
  j["eta"] = jeta;
  return j;
}

SparseMat coproduct_matrix(const ChainComplex& C, const ChainComplex& CxC, int k) {
  SparseMat out(CxC.dim(k), C.dim(k));
  const auto& ls = C.labels(k);
  std::map<std::string, int> tindex;
  const auto& tl = CxC.labels(k);
  for (size_t i = 0; i < tl.size(); ++i) tindex[tl[i]] = static_cast<int>(i);
  for (size_t ci = 0; ci < ls.size(); ++ci) {
    Elem e = parse_elem(ls[ci]);
    for (const auto& [pr, c] : diagonal(e)) {
      if (!pr.first.tower.empty() || !pr.second.tower.empty()) continue;
      auto it = tindex.find(show(pr.first) + "⊗" + show(pr.second));
      expect(it != tindex.end(), "coproduct term outside tensor basis");
      out.add(it->second, static_cast<int>(ci), c, C.ring);
    }
  }
  return out;
}

}  // namespace freeloop
