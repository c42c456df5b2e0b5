#include "freeloop/sset.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace freeloop {

int sdim(const Simplex& x) { return static_cast<int>(x.f.size()) - 1; }

bool is_nondeg(const Simplex& x) {
  for (int i = 0; i < static_cast<int>(x.f.size()); ++i)
    if (x.f[i] != i) return false;
  return true;
}

Simplex SSet::ident(const std::string& g) const {
  auto it = gens.find(g);
  expect(it != gens.end(), "unknown generator " + g);
  std::vector<int> f(it->second + 1);
  for (int i = 0; i <= it->second; ++i) f[i] = i;
  return {f, g};
}

std::vector<Simplex> SSet::nondeg(int maxdim) const {
  std::vector<Simplex> out;
  for (const auto& [g, d] : gens)
    if (d <= maxdim) out.push_back(ident(g));
  return out;
}

std::vector<std::string> SSet::gens_of_dim(int d) const {
  std::vector<std::string> out;
  for (const auto& [g, gd] : gens)
    if (gd == d) out.push_back(g);
  return out;
}

int SSet::maxgen_dim() const {
  int m = 0;
  for (const auto& [g, d] : gens) m = std::max(m, d);
  return m;
}

bool SSet::one_reduced() const {
  int verts = 0;
  for (const auto& [g, d] : gens) {
    if (d == 0) ++verts;
    if (d == 1) return false;
  }
  return verts == 1;
}

Simplex sface(const SSet& ss, const Simplex& x, int i) {
  int v = x.f[i];
  std::vector<int> fi(x.f);
  fi.erase(fi.begin() + i);
  if (std::find(fi.begin(), fi.end(), v) != fi.end()) return {fi, x.g};
  for (int& w : fi)
    if (w > v) --w;
  auto it = ss.faces.find(x.g);
  expect(it != ss.faces.end() && v < static_cast<int>(it->second.size()),
         "missing face list for " + x.g);
  const Simplex& y = it->second[v];
  std::vector<int> f2(fi.size());
  for (size_t k = 0; k < fi.size(); ++k) f2[k] = y.f[fi[k]];
  return {f2, y.g};
}

Simplex sdegen(const Simplex& x, int i) {
  std::vector<int> f;
  f.reserve(x.f.size() + 1);
  f.insert(f.end(), x.f.begin(), x.f.begin() + i + 1);
  f.insert(f.end(), x.f.begin() + i, x.f.end());
  return {f, x.g};
}

Simplex interval(const SSet& ss, const Simplex& x, int a, int b) {
  Simplex y = x;
  for (int k = 0; k < a; ++k) y = sface(ss, y, 0);
  while (sdim(y) > b - a) y = sface(ss, y, sdim(y));
  return y;
}

Simplex subsimplex(const SSet& ss, const Simplex& x, const std::vector<int>& pos) {
  std::set<int> keep(pos.begin(), pos.end());
  Simplex y = x;
  for (int i = sdim(x); i >= 0; --i)
    if (!keep.count(i)) y = sface(ss, y, i);
  return y;
}

std::string show_simplex(const Simplex& x) {
  std::vector<int> f = x.f;
  std::vector<int> word;
  // peel the last repeat first so indices come out descending
  for (;;) {
    int i = -1;
    for (int k = static_cast<int>(f.size()) - 2; k >= 0; --k)
      if (f[k] == f[k + 1]) {
        i = k;
        break;
      }
    if (i < 0) break;
    word.push_back(i);
    f.erase(f.begin() + i);
  }
  std::ostringstream os;
  for (int i : word) os << "s_" << i << " ";
  os << x.g;
  return os.str();
}

Simplex parse_simplex(const SSet& ss, const std::string& word) {
  std::istringstream is(word);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  expect(!toks.empty(), "empty simplex word");
  Simplex x = ss.ident(toks.back());
  for (int k = static_cast<int>(toks.size()) - 2; k >= 0; --k) {
    expect(toks[k].rfind("s_", 0) == 0, "bad degeneracy token " + toks[k]);
    x = sdegen(x, std::stoi(toks[k].substr(2)));
  }
  return x;
}

std::vector<std::vector<int>> surjections(int d, int k) {
  std::vector<std::vector<int>> out;
  if (k > d || k < 0) return out;
  // f is determined by the d-k positions among 1..d where the value repeats
  std::vector<int> mask(d, 0);
  std::fill(mask.begin(), mask.begin() + (d - k), 1);
  std::sort(mask.begin(), mask.end());
  do {
    std::vector<int> g(d + 1);
    g[0] = 0;
    for (int i = 1; i <= d; ++i) g[i] = g[i - 1] + (mask[i - 1] ? 0 : 1);
    out.push_back(g);
  } while (std::next_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> all_simplices(const SSet& ss, int d) {
  std::vector<Simplex> out;
  for (const auto& [g, gd] : ss.gens) {
    if (gd > d) continue;
    for (auto& f : surjections(d, gd)) out.push_back({f, g});
  }
  return out;
}

SimplicialReport check_simplicial(const SSet& ss, int maxdim) {
  SimplicialReport rep;
  auto bad = [&](const std::string& what, const Simplex& x, int i, int j) {
    rep.ok = false;
    std::ostringstream os;
    os << what << " fails on " << show_simplex(x) << " (i=" << i << ", j=" << j << ")";
    rep.detail = os.str();
  };
  for (int d = 0; d <= maxdim && rep.ok; ++d) {
    for (const Simplex& x : all_simplices(ss, d)) {
      if (!rep.ok) break;
      for (int j = 0; j <= d && rep.ok; ++j) {
        for (int i = 0; i < j; ++i) {
          if (d >= 2 && sface(ss, sface(ss, x, j), i) != sface(ss, sface(ss, x, i), j - 1)) {
            bad("d_i d_j", x, i, j);
            break;
          }
          ++rep.checked;
        }
      }
      for (int j = 0; j <= d && rep.ok; ++j) {
        Simplex sj = sdegen(x, j);
        for (int i = 0; i <= d + 1; ++i) {
          Simplex lhs = sface(ss, sj, i);
          Simplex rhs = (i < j)       ? sdegen(sface(ss, x, i), j - 1)
                        : (i > j + 1) ? sdegen(sface(ss, x, i - 1), j)
                                      : x;
          if (lhs != rhs) {
            bad("d_i s_j", x, i, j);
            break;
          }
          ++rep.checked;
        }
        for (int i = 0; i <= j && rep.ok; ++i) {
          if (sdegen(sj, i) != sdegen(sdegen(x, i), j + 1)) {
            bad("s_i s_j", x, i, j);
            break;
          }
          ++rep.checked;
        }
      }
    }
  }
  return rep;
}

ChainComplex simplicial_chains(const SSet& ss, int maxdim, Ring ring) {
  ChainComplex C;
  C.ring = ring;
  for (int q = 0; q <= maxdim; ++q) {
    auto gs = ss.gens_of_dim(q);
    if (!gs.empty()) C.basis[q] = gs;
  }
  for (int q = 1; q <= maxdim; ++q) {
    if (!C.basis.count(q)) continue;
    SparseMat m(C.dim(q - 1), C.dim(q));
    const auto& cod = C.basis[q - 1];
    int col = 0;
    for (const auto& g : C.basis[q]) {
      Simplex x = ss.ident(g);
      for (int i = 0; i <= q; ++i) {
        Simplex y = sface(ss, x, i);
        if (!is_nondeg(y)) continue;
        int row = static_cast<int>(std::find(cod.begin(), cod.end(), y.g) - cod.begin());
        m.add(row, col, ring.norm(sign_pow(i)));
      }
      ++col;
    }
    C.set_diff(q, m);
  }
  return C;
}

std::vector<std::pair<Simplex, Simplex>> aw_pairs(const SSet& ss, const Simplex& x) {
  std::vector<std::pair<Simplex, Simplex>> out;
  int n = sdim(x);
  for (int i = 0; i <= n; ++i)
    out.emplace_back(interval(ss, x, 0, i), interval(ss, x, i, n));
  return out;
}

SSet SSet::from_json(const nlohmann::json& j) {
  SSet ss;
  ss.name = j.value("name", "");
  for (const auto& g : j.at("generators"))
    ss.gens[g.at("name").get<std::string>()] = g.at("dim").get<int>();
  for (const auto& g : j.at("generators")) {
    std::string name = g.at("name").get<std::string>();
    int d = ss.gens[name];
    if (d == 0) continue;
    std::vector<Simplex> fl;
    for (const auto& w : g.at("faces")) fl.push_back(parse_simplex(ss, w.get<std::string>()));
    expect(static_cast<int>(fl.size()) == d + 1,
           name + ": expected " + std::to_string(d + 1) + " faces");
    for (const auto& y : fl)
      expect(sdim(y) == d - 1, name + ": face of wrong dimension");
    ss.faces[name] = std::move(fl);
  }
  return ss;
}

SSet SSet::load_file(const std::string& path) {
  std::ifstream in(path);
  expect(in.good(), "cannot open " + path);
  nlohmann::json j;
  in >> j;
  return from_json(j);
}

nlohmann::json SSet::to_json() const {
  nlohmann::json out;
  out["name"] = name;
  auto& arr = out["generators"] = nlohmann::json::array();
  for (const auto& [g, d] : gens) {
    nlohmann::json e{{"name", g}, {"dim", d}};
    if (d > 0) {
      auto& fl = e["faces"] = nlohmann::json::array();
      for (const auto& y : faces.at(g)) fl.push_back(show_simplex(y));
    }
    arr.push_back(e);
  }
  return out;
}

SSet delta_sk1(int M) {
  expect(M >= 2 && M <= 9, "delta_sk1 wants 2 <= M <= 9");
  SSet ss;
  ss.name = "delta" + std::to_string(M) + "_sk1";
  ss.gens["*"] = 0;
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << (M + 1)); ++mask) {
    std::vector<int> T;
    for (int v = 0; v <= M; ++v)
      if (mask >> v & 1) T.push_back(v);
    if (T.size() >= 3) subsets.push_back(T);
  }
  auto label = [](const std::vector<int>& T) {
    std::string s;
    for (int v : T) s += static_cast<char>('0' + v);
    return s;
  };
  for (const auto& T : subsets) ss.gens[label(T)] = static_cast<int>(T.size()) - 1;
  for (const auto& T : subsets) {
    std::vector<Simplex> fl;
    for (size_t i = 0; i < T.size(); ++i) {
      std::vector<int> F = T;
      F.erase(F.begin() + i);
      if (F.size() >= 3) {
        fl.push_back(ss.ident(label(F)));
      } else {
        // edge collapsed to the basepoint
        fl.push_back({std::vector<int>(T.size() - 1, 0), "*"});
      }
    }
    ss.faces[label(T)] = std::move(fl);
  }
  return ss;
}

}  // namespace freeloop
