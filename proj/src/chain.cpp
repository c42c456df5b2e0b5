#include "freeloop/chain.hpp"

#include <algorithm>

namespace freeloop {

namespace {
const std::vector<std::string> kEmpty;

nlohmann::json int_to_json(const Int& v) {
  static const Int big = Int(1) << 53;
  if (v < big && v > -big) return static_cast<long long>(v);
  return v.str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<long long>());
}
}  // namespace

const std::vector<std::string>& ChainComplex::labels(int k) const {
  auto it = basis.find(k);
  return it == basis.end() ? kEmpty : it->second;
}

int ChainComplex::index_of(int k, const std::string& label) const {
  const auto& ls = labels(k);
  auto it = std::find(ls.begin(), ls.end(), label);
  expect(it != ls.end(), "no basis label '" + label + "' in degree " + std::to_string(k));
  return static_cast<int>(it - ls.begin());
}

SparseMat ChainComplex::diff(int k) const {
  auto it = d.find(k);
  if (it != d.end()) return it->second;
  return SparseMat(dim(k - 1), dim(k));
}

void ChainComplex::set_diff(int k, SparseMat m) {
  expect(m.rows == dim(k - 1) && m.cols == dim(k), "differential shape mismatch");
  if (m.nnz() == 0)
    d.erase(k);
  else
    d[k] = std::move(m);
}

std::optional<ChainComplex::Witness> ChainComplex::compose_nonzero() const {
  for (int k = lo(); k + 1 <= hi(); ++k) {
    SparseMat c = diff(k).mul(diff(k + 1), ring);
    if (c.nnz() != 0) {
      const auto& [rc, v] = *c.entries.begin();
      return Witness{k + 1, rc.first, rc.second, v};
    }
  }
  return std::nullopt;
}

Int ChainComplex::euler() const {
  Int e = 0;
  for (const auto& [k, ls] : basis) e += Int(sign_pow(k)) * Int(ls.size());
  return e;
}

nlohmann::json ChainComplex::to_json() const {
  nlohmann::json j;
  j["ring"] = ring.name();
  j["degrees"] = nlohmann::json::object();
  for (const auto& [k, ls] : basis) j["degrees"][std::to_string(k)] = ls;
  j["differentials"] = nlohmann::json::object();
  for (const auto& [k, m] : d) {
    nlohmann::json trips = nlohmann::json::array();
    for (const auto& [rc, v] : m.entries)
      trips.push_back({rc.first, rc.second, int_to_json(v)});
    j["differentials"][std::to_string(k)] = trips;
  }
  return j;
}

ChainComplex ChainComplex::from_json(const nlohmann::json& j) {
  ChainComplex C;
  C.ring = Ring::parse(j.at("ring").get<std::string>());
  for (const auto& [ks, ls] : j.at("degrees").items()) {
    int k = std::stoi(ks);
    C.basis[k] = ls.get<std::vector<std::string>>();
  }
  if (j.contains("differentials")) {
    for (const auto& [ks, trips] : j.at("differentials").items()) {
      int k = std::stoi(ks);
      SparseMat m(C.dim(k - 1), C.dim(k));
      for (const auto& t : trips) {
        int r = t.at(0).get<int>(), c = t.at(1).get<int>();
        expect(r >= 0 && r < m.rows && c >= 0 && c < m.cols, "triplet out of range");
        m.add(r, c, int_from_json(t.at(2)), C.ring);
      }
      C.set_diff(k, std::move(m));
    }
  }
  return C;
}

nlohmann::json HomologySummary::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, r] : rank) {
    nlohmann::json e;
    e["degree"] = k;
    e["rank"] = r;
    nlohmann::json tor = nlohmann::json::array();
    auto it = torsion.find(k);
    if (it != torsion.end())
      for (const Int& v : it->second) tor.push_back(int_to_json(v));
    e["torsion"] = tor;
    out.push_back(e);
  }
  return out;
}

HomologySummary homology(const ChainComplex& C, int klo, int khi) {
  HomologySummary H;
  std::map<int, SmithResult> sm;
  auto smith_at = [&](int k) -> const SmithResult& {
    auto it = sm.find(k);
    if (it == sm.end()) it = sm.emplace(k, smith(C.diff(k), C.ring)).first;
    return it->second;
  };
  for (int k = klo; k <= khi; ++k) {
    const auto& below = smith_at(k);
    const auto& above = smith_at(k + 1);
    long r = C.dim(k) - below.rank - above.rank;
    H.rank[k] = r;
    std::vector<Int> tor;
    if (!C.ring.is_field())
      for (const Int& v : above.diag)
        if (v > 1) tor.push_back(v);
    H.torsion[k] = tor;
  }
  return H;
}

HomologySummary homology(const ChainComplex& C) {
  if (C.basis.empty()) return {};
  return homology(C, C.lo(), C.hi());
}

ChainComplex tensor(const ChainComplex& A, const ChainComplex& B) {
  expect(A.ring == B.ring, "tensor needs matching rings");
  ChainComplex T;
  T.ring = A.ring;
  if (A.basis.empty() || B.basis.empty()) return T;

  // column offset of block (i, k-i) inside degree k
  auto offsets = [&](int k) {
    std::map<int, int> off;
    int acc = 0;
    for (const auto& [i, als] : A.basis) {
      int j = k - i;
      int nb = B.dim(j);
      if (nb == 0) continue;
      off[i] = acc;
      acc += static_cast<int>(als.size()) * nb;
    }
    return off;
  };

  int lo = A.lo() + B.lo(), hi = A.hi() + B.hi();
  for (int k = lo; k <= hi; ++k) {
    std::vector<std::string> ls;
    for (const auto& [i, als] : A.basis) {
      const auto& bls = B.labels(k - i);
      for (const auto& a : als)
        for (const auto& b : bls) ls.push_back(a + "⊗" + b);
    }
    if (!ls.empty()) T.basis[k] = std::move(ls);
  }
  for (int k = lo + 1; k <= hi; ++k) {
    SparseMat m(T.dim(k - 1), T.dim(k));
    auto src = offsets(k), dst = offsets(k - 1);
    for (const auto& [i, coff] : src) {
      int j = k - i;
      int nb = B.dim(j);
      SparseMat dA = A.diff(i);
      if (dst.count(i - 1)) {
        for (const auto& [rc, v] : dA.entries)
          for (int b = 0; b < nb; ++b)
            m.add(dst.at(i - 1) + rc.first * nb + b, coff + rc.second * nb + b, v, T.ring);
      }
      SparseMat dB = B.diff(j);
      if (dst.count(i) && dB.nnz() != 0) {
        int nb2 = B.dim(j - 1);
        int na = A.dim(i);
        for (const auto& [rc, v] : dB.entries)
          for (int a = 0; a < na; ++a)
            m.add(dst.at(i) + a * nb2 + rc.first, coff + a * nb + rc.second,
                  Int(sign_pow(i)) * v, T.ring);
      }
    }
    T.set_diff(k, std::move(m));
  }
  return T;
}

ChainComplex dualize(const ChainComplex& C) {
  ChainComplex D;
  D.ring = C.ring;
  for (const auto& [k, ls] : C.basis) D.basis[-k] = ls;
  for (const auto& [j, m] : C.d) {
    int t = 1 - j;  // source degree of the transposed map
    int s = (t <= 0) ? -sign_pow(t) : sign_pow(t);
    SparseMat mt = m.transpose();
    if (s == -1)
      for (auto& [rc, v] : mt.entries) v = D.ring.neg(v);
    D.set_diff(t, std::move(mt));
  }
  return D;
}

std::vector<Int> HomologyBasis::coords(const std::vector<Int>& cycle) const {
  std::vector<Int> y = ker_coords.apply(cycle, ring);
  std::vector<Int> w = cls_of_ker.apply(y, ring);
  std::vector<Int> out;
  out.reserve(keep.size());
  for (size_t i = 0; i < keep.size(); ++i) {
    Int v = w[keep[i]];
    if (static_cast<long>(i) >= free_rank) {
      const Int& t = torsion[i - free_rank];
      v %= t;
      if (v < 0) v += t;
    }
    out.push_back(v);
  }
  return out;
}

HomologyBasis homology_basis(const ChainComplex& C, int k) {
  HomologyBasis H;
  H.degree = k;
  H.ring = C.ring;
  const int n = C.dim(k);
  SmithResult sA = smith(C.diff(k), C.ring, true);
  const int rA = sA.rank;
  const int s = n - rA;

  // kernel coordinates: bottom s rows of Rinv; kernel basis: last s columns of R
  H.ker_coords = SparseMat(s, n);
  for (const auto& [rc, v] : sA.Rinv.entries)
    if (rc.first >= rA) H.ker_coords.entries[{rc.first - rA, rc.second}] = v;
  SparseMat K(n, s);
  for (const auto& [rc, v] : sA.R.entries)
    if (rc.second >= rA) K.entries[{rc.first, rc.second - rA}] = v;

  SparseMat M = H.ker_coords.mul(C.diff(k + 1), C.ring);
  SmithResult sM = smith(M, C.ring, true);
  H.cls_of_ker = sM.L;

  for (int i = sM.rank; i < s; ++i) H.keep.push_back(i);
  H.free_rank = s - sM.rank;
  for (int i = 0; i < sM.rank; ++i)
    if (sM.diag[i] > 1) {
      H.keep.push_back(i);
      H.torsion.push_back(sM.diag[i]);
    }

  for (int idx : H.keep) {
    std::vector<Int> e(s, 0);
    for (const auto& [rc, v] : sM.Linv.entries)
      if (rc.second == idx) e[rc.first] = v;
    H.reps.push_back(K.apply(e, C.ring));
  }
  return H;
}

}  // namespace freeloop
