#include "freeloop/hga.hpp"

#include <algorithm>
#include <sstream>

namespace freeloop {

Coch coch_basis(const SSet& ss, const std::string& gen) {
  auto it = ss.gens.find(gen);
  expect(it != ss.gens.end(), "unknown generator " + gen);
  return {it->second, {{gen, 1}}};
}

Int ev(const Coch& f, const Simplex& x) {
  if (!is_nondeg(x) || sdim(x) != f.deg) return 0;
  auto it = f.vals.find(x.g);
  return it == f.vals.end() ? Int(0) : it->second;
}

Coch coch_add(const Coch& f, const Coch& g, const Int& c) {
  expect(f.zero() || g.zero() || f.deg == g.deg, "degree mismatch in cochain sum");
  Coch out;
  out.deg = f.zero() && !g.zero() ? g.deg : f.deg;
  out.vals = f.vals;
  for (const auto& [k, v] : g.vals) {
    Int nv = out.vals[k] + c * v;
    if (nv == 0)
      out.vals.erase(k);
    else
      out.vals[k] = nv;
  }
  return out;
}

Coch coch_scal(const Coch& f, const Int& c) {
  Coch out{f.deg, {}};
  if (c == 0) return out;
  for (const auto& [k, v] : f.vals) out.vals[k] = c * v;
  return out;
}

Coch dcoch(const SSet& ss, const Coch& f) {
  int q = f.deg;
  Coch out{q + 1, {}};
  for (const auto& g : ss.gens_of_dim(q + 1)) {
    Simplex S = ss.ident(g);
    Int v = 0;
    for (int i = 0; i <= q + 1; ++i) v += sign_pow(i) * ev(f, sface(ss, S, i));
    if (v != 0) out.vals[g] = v;
  }
  return out;
}

Coch cup(const SSet& ss, const Coch& a, const Coch& b) {
  int p = a.deg, q = b.deg;
  Coch out{p + q, {}};
  for (const auto& g : ss.gens_of_dim(p + q)) {
    Simplex S = ss.ident(g);
    Int v = ev(a, interval(ss, S, 0, p)) * ev(b, interval(ss, S, p, p + q));
    if (v != 0) out.vals[g] = v;
  }
  return out;
}

namespace {

// cuts {0} u J u {N}; long blocks are the gaps of size >= 2
std::vector<int> mask_cuts(int N, unsigned Jmask) {
  std::vector<int> cuts{0};
  for (int j = 1; j < N; ++j)
    if (Jmask >> j & 1) cuts.push_back(j);
  cuts.push_back(N);
  return cuts;
}

int invJ(int N, unsigned Jmask) {
  int inv = 0;
  for (int c = 1; c < N; ++c) {
    if (!(Jmask >> c & 1)) continue;
    for (int c2 = c + 1; c2 < N; ++c2)
      if (!(Jmask >> c2 & 1)) ++inv;
  }
  return inv;
}

}  // namespace

Coch hga_E(const SSet& ss, const std::vector<Coch>& as, const Coch& b) {
  int k = static_cast<int>(as.size());
  int deg = b.deg - k;
  for (const auto& a : as) deg += a.deg;
  Coch out{deg, {}};
  if (deg < 0) return out;
  expect(deg < 31, "E operation degree too large");
  int N = deg;
  for (const auto& g : ss.gens_of_dim(deg)) {
    Simplex S = ss.ident(g);
    Int v = 0;
    for (unsigned Jmask = 0; Jmask < (1u << N); Jmask += 2) {
      std::vector<int> cuts = mask_cuts(N, Jmask);
      std::vector<std::pair<int, int>> longs;
      for (size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i + 1] - cuts[i] >= 2) longs.emplace_back(cuts[i], cuts[i + 1]);
      if (static_cast<int>(longs.size()) != k) continue;
      Int term = 1;
      for (int t = 0; t < k && term != 0; ++t)
        term *= ev(as[t], interval(ss, S, longs[t].first, longs[t].second));
      if (term == 0) continue;
      term *= cuts.size() >= 3 ? ev(b, subsimplex(ss, S, cuts)) : Int(0);
      if (term == 0) continue;
      v += sign_pow(invJ(N, Jmask)) * term;
    }
    if (v != 0) out.vals[g] = v;
  }
  return out;
}

int eps_of(const std::vector<Coch>& as, int i) {
  int e = 0;
  for (int s = 0; s < i; ++s) e += as[s].deg + 1;
  return e % 2;
}

bool check_E_leibniz(const SSet& ss, const std::vector<Coch>& as, const Coch& b) {
  int k = static_cast<int>(as.size());
  Coch lhs = dcoch(ss, hga_E(ss, as, b));
  Coch rhs{lhs.deg, {}};
  for (int i = 1; i <= k; ++i) {
    std::vector<Coch> asd = as;
    asd[i - 1] = dcoch(ss, as[i - 1]);
    rhs = coch_add(rhs, hga_E(ss, asd, b), sign_pow(eps_of(as, i - 1)));
  }
  rhs = coch_add(rhs, hga_E(ss, as, dcoch(ss, b)), sign_pow(eps_of(as, k)));
  for (int i = 1; i < k; ++i) {
    std::vector<Coch> asm_(as.begin(), as.begin() + (i - 1));
    asm_.push_back(cup(ss, as[i - 1], as[i]));
    asm_.insert(asm_.end(), as.begin() + i + 1, as.end());
    rhs = coch_add(rhs, hga_E(ss, asm_, b), sign_pow(eps_of(as, i)));
  }
  if (k >= 1) {
    int e = eps_of(as, k) + as[k - 1].deg * b.deg;
    std::vector<Coch> front(as.begin(), as.end() - 1);
    rhs = coch_add(rhs, cup(ss, hga_E(ss, front, b), as[k - 1]), sign_pow(e));
    std::vector<Coch> tail(as.begin() + 1, as.end());
    rhs = coch_add(rhs, cup(ss, as[0], hga_E(ss, tail, b)), sign_pow(as[0].deg));
  }
  return lhs == rhs;
}

bool check_E_cup_split(const SSet& ss, const std::vector<Coch>& as, const Coch& b, const Coch& c) {
  int k = static_cast<int>(as.size());
  Coch lhs = hga_E(ss, as, cup(ss, b, c));
  Coch rhs{lhs.deg, {}};
  for (int i = 0; i <= k; ++i) {
    int e = b.deg * ((eps_of(as, i) + eps_of(as, k)) % 2);
    std::vector<Coch> front(as.begin(), as.begin() + i);
    std::vector<Coch> back(as.begin() + i, as.end());
    rhs = coch_add(rhs, cup(ss, hga_E(ss, front, b), hga_E(ss, back, c)), sign_pow(e));
  }
  return lhs == rhs;
}

namespace {

// k_1 + .. + k_p = k with k_i >= 0
void compositions(int k, int p, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (p == 0) {
    if (k == 0) out.push_back(cur);
    return;
  }
  for (int first = 0; first <= k; ++first) {
    cur.push_back(first);
    compositions(k - first, p - 1, cur, out);
    cur.pop_back();
  }
}

void subsets_of_size(int p, int l, std::vector<int>& cur, int start,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == l) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v < p; ++v) {
    cur.push_back(v);
    subsets_of_size(p, l, cur, v + 1, out);
    cur.pop_back();
  }
}

}  // namespace

bool check_E_compose(const SSet& ss, const std::vector<Coch>& as, const std::vector<Coch>& bs,
                     const Coch& c) {
  int k = static_cast<int>(as.size());
  int l = static_cast<int>(bs.size());
  Coch rhs = hga_E(ss, as, hga_E(ss, bs, c));
  Coch lhs{rhs.deg, {}};
  for (int p = 1; p <= k + l; ++p) {
    std::vector<std::vector<int>> slots, comps;
    std::vector<int> cur;
    subsets_of_size(p, l, cur, 0, slots);
    compositions(k, p, cur, comps);
    for (const auto& bslots : slots) {
      for (const auto& comp : comps) {
        bool ok = true;
        std::vector<Coch> args;
        int pos = 0, K = 0, e = 0;
        for (int i = 0; i < p && ok; ++i) {
          int ki = comp[i];
          std::vector<Coch> sub(as.begin() + pos, as.begin() + pos + ki);
          pos += ki;
          K += ki;
          auto bit = std::find(bslots.begin(), bslots.end(), i);
          if (bit != bslots.end()) {
            const Coch& bi = bs[bit - bslots.begin()];
            args.push_back(hga_E(ss, sub, bi));
            e += (bi.deg + 1) * ((eps_of(as, K) + eps_of(as, k)) % 2);
          } else {
            if (ki != 1) {
              ok = false;
              break;
            }
            args.push_back(sub[0]);
          }
        }
        if (!ok) continue;
        lhs = coch_add(lhs, hga_E(ss, args, c), sign_pow(e % 2));
      }
    }
  }
  return lhs == rhs;
}

Coch cup1(const SSet& ss, const Coch& a, const Coch& b) { return hga_E(ss, {a}, b); }

Coch sq1(const SSet& ss, const Coch& z) {
  expect(dcoch(ss, z).zero(), "sq1 wants a cocycle");
  if (z.deg % 2 != 0) {
    Coch sq = cup(ss, z, z);
    for (const auto& [k, v] : sq.vals)
      expect(v % 2 == 0, "sq1 on odd degree wants an even square");
  }
  return cup1(ss, z, z);
}

CochainCarrier::CochainCarrier(const SSet& ss) : ss_(&ss) {
  expect(ss.one_reduced(), "cochain carrier wants a 1-reduced simplicial set");
}

void CochainCarrier::register_virtual(const std::string& name, const Coch& f) {
  expect(!ss_->gens.count(name) && name != "1", "virtual name collides: " + name);
  virtual_[name] = f;
}

Coch CochainCarrier::as_cochain(const std::string& l) const {
  expect(l != "1", "unit has no cochain form");
  auto it = virtual_.find(l);
  if (it != virtual_.end()) return it->second;
  return coch_basis(*ss_, l);
}

int CochainCarrier::deg(const std::string& l) const {
  if (l == "1") return 0;
  auto it = virtual_.find(l);
  if (it != virtual_.end()) return it->second.deg;
  auto g = ss_->gens.find(l);
  expect(g != ss_->gens.end(), "unknown label " + l);
  return g->second;
}

namespace {
Sum coch_to_sum(const Coch& f) {
  Sum out;
  for (const auto& [k, v] : f.vals) out[k] = v;
  return out;
}
}  // namespace

Sum CochainCarrier::d(const std::string& l) const {
  if (l == "1") return {};
  return coch_to_sum(dcoch(*ss_, as_cochain(l)));
}

Sum CochainCarrier::mul(const std::string& l1, const std::string& l2) const {
  if (l1 == "1") return {{l2, 1}};
  if (l2 == "1") return {{l1, 1}};
  return coch_to_sum(cup(*ss_, as_cochain(l1), as_cochain(l2)));
}

Sum CochainCarrier::E(const std::vector<std::string>& as, const std::string& b) const {
  if (as.empty()) return {{b, 1}};
  if (b == "1") return {};
  for (const auto& a : as)
    if (a == "1") return {};
  std::vector<Coch> cs;
  cs.reserve(as.size());
  for (const auto& a : as) cs.push_back(as_cochain(a));
  return coch_to_sum(hga_E(*ss_, cs, as_cochain(b)));
}

std::vector<std::string> CochainCarrier::basis_of_deg(int q) const {
  if (q == 0) return {"1"};
  if (q < 2) return {};
  return ss_->gens_of_dim(q);
}

TrivialCarrier::TrivialCarrier(std::vector<std::pair<std::string, int>> gens)
    : gens_(std::move(gens)) {
  for (const auto& [n, d] : gens_) expect(d >= 1, "generator " + n + " needs positive degree");
}

std::vector<int> TrivialCarrier::exponents(const std::string& l) const {
  if (l == "1") return std::vector<int>(gens_.size(), 0);
  expect(l.rfind("e:", 0) == 0, "bad exponent label " + l);
  std::vector<int> out;
  std::istringstream is(l.substr(2));
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
  expect(out.size() == gens_.size(), "bad exponent label " + l);
  return out;
}

std::string TrivialCarrier::label(const std::vector<int>& exps) const {
  expect(exps.size() == gens_.size(), "bad exponent vector");
  bool allzero = true;
  for (int e : exps) allzero = allzero && e == 0;
  if (allzero) return "1";
  std::vector<std::string> parts;
  for (int e : exps) parts.push_back(std::to_string(e));
  return "e:" + join(parts, ",");
}

std::string TrivialCarrier::pretty(const std::string& l) const {
  if (l == "1") return "1";
  auto exps = exponents(l);
  std::string out;
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += gens_[i].first;
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out;
}

int TrivialCarrier::deg(const std::string& l) const {
  auto exps = exponents(l);
  int d = 0;
  for (size_t i = 0; i < gens_.size(); ++i) d += exps[i] * gens_[i].second;
  return d;
}

Sum TrivialCarrier::d(const std::string&) const { return {}; }

Sum TrivialCarrier::mul(const std::string& l1, const std::string& l2) const {
  if (l1 == "1") return {{l2, 1}};
  if (l2 == "1") return {{l1, 1}};
  auto a = exponents(l1), b = exponents(l2);
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return {{label(a), 1}};
}

Sum TrivialCarrier::E(const std::vector<std::string>& as, const std::string& b) const {
  if (as.empty()) return {{b, 1}};
  return {};
}

std::vector<std::string> TrivialCarrier::basis_of_deg(int q) const {
  std::vector<std::string> out;
  std::vector<int> exps(gens_.size(), 0);
  auto rec = [&](auto&& self, size_t i, int rem) -> void {
    if (i == gens_.size()) {
      if (rem == 0) out.push_back(label(exps));
      return;
    }
    for (int e = 0; e * gens_[i].second <= rem; ++e) {
      exps[i] = e;
      self(self, i + 1, rem - e * gens_[i].second);
    }
    exps[i] = 0;
  };
  rec(rec, 0, q);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace freeloop
