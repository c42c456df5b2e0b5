#include "freeloop/loop.hpp"

#include "freeloop/chain.hpp"

#include <algorithm>
#include <sstream>

namespace freeloop {

std::vector<int> tower_insert(std::vector<int> tower, int i) {
  std::vector<int> out;
  size_t k = 0;
  while (k < tower.size() && i <= tower[k]) out.push_back(tower[k++] + 1);
  out.push_back(i);
  out.insert(out.end(), tower.begin() + static_cast<long>(k), tower.end());
  return out;
}

LoopElem loop_eta(const LoopElem& e, int i) { return {tower_insert(e.tower, i), e.letters}; }

int loop_deg(const LoopElem& e) {
  return static_cast<int>(e.tower.size()) + word_wdeg(e.letters);
}

LoopElem loop_mul(const LoopElem& a, const LoopElem& b) {
  int da = word_wdeg(a.letters);
  std::vector<int> seq = a.tower;
  for (int t : b.tower) seq.push_back(t + da);
  std::vector<int> tower;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) tower = tower_insert(std::move(tower), *it);
  LoopElem out{std::move(tower), a.letters};
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

std::string loop_label(const LoopElem& e) {
  std::ostringstream os;
  if (!e.tower.empty()) {
    os << '{';
    for (size_t i = 0; i < e.tower.size(); ++i) {
      if (i) os << ',';
      os << e.tower[i];
    }
    os << '}';
  }
  os << word_label(e.letters);
  return os.str();
}

LoopElem loop_tau(const SSet& ss, const Simplex& x) {
  int n = sdim(x);
  if (n <= 1) return {};
  if (is_nondeg(x)) return {{}, {x}};
  const auto& f = x.f;
  expect(f[f.size() - 1] == f[f.size() - 2],
         "twisting map needs top degeneracies, got " + show_simplex(x));
  Simplex y{std::vector<int>(f.begin(), f.end() - 1), x.g};
  return loop_eta(loop_tau(ss, y), n - 1);
}

LoopElem loop_face(const SSet& ss, const LoopElem& e, int eps, int q, const TauFn& tau) {
  std::vector<int> kept;
  size_t ti = 0;
  const auto& tower = e.tower;
  while (ti < tower.size()) {
    int t = tower[ti];
    if (q < t) {
      kept.push_back(t - 1);
      ++ti;
    } else if (q == t) {
      LoopElem out;
      out.tower = kept;
      out.tower.insert(out.tower.end(), tower.begin() + static_cast<long>(ti) + 1, tower.end());
      out.letters = e.letters;
      return out;
    } else {
      kept.push_back(t);
      ++ti;
      --q;
    }
  }

  const SWord& ls = e.letters;
  int pos = 0;
  size_t idx = ls.size();
  int p = 0;
  for (size_t k = 0; k < ls.size(); ++k) {
    int d = sdim(ls[k]) - 1;
    if (q <= pos + d) {
      idx = k;
      p = q - pos;
      break;
    }
    pos += d;
  }
  expect(idx < ls.size(), "face index beyond word weight");

  const Simplex& x = ls[idx];
  int n = sdim(x);
  LoopElem piece;
  if (eps == 0)
    piece = loop_mul(tau(ss, interval(ss, x, 0, p)), tau(ss, interval(ss, x, p, n)));
  else
    piece = tau(ss, sface(ss, x, p));

  LoopElem res =
      loop_mul(loop_mul(LoopElem{{}, SWord(ls.begin(), ls.begin() + static_cast<long>(idx))}, piece),
               LoopElem{{}, SWord(ls.begin() + static_cast<long>(idx) + 1, ls.end())});
  for (auto it = kept.rbegin(); it != kept.rend(); ++it) res = loop_eta(res, *it);
  return res;
}

SwSum loop_bound(const SSet& ss, const SWord& letters) {
  SwSum out;
  auto add = [&out](const SWord& w, Int c) {
    auto [it, fresh] = out.emplace(w, c);
    if (!fresh && (it->second += c) == 0) out.erase(it);
  };
  int W = word_wdeg(letters);
  for (int q = 1; q <= W; ++q)
    for (auto [eps, sg] : {std::pair{0, 1}, std::pair{1, -1}}) {
      LoopElem r = loop_face(ss, {{}, letters}, eps, q);
      if (r.tower.empty()) add(r.letters, sg * sign_pow(q));
    }
  return out;
}

ChainComplex loop_complex(const SSet& ss, int bound, Ring ring) {
  ChainComplex C;
  C.ring = ring;
  std::map<int, std::vector<SWord>> words;
  for (int n = 0; n <= bound; ++n) {
    words[n] = words_of_deg(ss, n);
    auto& lab = C.basis[n];
    for (const auto& w : words[n]) lab.push_back(word_label(w));
  }
  for (int n = 1; n <= bound; ++n) {
    std::map<std::string, int> row;
    for (size_t i = 0; i < words[n - 1].size(); ++i)
      row[word_label(words[n - 1][i])] = static_cast<int>(i);
    SparseMat d(C.dim(n - 1), C.dim(n));
    for (size_t c = 0; c < words[n].size(); ++c)
      for (const auto& [w, v] : loop_bound(ss, words[n][c])) {
        auto it = row.find(word_label(w));
        expect(it != row.end(), "boundary left the word basis at " + word_label(w));
        d.add(it->second, static_cast<int>(c), v, ring);
      }
    C.set_diff(n, std::move(d));
  }
  return C;
}

std::string compare_complexes(const ChainComplex& A, const ChainComplex& B) {
  if (A.ring.p != B.ring.p) return "coefficient rings differ";
  std::set<int> degs;
  for (const auto& [k, v] : A.basis) degs.insert(k);
  for (const auto& [k, v] : B.basis) degs.insert(k);
  for (int k : degs) {
    std::vector<std::string> la = A.dim(k) ? A.labels(k) : std::vector<std::string>{};
    std::vector<std::string> lb = B.dim(k) ? B.labels(k) : std::vector<std::string>{};
    std::map<std::string, int> ia, ib;
    for (size_t i = 0; i < la.size(); ++i) ia[la[i]] = static_cast<int>(i);
    for (size_t i = 0; i < lb.size(); ++i) ib[lb[i]] = static_cast<int>(i);
    for (const auto& [l, i] : ia)
      if (!ib.count(l)) return "degree " + std::to_string(k) + ": only first has " + l;
    for (const auto& [l, i] : ib)
      if (!ia.count(l)) return "degree " + std::to_string(k) + ": only second has " + l;
  }
  for (int k : degs) {
    if (A.dim(k) == 0 || A.dim(k - 1) == 0) {
      // nothing to compare; shapes already matched through the bases
      continue;
    }
    SparseMat da = A.diff(k), db = B.diff(k);
    const auto& cols = A.labels(k);
    const auto& rows = A.labels(k - 1);
    for (size_t c = 0; c < cols.size(); ++c) {
      int cb = B.index_of(k, cols[c]);
      for (size_t r = 0; r < rows.size(); ++r) {
        int rb = B.index_of(k - 1, rows[r]);
        Int va = da.get(static_cast<int>(r), static_cast<int>(c));
        Int vb = db.get(rb, cb);
        if (va != vb)
          return "degree " + std::to_string(k) + ": entry (" + rows[r] + ", " + cols[c] +
                 ") differs: " + va.str() + " vs " + vb.str();
      }
    }
  }
  return "";
}

TwistedPairSet::TwistedPairSet(const SSet& ss, PairFault fault) : ss_(ss), fault_(fault) {
  expect(ss.one_reduced(), "twisted product needs a one-reduced base");
  if (fault_ == PairFault::unit_twist)
    tau_ = [](const SSet&, const Simplex&) { return LoopElem{}; };
  else
    tau_ = [](const SSet& s, const Simplex& x) { return loop_tau(s, x); };
}

std::string TwistedPairSet::intern(const Simplex& x, const LoopElem& w) const {
  std::string label = show_simplex(x) + loop_label(w);
  reg_.emplace(label, std::pair<Simplex, LoopElem>{x, w});
  return label;
}

const std::pair<Simplex, LoopElem>& TwistedPairSet::at(const std::string& el) const {
  auto it = reg_.find(el);
  expect(it != reg_.end(), "unknown element " + el);
  return it->second;
}

std::pair<Simplex, LoopElem> TwistedPairSet::face(const Simplex& x, const LoopElem& w, int eps,
                                                  int i) const {
  int m = sdim(x);
  if (eps == 1 && i == 1 && m > 0) eps = 2;
  if (eps == 0) {
    if (i <= m) {
      LoopElem back = tau_(ss_, interval(ss_, x, i - 1, m));
      LoopElem prod = fault_ == PairFault::swapped_split ? loop_mul(w, back) : loop_mul(back, w);
      return {interval(ss_, x, 0, i - 1), prod};
    }
    return {x, loop_face(ss_, w, 0, i - m, tau_)};
  }
  if (eps == 1) {
    if (i <= m) return {sface(ss_, x, i - 1), w};
    return {x, loop_face(ss_, w, 1, i - m, tau_)};
  }
  return {interval(ss_, x, i, m), loop_mul(w, tau_(ss_, interval(ss_, x, 0, i)))};
}

std::pair<int, int> TwistedPairSet::bidegree(const std::string& el) const {
  const auto& [x, w] = at(el);
  return {sdim(x), loop_deg(w)};
}

bool TwistedPairSet::degenerate(const std::string& el) const {
  const auto& [x, w] = at(el);
  if (!w.tower.empty()) return true;
  if (is_nondeg(x)) return false;
  const auto& f = x.f;
  expect(f.size() >= 2 && f[f.size() - 1] == f[f.size() - 2],
         "unexpected degeneracy pattern in " + el);
  return true;
}

std::string TwistedPairSet::d0(const std::string& el, int i) const {
  const auto& [x, w] = at(el);
  auto [y, v] = face(x, w, 0, i);
  return intern(y, v);
}

std::string TwistedPairSet::d1(const std::string& el, int i) const {
  const auto& [x, w] = at(el);
  auto [y, v] = face(x, w, 1, i);
  return intern(y, v);
}

std::string TwistedPairSet::d2(const std::string& el, int i) const {
  const auto& [x, w] = at(el);
  auto [y, v] = face(x, w, 2, i);
  return intern(y, v);
}

std::string TwistedPairSet::eta(const std::string& el, int i) const {
  const auto& [x, w] = at(el);
  return intern(x, loop_eta(w, i));
}

std::vector<std::string> TwistedPairSet::elements(int degree_bound) const {
  std::vector<std::string> out;
  for (const auto& [g, gd] : ss_.gens) {
    if (gd > degree_bound) continue;
    Simplex x = ss_.ident(g);
    for (int n = 0; n + gd <= degree_bound; ++n)
      for (const auto& w : words_of_deg(ss_, n)) out.push_back(intern(x, LoopElem{{}, w}));
  }
  return out;
}

nlohmann::json loop_identify(const SSet& ss, int bound) {
  nlohmann::json out;
  out["space"] = ss.name;
  out["degree_bound"] = bound;

  std::string loops = compare_complexes(loop_complex(ss, bound), cobar_complex(ss, bound));
  out["loop_chains_match_cobar"] = loops.empty();
  if (!loops.empty()) out["loop_mismatch"] = loops;

  TwistedPairSet pairs(ss);
  ChainComplex tw = twisted_cobar_complex(ss, bound);
  std::string prod = compare_complexes(normalized_chains(pairs, bound), tw);
  out["pair_chains_match_twisted"] = prod.empty();
  if (!prod.empty()) out["pair_mismatch"] = prod;

  BatteryReport rep = verify_fnset(pairs, pairs.elements(bound));
  out["identities"] = {{"instances", rep.instances}, {"failures", rep.failures}};

  if (bound >= 1) out["twisted_homology"] = homology(tw, 0, bound - 1).to_json();

  out["ok"] = loops.empty() && prod.empty() && rep.ok();
  return out;
}

}  // namespace freeloop
