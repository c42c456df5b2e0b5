#include "freeloop/twisted.hpp"

#include <algorithm>

namespace freeloop {

std::map<Simplex, Int> chain_d(const SSet& ss, const Simplex& x) {
  std::map<Simplex, Int> out;
  if (sdim(x) == 0) return out;
  for (int i = 0; i <= sdim(x); ++i) {
    Simplex y = sface(ss, x, i);
    if (!is_nondeg(y)) continue;
    Int c = out[y] += sign_pow(i);
    if (c == 0) out.erase(y);
  }
  return out;
}

int word_wdeg(const SWord& w) {
  int d = 0;
  for (const auto& x : w) d += sdim(x) - 1;
  return d;
}

int eps_word(const SWord& w) {
  int e = 0;
  for (const auto& x : w) e += sdim(x) + 1;
  return e;
}

namespace {

template <typename K>
void acc(std::map<K, Int>& out, const K& k, const Int& c) {
  if (c == 0) return;
  auto it = out.find(k);
  if (it == out.end()) {
    out.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == 0) out.erase(it);
}

SWord splice(const SWord& w, int t, const SWord& repl) {
  SWord out(w.begin(), w.begin() + t);
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + t + 1, w.end());
  return out;
}

}  // namespace

SwSum cobar_d(const SSet& ss, const SWord& word) {
  SwSum out;
  int pre = 0;
  for (int t = 0; t < static_cast<int>(word.size()); ++t) {
    const Simplex& x = word[t];
    int sg = sign_pow(pre);
    for (const auto& [y, c] : chain_d(ss, x))
      if (sdim(y) >= 2) acc(out, splice(word, t, {y}), -sg * c);
    int n = sdim(x);
    for (int i = 2; i < n - 1; ++i) {
      Simplex fr = interval(ss, x, 0, i);
      Simplex bk = interval(ss, x, i, n);
      if (is_nondeg(fr) && is_nondeg(bk))
        acc(out, splice(word, t, {fr, bk}), Int(sg * sign_pow(i)));
    }
    pre += n - 1;
  }
  return out;
}

SpSum twisted_cobar_d(const SSet& ss, const Simplex& v, const SWord& word, bool with_back) {
  SpSum out;
  int m = sdim(v);
  for (const auto& [y, c] : chain_d(ss, v))
    if (sdim(y) != 1) acc(out, SPair{y, word}, c);
  for (const auto& [w2, c] : cobar_d(ss, word)) acc(out, SPair{v, w2}, sign_pow(m) * c);
  for (int i = 0; i <= m - 2; ++i) {
    Simplex fr = interval(ss, v, 0, i);
    Simplex bk = interval(ss, v, i, m);
    if (is_nondeg(fr) && is_nondeg(bk)) {
      SWord w2{bk};
      w2.insert(w2.end(), word.begin(), word.end());
      acc(out, SPair{fr, w2}, Int(-sign_pow(i)));
    }
  }
  if (with_back) {
    int ec = eps_word(word);
    for (int i = 2; i <= m; ++i) {
      Simplex fr = interval(ss, v, 0, i);
      Simplex bk = interval(ss, v, i, m);
      if (is_nondeg(fr) && is_nondeg(bk)) {
        SWord w2 = word;
        w2.push_back(fr);
        acc(out, SPair{bk, w2}, Int(sign_pow((i + 1) * (m - i + ec))));
      }
    }
  }
  return out;
}

std::vector<SWord> words_of_deg(const SSet& ss, int n) {
  if (n == 0) return {SWord{}};
  std::vector<SWord> out;
  for (const auto& [g, gd] : ss.gens) {
    if (gd < 2 || gd - 1 > n) continue;
    Simplex x = ss.ident(g);
    for (const auto& rest : words_of_deg(ss, n - (gd - 1))) {
      SWord w{x};
      w.insert(w.end(), rest.begin(), rest.end());
      out.push_back(w);
    }
  }
  return out;
}

std::string word_label(const SWord& w) {
  std::vector<std::string> parts;
  for (const auto& x : w) parts.push_back(show_simplex(x));
  return "[" + join(parts, "|") + "]";
}

std::string pair_label(const Simplex& v, const SWord& w) {
  return show_simplex(v) + word_label(w);
}

namespace {

ChainComplex build_from_columns(const std::map<int, std::vector<std::string>>& labels,
                            const std::map<int, std::map<std::string, Sum>>& diffs, Ring ring) {
  ChainComplex C;
  C.ring = ring;
  C.basis = labels;
  for (const auto& [k, cols] : diffs) {
    if (!labels.count(k) || !labels.count(k - 1)) continue;
    const auto& dom = labels.at(k);
    const auto& cod = labels.at(k - 1);
    std::map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(cod.size()); ++i) idx[cod[i]] = i;
    SparseMat m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
    for (int j = 0; j < static_cast<int>(dom.size()); ++j) {
      auto it = cols.find(dom[j]);
      if (it == cols.end()) continue;
      for (const auto& [lbl, c] : it->second) {
        auto r = idx.find(lbl);
        expect(r != idx.end(), "differential leaves the basis at " + lbl);
        m.add(r->second, j, ring.norm(c));
      }
    }
    C.set_diff(k, m);
  }
  return C;
}

}  // namespace

ChainComplex cobar_complex(const SSet& ss, int bound, Ring ring) {
  std::map<int, std::vector<std::string>> labels;
  std::map<int, std::map<std::string, Sum>> diffs;
  std::map<int, std::vector<SWord>> words;
  for (int n = 0; n <= bound; ++n) {
    words[n] = words_of_deg(ss, n);
    std::vector<std::string> ls;
    for (const auto& w : words[n]) ls.push_back(word_label(w));
    std::sort(ls.begin(), ls.end());
    labels[n] = ls;
  }
  for (int n = 1; n <= bound; ++n) {
    auto& cols = diffs[n];
    for (const auto& w : words[n]) {
      Sum s;
      for (const auto& [w2, c] : cobar_d(ss, w)) add_to(s, word_label(w2), c, ring);
      cols[word_label(w)] = std::move(s);
    }
  }
  return build_from_columns(labels, diffs, ring);
}

ChainComplex twisted_cobar_complex(const SSet& ss, int bound, Ring ring, bool with_back) {
  std::map<int, std::vector<std::string>> labels;
  std::map<int, std::map<std::string, Sum>> diffs;
  std::map<int, std::vector<SPair>> els;
  for (int T = 0; T <= bound; ++T) {
    for (const auto& [g, gd] : ss.gens) {
      if (gd == 1 || gd > T) continue;
      for (const auto& w : words_of_deg(ss, T - gd)) els[T].push_back({ss.ident(g), w});
    }
    std::vector<std::string> ls;
    for (const auto& e : els[T]) ls.push_back(pair_label(e.v, e.w));
    std::sort(ls.begin(), ls.end());
    labels[T] = ls;
  }
  for (int T = 1; T <= bound; ++T) {
    auto& cols = diffs[T];
    for (const auto& e : els[T]) {
      Sum s;
      for (const auto& [e2, c] : twisted_cobar_d(ss, e.v, e.w, with_back))
        add_to(s, pair_label(e2.v, e2.w), c, ring);
      cols[pair_label(e.v, e.w)] = std::move(s);
    }
  }
  return build_from_columns(labels, diffs, ring);
}

int bar_deg(const Carrier& car, const BWord& w) {
  int d = 0;
  for (const auto& l : w) d += car.deg(l) - 1;
  return d;
}

int bar_eps(const Carrier& car, const BWord& w, int i) {
  int e = 0;
  for (int s = 0; s < i; ++s) e += car.deg(w[s]) + 1;
  return e % 2;
}

BwSum bar_d(const Carrier& car, const BWord& w) {
  BwSum out;
  int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) {
    int e = bar_eps(car, w, i);
    for (const auto& [l, c] : car.d(w[i])) {
      BWord w2 = w;
      w2[i] = l;
      acc(out, w2, -c * sign_pow(e));
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    int e = bar_eps(car, w, i + 1);
    for (const auto& [l, c] : car.mul(w[i], w[i + 1])) {
      if (l == "1" || car.deg(l) == 0) continue;
      BWord w2(w.begin(), w.begin() + i);
      w2.push_back(l);
      w2.insert(w2.end(), w.begin() + i + 2, w.end());
      acc(out, w2, -c * sign_pow(e));
    }
  }
  return out;
}

HSum hoch_d(const Carrier& car, const std::string& u, const BWord& w, bool with_back) {
  HSum out;
  for (const auto& [l, c] : car.d(u)) acc(out, HElem{l, w}, c);
  int su = sign_pow(car.deg(u));
  for (const auto& [w2, c] : bar_d(car, w)) acc(out, HElem{u, w2}, su * c);
  if (!w.empty()) {
    for (const auto& [l, c] : car.mul(u, w.front()))
      acc(out, HElem{l, BWord(w.begin() + 1, w.end())}, -su * c);
    if (with_back) {
      const std::string& an = w.back();
      int e = (car.deg(an) + 1) * (car.deg(u) + bar_eps(car, w, static_cast<int>(w.size()) - 1));
      for (const auto& [l, c] : car.mul(an, u))
        acc(out, HElem{l, BWord(w.begin(), w.end() - 1)}, c * sign_pow(e));
    }
  }
  return out;
}

HSum hoch_d_sum(const Carrier& car, const HSum& s, bool with_back) {
  HSum out;
  for (const auto& [e, c] : s)
    for (const auto& [e2, c2] : hoch_d(car, e.u, e.w, with_back)) acc(out, e2, c * c2);
  return out;
}

std::vector<BWord> bar_words_of_deg(const Carrier& car, int n) {
  if (n == 0) return {BWord{}};
  std::vector<BWord> out;
  for (int q = 2; q - 1 <= n; ++q) {
    for (const auto& l : car.basis_of_deg(q)) {
      for (const auto& rest : bar_words_of_deg(car, n - (q - 1))) {
        BWord w{l};
        w.insert(w.end(), rest.begin(), rest.end());
        out.push_back(w);
      }
    }
  }
  return out;
}

std::string bar_label(const BWord& w) { return "[" + join(w, "|") + "]"; }

std::string hoch_label(const HElem& e) { return e.u + bar_label(e.w); }

ChainComplex bar_complex(const Carrier& car, int bound, Ring ring) {
  std::map<int, std::vector<std::string>> labels;
  std::map<int, std::map<std::string, Sum>> diffs;
  std::map<int, std::vector<BWord>> words;
  for (int n = 0; n <= bound; ++n) {
    words[n] = bar_words_of_deg(car, n);
    std::vector<std::string> ls;
    for (const auto& w : words[n]) ls.push_back(bar_label(w));
    std::sort(ls.begin(), ls.end());
    labels[-n] = ls;
  }
  for (int n = 0; n < bound; ++n) {
    auto& cols = diffs[-n];
    for (const auto& w : words[n]) {
      Sum s;
      for (const auto& [w2, c] : bar_d(car, w)) add_to(s, bar_label(w2), c, ring);
      cols[bar_label(w)] = std::move(s);
    }
  }
  return build_from_columns(labels, diffs, ring);
}

ChainComplex hochschild_complex(const Carrier& car, int bound, Ring ring, bool with_back) {
  std::map<int, std::vector<std::string>> labels;
  std::map<int, std::map<std::string, Sum>> diffs;
  std::map<int, std::vector<HElem>> els;
  expect(car.basis_of_deg(1).empty(), "carrier must vanish in degree 1");
  for (int T = 0; T <= bound; ++T) {
    for (int du = 0; du <= T; ++du) {
      for (const auto& u : car.basis_of_deg(du))
        for (const auto& w : bar_words_of_deg(car, T - du)) els[T].push_back({u, w});
    }
    std::vector<std::string> ls;
    for (const auto& e : els[T]) ls.push_back(hoch_label(e));
    std::sort(ls.begin(), ls.end());
    labels[-T] = ls;
  }
  for (int T = 0; T < bound; ++T) {
    auto& cols = diffs[-T];
    for (const auto& e : els[T]) {
      Sum s;
      for (const auto& [e2, c] : hoch_d(car, e.u, e.w, with_back))
        add_to(s, hoch_label(e2), c, ring);
      cols[hoch_label(e)] = std::move(s);
    }
  }
  return build_from_columns(labels, diffs, ring);
}

std::string compare_dual_twisted(const SSet& ss, int bound) {
  CochainCarrier car(ss);
  auto hoch_of = [](const SPair& e) {
    HElem h;
    h.u = sdim(e.v) == 0 ? "1" : e.v.g;
    for (const auto& x : e.w) h.w.push_back(x.g);
    return h;
  };
  std::map<int, std::vector<SPair>> els;
  for (int T = 0; T <= bound + 1; ++T)
    for (const auto& [g, gd] : ss.gens) {
      if (gd == 1 || gd > T) continue;
      for (const auto& w : words_of_deg(ss, T - gd)) els[T].push_back({ss.ident(g), w});
    }
  for (int T = 0; T <= bound; ++T) {
    // carrier-side basis must biject with the chain-side one
    std::map<HElem, SPair> mapped;
    for (const auto& e : els[T]) mapped.emplace(hoch_of(e), e);
    long hsize = 0;
    for (int du = 0; du <= T; ++du)
      for ([[maybe_unused]] const auto& u : car.basis_of_deg(du))
        hsize += static_cast<long>(bar_words_of_deg(car, T - du).size());
    if (hsize != static_cast<long>(mapped.size()))
      return "basis size mismatch at degree " + std::to_string(T);
    // entries: hoch d of y picks out column y of the transposed twisted matrix
    std::map<SPair, SpSum> cart;
    for (const auto& x : els[T + 1]) cart.emplace(x, twisted_cobar_d(ss, x.v, x.w, true));
    for (const auto& y : els[T]) {
      HSum h = hoch_d(car, hoch_of(y).u, hoch_of(y).w, true);
      for (const auto& x : els[T + 1]) {
        auto it = cart.at(x).find(y);
        Int a = it == cart.at(x).end() ? Int(0) : it->second;
        auto jt = h.find(hoch_of(x));
        Int b = jt == h.end() ? Int(0) : jt->second;
        if (a != b)
          return "entry mismatch at degree " + std::to_string(T) + ": " +
                 pair_label(x.v, x.w) + " / " + pair_label(y.v, y.w);
        if (jt != h.end()) h.erase(jt);
      }
      if (!h.empty()) return "extra dual entry at degree " + std::to_string(T);
    }
  }
  return "";
}

}  // namespace freeloop
