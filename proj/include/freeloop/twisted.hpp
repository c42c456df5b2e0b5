#pragma once

#include "freeloop/chain.hpp"
#include "freeloop/hga.hpp"
#include "freeloop/sset.hpp"

namespace freeloop {

// ---- chain side: cobar words and the twisted tensor complex ----

// letters are nondegenerate simplices of dimension >= 2
using SWord = std::vector<Simplex>;

struct SPair {
  Simplex v;
  SWord w;
  bool operator<(const SPair& o) const {
    if (!(v == o.v)) return v < o.v;
    return w < o.w;
  }
  bool operator==(const SPair& o) const { return v == o.v && w == o.w; }
};

using SwSum = std::map<SWord, Int>;
using SpSum = std::map<SPair, Int>;

// alternating face sum, nondegenerate faces only
std::map<Simplex, Int> chain_d(const SSet& ss, const Simplex& x);

int word_wdeg(const SWord& w);  // sum of (dim - 1)
int eps_word(const SWord& w);   // parity of sum of (dim + 1)

SwSum cobar_d(const SSet& ss, const SWord& word);

// differential of the complex C(X) (x) cobar C(X); with_back = false
// drops the rotation term, which makes the complex acyclic
SpSum twisted_cobar_d(const SSet& ss, const Simplex& v, const SWord& word, bool with_back = true);

std::vector<SWord> words_of_deg(const SSet& ss, int n);
std::string word_label(const SWord& w);
std::string pair_label(const Simplex& v, const SWord& w);

ChainComplex cobar_complex(const SSet& ss, int bound, Ring ring = Ring{});
ChainComplex twisted_cobar_complex(const SSet& ss, int bound, Ring ring = Ring{},
                                   bool with_back = true);

// ---- cochain side: bar words over a carrier and the Hochschild complex ----

using BWord = std::vector<std::string>;

struct HElem {
  std::string u;
  BWord w;
  bool operator<(const HElem& o) const {
    if (u != o.u) return u < o.u;
    return w < o.w;
  }
  bool operator==(const HElem& o) const { return u == o.u && w == o.w; }
};

using BwSum = std::map<BWord, Int>;
using HSum = std::map<HElem, Int>;

int bar_deg(const Carrier& car, const BWord& w);          // sum of (deg - 1)
int bar_eps(const Carrier& car, const BWord& w, int i);   // parity over the first i letters

BwSum bar_d(const Carrier& car, const BWord& w);

// Hochschild differential of u (x) [w]; with_back = false drops the
// rotation term, which makes the complex acyclic
HSum hoch_d(const Carrier& car, const std::string& u, const BWord& w, bool with_back = true);
HSum hoch_d_sum(const Carrier& car, const HSum& s, bool with_back = true);

std::vector<BWord> bar_words_of_deg(const Carrier& car, int n);
std::string bar_label(const BWord& w);
std::string hoch_label(const HElem& e);

// both complexes raise the cochain degree, so they are stored at
// nonpositive degrees: total degree T sits at -T
ChainComplex bar_complex(const Carrier& car, int bound, Ring ring = Ring{});
ChainComplex hochschild_complex(const Carrier& car, int bound, Ring ring = Ring{},
                                bool with_back = true);

// The Hochschild complex of the cochain carrier of a space is the
// transpose of its twisted cobar complex: hoch d at -T equals the
// transpose of twisted cobar d at T+1 under (v, word) <-> (v*, word).
// Returns the first discrepancy as a message, or empty when identical.
std::string compare_dual_twisted(const SSet& ss, int bound);

}  // namespace freeloop
