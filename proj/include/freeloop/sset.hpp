#pragma once

#include "freeloop/base.hpp"
#include "freeloop/chain.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace freeloop {

// Simplex of a simplicial set with nondegenerate generators: a weakly
// increasing surjection f onto {0..dim g} applied to the generator g.
// x is nondegenerate iff f is the identity.
struct Simplex {
  std::vector<int> f;
  std::string g;

  bool operator==(const Simplex& o) const { return f == o.f && g == o.g; }
  bool operator!=(const Simplex& o) const { return !(*this == o); }
  bool operator<(const Simplex& o) const {
    if (f != o.f) return f < o.f;
    return g < o.g;
  }
};

struct SSet {
  std::string name;
  std::map<std::string, int> gens;                  // generator -> dimension
  std::map<std::string, std::vector<Simplex>> faces;  // generator -> its dim+1 faces

  Simplex ident(const std::string& g) const;
  std::vector<Simplex> nondeg(int maxdim) const;
  std::vector<std::string> gens_of_dim(int d) const;
  int maxgen_dim() const;

  // single vertex, no generators above dimension 0 until 2
  bool one_reduced() const;

  static SSet from_json(const nlohmann::json& j);
  static SSet load_file(const std::string& path);
  nlohmann::json to_json() const;
};

int sdim(const Simplex& x);
bool is_nondeg(const Simplex& x);

Simplex sface(const SSet& ss, const Simplex& x, int i);
Simplex sdegen(const Simplex& x, int i);

// front/back subsimplex spanned by vertices a..b
Simplex interval(const SSet& ss, const Simplex& x, int a, int b);

// subsimplex on an ascending list of vertex positions
Simplex subsimplex(const SSet& ss, const Simplex& x, const std::vector<int>& pos);

// degeneracy word, e.g. "s_1 s_0 *"; show produces the canonical word with
// descending indices, parse accepts any word
std::string show_simplex(const Simplex& x);
Simplex parse_simplex(const SSet& ss, const std::string& word);

// all weakly increasing surjections {0..d} -> {0..k}
std::vector<std::vector<int>> surjections(int d, int k);
std::vector<Simplex> all_simplices(const SSet& ss, int d);

// face/degeneracy identities on every simplex up to maxdim; returns the
// first violated relation or the number of checked instances
struct SimplicialReport {
  long checked = 0;
  bool ok = true;
  std::string detail;
};
SimplicialReport check_simplicial(const SSet& ss, int maxdim);

// normalized chains: basis in degree q = generators of dimension q
ChainComplex simplicial_chains(const SSet& ss, int maxdim, Ring ring = Ring{});

// front/back coproduct terms of a simplex, i = 0..dim
std::vector<std::pair<Simplex, Simplex>> aw_pairs(const SSet& ss, const Simplex& x);

// standard M-simplex with its 1-skeleton collapsed: generators are the
// vertex subsets of size >= 3 (named by concatenated digits) plus the point
SSet delta_sk1(int M);

}  // namespace freeloop
