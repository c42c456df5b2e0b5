#pragma once

#include "freeloop/base.hpp"
#include "freeloop/snf.hpp"

#include <json.hpp>

#include <optional>

namespace freeloop {

// Finitely generated complex of free modules with labelled bases.
// d[k] maps degree k to degree k-1; rows index the degree k-1 basis.
struct ChainComplex {
  Ring ring;
  std::map<int, std::vector<std::string>> basis;
  std::map<int, SparseMat> d;

  int dim(int k) const {
    auto it = basis.find(k);
    return it == basis.end() ? 0 : static_cast<int>(it->second.size());
  }

  const std::vector<std::string>& labels(int k) const;
  int index_of(int k, const std::string& label) const;

  // d[k] with correct shape even when absent.
  SparseMat diff(int k) const;
  void set_diff(int k, SparseMat m);

  int lo() const { return basis.empty() ? 0 : basis.begin()->first; }
  int hi() const { return basis.empty() ? -1 : basis.rbegin()->first; }

  struct Witness {
    int degree;
    int row, col;
    Int value;
  };
  std::optional<Witness> compose_nonzero() const;

  Int euler() const;

  nlohmann::json to_json() const;
  static ChainComplex from_json(const nlohmann::json& j);
};

struct HomologySummary {
  // degree -> (free rank, torsion invariants > 1 in divisibility order)
  std::map<int, long> rank;
  std::map<int, std::vector<Int>> torsion;

  nlohmann::json to_json() const;
  bool operator==(const HomologySummary& o) const { return rank == o.rank && torsion == o.torsion; }
};

HomologySummary homology(const ChainComplex& C);
HomologySummary homology(const ChainComplex& C, int klo, int khi);

// Koszul-signed tensor product; labels are "a|b".
ChainComplex tensor(const ChainComplex& A, const ChainComplex& B);

// Linear dual placed at negated degrees, with the sign fixed so that
// evaluating a dual basis vector f on dx equals -(-1)^{|f|} (df)(x)
// and dualizing twice is the identity.
ChainComplex dualize(const ChainComplex& C);

// Chosen cycle representatives for one homology group, with coordinates:
// classes are free generators followed by torsion generators.
struct HomologyBasis {
  int degree = 0;
  Ring ring;
  long free_rank = 0;
  std::vector<Int> torsion;                // invariants > 1, one per torsion generator
  std::vector<std::vector<Int>> reps;      // cycles in the degree-k basis, free then torsion
  // internals for projecting arbitrary cycles to class coordinates
  SparseMat ker_coords;                    // cycle -> kernel coordinates
  SparseMat cls_of_ker;                    // kernel coordinates -> class coordinates
  std::vector<int> keep;                   // rows of cls_of_ker to report, free then torsion

  std::vector<Int> coords(const std::vector<Int>& cycle) const;
};

HomologyBasis homology_basis(const ChainComplex& C, int k);

}  // namespace freeloop
