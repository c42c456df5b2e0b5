#pragma once

#include "freeloop/sset.hpp"

#include <memory>
#include <optional>

namespace freeloop {

// Normalized integer cochain on a simplicial set: supported on
// nondegenerate generators of a single dimension.
struct Coch {
  int deg = 0;
  std::map<std::string, Int> vals;

  bool zero() const { return vals.empty(); }
  bool operator==(const Coch& o) const { return (zero() && o.zero()) || (deg == o.deg && vals == o.vals); }
};

Coch coch_basis(const SSet& ss, const std::string& gen);
Int ev(const Coch& f, const Simplex& x);
// f + c*g; degrees must agree unless one side vanishes
Coch coch_add(const Coch& f, const Coch& g, const Int& c = 1);
Coch coch_scal(const Coch& f, const Int& c);

// coboundary (delta f)(S) = f(dS), no degree sign
Coch dcoch(const SSet& ss, const Coch& f);
// front/back cup product
Coch cup(const SSet& ss, const Coch& a, const Coch& b);

// E_{k,1}(a_1..a_k; b): interleaving sum with Serre inversion signs.
// E with no a-arguments is the identity on b; E_1 is cup_1.
Coch hga_E(const SSet& ss, const std::vector<Coch>& as, const Coch& b);

// parity of sum of (deg a_s + 1) over the first i arguments
int eps_of(const std::vector<Coch>& as, int i);

// structural identities of the E operations (exact cochain equalities):
// Leibniz rule for the coboundary through E
bool check_E_leibniz(const SSet& ss, const std::vector<Coch>& as, const Coch& b);
// splitting of a cup product in the last slot
bool check_E_cup_split(const SSet& ss, const std::vector<Coch>& as, const Coch& b, const Coch& c);
// composition of E with itself in the last slot
bool check_E_compose(const SSet& ss, const std::vector<Coch>& as, const std::vector<Coch>& bs,
                     const Coch& c);

Coch cup1(const SSet& ss, const Coch& a, const Coch& b);
// z cup_1 z for a cocycle z; requires even degree or even square
Coch sq1(const SSet& ss, const Coch& z);

// Label algebra consumed by the bar/Hochschild layer: a basis with unit
// label "1", degrees, differential, product and E operations as formal sums.
class Carrier {
 public:
  virtual ~Carrier() = default;
  virtual int deg(const std::string& l) const = 0;
  virtual Sum d(const std::string& l) const = 0;
  virtual Sum mul(const std::string& l1, const std::string& l2) const = 0;
  virtual Sum E(const std::vector<std::string>& as, const std::string& b) const = 0;
  virtual std::vector<std::string> basis_of_deg(int q) const = 0;
};

// cochains of a 1-reduced simplicial set; labels are generator names,
// optionally extended by registered named sums
class CochainCarrier : public Carrier {
 public:
  explicit CochainCarrier(const SSet& ss);

  void register_virtual(const std::string& name, const Coch& f);
  Coch as_cochain(const std::string& l) const;

  int deg(const std::string& l) const override;
  Sum d(const std::string& l) const override;
  Sum mul(const std::string& l1, const std::string& l2) const override;
  Sum E(const std::vector<std::string>& as, const std::string& b) const override;
  std::vector<std::string> basis_of_deg(int q) const override;

  const SSet& space() const { return *ss_; }

 private:
  const SSet* ss_;
  std::map<std::string, Coch> virtual_;
};

// free graded-commutative algebra on generators of positive degree with
// zero differential and vanishing E_{k>=1}; labels are exponent tuples
// "e1,e2,..".  Signs are trivial, so use even degrees over Z or any
// degrees in characteristic 2.
class TrivialCarrier : public Carrier {
 public:
  explicit TrivialCarrier(std::vector<std::pair<std::string, int>> gens);

  int deg(const std::string& l) const override;
  Sum d(const std::string& l) const override;
  Sum mul(const std::string& l1, const std::string& l2) const override;
  Sum E(const std::vector<std::string>& as, const std::string& b) const override;
  std::vector<std::string> basis_of_deg(int q) const override;

  std::vector<int> exponents(const std::string& l) const;
  std::string label(const std::vector<int>& exps) const;
  std::string pretty(const std::string& l) const;

 private:
  std::vector<std::pair<std::string, int>> gens_;
};

}  // namespace freeloop
