#pragma once

#include "freeloop/cells.hpp"
#include "freeloop/chain.hpp"

#include <json.hpp>

namespace freeloop {

// Graded set with three families of face operators and degeneracies,
// elements addressed by display label. Bidegree (m, n): d2 needs 1 <= i <= m,
// eta needs 1 <= i <= n+1, d0/d1 need 1 <= i <= m+n.
struct FnSet {
  virtual ~FnSet() = default;
  virtual std::pair<int, int> bidegree(const std::string& el) const = 0;
  virtual bool degenerate(const std::string& el) const = 0;
  virtual std::string d0(const std::string& el, int i) const = 0;
  virtual std::string d1(const std::string& el, int i) const = 0;
  virtual std::string d2(const std::string& el, int i) const = 0;
  virtual std::string eta(const std::string& el, int i) const = 0;
  virtual std::vector<std::string> elements(int degree_bound) const = 0;
};

struct Op {
  int k;  // 0, 1, 2 face kinds; 3 degeneracy
  int i;
};

bool op_legal(std::pair<int, int> bid, Op op);
std::pair<int, int> bid_after(std::pair<int, int> bid, Op op);

struct BatteryReport {
  long instances = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Exercises every operator identity on the given elements. Instances whose
// operator chains leave the legal range on either side are skipped.
BatteryReport verify_fnset(const FnSet& fs, const std::vector<std::string>& els);

// Eq-style boundary through the interface; degenerate images dropped unless
// keep_degenerate is set.
Sum fnset_boundary(const FnSet& fs, const std::string& el, bool keep_degenerate = false);

// Complex of nondegenerate elements in total degrees 0..bound.
ChainComplex normalized_chains(const FnSet& fs, int bound, const Ring& ring = {});

// Free model on one top element of bidegree (m, n).
class CellFnSet : public FnSet {
 public:
  CellFnSet(int m, int n) : m_(m), n_(n) {}
  std::pair<int, int> bidegree(const std::string& el) const override;
  bool degenerate(const std::string& el) const override;
  std::string d0(const std::string& el, int i) const override;
  std::string d1(const std::string& el, int i) const override;
  std::string d2(const std::string& el, int i) const override;
  std::string eta(const std::string& el, int i) const override;
  std::vector<std::string> elements(int degree_bound) const override;

 private:
  int m_, n_;
};

nlohmann::json fnset_to_json(const FnSet& fs, int degree_bound);

// Matrix of a degree-preserving coproduct C_k -> (C (x) C)_k induced by the
// cell coproduct, degenerate and out-of-range terms dropped.
SparseMat coproduct_matrix(const ChainComplex& C, const ChainComplex& CxC, int k);

}  // namespace freeloop
