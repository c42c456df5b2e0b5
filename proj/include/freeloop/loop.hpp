#pragma once

#include "freeloop/fnset.hpp"
#include "freeloop/sset.hpp"
#include "freeloop/twisted.hpp"

#include <json.hpp>

#include <functional>

namespace freeloop {

// Element of the loop monoid on a reduced simplicial set: a word of
// nondegenerate letters together with a tower of degeneracy indices,
// outermost first.
struct LoopElem {
  std::vector<int> tower;
  SWord letters;

  bool operator==(const LoopElem&) const = default;
  bool operator<(const LoopElem& o) const {
    return std::tie(tower, letters) < std::tie(o.tower, o.letters);
  }
};

// Insert a degeneracy index, keeping the tower in canonical order.
std::vector<int> tower_insert(std::vector<int> tower, int i);

LoopElem loop_eta(const LoopElem& e, int i);
int loop_deg(const LoopElem& e);
LoopElem loop_mul(const LoopElem& a, const LoopElem& b);
std::string loop_label(const LoopElem& e);

using TauFn = std::function<LoopElem(const SSet&, const Simplex&)>;

// Twisting map sending an n-simplex to a loop of degree n - 1. Defined on
// nondegenerate simplices and towers of top degeneracies.
LoopElem loop_tau(const SSet& ss, const Simplex& x);

// Cubical face of a loop element, eps in {0, 1}, 1 <= q <= degree.
LoopElem loop_face(const SSet& ss, const LoopElem& e, int eps, int q,
                   const TauFn& tau = loop_tau);

// Boundary of a tower-free element, degenerate faces dropped.
SwSum loop_bound(const SSet& ss, const SWord& letters);

// Normalized chains on the loop monoid in degrees 0..bound.
ChainComplex loop_complex(const SSet& ss, int bound, Ring ring = Ring{});

// "" when the complexes have the same labelled bases and matrices,
// otherwise a description of the first discrepancy.
std::string compare_complexes(const ChainComplex& A, const ChainComplex& B);

// Deliberate defects for exercising the verification layers.
enum class PairFault {
  none,
  swapped_split,  // front/back pieces multiplied in the wrong order
  unit_twist,     // twisting map replaced by the constant unit
};

// Twisted product of a reduced simplicial set with its loop monoid,
// presented through the face/degeneracy interface.
class TwistedPairSet : public FnSet {
 public:
  explicit TwistedPairSet(const SSet& ss, PairFault fault = PairFault::none);

  std::pair<int, int> bidegree(const std::string& el) const override;
  bool degenerate(const std::string& el) const override;
  std::string d0(const std::string& el, int i) const override;
  std::string d1(const std::string& el, int i) const override;
  std::string d2(const std::string& el, int i) const override;
  std::string eta(const std::string& el, int i) const override;
  std::vector<std::string> elements(int degree_bound) const override;

  std::string intern(const Simplex& x, const LoopElem& w) const;

 private:
  const std::pair<Simplex, LoopElem>& at(const std::string& el) const;
  std::pair<Simplex, LoopElem> face(const Simplex& x, const LoopElem& w, int eps,
                                    int i) const;

  const SSet& ss_;
  PairFault fault_;
  TauFn tau_;
  mutable std::map<std::string, std::pair<Simplex, LoopElem>> reg_;
};

// Certificate that the loop model matches the algebraic complexes: chains on
// the loop monoid against the cobar complex, chains on the twisted product
// against the twisted cobar complex, plus the operator identity battery.
nlohmann::json loop_identify(const SSet& ss, int bound);

}  // namespace freeloop
