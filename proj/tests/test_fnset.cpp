#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freeloop/diagonal.hpp"
#include "freeloop/fnset.hpp"

using namespace freeloop;

namespace {

// wraps a model and corrupts one operator family on one index
struct Faulty : FnSet {
  const FnSet& base;
  int kind;  // which operator to damage

  Faulty(const FnSet& b, int k) : base(b), kind(k) {}
  std::pair<int, int> bidegree(const std::string& el) const override { return base.bidegree(el); }
  bool degenerate(const std::string& el) const override { return base.degenerate(el); }
  std::string d0(const std::string& el, int i) const override {
    auto [m, n] = base.bidegree(el);
    if (kind == 0 && i >= 2) return base.d1(el, i);  // wrong family
    return base.d0(el, i);
  }
  std::string d1(const std::string& el, int i) const override {
    auto [m, n] = base.bidegree(el);
    if (kind == 1 && i >= 2 && i < m + n) return base.d1(el, i + 1);  // shifted index
    return base.d1(el, i);
  }
  std::string d2(const std::string& el, int i) const override { return base.d2(el, i); }
  std::string eta(const std::string& el, int i) const override {
    auto [m, n] = base.bidegree(el);
    if (kind == 2 && i <= n) return base.eta(el, i + 1);  // shifted degeneracy
    return base.eta(el, i);
  }
  std::vector<std::string> elements(int b) const override { return base.elements(b); }
};

}  // namespace

TEST_CASE("free model satisfies every operator identity") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 0}, {1, 1}, {0, 2}, {2, 1}, {1, 2}}) {
    CellFnSet fs(m, n);
    auto els = fs.elements(m + n + 2);
    auto rep = verify_fnset(fs, els);
    INFO(m, " ", n, " first failure: ", rep.failures.empty() ? "" : rep.failures[0]);
    CHECK(rep.ok());
    CHECK(rep.instances > 100);
  }
}

TEST_CASE("battery catches seeded faults") {
  CellFnSet fs(1, 1);
  auto els = fs.elements(4);
  for (int kind : {0, 1, 2}) {
    Faulty bad(fs, kind);
    auto rep = verify_fnset(bad, els);
    INFO("fault kind ", kind);
    CHECK(!rep.ok());
  }
}

TEST_CASE("legality bookkeeping matches the operators") {
  CellFnSet fs(2, 1);
  for (const auto& el : fs.elements(4)) {
    auto bid = fs.bidegree(el);
    auto [m, n] = bid;
    for (int i = 1; i <= m + n; ++i) {
      CHECK(fs.bidegree(fs.d0(el, i)) == bid_after(bid, {0, i}));
      CHECK(fs.bidegree(fs.d1(el, i)) == bid_after(bid, {1, i}));
    }
    for (int i = 1; i <= m; ++i) CHECK(fs.bidegree(fs.d2(el, i)) == bid_after(bid, {2, i}));
    for (int i = 1; i <= n + 1; ++i) CHECK(fs.bidegree(fs.eta(el, i)) == bid_after(bid, {3, i}));
  }
}

TEST_CASE("normalized chains agree with the cell complex") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 0}, {1, 1}, {3, 0}, {1, 2}}) {
    CellFnSet fs(m, n);
    auto C1 = normalized_chains(fs, m + n);
    auto C2 = cell_complex(m, n);
    CHECK(C1.basis == C2.basis);
    for (int k = 1; k <= m + n; ++k) CHECK(C1.diff(k) == C2.diff(k));
    CHECK(!C1.compose_nonzero());
  }
}

TEST_CASE("element boundary squares to zero with degeneracies kept") {
  CellFnSet fs(1, 2);
  for (const auto& el : fs.elements(4)) {
    Sum dd;
    for (const auto& [f, c] : fnset_boundary(fs, el, true))
      for (const auto& [g, c2] : fnset_boundary(fs, f, true)) add_to(dd, g, c * c2);
    CHECK(dd.empty());
  }
}

TEST_CASE("coproduct matrices commute with the differential") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 0}, {3, 0}, {1, 1}, {1, 2}}) {
    auto C = cell_complex(m, n);
    auto T = tensor(C, C);
    for (int k = 1; k <= m + n; ++k) {
      auto lhs = T.diff(k).mul(coproduct_matrix(C, T, k));
      auto rhs = coproduct_matrix(C, T, k - 1).mul(C.diff(k));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("json export shape") {
  CellFnSet fs(1, 1);
  auto j = fnset_to_json(fs, 3);
  REQUIRE(j.contains("elements"));
  REQUIRE(j.contains("d0"));
  REQUIRE(j.contains("eta"));
  bool found_top = false;
  for (const auto& e : j["elements"]) {
    if (e["label"] == "01][b0,b1,b2]") {
      found_top = true;
      CHECK(e["m"] == 1);
      CHECK(e["n"] == 1);
    }
  }
  CHECK(found_top);
  CHECK(j["d0"]["01][b0,b1,b2]"].size() == 2);
  CHECK(j["d2"]["01][b0,b1,b2]"].size() == 1);
  // operator tables round-trip through the labels
  CellFnSet ref(1, 1);
  CHECK(j["d0"]["01][b0,b1,b2]"][0] == ref.d0("01][b0,b1,b2]", 1));
}
