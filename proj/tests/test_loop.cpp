#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freeloop/chain.hpp"
#include "freeloop/loop.hpp"
#include "freeloop/sset.hpp"

using namespace freeloop;

namespace {

SSet corpus(const std::string& name) {
  return SSet::load_file(std::string(FREELOOP_CORPUS_DIR) + "/" + name + ".json");
}

}  // namespace

TEST_CASE("degeneracy towers") {
  CHECK(tower_insert({}, 3) == std::vector<int>{3});
  CHECK(tower_insert({3, 1}, 2) == std::vector<int>{4, 2, 1});
  CHECK(tower_insert({2, 2, 1}, 2) == std::vector<int>{3, 3, 2, 1});

  SSet s2 = corpus("s2");
  Simplex s = s2.ident("sigma");
  LoopElem a{{2}, {s}};
  LoopElem b{{1}, {s}};
  CHECK(loop_mul(a, b) == LoopElem{{3, 2}, {s, s}});
  CHECK(loop_deg(loop_mul(a, b)) == 4);

  LoopElem unit;
  CHECK(loop_mul(unit, a) == a);
  CHECK(loop_mul(a, unit) == a);

  std::vector<LoopElem> pool = {unit, {{}, {s}}, {{1}, {}},    {{2}, {s}},
                                a,    b,         {{}, {s, s}}, {{2, 1}, {s}}};
  for (const auto& x : pool)
    for (const auto& y : pool)
      for (const auto& z : pool)
        CHECK(loop_mul(loop_mul(x, y), z) == loop_mul(x, loop_mul(y, z)));
}

TEST_CASE("twisting map on simplices") {
  SSet s2 = corpus("s2");
  Simplex s = s2.ident("sigma");
  Simplex pt = s2.ident("*");

  CHECK(loop_tau(s2, pt) == LoopElem{});
  CHECK(loop_tau(s2, sdegen(pt, 0)) == LoopElem{});
  CHECK(loop_tau(s2, s) == LoopElem{{}, {s}});
  CHECK(loop_tau(s2, sdegen(s, 2)) == LoopElem{{2}, {s}});
  CHECK(loop_tau(s2, sdegen(sdegen(s, 2), 3)) == LoopElem{{3, 2}, {s}});
  CHECK_THROWS(loop_tau(s2, sdegen(s, 0)));

  SSet sc = corpus("s2cup");
  Simplex th = sc.ident("theta");
  Simplex sg = sc.ident("sigma");
  CHECK(loop_face(sc, {{}, {th}}, 0, 1) == LoopElem{{}, {sg}});
  CHECK(loop_face(sc, {{}, {th}}, 1, 1) == LoopElem{{}, {sg}});
  CHECK(loop_face(sc, {{}, {th}}, 1, 2) == LoopElem{{1}, {}});
  CHECK(loop_bound(sc, {th}) == SwSum{{{sg}, 1}});
}

TEST_CASE("loop chains match the cobar complex") {
  for (const char* name : {"s2", "s2wedge", "s2cup"}) {
    SSet ss = corpus(name);
    int bound = std::string(name) == "s2" ? 8 : std::string(name) == "s2cup" ? 6 : 5;
    CAPTURE(name);
    ChainComplex L = loop_complex(ss, bound);
    CHECK(!L.compose_nonzero());
    CHECK(compare_complexes(L, cobar_complex(ss, bound)) == "");
  }
}

TEST_CASE("pair set satisfies the operator identities") {
  struct Row {
    const char* name;
    int bound;
    long instances;
  };
  for (Row row : {Row{"s2", 6, 865}, Row{"s2wedge", 5, 8551}, Row{"s2cup", 5, 2487}}) {
    SSet ss = corpus(row.name);
    TwistedPairSet pairs(ss);
    BatteryReport rep = verify_fnset(pairs, pairs.elements(row.bound));
    CAPTURE(row.name);
    CHECK(rep.instances == row.instances);
    CHECK(rep.failures.empty());
  }
}

TEST_CASE("pair chains match the twisted cobar complex") {
  for (const char* name : {"s2", "s2wedge", "s2cup"}) {
    SSet ss = corpus(name);
    int bound = std::string(name) == "s2" ? 7 : 5;
    CAPTURE(name);
    TwistedPairSet pairs(ss);
    ChainComplex N = normalized_chains(pairs, bound);
    CHECK(compare_complexes(N, twisted_cobar_complex(ss, bound)) == "");
  }
}

TEST_CASE("swapped split order trips the identity battery") {
  SSet sc = corpus("s2cup");
  TwistedPairSet pairs(sc, PairFault::swapped_split);
  BatteryReport rep = verify_fnset(pairs, pairs.elements(5));
  CHECK(rep.instances == 2487);
  REQUIRE(rep.failures.size() == 43);
  CHECK(rep.failures[0].substr(0, 7) == "I3b 1,1");
}

TEST_CASE("unit twist trips both verification layers") {
  SSet sc = corpus("s2cup");
  TwistedPairSet pairs(sc, PairFault::unit_twist);
  BatteryReport rep = verify_fnset(pairs, pairs.elements(5));
  CHECK(rep.instances == 2167);
  CHECK(rep.failures.size() == 48);

  long mismatched = 0;
  for (int T = 0; T <= 5; ++T)
    for (const auto& [g, gd] : sc.gens) {
      if (gd == 1 || gd > T) continue;
      Simplex v = sc.ident(g);
      for (const auto& w : words_of_deg(sc, T - gd)) {
        Sum got = fnset_boundary(pairs, pairs.intern(v, LoopElem{{}, w}));
        Sum want;
        for (const auto& [p, c] : twisted_cobar_d(sc, v, w)) want[pair_label(p.v, p.w)] = c;
        if (got != want) ++mismatched;
      }
    }
  CHECK(mismatched == 22);
}

TEST_CASE("identification certificate") {
  SSet s2 = corpus("s2");
  nlohmann::json cert = loop_identify(s2, 6);
  CHECK(cert["ok"] == true);
  CHECK(cert["loop_chains_match_cobar"] == true);
  CHECK(cert["pair_chains_match_twisted"] == true);
  CHECK(cert["identities"]["instances"] == 865);
  CHECK(cert["identities"]["failures"].empty());
  CHECK(cert["twisted_homology"].size() == 6);

  SSet sc = corpus("s2cup");
  nlohmann::json bad = loop_identify(sc, 3);
  CHECK(bad["ok"] == true);
}
