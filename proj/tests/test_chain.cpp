#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freeloop/chain.hpp"
#include "freeloop/snf.hpp"

#include <random>

using namespace freeloop;

namespace {

SparseMat from_rows(const std::vector<std::vector<long>>& rows) {
  SparseMat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] != 0) m.entries[{(int)r, (int)c}] = rows[r][c];
  return m;
}

SparseMat diag_mat(const SmithResult& s, int rows, int cols) {
  SparseMat d(rows, cols);
  for (size_t i = 0; i < s.diag.size(); ++i) d.entries[{(int)i, (int)i}] = s.diag[i];
  return d;
}

// circle: 1 vertex, 1 loop edge
ChainComplex circle(Ring ring = {}) {
  ChainComplex C;
  C.ring = ring;
  C.basis[0] = {"v"};
  C.basis[1] = {"e"};
  C.set_diff(1, SparseMat(1, 1));
  return C;
}

ChainComplex interval() {
  ChainComplex C;
  C.basis[0] = {"p", "q"};
  C.basis[1] = {"e"};
  SparseMat d(2, 1);
  d.entries[{0, 0}] = -1;
  d.entries[{1, 0}] = 1;
  C.set_diff(1, d);
  return C;
}

// real projective plane, minimal CW model
ChainComplex rp2(Ring ring = {}) {
  ChainComplex C;
  C.ring = ring;
  C.basis[0] = {"v"};
  C.basis[1] = {"e"};
  C.basis[2] = {"f"};
  C.set_diff(1, SparseMat(1, 1));
  SparseMat d2(1, 1);
  d2.entries[{0, 0}] = ring.norm(2);
  C.set_diff(2, d2);
  return C;
}

}  // namespace

TEST_CASE("smith of [[2,4],[6,8]]") {
  auto s = smith(from_rows({{2, 4}, {6, 8}}));
  REQUIRE(s.diag.size() == 2);
  CHECK(s.diag[0] == 2);
  CHECK(s.diag[1] == 4);
}

TEST_CASE("smith transforms reconstruct and invert") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 30; ++trial) {
    int r = 1 + rng() % 8, c = 1 + rng() % 8;
    SparseMat A(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        int v = static_cast<int>(rng() % 11) - 5;
        if (rng() % 2) A.set(i, j, v);
      }
    auto s = smith(A, Ring{}, true);
    CHECK(s.L.mul(A).mul(s.R) == diag_mat(s, r, c));
    CHECK(s.L.mul(s.Linv) == SparseMat::identity(r));
    CHECK(s.Linv.mul(s.L) == SparseMat::identity(r));
    CHECK(s.R.mul(s.Rinv) == SparseMat::identity(c));
    CHECK(s.Rinv.mul(s.R) == SparseMat::identity(c));
    for (size_t i = 0; i + 1 < s.diag.size(); ++i) CHECK(s.diag[i + 1] % s.diag[i] == 0);
  }
}

TEST_CASE("smith over Z/p behaves as gaussian elimination") {
  Ring f5{5};
  auto A = from_rows({{5, 1}, {10, 3}});  // rank 1 mod 5
  auto s = smith(A, f5, true);
  CHECK(s.rank == 1);
  CHECK(s.L.mul(A, f5).mul(s.R, f5) == diag_mat(s, 2, 2));
  CHECK(rank_of(A) == 2);  // rank 2 over Z
}

TEST_CASE("larger random smith reconstruction") {
  std::mt19937 rng(999);
  SparseMat A(40, 55);
  for (int k = 0; k < 300; ++k)
    A.set(static_cast<int>(rng() % 40), static_cast<int>(rng() % 55),
          static_cast<int>(rng() % 7) - 3);
  auto s = smith(A, Ring{}, true);
  CHECK(s.L.mul(A).mul(s.R) == diag_mat(s, 40, 55));
}

TEST_CASE("homology of circle, interval, rp2") {
  auto Hc = homology(circle());
  CHECK(Hc.rank.at(0) == 1);
  CHECK(Hc.rank.at(1) == 1);

  auto Hi = homology(interval());
  CHECK(Hi.rank.at(0) == 1);
  CHECK(Hi.rank.at(1) == 0);

  auto Hr = homology(rp2());
  CHECK(Hr.rank.at(0) == 1);
  CHECK(Hr.rank.at(1) == 0);
  REQUIRE(Hr.torsion.at(1).size() == 1);
  CHECK(Hr.torsion.at(1)[0] == 2);
  CHECK(Hr.rank.at(2) == 0);

  auto Hr2 = homology(rp2(Ring{2}));
  CHECK(Hr2.rank.at(0) == 1);
  CHECK(Hr2.rank.at(1) == 1);
  CHECK(Hr2.rank.at(2) == 1);
}

TEST_CASE("euler characteristic matches homology") {
  auto C = rp2();
  auto H = homology(C);
  long e = 0;
  for (const auto& [k, r] : H.rank) e += (k % 2 == 0 ? r : -r);
  CHECK(C.euler() == e);
}

TEST_CASE("tensor of intervals is a square") {
  auto T = tensor(interval(), interval());
  CHECK(T.dim(0) == 4);
  CHECK(T.dim(1) == 4);
  CHECK(T.dim(2) == 1);
  CHECK(!T.compose_nonzero());
  auto H = homology(T);
  CHECK(H.rank.at(0) == 1);
  CHECK(H.rank.at(1) == 0);
  CHECK(H.rank.at(2) == 0);

  auto Tc = tensor(circle(), circle());  // torus
  CHECK(!Tc.compose_nonzero());
  auto Ht = homology(Tc);
  CHECK(Ht.rank.at(0) == 1);
  CHECK(Ht.rank.at(1) == 2);
  CHECK(Ht.rank.at(2) == 1);
}

TEST_CASE("compose_nonzero reports a witness") {
  ChainComplex C;
  C.basis[0] = {"a"};
  C.basis[1] = {"b"};
  C.basis[2] = {"c"};
  SparseMat d1(1, 1), d2(1, 1);
  d1.entries[{0, 0}] = 1;
  d2.entries[{0, 0}] = 1;
  C.set_diff(1, d1);
  C.set_diff(2, d2);
  auto w = C.compose_nonzero();
  REQUIRE(w.has_value());
  CHECK(w->degree == 2);
  CHECK(w->value == 1);
}

TEST_CASE("dualize: evaluation sign") {
  auto C = interval();
  auto D = dualize(C);
  // f in degree 0 dual of label p; x the edge; (df)(x) = -(-1)^0 f(dx)
  SparseMat dhat = D.diff(0);  // degree 0 -> -1
  SparseMat d1 = C.diff(1);
  for (int fi = 0; fi < 2; ++fi)
    for (int xi = 0; xi < 1; ++xi) CHECK(dhat.get(xi, fi) == -d1.get(fi, xi));
}

TEST_CASE("dualize twice is the identity") {
  for (auto C : {interval(), rp2(), tensor(circle(), interval())}) {
    auto DD = dualize(dualize(C));
    CHECK(DD.basis == C.basis);
    for (int k = C.lo(); k <= C.hi(); ++k) CHECK(DD.diff(k) == C.diff(k));
    CHECK(!dualize(C).compose_nonzero());
  }
}

TEST_CASE("json round trip") {
  auto C = rp2();
  auto j = C.to_json();
  auto C2 = ChainComplex::from_json(j);
  CHECK(C2.basis == C.basis);
  for (int k = C.lo(); k <= C.hi(); ++k) CHECK(C2.diff(k) == C.diff(k));
  CHECK(C2.ring == C.ring);

  // big coefficients survive as strings
  ChainComplex B;
  B.basis[0] = {"a"};
  B.basis[1] = {"b"};
  SparseMat d(1, 1);
  d.entries[{0, 0}] = Int("123456789012345678901234567890");
  B.set_diff(1, d);
  auto B2 = ChainComplex::from_json(B.to_json());
  CHECK(B2.diff(1).get(0, 0) == Int("123456789012345678901234567890"));
}

TEST_CASE("homology_basis lifts and projects") {
  // circle: H_1 = Z generated by the loop
  auto HB = homology_basis(circle(), 1);
  CHECK(HB.free_rank == 1);
  CHECK(HB.torsion.empty());
  REQUIRE(HB.reps.size() == 1);
  std::vector<Int> twice{2};
  auto co = HB.coords(twice);
  REQUIRE(co.size() == 1);
  CHECK(abs(co[0]) == 2);

  // rp2: H_1 = Z/2
  auto HT = homology_basis(rp2(), 1);
  CHECK(HT.free_rank == 0);
  REQUIRE(HT.torsion.size() == 1);
  CHECK(HT.torsion[0] == 2);
  auto c1 = HT.coords(HT.reps[0]);
  CHECK(c1[0] == 1);
  std::vector<Int> twol{2};  // 2 * loop is a boundary
  CHECK(HT.coords(twol)[0] == 0);
}

TEST_CASE("homology_basis over a field") {
  auto HB = homology_basis(rp2(Ring{2}), 1);
  CHECK(HB.free_rank == 1);
  CHECK(HB.torsion.empty());
  auto co = HB.coords(HB.reps[0]);
  CHECK(co[0] == 1);
}

TEST_CASE("snf reconstruction stress 200x200") {
  // sparse with mostly unit entries, the shape differentials actually have
  std::mt19937 rng(7);
  SparseMat A(200, 200);
  for (int k = 0; k < 800; ++k)
    A.set(static_cast<int>(rng() % 200), static_cast<int>(rng() % 200), rng() % 2 ? 1 : -1);
  for (int k = 0; k < 24; ++k)
    A.set(static_cast<int>(rng() % 200), static_cast<int>(rng() % 200),
          static_cast<int>(rng() % 3) + 2);
  auto s = smith(A, Ring{}, true);
  CHECK(s.L.mul(A).mul(s.R) == diag_mat(s, 200, 200));
  for (size_t i = 0; i + 1 < s.diag.size(); ++i) CHECK(s.diag[i + 1] % s.diag[i] == 0);
  auto s3 = smith(A, Ring{3}, true);
  CHECK(s3.L.mul(A, Ring{3}).mul(s3.R, Ring{3}) == diag_mat(s3, 200, 200));
}
