#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "ftc/errors.hpp"
#include "ftc/hopf.hpp"
#include "oracles.hpp"

using namespace ftc;

namespace {

std::set<Vec> as_set(const GrouplikeSet& g) { return {g.elements.begin(), g.elements.end()}; }

bool has_axiom(const HopfReport& r, const std::string& axiom) {
  for (const auto& v : r.violations)
    if (v.axiom == axiom) return true;
  return false;
}

}  // namespace

TEST_CASE("generated instances are Hopf algebras") {
  const Field q = Field::rationals();
  const Field f5 = Field::prime(5), f7 = Field::prime(7);
  for (const char* g : {"Z1", "Z2", "Z6", "S3", "D4", "Q8"}) {
    CAPTURE(g);
    CHECK(verify_hopf(gen_group_algebra(named_group(g), q)).valid());
    CHECK(verify_hopf(gen_dual_group_algebra(named_group(g), f7)).valid());
  }
  CHECK(verify_hopf(gen_sweedler(q)).valid());
  CHECK(verify_hopf(gen_sweedler(f5)).valid());
  CHECK(verify_hopf(gen_taft(2, q.from_int(-1), q)).valid());
  CHECK(verify_hopf(gen_taft(3, f7.from_int(2), f7)).valid());
  CHECK(verify_hopf(gen_taft(4, f5.from_int(2), f5)).valid());
  const Field q3 = oracle::cyclotomic_field(3);
  CHECK(verify_hopf(gen_taft(3, q3.generator(), q3)).valid());
}

TEST_CASE("broken instances are rejected") {
  const Field f7 = Field::prime(7);
  CHECK_THROWS_AS(gen_taft(3, f7.from_int(6), f7), std::invalid_argument);
  CHECK_THROWS_AS(gen_taft(3, f7.one(), f7), std::invalid_argument);
  CHECK_THROWS_AS(gen_sweedler(Field::prime(2)), std::invalid_argument);

  auto wrong_q = verify_hopf(gen_taft_unchecked(3, f7.from_int(6), f7));
  CHECK_FALSE(wrong_q.valid());
  auto trivial_q = verify_hopf(gen_taft_unchecked(3, f7.one(), f7));
  CHECK(has_axiom(trivial_q, "bialgebra"));

  HopfAlgebra sw = gen_sweedler(Field::prime(5));
  sw.antipode(3, 2) = Field::prime(5).one();
  auto bad_s = verify_hopf(sw);
  CHECK(has_axiom(bad_s, "antipode"));
  CHECK_FALSE(has_axiom(bad_s, "coassociativity"));

  HopfAlgebra sw2 = gen_sweedler(Field::prime(5));
  sw2.comult[2] = {{2, 0, Field::prime(5).one()}, {0, 2, Field::prime(5).one()}};
  CHECK_FALSE(verify_hopf(sw2).valid());

  HopfAlgebra sw3 = gen_sweedler(Field::prime(5));
  sw3.counit[1] = Field::prime(5).from_int(2);
  CHECK(has_axiom(verify_hopf(sw3), "counit"));
}

TEST_CASE("named groups") {
  CHECK(named_group("Z7").size() == 7);
  CHECK(named_group("S3").names[0] == "012");
  CHECK(oracle::group_center(named_group("S3")).size() == 1);
  CHECK(oracle::group_center(named_group("D4")) == std::set<std::size_t>{0, 2});
  CHECK(oracle::group_center(named_group("Q8")) == std::set<std::size_t>{0, 1});
  CHECK_THROWS_AS(named_group("A5"), std::invalid_argument);
  CHECK_THROWS_AS(named_group("Z0"), std::invalid_argument);
  CHECK_THROWS_AS(named_group("Zx"), std::invalid_argument);
  FiniteGroup g = named_group("Z3");
  g.table[1][1] = 1;
  CHECK_THROWS_AS(validate_group(g), std::invalid_argument);
}

TEST_CASE("grouplikes of group algebras are the group") {
  const Field f7 = Field::prime(7);
  for (const char* name : {"Z4", "S3", "D4", "Q8"}) {
    CAPTURE(name);
    FiniteGroup g = named_group(name);
    HopfAlgebra h = gen_group_algebra(g, f7);
    GrouplikeSet gl = grouplikes(h);
    REQUIRE(gl.size() == g.size());
    std::set<Vec> basis;
    for (std::size_t i = 0; i < g.size(); ++i) basis.insert(unit_vec(f7, g.size(), i));
    CHECK(as_set(gl) == basis);
    CHECK(gl.elements[0] == h.alg.unit());
    GrouplikeSet z = central_grouplikes(h, gl);
    std::set<Vec> zc;
    for (auto i : oracle::group_center(g)) zc.insert(unit_vec(f7, g.size(), i));
    CHECK(as_set(z) == zc);
    CHECK(as_set(GrouplikeSet{pivotal_grouplikes(h, gl, z), {}, 0, {}}) == zc);
  }
}

TEST_CASE("grouplikes agree with exhaustive search") {
  const Field f2 = Field::prime(2), f3 = Field::prime(3);
  const Field f4 = Field::extension(f2, {1, 1, 1});
  std::vector<std::pair<std::string, HopfAlgebra>> cases{
      {"F2 S3", gen_group_algebra(named_group("S3"), f2)},
      {"F3 dual S3", gen_dual_group_algebra(named_group("S3"), f3)},
      {"F4 dual Z3", gen_dual_group_algebra(named_group("Z3"), f4)},
      {"F3 dual Z4", gen_dual_group_algebra(named_group("Z4"), f3)},
      {"Sweedler F3", gen_sweedler(f3)},
      {"Taft 2 F3", gen_taft(2, f3.from_int(2), f3)},
      {"Taft 3 F4", gen_taft(3, f4.generator(), f4)},
  };
  for (const auto& [label, h] : cases) {
    CAPTURE(label);
    GrouplikeSet g = grouplikes(h, true);
    auto brute = oracle::brute_grouplikes(h);
    CHECK(as_set(g) == std::set<Vec>(brute.begin(), brute.end()));
    CHECK(grouplike_independence(h.field(), h.dim(), g.elements));
    CHECK(central_grouplikes(h, g).size() <= center(h.alg).dim());
  }
}

TEST_CASE("grouplikes of pointed examples") {
  const Field f5 = Field::prime(5), f7 = Field::prime(7);
  HopfAlgebra sw = gen_sweedler(f5);
  GrouplikeSet g = grouplikes(sw);
  CHECK(g.size() == 2);
  CHECK(g.elements[0] == unit_vec(f5, 4, 0));
  CHECK(g.index_of(unit_vec(f5, 4, 1)) == 1);
  GrouplikeSet z = central_grouplikes(sw, g);
  CHECK(z.size() == 1);
  auto piv = pivotal_grouplikes(sw, g, z);
  REQUIRE(piv.size() == 1);
  CHECK(piv[0] == unit_vec(f5, 4, 1));

  HopfAlgebra t = gen_taft(3, f7.from_int(2), f7);
  GrouplikeSet gt = grouplikes(t);
  CHECK(gt.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(gt.index_of(unit_vec(f7, 9, static_cast<std::size_t>(3 * i))) < 3);
  GrouplikeSet zt = central_grouplikes(t, gt);
  CHECK(zt.size() == 1);
  auto pt = pivotal_grouplikes(t, gt, zt);
  REQUIRE(pt.size() == 1);
  CHECK(pt[0] == unit_vec(f7, 9, 3));
  CHECK(gt.order(gt.index_of(pt[0])) == 3);
}

TEST_CASE("dual group algebras over non-splitting fields") {
  HopfAlgebra h = gen_dual_group_algebra(named_group("Z3"), Field::rationals());
  CHECK_THROWS_AS(grouplikes(h), SplittingError);
  GrouplikeSet partial = grouplikes(h, true);
  CHECK(partial.size() == 1);
  CHECK_FALSE(partial.obstructions.empty());
  const Field q3 = oracle::cyclotomic_field(3);
  CHECK(grouplikes(gen_dual_group_algebra(named_group("Z3"), q3)).size() == 3);
  CHECK(grouplikes(gen_dual_group_algebra(named_group("S3"), Field::rationals())).size() == 2);
  CHECK(grouplikes(gen_dual_group_algebra(named_group("Q8"), Field::rationals())).size() == 4);
}

TEST_CASE("antipode orders") {
  const Field f7 = Field::prime(7), f5 = Field::prime(5);
  auto order = [](const Matrix& s) {
    Matrix p = s;
    for (int k = 1; k <= 64; ++k, p = p * s)
      if (p.is_identity()) return k;
    return 0;
  };
  CHECK(order(gen_group_algebra(named_group("S3"), f7).antipode) == 2);
  CHECK(order(gen_group_algebra(named_group("Z2"), f7).antipode) == 1);
  CHECK(order(gen_sweedler(f5).antipode) == 4);
  CHECK(order(gen_taft(3, f7.from_int(2), f7).antipode) == 6);
  CHECK(order(gen_taft(4, f5.from_int(2), f5).antipode) == 8);
}

TEST_CASE("Sweedler's algebra is the Taft algebra at n = 2") {
  const Field f5 = Field::prime(5);
  HopfAlgebra a = gen_sweedler(f5), b = gen_taft(2, f5.from_int(-1), f5);
  CHECK(a.dim() == b.dim());
  CHECK(center(a.alg).dim() == center(b.alg).dim());
  CHECK(radical(a.alg).dim() == radical(b.alg).dim());
  CHECK(grouplikes(a).size() == grouplikes(b).size());
  CHECK(center(dual_algebra(a)).dim() == center(dual_algebra(b)).dim());
  CHECK(grouplikes(a).order(1) == grouplikes(b).order(1));
}

TEST_CASE("dual algebras") {
  const Field f7 = Field::prime(7);
  for (const char* name : {"S3", "Z4", "D4"}) {
    CAPTURE(name);
    FiniteGroup g = named_group(name);
    Algebra d = dual_algebra(gen_group_algebra(g, f7));
    CHECK(verify_algebra(d).valid());
    CHECK(d.is_commutative());
    CHECK(radical(d).dim() == 0);
    Algebra dd = dual_algebra(gen_dual_group_algebra(g, f7));
    CHECK(dd.is_commutative() == (oracle::group_center(g).size() == g.size()));
    CHECK(center(dd).dim() == center(gen_group_algebra(g, f7).alg).dim());
  }
  Algebra ds = dual_algebra(gen_sweedler(Field::prime(5)));
  CHECK(verify_algebra(ds).valid());
  CHECK(center(ds).dim() == 1);
  CHECK(center(gen_sweedler(Field::prime(5)).alg).dim() == 1);
  CHECK(radical(ds).dim() == 2);
}

TEST_CASE("independence and p-parts") {
  const Field f3 = Field::prime(3);
  HopfAlgebra h = gen_group_algebra(named_group("Z6"), f3);
  GrouplikeSet g = grouplikes(h);
  CHECK(grouplike_independence(f3, 6, g.elements));
  auto dup = g.elements;
  dup.push_back(g.elements[1]);
  CHECK_FALSE(grouplike_independence(f3, 6, dup));

  GrouplikeDecomposition d = decompose_p_parts(g, 3);
  CHECK(d.p_part.size() == 3);
  CHECK(d.p_prime_part.size() == 2);
  GrouplikeDecomposition d0 = decompose_p_parts(grouplikes(gen_group_algebra(named_group("Z6"), Field::rationals())), 0);
  CHECK(d0.p_part == std::vector<std::size_t>{0});
  CHECK(d0.p_prime_part.size() == 6);
  GrouplikeDecomposition d3 = decompose_p_parts(grouplikes(gen_group_algebra(named_group("Z3"), f3)), 3);
  CHECK(d3.p_part.size() == 3);
  CHECK(d3.p_prime_part == std::vector<std::size_t>{0});
  GrouplikeDecomposition d2 = decompose_p_parts(grouplikes(gen_group_algebra(named_group("Q8"), Field::prime(2))), 2);
  CHECK(d2.p_part.size() == 8);
  CHECK(d2.p_prime_part.size() == 1);
}

TEST_CASE("backtracking grouplike oracle agrees with exhaustive search") {
  const Field f3 = Field::prime(3), f5 = Field::prime(5), f7 = Field::prime(7);
  for (const HopfAlgebra& h : {gen_group_algebra(named_group("Z3"), f7), gen_dual_group_algebra(named_group("Z4"), f3),
                               gen_sweedler(f5), gen_taft(2, f5.from_int(4), f5),
                               gen_dual_group_algebra(named_group("S3"), f3)}) {
    CHECK(oracle::solve_grouplikes(h) == oracle::brute_grouplikes(h));
  }
}
