#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "ftc/algebra.hpp"
#include "ftc/errors.hpp"
#include "ftc/hopf.hpp"
#include "oracles.hpp"

using namespace ftc;

namespace {

Algebra group_algebra(const std::string& group, const Field& f) { return gen_group_algebra(named_group(group), f).alg; }

/// Upper triangular 2x2 matrices on e11, e12, e22.
Algebra upper_triangular(const Field& f) {
  const std::size_t d = 3;
  std::vector<Vec> p(d * d, zero_vec(f, d));
  p[0 * d + 0] = unit_vec(f, d, 0);  // e11 e11
  p[0 * d + 1] = unit_vec(f, d, 1);  // e11 e12
  p[1 * d + 2] = unit_vec(f, d, 1);  // e12 e22
  p[2 * d + 2] = unit_vec(f, d, 2);  // e22 e22
  Vec one = unit_vec(f, d, 0);
  one[2] = f.one();
  return Algebra(f, {"e11", "e12", "e22"}, p, one);
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("algebra axioms") {
  const Field q = Field::rationals();
  CHECK(verify_algebra(group_algebra("S3", q)).valid());
  CHECK(verify_algebra(upper_triangular(Field::prime(5))).valid());
  CHECK(verify_algebra(gen_sweedler(q).alg).valid());

  Algebra s3 = group_algebra("S3", q);
  std::vector<Vec> p = oracle::structure_constants(s3);
  p[1 * 6 + 2] = add(p[1 * 6 + 2], unit_vec(q, 6, 0));
  auto bad = verify_algebra(Algebra(q, s3.basis_names(), p, s3.unit()));
  REQUIRE_FALSE(bad.valid());
  bool saw_assoc = false, saw_unit = false;
  for (const auto& v : bad.violations) {
    saw_assoc |= v.axiom == "associativity";
    saw_unit |= v.axiom == "unit";
  }
  CHECK(saw_assoc);
  CHECK_FALSE(saw_unit);

  auto wrong_unit = verify_algebra(Algebra(q, s3.basis_names(), oracle::structure_constants(s3), unit_vec(q, 6, 1)));
  REQUIRE_FALSE(wrong_unit.valid());
  CHECK(wrong_unit.violations.front().axiom == "unit");
}

TEST_CASE("centers") {
  CHECK(center(group_algebra("S3", Field::rationals())).dim() == 3);
  CHECK(center(group_algebra("D4", Field::rationals())).dim() == 5);
  CHECK(center(group_algebra("Q8", Field::rationals())).dim() == 5);
  CHECK(center(group_algebra("Z5", Field::rationals())).dim() == 5);

  for (auto [name, p] : std::vector<std::pair<std::string, long>>{{"S3", 2}, {"S3", 3}, {"Z3", 5}}) {
    Algebra a = group_algebra(name, Field::prime(p));
    CHECK(ipow(static_cast<std::size_t>(p), center(a).dim()) == oracle::brute_center_size(a));
  }
  Algebra sw = gen_sweedler(Field::prime(3)).alg;
  CHECK(ipow(3, center(sw).dim()) == oracle::brute_center_size(sw));
  Algebra ut = upper_triangular(Field::prime(3));
  CHECK(center(ut).dim() == 1);
  CHECK(oracle::brute_center_size(ut) == 3);
}

TEST_CASE("radicals agree with exhaustive search") {
  struct Case {
    std::string label;
    Algebra alg;
    std::size_t dim;
  };
  std::vector<Case> cases{
      {"F3[Z3]", group_algebra("Z3", Field::prime(3)), 2},
      {"F2[Z2]", group_algebra("Z2", Field::prime(2)), 1},
      {"F5[Z3]", group_algebra("Z3", Field::prime(5)), 0},
      {"F3[S3]", group_algebra("S3", Field::prime(3)), 4},
      {"Sweedler F3", gen_sweedler(Field::prime(3)).alg, 2},
      {"upper triangular F3", upper_triangular(Field::prime(3)), 1},
  };
  for (const auto& c : cases) {
    CAPTURE(c.label);
    Subspace j = radical(c.alg);
    CHECK(j.dim() == c.dim);
    auto brute = oracle::brute_radical(c.alg);
    CHECK(brute.size() == ipow(static_cast<std::size_t>(c.alg.field().characteristic()), j.dim()));
    for (const auto& x : brute) CHECK(j.contains(x));
    CHECK(is_two_sided_ideal(c.alg, j));
  }
}

TEST_CASE("radicals in characteristic zero and over extensions") {
  CHECK(radical(group_algebra("S3", Field::rationals())).dim() == 0);
  CHECK(radical(group_algebra("S3", Field::prime(7))).dim() == 0);
  CHECK(radical(gen_sweedler(Field::rationals()).alg).dim() == 2);
  CHECK(radical(upper_triangular(Field::rationals())).dim() == 1);

  const Field f4 = Field::extension(Field::prime(2), {1, 1, 1});
  Algebra z2 = group_algebra("Z2", f4);
  Subspace j = radical(z2);
  CHECK(j.dim() == 1);
  CHECK(j.contains(Vec{f4.one(), f4.one()}));
  CHECK(radical(group_algebra("Z3", f4)).dim() == 0);

  Subspace j3 = radical(group_algebra("Z3", Field::prime(3)));
  CHECK(nilpotency_index(group_algebra("Z3", Field::prime(3)), j3) == std::optional<std::size_t>(3));
}

TEST_CASE("uncertified radical is reported rather than guessed") {
  CHECK_THROWS_AS(radical(group_algebra("S3", Field::prime(2))), RadicalUncertified);
}

TEST_CASE("quotients") {
  Algebra a = group_algebra("Z3", Field::prime(3));
  QuotientAlgebra q = quotient(a, radical(a));
  CHECK(q.algebra.dim() == 1);
  CHECK(verify_algebra(q.algebra).valid());
  CHECK(q.projection * a.unit() == q.algebra.unit());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k)
      CHECK(q.projection * a.product(i, k) ==
            q.algebra.mul(q.projection * a.basis_vector(i), q.projection * a.basis_vector(k)));

  Algebra s3 = group_algebra("S3", Field::rationals());
  Subspace not_ideal = Subspace::span(s3.field(), 6, {s3.basis_vector(1)});
  CHECK_FALSE(is_two_sided_ideal(s3, not_ideal));
  CHECK_THROWS_AS(quotient(s3, not_ideal), std::invalid_argument);

  Subspace comm = commutator_ideal(s3);
  CHECK(comm.dim() == 4);
  QuotientAlgebra ab = quotient(s3, comm);
  CHECK(ab.algebra.dim() == 2);
  CHECK(ab.algebra.is_commutative());
}

TEST_CASE("subalgebras") {
  Algebra s3 = group_algebra("S3", Field::rationals());
  Algebra z = subalgebra(s3, center(s3));
  CHECK(z.dim() == 3);
  CHECK(z.is_commutative());
  CHECK(verify_algebra(z).valid());
  CHECK_THROWS_AS(subalgebra(s3, Subspace::span(s3.field(), 6, {s3.basis_vector(1)})), std::invalid_argument);
}

TEST_CASE("characters of commutative algebras") {
  CHECK(characters_commutative(group_algebra("Z2", Field::rationals())).characters.size() == 2);

  auto z3 = characters_commutative(group_algebra("Z3", Field::rationals()));
  CHECK(z3.characters.size() == 1);
  REQUIRE(z3.obstructions.size() == 1);
  CHECK(z3.obstructions[0] == "x^2+x+1");
  CHECK_THROWS_AS(z3.require_complete("test"), SplittingError);

  auto split = characters_commutative(group_algebra("Z3", oracle::cyclotomic_field(3)));
  CHECK(split.characters.size() == 3);
  CHECK(split.complete());

  for (auto [name, p] : std::vector<std::pair<std::string, long>>{{"Z3", 7}, {"Z4", 5}, {"Z4", 3}, {"Z3", 3}, {"Z6", 3}}) {
    CAPTURE(name);
    CAPTURE(p);
    Algebra a = group_algebra(name, Field::prime(p));
    auto got = characters_commutative(a);
    std::set<Vec> mine(got.characters.begin(), got.characters.end());
    CHECK(mine == oracle::brute_characters(a));
  }
  CHECK_THROWS_AS(characters_commutative(group_algebra("S3", Field::rationals())), std::invalid_argument);
}

TEST_CASE("idempotent lifting") {
  Algebra a = group_algebra("Z3", Field::prime(3));
  Subspace j = radical(a);
  CHECK(lift_idempotent(a, a.basis_vector(1), j) == a.unit());
  Vec not_idem = scale(Field::prime(3).from_int(2), a.unit());
  CHECK_THROWS_AS(lift_idempotent(a, not_idem, j), std::invalid_argument);

  Algebra ut = upper_triangular(Field::prime(5));
  Subspace ju = radical(ut);
  Vec e = ut.basis_vector(0);
  e[1] = Field::prime(5).from_int(3);  // e11 + 3 e12 is already idempotent
  Vec lifted = lift_idempotent(ut, e, ju);
  CHECK(ut.mul(lifted, lifted) == lifted);
}

TEST_CASE("primitive idempotents of group algebra centers") {
  struct Case {
    std::string group;
    long p;
    std::size_t blocks;
  };
  // Block counts: F_7 S3 semisimple with 3 simples; S3 in char 3 has one block;
  // in char 2 the 2-dimensional simple is projective; Z3 over F_2 has a
  // one-dimensional and a two-dimensional block.
  for (const auto& c : std::vector<Case>{{"S3", 7, 3}, {"S3", 3, 1}, {"S3", 2, 2}, {"Z3", 2, 2}, {"Z6", 3, 2}, {"D4", 2, 1}}) {
    CAPTURE(c.group);
    CAPTURE(c.p);
    Algebra a = group_algebra(c.group, Field::prime(c.p));
    Algebra z = subalgebra(a, center(a));
    auto idems = primitive_idempotents(z);
    CHECK(idems.size() == c.blocks);
    for (const auto& e : idems) {
      CHECK(z.mul(e, e) == e);
      CHECK_FALSE(is_zero_vec(e));
    }
  }
  Algebra zq = group_algebra("Z2", Field::rationals());
  CHECK_THROWS_AS(primitive_idempotents(zq), UnsupportedField);
}
