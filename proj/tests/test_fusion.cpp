#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <random>

#include "ftc/fusion.hpp"
#include "oracles.hpp"

using namespace ftc;

namespace {

FusionRing rep_s3_by_hand() {
  FusionRing f;
  f.labels = {"1", "s", "V"};
  f.unit = "1";
  auto one = [&](const char* a, const char* b, const char* c) { f.set(f.index_of(a), f.index_of(b), f.index_of(c), 1); };
  for (const char* x : {"1", "s", "V"}) {
    one("1", x, x);
    if (std::string(x) != "1") one(x, "1", x);
  }
  one("s", "s", "1");
  one("s", "V", "V");
  one("V", "s", "V");
  one("V", "V", "1");
  one("V", "V", "s");
  one("V", "V", "V");
  return f;
}

std::set<std::vector<Scalar>> evaluated(const LambdaGroup& g) {
  std::set<std::vector<Scalar>> out;
  for (const auto& ch : g.functions) out.insert(*ch.values);
  return out;
}

}  // namespace

TEST_CASE("validation of small fusion rings") {
  CHECK(validate_fusion(oracle::cyclic_fusion(3)).valid());
  FusionRing s3 = rep_s3_by_hand();
  CHECK(validate_fusion(s3).valid());
  // The hand table agrees with the complex character table.
  CHECK(s3.mult == oracle::rep_s3_from_characters().mult);

  FusionRing bad = s3;
  bad.set(2, 2, 0, 0);
  auto rep = validate_fusion(bad);
  CHECK_FALSE(rep.valid());
  bool saw_quadruple = false;
  for (const auto& v : rep.violations) {
    CHECK(v.axiom == "associativity");
    if (v.labels == std::vector<std::string>{"s", "V", "V", "1"}) saw_quadruple = true;
  }
  CHECK(saw_quadruple);
}

TEST_CASE("unit and duality violations are itemized") {
  FusionRing f = oracle::cyclic_fusion(2);
  f.set(0, 1, 1, 2);
  auto r = validate_fusion(f);
  CHECK_FALSE(r.valid());
  CHECK(r.violations[0].axiom == "unit");

  FusionRing g = oracle::cyclic_fusion(3);
  g.dual = std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 2}};
  CHECK(validate_fusion(g).valid());
  g.dual = std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}, {2, 2}};
  CHECK_FALSE(validate_fusion(g).valid());
}

TEST_CASE("relation matrices") {
  FusionRing z3 = oracle::cyclic_fusion(3);
  auto m = lambda_relation_matrix(z3, BlockPartition::singletons(z3));
  CHECK(m.rows() == 4);  // e0, 2e1 - e2, e1 + e2 - e0, 2e2 - e1 after deduplication
  auto inv = abelian_invariants({3, m});
  CHECK(inv.free_rank == 0);
  CHECK(inv.torsion == std::vector<mpz_class>{3});

  FusionRing s3 = rep_s3_by_hand();
  auto ms = lambda_relation_matrix(s3, BlockPartition::singletons(s3));
  CHECK(abelian_invariants({3, ms}).torsion.empty());
  CHECK(abelian_invariants({3, ms}).free_rank == 0);

  BlockPartition all{{{"g0", "g1", "g2"}}};
  auto ma = lambda_relation_matrix(z3, all);
  CHECK(ma.rows() == 4 + 3);
  auto ia = abelian_invariants({3, ma});
  CHECK(ia.free_rank == 0);
  CHECK(ia.torsion.size() <= 1);

  BlockPartition broken{{{"g0", "g1"}}};
  CHECK_THROWS_AS(lambda_relation_matrix(z3, broken), std::invalid_argument);
}

TEST_CASE("lambda groups of cyclic group rings match brute force") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    Field k = oracle::cyclotomic_field(n);
    FusionRing f = oracle::cyclic_fusion(n);
    auto b = BlockPartition::singletons(f);
    auto g = lambda_group(f, b, 0, k);
    CHECK(g.functions.size() == static_cast<std::size_t>(n));
    CHECK(g.characters.torsion.size() == 1);
    CHECK(g.characters.torsion[0] == n);
    Scalar zeta = primitive_root_of_unity(k, n);
    CHECK(evaluated(g) == oracle::brute_force_lambdas(f, b, zeta, n));
  }
}

TEST_CASE("lambda group in positive characteristic") {
  FusionRing f = oracle::cyclic_fusion(6);
  auto b = BlockPartition::singletons(f);
  // In characteristic 3 only the square roots of unity survive; F_3^x = {1, 2} holds all of them.
  auto g3 = lambda_group(f, b, 3, Field::prime(3));
  CHECK(g3.functions.size() == 2);
  CHECK(evaluated(g3) == oracle::brute_force_lambdas(f, b, Field::prime(3).from_int(2), 2));
}

TEST_CASE("Rep(S3) has only the trivial lambda") {
  FusionRing s3 = rep_s3_by_hand();
  auto b = BlockPartition::singletons(s3);
  Field k = Field::prime(7);
  auto g = lambda_group(s3, b, 7, k);
  REQUIRE(g.functions.size() == 1);
  CHECK(g.functions[0].exponents == std::vector<mpz_class>{0, 0, 0});
  // Brute force over sixth roots of unity in F_7 (3 is a generator).
  CHECK(oracle::brute_force_lambdas(s3, b, k.from_int(3), 6).size() == 1);

  std::vector<Scalar> ones(3, k.one());
  CHECK(check_lambda(s3, b, ones));
  std::vector<Scalar> sign{k.one(), -k.one(), k.one()};
  CHECK_FALSE(check_lambda(s3, b, sign));
}

TEST_CASE("check_lambda on Z/3") {
  Field k = oracle::cyclotomic_field(3);
  FusionRing z3 = oracle::cyclic_fusion(3);
  auto b = BlockPartition::singletons(z3);
  Scalar zeta = k.generator();
  CHECK(check_lambda(z3, b, std::vector<Scalar>{k.one(), zeta, zeta * zeta}));
  CHECK_FALSE(check_lambda(z3, b, std::vector<Scalar>{k.one(), zeta, zeta}));
  CHECK(check_lambda(z3, b, std::vector<Scalar>(3, k.one())));
}

TEST_CASE("lambda functions pass, random assignments fail") {
  Field k = Field::prime(13);
  std::mt19937_64 rng(4);
  for (int n : {3, 4, 6}) {
    FusionRing f = oracle::cyclic_fusion(n);
    auto b = BlockPartition::singletons(f);
    auto g = lambda_group(f, b, 13, k);
    std::set<std::vector<Scalar>> members = evaluated(g);
    for (const auto& v : members) CHECK(check_lambda(f, b, v));
    for (int t = 0; t < 200; ++t) {
      std::vector<Scalar> v;
      for (int i = 0; i < n; ++i) v.push_back(k.from_int(static_cast<long long>(1 + rng() % 12)));
      CHECK(check_lambda(f, b, v) == (members.count(v) == 1));
    }
  }
}

TEST_CASE("coarser blocks give subgroups") {
  FusionRing f = oracle::cyclic_fusion(6);
  Field k = Field::prime(7);
  auto fine = lambda_group(f, BlockPartition::singletons(f), 7, k);
  BlockPartition coarse{{{"g0", "g3"}, {"g1", "g4"}, {"g2", "g5"}}};
  auto sub = lambda_group(f, coarse, 7, k);
  CHECK(sub.functions.size() == 3);
  auto all = evaluated(fine);
  for (const auto& v : evaluated(sub)) CHECK(all.count(v) == 1);
}

TEST_CASE("imposing lambda(1) = 1 changes nothing") {
  for (FusionRing f : {oracle::cyclic_fusion(4), rep_s3_by_hand()}) {
    auto b = BlockPartition::singletons(f);
    auto m = lambda_relation_matrix(f, b);
    AbelianGroupPresentation p{f.size(), m};
    std::vector<mpz_class> unit_row(f.size(), 0);
    unit_row[f.unit_index()] = 1;
    AbelianGroupPresentation q = p;
    q.relations.append_row(unit_row);
    auto a = abelian_invariants(p), c = abelian_invariants(q);
    CHECK(a.free_rank == c.free_rank);
    CHECK(a.torsion == c.torsion);
    CHECK(enumerate_characters(p, 0) == enumerate_characters(q, 0));
  }
}

TEST_CASE("free rank is diagnosed as not categorifiable") {
  FusionRing f;
  f.labels = {"1", "x"};
  f.unit = "1";
  f.set(0, 0, 0, 1);
  f.set(0, 1, 1, 1);
  f.set(1, 0, 1, 1);
  f.set(1, 1, 1, 1);
  f.set(1, 1, 0, 1);
  // x^2 = 1 + x imposes lambda(x)^2 = 1 and lambda(x)^2 = lambda(x): trivial, finite.
  CHECK(lambda_group(f, BlockPartition::singletons(f), 0).functions.size() == 1);

  // x (x) x = 0 is associative and unital but imposes nothing on lambda(x).
  FusionRing g;
  g.labels = {"1", "x"};
  g.unit = "1";
  g.set(0, 0, 0, 1);
  g.set(0, 1, 1, 1);
  g.set(1, 0, 1, 1);
  CHECK(validate_fusion(g).valid());
  CHECK_THROWS_AS(lambda_group(g, BlockPartition::singletons(g), 0), InfiniteGroupError);
}
