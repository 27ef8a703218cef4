#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <algorithm>

#include "ftc/errors.hpp"
#include "ftc/rep.hpp"
#include "oracles.hpp"

using namespace ftc;

namespace {

HopfAlgebra group_hopf(const std::string& g, long p) { return gen_group_algebra(named_group(g), Field::prime(p)); }

std::vector<std::size_t> factor_dims(const CompositionSeries& cs) {
  std::vector<std::size_t> out;
  for (const auto& f : cs.factors)
    for (std::size_t k = 0; k < f.multiplicity; ++k) out.push_back(f.module.dim);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> catalog_dims(const SimpleCatalog& s) {
  std::vector<std::size_t> out;
  for (const auto& m : s.modules) out.push_back(m.dim);
  return out;
}

}  // namespace

TEST_CASE("regular modules satisfy the module axioms") {
  for (const char* g : {"Z1", "S3", "Q8"}) {
    Algebra a = group_hopf(g, 7).alg;
    RepModule m = regular_module(a);
    CHECK(m.dim == a.dim());
    CHECK(verify_module(a, m).empty());
  }
  CHECK(verify_module(gen_sweedler(Field::prime(5)).alg, regular_module(gen_sweedler(Field::prime(5)).alg)).empty());

  Algebra a = group_hopf("S3", 7).alg;
  RepModule bad = regular_module(a);
  bad.action[1] = bad.action[2];
  CHECK_FALSE(verify_module(a, bad).empty());
}

TEST_CASE("composition factors") {
  CHECK(factor_dims(chop(regular_module(group_hopf("S3", 7).alg))) == std::vector<std::size_t>{1, 1, 2, 2});
  auto z3 = chop(regular_module(group_hopf("Z3", 3).alg));
  REQUIRE(z3.factors.size() == 1);
  CHECK(z3.factors[0].multiplicity == 3);
  CHECK(z3.factors[0].module.dim == 1);
  CHECK(z3.factors[0].module.action[1](0, 0).is_one());

  HopfAlgebra sw = gen_sweedler(Field::prime(5));
  RepModule triv = trivial_module(sw.alg, sw.counit);
  auto self = chop(triv);
  REQUIRE(self.factors.size() == 1);
  CHECK(self.factors[0].multiplicity == 1);
  CHECK(iso_test(self.factors[0].module, triv));

  CHECK(factor_dims(chop(regular_module(sw.alg))) == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(factor_dims(chop(regular_module(group_hopf("Z3", 2).alg))) == std::vector<std::size_t>{1, 2});
  CHECK_THROWS_AS(chop(regular_module(gen_group_algebra(named_group("Z2"), Field::rationals()).alg)), UnsupportedField);
}

TEST_CASE("chop is deterministic in the seed and its factors are irreducible") {
  RepModule m = regular_module(group_hopf("D4", 5).alg);
  auto a = chop(m, 11), b = chop(m, 11);
  REQUIRE(a.factors.size() == b.factors.size());
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    CHECK(a.factors[i].module.action == b.factors[i].module.action);
    CHECK_FALSE(find_submodule(a.factors[i].module, 99).has_value());
  }
  auto c = chop(m, 12345);
  CHECK(factor_dims(a) == factor_dims(c));
}

TEST_CASE("isomorphism tests") {
  HopfAlgebra h = group_hopf("S3", 7);
  SimpleCatalog s = simples(h.alg, kDefaultSeed, h.counit);
  REQUIRE(s.size() == 3);
  CHECK(iso_test(s.modules[2], s.modules[2]));
  CHECK_FALSE(iso_test(s.modules[0], s.modules[1]));
  CHECK_FALSE(iso_test(s.modules[1], s.modules[2]));
  CHECK(intertwiners(s.modules[0], s.modules[1]).empty());
  // A change of basis gives an isomorphic module.
  Matrix p = Matrix::from_ints(Field::prime(7), {{1, 2}, {3, 5}});
  Matrix pinv = *inverse(p);
  RepModule moved = s.modules[2];
  for (auto& x : moved.action) x = p * x * pinv;
  CHECK(iso_test(s.modules[2], moved));
}

TEST_CASE("simple modules") {
  HopfAlgebra s3 = group_hopf("S3", 7);
  SimpleCatalog cat = simples(s3.alg, kDefaultSeed, s3.counit);
  CHECK(catalog_dims(cat) == std::vector<std::size_t>{1, 1, 2});
  CHECK(cat.names == std::vector<std::string>{"S0", "S1", "S2"});
  CHECK(iso_test(cat.modules[0], trivial_module(s3.alg, s3.counit)));

  CHECK(simples(group_hopf("Z3", 3).alg).size() == 1);
  CHECK_THROWS_AS(simples(group_hopf("Z3", 2).alg), SplittingError);
  try {
    simples(group_hopf("Z3", 2).alg);
  } catch (const SplittingError& e) {
    CHECK(std::string(e.what()).find("F_4") != std::string::npos);
  }
  const Field f4 = Field::extension(Field::prime(2), {1, 1, 1});
  CHECK(simples(gen_group_algebra(named_group("Z3"), f4).alg).size() == 3);
}

TEST_CASE("simple counts match p-regular classes") {
  struct Case {
    std::string group;
    long p;
  };
  for (const auto& c : std::vector<Case>{{"S3", 7}, {"S3", 2}, {"S3", 3}, {"D4", 3}, {"D4", 2}, {"Q8", 3}, {"Q8", 5}, {"Z6", 7}, {"Z6", 3}}) {
    CAPTURE(c.group);
    CAPTURE(c.p);
    FiniteGroup g = named_group(c.group);
    SimpleCatalog s = simples(gen_group_algebra(g, Field::prime(c.p)).alg);
    CHECK(s.size() == oracle::p_regular_classes(g, c.p));
    std::size_t sq = 0;
    for (const auto& m : s.modules) sq += m.dim * m.dim;
    if (g.size() % static_cast<std::size_t>(c.p) != 0) CHECK(sq == g.size());
  }
}

TEST_CASE("blocks by two methods") {
  struct Case {
    std::string group;
    long p;
    std::size_t count;
  };
  for (const auto& c : std::vector<Case>{{"S3", 7, 3}, {"Z3", 3, 1}, {"S3", 3, 1}, {"S3", 2, 2}, {"D4", 3, 5}, {"Z6", 3, 2}, {"Q8", 2, 1}}) {
    CAPTURE(c.group);
    CAPTURE(c.p);
    Algebra a = group_hopf(c.group, c.p).alg;
    SimpleCatalog s = simples(a);
    BlockPartition idem = idempotent_blocks(a, s);
    BlockPartition ext = ext_linkage_blocks(a, s);
    CHECK(idem == ext);
    CHECK(idem.classes.size() == c.count);
    CHECK(blocks(a, s) == idem);
  }
  HopfAlgebra sw = gen_sweedler(Field::prime(5));
  SimpleCatalog ss = simples(sw.alg, kDefaultSeed, sw.counit);
  CHECK(ss.size() == 2);
  CHECK(blocks(sw.alg, ss).classes.size() == 1);
  HopfAlgebra t = gen_taft(3, Field::prime(7).from_int(2), Field::prime(7));
  SimpleCatalog ts = simples(t.alg, kDefaultSeed, t.counit);
  CHECK(ts.size() == 3);
  CHECK(blocks(t.alg, ts).classes.size() == 1);
}

TEST_CASE("Ext^1 dimensions") {
  Algebra a = group_hopf("Z3", 3).alg;
  SimpleCatalog s = simples(a);
  CHECK(ext1_dim(a, s.modules[0], s.modules[0]) == 1);
  Algebra b = group_hopf("S3", 7).alg;
  SimpleCatalog t = simples(b);
  for (const auto& x : t.modules)
    for (const auto& y : t.modules) CHECK(ext1_dim(b, x, y) == 0);
  HopfAlgebra sw = gen_sweedler(Field::prime(5));
  SimpleCatalog u = simples(sw.alg, kDefaultSeed, sw.counit);
  CHECK(ext1_dim(sw.alg, u.modules[0], u.modules[0]) == 0);
  CHECK(ext1_dim(sw.alg, u.modules[0], u.modules[1]) == 1);
  CHECK(ext1_dim(sw.alg, u.modules[1], u.modules[0]) == 1);
}

TEST_CASE("tensor products") {
  HopfAlgebra h = group_hopf("S3", 7);
  SimpleCatalog s = simples(h.alg, kDefaultSeed, h.counit);
  for (const auto& m : s.modules) {
    CHECK(iso_test(tensor_module(h, m, s.modules[0]), m));
    CHECK(iso_test(tensor_module(h, s.modules[0], m), m));
  }
  CHECK(iso_test(tensor_module(h, s.modules[0], s.modules[0]), s.modules[0]));
  RepModule vv = tensor_module(h, s.modules[2], s.modules[2]);
  CHECK(vv.dim == 4);
  CHECK(verify_module(h.alg, vv).empty());
  auto cs = chop(vv);
  REQUIRE(cs.factors.size() == 3);
  for (const auto& f : cs.factors) {
    CHECK(f.multiplicity == 1);
    CHECK(s.find(f.module) < 3);
  }
  CHECK(iso_test(dual_module(h, s.modules[2]), s.modules[2]));
}

TEST_CASE("fusion rings of Hopf algebras") {
  HopfFusion s3 = fusion_from_hopf(group_hopf("S3", 7));
  FusionRing want = oracle::rep_s3_from_characters();
  REQUIRE(s3.ring.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) CHECK(s3.ring.n(i, j, k) == want.n(i, j, k));
  CHECK(s3.blocks == BlockPartition::singletons(s3.ring));

  HopfFusion z3 = fusion_from_hopf(group_hopf("Z3", 7));
  REQUIRE(z3.ring.size() == 3);
  // Identify each simple with the cube root of unity by which g acts.
  std::vector<Scalar> chi;
  for (const auto& m : z3.simples.modules) chi.push_back(m.action[1](0, 0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) CHECK(z3.ring.n(i, j, k) == (chi[i] * chi[j] == chi[k] ? 1 : 0));

  HopfFusion p3 = fusion_from_hopf(group_hopf("Z3", 3));
  REQUIRE(p3.ring.size() == 1);
  CHECK(p3.ring.n(0, 0, 0) == 1);

  HopfFusion t = fusion_from_hopf(gen_taft(3, Field::prime(7).from_int(2), Field::prime(7)));
  CHECK(t.ring.size() == 3);
  CHECK(validate_fusion(t.ring).valid());
  CHECK(t.blocks.classes.size() == 1);
}

TEST_CASE("scalar action") {
  HopfAlgebra h = group_hopf("Z3", 7);
  SimpleCatalog s = simples(h.alg, kDefaultSeed, h.counit);
  for (const auto& m : s.modules) {
    CHECK(scalar_action(h.alg.unit(), m).is_one());
    Scalar l = scalar_action(h.alg.basis_vector(1), m);
    CHECK(l.pow(3).is_one());
  }
  std::set<Scalar> values;
  for (const auto& m : s.modules) values.insert(scalar_action(h.alg.basis_vector(1), m));
  Field f7 = Field::prime(7);
  CHECK(values == std::set<Scalar>{f7.one(), f7.from_int(2), f7.from_int(4)});

  HopfAlgebra s3 = group_hopf("S3", 7);
  SimpleCatalog t = simples(s3.alg, kDefaultSeed, s3.counit);
  CHECK_THROWS_AS(scalar_action(s3.alg.basis_vector(1), t.modules[2]), NonScalarAction);
}
