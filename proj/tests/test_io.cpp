#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "ftc/io.hpp"
#include "oracles.hpp"

using namespace ftc;

TEST_CASE("field specs") {
  CHECK(parse_field("Q") == Field::rationals());
  CHECK(parse_field("Fp:7") == Field::prime(7));
  Field q3 = parse_field("ext:Q:x^2+x+1");
  CHECK(q3.degree() == 2);
  CHECK(q3.spec_string() == "ext:Q:x^2+x+1");
  Field f4 = parse_field("ext:Fp:2:x^2+x+1");
  CHECK(f4.order() == 4);
  for (const Field& f : {Field::rationals(), Field::prime(5), q3, f4}) {
    CHECK(parse_field(f.spec_string()) == f);
    CHECK(field_from_json(field_to_json(f)) == f);
    CHECK(field_from_json(Json(f.spec_string())) == f);
  }
  for (const char* bad : {"", "R", "Fp:", "Fp:8", "Fp:x", "ext:Q:x^2-1", "ext:Fp:3", "ext:R:x^2+1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_field(bad), SchemaError);
  }
}

TEST_CASE("scalars") {
  Field q = Field::rationals(), f7 = Field::prime(7), q3 = parse_field("ext:Q:x^2+x+1");
  CHECK(scalar_to_json(q.from_rational(mpq_class(-3, 4))) == "-3/4");
  CHECK(scalar_from_json(q, "6/8") == q.from_rational(mpq_class(3, 4)));
  CHECK(scalar_from_json(f7, 10) == f7.from_int(3));
  CHECK(scalar_from_json(f7, "1/2") == f7.from_int(4));
  CHECK(scalar_to_json(f7.from_int(-1)) == 6);
  Scalar z = q3.generator();
  CHECK(scalar_from_json(q3, scalar_to_json(z)) == z);
  CHECK(scalar_from_json(q3, "1/3") == q3.from_rational(mpq_class(1, 3)));
  CHECK_THROWS_AS(scalar_from_json(q, "1/0"), SchemaError);
  CHECK_THROWS_AS(scalar_from_json(q, "abc"), SchemaError);
  CHECK_THROWS_AS(scalar_from_json(f7, "1/7"), SchemaError);
  CHECK_THROWS_AS(scalar_from_json(q, Json::array({1, 2})), SchemaError);
  CHECK_THROWS_AS(scalar_from_json(q3, Json::array({1, 2, 3})), SchemaError);
}

TEST_CASE("fusion round trip") {
  FusionRing f = oracle::rep_s3_from_characters();
  f.dual = std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}, {2, 2}};
  BlockPartition b{{{"1", "s"}, {"V"}}};
  Json j = fusion_to_json(f, &b);
  auto [g, c] = fusion_from_json(j);
  CHECK(g.labels == f.labels);
  CHECK(g.mult == f.mult);
  CHECK(g.dual == f.dual);
  CHECK(c == b);
  CHECK(dump(fusion_to_json(g, &c)) == dump(j));

  auto [h, singles] = fusion_from_json(fusion_to_json(f));
  CHECK(singles == BlockPartition::singletons(h));

  Json bad = j;
  bad["mult"].push_back(Json::array({"1", "q", "1", 1}));
  CHECK_THROWS_AS(fusion_from_json(bad), SchemaError);
  Json dup = j;
  dup["mult"].push_back(dup["mult"][0]);
  CHECK_THROWS_AS(fusion_from_json(dup), SchemaError);
  Json blocks = j;
  blocks["blocks"] = Json::array({Json::array({"1"})});
  CHECK_THROWS_AS(fusion_from_json(blocks), SchemaError);
  CHECK_THROWS_AS(fusion_from_json(Json::object()), SchemaError);
}

TEST_CASE("Hopf round trip") {
  Field f7 = Field::prime(7);
  std::vector<HopfAlgebra> hs{gen_group_algebra(named_group("S3"), f7), gen_sweedler(Field::rationals()),
                              gen_taft(3, f7.from_int(2), f7), gen_dual_group_algebra(named_group("Q8"), f7),
                              gen_taft(3, parse_field("ext:Q:x^2+x+1").generator(), parse_field("ext:Q:x^2+x+1"))};
  for (const auto& h : hs) {
    Json j = hopf_to_json(h, "x");
    HopfAlgebra back = hopf_from_json(j);
    CHECK(dump(hopf_to_json(back, "x")) == dump(j));
    CHECK(back.antipode == h.antipode);
    CHECK(back.counit == h.counit);
    for (std::size_t i = 0; i < h.dim(); ++i)
      for (std::size_t k = 0; k < h.dim(); ++k) CHECK(back.alg.product(i, k) == h.alg.product(i, k));
    CHECK(verify_hopf(back).valid());
  }
  Json j = hopf_to_json(hs[0]);
  Json bad = j;
  bad["antipode"].erase(0);
  CHECK_THROWS_AS(hopf_from_json(bad), SchemaError);
  bad = j;
  bad["mult"][0][0] = 17;
  CHECK_THROWS_AS(hopf_from_json(bad), SchemaError);
  bad = j;
  bad.erase("comult");
  CHECK_THROWS_AS(hopf_from_json(bad), SchemaError);
}

TEST_CASE("modules and groups") {
  Field f5 = Field::prime(5);
  HopfAlgebra h = gen_sweedler(f5);
  RepModule m = regular_module(h.alg);
  RepModule back = module_from_json(f5, module_to_json(m));
  CHECK(back.action == m.action);
  CHECK_THROWS_AS(module_from_json(Field::prime(7), module_to_json(m)), SchemaError);

  Json g = {{"names", {"e", "a"}}, {"table", {{0, 1}, {1, 0}}}};
  CHECK(group_from_json(g).size() == 2);
  Json bad = {{"names", {"e", "a"}}, {"table", {{0, 1}, {1, 1}}}};
  CHECK_THROWS_AS(group_from_json(bad), SchemaError);
}
