#include "ftc/io.hpp"

#include <fstream>
#include <sstream>

#include "ftc/poly.hpp"

namespace ftc {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw SchemaError(msg); }

const Json& key(const Json& j, const char* k) {
  if (!j.is_object() || !j.contains(k)) fail(std::string("missing key \"") + k + "\"");
  return j.at(k);
}

std::size_t index(const Json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || static_cast<std::size_t>(j.get<long long>()) >= bound)
    fail(std::string("bad ") + what + " index " + j.dump());
  return j.get<std::size_t>();
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

Vec vec_from_json(const Field& f, const Json& j, std::size_t n, const char* what) {
  array(j, what);
  if (j.size() != n) fail(std::string(what) + " must have " + std::to_string(n) + " entries");
  Vec v;
  for (const auto& x : j) v.push_back(scalar_from_json(f, x));
  return v;
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(scalar_to_json(s));
  return a;
}

Json matrix_to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vec_to_json(m.row(r)));
  return a;
}

Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols, const char* what) {
  array(j, what);
  if (j.size() != rows) fail(std::string(what) + " must have " + std::to_string(rows) + " rows");
  std::vector<Vec> rs;
  for (const auto& r : j) rs.push_back(vec_from_json(f, r, cols, what));
  if (rows == 0) return Matrix(f, 0, cols);
  return Matrix::from_rows(f, rs);
}

template <class F>
auto guarded(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const SchemaError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed JSON value: ") + e.what());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  } catch (const std::domain_error& e) {
    fail(e.what());
  }
}

Scalar rational_from_string(const Field& f, const std::string& s) {
  if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos) fail("bad scalar \"" + s + "\"");
  mpq_class q;
  if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) fail("bad scalar \"" + s + "\"");
  if (q.get_den() == 0) fail("zero denominator in \"" + s + "\"");
  q.canonicalize();
  return f.from_rational(q);
}

}  // namespace

Field parse_field(const std::string& spec) {
  if (spec == "Q") return Field::rationals();
  if (spec.rfind("Fp:", 0) == 0) {
    const std::string p = spec.substr(3);
    if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos || p.size() > 18)
      fail("bad prime in field spec \"" + spec + "\"");
    return guarded([&] { return Field::prime(std::stoll(p)); });
  }
  if (spec.rfind("ext:", 0) == 0) {
    std::string rest = spec.substr(4);
    Field base = Field::rationals();
    if (rest.rfind("Q:", 0) == 0) {
      rest = rest.substr(2);
    } else if (rest.rfind("Fp:", 0) == 0) {
      auto colon = rest.find(':', 3);
      if (colon == std::string::npos) fail("field spec \"" + spec + "\" lacks a minimal polynomial");
      base = parse_field(rest.substr(0, colon));
      rest = rest.substr(colon + 1);
    } else {
      fail("extension base must be Q or Fp:p in \"" + spec + "\"");
    }
    return guarded([&] { return Field::extension(base, parse_int_poly(rest)); });
  }
  fail("unknown field spec \"" + spec + "\" (expected Q, Fp:p or ext:<base>:<poly>)");
}

Json field_to_json(const Field& f) {
  Json j;
  switch (f.kind()) {
    case FieldKind::rationals:
      j["kind"] = "Q";
      break;
    case FieldKind::prime:
      j["kind"] = "Fp";
      j["p"] = f.characteristic();
      break;
    case FieldKind::extension: {
      j["kind"] = "ext";
      j["base"] = field_to_json(f.base());
      Json m = Json::array();
      for (const auto& c : f.min_poly()) m.push_back(c.get_si());
      j["min_poly"] = std::move(m);
      break;
    }
  }
  return j;
}

Field field_from_json(const Json& j) {
  if (j.is_string()) return parse_field(j.get<std::string>());
  return guarded([&]() -> Field {
    const std::string kind = key(j, "kind").get<std::string>();
    if (kind == "Q") return Field::rationals();
    if (kind == "Fp") return Field::prime(key(j, "p").get<std::int64_t>());
    if (kind == "ext") {
      Field base = field_from_json(key(j, "base"));
      std::vector<mpz_class> m;
      for (const auto& c : array(key(j, "min_poly"), "min_poly")) m.emplace_back(static_cast<long>(c.get<long long>()));
      return Field::extension(base, m);
    }
    fail("unknown field kind \"" + kind + "\"");
  });
}

Json scalar_to_json(const Scalar& s) {
  switch (s.field().kind()) {
    case FieldKind::rationals:
      return s.rational().get_str();
    case FieldKind::prime:
      return s.residue();
    case FieldKind::extension: {
      Json a = Json::array();
      for (const auto& c : s.coefficients()) a.push_back(scalar_to_json(c));
      return a;
    }
  }
  return nullptr;
}

Scalar scalar_from_json(const Field& f, const Json& j) {
  return guarded([&]() -> Scalar {
    if (j.is_number_integer()) return f.from_int(j.get<long long>());
    if (j.is_string()) return rational_from_string(f, j.get<std::string>());
    if (j.is_array() && f.kind() == FieldKind::extension) {
      if (j.size() > static_cast<std::size_t>(f.degree())) fail("too many coefficients for " + f.spec_string());
      std::vector<Scalar> c;
      for (const auto& x : j) c.push_back(scalar_from_json(f.base(), x));
      return f.from_coefficients(c);
    }
    fail("cannot read a scalar of " + f.spec_string() + " from " + j.dump());
  });
}

Json fusion_to_json(const FusionRing& f, const BlockPartition* blocks) {
  Json j;
  j["labels"] = f.labels;
  j["unit"] = f.unit;
  Json m = Json::array();
  for (const auto& [k, n] : f.mult) {
    auto [a, b, c] = k;
    m.push_back(Json::array({f.labels[a], f.labels[b], f.labels[c], n}));
  }
  j["mult"] = std::move(m);
  if (f.dual) {
    Json d = Json::array();
    for (auto [a, b] : *f.dual) d.push_back(Json::array({f.labels[a], f.labels[b]}));
    j["dual"] = std::move(d);
  }
  if (blocks) j["blocks"] = blocks->classes;
  return j;
}

std::pair<FusionRing, BlockPartition> fusion_from_json(const Json& j) {
  return guarded([&]() -> std::pair<FusionRing, BlockPartition> {
    FusionRing f;
    for (const auto& l : array(key(j, "labels"), "labels")) f.labels.push_back(l.get<std::string>());
    if (f.labels.empty()) fail("a fusion ring needs at least one label");
    for (std::size_t a = 0; a < f.labels.size(); ++a)
      for (std::size_t b = a + 1; b < f.labels.size(); ++b)
        if (f.labels[a] == f.labels[b]) fail("duplicate label \"" + f.labels[a] + "\"");
    f.unit = key(j, "unit").get<std::string>();
    f.index_of(f.unit);
    for (const auto& e : array(key(j, "mult"), "mult")) {
      if (!e.is_array() || e.size() != 4) fail("mult entries are [i, j, k, N]");
      std::size_t a = f.index_of(e[0].get<std::string>()), b = f.index_of(e[1].get<std::string>()),
                  c = f.index_of(e[2].get<std::string>());
      if (f.mult.count({a, b, c})) fail("repeated mult entry " + e.dump());
      f.set(a, b, c, e[3].get<long long>());
    }
    if (j.contains("dual")) {
      std::vector<std::pair<std::size_t, std::size_t>> d;
      for (const auto& e : array(j.at("dual"), "dual")) {
        if (!e.is_array() || e.size() != 2) fail("dual entries are [i, i*]");
        d.emplace_back(f.index_of(e[0].get<std::string>()), f.index_of(e[1].get<std::string>()));
      }
      f.dual = d;
    }
    BlockPartition b = BlockPartition::singletons(f);
    if (j.contains("blocks")) {
      b.classes.clear();
      for (const auto& c : array(j.at("blocks"), "blocks")) b.classes.push_back(c.get<std::vector<std::string>>());
      b.class_of(f);
    }
    return {f, b};
  });
}

Json algebra_to_json(const Algebra& a) {
  Json j;
  j["field"] = field_to_json(a.field());
  j["basis"] = a.basis_names();
  j["unit"] = vec_to_json(a.unit());
  Json m = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      Vec p = a.product(i, k);
      Json terms = Json::array();
      for (std::size_t t = 0; t < p.size(); ++t)
        if (!p[t].is_zero()) terms.push_back(Json::array({t, scalar_to_json(p[t])}));
      if (!terms.empty()) m.push_back(Json::array({i, k, std::move(terms)}));
    }
  j["mult"] = std::move(m);
  return j;
}

Algebra algebra_from_json(const Json& j) {
  return guarded([&]() -> Algebra {
    Field f = field_from_json(key(j, "field"));
    std::vector<std::string> names = array(key(j, "basis"), "basis").get<std::vector<std::string>>();
    const std::size_t d = names.size();
    if (d == 0) fail("an algebra needs a nonempty basis");
    std::vector<Vec> products(d * d, zero_vec(f, d));
    std::vector<bool> seen(d * d, false);
    for (const auto& e : array(key(j, "mult"), "mult")) {
      if (!e.is_array() || e.size() != 3) fail("mult entries are [i, j, [[k, c], ...]]");
      std::size_t a = index(e[0], d, "basis"), b = index(e[1], d, "basis");
      if (seen[a * d + b]) fail("repeated mult entry for (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      seen[a * d + b] = true;
      for (const auto& t : array(e[2], "product terms")) {
        if (!t.is_array() || t.size() != 2) fail("product terms are [k, c]");
        products[a * d + b][index(t[0], d, "basis")] += scalar_from_json(f, t[1]);
      }
    }
    return Algebra(f, names, products, vec_from_json(f, key(j, "unit"), d, "unit"));
  });
}

Json hopf_to_json(const HopfAlgebra& h, const std::string& name) {
  Json j;
  if (!name.empty()) j["name"] = name;
  Json alg = algebra_to_json(h.alg);
  for (auto& [k, v] : alg.items()) j[k] = v;
  Json c = Json::array();
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Json terms = Json::array();
    for (const auto& t : h.comult[i]) terms.push_back(Json::array({t.left, t.right, scalar_to_json(t.coeff)}));
    c.push_back(Json::array({i, std::move(terms)}));
  }
  j["comult"] = std::move(c);
  j["counit"] = vec_to_json(h.counit);
  j["antipode"] = matrix_to_json(h.antipode);
  return j;
}

HopfAlgebra hopf_from_json(const Json& j) {
  return guarded([&]() -> HopfAlgebra {
    HopfAlgebra h;
    h.alg = algebra_from_json(j);
    const std::size_t d = h.dim();
    const Field f = h.field();
    h.comult.assign(d, {});
    std::vector<bool> seen(d, false);
    for (const auto& e : array(key(j, "comult"), "comult")) {
      if (!e.is_array() || e.size() != 2) fail("comult entries are [i, [[j, k, c], ...]]");
      std::size_t i = index(e[0], d, "basis");
      if (seen[i]) fail("repeated comult entry for " + std::to_string(i));
      seen[i] = true;
      for (const auto& t : array(e[1], "coproduct terms")) {
        if (!t.is_array() || t.size() != 3) fail("coproduct terms are [j, k, c]");
        Scalar c = scalar_from_json(f, t[2]);
        if (!c.is_zero()) h.comult[i].push_back({index(t[0], d, "basis"), index(t[1], d, "basis"), c});
      }
    }
    h.counit = vec_from_json(f, key(j, "counit"), d, "counit");
    h.antipode = matrix_from_json(f, key(j, "antipode"), d, d, "antipode");
    return h;
  });
}

Json module_to_json(const RepModule& m) {
  Json j;
  j["field"] = field_to_json(m.field);
  j["dim"] = m.dim;
  Json a = Json::array();
  for (const auto& x : m.action) a.push_back(matrix_to_json(x));
  j["action"] = std::move(a);
  return j;
}

RepModule module_from_json(const Field& f, const Json& j) {
  return guarded([&]() -> RepModule {
    RepModule m{f, key(j, "dim").get<std::size_t>(), {}};
    if (j.contains("field") && field_from_json(j.at("field")) != f) fail("module field differs from the algebra's");
    for (const auto& x : array(key(j, "action"), "action")) m.action.push_back(matrix_from_json(f, x, m.dim, m.dim, "action"));
    return m;
  });
}

FiniteGroup group_from_json(const Json& j) {
  return guarded([&]() -> FiniteGroup {
    FiniteGroup g;
    g.names = array(key(j, "names"), "names").get<std::vector<std::string>>();
    if (g.names.empty() || g.names.size() > 24) fail("group tables must have between 1 and 24 elements");
    for (const auto& row : array(key(j, "table"), "table")) {
      std::vector<std::size_t> r;
      for (const auto& x : array(row, "table row")) r.push_back(index(x, g.names.size(), "element"));
      g.table.push_back(std::move(r));
    }
    validate_group(g);
    return g;
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ftc
