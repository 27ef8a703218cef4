#include "ftc/phi.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ftc/errors.hpp"

namespace ftc {

using nlohmann::ordered_json;

nlohmann::ordered_json scalar_json(const Scalar& s) { return s.to_string(); }

nlohmann::ordered_json vec_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (const auto& s : v) a.push_back(s.to_string());
  return a;
}

bool Certificate::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

nlohmann::ordered_json Certificate::to_json() const {
  ordered_json j;
  j["instance"] = instance;
  j["seed"] = seed;
  j["checks"] = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json e;
    e["name"] = c.name;
    e["paper_ref"] = c.paper_ref;
    e["status"] = c.status;
    e["witness"] = c.witness;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

namespace {

const char* kAxioms = "H is a Hopf algebra: associativity, unit, coassociativity, counit, bialgebra and antipode axioms";
const char* kGrouplikes = "G(H) is the group of characters of H*; each element satisfies Delta(g) = g (x) g, eps(g) = 1";
const char* kIndependence = "distinct grouplike elements are linearly independent";
const char* kBound = "the number of central grouplikes is at most dim Z(H)";
const char* kPivotal = "pivotal structures are grouplikes g with S^2 = ad g and form a torsor over the central grouplikes";
const char* kFusion = "simple modules, fusion multiplicities N_ij^k from composition factors, and blocks";
const char* kPhi = "phi(g) = (i -> scalar of g on S_i) satisfies lambda(i) lambda(j) = lambda(k) when N_ij^k != 0 and is constant on blocks";
const char* kKernel = "Ker(phi) is the set of central grouplikes of p-power order";
const char* kImage = "phi maps G onto the lambda-group of the fusion data, so G / Ker(phi) is isomorphic to it";

CheckResult make(const std::string& name, const char* ref, bool ok, ordered_json witness) {
  return {name, ref, ok ? "pass" : "fail", std::move(witness)};
}

ordered_json row_json(const std::vector<Scalar>& row) {
  ordered_json a = ordered_json::array();
  for (const auto& s : row) a.push_back(s.to_string());
  return a;
}

}  // namespace

PhiTable phi_map(const GrouplikeSet& central, const HopfFusion& fusion) {
  PhiTable t;
  t.grouplikes = central.elements;
  t.simples = fusion.simples.names;
  for (const auto& g : central.elements) {
    std::vector<Scalar> row;
    for (const auto& s : fusion.simples.modules) row.push_back(scalar_action(g, s));
    t.entries.push_back(std::move(row));
  }
  const auto cls = fusion.blocks.class_of(fusion.ring);
  for (std::size_t r = 0; r < t.entries.size(); ++r) {
    const auto& row = t.entries[r];
    for (const auto& [key, mult] : fusion.ring.mult) {
      auto [i, j, k] = key;
      if (mult != 0 && row[i] * row[j] != row[k])
        throw std::logic_error("phi row " + std::to_string(r) + " is not multiplicative at (" + t.simples[i] + ", " +
                               t.simples[j] + ", " + t.simples[k] + ")");
    }
    for (std::size_t i = 0; i < row.size(); ++i)
      for (std::size_t j = i + 1; j < row.size(); ++j)
        if (cls[i] == cls[j] && row[i] != row[j])
          throw std::logic_error("phi row " + std::to_string(r) + " is not constant on the block of " + t.simples[i] +
                                 " and " + t.simples[j]);
    const std::size_t ord = central.order(r);
    for (const auto& v : row)
      if (!v.pow(static_cast<long long>(ord)).is_one())
        throw std::logic_error("phi entry is not a root of unity of order dividing the order of g");
  }
  return t;
}

CheckResult verify_kernel(const PhiTable& t, const GrouplikeSet& central, long long char_p) {
  GrouplikeDecomposition d = decompose_p_parts(central, char_p);
  std::set<std::size_t> kernel;
  for (std::size_t r = 0; r < t.entries.size(); ++r)
    if (std::all_of(t.entries[r].begin(), t.entries[r].end(), [](const Scalar& s) { return s.is_one(); }))
      kernel.insert(r);
  std::set<std::size_t> ppart(d.p_part.begin(), d.p_part.end());
  ordered_json w;
  w["characteristic"] = char_p;
  w["central_grouplikes"] = central.size();
  w["kernel_size"] = kernel.size();
  w["p_part_size"] = ppart.size();
  bool ok = kernel == ppart;
  if (!ok) {
    for (std::size_t r = 0; r < t.entries.size(); ++r)
      if (kernel.count(r) != ppart.count(r)) {
        w["element"] = vec_json(central.elements[r]);
        w["element_order"] = central.order(r);
        w["row"] = row_json(t.entries[r]);
        break;
      }
  }
  return make("kernel", kKernel, ok, std::move(w));
}

CheckResult verify_image(const PhiTable& t, const GrouplikeSet& central, const HopfFusion& fusion, const Field& f) {
  ordered_json w;
  LambdaGroup lg;
  try {
    lg = lambda_group(fusion.ring, fusion.blocks, f.characteristic(), f);
  } catch (const std::exception& e) {
    w["error"] = e.what();
    return make("image", kImage, false, std::move(w));
  }
  std::set<std::vector<Scalar>> lambdas, rows;
  for (const auto& ch : lg.functions) lambdas.insert(*ch.values);
  for (const auto& r : t.entries) rows.insert(r);
  w["lambda_group"] = lg.characters.to_string();
  w["lambda_group_order"] = lambdas.size();
  w["image_size"] = rows.size();
  bool ok = rows == lambdas;
  if (!ok) {
    for (const auto& r : rows)
      if (!lambdas.count(r)) {
        w["row_outside_lambda_group"] = row_json(r);
        break;
      }
    if (!w.contains("row_outside_lambda_group"))
      for (const auto& l : lambdas)
        if (!rows.count(l)) {
          w["lambda_not_attained"] = row_json(l);
          break;
        }
  }
  // g -> row(g) respects multiplication.
  for (std::size_t a = 0; a < central.size() && ok; ++a)
    for (std::size_t b = 0; b < central.size() && ok; ++b) {
      const auto& ra = t.entries[a];
      const auto& rb = t.entries[b];
      const auto& rab = t.entries[central.table[a][b]];
      for (std::size_t i = 0; i < ra.size(); ++i)
        if (ra[i] * rb[i] != rab[i]) {
          ok = false;
          w["non_homomorphic_pair"] = ordered_json::array({vec_json(central.elements[a]), vec_json(central.elements[b])});
          break;
        }
    }
  std::size_t kernel = 0;
  for (const auto& r : t.entries)
    if (std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_one(); })) ++kernel;
  w["group_order"] = central.size();
  w["kernel_size"] = kernel;
  if (central.size() != kernel * lambdas.size()) ok = false;
  return make("image", kImage, ok, std::move(w));
}

CheckResult verify_bound(const HopfAlgebra& h, const GrouplikeSet& central) {
  const std::size_t z = center(h.alg).dim();
  ordered_json w;
  w["central_grouplikes"] = central.size();
  w["center_dim"] = z;
  return make("order_bound", kBound, central.size() <= z, std::move(w));
}

CheckResult verify_independence(const HopfAlgebra& h, const GrouplikeSet& g, const GrouplikeSet& central) {
  const bool a = grouplike_independence(h.field(), h.dim(), g.elements);
  const bool b = grouplike_independence(h.field(), h.dim(), central.elements);
  ordered_json w;
  w["grouplikes"] = g.size();
  w["grouplike_rank"] = g.elements.empty() ? 0 : rank(Matrix::from_columns(h.field(), h.dim(), g.elements));
  w["central_grouplikes"] = central.size();
  w["central_rank"] =
      central.elements.empty() ? 0 : rank(Matrix::from_columns(h.field(), h.dim(), central.elements));
  return make("independence", kIndependence, a && b, std::move(w));
}

CheckResult verify_pivotal(const HopfAlgebra& h, const GrouplikeSet& g, const GrouplikeSet& central) {
  ordered_json w;
  std::vector<Vec> piv;
  try {
    piv = pivotal_grouplikes(h, g, central);
  } catch (const std::logic_error& e) {
    w["error"] = e.what();
    return make("pivotal", kPivotal, false, std::move(w));
  }
  bool ok = true;
  const Matrix s2 = h.antipode * h.antipode;
  ordered_json elems = ordered_json::array();
  for (const auto& p : piv) {
    elems.push_back(vec_json(p));
    auto pinv = g.elements[g.inverse(g.index_of(p))];
    Matrix ad = h.alg.left_mult(p) * h.alg.right_mult(pinv);
    if (ad != s2) {
      ok = false;
      w["failing_element"] = vec_json(p);
    }
  }
  w["pivotal_count"] = piv.size();
  w["central_grouplikes"] = central.size();
  w["pivotal_elements"] = std::move(elems);
  if (!piv.empty() && piv.size() != central.size()) ok = false;
  return make("pivotal", kPivotal, ok, std::move(w));
}

Certificate run_all(const HopfAlgebra& h, const std::string& instance, std::uint64_t seed) {
  Certificate cert{instance, seed, {}};
  auto skipped = [&](const std::string& name, const char* ref, const std::string& because) {
    cert.checks.push_back({name, ref, "skipped", ordered_json{{"blocked_by", because}}});
  };
  auto failed = [&](const std::string& name, const char* ref, const std::exception& e) {
    cert.checks.push_back({name, ref, "fail", ordered_json{{"error", e.what()}}});
  };

  HopfReport rep = verify_hopf(h);
  {
    ordered_json w;
    w["dim"] = h.dim();
    w["field"] = h.field().spec_string();
    ordered_json v = ordered_json::array();
    for (std::size_t i = 0; i < rep.violations.size() && i < 20; ++i)
      v.push_back({{"axiom", rep.violations[i].axiom}, {"detail", rep.violations[i].detail}});
    w["violations"] = std::move(v);
    w["violation_count"] = rep.violations.size();
    cert.checks.push_back(make("hopf_axioms", kAxioms, rep.valid(), std::move(w)));
  }
  if (!rep.valid()) {
    for (auto [n, r] : std::vector<std::pair<std::string, const char*>>{{"grouplikes", kGrouplikes},
                                                                         {"independence", kIndependence},
                                                                         {"order_bound", kBound},
                                                                         {"pivotal", kPivotal},
                                                                         {"fusion", kFusion},
                                                                         {"phi_map", kPhi},
                                                                         {"kernel", kKernel},
                                                                         {"image", kImage}})
      skipped(n, r, "hopf_axioms");
    return cert;
  }

  std::optional<GrouplikeSet> g, z;
  try {
    g = grouplikes(h);
    z = central_grouplikes(h, *g);
    ordered_json w;
    w["grouplikes"] = g->size();
    w["central_grouplikes"] = z->size();
    ordered_json elems = ordered_json::array();
    for (const auto& x : z->elements) elems.push_back(vec_json(x));
    w["central_elements"] = std::move(elems);
    cert.checks.push_back(make("grouplikes", kGrouplikes, true, std::move(w)));
  } catch (const std::exception& e) {
    failed("grouplikes", kGrouplikes, e);
    g.reset();
  }
  if (g) {
    cert.checks.push_back(verify_independence(h, *g, *z));
    cert.checks.push_back(verify_bound(h, *z));
    cert.checks.push_back(verify_pivotal(h, *g, *z));
  } else {
    skipped("independence", kIndependence, "grouplikes");
    skipped("order_bound", kBound, "grouplikes");
    skipped("pivotal", kPivotal, "grouplikes");
  }

  std::optional<HopfFusion> fusion;
  try {
    fusion = fusion_from_hopf(h, seed);
    ordered_json w;
    ordered_json dims = ordered_json::array();
    for (const auto& m : fusion->simples.modules) dims.push_back(m.dim);
    w["simple_dims"] = std::move(dims);
    w["blocks"] = fusion->blocks.classes;
    ordered_json rules = ordered_json::array();
    for (const auto& [key, mult] : fusion->ring.mult) {
      auto [i, j, k] = key;
      rules.push_back(ordered_json::array({fusion->ring.labels[i], fusion->ring.labels[j], fusion->ring.labels[k], mult}));
    }
    w["fusion_rules"] = std::move(rules);
    cert.checks.push_back(make("fusion", kFusion, true, std::move(w)));
  } catch (const std::exception& e) {
    failed("fusion", kFusion, e);
  }

  std::optional<PhiTable> table;
  if (!g || !fusion) {
    skipped("phi_map", kPhi, !g ? "grouplikes" : "fusion");
  } else {
    try {
      table = phi_map(*z, *fusion);
      ordered_json rows = ordered_json::array();
      for (const auto& r : table->entries) rows.push_back(row_json(r));
      cert.checks.push_back(make("phi_map", kPhi, true, ordered_json{{"rows", std::move(rows)}}));
    } catch (const std::exception& e) {
      failed("phi_map", kPhi, e);
    }
  }
  if (!table) {
    skipped("kernel", kKernel, "phi_map");
    skipped("image", kImage, "phi_map");
    return cert;
  }
  cert.checks.push_back(verify_kernel(*table, *z, h.field().characteristic()));
  cert.checks.push_back(verify_image(*table, *z, *fusion, h.field()));
  return cert;
}

}  // namespace ftc
