#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ftc/io.hpp"
#include "ftc/phi.hpp"

namespace py = pybind11;
using namespace ftc;

namespace {

std::string lambda_group_json(const std::string& text, long long char_p, const std::string& field_spec) {
  auto [f, b] = fusion_from_json(Json::parse(text));
  std::optional<Field> field;
  if (!field_spec.empty()) {
    field = parse_field(field_spec);
    if (char_p != 0 && char_p != field->characteristic())
      throw std::invalid_argument("char_p conflicts with the field " + field_spec);
    char_p = field->characteristic();
  }
  LambdaGroup g = lambda_group(f, b, char_p, field);
  Json j;
  j["relations"] = g.presented.to_string();
  j["invariants"] = g.characters.to_string();
  j["order"] = g.characters.torsion_order().get_str();
  Json table = Json::array();
  for (const auto& ch : g.functions) {
    Json row;
    row["modulus"] = ch.modulus.get_str();
    Json ex = Json::array();
    for (const auto& e : ch.exponents) ex.push_back(e.get_str());
    row["exponents"] = std::move(ex);
    if (ch.values) row["values"] = vec_json(*ch.values);
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j.dump();
}

std::string validate_json(const std::string& text) {
  Json in = Json::parse(text);
  Json j;
  Json v = Json::array();
  if (in.contains("labels")) {
    j["kind"] = "fusion";
    for (const auto& x : validate_fusion(fusion_from_json(in).first).violations) v.push_back(x.axiom + ": " + x.detail);
  } else {
    j["kind"] = "hopf";
    for (const auto& x : verify_hopf(hopf_from_json(in)).violations) v.push_back(x.axiom + ": " + x.detail);
  }
  j["valid"] = v.empty();
  j["violations"] = std::move(v);
  return j.dump();
}

std::string gen_json(const std::string& kind, const std::string& field_spec, const std::string& group, int n,
                     const std::string& q) {
  Field f = parse_field(field_spec);
  HopfAlgebra h;
  if (kind == "group-algebra") h = gen_group_algebra(named_group(group), f);
  else if (kind == "dual") h = gen_dual_group_algebra(named_group(group), f);
  else if (kind == "taft") h = gen_taft(n, scalar_from_json(f, Json::parse(q)), f);
  else if (kind == "sweedler") h = gen_sweedler(f);
  else throw std::invalid_argument("unknown kind " + kind);
  return hopf_to_json(h, kind).dump();
}

std::string invariants_json(const std::string& text, std::uint64_t seed) {
  HopfAlgebra h = hopf_from_json(Json::parse(text));
  GrouplikeSet g = grouplikes(h);
  GrouplikeSet z = central_grouplikes(h, g);
  Json j;
  j["grouplikes"] = g.size();
  j["central_grouplikes"] = z.size();
  j["pivotal"] = pivotal_grouplikes(h, g, z).size();
  j["center_dim"] = center(h.alg).dim();
  HopfFusion fu = fusion_from_hopf(h, seed);
  Json dims = Json::array();
  for (const auto& s : fu.simples.modules) dims.push_back(s.dim);
  j["simple_dims"] = std::move(dims);
  j["fusion"] = fusion_to_json(fu.ring, &fu.blocks);
  return j.dump();
}

std::string certify_json(const std::string& text, const std::string& instance, std::uint64_t seed) {
  return dump(run_all(hopf_from_json(Json::parse(text)), instance, seed).to_json());
}

}  // namespace

PYBIND11_MODULE(_ftc, m) {
  m.doc() = "Finite tensor category invariants; JSON strings in, JSON strings out.";
  m.attr("DEFAULT_SEED") = kDefaultSeed;

  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<SplittingError>(m, "SplittingError", PyExc_RuntimeError);
  py::register_exception<InfiniteGroupError>(m, "InfiniteGroupError", PyExc_RuntimeError);

  m.def("field_spec", [](const std::string& s) { return parse_field(s).spec_string(); }, py::arg("spec"),
        "Canonical micro-syntax of a field spec.");
  m.def("validate", &validate_json, py::arg("text"));
  m.def("lambda_group", &lambda_group_json, py::arg("text"), py::arg("char_p") = 0, py::arg("field") = "");
  m.def("gen", &gen_json, py::arg("kind"), py::arg("field"), py::arg("group") = "", py::arg("n") = 0,
        py::arg("q") = "0");
  m.def("invariants", &invariants_json, py::arg("text"), py::arg("seed") = kDefaultSeed);
  m.def("certify", &certify_json, py::arg("text"), py::arg("instance") = "", py::arg("seed") = kDefaultSeed);
}
