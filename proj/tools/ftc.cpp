// ftc: generate, validate and certify finite tensor category data.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ftc/io.hpp"
#include "ftc/phi.hpp"

using namespace ftc;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

/// Signals a usage error that should exit with code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("FTC_SEED")) {
    std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
      throw UsageError("FTC_SEED must be a non-negative integer, got \"" + s + "\"");
    return std::stoull(s);
  }
  return kDefaultSeed;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string element_string(const Algebra& a, const Vec& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    os << (first ? "" : " + ");
    if (!v[i].is_one()) os << "(" << v[i].to_string() << ")*";
    os << a.basis_names()[i];
    first = false;
  }
  return first ? "0" : os.str();
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string instance_name(const Json& j, const std::string& path) {
  if (j.contains("name") && j["name"].is_string()) return j["name"].get<std::string>();
  return std::filesystem::path(path).stem().string();
}

void print_fusion_table(const FusionRing& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t k = 0; k < f.size(); ++k) {
      std::vector<std::string> terms;
      for (std::size_t t = 0; t < f.size(); ++t) {
        long long n = f.n(i, k, t);
        if (n == 1) terms.push_back(f.labels[t]);
        if (n > 1) terms.push_back(std::to_string(n) + f.labels[t]);
      }
      std::cout << "  " << f.labels[i] << " x " << f.labels[k] << " = " << (terms.empty() ? "0" : join(terms, " + "))
                << "\n";
    }
}

void print_blocks(const BlockPartition& b) {
  std::vector<std::string> cls;
  for (const auto& c : b.classes) cls.push_back("{" + join(c, ", ") + "}");
  std::cout << "blocks: " << b.classes.size() << " " << join(cls) << "\n";
}

std::string splitting_hint(const SplittingError& e) {
  std::string msg = e.what();
  auto pos = msg.find("extend to ");
  if (pos != std::string::npos) return msg.substr(pos);
  return "extend to a field where " + join(e.obstructions(), ", ") + " splits";
}

int cmd_validate(const std::string& path) {
  Json j = read_json_file(path);
  if (j.is_object() && j.contains("labels")) {
    auto [f, b] = fusion_from_json(j);
    FusionReport r = validate_fusion(f);
    std::cout << "fusion data: " << f.size() << " simples, " << b.classes.size() << " blocks\n";
    for (const auto& v : r.violations)
      std::cout << "violation: " << v.axiom << " (" << join(v.labels, ", ") << "): " << v.detail << "\n";
    std::cout << (r.valid() ? "valid" : "invalid") << "\n";
    return r.valid() ? kOk : kViolation;
  }
  if (j.is_object() && j.contains("comult")) {
    HopfAlgebra h = hopf_from_json(j);
    HopfReport r = verify_hopf(h);
    std::cout << "Hopf algebra: dim " << h.dim() << " over " << h.field().spec_string() << "\n";
    for (const auto& v : r.violations) {
      std::vector<std::string> idx;
      for (auto i : v.indices) idx.push_back(std::to_string(i));
      std::cout << "violation: " << v.axiom << " (" << join(idx, ", ") << "): " << v.detail << "\n";
    }
    std::cout << (r.valid() ? "valid" : "invalid") << "\n";
    return r.valid() ? kOk : kViolation;
  }
  throw SchemaError(path + ": neither fusion data (\"labels\") nor a Hopf algebra (\"comult\")");
}

int cmd_lambda_group(const std::string& path, std::optional<long long> char_p, const std::string& field_spec) {
  auto [f, b] = fusion_from_json(read_json_file(path));
  FusionReport r = validate_fusion(f);
  if (!r.valid()) {
    for (const auto& v : r.violations)
      std::cout << "violation: " << v.axiom << " (" << join(v.labels, ", ") << "): " << v.detail << "\n";
    return kViolation;
  }
  std::optional<Field> field;
  if (!field_spec.empty()) {
    field = parse_field(field_spec);
    long long fc = field->characteristic();
    if (char_p && *char_p != fc)
      throw UsageError("--char " + std::to_string(*char_p) + " conflicts with --field " + field_spec);
    char_p = fc;
  }
  const long long p = char_p.value_or(0);
  if (p < 0) throw UsageError("--char must be 0 or a prime");
  if (p > 0) parse_field("Fp:" + std::to_string(p));
  LambdaGroup g;
  try {
    g = lambda_group(f, b, p, field);
  } catch (const InfiniteGroupError& e) {
    std::cout << "not categorifiable: " << e.what() << "\n";
    return kViolation;
  } catch (const SplittingError& e) {
    std::cout << "splitting error: " << e.what() << "\n" << "hint: " << splitting_hint(e) << "\n";
    return kViolation;
  }
  std::cout << "labels: " << join(f.labels) << "\n";
  std::cout << "characteristic: " << p << "\n";
  std::cout << "relations: " << g.presented.to_string() << "\n";
  std::cout << "invariant factors: " << g.characters.to_string() << "\n";
  std::cout << "order: " << g.characters.torsion_order().get_str() << "\n";
  std::cout << "lambda table:\n";
  for (std::size_t n = 0; n < g.functions.size(); ++n) {
    const auto& ch = g.functions[n];
    std::vector<std::string> ex;
    for (const auto& e : ch.exponents) ex.push_back(e.get_str());
    std::cout << "  lambda" << n << ": zeta_" << ch.modulus.get_str() << "^[" << join(ex, ", ") << "]";
    if (ch.values) {
      std::vector<std::string> vs;
      for (const auto& v : *ch.values) vs.push_back(v.to_string());
      std::cout << " = [" << join(vs, ", ") << "]";
    }
    std::cout << "\n";
  }
  return kOk;
}

Scalar parse_q(const Field& f, const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    j = text;
  }
  if (j.is_number_integer() || j.is_array()) return scalar_from_json(f, j);
  return scalar_from_json(f, text);
}

int cmd_gen(const std::string& kind, const std::string& group, const std::string& group_file, int n,
            const std::string& q, const std::string& field_spec, const std::string& out) {
  Field f = parse_field(field_spec);
  HopfAlgebra h;
  std::string name;
  auto pick_group = [&]() -> std::pair<FiniteGroup, std::string> {
    if (!group.empty() && !group_file.empty()) throw UsageError("--group and --group-file are exclusive");
    if (!group_file.empty()) return {group_from_json(read_json_file(group_file)), std::filesystem::path(group_file).stem().string()};
    if (group.empty()) throw UsageError("--group or --group-file is required");
    return {named_group(group), group};
  };
  try {
    if (kind == "group-algebra" || kind == "dual") {
      auto [g, gname] = pick_group();
      h = kind == "dual" ? gen_dual_group_algebra(g, f) : gen_group_algebra(g, f);
      name = (kind == "dual" ? "dual_" : "k") + gname + " over " + f.spec_string();
    } else if (kind == "taft") {
      if (n < 2) throw UsageError("--n must be at least 2");
      if (q.empty()) throw UsageError("--q is required for taft");
      h = gen_taft(n, parse_q(f, q), f);
      name = "taft" + std::to_string(n) + " q=" + q + " over " + f.spec_string();
    } else {
      h = gen_sweedler(f);
      name = "sweedler over " + f.spec_string();
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  write_output(out, dump(hopf_to_json(h, name)));
  return kOk;
}

HopfAlgebra load_hopf(const std::string& path, Json& j) {
  j = read_json_file(path);
  if (!j.is_object() || !j.contains("comult")) throw SchemaError(path + ": not a Hopf algebra file (no \"comult\")");
  return hopf_from_json(j);
}

int cmd_invariants(const std::string& path, std::uint64_t seed, const std::string& out) {
  Json j;
  HopfAlgebra h = load_hopf(path, j);
  HopfReport r = verify_hopf(h);
  if (!r.valid()) {
    for (const auto& v : r.violations) std::cout << "violation: " << v.axiom << ": " << v.detail << "\n";
    return kViolation;
  }
  const Algebra& a = h.alg;
  std::cout << "instance: " << instance_name(j, path) << "\n";
  std::cout << "dim " << h.dim() << " over " << h.field().spec_string() << ", seed " << seed << "\n";
  try {
    GrouplikeSet g = grouplikes(h);
    GrouplikeSet z = central_grouplikes(h, g);
    std::vector<Vec> piv = pivotal_grouplikes(h, g, z);
    auto list = [&](const std::string& label, const std::vector<Vec>& xs) {
      std::cout << label << ": " << xs.size() << "\n";
      for (const auto& x : xs) std::cout << "  " << element_string(a, x) << "\n";
    };
    list("grouplikes", g.elements);
    list("central grouplikes", z.elements);
    list("pivotal grouplikes", piv);
    std::cout << "center dim: " << center(a).dim() << "\n";
    HopfFusion fu = fusion_from_hopf(h, seed);
    std::vector<std::string> dims;
    for (const auto& s : fu.simples.modules) dims.push_back(std::to_string(s.dim));
    std::cout << "simples: " << join(fu.ring.labels) << " (dims " << join(dims, ", ") << ")\n";
    print_blocks(fu.blocks);
    std::cout << "fusion table:\n";
    print_fusion_table(fu.ring);
    if (!out.empty()) write_output(out, dump(fusion_to_json(fu.ring, &fu.blocks)));
  } catch (const SplittingError& e) {
    std::cout << "splitting error: " << e.what() << "\n" << "hint: " << splitting_hint(e) << "\n";
    return kViolation;
  } catch (const UnsupportedField& e) {
    std::cout << "unsupported field: " << e.what() << "\n"
              << "hint: regenerate the instance over a finite field, e.g. --field Fp:p\n";
    return kViolation;
  } catch (const RadicalUncertified& e) {
    std::cout << "radical uncertified: " << e.what() << "\n";
    return kViolation;
  }
  return kOk;
}

int cmd_certify(const std::string& path, std::uint64_t seed, const std::string& out) {
  Json j;
  HopfAlgebra h = load_hopf(path, j);
  Certificate c = run_all(h, instance_name(j, path), seed);
  const std::string text = dump(c.to_json());
  if (out.empty()) {
    std::cout << text;
  } else {
    write_output(out, text);
    for (const auto& e : c.checks) std::cout << e.name << ": " << e.status << "\n";
    std::cout << (c.passed() ? "certificate: pass" : "certificate: fail") << "\n";
  }
  return c.passed() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of finite tensor categories: central grouplikes, pivotal structures, blocks, fusion data"};
  app.require_subcommand(1);

  std::string path, out, field_spec, group, group_file, q;
  std::optional<long long> char_p;
  std::optional<std::uint64_t> seed;
  int n = 0;

  auto* validate = app.add_subcommand("validate", "Check a fusion or Hopf JSON file");
  validate->add_option("path", path, "Input file")->required();

  auto* lambda = app.add_subcommand("lambda-group", "Group of lambda functions of fusion data");
  lambda->add_option("path", path, "Fusion JSON file")->required();
  lambda->add_option("--char", char_p, "Characteristic (0 or a prime)");
  lambda->add_option("--field", field_spec, "Evaluate in this field (Q, Fp:p, ext:...)");

  auto* gen = app.add_subcommand("gen", "Emit a built-in Hopf algebra");
  std::string kind;
  gen->add_option("kind", kind, "group-algebra | dual | taft | sweedler")
      ->required()
      ->check(CLI::IsMember({"group-algebra", "dual", "taft", "sweedler"}));
  gen->add_option("--group", group, "Built-in group: Zn, S3, D4, Q8");
  gen->add_option("--group-file", group_file, "Group multiplication table JSON");
  gen->add_option("--n", n, "Taft parameter n");
  gen->add_option("--q", q, "Taft root of unity (integer, \"a/b\" or coefficient array)");
  gen->add_option("--field", field_spec, "Field spec")->required();
  gen->add_option("-o,--output", out, "Output path (default stdout)");

  auto* inv = app.add_subcommand("invariants", "Grouplikes, pivotal set, blocks and fusion table");
  inv->add_option("path", path, "Hopf JSON file")->required();
  inv->add_option("--seed", seed, "MeatAxe seed (default FTC_SEED or built-in)");
  inv->add_option("-o,--output", out, "Write fusion data JSON here");

  auto* cert = app.add_subcommand("certify", "Run every check and emit a certificate");
  cert->add_option("path", path, "Hopf JSON file")->required();
  cert->add_option("--seed", seed, "MeatAxe seed (default FTC_SEED or built-in)");
  cert->add_option("-o,--output", out, "Certificate path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(path);
    if (*lambda) return cmd_lambda_group(path, char_p, field_spec);
    if (*gen) return cmd_gen(kind, group, group_file, n, q, field_spec, out);
    if (*inv) return cmd_invariants(path, resolve_seed(seed), out);
    if (*cert) return cmd_certify(path, resolve_seed(seed), out);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}
