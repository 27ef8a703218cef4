#pragma once

// The map phi from central grouplikes to scalars on simple modules, the
// checks built on it, and the certificate that collects them.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ftc/hopf.hpp"
#include "ftc/rep.hpp"

namespace ftc {

/// Rows: central grouplikes (identity first); columns: simples; entry (g, i)
/// is the scalar by which g acts on S_i.
struct PhiTable {
  std::vector<Vec> grouplikes;
  std::vector<std::string> simples;
  std::vector<std::vector<Scalar>> entries;
};

struct CheckResult {
  std::string name;
  std::string paper_ref;  // the statement being checked
  std::string status;     // "pass", "fail" or "skipped"
  nlohmann::ordered_json witness;
  bool passed() const { return status == "pass"; }
};

struct Certificate {
  std::string instance;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

/// Entries via scalar_action; every row is checked multiplicative on the
/// fusion rule and constant on blocks before it is returned
/// (std::logic_error with the offending triple otherwise).
PhiTable phi_map(const GrouplikeSet& central, const HopfFusion& fusion);

/// Rows equal to all ones are exactly the central grouplikes of p-power order.
CheckResult verify_kernel(const PhiTable& t, const GrouplikeSet& central, long long char_p);
/// The rows are exactly the lambda-group of the fusion data, g -> row(g) is a
/// homomorphism, and |G| = |Ker| |lambda-group|.
CheckResult verify_image(const PhiTable& t, const GrouplikeSet& central, const HopfFusion& fusion, const Field& f);
/// |central grouplikes| <= dim Z(H).
CheckResult verify_bound(const HopfAlgebra& h, const GrouplikeSet& central);
/// Grouplikes and central grouplikes have full rank.
CheckResult verify_independence(const HopfAlgebra& h, const GrouplikeSet& g, const GrouplikeSet& central);
/// Pivotal grouplikes: S^2 = ad g as matrices, and the set is one coset of
/// the central grouplikes (or empty).
CheckResult verify_pivotal(const HopfAlgebra& h, const GrouplikeSet& g, const GrouplikeSet& central);

/// Runs every check in dependency order. Hard errors become failed entries;
/// entries depending on a failed one are marked skipped.
Certificate run_all(const HopfAlgebra& h, const std::string& instance, std::uint64_t seed = kDefaultSeed);

nlohmann::ordered_json scalar_json(const Scalar& s);
nlohmann::ordered_json vec_json(const Vec& v);

}  // namespace ftc
