#pragma once

// Fusion-ring data (Grothendieck ring multiplicities plus a block partition of
// the simples) and the lambda-group of functions I -> k^x it determines.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ftc/field.hpp"
#include "ftc/zlattice.hpp"

namespace ftc {

struct FusionRing {
  std::vector<std::string> labels;
  std::string unit;
  /// Sparse multiplicities N_ij^k keyed by label indices; absent means 0.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, long long> mult;
  /// Optional duality as (i, i*) index pairs.
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> dual;

  std::size_t size() const { return labels.size(); }
  /// Throws std::invalid_argument for an unknown label.
  std::size_t index_of(const std::string& label) const;
  std::size_t unit_index() const { return index_of(unit); }
  long long n(std::size_t i, std::size_t j, std::size_t k) const;
  /// Sets N_ij^k (zero erases the entry).
  void set(std::size_t i, std::size_t j, std::size_t k, long long value);
};

/// Partition of the simple labels into block classes.
struct BlockPartition {
  std::vector<std::vector<std::string>> classes;

  static BlockPartition singletons(const FusionRing& f);
  /// Class index of every label; throws std::invalid_argument unless the
  /// classes are nonempty, disjoint and cover the labels of `f`.
  std::vector<std::size_t> class_of(const FusionRing& f) const;
  /// Classes with labels and classes both in ring order, for comparisons.
  BlockPartition canonical(const FusionRing& f) const;
  friend bool operator==(const BlockPartition& a, const BlockPartition& b) { return a.classes == b.classes; }
};

struct FusionViolation {
  std::string axiom;                // "unit", "associativity", "duality", "nonnegativity"
  std::vector<std::string> labels;  // the offending instance
  std::string detail;
};

struct FusionReport {
  std::vector<FusionViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks the unit axioms, associativity sum_t N_ij^t N_tk^l = sum_t N_jk^t N_it^l,
/// nonnegativity, and (when present) that the duality is an involution with
/// N_{i,i*}^1 >= 1. Every violated instance is listed.
FusionReport validate_fusion(const FusionRing& f);

/// One row e_i + e_j - e_k per nonzero N_ij^k (sorted triples), then one row
/// e_a - e_b per pair a < b inside a block class; duplicates dropped.
IntMatrix lambda_relation_matrix(const FusionRing& f, const BlockPartition& b);

struct LambdaGroup {
  AbelianInvariants presented;   // invariants of Z^I / relations
  AbelianInvariants characters;  // invariants of the lambda-group itself
  std::vector<UnitCharacter> functions;
};

/// The group of functions lambda: I -> k^x with lambda(i) lambda(j) = lambda(k)
/// whenever N_ij^k != 0 and lambda constant on blocks, for char k = char_p.
/// Functions are evaluated in `field` when given. Throws InfiniteGroupError
/// (data not categorifiable over an algebraically closed field) when the
/// relations leave positive free rank.
LambdaGroup lambda_group(const FusionRing& f, const BlockPartition& b, long long char_p,
                         const std::optional<Field>& field = std::nullopt);

/// Membership test for evaluated values, one per label in ring order.
bool check_lambda(const FusionRing& f, const BlockPartition& b, const std::vector<Scalar>& values);
/// Membership test for an abstract character (exponents modulo its modulus).
bool check_lambda(const FusionRing& f, const BlockPartition& b, const UnitCharacter& lambda);

}  // namespace ftc
