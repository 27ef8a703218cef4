#pragma once

// Finite-dimensional Hopf algebras by structure constants, grouplike elements
// via characters of the dual algebra, and the built-in instance generators.

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "ftc/algebra.hpp"

namespace ftc {

struct CoproductTerm {
  std::size_t left, right;
  Scalar coeff;
};

struct HopfAlgebra {
  Algebra alg;
  /// comult[i] lists Delta(b_i) = sum coeff b_left (x) b_right.
  std::vector<std::vector<CoproductTerm>> comult;
  Vec counit;
  Matrix antipode;  // column i holds S(b_i)

  std::size_t dim() const { return alg.dim(); }
  const Field& field() const { return alg.field(); }
  /// Delta(x) in H (x) H, coordinate (j, k) at index j * dim + k.
  Vec coproduct(const Vec& x) const;
  Scalar epsilon(const Vec& x) const;
  /// Product in H (x) H.
  Vec tensor_mul(const Vec& u, const Vec& v) const;
};

struct HopfViolation {
  std::string axiom;
  std::vector<std::size_t> indices;
  std::string detail;
};

struct HopfReport {
  std::vector<HopfViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Algebra axioms, coassociativity, counit, Delta and epsilon multiplicative
/// and unital, and the two antipode identities, on all basis elements.
HopfReport verify_hopf(const HopfAlgebra& h);

/// H* with the convolution product on the dual basis; unit epsilon.
Algebra dual_algebra(const HopfAlgebra& h);

struct GrouplikeSet {
  std::vector<Vec> elements;                  // identity first, then canonical order
  std::vector<std::vector<std::size_t>> table;  // table[a][b] = index of g_a g_b
  std::size_t identity = 0;
  std::vector<std::string> obstructions;      // non-split factors met (partial result)

  std::size_t size() const { return elements.size(); }
  std::size_t index_of(const Vec& g) const;  // size() when absent
  std::size_t inverse(std::size_t a) const;
  /// Order of element a in the group.
  std::size_t order(std::size_t a) const;
};

/// Builds the set (identity first, canonical order) and its multiplication
/// table, checking closure; throws std::logic_error if not a group.
GrouplikeSet make_grouplike_set(const HopfAlgebra& h, std::vector<Vec> elements,
                                std::vector<std::string> obstructions = {});

/// G(H) as the characters of the abelianized dual algebra; each element is
/// checked to satisfy Delta(g) = g (x) g and epsilon(g) = 1. Throws
/// SplittingError unless every component splits or `allow_partial` is set.
GrouplikeSet grouplikes(const HopfAlgebra& h, bool allow_partial = false);
GrouplikeSet central_grouplikes(const HopfAlgebra& h, const GrouplikeSet& g);
/// Grouplikes g with S^2(b) g = g b for all basis b; when nonempty, checked to
/// form one coset of the central grouplikes.
std::vector<Vec> pivotal_grouplikes(const HopfAlgebra& h, const GrouplikeSet& g, const GrouplikeSet& central);
bool grouplike_independence(const Field& f, std::size_t dim, const std::vector<Vec>& elements);

struct GrouplikeDecomposition {
  std::vector<std::size_t> p_part;        // indices of p-power order elements
  std::vector<std::size_t> p_prime_part;  // indices of order prime to p
};

/// Splits a finite grouplike group into its p-part and p'-part (for
/// characteristic 0 the p-part is the identity alone) and checks that every
/// element factors uniquely as a product of the two.
GrouplikeDecomposition decompose_p_parts(const GrouplikeSet& g, long long char_p);

struct FiniteGroup {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table;  // identity is element 0
  std::size_t size() const { return names.size(); }
  std::size_t inverse(std::size_t a) const;
};

/// Checks a multiplication table (identity at index 0, associativity, inverses).
void validate_group(const FiniteGroup& g);
/// "Zn" (n >= 1), "S3", "D4", "Q8".
FiniteGroup named_group(const std::string& name);

HopfAlgebra gen_group_algebra(const FiniteGroup& g, const Field& f);
HopfAlgebra gen_dual_group_algebra(const FiniteGroup& g, const Field& f);
/// Taft algebra T_n(q): basis g^i x^j, x g = q g x, g^n = 1, x^n = 0,
/// Delta(x) = x (x) g + 1 (x) x, S(x) = -x g^{-1}. q must be a primitive n-th root of unity.
HopfAlgebra gen_taft(int n, const Scalar& q, const Field& f);
/// Same structure constants without the root-of-unity check; for building
/// deliberately broken instances.
HopfAlgebra gen_taft_unchecked(int n, const Scalar& q, const Field& f);
/// Sweedler's algebra on {1, g, x, gx}: g^2 = 1, x^2 = 0, xg = -gx,
/// Delta(x) = x (x) 1 + g (x) x. Needs characteristic != 2.
HopfAlgebra gen_sweedler(const Field& f);

}  // namespace ftc
