#pragma once

// Modules over finite-dimensional algebras: composition factors by a seeded
// MeatAxe, simple modules, blocks, and the fusion data of a Hopf algebra.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ftc/algebra.hpp"
#include "ftc/fusion.hpp"
#include "ftc/hopf.hpp"

namespace ftc {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct RepModule {
  Field field = Field::rationals();
  std::size_t dim = 0;
  std::vector<Matrix> action;  // one dim x dim matrix per algebra basis element

  /// Matrix of the algebra element with coordinates `x`.
  Matrix act(const Vec& x) const;
};

struct ModuleViolation {
  std::vector<std::size_t> indices;  // (i, j) for products, {} for the unit
  std::string detail;
};

/// rho(b_i) rho(b_j) = rho(b_i b_j) for all basis pairs and rho(1) = id.
std::vector<ModuleViolation> verify_module(const Algebra& a, const RepModule& m);

RepModule regular_module(const Algebra& a);
/// One-dimensional module b -> counit(b).
RepModule trivial_module(const Algebra& a, const Vec& counit);
/// Submodule on the columns of `basis` and the quotient by it.
RepModule submodule(const RepModule& m, const Matrix& basis);
RepModule quotient_module(const RepModule& m, const Matrix& basis);

/// Smallest submodule containing `v` (or, with `transposed`, the same for the
/// transposed action), as a column basis.
Matrix spin(const RepModule& m, const std::vector<Vec>& seeds, bool transposed = false);

struct CompositionFactor {
  RepModule module;
  std::size_t multiplicity = 0;
};

struct CompositionSeries {
  std::vector<CompositionFactor> factors;
};

/// Composition factors over a finite field, each certified irreducible by
/// Norton's test, grouped up to isomorphism. Deterministic in `seed`. Throws
/// UnsupportedField over infinite fields.
CompositionSeries chop(const RepModule& m, std::uint64_t seed = kDefaultSeed);

/// Norton's irreducibility test with random elements; nullopt if irreducible,
/// else the column basis of a proper nonzero submodule.
std::optional<Matrix> find_submodule(const RepModule& m, std::uint64_t seed = kDefaultSeed);

/// Basis of Hom_A(m, n) as matrices X (n.dim x m.dim) with X rho_m(b) = rho_n(b) X.
std::vector<Matrix> intertwiners(const RepModule& m, const RepModule& n);
/// True when an invertible intertwiner is found (exact for simple modules).
bool iso_test(const RepModule& m, const RepModule& n);

struct SimpleCatalog {
  std::vector<std::string> names;  // "S0", "S1", ...
  std::vector<RepModule> modules;
  std::size_t size() const { return modules.size(); }
  /// Index of the simple isomorphic to `s`; size() when absent.
  std::size_t find(const RepModule& s) const;
};

/// Simple modules from the composition factors of the regular module. With a
/// counit the trivial module is S0; the rest are sorted by dimension and then
/// by their action matrices. Throws SplittingError when some simple has an
/// endomorphism algebra of dimension > 1.
SimpleCatalog simples(const Algebra& a, std::uint64_t seed = kDefaultSeed,
                      const std::optional<Vec>& counit = std::nullopt);

/// Blocks from primitive central idempotents, each checked to act as the
/// identity on the simples of its class and as zero on the rest. The result is
/// compared with ext_linkage_blocks; disagreement throws std::logic_error.
BlockPartition blocks(const Algebra& a, const SimpleCatalog& s);
/// Central-idempotent blocks without the cross-check.
BlockPartition idempotent_blocks(const Algebra& a, const SimpleCatalog& s);
/// Blocks as the connected components of the graph joining S and T when
/// Ext^1(S, T) != 0, computed as derivations modulo inner derivations.
BlockPartition ext_linkage_blocks(const Algebra& a, const SimpleCatalog& s);
/// dim Ext^1_A(s, t).
std::size_t ext1_dim(const Algebra& a, const RepModule& s, const RepModule& t);

/// Action of b through Delta(b) on m (x) n.
RepModule tensor_module(const HopfAlgebra& h, const RepModule& m, const RepModule& n);
/// Action of b by rho(S(b))^T.
RepModule dual_module(const HopfAlgebra& h, const RepModule& m);

struct HopfFusion {
  SimpleCatalog simples;
  FusionRing ring;
  BlockPartition blocks;
};

/// Simples, multiplicities N_ij^k from chopping S_i (x) S_j, duals, and blocks.
/// The ring is re-validated; a violation throws std::logic_error.
HopfFusion fusion_from_hopf(const HopfAlgebra& h, std::uint64_t seed = kDefaultSeed);

/// lambda with rho_s(z) = lambda id; throws NonScalarAction otherwise.
Scalar scalar_action(const Vec& z, const RepModule& s);

}  // namespace ftc
