#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homtest/group.hpp"
#include "homtest/linalg.hpp"

namespace homtest {

/// A unitary irreducible representation, stored as one d x d matrix per
/// group element together with its character.
struct Irrep {
  int d = 0;
  std::vector<Mat> mats;
  std::vector<cplx> character;
  bool is_trivial = false;
};

/// The irreducible representations of one group in canonical order: the
/// trivial irrep first, then ascending dimension, then lexicographic
/// character. Conjugate pairs are distinct entries unless self-conjugate.
struct IrrepSet {
  GroupPtr group;
  std::vector<Irrep> irreps;
  bool complete = false;
  std::string method;
  std::uint64_t seed = 0;
  double tol = 1e-8;

  std::size_t size() const { return irreps.size(); }
  const Irrep& operator[](std::size_t i) const { return irreps[i]; }
  std::vector<int> dims() const;
  int trivial_index() const;
};

/// Left regular action as permutations: perm[a][x] = a*x, i.e. L(a) e_x = e_{ax}.
std::vector<std::vector<int>> regular_representation(const GroupTable& g);
/// Dense n x n permutation matrix of L(a).
Mat regular_matrix(const GroupTable& g, int a);

struct DecomposeOptions {
  std::uint64_t seed = 1;
  double tol = 1e-8;           // certification tolerance for the final set
  double cluster_tol = 1e-6;   // eigenvalue grouping, relative to spectral range
  int max_retries = 5;
};

/// Splits the regular representation into irreducibles by diagonalising a
/// random Hermitian element of its commutant. Output is certified with
/// verify_irrep_set at options.tol; throws Error(numeric) when no complete
/// set is found within the retry budget.
IrrepSet decompose_regular(GroupPtr g, const DecomposeOptions& options = {});

/// Exact irreps for cyclic, elementary abelian and dihedral groups and
/// direct products of those.
IrrepSet closed_form_irreps(const GroupSpec& spec);
bool closed_form_supported(const GroupSpec& spec);

/// All tensor products a_i (x) b_j, as irreps of `product` (= direct product
/// with index a*|B| + b).
IrrepSet product_irreps(GroupPtr product, const IrrepSet& a, const IrrepSet& b);

enum class IrrepMethod { automatic, closed, numeric };

/// automatic: closed form when the group name parses to a supported catalog
/// spec, otherwise decompose_regular.
IrrepSet compute_irreps(GroupPtr g, IrrepMethod method, const DecomposeOptions& options = {});

/// Minimum dimension over nontrivial irreps; 1 for the trivial group.
int quasirandomness(const IrrepSet& s);

struct IrrepVerification {
  double tol = 0;
  double identity = 0;          // max ||rho(id) - I||_HS
  double homomorphism = 0;      // max ||rho(x)rho(y) - rho(xy)||_HS
  double unitarity = 0;         // max ||rho(x)rho(x)* - I||_HS
  double character_norm = 0;    // max |E|chi|^2 - 1|
  double character_orthogonality = 0;
  double schur = 0;             // max deviation of E[rho_ij conj(sigma_kl)] from delta/d
  long dim_square_sum = 0;
  int trivial_count = 0;
  bool complete = false;
  bool pass = false;

  json to_json() const;
};

IrrepVerification verify_irrep_set(const GroupTable& g, const IrrepSet& s, double tol);

/// Recomputes characters and the trivial flag, snaps rho(id) to I, and
/// re-unitarizes every matrix by its polar factor.
void finalize_irrep(Irrep& r, const GroupTable& g);
void sort_canonical(IrrepSet& s);

// Cache file: JSON header plus matrices, either inline or in a side blob of
// little-endian f64 (re, im) pairs.
json irreps_to_json(const IrrepSet& s);
IrrepSet irreps_from_json(const json& j, GroupPtr g);
void save_irreps(const IrrepSet& s, const std::string& path, bool binary_blob);
IrrepSet load_irreps(const std::string& path, GroupPtr g);

}  // namespace homtest
