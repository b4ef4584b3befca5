#include "homtest/rep_theory.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "homtest/error.hpp"
#include "homtest/random.hpp"

namespace homtest {

std::vector<int> IrrepSet::dims() const {
  std::vector<int> d;
  d.reserve(irreps.size());
  for (const auto& r : irreps) d.push_back(r.d);
  return d;
}

int IrrepSet::trivial_index() const {
  for (std::size_t i = 0; i < irreps.size(); ++i)
    if (irreps[i].is_trivial) return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> regular_representation(const GroupTable& g) {
  std::vector<std::vector<int>> perms(g.n, std::vector<int>(g.n));
  for (int a = 0; a < g.n; ++a)
    for (int x = 0; x < g.n; ++x) perms[a][x] = g(a, x);
  return perms;
}

Mat regular_matrix(const GroupTable& g, int a) {
  Mat m = Mat::Zero(g.n, g.n);
  for (int x = 0; x < g.n; ++x) m(g(a, x), x) = 1.0;
  return m;
}

// ---------------------------------------------------------------- finalize / order

namespace {

constexpr double kCharacterTol = 1e-6;

bool same_character(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > kCharacterTol) return false;
  return true;
}

double character_norm(const std::vector<cplx>& chi) {
  double s = 0;
  for (const auto& c : chi) s += std::norm(c);
  return s / static_cast<double>(chi.size());
}

std::vector<cplx> traces(const std::vector<Mat>& mats) {
  std::vector<cplx> chi(mats.size());
  for (std::size_t i = 0; i < mats.size(); ++i) chi[i] = mats[i].trace();
  return chi;
}

void refresh(Irrep& r, const GroupTable& g) {
  r.d = r.mats.empty() ? 0 : static_cast<int>(r.mats[0].rows());
  r.mats[g.id] = Mat::Identity(r.d, r.d);
  r.character = traces(r.mats);
  r.is_trivial = r.d == 1 && std::all_of(r.character.begin(), r.character.end(),
                                         [](cplx c) { return std::abs(c - 1.0) < kCharacterTol; });
  if (r.is_trivial) {
    for (auto& m : r.mats) m = Mat::Identity(1, 1);
    r.character.assign(r.character.size(), cplx(1.0, 0.0));
  }
}

}  // namespace

void finalize_irrep(Irrep& r, const GroupTable& g) {
  for (auto& m : r.mats) m = polar_factor(m);
  refresh(r, g);
}

void sort_canonical(IrrepSet& s) {
  auto less = [](const Irrep& a, const Irrep& b) {
    if (a.is_trivial != b.is_trivial) return a.is_trivial;
    if (a.d != b.d) return a.d < b.d;
    for (std::size_t x = 0; x < a.character.size(); ++x) {
      const cplx u = a.character[x], v = b.character[x];
      if (std::abs(u.real() - v.real()) > kCharacterTol) return u.real() < v.real();
      if (std::abs(u.imag() - v.imag()) > kCharacterTol) return u.imag() < v.imag();
    }
    return false;
  };
  std::stable_sort(s.irreps.begin(), s.irreps.end(), less);
}

// ---------------------------------------------------------------- numeric decomposition

namespace {

struct ClusterFailure {};

struct Collected {
  std::vector<Irrep> irreps;
  long dim_square_sum = 0;

  bool known(const std::vector<cplx>& chi) const {
    return std::any_of(irreps.begin(), irreps.end(), [&](const Irrep& r) { return same_character(r.character, chi); });
  }
  void add(std::vector<Mat> mats, std::vector<cplx> chi) {
    Irrep r;
    r.d = static_cast<int>(mats[0].rows());
    r.mats = std::move(mats);
    r.character = std::move(chi);
    dim_square_sum += static_cast<long>(r.d) * r.d;
    irreps.push_back(std::move(r));
  }
};

/// Groups ascending eigenvalues whose consecutive gaps are within
/// tol * spectral range. Returns (start, length) pairs.
std::vector<std::pair<int, int>> clusters(const Eigen::VectorXd& values, double rel_tol) {
  std::vector<std::pair<int, int>> out;
  const int m = static_cast<int>(values.size());
  if (m == 0) return out;
  const double range = values(m - 1) - values(0);
  const double tol = rel_tol * std::max(range, 1e-300);
  int start = 0;
  for (int i = 1; i <= m; ++i) {
    if (i == m || values(i) - values(i - 1) > tol) {
      out.emplace_back(start, i - start);
      start = i;
    }
  }
  return out;
}

void require_unitary(const std::vector<Mat>& mats) {
  for (const auto& m : mats) {
    const Mat dev = m * m.adjoint() - Mat::Identity(m.rows(), m.cols());
    if (dev.norm() > 1e-6) throw ClusterFailure{};
  }
}

/// Integer multiplicity encoded by a character norm; throws when the norm is
/// not close to an integer, which means the subspace was not invariant.
int integral_norm(double norm) {
  const double r = std::round(norm);
  if (r < 1 || std::abs(norm - r) > 1e-4) throw ClusterFailure{};
  return static_cast<int>(r);
}

/// Splits a (reducible) dense unitary representation and records any new
/// irreducible constituents.
void split_dense(const GroupTable& g, const std::vector<Mat>& rep, std::uint64_t seed, double cluster_tol,
                 Collected& out, int depth) {
  if (depth > 16) throw ClusterFailure{};
  const int m = static_cast<int>(rep[0].rows());
  Rng rng(seed);
  const Mat h = random_hermitian(rng, m);
  Mat avg = Mat::Zero(m, m);
  for (const auto& r : rep) avg += r * h * r.adjoint();
  avg /= static_cast<double>(g.n);
  avg = 0.5 * (avg + avg.adjoint());

  const HermitianEig e = eig_hermitian(avg);
  const auto groups = clusters(e.values, cluster_tol);
  if (groups.size() == 1) throw ClusterFailure{};  // no split although reducible
  for (std::size_t c = 0; c < groups.size(); ++c) {
    const Mat w = e.vectors.middleCols(groups[c].first, groups[c].second);
    std::vector<Mat> sub(rep.size());
    for (std::size_t a = 0; a < rep.size(); ++a) sub[a] = w.adjoint() * rep[a] * w;
    require_unitary(sub);
    std::vector<cplx> chi = traces(sub);
    if (out.known(chi)) continue;
    if (integral_norm(character_norm(chi)) == 1) {
      out.add(std::move(sub), std::move(chi));
    } else {
      split_dense(g, sub, derive_seed(seed, c), cluster_tol, out, depth + 1);
    }
    if (out.dim_square_sum >= g.n) return;
  }
}

/// Character of the restriction of L to the column span of V.
std::vector<cplx> regular_sub_character(const GroupTable& g, const Mat& vt) {
  // vt is V^T (m x n): column x holds the coordinates of basis vector e_x.
  std::vector<cplx> chi(g.n);
  for (int a = 0; a < g.n; ++a) {
    cplx s = 0;
    for (int x = 0; x < g.n; ++x) s += vt.col(g(a, x)).dot(vt.col(x));
    chi[a] = s;
  }
  return chi;
}

std::vector<Mat> regular_sub_matrices(const GroupTable& g, const Mat& v) {
  std::vector<Mat> mats(g.n);
  Mat moved(v.rows(), v.cols());
  const Mat vh = v.adjoint();
  for (int a = 0; a < g.n; ++a) {
    for (int x = 0; x < g.n; ++x) moved.row(g(a, x)) = v.row(x);
    mats[a] = vh * moved;
  }
  return mats;
}

std::vector<Irrep> decompose_once(const GroupTable& g, std::uint64_t seed, double cluster_tol) {
  const int n = g.n;
  Rng rng(seed);
  const Mat h = random_hermitian(rng, n);

  // E_a L(a) H L(a)* is G-circulant: entry (x, y) depends only on x^-1 y.
  Vec c = Vec::Zero(n);
  for (int z = 0; z < n; ++z) {
    cplx s = 0;
    for (int b = 0; b < n; ++b) s += h(b, g(b, z));
    c(z) = s / static_cast<double>(n);
  }
  Mat avg(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) avg(x, y) = c(g(g.inv[x], y));
  avg = 0.5 * (avg + avg.adjoint());

  const HermitianEig e = eig_hermitian(avg);
  const auto groups = clusters(e.values, cluster_tol);

  Collected out;
  for (std::size_t ci = 0; ci < groups.size() && out.dim_square_sum < n; ++ci) {
    const Mat v = e.vectors.middleCols(groups[ci].first, groups[ci].second);
    const Mat vt = v.transpose();
    std::vector<cplx> chi = regular_sub_character(g, vt);
    if (out.known(chi)) continue;
    const int multiplicity = integral_norm(character_norm(chi));
    std::vector<Mat> mats = regular_sub_matrices(g, v);
    require_unitary(mats);
    if (multiplicity == 1) {
      out.add(std::move(mats), std::move(chi));
    } else {
      split_dense(g, mats, derive_seed(seed, 1000 + ci), cluster_tol, out, 1);
    }
  }
  if (out.dim_square_sum != n) throw ClusterFailure{};
  return std::move(out.irreps);
}

}  // namespace

IrrepSet decompose_regular(GroupPtr g, const DecomposeOptions& options) {
  if (!g) throw Error(Errc::invalid_argument, "null group");
  if (g->n > kDefaultOrderCap) throw Error(Errc::limit, "group too large for dense decomposition");
  std::string last_problem = "eigenvalue clustering failed";
  for (int attempt = 0; attempt < std::max(1, options.max_retries); ++attempt) {
    const std::uint64_t seed = attempt == 0 ? options.seed : derive_seed(options.seed, attempt);
    try {
      IrrepSet s;
      s.group = g;
      s.method = "numeric";
      s.seed = options.seed;
      s.tol = options.tol;
      s.irreps = decompose_once(*g, seed, options.cluster_tol);
      for (auto& r : s.irreps) finalize_irrep(r, *g);
      sort_canonical(s);
      const IrrepVerification v = verify_irrep_set(*g, s, options.tol);
      s.complete = v.complete;
      if (v.pass) return s;
      last_problem = "certification failed: " + v.to_json().dump();
    } catch (const ClusterFailure&) {
      last_problem = "eigenvalue clustering failed";
    }
  }
  throw Error(Errc::numeric, "decompose_regular(" + g->name + "): " + last_problem + " after " +
                                 std::to_string(options.max_retries) + " attempts");
}

// ---------------------------------------------------------------- closed forms

namespace {

cplx root_of_unity(long num, long den) {
  const long r = ((num % den) + den) % den;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == den) return {-1.0, 0.0};
  if (4 * r == den) return {0.0, 1.0};
  if (4 * r == 3 * den) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den));
}

Irrep scalar_irrep(std::vector<cplx> values) {
  Irrep r;
  r.d = 1;
  for (cplx v : values) r.mats.push_back(Mat::Constant(1, 1, v));
  return r;
}

std::vector<Irrep> cyclic_irreps(int n) {
  std::vector<Irrep> out;
  for (int j = 0; j < n; ++j) {
    std::vector<cplx> v(n);
    for (int k = 0; k < n; ++k) v[k] = root_of_unity(static_cast<long>(j) * k, n);
    out.push_back(scalar_irrep(std::move(v)));
  }
  return out;
}

std::vector<Irrep> elementary_abelian_irreps(int p, int k) {
  int n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  std::vector<Irrep> out;
  for (int v = 0; v < n; ++v) {
    std::vector<cplx> vals(n);
    for (int u = 0; u < n; ++u) {
      long dot = 0;
      int a = v, b = u;
      for (int i = 0; i < k; ++i) {
        dot += static_cast<long>(a % p) * (b % p);
        a /= p;
        b /= p;
      }
      vals[u] = root_of_unity(dot, p);
    }
    out.push_back(scalar_irrep(std::move(vals)));
  }
  return out;
}

// Element r^k s^e has index k + m*e.
std::vector<Irrep> dihedral_irreps(int m) {
  const int n = 2 * m;
  std::vector<Irrep> out;
  auto one_dim = [&](int rot_sign, int refl_sign) {
    std::vector<cplx> v(n);
    for (int x = 0; x < n; ++x) {
      const int k = x % m, e = x / m;
      double s = 1.0;
      if (rot_sign < 0 && k % 2) s = -s;
      if (refl_sign < 0 && e) s = -s;
      v[x] = s;
    }
    return scalar_irrep(std::move(v));
  };
  out.push_back(one_dim(1, 1));
  out.push_back(one_dim(1, -1));
  if (m % 2 == 0) {
    out.push_back(one_dim(-1, 1));
    out.push_back(one_dim(-1, -1));
  }
  Mat flip(2, 2);
  flip << 0, 1, 1, 0;
  for (int j = 1; 2 * j < m; ++j) {
    Irrep r;
    r.d = 2;
    for (int x = 0; x < n; ++x) {
      const int k = x % m, e = x / m;
      Mat rot = Mat::Zero(2, 2);
      rot(0, 0) = root_of_unity(static_cast<long>(j) * k, m);
      rot(1, 1) = root_of_unity(-static_cast<long>(j) * k, m);
      r.mats.push_back(e ? Mat(rot * flip) : rot);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Irrep> closed_form_raw(const GroupSpec& spec, GroupPtr g) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::cyclic: return cyclic_irreps(spec.params[0]);
    case K::elementary_abelian: return elementary_abelian_irreps(spec.params[0], spec.params[1]);
    case K::dihedral: return dihedral_irreps(spec.params[0]);
    case K::direct_product: {
      IrrepSet a, b;
      a.group = build_group(spec.factors[0]);
      b.group = build_group(spec.factors[1]);
      a.irreps = closed_form_raw(spec.factors[0], a.group);
      b.irreps = closed_form_raw(spec.factors[1], b.group);
      return product_irreps(g, a, b).irreps;
    }
    default:
      throw Error(Errc::invalid_argument, "no closed-form irreps for " + spec.to_string());
  }
}

IrrepSet closed_form_on(const GroupSpec& spec, GroupPtr g) {
  IrrepSet s;
  s.group = g;
  s.method = "closed";
  s.irreps = closed_form_raw(spec, g);
  for (auto& r : s.irreps) refresh(r, *g);
  sort_canonical(s);
  long sum = 0;
  for (const auto& r : s.irreps) sum += static_cast<long>(r.d) * r.d;
  s.complete = sum == g->n;
  return s;
}

}  // namespace

bool closed_form_supported(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::cyclic:
    case K::elementary_abelian:
    case K::dihedral: return true;
    case K::direct_product: return closed_form_supported(spec.factors[0]) && closed_form_supported(spec.factors[1]);
    default: return false;
  }
}

IrrepSet closed_form_irreps(const GroupSpec& spec) {
  if (!closed_form_supported(spec))
    throw Error(Errc::invalid_argument, "no closed-form irreps for " + spec.to_string());
  return closed_form_on(spec, build_group(spec));
}

IrrepSet product_irreps(GroupPtr product, const IrrepSet& a, const IrrepSet& b) {
  const int na = a.group->n, nb = b.group->n;
  if (!product || product->n != na * nb) throw Error(Errc::mismatch, "product group order mismatch");
  IrrepSet s;
  s.group = product;
  s.method = "product";
  for (const auto& ra : a.irreps) {
    for (const auto& rb : b.irreps) {
      Irrep r;
      r.d = ra.d * rb.d;
      r.mats.reserve(product->n);
      for (int x = 0; x < product->n; ++x) r.mats.push_back(kron(ra.mats[x / nb], rb.mats[x % nb]));
      refresh(r, *product);
      s.irreps.push_back(std::move(r));
    }
  }
  sort_canonical(s);
  s.complete = a.complete && b.complete;
  return s;
}

IrrepSet compute_irreps(GroupPtr g, IrrepMethod method, const DecomposeOptions& options) {
  if (method != IrrepMethod::numeric) {
    std::optional<GroupSpec> spec;
    try {
      spec = GroupSpec::parse(g->name);
    } catch (const Error&) {
    }
    const bool usable = spec && closed_form_supported(*spec) && build_group(*spec)->mul == g->mul;
    if (usable) {
      IrrepSet s = closed_form_on(*spec, g);
      s.tol = options.tol;
      return s;
    }
    if (method == IrrepMethod::closed)
      throw Error(Errc::invalid_argument, "no closed-form irreps for group '" + g->name + "'");
  }
  return decompose_regular(g, options);
}

int quasirandomness(const IrrepSet& s) {
  if (!s.complete) throw Error(Errc::invalid_argument, "quasirandomness needs a complete irrep set");
  int best = 0;
  for (const auto& r : s.irreps)
    if (!r.is_trivial && (best == 0 || r.d < best)) best = r.d;
  // vacuous on the trivial group; 1 keeps every dimension bound sound
  return best == 0 ? 1 : best;
}

// ---------------------------------------------------------------- verification

json IrrepVerification::to_json() const {
  return {{"tol", tol},
          {"identity", identity},
          {"homomorphism", homomorphism},
          {"unitarity", unitarity},
          {"character_norm", character_norm},
          {"character_orthogonality", character_orthogonality},
          {"schur", schur},
          {"dim_square_sum", dim_square_sum},
          {"trivial_count", trivial_count},
          {"complete", complete},
          {"pass", pass}};
}

IrrepVerification verify_irrep_set(const GroupTable& g, const IrrepSet& s, double tol) {
  IrrepVerification v;
  v.tol = tol;
  const int n = g.n;
  const double dn = static_cast<double>(n);
  long cols = 0;
  for (const auto& r : s.irreps) {
    if (static_cast<int>(r.mats.size()) != n) throw Error(Errc::mismatch, "irrep has wrong element count");
    v.dim_square_sum += static_cast<long>(r.d) * r.d;
    v.trivial_count += r.is_trivial;
    cols += static_cast<long>(r.d) * r.d;
    const Mat eye = Mat::Identity(r.d, r.d);
    v.identity = std::max(v.identity, (r.mats[g.id] - eye).norm());
    for (int x = 0; x < n; ++x) {
      v.unitarity = std::max(v.unitarity, (r.mats[x] * r.mats[x].adjoint() - eye).norm());
      for (int y = 0; y < n; ++y)
        v.homomorphism = std::max(v.homomorphism, (r.mats[x] * r.mats[y] - r.mats[g(x, y)]).norm());
    }
    v.character_norm = std::max(v.character_norm, std::abs(character_norm(traces(r.mats)) - 1.0));
  }
  for (std::size_t a = 0; a < s.irreps.size(); ++a)
    for (std::size_t b = a + 1; b < s.irreps.size(); ++b) {
      cplx ip = 0;
      for (int x = 0; x < n; ++x) ip += s.irreps[a].mats[x].trace() * std::conj(s.irreps[b].mats[x].trace());
      v.character_orthogonality = std::max(v.character_orthogonality, std::abs(ip / dn));
    }

  // Schur orthogonality of all matrix coefficients at once: with R(x, c) the
  // coefficient c = (rho, i, j) at x, R^T conj(R) / n must be diag(1/d_rho).
  Mat coeffs(n, cols);
  Eigen::VectorXd expected(cols);
  long c = 0;
  for (const auto& r : s.irreps)
    for (int i = 0; i < r.d; ++i)
      for (int j = 0; j < r.d; ++j, ++c) {
        for (int x = 0; x < n; ++x) coeffs(x, c) = r.mats[x](i, j);
        expected(c) = 1.0 / r.d;
      }
  Mat gram = coeffs.transpose() * coeffs.conjugate() / dn;
  for (long i = 0; i < cols; ++i) gram(i, i) -= expected(i);
  v.schur = cols ? gram.cwiseAbs().maxCoeff() : 0.0;

  v.complete = v.dim_square_sum == n;
  v.pass = v.complete && v.trivial_count == 1 && v.identity <= tol && v.homomorphism <= tol &&
           v.unitarity <= tol && v.character_norm <= tol && v.character_orthogonality <= tol && v.schur <= tol;
  return v;
}

// ---------------------------------------------------------------- cache files

namespace {

void put_f64(std::ofstream& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
  out.write(bytes, 8);
}

double get_f64(std::ifstream& in) {
  unsigned char bytes[8];
  in.read(reinterpret_cast<char*>(bytes), 8);
  if (!in) throw Error(Errc::parse, "irrep blob truncated");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

json header(const IrrepSet& s) {
  return {{"group", s.group->name}, {"n", s.group->n}, {"dims", s.dims()},
          {"tol", s.tol},           {"seed", s.seed},  {"method", s.method}};
}

}  // namespace

json irreps_to_json(const IrrepSet& s) {
  json j = header(s);
  json list = json::array();
  for (const auto& r : s.irreps) {
    json mats = json::array();
    for (const auto& m : r.mats) mats.push_back(matrix_to_json(m));
    list.push_back({{"d", r.d}, {"mats", std::move(mats)}});
  }
  j["irreps"] = std::move(list);
  return j;
}

IrrepSet irreps_from_json(const json& j, GroupPtr g) {
  try {
    if (j.at("n").get<int>() != g->n) throw Error(Errc::mismatch, "irrep cache is for a group of different order");
    const auto name = j.value("group", std::string());
    if (!name.empty() && name != g->name) throw Error(Errc::mismatch, "irrep cache is for group '" + name + "'");
    IrrepSet s;
    s.group = g;
    s.method = j.value("method", std::string("cache"));
    s.seed = j.value("seed", std::uint64_t{0});
    s.tol = j.value("tol", 1e-8);
    for (const auto& item : j.at("irreps")) {
      Irrep r;
      for (const auto& m : item.at("mats")) r.mats.push_back(matrix_from_json(m));
      if (static_cast<int>(r.mats.size()) != g->n) throw Error(Errc::parse, "irrep entry has wrong element count");
      refresh(r, *g);
      s.irreps.push_back(std::move(r));
    }
    long sum = 0;
    for (const auto& r : s.irreps) sum += static_cast<long>(r.d) * r.d;
    s.complete = sum == g->n;
    return s;
  } catch (const json::exception& e) {
    throw Error(Errc::parse, std::string("irrep cache: ") + e.what());
  }
}

void save_irreps(const IrrepSet& s, const std::string& path, bool binary_blob) {
  if (!binary_blob) {
    write_json_file(path, irreps_to_json(s));
    return;
  }
  const std::string blob = path + ".bin";
  std::ofstream out(blob, std::ios::binary);
  if (!out) throw Error(Errc::io, "cannot write " + blob);
  for (const auto& r : s.irreps)
    for (const auto& m : r.mats)
      for (int i = 0; i < r.d; ++i)
        for (int k = 0; k < r.d; ++k) {
          put_f64(out, m(i, k).real());
          put_f64(out, m(i, k).imag());
        }
  if (!out) throw Error(Errc::io, "write failed: " + blob);
  json j = header(s);
  j["blob"] = std::filesystem::path(blob).filename().string();
  write_json_file(path, j);
}

IrrepSet load_irreps(const std::string& path, GroupPtr g) {
  json j = read_json_file(path);
  if (!j.contains("blob")) return irreps_from_json(j, g);

  const auto blob = std::filesystem::path(path).parent_path() / j["blob"].get<std::string>();
  std::ifstream in(blob, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot open " + blob.string());
  json list = json::array();
  for (int d : j.at("dims").get<std::vector<int>>()) {
    json mats = json::array();
    for (int x = 0; x < g->n; ++x) {
      Mat m(d, d);
      for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
          const double re = get_f64(in);
          m(i, k) = cplx(re, get_f64(in));
        }
      mats.push_back(matrix_to_json(m));
    }
    list.push_back({{"d", d}, {"mats", std::move(mats)}});
  }
  j["irreps"] = std::move(list);
  return irreps_from_json(j, g);
}

}  // namespace homtest
