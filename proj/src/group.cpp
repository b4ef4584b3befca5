#include "homtest/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "homtest/error.hpp"
#include "homtest/random.hpp"

namespace homtest {

// ---------------------------------------------------------------- GroupSpec

GroupSpec GroupSpec::cyclic(int n) { return {Kind::cyclic, {n}, {}, {}, {}}; }
GroupSpec GroupSpec::elementary_abelian(int p, int k) { return {Kind::elementary_abelian, {p, k}, {}, {}, {}}; }
GroupSpec GroupSpec::dihedral(int n) { return {Kind::dihedral, {n}, {}, {}, {}}; }
GroupSpec GroupSpec::symmetric(int n) { return {Kind::symmetric, {n}, {}, {}, {}}; }
GroupSpec GroupSpec::alternating(int n) { return {Kind::alternating, {n}, {}, {}, {}}; }
GroupSpec GroupSpec::quaternion8() { return {Kind::quaternion8, {}, {}, {}, {}}; }
GroupSpec GroupSpec::direct_product(GroupSpec a, GroupSpec b) {
  GroupSpec s{Kind::direct_product, {}, {}, {}, {}};
  s.factors.push_back(std::move(a));
  s.factors.push_back(std::move(b));
  return s;
}
GroupSpec GroupSpec::from_generators(std::vector<std::vector<int>> gens) {
  GroupSpec s{Kind::from_generators, {}, {}, std::move(gens), {}};
  return s;
}
GroupSpec GroupSpec::from_table(std::string path) { return {Kind::from_table, {}, {}, {}, std::move(path)}; }

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : s_(text) {}

  GroupSpec parse_all() {
    GroupSpec spec = parse_spec();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::parse, "group spec '" + std::string(s_) + "': " + why + " at offset " +
                                 std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a family name");
    return std::string(s_.substr(start, pos_ - start));
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    try {
      return std::stoi(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      fail("integer out of range");
    }
  }

  std::vector<int> int_list() {
    expect('[');
    std::vector<int> out;
    if (accept(']')) return out;
    do {
      out.push_back(integer());
    } while (accept(','));
    expect(']');
    return out;
  }

  std::vector<int> int_args(std::size_t count) {
    std::vector<int> out;
    for (std::size_t i = 0; i < count; ++i) {
      if (i) expect(',');
      out.push_back(integer());
    }
    return out;
  }

  GroupSpec parse_spec() {
    const std::string name = ident();
    using K = GroupSpec::Kind;
    if (name == "quaternion8" || name == "Q8") {
      if (accept('(')) expect(')');
      return GroupSpec::quaternion8();
    }
    expect('(');
    GroupSpec spec;
    if (name == "cyclic") {
      spec = {K::cyclic, int_args(1), {}, {}, {}};
    } else if (name == "elementary_abelian") {
      spec = {K::elementary_abelian, int_args(2), {}, {}, {}};
    } else if (name == "dihedral") {
      spec = {K::dihedral, int_args(1), {}, {}, {}};
    } else if (name == "symmetric") {
      spec = {K::symmetric, int_args(1), {}, {}, {}};
    } else if (name == "alternating") {
      spec = {K::alternating, int_args(1), {}, {}, {}};
    } else if (name == "direct_product") {
      spec = parse_spec();
      expect(',');
      do {
        spec = GroupSpec::direct_product(std::move(spec), parse_spec());
      } while (accept(','));
    } else if (name == "from_generators") {
      expect('[');
      std::vector<std::vector<int>> gens;
      if (!accept(']')) {
        do {
          gens.push_back(int_list());
        } while (accept(','));
        expect(']');
      }
      spec = GroupSpec::from_generators(std::move(gens));
    } else if (name == "from_table") {
      skip_ws();
      std::string path;
      if (accept('"')) {
        while (pos_ < s_.size() && s_[pos_] != '"') path.push_back(s_[pos_++]);
        expect('"');
      } else {
        while (pos_ < s_.size() && s_[pos_] != ')') path.push_back(s_[pos_++]);
        while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
      }
      if (path.empty()) fail("from_table needs a path");
      spec = GroupSpec::from_table(path);
    } else {
      fail("unknown group family '" + name + "'");
    }
    expect(')');
    return spec;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void require(bool cond, const std::string& why) {
  if (!cond) throw Error(Errc::invalid_argument, why);
}

void check_params(const GroupSpec& s) {
  using K = GroupSpec::Kind;
  switch (s.kind) {
    case K::cyclic:
    case K::dihedral:
    case K::symmetric:
    case K::alternating:
      require(s.params.size() == 1 && s.params[0] >= 1, "group parameter must be a positive integer");
      break;
    case K::elementary_abelian: {
      require(s.params.size() == 2 && s.params[0] >= 2 && s.params[1] >= 1,
              "elementary_abelian(p,k) needs p >= 2 and k >= 1");
      const int p = s.params[0];
      for (int d = 2; d * d <= p; ++d) require(p % d != 0, "elementary_abelian: p must be prime");
      break;
    }
    case K::quaternion8:
      break;
    case K::direct_product:
      require(s.factors.size() == 2, "direct_product takes two factors");
      check_params(s.factors[0]);
      check_params(s.factors[1]);
      break;
    case K::from_generators: {
      require(!s.generators.empty(), "from_generators needs at least one generator");
      const std::size_t degree = s.generators[0].size();
      require(degree >= 1, "generator permutations must be nonempty");
      for (const auto& g : s.generators) {
        require(g.size() == degree, "generator permutations must share a common degree");
        std::vector<int> sorted = g;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < degree; ++i)
          require(sorted[i] == static_cast<int>(i), "generator is not a permutation of 0..degree-1");
      }
      break;
    }
    case K::from_table:
      require(!s.path.empty(), "from_table needs a path");
      break;
  }
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  GroupSpec spec = SpecParser(text).parse_all();
  check_params(spec);
  return spec;
}

std::string GroupSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::cyclic: os << "cyclic(" << params[0] << ")"; break;
    case Kind::elementary_abelian: os << "elementary_abelian(" << params[0] << "," << params[1] << ")"; break;
    case Kind::dihedral: os << "dihedral(" << params[0] << ")"; break;
    case Kind::symmetric: os << "symmetric(" << params[0] << ")"; break;
    case Kind::alternating: os << "alternating(" << params[0] << ")"; break;
    case Kind::quaternion8: os << "quaternion8"; break;
    case Kind::direct_product:
      os << "direct_product(" << factors[0].to_string() << "," << factors[1].to_string() << ")";
      break;
    case Kind::from_generators: {
      os << "from_generators([";
      for (std::size_t g = 0; g < generators.size(); ++g) {
        if (g) os << ",";
        os << "[";
        for (std::size_t i = 0; i < generators[g].size(); ++i) os << (i ? "," : "") << generators[g][i];
        os << "]";
      }
      os << "])";
      break;
    }
    case Kind::from_table: os << "from_table(" << path << ")"; break;
  }
  return os.str();
}

std::uint64_t GroupSpec::predicted_order() const {
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f = saturating_mul(f, static_cast<std::uint64_t>(i));
    return f;
  };
  switch (kind) {
    case Kind::cyclic: return params[0];
    case Kind::elementary_abelian: {
      std::uint64_t o = 1;
      for (int i = 0; i < params[1]; ++i) o = saturating_mul(o, static_cast<std::uint64_t>(params[0]));
      return o;
    }
    case Kind::dihedral: return 2ULL * params[0];
    case Kind::symmetric: return factorial(params[0]);
    case Kind::alternating: return params[0] <= 1 ? 1 : factorial(params[0]) / 2;
    case Kind::quaternion8: return 8;
    case Kind::direct_product:
      return saturating_mul(factors[0].predicted_order(), factors[1].predicted_order());
    case Kind::from_generators:
    case Kind::from_table: return 0;
  }
  return 0;
}

// ---------------------------------------------------------------- construction

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& x, const Perm& y) {
  Perm out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[y[i]];
  return out;
}

/// Breadth-first closure from the identity, right-multiplying by generators
/// in the order given. The visit order is the element numbering.
GroupTable closure(const std::vector<Perm>& gens, int cap) {
  const std::size_t degree = gens.front().size();
  Perm identity(degree);
  std::iota(identity.begin(), identity.end(), 0);

  std::vector<Perm> elements{identity};
  std::map<Perm, int> index{{identity, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Perm next = compose(elements[head], g);
      if (index.count(next)) continue;
      if (static_cast<int>(elements.size()) >= cap)
        throw Error(Errc::limit, "generator closure exceeds order cap " + std::to_string(cap));
      index.emplace(next, static_cast<int>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  GroupTable t;
  t.n = static_cast<int>(elements.size());
  t.id = 0;
  t.mul.resize(static_cast<std::size_t>(t.n) * t.n);
  t.inv.resize(t.n);
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) t.mul[static_cast<std::size_t>(x) * t.n + y] = index.at(compose(elements[x], elements[y]));
    Perm inverse(degree);
    for (std::size_t i = 0; i < degree; ++i) inverse[elements[x][i]] = static_cast<int>(i);
    t.inv[x] = index.at(inverse);
  }
  return t;
}

GroupTable cyclic_table(int n) {
  GroupTable t;
  t.n = n;
  t.mul.resize(static_cast<std::size_t>(n) * n);
  t.inv.resize(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) t.mul[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
    t.inv[x] = (n - x) % n;
  }
  return t;
}

// Index of a vector in Z_p^k is sum v_i p^i.
GroupTable elementary_abelian_table(int p, int k) {
  int n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  GroupTable t;
  t.n = n;
  t.mul.resize(static_cast<std::size_t>(n) * n);
  t.inv.resize(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int a = x, b = y, z = 0, place = 1;
      for (int i = 0; i < k; ++i) {
        z += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
      }
      t.mul[static_cast<std::size_t>(x) * n + y] = z;
    }
    int a = x, z = 0, place = 1;
    for (int i = 0; i < k; ++i) {
      z += ((p - a % p) % p) * place;
      a /= p;
      place *= p;
    }
    t.inv[x] = z;
  }
  return t;
}

// r^k s^e has index k + m*e; (r^k s^e)(r^l s^f) = r^(k + (-1)^e l) s^(e+f).
GroupTable dihedral_table(int m) {
  GroupTable t;
  t.n = 2 * m;
  t.mul.resize(static_cast<std::size_t>(t.n) * t.n);
  t.inv.resize(t.n);
  for (int x = 0; x < t.n; ++x) {
    const int k = x % m, e = x / m;
    for (int y = 0; y < t.n; ++y) {
      const int l = y % m, f = y / m;
      const int r = ((k + (e ? -l : l)) % m + m) % m;
      t.mul[static_cast<std::size_t>(x) * t.n + y] = r + m * ((e + f) % 2);
    }
    t.inv[x] = e ? x : (m - k) % m;
  }
  return t;
}

// Elements ordered 1, -1, i, -i, j, -j, k, -k: index = 2*unit + (negative).
GroupTable quaternion_table() {
  // unit products e_a e_b = sign * e_c for units (1, i, j, k)
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  GroupTable t;
  t.n = 8;
  t.mul.resize(64);
  t.inv.resize(8);
  t.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int a = x / 2, b = y / 2;
      int s = sign[a][b] * ((x % 2) ? -1 : 1) * ((y % 2) ? -1 : 1);
      t.mul[x * 8 + y] = 2 * unit[a][b] + (s < 0 ? 1 : 0);
    }
  }
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      if (t.mul[x * 8 + y] == 0) t.inv[x] = y;
  return t;
}

GroupTable product_table(const GroupTable& a, const GroupTable& b) {
  GroupTable t;
  t.n = a.n * b.n;
  t.id = a.id * b.n + b.id;
  t.mul.resize(static_cast<std::size_t>(t.n) * t.n);
  t.inv.resize(t.n);
  for (int x = 0; x < t.n; ++x) {
    const int xa = x / b.n, xb = x % b.n;
    for (int y = 0; y < t.n; ++y) {
      const int ya = y / b.n, yb = y % b.n;
      t.mul[static_cast<std::size_t>(x) * t.n + y] = a(xa, ya) * b.n + b(xb, yb);
    }
    t.inv[x] = a.inv[xa] * b.n + b.inv[xb];
  }
  return t;
}

std::vector<Perm> symmetric_generators(int n) {
  if (n <= 1) return {Perm{0}};
  Perm swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  if (n == 2) return {swap};
  return {swap, cycle};
}

std::vector<Perm> alternating_generators(int n) {
  if (n <= 2) return {Perm{0}};
  std::vector<Perm> gens;
  for (int k = 2; k < n; ++k) {
    Perm c(n);
    std::iota(c.begin(), c.end(), 0);
    c[0] = 1;
    c[1] = k;
    c[k] = 0;
    gens.push_back(c);
  }
  return gens;
}

GroupTable build_table(const GroupSpec& spec, int cap) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::cyclic: return cyclic_table(spec.params[0]);
    case K::elementary_abelian: return elementary_abelian_table(spec.params[0], spec.params[1]);
    case K::dihedral: return dihedral_table(spec.params[0]);
    case K::symmetric: return closure(symmetric_generators(spec.params[0]), cap);
    case K::alternating: return closure(alternating_generators(spec.params[0]), cap);
    case K::quaternion8: return quaternion_table();
    case K::direct_product: {
      const GroupTable a = build_table(spec.factors[0], cap);
      const GroupTable b = build_table(spec.factors[1], cap);
      return product_table(a, b);
    }
    case K::from_generators: return closure(spec.generators, cap);
    case K::from_table: {
      GroupPtr g = load_group(spec.path);
      if (g->n > cap) throw Error(Errc::limit, "table order exceeds cap");
      return *g;
    }
  }
  throw Error(Errc::invalid_argument, "unknown group family");
}

}  // namespace

GroupPtr build_group(const GroupSpec& spec, int order_cap) {
  check_params(spec);
  const std::uint64_t predicted = spec.predicted_order();
  if (predicted > static_cast<std::uint64_t>(order_cap))
    throw Error(Errc::limit, spec.to_string() + " has order " + std::to_string(predicted) +
                                 ", above the cap " + std::to_string(order_cap));
  GroupTable t = build_table(spec, order_cap);
  if (spec.kind != GroupSpec::Kind::from_table) t.name = spec.to_string();
  return std::make_shared<const GroupTable>(std::move(t));
}

// ---------------------------------------------------------------- verification

bool GroupVerification::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.pass; });
}

json GroupVerification::to_json() const {
  json j;
  j["mode"] = mode;
  j["pass"] = all_pass();
  json arr = json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"checked", c.checked}, {"violations", c.violations}});
  j["checks"] = arr;
  return j;
}

GroupVerification verify_group(const GroupTable& g, VerifyMode mode) {
  GroupVerification report;
  report.mode = mode.exhaustive ? "exhaustive"
                                : "sampled(" + std::to_string(mode.trials) + ",seed=" + std::to_string(mode.seed) + ")";
  const int n = g.n;
  auto in_range = [n](int v) { return v >= 0 && v < n; };

  InvariantCheck shape{"shape", true, 1, 0};
  if (n <= 0 || g.mul.size() != static_cast<std::size_t>(n) * n || g.inv.size() != static_cast<std::size_t>(n) ||
      !in_range(g.id)) {
    shape.pass = false;
    shape.violations = 1;
    report.checks.push_back(shape);
    return report;
  }
  for (int v : g.mul) shape.violations += !in_range(v);
  for (int v : g.inv) shape.violations += !in_range(v);
  shape.pass = shape.violations == 0;
  report.checks.push_back(shape);
  if (!shape.pass) return report;

  InvariantCheck identity{"identity", true, 0, 0};
  InvariantCheck inverse{"inverse", true, 0, 0};
  for (int x = 0; x < n; ++x) {
    identity.checked += 2;
    identity.violations += (g(g.id, x) != x) + (g(x, g.id) != x);
    inverse.checked += 2;
    inverse.violations += (g(x, g.inv[x]) != g.id) + (g(g.inv[x], x) != g.id);
  }

  InvariantCheck rows{"row_permutation", true, static_cast<std::uint64_t>(n), 0};
  InvariantCheck cols{"column_permutation", true, static_cast<std::uint64_t>(n), 0};
  std::vector<int> seen(n);
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) seen[g(x, y)]++;
    rows.violations += std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; });
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) seen[g(y, x)]++;
    cols.violations += std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; });
  }

  InvariantCheck assoc{"associativity", true, 0, 0};
  if (mode.exhaustive) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int xy = g(x, y);
        for (int z = 0; z < n; ++z) assoc.violations += g(xy, z) != g(x, g(y, z));
      }
    assoc.checked = static_cast<std::uint64_t>(n) * n * n;
  } else {
    Rng rng(mode.seed);
    for (std::uint64_t i = 0; i < mode.trials; ++i) {
      const int x = static_cast<int>(rng.index(n));
      const int y = static_cast<int>(rng.index(n));
      const int z = static_cast<int>(rng.index(n));
      assoc.violations += g(g(x, y), z) != g(x, g(y, z));
    }
    assoc.checked = mode.trials;
  }

  for (InvariantCheck* c : {&identity, &inverse, &rows, &cols, &assoc}) {
    c->pass = c->violations == 0;
    report.checks.push_back(*c);
  }
  return report;
}

GroupPtr make_group(GroupTable table) {
  const VerifyMode mode = table.n <= 512 ? VerifyMode::exhaustive_mode() : VerifyMode::sampled(100000, 1);
  const GroupVerification v = verify_group(table, mode);
  if (!v.all_pass()) {
    std::string failed;
    for (const auto& c : v.checks)
      if (!c.pass) failed += (failed.empty() ? "" : ", ") + c.name;
    throw Error(Errc::parse, "malformed group table '" + table.name + "': " + failed);
  }
  return std::make_shared<const GroupTable>(std::move(table));
}

// ---------------------------------------------------------------- JSON

json group_to_json(const GroupTable& g) {
  json j;
  j["name"] = g.name;
  j["n"] = g.n;
  j["id"] = g.id;
  json rows = json::array();
  for (int x = 0; x < g.n; ++x) {
    json row = json::array();
    for (int y = 0; y < g.n; ++y) row.push_back(g(x, y));
    rows.push_back(std::move(row));
  }
  j["mul"] = std::move(rows);
  j["inv"] = g.inv;
  if (!g.labels.empty()) j["labels"] = g.labels;
  return j;
}

GroupPtr group_from_json(const json& j) {
  try {
    GroupTable t;
    t.name = j.value("name", std::string("unnamed"));
    t.n = j.at("n").get<int>();
    t.id = j.at("id").get<int>();
    const auto& rows = j.at("mul");
    if (!rows.is_array() || static_cast<int>(rows.size()) != t.n) throw Error(Errc::parse, "mul must have n rows");
    t.mul.reserve(static_cast<std::size_t>(t.n) * t.n);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != t.n) throw Error(Errc::parse, "mul rows must have n entries");
      for (const auto& v : row) t.mul.push_back(v.get<int>());
    }
    t.inv = j.at("inv").get<std::vector<int>>();
    if (j.contains("labels")) t.labels = j["labels"].get<std::vector<std::string>>();
    return make_group(std::move(t));
  } catch (const json::exception& e) {
    throw Error(Errc::parse, std::string("group json: ") + e.what());
  }
}

GroupPtr load_group(const std::string& path) { return group_from_json(read_json_file(path)); }

GroupPtr group_from_name(const std::string& name, int order_cap) {
  return build_group(GroupSpec::parse(name), order_cap);
}

std::vector<std::string> demo_catalog(int max_order) {
  static const std::vector<std::string> all = {
      "cyclic(1)",
      "cyclic(2)",
      "cyclic(5)",
      "cyclic(9)",
      "cyclic(27)",
      "cyclic(32)",
      "cyclic(81)",
      "elementary_abelian(2,3)",
      "elementary_abelian(3,2)",
      "elementary_abelian(2,6)",
      "quaternion8",
      "dihedral(3)",
      "dihedral(4)",
      "dihedral(5)",
      "dihedral(12)",
      "symmetric(3)",
      "symmetric(4)",
      "symmetric(5)",
      "alternating(4)",
      "alternating(5)",
      "direct_product(cyclic(2),cyclic(2))",
      "direct_product(elementary_abelian(2,2),symmetric(3))",
      "direct_product(quaternion8,cyclic(3))",
      "direct_product(dihedral(4),symmetric(3))",
      "direct_product(alternating(5),cyclic(3))",
      "from_generators([[1,2,0,3],[1,0,2,3]])",
      "from_generators([[1,2,3,4,5,6,0],[0,2,4,6,1,3,5]])",
  };
  std::vector<std::string> out;
  for (const auto& name : all)
    if (GroupSpec::parse(name).predicted_order() <= static_cast<std::uint64_t>(max_order)) out.push_back(name);
  return out;
}

}  // namespace homtest
