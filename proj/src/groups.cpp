#include "polyspec/groups.hpp"

#include <numeric>
#include <set>

namespace polyspec {

namespace detail {

struct GroupImpl {
  virtual ~GroupImpl() = default;
  virtual int mul(int a, int b) const = 0;
  int order = 0;
  int identity = 0;
  std::vector<int> inverse;
  bool tabulated = false;
};

namespace {

struct TableGroup final : GroupImpl {
  std::vector<int> table;
  int mul(int a, int b) const override { return table[static_cast<std::size_t>(a) * order + b]; }
};

struct ProductGroup final : GroupImpl {
  FiniteGroup left, right;
  int right_order = 0;
  int mul(int a, int b) const override {
    return left.mul(a / right_order, b / right_order) * right_order +
           right.mul(a % right_order, b % right_order);
  }
};

struct QuotientGroup final : GroupImpl {
  FiniteGroup parent;
  std::vector<int> representative, project;
  int mul(int a, int b) const override {
    return project[parent.mul(representative[a], representative[b])];
  }
};

}  // namespace
}  // namespace detail

FiniteGroup FiniteGroup::from_table(int order, std::vector<int> table) {
  if (order <= 0 || table.size() != static_cast<std::size_t>(order) * order) {
    throw PreconditionError("from_table: table size does not match order");
  }
  for (int v : table) {
    if (v < 0 || v >= order) throw PreconditionError("from_table: entry out of range");
  }
  auto impl = std::make_shared<detail::TableGroup>();
  impl->order = order;
  impl->table = std::move(table);
  impl->tabulated = true;
  int id = -1;
  for (int e = 0; e < order && id < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x) ok = impl->mul(e, x) == x && impl->mul(x, e) == x;
    if (ok) id = e;
  }
  if (id < 0) throw PreconditionError("from_table: no identity");
  impl->identity = id;
  impl->inverse.assign(order, -1);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      if (impl->mul(x, y) == id) {
        impl->inverse[x] = y;
        break;
      }
    }
    if (impl->inverse[x] < 0) throw PreconditionError("from_table: element without inverse");
  }
  return FiniteGroup(std::move(impl));
}

int FiniteGroup::order() const { return impl_ ? impl_->order : 0; }
int FiniteGroup::identity() const { return impl_->identity; }
int FiniteGroup::mul(int a, int b) const { return impl_->mul(a, b); }
int FiniteGroup::inv(int a) const { return impl_->inverse[a]; }
bool FiniteGroup::has_table() const { return impl_ && impl_->tabulated; }

int FiniteGroup::power(int g, long long k) const {
  if (k < 0) {
    g = inv(g);
    k = -k;
  }
  int result = identity();
  int base = g;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int FiniteGroup::element_order(int g) const {
  int n = 1;
  for (int x = g; x != identity(); x = mul(x, g)) ++n;
  return n;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int g = 0; g < order(); ++g) e = std::lcm(e, element_order(g));
  return e;
}

FiniteGroup FiniteGroup::tabulated() const {
  if (has_table()) return *this;
  const int n = order();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = mul(a, b);
  }
  auto impl = std::make_shared<detail::TableGroup>();
  impl->order = n;
  impl->identity = identity();
  impl->inverse = impl_->inverse;
  impl->table = std::move(table);
  impl->tabulated = true;
  return FiniteGroup(std::move(impl));
}

bool FiniteGroup::check_associativity(int exhaustive_limit, int samples) const {
  const int n = order();
  if (n <= exhaustive_limit) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int ab = mul(a, b);
        for (int c = 0; c < n; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) return false;
        }
      }
    }
    return true;
  }
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  auto next = [&] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<int>(state % static_cast<std::uint64_t>(n));
  };
  for (int s = 0; s < samples; ++s) {
    const int a = next(), b = next(), c = next();
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

bool FiniteGroup::check_identity_and_inverses() const {
  for (int g = 0; g < order(); ++g) {
    if (mul(identity(), g) != g || mul(g, identity()) != g) return false;
    if (mul(g, inv(g)) != identity() || mul(inv(g), g) != identity()) return false;
  }
  return true;
}

FiniteGroup cyclic_group(int n) {
  if (n <= 0) throw PreconditionError("cyclic_group: n must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return FiniteGroup::from_table(n, std::move(table));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  auto impl = std::make_shared<detail::ProductGroup>();
  impl->left = g;
  impl->right = h;
  impl->right_order = h.order();
  impl->order = g.order() * h.order();
  impl->identity = g.identity() * h.order() + h.identity();
  impl->inverse.resize(impl->order);
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < h.order(); ++j) impl->inverse[i * h.order() + j] = g.inv(i) * h.order() + h.inv(j);
  }
  return FiniteGroup(std::move(impl));
}

CentralQuotient central_quotient(const FiniteGroup& g, int z) {
  if (z < 0 || z >= g.order()) throw PreconditionError("central_quotient: z out of range");
  if (z == g.identity() || g.mul(z, z) != g.identity()) {
    throw PreconditionError("central_quotient: z is not an involution");
  }
  for (int x = 0; x < g.order(); ++x) {
    if (g.mul(x, z) != g.mul(z, x)) throw PreconditionError("central_quotient: z is not central");
  }
  auto impl = std::make_shared<detail::QuotientGroup>();
  impl->parent = g;
  impl->project.assign(g.order(), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (impl->project[x] >= 0) continue;
    const int q = static_cast<int>(impl->representative.size());
    impl->representative.push_back(x);  // x < zx since zx was not yet visited
    impl->project[x] = q;
    impl->project[g.mul(z, x)] = q;
  }
  impl->order = static_cast<int>(impl->representative.size());
  impl->identity = impl->project[g.identity()];
  impl->inverse.resize(impl->order);
  for (int q = 0; q < impl->order; ++q) impl->inverse[q] = impl->project[g.inv(impl->representative[q])];

  CentralQuotient out;
  out.representative = impl->representative;
  out.project = impl->project;
  out.group = FiniteGroup(std::move(impl));
  return out;
}

// ---------------------------------------------------------------------------

std::array<QuaternionQ5, 2> icosian_generators() {
  const Rational half(1, 2);
  return {QuaternionQ5{half, half, half, half}, QRoot5(half) * QuaternionQ5{tau(), 1, -taubar(), 0}};
}

LabeledGroup<QuaternionQ5> binary_icosahedral() {
  const auto pair = icosian_generators();
  const std::vector<QuaternionQ5> gens{pair[0], pair[1]};
  auto keys = enumerate_closure<QuaternionQ5>(gens, qmul, 120);
  if (keys.size() != 120) throw ConstructionError("binary_icosahedral: closure is not of order 120");
  return labeled_group(std::move(keys), qmul);
}

LabeledGroup<QuaternionQ5> binary_tetrahedral() {
  std::vector<QuaternionQ5> keys;
  for (int sgn : {1, -1}) {
    keys.push_back({sgn, 0, 0, 0});
    keys.push_back({0, sgn, 0, 0});
    keys.push_back({0, 0, sgn, 0});
    keys.push_back({0, 0, 0, sgn});
  }
  const Rational half(1, 2);
  for (int m = 0; m < 16; ++m) {
    auto c = [&](int bit) { return QRoot5((m >> bit) & 1 ? -half : half); };
    keys.push_back({c(0), c(1), c(2), c(3)});
  }
  return labeled_group(std::move(keys), qmul);
}

QuaternionQ5 isometry_action(const QuaternionQ5& l, const QuaternionQ5& r, const QuaternionQ5& x) {
  return l * x * qinv(r);
}

QuaternionQ5 reflection(const QuaternionQ5& x) { return qconj(x); }

std::vector<int> isometry_permutation(const FiniteGroup& q120, int l, int r) {
  std::vector<int> perm(q120.order());
  const int rinv = q120.inv(r);
  for (int x = 0; x < q120.order(); ++x) perm[x] = q120.mul(q120.mul(l, x), rinv);
  return perm;
}

std::vector<int> reflection_permutation(const FiniteGroup& q120) {
  std::vector<int> perm(q120.order());
  for (int x = 0; x < q120.order(); ++x) perm[x] = q120.inv(x);
  return perm;
}

std::pair<int, int> IcosianPairGroup::components(int g) const {
  const ProductIndex idx{static_cast<int>(right_in_q120.size())};
  auto [l, rk] = idx.split(quotient.representative[g]);
  return {l, right_in_q120[rk]};
}

std::optional<int> IcosianPairGroup::find(int l, int r) const {
  if (l < 0 || l >= q120.order() || r < 0 || r >= q120.order() || q120_in_right[r] < 0) return std::nullopt;
  const ProductIndex idx{static_cast<int>(right_in_q120.size())};
  return quotient.project[idx(l, q120_in_right[r])];
}

int IcosianPairGroup::act(int g, int x) const {
  auto [l, r] = components(g);
  return q120.mul(q120.mul(l, x), q120.inv(r));
}

IcosianPairGroup icosian_pair_group(const LabeledGroup<QuaternionQ5>& q120,
                                    const LabeledGroup<QuaternionQ5>& right_factor) {
  IcosianPairGroup out;
  out.q120 = q120.group;
  out.q120_in_right.assign(q120.order(), -1);
  for (int k = 0; k < right_factor.order(); ++k) {
    const int idx = q120.at(right_factor.keys[k]);
    out.right_in_q120.push_back(idx);
    out.q120_in_right[idx] = k;
  }
  const int minus_one = q120.at(-QuaternionQ5::one());
  const auto right_minus_one = right_factor.find(-QuaternionQ5::one());
  if (!right_minus_one) throw PreconditionError("icosian_pair_group: right factor lacks -1");
  const FiniteGroup product = direct_product(q120.group, right_factor.group);
  const ProductIndex idx{right_factor.order()};
  out.quotient = central_quotient(product, idx(minus_one, *right_minus_one));
  return out;
}

// ---------------------------------------------------------------------------

Perm5 compose(const Perm5& x, const Perm5& y) {
  Perm5 out{};
  for (int i = 0; i < 5; ++i) out[i] = x[y[i]];
  return out;
}

Perm5 perm5_from_cycles(const std::vector<std::vector<int>>& cycles) {
  Perm5 p{0, 1, 2, 3, 4};
  for (const auto& c : cycles) {
    for (std::size_t t = 0; t < c.size(); ++t) {
      const int from = c[t] - 1;
      const int to = c[(t + 1) % c.size()] - 1;
      if (from < 0 || from > 4 || to < 0 || to > 4) throw PreconditionError("perm5: point out of range");
      p[from] = static_cast<std::uint8_t>(to);
    }
  }
  return p;
}

Alternating5 alternating5() {
  const Perm5 a = perm5_from_cycles({{1, 2, 3, 4, 5}});
  const Perm5 b = perm5_from_cycles({{2, 5, 3}});
  const std::vector<Perm5> gens{a, b};
  auto keys = enumerate_closure<Perm5>(gens, compose, 60);
  Alternating5 out{labeled_group(std::move(keys), compose), 0, 0};
  if (out.group.order() != 60) throw ConstructionError("alternating5: wrong order");
  out.a = out.group.at(a);
  out.b = out.group.at(b);
  return out;
}

// ---------------------------------------------------------------------------

ConjugacyData conjugacy_classes(const FiniteGroup& g, std::span<const int> generators) {
  const int n = g.order();
  std::vector<int> conj_by(generators.begin(), generators.end());
  if (conj_by.empty()) {
    conj_by.resize(n);
    std::iota(conj_by.begin(), conj_by.end(), 0);
  }
  std::vector<int> orbit_of(n, -1);
  std::vector<std::vector<int>> orbits;
  for (int x = 0; x < n; ++x) {
    if (orbit_of[x] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<int> orbit{x};
    orbit_of[x] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const int y = orbit[head];
      for (int c : conj_by) {
        const int w = g.mul(g.mul(g.inv(c), y), c);
        if (orbit_of[w] < 0) {
          orbit_of[w] = id;
          orbit.push_back(w);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  std::vector<int> orders(orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) orders[i] = g.element_order(orbits[i].front());
  std::vector<int> perm(orbits.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int p, int q) {
    return std::tuple(orders[p], orbits[p].size(), orbits[p].front()) <
           std::tuple(orders[q], orbits[q].size(), orbits[q].front());
  });

  ConjugacyData cd;
  const int r = static_cast<int>(orbits.size());
  cd.class_of.assign(n, -1);
  for (int i = 0; i < r; ++i) {
    cd.classes.push_back(std::move(orbits[perm[i]]));
    cd.representative.push_back(cd.classes.back().front());
    cd.rep_order.push_back(orders[perm[i]]);
    for (int x : cd.classes.back()) cd.class_of[x] = i;
  }
  if (cd.representative[0] != g.identity()) throw ConstructionError("conjugacy_classes: identity class not first");
  cd.inverse_class.resize(r);
  for (int i = 0; i < r; ++i) cd.inverse_class[i] = cd.class_of[g.inv(cd.representative[i])];

  cd.cmc.assign(static_cast<std::size_t>(r) * r * r, 0);
  for (int k = 0; k < r; ++k) {
    const int z = cd.representative[k];
    for (int x = 0; x < n; ++x) {
      const int y = g.mul(g.inv(x), z);
      const auto i = static_cast<std::size_t>(cd.class_of[x]);
      const auto j = static_cast<std::size_t>(cd.class_of[y]);
      ++cd.cmc[(i * r + j) * r + k];
    }
  }
  return cd;
}

// ---------------------------------------------------------------------------

namespace {

/// Closure of gens; nullopt as soon as it exceeds `limit` elements.
std::optional<std::vector<int>> bounded_closure(const FiniteGroup& g, std::span<const int> gens, int limit) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const int x = elems[head];
    for (int s : gens) {
      const int y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
        if (static_cast<int>(elems.size()) > limit) return std::nullopt;
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

void sweep(const FiniteGroup& g, int n, int max_gens, std::vector<int>& tuple, std::set<std::vector<int>>& found,
           long long& processed) {
  const int order = g.order();
  for (int x = 0; x < order; ++x) {
    tuple.push_back(x);
    ++processed;
    auto closure = bounded_closure(g, tuple, n);
    if (closure && n % static_cast<int>(closure->size()) == 0) {
      if (static_cast<int>(closure->size()) == n) found.insert(*closure);
      if (static_cast<int>(tuple.size()) < max_gens) sweep(g, n, max_gens, tuple, found, processed);
    } else if (static_cast<int>(tuple.size()) < max_gens) {
      // Every extension of a pruned prefix counts as processed.
      long long skipped = 1;
      for (int t = static_cast<int>(tuple.size()); t < max_gens; ++t) {
        skipped *= order;
        processed += skipped;
      }
    }
    tuple.pop_back();
  }
}

}  // namespace

std::vector<int> subgroup_closure(const FiniteGroup& g, std::span<const int> gens) {
  return *bounded_closure(g, gens, g.order());
}

SubgroupSearch subgroups_of_order(const FiniteGroup& g, int n, int max_gens) {
  if (max_gens < 1) throw PreconditionError("subgroups_of_order: max_gens must be positive");
  SubgroupSearch out;
  std::set<std::vector<int>> found;
  if (n == 1) found.insert({g.identity()});
  if (n >= 1 && g.order() % n == 0) {
    std::vector<int> tuple;
    sweep(g, n, max_gens, tuple, found, out.tuples_processed);
  } else {
    long long total = 0, layer = 1;
    for (int t = 0; t < max_gens; ++t) total += (layer *= g.order());
    out.tuples_processed = total;
  }
  out.subgroups.assign(found.begin(), found.end());
  return out;
}

}  // namespace polyspec
