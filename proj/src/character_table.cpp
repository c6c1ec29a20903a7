// Burnside-Dixon character tables.
//
// The class sums K_i span the centre of the group algebra and satisfy
// K_i K_j = sum_k a(i,j,k) K_k. For each irreducible chi the central character
// w_k = |C_k| chi(g_k) / chi(1) solves M_i w = w_i w with (M_i)_{jk} = a(i,j,k),
// so the w-vectors are the common eigenvectors of the class matrices. Over F_p
// with p = 1 mod exp(G) these split into r one-dimensional spaces.

#include "polyspec/groups.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

namespace polyspec {

namespace {

using i64 = long long;
using Vec = std::vector<i64>;

i64 mod(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

i64 powmod(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

i64 primitive_root(i64 p) {
  std::vector<i64> factors;
  i64 m = p - 1;
  for (i64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 q : factors) ok = ok && powmod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
  throw ConstructionError("primitive_root: none found");
}

/// Basis of the null space of the rows x cols matrix `a` over F_p.
std::vector<Vec> nullspace(std::vector<Vec> a, std::size_t cols, i64 p) {
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][c] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[row]);
    const i64 inv = invmod(a[row][c], p);
    for (auto& v : a[row]) v = v * inv % p;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const i64 f = a[r][c];
      for (std::size_t t = 0; t < cols; ++t) a[r][t] = mod(a[r][t] - f * a[row][t], p);
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(cols, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = mod(-a[r][free], p);
    basis.push_back(std::move(x));
  }
  return basis;
}

struct Subspace {
  std::vector<Vec> basis;  // column vectors of length r
};

/// Splits `space` into eigenspaces of the class matrix m (r x r).
std::vector<Subspace> split(const Subspace& space, const std::vector<Vec>& m, i64 p) {
  const std::size_t r = m.size();
  const std::size_t k = space.basis.size();
  std::vector<Vec> mb(k, Vec(r, 0));
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < r; ++i) {
      i64 s = 0;
      for (std::size_t j = 0; j < r; ++j) s += m[i][j] * space.basis[c][j];
      mb[c][i] = s % p;
    }
  }
  std::vector<Subspace> parts;
  std::size_t found = 0;
  for (i64 lambda = 0; lambda < p && found < k; ++lambda) {
    std::vector<Vec> a(r, Vec(k, 0));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t c = 0; c < k; ++c) a[i][c] = mod(mb[c][i] - lambda * space.basis[c][i], p);
    }
    auto null = nullspace(std::move(a), k, p);
    if (null.empty()) continue;
    Subspace part;
    for (const auto& x : null) {
      Vec v(r, 0);
      for (std::size_t c = 0; c < k; ++c) {
        if (x[c] == 0) continue;
        for (std::size_t i = 0; i < r; ++i) v[i] = (v[i] + x[c] * space.basis[c][i]) % p;
      }
      part.basis.push_back(std::move(v));
    }
    found += part.basis.size();
    parts.push_back(std::move(part));
  }
  if (found != k) throw ConstructionError("character_table: class matrix not diagonalizable mod p");
  return parts;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& g, const ConjugacyData& cd) {
  const int n = g.order();
  const int r = cd.count();
  int e = 1;
  for (int o : cd.rep_order) e = std::lcm(e, o);

  i64 p = e + 1;
  while (p * p <= 4LL * n || !is_prime(p)) p += e;

  std::vector<std::vector<Vec>> class_matrix(r, std::vector<Vec>(r, Vec(r, 0)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) class_matrix[i][j][k] = cd.coefficient(i, j, k) % p;
    }
  }

  std::vector<Subspace> spaces(1);
  for (int i = 0; i < r; ++i) {
    Vec v(r, 0);
    v[i] = 1;
    spaces[0].basis.push_back(std::move(v));
  }
  for (int i = 1; i < r; ++i) {
    std::vector<Subspace> next;
    for (const auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& part : split(s, class_matrix[i], p)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
    if (static_cast<int>(spaces.size()) == r) break;
  }
  if (static_cast<int>(spaces.size()) != r) {
    throw ConstructionError("character_table: eigenspace splitting did not fully refine");
  }

  const i64 root = primitive_root(p);
  CharacterTable table;
  table.group_order = n;
  table.prime = p;
  for (int k = 0; k < r; ++k) {
    table.class_sizes.push_back(cd.size(k));
    table.class_rep_orders.push_back(cd.rep_order[k]);
  }

  // Power maps: class of g_k^l for l < order(g_k).
  std::vector<std::vector<int>> power_class(r);
  for (int k = 0; k < r; ++k) {
    int x = g.identity();
    for (int l = 0; l < cd.rep_order[k]; ++l) {
      power_class[k].push_back(cd.class_of[x]);
      x = g.mul(x, cd.representative[k]);
    }
  }

  struct Row {
    int degree;
    std::vector<std::complex<double>> values;
  };
  std::vector<Row> rows;
  for (const auto& s : spaces) {
    Vec w = s.basis[0];
    if (w[0] == 0) throw ConstructionError("character_table: eigenvector vanishes on the identity class");
    const i64 scale = invmod(w[0], p);
    for (auto& v : w) v = v * scale % p;

    i64 norm = 0;
    for (int k = 0; k < r; ++k) norm = (norm + w[k] * w[cd.inverse_class[k]] % p * invmod(cd.size(k), p)) % p;
    if (norm == 0) throw ConstructionError("character_table: degenerate norm");
    const i64 d2 = mod(n, p) * invmod(norm, p) % p;
    int degree = 0;
    for (int d = 1; static_cast<i64>(d) * d <= n; ++d) {
      if (static_cast<i64>(d) * d % p == d2) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw ConstructionError("character_table: no integer degree lifts");

    Vec theta(r);
    for (int k = 0; k < r; ++k) theta[k] = degree * w[k] % p * invmod(cd.size(k), p) % p;

    Row row{degree, std::vector<std::complex<double>>(r)};
    for (int k = 0; k < r; ++k) {
      const int o = cd.rep_order[k];
      const i64 z = powmod(root, (p - 1) / o, p);
      const i64 zinv = invmod(z, p);
      const i64 oinv = invmod(o, p);
      std::complex<double> value = 0;
      i64 total = 0;
      for (int t = 0; t < o; ++t) {
        i64 m = 0;
        const i64 step = powmod(zinv, t, p);
        i64 zpow = 1;
        for (int l = 0; l < o; ++l) {
          m = (m + theta[power_class[k][l]] * zpow) % p;
          zpow = zpow * step % p;
        }
        m = m * oinv % p;
        if (m > degree) throw ConstructionError("character_table: eigenvalue multiplicity out of range");
        total += m;
        value += static_cast<double>(m) * std::polar(1.0, 2.0 * std::numbers::pi * t / o);
      }
      if (total != degree) throw ConstructionError("character_table: multiplicities do not sum to the degree");
      row.values[k] = value;
    }
    rows.push_back(std::move(row));
  }

  auto rounded = [](double x) { return std::round(x * 1e9); };
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (int k = 0; k < r; ++k) {
      const double ar = rounded(a.values[k].real()), br = rounded(b.values[k].real());
      if (ar != br) return ar > br;
      const double ai = rounded(a.values[k].imag()), bi = rounded(b.values[k].imag());
      if (ai != bi) return ai > bi;
    }
    return false;
  });

  table.values.resize(r, r);
  for (int c = 0; c < r; ++c) {
    table.degrees.push_back(rows[c].degree);
    for (int k = 0; k < r; ++k) table.values(c, k) = rows[c].values[k];
  }
  table.conjugate_row.assign(r, -1);
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      if ((table.values.row(a).conjugate() - table.values.row(b)).cwiseAbs().maxCoeff() < 1e-9) {
        table.conjugate_row[a] = b;
        break;
      }
    }
    if (table.conjugate_row[a] < 0) throw ConstructionError("character_table: conjugate character missing");
  }
  return table;
}

double CharacterTable::row_orthogonality_residual() const {
  double worst = 0;
  const int r = rows();
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      std::complex<double> s = 0;
      for (int k = 0; k < r; ++k) s += static_cast<double>(class_sizes[k]) * values(a, k) * std::conj(values(b, k));
      s /= static_cast<double>(group_order);
      worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double CharacterTable::column_orthogonality_residual() const {
  double worst = 0;
  const int r = rows();
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      std::complex<double> s = 0;
      for (int c = 0; c < r; ++c) s += values(c, i) * std::conj(values(c, j));
      const double expected = i == j ? static_cast<double>(group_order) / class_sizes[i] : 0.0;
      worst = std::max(worst, std::abs(s - expected));
    }
  }
  return worst;
}

double CharacterTable::max_imaginary_part() const { return values.imag().cwiseAbs().maxCoeff(); }

}  // namespace polyspec
