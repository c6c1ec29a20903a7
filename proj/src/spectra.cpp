#include "polyspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <thread>

namespace polyspec {

namespace {

using Triplet = Eigen::Triplet<long long>;

ExactOperator from_triplets(Eigen::Index rows, Eigen::Index cols, const std::vector<Triplet>& t) {
  ExactOperator m(rows, cols);
  m.setFromTriplets(t.begin(), t.end());
  m.makeCompressed();
  return m;
}

std::vector<int> dart_rows(const Graph& base, std::span<const int> row_to_dart) {
  if (!row_to_dart.empty()) {
    if (static_cast<int>(row_to_dart.size()) != 2 * base.edge_count()) {
      throw PreconditionError("dart row map has the wrong size");
    }
    return {row_to_dart.begin(), row_to_dart.end()};
  }
  std::vector<int> rows(2 * base.edge_count());
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = static_cast<int>(r);
  return rows;
}

}  // namespace

ExactOperator identity_operator(int n) {
  ExactOperator m(n, n);
  m.setIdentity();
  return m;
}

ExactOperator right_translation(const FiniteGroup& g, int h) {
  std::vector<Triplet> t;
  t.reserve(g.order());
  for (int x = 0; x < g.order(); ++x) t.emplace_back(x, g.mul(x, h), 1);
  return from_triplets(g.order(), g.order(), t);
}

ExactOperator sum_right_translations(const FiniteGroup& g, std::span<const int> hs) {
  std::vector<Triplet> t;
  for (int x = 0; x < g.order(); ++x) {
    for (int h : hs) t.emplace_back(x, g.mul(x, h), 1);
  }
  return from_triplets(g.order(), g.order(), t);
}

ExactOperator adjacency_operator(const Graph& g) {
  std::vector<Triplet> t;
  for (auto [u, v] : g.edges()) {
    t.emplace_back(u, v, 1);
    t.emplace_back(v, u, 1);
  }
  return from_triplets(g.vertex_count(), g.vertex_count(), t);
}

ExactOperator lift_A1(const Graph& base, std::span<const int> row_to_dart) {
  const auto rows = dart_rows(base, row_to_dart);
  const auto all = darts(base);
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Dart d = all.at(rows[r]);
    t.emplace_back(static_cast<Eigen::Index>(r), base.edge_index(d.source, d.target), 1);
  }
  return from_triplets(static_cast<Eigen::Index>(rows.size()), base.edge_count(), t);
}

ExactOperator average_A2(const Graph& base, std::span<const int> row_to_dart) {
  const auto rows = dart_rows(base, row_to_dart);
  std::vector<int> row_of_dart(rows.size(), -1);
  for (std::size_t r = 0; r < rows.size(); ++r) row_of_dart.at(rows[r]) = static_cast<int>(r);
  std::vector<Triplet> t;
  for (int e = 0; e < base.edge_count(); ++e) {
    auto [u, v] = base.edges()[e];
    const int d1 = row_of_dart[dart_index(base, u, v)];
    const int d2 = row_of_dart[dart_index(base, v, u)];
    if (d1 < 0 || d2 < 0) throw ConstructionError("average_A2: dart without a row");
    t.emplace_back(e, d1, 1);
    t.emplace_back(e, d2, 1);
  }
  return from_triplets(base.edge_count(), static_cast<Eigen::Index>(rows.size()), t);
}

std::optional<MatrixMismatch> exact_mismatch(const ExactOperator& a, const ExactOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw PreconditionError("exact_mismatch: shapes differ");
  ExactOperator diff = a - b;
  for (Eigen::Index k = 0; k < diff.outerSize(); ++k) {
    for (ExactOperator::InnerIterator it(diff, k); it; ++it) {
      if (it.value() != 0) {
        return MatrixMismatch{it.row(), it.col(), a.coeff(it.row(), it.col()), b.coeff(it.row(), it.col())};
      }
    }
  }
  return std::nullopt;
}

std::optional<MatrixMismatch> verify_factorization(const ExactOperator& x, const ExactOperator& a2,
                                                   const ExactOperator& b, const ExactOperator& a1) {
  if (a2.cols() != b.rows() || b.cols() != a1.rows() || x.rows() != a2.rows() || x.cols() != a1.cols()) {
    throw PreconditionError("verify_factorization: dimension mismatch");
  }
  const ExactOperator product = ExactOperator(a2 * b) * a1;
  return exact_mismatch(x, product);
}

// ---------------------------------------------------------------------------

SpectrumMultiset SpectrumMultiset::from_values(std::vector<double> values, double coalesce_tol) {
  if (!(coalesce_tol > 0)) throw PreconditionError("coalescing tolerance must be positive");
  std::sort(values.begin(), values.end());
  SpectrumMultiset s;
  s.tol_ = coalesce_tol;
  std::size_t start = 0;
  for (std::size_t t = 1; t <= values.size(); ++t) {
    if (t < values.size() && values[t] - values[t - 1] <= coalesce_tol) continue;
    double sum = 0;
    for (std::size_t u = start; u < t; ++u) sum += values[u];
    s.entries_.push_back({sum / static_cast<double>(t - start), static_cast<int>(t - start)});
    start = t;
  }
  s.values_ = std::move(values);
  return s;
}

int SpectrumMultiset::multiplicity_of(double v, double tol) const {
  for (const auto& e : entries_) {
    if (std::abs(e.value - v) <= tol) return e.multiplicity;
  }
  return 0;
}

double SpectrumMultiset::trace() const {
  double s = 0;
  for (double v : values_) s += v;
  return s;
}

double SpectrumMultiset::trace_of_squares() const {
  double s = 0;
  for (double v : values_) s += v * v;
  return s;
}

SpectrumMultiset SpectrumMultiset::with_zeros(int count) const {
  std::vector<double> v = values_;
  v.insert(v.end(), count, 0.0);
  return from_values(std::move(v), tol_);
}

SpectrumComparison compare_spectra(const SpectrumMultiset& smaller, const SpectrumMultiset& larger,
                                   int zero_padding, double tol) {
  SpectrumComparison out;
  const auto padded = smaller.with_zeros(zero_padding);
  std::ostringstream report;
  if (padded.dimension() != larger.dimension()) {
    report << "dimension " << padded.dimension() << " (after padding) vs " << larger.dimension();
    out.report = report.str();
    return out;
  }
  const auto& a = padded.values();
  const auto& b = larger.values();
  std::size_t worst = 0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    const double d = std::abs(a[t] - b[t]);
    if (d > out.max_deviation) {
      out.max_deviation = d;
      worst = t;
    }
  }
  out.equal = out.max_deviation <= tol;
  report << "max deviation " << out.max_deviation;
  if (!a.empty()) report << " at sorted position " << worst << " (" << a[worst] << " vs " << b[worst] << ")";
  out.report = report.str();
  return out;
}

SpectrumMultiset symmetric_eigen(const Eigen::MatrixXd& m, const EigenOptions& opts) {
  const auto r = jacobi_eigen(m, opts.jacobi);
  return SpectrumMultiset::from_values({r.values.data(), r.values.data() + r.values.size()}, opts.coalesce_tol);
}

Eigen::MatrixXd dense_adjacency(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.vertex_count(), g.vertex_count());
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

SpectrumMultiset spectrum_direct(const Graph& g, const EigenOptions& opts) {
  return symmetric_eigen(dense_adjacency(g), opts);
}

ExactOperator surrogate_numerator(const FiniteGroup& g, std::span<const int> nonspecial, int special) {
  const ExactOperator b = sum_right_translations(g, nonspecial);
  const ExactOperator i_plus_s = identity_operator(g.order()) + right_translation(g, special);
  return ExactOperator(i_plus_s * b) * i_plus_s;
}

// ---------------------------------------------------------------------------

namespace {

using Complex = std::complex<double>;

/// Coefficients of e_chi in the group algebra: c(g) = chi(1)/|G| conj(chi(g)).
std::vector<Complex> idempotent_coefficients(const ConjugacyData& cd, const CharacterTable& t, int chi) {
  const double scale = static_cast<double>(t.degrees[chi]) / t.group_order;
  std::vector<Complex> c(cd.class_of.size());
  for (std::size_t g = 0; g < c.size(); ++g) c[g] = scale * std::conj(t.values(chi, cd.class_of[g]));
  return c;
}

IrrepBlock isotypic_block(const FiniteGroup& g, const std::vector<Complex>& coeff, const Eigen::MatrixXd& w,
                          int chi, int degree, const BlockOptions& opts) {
  const int n = g.order();
  // Column y of E = sum_g c(g) R_g has entry c(x^-1 y) in row x.
  Eigen::MatrixXcd basis(n, degree * degree);
  int rank = 0;
  Eigen::VectorXcd v(n);
  // E is a verified orthogonal projector of trace degree^2, so degree^2
  // independent columns span its image.
  for (int y = 0; y < n && rank < degree * degree; ++y) {
    for (int x = 0; x < n; ++x) v(x) = coeff[g.mul(g.inv(x), y)];
    const double norm0 = v.norm();
    // Modified Gram-Schmidt, two passes.
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < rank; ++k) v -= basis.col(k).dot(v) * basis.col(k);
    }
    const double norm = v.norm();
    if (norm <= opts.rank_tol * norm0) continue;
    basis.col(rank++) = v / norm;
  }
  if (rank != degree * degree) throw NumericError("spectrum_via_blocks: isotypic projector rank below degree^2");

  const Eigen::MatrixXcd restricted = basis.adjoint() * (w * basis);
  const auto r = jacobi_eigen(restricted, opts.eigen.jacobi);
  IrrepBlock out;
  out.character = chi;
  out.degree = degree;
  out.dimension = rank;
  out.eigenvalues.assign(r.values.data(), r.values.data() + r.values.size());
  out.max_imag = r.max_imag_diagonal;
  return out;
}

}  // namespace

BlockSpectrum spectrum_via_blocks(const FiniteGroup& g, const ConjugacyData& cd, const CharacterTable& table,
                                  std::span<const int> nonspecial, int special, const BlockOptions& opts) {
  const int n = g.order();
  if (table.group_order != n || static_cast<int>(cd.class_of.size()) != n) {
    throw PreconditionError("spectrum_via_blocks: character table does not belong to this group");
  }
  if (g.mul(special, special) != g.identity()) throw PreconditionError("spectrum_via_blocks: S^2 != I");

  const Eigen::MatrixXd w = Eigen::MatrixXd(surrogate_numerator(g, nonspecial, special).cast<double>()) / 2.0;

  const int r = table.rows();
  std::vector<std::vector<Complex>> coeff(r);
  for (int chi = 0; chi < r; ++chi) coeff[chi] = idempotent_coefficients(cd, table, chi);

  BlockSpectrum out;
  // Idempotence and completeness, checked in the group algebra:
  // (sum_h a(h) R_h)(sum_k b(k) R_k) = sum_g (sum_h a(h) b(h^-1 g)) R_g.
  // E is Hermitian (c(g^-1) = conj c(g)), so an idempotent E is an orthogonal
  // projector whose rank is its trace n c(id) = chi(1)^2.
  std::vector<Complex> total(n, 0.0);
  for (int chi = 0; chi < r; ++chi) {
    const auto& c = coeff[chi];
    double residual = 0;
    for (int x = 0; x < n; ++x) {
      Complex s = 0;
      for (int h = 0; h < n; ++h) s += c[h] * c[g.mul(g.inv(h), x)];
      residual = std::max(residual, std::abs(s - c[x]));
      total[x] += c[x];
    }
    out.idempotence_residual = std::max(out.idempotence_residual, residual);
    const int d = table.degrees[chi];
    if (residual > opts.rank_tol) throw NumericError("spectrum_via_blocks: central idempotent is not idempotent");
    if (std::abs(static_cast<double>(n) * c[g.identity()] - static_cast<double>(d * d)) > opts.rank_tol) {
      throw NumericError("spectrum_via_blocks: isotypic projector rank is not degree^2");
    }
  }
  for (int x = 0; x < n; ++x) {
    out.completeness_residual =
        std::max(out.completeness_residual, std::abs(total[x] - (x == g.identity() ? 1.0 : 0.0)));
  }

  out.blocks.resize(r);
  auto work = [&](int chi) { out.blocks[chi] = isotypic_block(g, coeff[chi], w, chi, table.degrees[chi], opts); };
  const int jobs = std::max(1, std::min(opts.jobs, r));
  if (jobs == 1) {
    for (int chi = 0; chi < r; ++chi) work(chi);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back([&, j] {
        try {
          for (int chi = j; chi < r; chi += jobs) work(chi);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<double> all;
  for (const auto& b : out.blocks) {
    out.total_dimension += b.dimension;
    all.insert(all.end(), b.eigenvalues.begin(), b.eigenvalues.end());
  }
  out.spectrum = SpectrumMultiset::from_values(std::move(all), opts.eigen.coalesce_tol);
  return out;
}

}  // namespace polyspec
