#include "doctest.h"

#include "polyspec/fixtures.hpp"
#include "polyspec/spectra.hpp"

#include <Eigen/Dense>

#include <random>

using namespace polyspec;

namespace {

const A5Fixture& a5() {
  static const auto f = a5_fixture();
  return f;
}

const IcosianFixture& icosian() {
  static const auto f = icosian_fixture();
  return f;
}

std::vector<double> to_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

std::vector<double> oracle_eigenvalues(const Eigen::MatrixXd& m) {
  return to_vector(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m, Eigen::EigenvaluesOnly).eigenvalues());
}

void check_close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  REQUIRE(a.size() == b.size());
  double worst = 0;
  for (std::size_t t = 0; t < a.size(); ++t) worst = std::max(worst, std::abs(a[t] - b[t]));
  CHECK(worst <= tol);
}

ExactOperator dense_to_exact(const Eigen::MatrixXd& m) { return m.cast<long long>().sparseView(); }

}  // namespace

TEST_CASE("Jacobi matches the library eigensolver on random symmetric matrices") {
  std::mt19937 rng(7);
  std::normal_distribution<double> nd;
  for (int n : {1, 2, 5, 40}) {
    Eigen::MatrixXd m(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c <= r; ++c) m(r, c) = m(c, r) = nd(rng);
    }
    JacobiOptions opts;
    opts.compute_vectors = true;
    const auto res = jacobi_eigen(m, opts);
    check_close(to_vector(res.values), oracle_eigenvalues(m), 1e-10);
    const Eigen::MatrixXd recon = res.vectors * res.values.asDiagonal() * res.vectors.transpose();
    CHECK((recon - m).norm() < 1e-10 * std::max(1.0, m.norm()));
    CHECK((res.vectors.transpose() * res.vectors - Eigen::MatrixXd::Identity(n, n)).norm() < 1e-10);
  }
}

TEST_CASE("Jacobi handles Hermitian input") {
  std::mt19937 rng(11);
  std::normal_distribution<double> nd;
  const int n = 24;
  Eigen::MatrixXcd m(n, n);
  for (int r = 0; r < n; ++r) {
    m(r, r) = nd(rng);
    for (int c = 0; c < r; ++c) {
      m(r, c) = {nd(rng), nd(rng)};
      m(c, r) = std::conj(m(r, c));
    }
  }
  const auto res = jacobi_eigen(m);
  const Eigen::VectorXd oracle = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m, Eigen::EigenvaluesOnly).eigenvalues();
  check_close(to_vector(res.values), to_vector(oracle), 1e-10);
  CHECK(res.max_imag_diagonal < 1e-12);
}

TEST_CASE("Jacobi preconditions and failure") {
  CHECK_THROWS_AS(jacobi_eigen(Eigen::MatrixXd::Zero(2, 3)), PreconditionError);
  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, 0, 0;
  CHECK_THROWS_AS(jacobi_eigen(asym), PreconditionError);
  Eigen::MatrixXd k2(2, 2);
  k2 << 0, 1, 1, 0;
  JacobiOptions none;
  none.max_sweeps = 0;
  CHECK_THROWS_AS(jacobi_eigen(k2, none), NumericError);
}

TEST_CASE("spectrum of K2") {
  const auto s = spectrum_direct(Graph(2, {{0, 1}}));
  REQUIRE(s.entries().size() == 2);
  CHECK(s.entries()[0].value == doctest::Approx(-1));
  CHECK(s.entries()[1].value == doctest::Approx(1));
  CHECK(s.entries()[0].multiplicity == 1);
  CHECK(s.dimension() == 2);
}

TEST_CASE("spectrum multisets coalesce and compare") {
  const auto s = SpectrumMultiset::from_values({1.0, -2.0, 1.0 + 1e-10, 0.0, 1.0 - 1e-10});
  REQUIRE(s.entries().size() == 3);
  CHECK(s.multiplicity_of(1.0) == 3);
  CHECK(s.multiplicity_of(0.0) == 1);
  CHECK(s.multiplicity_of(5.0) == 0);
  CHECK(s.trace() == doctest::Approx(1.0));
  CHECK(s.trace_of_squares() == doctest::Approx(7.0));
  const auto z = s.with_zeros(3);
  CHECK(z.dimension() == 8);
  CHECK(z.multiplicity_of(0.0) == 4);
  CHECK(compare_spectra(s, s, 0, 1e-12).equal);
  CHECK(compare_spectra(s, z, 3, 1e-12).equal);
  CHECK_FALSE(compare_spectra(s, z, 2, 1e-12).equal);
  CHECK_FALSE(compare_spectra(s, SpectrumMultiset::from_values({1, 1, 1, 0, -2.1}), 0, 1e-8).equal);
  CHECK_THROWS_AS(SpectrumMultiset::from_values({1.0}, 0.0), PreconditionError);
}

TEST_CASE("right translations form the regular representation") {
  const FiniteGroup& g = a5().instance.group;
  CHECK(!exact_mismatch(right_translation(g, g.identity()), identity_operator(60)));
  for (int h = 0; h < 60; h += 7) {
    for (int k = 0; k < 60; k += 5) {
      const ExactOperator prod = right_translation(g, h) * right_translation(g, k);
      CHECK(!exact_mismatch(prod, right_translation(g, g.mul(h, k))));
    }
  }
  const FiniteGroup& big = icosian().instance.group;
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, big.order() - 1);
  for (int t = 0; t < 10; ++t) {
    const int h = pick(rng), k = pick(rng);
    const ExactOperator prod = right_translation(big, h) * right_translation(big, k);
    CHECK(!exact_mismatch(prod, right_translation(big, big.mul(h, k))));
  }
}

TEST_CASE("sum of right translations is the Cayley adjacency") {
  for (const DartCayleyInstance* inst : {&a5().instance, &icosian().instance}) {
    const auto h = inst->connection_set();
    CHECK(!exact_mismatch(sum_right_translations(inst->group, h), adjacency_operator(inst->cayley.graph)));
  }
}

TEST_CASE("lift and average identities hold exactly") {
  for (const DartCayleyInstance* inst : {&a5().instance, &icosian().instance}) {
    INFO("order " << inst->group.order());
    REQUIRE(inst->iso.ok);
    const int n = inst->group.order();
    const int e = inst->base.edge_count();
    const ExactOperator a1 = lift_A1(inst->base, inst->iso.map);
    const ExactOperator a2 = average_A2(inst->base, inst->iso.map);
    CHECK(a1.rows() == n);
    CHECK(a1.cols() == e);
    // Column sums of A1 are 2.
    const Eigen::Matrix<long long, 1, Eigen::Dynamic> ones_row = Eigen::Matrix<long long, 1, Eigen::Dynamic>::Ones(n);
    const Eigen::Matrix<long long, 1, Eigen::Dynamic> col_sums = ones_row * a1;
    CHECK((col_sums.array() == 2).all());
    CHECK(!exact_mismatch(ExactOperator(a2 * a1), ExactOperator(2 * identity_operator(e))));
    CHECK(!exact_mismatch(ExactOperator(a1 * a2),
                          ExactOperator(identity_operator(n) + right_translation(inst->group, inst->special))));
    const ExactOperator b = sum_right_translations(inst->group, inst->nonspecial);
    CHECK(!verify_factorization(adjacency_operator(inst->edge_graph), a2, b, a1));
    CHECK(!verify_factorization(ExactOperator(2 * identity_operator(e)), a2, identity_operator(n), a1));
    // A wrong B is caught with a witness.
    const auto bad = verify_factorization(adjacency_operator(inst->edge_graph), a2, identity_operator(n), a1);
    REQUIRE(bad);
    CHECK(bad->lhs != bad->rhs);
  }
  const auto& inst = a5().instance;
  CHECK_THROWS_AS(verify_factorization(identity_operator(3), lift_A1(inst.base), identity_operator(60), lift_A1(inst.base)),
                  PreconditionError);
  CHECK_THROWS_AS(exact_mismatch(identity_operator(2), identity_operator(3)), PreconditionError);
}

TEST_CASE("direct spectra: top eigenvalues and traces") {
  const auto& f = a5();
  const auto s = spectrum_direct(f.instance.edge_graph);
  CHECK(s.entries().back().value == doctest::Approx(4));
  CHECK(s.entries().back().multiplicity == 1);
  CHECK(std::abs(s.trace()) < 1e-9);
  CHECK(s.trace_of_squares() == doctest::Approx(2.0 * f.instance.edge_graph.edge_count()).epsilon(1e-6));
  check_close(s.values(), oracle_eigenvalues(dense_adjacency(f.instance.edge_graph)), 1e-10);

  const auto c = spectrum_direct(f.instance.cayley.graph);
  CHECK(c.entries().back().value == doctest::Approx(3));
  CHECK(c.entries().back().multiplicity == 1);

  const Graph& cell = icosian().instance.base;
  const auto cs = spectrum_direct(cell);
  CHECK(cs.entries().back().value == doctest::Approx(12));
  CHECK(cs.entries().back().multiplicity == 1);
  CHECK(cs.trace_of_squares() == doctest::Approx(1440).epsilon(1e-6));
  check_close(cs.values(), oracle_eigenvalues(dense_adjacency(cell)), 1e-9);
}

TEST_CASE("surrogate is a symmetric integer matrix sharing the edge-graph spectrum") {
  const auto& inst = a5().instance;
  const ExactOperator t = surrogate_numerator(inst.group, inst.nonspecial, inst.special);
  CHECK(!exact_mismatch(t, ExactOperator(t.transpose())));
  const Eigen::MatrixXd w = Eigen::MatrixXd(t.cast<double>()) / 2.0;
  const auto sw = symmetric_eigen(w);
  const auto sx = spectrum_direct(inst.edge_graph);
  const auto cmp = compare_spectra(sx, sw, 30, 1e-8);
  CHECK_MESSAGE(cmp.equal, cmp.report);
  // Y = B(I+S) is not symmetric, but its eigenvalues (all real here) agree too.
  const ExactOperator y = ExactOperator(sum_right_translations(inst.group, inst.nonspecial) *
                                        ExactOperator(identity_operator(60) + right_translation(inst.group, inst.special)));
  const Eigen::MatrixXd yd = Eigen::MatrixXd(y.cast<double>());
  Eigen::EigenSolver<Eigen::MatrixXd> es(yd, false);
  std::vector<double> yv;
  for (int t2 = 0; t2 < 60; ++t2) {
    CHECK(std::abs(es.eigenvalues()(t2).imag()) < 1e-6);
    yv.push_back(es.eigenvalues()(t2).real());
  }
  std::sort(yv.begin(), yv.end());
  check_close(yv, sw.values(), 1e-6);
}

TEST_CASE("block route over A5 matches the direct route") {
  const auto& inst = a5().instance;
  const auto cd = conjugacy_classes(inst.group);
  const auto table = character_table(inst.group, cd);
  const auto blocks = spectrum_via_blocks(inst.group, cd, table, inst.nonspecial, inst.special);
  CHECK(blocks.total_dimension == 60);
  CHECK(blocks.blocks.size() == 5);
  CHECK(blocks.idempotence_residual < 1e-9);
  CHECK(blocks.completeness_residual < 1e-9);
  REQUIRE(blocks.blocks[0].degree == 1);
  REQUIRE(blocks.blocks[0].eigenvalues.size() == 1);
  CHECK(blocks.blocks[0].eigenvalues[0] == doctest::Approx(4));
  for (const auto& b : blocks.blocks) {
    CHECK(b.dimension == b.degree * b.degree);
    CHECK(b.max_imag < 1e-8);
  }
  const auto direct = spectrum_direct(inst.edge_graph);
  const auto cmp = compare_spectra(direct, blocks.spectrum, 30, 1e-8);
  CHECK_MESSAGE(cmp.equal, cmp.report);

  BlockOptions par;
  par.jobs = 3;
  const auto threaded = spectrum_via_blocks(inst.group, cd, table, inst.nonspecial, inst.special, par);
  CHECK(threaded.spectrum.values() == blocks.spectrum.values());
}

TEST_CASE("block route rejects a projector of the wrong rank") {
  const auto& inst = a5().instance;
  const auto cd = conjugacy_classes(inst.group);
  auto table = character_table(inst.group, cd);
  REQUIRE(table.degrees[1] == 3);
  table.degrees[1] = 2;
  CHECK_THROWS_AS(spectrum_via_blocks(inst.group, cd, table, inst.nonspecial, inst.special), NumericError);
  const auto other = character_table(cyclic_group(4), conjugacy_classes(cyclic_group(4)));
  CHECK_THROWS_AS(spectrum_via_blocks(inst.group, cd, other, inst.nonspecial, inst.special), PreconditionError);
}
