#include <cmath>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>
#include <gmpxx.h>

#include "siglab/inertia.hpp"

namespace siglab {

std::optional<Inertia> float_inertia_oracle(const Graph& g, std::optional<double> zero_tolerance) {
  const auto n = static_cast<Eigen::Index>(g.order());
  if (n == 0) return Inertia{};
  const double tol = zero_tolerance.value_or(1e-9 * static_cast<double>(n));
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) a(i, j) = 1.0;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) return std::nullopt;
  Inertia in;
  for (double lambda : solver.eigenvalues()) {
    if (std::abs(lambda) < tol) {
      ++in.nullity;
    } else if (lambda > 0) {
      ++in.positive;
    } else {
      ++in.negative;
    }
  }
  return in;
}

Inertia congruence_inertia(const Graph& g) {
  const std::size_t n0 = g.order();
  std::vector<std::vector<mpq_class>> a(n0, std::vector<mpq_class>(n0));
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) a[i][j] = 1;

  Inertia in;
  // Each step splits off a 1x1 or 2x2 pivot block and replaces the matrix by
  // its Schur complement; Sylvester's law adds up the pieces.
  while (!a.empty()) {
    const std::size_t n = a.size();
    std::size_t pi = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(a[i][i]) != 0) {
        pi = i;
        break;
      }
    }
    if (pi < n) {
      const mpq_class d = a[pi][pi];
      (sgn(d) > 0 ? in.positive : in.negative) += 1;
      std::vector<std::vector<mpq_class>> s;
      s.reserve(n - 1);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == pi) continue;
        std::vector<mpq_class> row;
        row.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
          if (j == pi) continue;
          row.push_back(sgn(a[i][pi]) == 0 ? a[i][j] : mpq_class(a[i][j] - a[i][pi] * a[pi][j] / d));
        }
        s.push_back(std::move(row));
      }
      a = std::move(s);
      continue;
    }
    // Zero diagonal: pivot on a nonzero off-diagonal pair, whose 2x2 block
    // [[0,b],[b,0]] has one positive and one negative eigenvalue.
    std::size_t p = n, q = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (sgn(a[i][j]) != 0) {
          p = i;
          q = j;
          break;
        }
    if (p == n) {
      in.nullity += n;
      break;
    }
    in.positive += 1;
    in.negative += 1;
    const mpq_class b = a[p][q];
    std::vector<std::vector<mpq_class>> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == p || i == q) continue;
      std::vector<mpq_class> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == p || j == q) continue;
        // B^{-1} = [[0, 1/b], [1/b, 0]] since the diagonal is zero.
        mpq_class corr = (a[i][p] * a[q][j] + a[i][q] * a[p][j]) / b;
        row.push_back(a[i][j] - corr);
      }
      s.push_back(std::move(row));
    }
    a = std::move(s);
  }
  return in;
}

}  // namespace siglab
