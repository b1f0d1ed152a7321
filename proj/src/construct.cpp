#include "kmnil/construct.hpp"

#include <algorithm>
#include <cmath>

namespace kmnil {

namespace {

double gram_residual_vs_scalar(const Eigen::MatrixXd& cols, double lambda) {
  if (cols.cols() == 0) return 0.0;
  Eigen::MatrixXd g = cols.transpose() * cols;
  g.diagonal().array() -= lambda;
  return max_abs(g);
}

}  // namespace

CompletionProblem assemble_problem(const GradedAlgebra& state, const CartanMatrix& cm,
                                   const MultiDegree& k, const Tolerances& tol) {
  if (total_degree(k) < 2)
    fail(Errc::PrerequisiteMissing, "assemble_problem: |k| must be >= 2 at " + degree_str(k));
  CompletionProblem problem;
  problem.k = k;
  problem.energy = energy(cm, k);
  if (problem.energy <= 0)
    fail(Errc::EnergyNotPositive, "assemble_problem: E" + degree_str(k) + " = " +
                                      std::to_string(problem.energy));

  const int qmax = static_cast<int>(total_degree(k));
  std::vector<ChainBasis> bases(qmax + 2);  // bases[q], q = 0..qmax+1 (empty beyond)
  for (int q = 2; q <= qmax; ++q) bases[q] = wedge_basis(state, k, q);

  std::vector<int> even_offset(qmax + 2, -1);
  int rows = 0;
  for (int q = 2; q <= qmax; q += 2) {
    even_offset[q] = rows;
    rows += bases[q].dim();
    problem.even_bases.push_back(bases[q]);
  }
  problem.rows = rows;
  problem.lambda2_dim = bases[2].dim();

  int known_count = 0;
  for (int q = 3; q <= qmax; q += 2) known_count += bases[q].dim();
  problem.known = Eigen::MatrixXd::Zero(rows, known_count);

  int col = 0;
  for (int q = 3; q <= qmax; q += 2) {
    if (bases[q].dim() == 0) continue;
    // ∂_q lands in the q-1 block, δ_q = (∂_{q+1})^T in the q+1 block
    Eigen::MatrixXd down = boundary_matrix(state, bases[q - 1], bases[q]);
    Eigen::MatrixXd up;
    if (q + 1 <= qmax && bases[q + 1].dim() > 0)
      up = boundary_matrix(state, bases[q], bases[q + 1]);
    for (int c = 0; c < bases[q].dim(); ++c, ++col) {
      if (down.rows() > 0)
        problem.known.block(even_offset[q - 1], col, down.rows(), 1) = down.col(c);
      if (up.size() > 0)
        problem.known.block(even_offset[q + 1], col, up.cols(), 1) =
            up.row(c).transpose();
    }
  }

  problem.gram_residual =
      gram_residual_vs_scalar(problem.known, static_cast<double>(problem.energy));
  const double gram_tol = tol.gram * std::max<double>(1.0, std::abs(problem.energy));
  if (problem.gram_residual > gram_tol)
    fail(Errc::InvariantViolation,
         "known columns at " + degree_str(k) + " are not sqrt(E)-orthogonal (residual " +
             std::to_string(problem.gram_residual) + ")");
  return problem;
}

ComponentResult complete_component(const CompletionProblem& problem, const Tolerances& tol) {
  ComponentResult result;
  const int rows = problem.rows;
  const int known = static_cast<int>(problem.known.cols());
  const int m = rows - known;
  if (m < 0)
    fail(Errc::InvariantViolation, "more known columns than rows at " + degree_str(problem.k));
  result.dim = m;
  result.gram_residual = problem.gram_residual;
  if (m == 0) {
    result.new_columns = Eigen::MatrixXd::Zero(problem.lambda2_dim, 0);
    return result;
  }

  const double sqrt_e = std::sqrt(static_cast<double>(problem.energy));
  Eigen::MatrixXd unit_known = problem.known / sqrt_e;

  std::vector<Eigen::VectorXd> accepted;
  for (int r = 0; r < problem.lambda2_dim && static_cast<int>(accepted.size()) < m; ++r) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(rows);
    v[r] = 1.0;  // Λ² block occupies the leading rows
    for (int pass = 0; pass < 2; ++pass) {
      if (known > 0) v -= unit_known * (unit_known.transpose() * v);
      for (const auto& u : accepted) v -= u.dot(v) * u;
    }
    const double norm = v.norm();
    if (norm < tol.gs_drop) continue;
    accepted.push_back(v / norm);
  }
  if (static_cast<int>(accepted.size()) < m)
    fail(Errc::InvariantViolation,
         "orthogonal complement at " + degree_str(problem.k) + " has rank " +
             std::to_string(accepted.size()) + ", expected " + std::to_string(m));

  // The complement must live in the Λ² block: measure the spill, then clamp.
  result.new_columns = Eigen::MatrixXd::Zero(problem.lambda2_dim, m);
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXd& v = accepted[i];
    const double leak =
        rows > problem.lambda2_dim ? v.tail(rows - problem.lambda2_dim).norm() : 0.0;
    result.complement_leak = std::max(result.complement_leak, leak);
    if (leak > tol.leak)
      fail(Errc::ComplementLeak, "complement vector at " + degree_str(problem.k) +
                                     " has mass " + std::to_string(leak) +
                                     " outside the bracket block");
    Eigen::VectorXd w = v.head(problem.lambda2_dim);
    w /= w.norm();
    for (int r = 0; r < w.size(); ++r) {
      if (std::abs(w[r]) > 1e-9) {
        if (w[r] < 0) w = -w;
        break;
      }
    }
    result.new_columns.col(i) = sqrt_e * w;
  }

  // Gram of the augmented column set (clamped columns re-embedded).
  Eigen::MatrixXd augmented(rows, known + m);
  augmented.leftCols(known) = problem.known;
  augmented.rightCols(m).setZero();
  augmented.block(0, known, problem.lambda2_dim, m) = result.new_columns;
  result.gram_residual =
      gram_residual_vs_scalar(augmented, static_cast<double>(problem.energy));
  return result;
}

long long euler_dimension(const GradedAlgebra& state, const MultiDegree& k) {
  if (total_degree(k) < 2)
    fail(Errc::PrerequisiteMissing, "euler_dimension: |k| must be >= 2");
  long long m = 0;
  for (int q = 2; q <= total_degree(k); ++q) {
    long long dim = wedge_basis(state, k, q).dim();
    m += (q % 2 == 0) ? dim : -dim;
  }
  return m;
}

BuildResult build(const CartanMatrix& cm, const BuildOptions& options) {
  std::vector<MultiDegree> order = degree_order(cm.n, options.bound, options.max_degrees);
  GradedAlgebra alg(cm.n, options.bound);
  std::vector<DegreeRecord> records;
  records.reserve(order.size());

  for (const MultiDegree& k : order) {
    DegreeRecord rec;
    rec.k = k;
    rec.energy = energy(cm, k);
    if (total_degree(k) == 1) {
      alg.add_component(k, 1);
      rec.dim = 1;
    } else if (rec.energy <= 0) {
      alg.add_component(k, 0);
    } else {
      CompletionProblem problem = assemble_problem(alg, cm, k, options.tol);
      ComponentResult res = complete_component(problem, options.tol);
      rec.euler = euler_dimension(alg, k);
      if (rec.euler != res.dim)
        fail(Errc::InvariantViolation,
             "dimension mismatch at " + degree_str(k) + ": completion gives " +
                 std::to_string(res.dim) + ", Euler recursion gives " +
                 std::to_string(rec.euler));
      rec.dim = res.dim;
      rec.gram_residual = res.gram_residual;
      rec.complement_leak = res.complement_leak;
      rec.forced_zero = res.dim == 0;
      int comp = alg.add_component(k, res.dim);
      if (res.dim > 0) {
        const int first = alg.component(comp).first_label;
        const ChainBasis& lambda2 = problem.even_bases.front();
        for (int r = 0; r < lambda2.dim(); ++r) {
          std::vector<BracketTerm> terms;
          for (int i = 0; i < res.dim; ++i) {
            double coeff = res.new_columns(r, i);
            if (std::abs(coeff) > 1e-12) terms.push_back({first + i, coeff});
          }
          if (!terms.empty())
            alg.set_bracket(lambda2.monomials[r][0], lambda2.monomials[r][1], std::move(terms));
        }
      }
    }
    rec.jacobi_residual = check_jacobi(alg, k);
    records.push_back(std::move(rec));
  }
  return {std::move(alg), std::move(records)};
}

std::vector<SerreEntry> serre_check(const GradedAlgebra& alg, const CartanMatrix& cm) {
  std::vector<SerreEntry> out;
  for (int i = 0; i < cm.n; ++i)
    for (int j = 0; j < cm.n; ++j) {
      if (i == j) continue;
      SerreEntry entry;
      entry.i = i;
      entry.j = j;
      entry.k = serre_degree(cm, i, j);
      entry.energy = energy(cm, entry.k);
      entry.in_bound = alg.covers(entry.k);
      entry.dim = entry.in_bound ? alg.component_dim(entry.k) : -1;
      out.push_back(std::move(entry));
    }
  return out;
}

}  // namespace kmnil
