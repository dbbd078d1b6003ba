#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "yokegrip/linsolve.hpp"

// Weighted geometric programming for two-objective posynomial programs with
// monomial constraints. The solver covers degree of difficulty zero (unique
// dual multipliers) and one (a one-parameter multiplier family maximized by
// a bracketed 1-D search), which is exactly what the crank sizing problem
// needs.
namespace yokegrip::gp {

class UnsupportedProblemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InfeasibleDualError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnderdeterminedPrimalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// c * x1^a1 * ... * xn^an with c > 0.
struct Monomial {
  double coefficient = 1.0;
  std::map<std::string, double> exponents;

  void validate() const {
    if (!(coefficient > 0.0)) throw std::domain_error("Monomial: coefficient must be positive");
  }

  double evaluate(const std::map<std::string, double>& values) const {
    double v = coefficient;
    for (const auto& [name, exponent] : exponents) {
      const auto it = values.find(name);
      if (it == values.end()) throw std::invalid_argument("Monomial::evaluate: missing variable '" + name + "'");
      v *= std::pow(it->second, exponent);
    }
    return v;
  }
};

struct Posynomial {
  std::vector<Monomial> terms;

  void validate() const {
    if (terms.empty()) throw std::domain_error("Posynomial: needs at least one term");
    for (const auto& t : terms) t.validate();
  }

  double evaluate(const std::map<std::string, double>& values) const {
    double v = 0.0;
    for (const auto& t : terms) v += t.evaluate(values);
    return v;
  }
};

enum class Sense { Minimize, Maximize };

// monomial <= bound; normalized to <= 1 during scalarization.
struct MonomialConstraint {
  Monomial monomial;
  double bound = 1.0;

  void validate() const {
    monomial.validate();
    if (!(bound > 0.0)) throw std::domain_error("MonomialConstraint: bound must be positive");
  }
};

// Two-objective program with a weight pair scalarizing the objectives.
// Maximize-sense objectives must be single monomials so the reciprocal
// transform keeps the program posynomial.
struct WeightedGP {
  std::vector<std::pair<Posynomial, Sense>> objectives;
  std::vector<MonomialConstraint> constraints;
  double w1 = 0.5;
  double w2 = 0.5;

  void validate() const {
    if (objectives.size() != 2)
      throw UnsupportedProblemError("WeightedGP: exactly two objectives are supported");
    if (!(w1 > 0.0) || !(w2 > 0.0) || std::fabs(w1 + w2 - 1.0) > 1e-9)
      throw std::domain_error("WeightedGP: weights must be positive and sum to 1");
    for (const auto& [posy, sense] : objectives) {
      posy.validate();
      if (sense == Sense::Maximize && posy.terms.size() != 1)
        throw UnsupportedProblemError("WeightedGP: a maximize-sense objective must be a single monomial");
    }
    for (const auto& c : constraints) c.validate();
  }
};

// Standard minimization form: min sum(objective_terms) subject to each
// constraint monomial <= 1. Term order is objective 1's terms, objective 2's
// terms, then the constraint monomials; dual multipliers index in the same
// order.
struct StandardGP {
  std::vector<Monomial> objective_terms;
  std::vector<Monomial> constraint_terms;
  std::vector<std::string> variables;  // sorted by name

  std::size_t term_count() const { return objective_terms.size() + constraint_terms.size(); }

  int degree_of_difficulty() const {
    return static_cast<int>(term_count()) - static_cast<int>(variables.size()) - 1;
  }

  const Monomial& term(std::size_t i) const {
    return i < objective_terms.size() ? objective_terms[i] : constraint_terms[i - objective_terms.size()];
  }

  double exponent_of(std::size_t term_index, const std::string& variable) const {
    const auto& exps = term(term_index).exponents;
    const auto it = exps.find(variable);
    return it == exps.end() ? 0.0 : it->second;
  }

  double objective_value(const std::map<std::string, double>& values) const {
    double v = 0.0;
    for (const auto& t : objective_terms) v += t.evaluate(values);
    return v;
  }
};

inline StandardGP scalarize(const WeightedGP& problem) {
  problem.validate();
  StandardGP out;
  const double weights[2] = {problem.w1, problem.w2};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& [posy, sense] = problem.objectives[i];
    if (sense == Sense::Minimize) {
      for (const auto& t : posy.terms) {
        Monomial m = t;
        m.coefficient *= weights[i];
        out.objective_terms.push_back(std::move(m));
      }
    } else {
      // max c x^a  ==  min (1/c) x^-a
      const Monomial& t = posy.terms.front();
      Monomial m;
      m.coefficient = weights[i] / t.coefficient;
      for (const auto& [name, exponent] : t.exponents) m.exponents[name] = -exponent;
      out.objective_terms.push_back(std::move(m));
    }
  }
  for (const auto& c : problem.constraints) {
    Monomial m = c.monomial;
    m.coefficient /= c.bound;
    out.constraint_terms.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < out.term_count(); ++i)
    for (const auto& [name, exponent] : out.term(i).exponents)
      if (exponent != 0.0 && std::find(out.variables.begin(), out.variables.end(), name) == out.variables.end())
        out.variables.push_back(name);
  std::sort(out.variables.begin(), out.variables.end());
  return out;
}

inline int degree_of_difficulty(const StandardGP& problem) { return problem.degree_of_difficulty(); }

// Dual of a standard-form program. The multipliers lambda satisfy the linear
// normality/orthogonality conditions
//   sum over objective terms       lambda_i              = 1
//   per variable: sum over terms   a(term, var) * lambda = 0
// and the dual objective is
//   V(lambda) = prod over objective terms (c_i/lambda_i)^lambda_i
//             * prod over constraints (c_j/lambda_j)^lambda_j * S^S
// with S the constraint's multiplier sum and the convention (c/0)^0 = 1.
struct DualProgram {
  StandardGP problem;
  std::vector<std::vector<double>> conditions;  // (1 + #vars) x #terms
  std::vector<double> rhs;                      // (1, 0, ..., 0)

  double log_value(const std::vector<double>& lambdas) const {
    if (lambdas.size() != problem.term_count())
      throw std::invalid_argument("DualProgram::log_value: multiplier count mismatch");
    for (double l : lambdas)
      if (l < 0.0) throw std::domain_error("DualProgram::log_value: multipliers must be non-negative");
    auto entropy = [](double l, double c) { return l <= 0.0 ? 0.0 : l * std::log(c / l); };
    double lv = 0.0;
    const std::size_t n_obj = problem.objective_terms.size();
    for (std::size_t i = 0; i < n_obj; ++i) lv += entropy(lambdas[i], problem.objective_terms[i].coefficient);
    for (std::size_t k = 0; k < problem.constraint_terms.size(); ++k) {
      const double l = lambdas[n_obj + k];
      lv += entropy(l, problem.constraint_terms[k].coefficient);
      if (l > 0.0) lv += l * std::log(l);  // single-monomial constraint: S == lambda
    }
    return lv;
  }

  double value(const std::vector<double>& lambdas) const { return std::exp(log_value(lambdas)); }

  // d/ds log V along a one-parameter multiplier family. Exact up to the log
  // evaluations, so a sign bisection of this slope locates the maximizer far
  // below the noise floor of comparing nearly equal log V values.
  double log_value_slope(const std::vector<double>& lambdas, const std::vector<double>& direction) const {
    double slope = 0.0;
    const std::size_t n_obj = problem.objective_terms.size();
    for (std::size_t i = 0; i < n_obj; ++i) {
      const double d = direction[i];
      if (d == 0.0) continue;
      slope += d * (std::log(problem.objective_terms[i].coefficient / lambdas[i]) - 1.0);
    }
    for (std::size_t k = 0; k < problem.constraint_terms.size(); ++k) {
      const double d = direction[n_obj + k];
      if (d == 0.0) continue;
      slope += d * std::log(problem.constraint_terms[k].coefficient);
    }
    return slope;
  }

  bool satisfies_conditions(const std::vector<double>& lambdas, double tol = 1e-12) const {
    for (std::size_t r = 0; r < conditions.size(); ++r) {
      double s = -rhs[r];
      for (std::size_t c = 0; c < lambdas.size(); ++c) s += conditions[r][c] * lambdas[c];
      if (std::fabs(s) > tol) return false;
    }
    return true;
  }
};

inline DualProgram build_dual(const StandardGP& problem) {
  DualProgram dual;
  dual.problem = problem;
  const std::size_t n = problem.term_count();
  std::vector<double> normality(n, 0.0);
  for (std::size_t i = 0; i < problem.objective_terms.size(); ++i) normality[i] = 1.0;
  dual.conditions.push_back(std::move(normality));
  dual.rhs.push_back(1.0);
  for (const auto& var : problem.variables) {
    std::vector<double> row(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) row[i] = problem.exponent_of(i, var);
    dual.conditions.push_back(std::move(row));
    dual.rhs.push_back(0.0);
  }
  return dual;
}

// Solution set of the dual conditions: lambda(s) = base + s * direction with
// s ranging over the open positivity interval (s_min, s_max). For degree of
// difficulty zero the direction is empty and base is the unique multiplier
// vector. The parameter s equals the multiplier of the free (non-pivot)
// term, so it reads directly as that lambda's value.
struct DualFamily {
  std::vector<double> base;
  std::vector<double> direction;
  std::size_t free_term = 0;  // index of the term whose multiplier is the parameter
  double s_min = 0.0;
  double s_max = 0.0;

  bool unique() const { return direction.empty(); }

  std::vector<double> at(double s) const {
    if (unique()) return base;
    std::vector<double> l(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) l[i] = base[i] + s * direction[i];
    return l;
  }
};

inline DualFamily solve_conditions(const DualProgram& dual) {
  const std::size_t rows = dual.conditions.size();
  const std::size_t cols = dual.problem.term_count();
  std::vector<std::vector<double>> m(rows);
  std::vector<double> r(rows);
  double scale = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    m[i] = dual.conditions[i];
    r[i] = dual.rhs[i];
    for (double v : m[i]) scale = std::max(scale, std::fabs(v));
  }
  const double tol = std::max(scale, 1.0) * 1e-12;

  // Gauss-Jordan to reduced row echelon form.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t best = pivot_row;
    for (std::size_t i = pivot_row + 1; i < rows; ++i)
      if (std::fabs(m[i][col]) > std::fabs(m[best][col])) best = i;
    if (std::fabs(m[best][col]) <= tol) continue;
    std::swap(m[best], m[pivot_row]);
    std::swap(r[best], r[pivot_row]);
    const double p = m[pivot_row][col];
    for (std::size_t c = 0; c < cols; ++c) m[pivot_row][c] /= p;
    r[pivot_row] /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row) continue;
      const double f = m[i][col];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < cols; ++c) m[i][c] -= f * m[pivot_row][c];
      r[i] -= f * r[pivot_row];
    }
    pivots.emplace_back(pivot_row, col);
    ++pivot_row;
  }
  for (std::size_t i = pivot_row; i < rows; ++i)
    if (std::fabs(r[i]) > tol)
      throw InfeasibleDualError("dual conditions are inconsistent: no multiplier vector exists");

  std::vector<std::size_t> free_cols;
  {
    std::vector<bool> is_pivot(cols, false);
    for (const auto& [pr, pc] : pivots) is_pivot[pc] = true;
    for (std::size_t c = 0; c < cols; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  if (free_cols.size() > 1)
    throw UnsupportedProblemError("dual solution family has dimension " + std::to_string(free_cols.size()) +
                                  "; only degree of difficulty <= 1 is supported");

  DualFamily family;
  family.base.assign(cols, 0.0);
  for (const auto& [pr, pc] : pivots) family.base[pc] = r[pr];

  if (free_cols.empty()) return family;

  const std::size_t f = free_cols.front();
  family.free_term = f;
  family.direction.assign(cols, 0.0);
  family.direction[f] = 1.0;
  for (const auto& [pr, pc] : pivots) family.direction[pc] = -m[pr][f];

  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cols; ++i) {
    const double d = family.direction[i];
    const double b = family.base[i];
    if (std::fabs(d) <= tol) {
      if (!(b > 0.0))
        throw InfeasibleDualError("dual positivity interval is empty: multiplier " + std::to_string(i + 1) +
                                  " is fixed at a non-positive value");
    } else if (d > 0.0) {
      lo = std::max(lo, -b / d);
    } else {
      hi = std::min(hi, -b / d);
    }
  }
  if (!(lo < hi)) throw InfeasibleDualError("dual positivity interval is empty");
  family.s_min = lo;
  family.s_max = hi;
  return family;
}

struct DualSolution {
  std::vector<double> lambdas;
  double value = 0.0;             // V at the multipliers
  double family_parameter = 0.0;  // s; 0 when the multipliers are unique
};

// Maximizes the dual objective. Degree of difficulty zero returns the unique
// multiplier vector; degree one runs a golden-section search of log V over
// the positivity interval (log-domain evaluation avoids underflow of the
// power products). Degree two and above is out of scope.
inline DualSolution maximize_dual(const DualProgram& dual) {
  if (dual.problem.degree_of_difficulty() >= 2)
    throw UnsupportedProblemError("degree of difficulty " +
                                  std::to_string(dual.problem.degree_of_difficulty()) +
                                  " is not supported (maximum is 1)");
  const DualFamily family = solve_conditions(dual);

  if (family.unique()) {
    for (std::size_t i = 0; i < family.base.size(); ++i)
      if (!(family.base[i] > 0.0))
        throw InfeasibleDualError("unique dual multiplier " + std::to_string(i + 1) + " is not positive");
    return {family.base, dual.value(family.base), 0.0};
  }

  const double span = family.s_max - family.s_min;
  const auto slope = [&](double s) { return dual.log_value_slope(family.at(s), family.direction); };

  const double edge = 1e-12 * span;
  double a = family.s_min + edge;
  double b = family.s_max - edge;
  double s;
  if (slope(a) > 0.0 && slope(b) < 0.0) {
    // log V is concave along the family, so its slope is decreasing: bisect
    // the sign change down to the parameter tolerance.
    while (b - a > 1e-13 * span) {
      const double mid = 0.5 * (a + b);
      (slope(mid) > 0.0 ? a : b) = mid;
    }
    s = 0.5 * (a + b);
  } else {
    // Degenerate slope profile (supremum pushed against a positivity bound):
    // fall back to a golden-section bracket on log V itself.
    const auto objective = [&](double sv) { return dual.log_value(family.at(sv)); };
    constexpr double golden = 0.6180339887498949;  // (sqrt(5) - 1) / 2
    double c = b - golden * (b - a);
    double d = a + golden * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    while (b - a > 1e-10 * std::max(span, 1.0)) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - golden * (b - a);
        fc = objective(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + golden * (b - a);
        fd = objective(d);
      }
    }
    s = 0.5 * (a + b);
  }
  return {family.at(s), dual.value(family.at(s)), s};
}

struct PrimalSolution {
  std::map<std::string, double> variables;
  double objective = 0.0;                 // scalarized objective at the point
  std::vector<double> constraint_values;  // one per constraint monomial
  std::vector<bool> constraint_active;    // tight within 1e-9

  enum class Method { FixedMultiplierRecipe, LeastSquares };
  Method method = Method::LeastSquares;

  // L2 residual of the log-linear recovery system; absent for the recipe.
  // A materially nonzero residual means the multipliers do not maximize the
  // dual and the recovered point is only a diagnostic.
  std::optional<double> log_residual;

  bool consistent(double tol = 1e-6) const { return !log_residual.has_value() || *log_residual < tol; }
};

namespace detail {

inline void finish_primal(PrimalSolution& p, const StandardGP& problem) {
  p.objective = problem.objective_value(p.variables);
  p.constraint_values.clear();
  p.constraint_active.clear();
  for (const auto& t : problem.constraint_terms) {
    const double v = t.evaluate(p.variables);
    p.constraint_values.push_back(v);
    p.constraint_active.push_back(v >= 1.0 - 1e-9);
  }
}

}  // namespace detail

// Primal recovery from maximized duals: solves the log-linear optimality
// system  ln c_i + a_i . ln x = ln(lambda_i V)  over the active objective
// terms, plus  a_j . ln x = -ln c_j  for each tight constraint monomial, by
// least squares. The residual is reported so callers can detect multipliers
// that are dual-feasible but not dual-optimal.
inline PrimalSolution recover_primal(const DualSolution& dual, const StandardGP& problem) {
  if (dual.lambdas.size() != problem.term_count())
    throw std::invalid_argument("recover_primal: multiplier count mismatch");
  if (!(dual.value > 0.0)) throw std::invalid_argument("recover_primal: dual value must be positive");

  constexpr double activity_tol = 1e-9;
  const std::size_t n_obj = problem.objective_terms.size();
  const std::size_t n_vars = problem.variables.size();

  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (std::size_t i = 0; i < n_obj; ++i) {
    if (dual.lambdas[i] <= activity_tol) continue;
    std::vector<double> row(n_vars);
    for (std::size_t j = 0; j < n_vars; ++j) row[j] = problem.exponent_of(i, problem.variables[j]);
    a.push_back(std::move(row));
    b.push_back(std::log(dual.lambdas[i] * dual.value) - std::log(problem.objective_terms[i].coefficient));
  }
  for (std::size_t k = 0; k < problem.constraint_terms.size(); ++k) {
    if (dual.lambdas[n_obj + k] <= activity_tol) continue;
    std::vector<double> row(n_vars);
    for (std::size_t j = 0; j < n_vars; ++j) row[j] = problem.exponent_of(n_obj + k, problem.variables[j]);
    a.push_back(std::move(row));
    b.push_back(-std::log(problem.constraint_terms[k].coefficient));
  }
  if (a.size() < n_vars)
    throw UnderdeterminedPrimalError("too few active terms (" + std::to_string(a.size()) + ") to recover " +
                                     std::to_string(n_vars) + " variables");

  // Normal equations; the systems here are tiny and well scaled.
  std::vector<double> ata(n_vars * n_vars, 0.0);
  std::vector<double> atb(n_vars, 0.0);
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t i = 0; i < n_vars; ++i) {
      atb[i] += a[r][i] * b[r];
      for (std::size_t j = 0; j < n_vars; ++j) ata[i * n_vars + j] += a[r][i] * a[r][j];
    }
  }
  std::vector<double> y;
  try {
    y = solve_dense(n_vars, std::move(ata), std::move(atb));
  } catch (const SingularMatrixError&) {
    throw UnderdeterminedPrimalError("rank-deficient exponent matrix: primal variables are not determined");
  }

  double residual_sq = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    double s = -b[r];
    for (std::size_t j = 0; j < n_vars; ++j) s += a[r][j] * y[j];
    residual_sq += s * s;
  }

  PrimalSolution p;
  for (std::size_t j = 0; j < n_vars; ++j) p.variables[problem.variables[j]] = std::exp(y[j]);
  p.method = PrimalSolution::Method::LeastSquares;
  p.log_residual = std::sqrt(residual_sq);
  detail::finish_primal(p, problem);
  return p;
}

// ---------------------------------------------------------------------------
// Crank sizing problem and its reference recipe
// ---------------------------------------------------------------------------

// The mechanism's frontal silhouette is (2 r2) wide and (2 r2 + r4a) tall, so
// minimizing 4 r2^2 + 2 r2 r4a shrinks the mount while maximizing F * r2
// raises the release torque. The clearance constraint keeps the disk small
// relative to the slider: r2 / r4a <= clearance_ratio.
inline WeightedGP crank_sizing_problem(double w1, double w2, double release_force = 75.0,
                                       double clearance_ratio = 0.25) {
  if (!(release_force > 0.0)) throw std::domain_error("crank_sizing_problem: release force must be positive");
  if (!(clearance_ratio > 0.0)) throw std::domain_error("crank_sizing_problem: clearance ratio must be positive");
  WeightedGP p;
  Posynomial area;
  area.terms = {Monomial{4.0, {{"r2", 2.0}}}, Monomial{2.0, {{"r2", 1.0}, {"r4a", 1.0}}}};
  Posynomial torque;
  torque.terms = {Monomial{release_force, {{"r2", 1.0}}}};
  p.objectives = {{area, Sense::Minimize}, {torque, Sense::Maximize}};
  p.constraints = {{Monomial{1.0, {{"r2", 1.0}, {"r4a", -1.0}}}, clearance_ratio}};
  p.w1 = w1;
  p.w2 = w2;
  return p;
}

struct RecipeRow {
  double w1 = 0.0;
  double w2 = 0.0;
  double r2 = 0.0;          // m
  double r4a = 0.0;         // m
  double dual_value = 0.0;  // V
};

struct RecipeResult {
  DualSolution dual;
  PrimalSolution primal;
  RecipeRow row;
};

// Reference sizing recipe for the crank problem: pins the multipliers at the
// feasible point (1/6, 1/6, 2/3, 1/6), evaluates V there, and recovers the
// radius from the relation r2 * r4a = lambda_2 V with the clearance
// constraint taken tight (r4a = r2 / ratio). The multipliers are one point
// of the feasible family, not its maximizer; use maximize_dual plus
// recover_primal for the mathematically optimal sizing.
inline RecipeResult fixed_multiplier_recipe(double w1, double w2, double release_force = 75.0,
                                            double clearance_ratio = 0.25) {
  if (!(w1 > 0.0 && w1 < 1.0) || !(w2 > 0.0 && w2 < 1.0) || std::fabs(w1 + w2 - 1.0) > 1e-9)
    throw std::domain_error("fixed_multiplier_recipe: weights must lie strictly inside (0, 1) and sum to 1");
  const WeightedGP problem = crank_sizing_problem(w1, w2, release_force, clearance_ratio);
  const StandardGP standard = scalarize(problem);
  const DualProgram dual_program = build_dual(standard);

  const std::vector<double> lambdas = {1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0};
  if (!dual_program.satisfies_conditions(lambdas, 1e-9))
    throw InfeasibleDualError("fixed_multiplier_recipe: pinned multipliers do not satisfy the dual conditions");
  const double v = dual_program.value(lambdas);

  const double r2 = std::sqrt(lambdas[1] * v * clearance_ratio);
  const double r4a = r2 / clearance_ratio;

  RecipeResult out;
  out.dual = {lambdas, v, lambdas[3]};
  out.primal.variables = {{"r2", r2}, {"r4a", r4a}};
  out.primal.method = PrimalSolution::Method::FixedMultiplierRecipe;
  detail::finish_primal(out.primal, standard);
  out.row = {w1, w2, r2, r4a, v};
  return out;
}

// Recipe rows for w1 = 0.1 .. 0.9 in steps of 0.1. Pure arithmetic, so the
// output is bit-identical across runs.
inline std::vector<RecipeRow> recipe_weight_sweep(double release_force = 75.0, double clearance_ratio = 0.25) {
  std::vector<RecipeRow> rows;
  rows.reserve(9);
  for (int i = 1; i <= 9; ++i) {
    const double w1 = static_cast<double>(i) / 10.0;
    const double w2 = static_cast<double>(10 - i) / 10.0;
    rows.push_back(fixed_multiplier_recipe(w1, w2, release_force, clearance_ratio).row);
  }
  return rows;
}

}  // namespace yokegrip::gp
