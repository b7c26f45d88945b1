#ifndef DEGFAC_FORMULA_HPP
#define DEGFAC_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

#include "degfac/sparse_poly.hpp"

namespace degfac {

/// Immutable arithmetic-formula tree. Every parent-to-child edge carries a
/// rational scalar (default 1).
struct FormulaNode;

struct FormulaEdge {
  Rational scalar{1};
  std::shared_ptr<const FormulaNode> node;
};

struct FormulaNode {
  enum class Op { constant, variable, sum, prod };
  Op op = Op::constant;
  Rational value;          // constant leaves
  int index = 0;           // variable leaves, 1-based
  std::vector<FormulaEdge> children;  // sum/prod gates
};

struct Formula {
  std::shared_ptr<const FormulaNode> root;
  int arity = 0;  // highest variable index occurring (0 for constant formulas)
};

struct FormulaMeasures {
  int size = 0;           // node count
  int depth = 0;          // gate depth, leaves at 0
  int product_depth = 0;  // max number of product gates on a root-leaf path
  double bit = 0.0;       // size + sum of bit() over all scalars
  int degree_bound = 0;   // syntactic degree: sum -> max, prod -> sum
};

/// Parses the JSON encoding: node = {"op": "const"|"var"|"sum"|"prod",
/// "value": "p/q" (const), "index": int (var),
/// "children": [{"scalar": "p/q", "node": <node>}, ...]}; a missing scalar
/// means 1. Schema violations raise a parse error carrying the node path.
Formula parse_formula(const std::string& document);

/// Exact evaluation. Satisfies bit(result) <= bit(C) * max(1, max_i bit(a_i)).
Rational eval_formula(const Formula& c, const std::vector<Rational>& a);

FormulaMeasures formula_measures(const Formula& c);

/// Exact expansion to a sparse polynomial; a resource error is raised when
/// an intermediate result exceeds `term_budget` terms.
SparsePoly expand(const Formula& c, long term_budget = 1000000);

/// C(x + alpha*y + beta) as a formula over x1..xn, y (y is variable n+1):
/// each variable leaf becomes a 3-term sum, so depth grows by at most one
/// and product-depth is unchanged.
Formula substitute_affine_formula(const Formula& c,
                                  const std::vector<Rational>& alpha,
                                  const std::vector<Rational>& beta);

/// Recovers the coefficient vector of the degree-<= d polynomial computed by
/// C from its values on H(d, n), via an exact linear solve. Raises a
/// precondition error when the system is inconsistent (degree bound
/// violated).
SparsePoly interpolate_low_degree(const Formula& c, int d);

/// Monomials of total degree <= d in n variables, graded-lex ascending.
std::vector<Monomial> monomials_up_to_degree(int arity, int d);

}  // namespace degfac

#endif
