#include "degfac/formula.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

#include "degfac/bareiss.hpp"
#include "degfac/error.hpp"
#include "degfac/hitting.hpp"

namespace degfac {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
  throw df_error(errc::parse, "formula schema error at " + (path.empty() ? "/" : path) +
                                  ": " + msg);
}

Rational parse_scalar(const json& j, const std::string& path) {
  if (!j.is_string()) schema_fail(path, "expected rational as string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const df_error&) {
    schema_fail(path, "malformed rational '" + j.get<std::string>() + "'");
  }
}

std::shared_ptr<const FormulaNode> parse_node(const json& j, const std::string& path,
                                              int& max_var) {
  if (!j.is_object()) schema_fail(path, "expected object");
  auto it = j.find("op");
  if (it == j.end() || !it->is_string()) schema_fail(path, "missing or non-string 'op'");
  std::string op = it->get<std::string>();
  auto node = std::make_shared<FormulaNode>();
  if (op == "const") {
    node->op = FormulaNode::Op::constant;
    if (!j.contains("value")) schema_fail(path, "const node needs 'value'");
    node->value = parse_scalar(j["value"], path + "/value");
  } else if (op == "var") {
    node->op = FormulaNode::Op::variable;
    if (!j.contains("index") || !j["index"].is_number_integer())
      schema_fail(path, "var node needs integer 'index'");
    node->index = j["index"].get<int>();
    if (node->index < 1) schema_fail(path + "/index", "variable index must be >= 1");
    max_var = std::max(max_var, node->index);
  } else if (op == "sum" || op == "prod") {
    node->op = op == "sum" ? FormulaNode::Op::sum : FormulaNode::Op::prod;
    if (!j.contains("children") || !j["children"].is_array())
      schema_fail(path, "'" + op + "' node needs 'children' array");
    int i = 0;
    for (const auto& cj : j["children"]) {
      std::string cpath = path + "/children/" + std::to_string(i++);
      if (!cj.is_object()) schema_fail(cpath, "expected object");
      FormulaEdge e;
      if (cj.contains("scalar")) e.scalar = parse_scalar(cj["scalar"], cpath + "/scalar");
      if (!cj.contains("node")) schema_fail(cpath, "missing 'node'");
      e.node = parse_node(cj["node"], cpath + "/node", max_var);
      node->children.push_back(std::move(e));
    }
    if (node->children.empty()) schema_fail(path, "gate with no children");
  } else {
    schema_fail(path + "/op", "unknown op '" + op + "'");
  }
  return node;
}

Rational eval_node(const FormulaNode& n, const std::vector<Rational>& a) {
  switch (n.op) {
    case FormulaNode::Op::constant:
      return n.value;
    case FormulaNode::Op::variable:
      return a[n.index - 1];
    case FormulaNode::Op::sum: {
      Rational acc(0);
      for (const auto& e : n.children) acc += e.scalar * eval_node(*e.node, a);
      return acc;
    }
    case FormulaNode::Op::prod: {
      Rational acc(1);
      for (const auto& e : n.children) acc *= e.scalar * eval_node(*e.node, a);
      return acc;
    }
  }
  throw df_error(errc::internal, "bad formula node");
}

}  // namespace

Formula parse_formula(const std::string& document) {
  json j;
  try {
    j = json::parse(document);
  } catch (const json::parse_error& e) {
    throw df_error(errc::parse, std::string("formula JSON: ") + e.what());
  }
  Formula f;
  int max_var = 0;
  f.root = parse_node(j, "", max_var);
  f.arity = max_var;
  return f;
}

Rational eval_formula(const Formula& c, const std::vector<Rational>& a) {
  require(static_cast<int>(a.size()) >= c.arity, errc::arity_mismatch,
          "eval_formula: point has too few coordinates");
  return eval_node(*c.root, a);
}

FormulaMeasures formula_measures(const Formula& c) {
  FormulaMeasures m;
  m.degree_bound = 0;
  std::function<std::pair<std::pair<int, int>, int>(const FormulaNode&)> walk =
      [&](const FormulaNode& n) -> std::pair<std::pair<int, int>, int> {
    // returns ((depth, product_depth), degree_bound) and accumulates size/bit
    m.size += 1;
    switch (n.op) {
      case FormulaNode::Op::constant:
        m.bit += n.value.bit();
        return {{0, 0}, 0};
      case FormulaNode::Op::variable:
        return {{0, 0}, 1};
      default:
        break;
    }
    int depth = 0, pd = 0;
    int deg = n.op == FormulaNode::Op::sum ? 0 : 0;
    for (const auto& e : n.children) {
      m.bit += e.scalar.bit();
      auto [dp, cd] = walk(*e.node);
      depth = std::max(depth, dp.first);
      pd = std::max(pd, dp.second);
      if (n.op == FormulaNode::Op::sum)
        deg = std::max(deg, cd);
      else
        deg += cd;
    }
    return {{depth + 1, pd + (n.op == FormulaNode::Op::prod ? 1 : 0)},
            deg};
  };
  auto [dp, deg] = walk(*c.root);
  m.depth = dp.first;
  m.product_depth = dp.second;
  m.degree_bound = deg;
  m.bit += m.size;
  return m;
}

SparsePoly expand(const Formula& c, long term_budget) {
  int n = c.arity;
  std::function<SparsePoly(const FormulaNode&)> walk =
      [&](const FormulaNode& node) -> SparsePoly {
    SparsePoly r(n);
    switch (node.op) {
      case FormulaNode::Op::constant:
        return SparsePoly::constant(n, node.value);
      case FormulaNode::Op::variable:
        return SparsePoly::variable(n, node.index - 1);
      case FormulaNode::Op::sum:
        for (const auto& e : node.children) r += walk(*e.node).scale(e.scalar);
        break;
      case FormulaNode::Op::prod:
        r = SparsePoly::constant(n, Rational(1));
        for (const auto& e : node.children) r = r * walk(*e.node).scale(e.scalar);
        break;
    }
    require(r.sparsity() <= term_budget, errc::resource,
            "expand: term budget exceeded");
    return r;
  };
  return walk(*c.root);
}

Formula substitute_affine_formula(const Formula& c,
                                  const std::vector<Rational>& alpha,
                                  const std::vector<Rational>& beta) {
  require(static_cast<int>(alpha.size()) >= c.arity &&
              alpha.size() == beta.size(),
          errc::arity_mismatch, "substitute_affine_formula: bad shift arity");
  int n = static_cast<int>(alpha.size());
  std::function<std::shared_ptr<const FormulaNode>(const FormulaNode&)> walk =
      [&](const FormulaNode& node) -> std::shared_ptr<const FormulaNode> {
    auto out = std::make_shared<FormulaNode>();
    if (node.op == FormulaNode::Op::variable) {
      // x_i -> x_i + alpha_i * y + beta_i
      int i = node.index - 1;
      out->op = FormulaNode::Op::sum;
      auto xi = std::make_shared<FormulaNode>();
      xi->op = FormulaNode::Op::variable;
      xi->index = node.index;
      out->children.push_back({Rational(1), xi});
      if (!alpha[i].is_zero()) {
        auto y = std::make_shared<FormulaNode>();
        y->op = FormulaNode::Op::variable;
        y->index = n + 1;
        out->children.push_back({alpha[i], y});
      }
      if (!beta[i].is_zero()) {
        auto b = std::make_shared<FormulaNode>();
        b->op = FormulaNode::Op::constant;
        b->value = beta[i];
        out->children.push_back({Rational(1), b});
      }
      return out;
    }
    *out = node;
    out->children.clear();
    for (const auto& e : node.children)
      out->children.push_back({e.scalar, walk(*e.node)});
    return out;
  };
  Formula f;
  f.root = walk(*c.root);
  f.arity = n + 1;
  return f;
}

std::vector<Monomial> monomials_up_to_degree(int arity, int d) {
  std::vector<Monomial> out;
  Monomial m(arity);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == arity) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      m.exponents[pos] = e;
      rec(pos + 1, rem - e);
    }
    m.exponents[pos] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

SparsePoly interpolate_low_degree(const Formula& c, int d) {
  require(d >= 0, errc::precondition, "interpolate_low_degree: negative degree");
  int n = c.arity;
  if (n == 0) return SparsePoly::constant(0, eval_formula(c, {}));
  auto points = hitting_set(d, n);
  auto mons = monomials_up_to_degree(n, d);
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  a.reserve(points.size());
  b.reserve(points.size());
  for (const auto& pt : points) {
    std::vector<Rational> row;
    row.reserve(mons.size());
    for (const auto& mon : mons) {
      Rational v(1);
      for (int i = 0; i < n; ++i)
        for (int e = 0; e < mon.exponents[i]; ++e) v *= pt[i];
      row.push_back(v);
    }
    a.push_back(std::move(row));
    b.push_back(eval_formula(c, pt));
  }
  auto sol = bareiss_solve(a, b);
  require(sol.consistent, errc::precondition,
          "interpolate_low_degree: values are not explained by a polynomial of "
          "the stated degree");
  require(sol.unique, errc::internal, "interpolation system underdetermined");
  SparsePoly p(n);
  for (size_t k = 0; k < mons.size(); ++k)
    if (!sol.solution[k].is_zero()) p.add_term(mons[k], sol.solution[k]);
  return p;
}

}  // namespace degfac
