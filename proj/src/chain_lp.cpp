// Exact oracle for the exp-edit distance.
//
// Any optimal matching can be normalized so that each box of the factor grid
// holds at most one segment, and the boxes used form a chain (no pair with
// i0 < i1 and j0 > j1). For a fixed chain the cost is affine in the segment
// extents h_v:
//
//   cost = sum_i c_i del(a_i) + sum_j d_j ins(b_j) - sum_v gain_v h_v,
//   gain_v = del(a) + ins(b) - sub(a, b) >= 0,
//
// subject to the extents in row i summing to at most c_i, those in column j
// to at most d_j, and h >= 0. The oracle minimizes over every chain.

#include <algorithm>

#include "expstr/matching.hpp"

namespace expstr {

namespace {

/// max g·h subject to A h <= b, h >= 0 with b >= 0, solved with the primal
/// simplex method and Bland's rule in exact arithmetic. The origin is
/// feasible, so no first phase is needed.
struct SimplexResult {
  Rational value;
  std::vector<Rational> solution;
};

SimplexResult maximize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                       const std::vector<Rational>& g) {
  const std::size_t rows = a.size();
  const std::size_t vars = g.size();
  const std::size_t cols = vars + rows;

  // tableau[r] = [A | I | b], objective row holds reduced costs and -value.
  std::vector<std::vector<Rational>> tab(rows + 1, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t v = 0; v < vars; ++v) tab[r][v] = a[r][v];
    tab[r][vars + r] = 1;
    tab[r][cols] = b[r];
    basis[r] = vars + r;
  }
  for (std::size_t v = 0; v < vars; ++v) tab[rows][v] = -g[v];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t c = 0; c < cols; ++c)
      if (sgn(tab[rows][c]) < 0) {
        enter = c;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (sgn(tab[r][enter]) <= 0) continue;
      Rational ratio = tab[r][cols] / tab[r][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == rows) throw std::logic_error("chain LP is unbounded");

    Rational pivot = tab[leave][enter];
    for (auto& x : tab[leave]) x /= pivot;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == leave || sgn(tab[r][enter]) == 0) continue;
      Rational factor = tab[r][enter];
      for (std::size_t c = 0; c <= cols; ++c) tab[r][c] -= factor * tab[leave][c];
    }
    basis[leave] = enter;
  }

  SimplexResult out{tab[rows][cols], std::vector<Rational>(vars)};
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] < vars) out.solution[basis[r]] = tab[r][cols];
  return out;
}

Rational full_edit_cost(const ExpString& p, const ExpString& q, const CostModel& m) {
  Rational total = 0;
  for (const auto& f : p.factors()) total += f.exponent.value() * m.del(f.symbol);
  for (const auto& f : q.factors()) total += f.exponent.value() * m.ins(f.symbol);
  return total;
}

void extend_chains(const std::vector<std::pair<std::size_t, std::size_t>>& boxes, std::size_t next, BoxChain& current,
                   std::vector<BoxChain>& out) {
  if (next == boxes.size()) {
    if (!current.empty()) out.push_back(current);
    return;
  }
  auto [i, j] = boxes[next];
  bool compatible = std::all_of(current.begin(), current.end(),
                                [&](const auto& box) { return !(box.first < i && box.second > j); });
  if (compatible) {
    current.push_back(boxes[next]);
    extend_chains(boxes, next + 1, current, out);
    current.pop_back();
  }
  extend_chains(boxes, next + 1, current, out);
}

}  // namespace

std::vector<BoxChain> enumerate_box_chains(const ExpString& p, const ExpString& q, std::size_t max_flen) {
  if (p.flen() > max_flen || q.flen() > max_flen)
    throw GuardExceeded("oracle limited to " + std::to_string(max_flen) + " factors per string, got " +
                        std::to_string(p.flen()) + " and " + std::to_string(q.flen()));
  std::vector<std::pair<std::size_t, std::size_t>> boxes;
  for (std::size_t i = 0; i < p.flen(); ++i)
    for (std::size_t j = 0; j < q.flen(); ++j) boxes.emplace_back(i, j);
  std::vector<BoxChain> out;
  BoxChain current;
  extend_chains(boxes, 0, current, out);
  return out;
}

ChainSolution chain_lp_solve(const BoxChain& chain, const ExpString& p, const ExpString& q, const CostModel& m) {
  for (std::size_t v = 0; v < chain.size(); ++v) {
    if (chain[v].first >= p.flen() || chain[v].second >= q.flen())
      throw std::invalid_argument("chain box outside the grid");
    if (v > 0 && !(chain[v - 1] < chain[v]))
      throw std::invalid_argument("chain boxes must be strictly increasing");
    for (std::size_t u = 0; u < v; ++u)
      if (chain[u].first < chain[v].first && chain[u].second > chain[v].second)
        throw std::invalid_argument("chain is not monotone");
  }

  std::vector<std::size_t> used_rows, used_cols;
  for (const auto& [i, j] : chain) {
    if (std::find(used_rows.begin(), used_rows.end(), i) == used_rows.end()) used_rows.push_back(i);
    if (std::find(used_cols.begin(), used_cols.end(), j) == used_cols.end()) used_cols.push_back(j);
  }

  const std::size_t t = chain.size();
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (std::size_t i : used_rows) {
    std::vector<Rational> row(t);
    for (std::size_t v = 0; v < t; ++v) row[v] = chain[v].first == i ? 1 : 0;
    a.push_back(std::move(row));
    b.push_back(p[i].exponent.value());
  }
  for (std::size_t j : used_cols) {
    std::vector<Rational> row(t);
    for (std::size_t v = 0; v < t; ++v) row[v] = chain[v].second == j ? 1 : 0;
    a.push_back(std::move(row));
    b.push_back(q[j].exponent.value());
  }

  std::vector<Rational> gain(t);
  for (std::size_t v = 0; v < t; ++v) {
    Symbol from = p[chain[v].first].symbol;
    Symbol to = q[chain[v].second].symbol;
    gain[v] = m.del(from) + m.ins(to) - m.sub(from, to);
  }

  auto lp = maximize(a, b, gain);
  return {full_edit_cost(p, q, m) - lp.value, std::move(lp.solution)};
}

OracleResult oracle_solve(const ExpString& p, const ExpString& q, const CostModel& m, std::size_t max_flen) {
  OracleResult out{full_edit_cost(p, q, m), ExpMatching{{}, len(p), len(q)}, 0};
  if (p.empty() || q.empty()) return out;

  BoxGrid grid = box_grid(p, q);
  for (const auto& chain : enumerate_box_chains(p, q, max_flen)) {
    ++out.chains_examined;
    auto solution = chain_lp_solve(chain, p, q, m);
    if (solution.cost < out.distance) {
      out.distance = solution.cost;
      out.matching = matching_from_chain(chain, solution.extents, grid);
    }
  }
  return out;
}

Rational oracle_distance(const ExpString& p, const ExpString& q, const CostModel& m, std::size_t max_flen) {
  return oracle_solve(p, q, m, max_flen).distance;
}

}  // namespace expstr
