// Copyright 2026 The murlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "murlab/transport.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <utility>

namespace murlab {

namespace {

constexpr double kFlowTol = 1e-15;
constexpr double kReducedCostTol = 1e-12;
constexpr int kMaxPivots = 10000;

struct Cell {
  int i = 0;
  int j = 0;
};

// Union-find over the m row nodes and n column nodes of the transport graph.
class DisjointSet {
 public:
  explicit DisjointSet(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) {
    throw precondition_error("DiscreteDistribution: no atoms");
  }
  double sum = 0.0;
  for (Atom& a : atoms_) {
    if (!std::isfinite(a.value)) {
      throw precondition_error("DiscreteDistribution: value is not finite");
    }
    if (a.weight < -kTolPositive) {
      throw precondition_error("DiscreteDistribution: negative weight");
    }
    a.weight = std::max(a.weight, 0.0);
    sum += a.weight;
  }
  if (std::abs(sum - 1.0) > kTolHermitian) {
    throw precondition_error("DiscreteDistribution: weights must sum to 1");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.value < b.value; });
  std::vector<Atom> merged;
  merged.reserve(atoms_.size());
  for (const Atom& a : atoms_) {
    if (!merged.empty() &&
        std::abs(a.value - merged.back().value) <= kValueMergeTol) {
      merged.back().weight += a.weight;
    } else {
      merged.push_back(a);
    }
  }
  atoms_ = std::move(merged);
}

double DiscreteDistribution::mean() const {
  double m = 0.0;
  for (const Atom& a : atoms_) m += a.value * a.weight;
  return m;
}

double DiscreteDistribution::variance() const {
  const double m = mean();
  double v = 0.0;
  for (const Atom& a : atoms_) v += (a.value - m) * (a.value - m) * a.weight;
  return v;
}

TransportResult wasserstein2(const DiscreteDistribution& p,
                             const DiscreteDistribution& q) {
  const int m = static_cast<int>(p.size());
  const int n = static_cast<int>(q.size());

  Eigen::MatrixXd cost(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const double d = p.atom(i).value - q.atom(j).value;
      cost(i, j) = d * d;
    }
  }

  std::vector<double> supply(m), demand(n);
  for (int i = 0; i < m; ++i) supply[i] = p.atom(i).weight;
  for (int j = 0; j < n; ++j) demand[j] = q.atom(j).weight;

  Eigen::MatrixXd flow = Eigen::MatrixXd::Zero(m, n);
  std::vector<std::vector<char>> basic(m, std::vector<char>(n, 0));
  std::vector<Cell> basis;
  basis.reserve(m + n - 1);

  // ---- Vogel initialization -------------------------------------------
  std::vector<char> row_active(m, 1), col_active(n, 1);
  int active_rows = m;
  int active_cols = n;

  auto assign = [&](int i, int j) {
    const double f = std::min(supply[i], demand[j]);
    if (!basic[i][j]) {
      basic[i][j] = 1;
      basis.push_back({i, j});
    }
    flow(i, j) += f;
    supply[i] -= f;
    demand[j] -= f;
    const bool row_done = supply[i] <= kFlowTol;
    const bool col_done = demand[j] <= kFlowTol;
    if (row_done && col_done) {
      // Degenerate tie: retire only one side unless this was the last cell,
      // so the basis keeps its m + n - 1 structure.
      if (active_rows == 1 && active_cols == 1) {
        row_active[i] = 0;
        col_active[j] = 0;
        --active_rows;
        --active_cols;
      } else if (active_rows > 1) {
        row_active[i] = 0;
        --active_rows;
        demand[j] = 0.0;
      } else {
        col_active[j] = 0;
        --active_cols;
        supply[i] = 0.0;
      }
    } else if (row_done) {
      row_active[i] = 0;
      --active_rows;
    } else if (col_done) {
      col_active[j] = 0;
      --active_cols;
    }
  };

  while (active_rows > 0 && active_cols > 0) {
    if (active_rows == 1 || active_cols == 1) {
      // A single remaining line: assign its cells in cost order.
      int bi = -1, bj = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        if (!row_active[i]) continue;
        for (int j = 0; j < n; ++j) {
          if (!col_active[j]) continue;
          if (cost(i, j) < best) {
            best = cost(i, j);
            bi = i;
            bj = j;
          }
        }
      }
      assign(bi, bj);
      continue;
    }

    // Penalty of a line = gap between its two cheapest active cells.
    double best_penalty = -1.0;
    bool best_is_row = true;
    int best_line = -1;
    auto scan_line = [&](bool is_row, int idx) {
      double lowest = std::numeric_limits<double>::infinity();
      double second = std::numeric_limits<double>::infinity();
      const int limit = is_row ? n : m;
      for (int t = 0; t < limit; ++t) {
        const bool active = is_row ? col_active[t] : row_active[t];
        if (!active) continue;
        const double c = is_row ? cost(idx, t) : cost(t, idx);
        if (c < lowest) {
          second = lowest;
          lowest = c;
        } else if (c < second) {
          second = c;
        }
      }
      const double penalty = second - lowest;
      if (penalty > best_penalty) {
        best_penalty = penalty;
        best_is_row = is_row;
        best_line = idx;
      }
    };
    for (int i = 0; i < m; ++i) {
      if (row_active[i]) scan_line(true, i);
    }
    for (int j = 0; j < n; ++j) {
      if (col_active[j]) scan_line(false, j);
    }

    int bi = -1, bj = -1;
    double best = std::numeric_limits<double>::infinity();
    if (best_is_row) {
      bi = best_line;
      for (int j = 0; j < n; ++j) {
        if (col_active[j] && cost(bi, j) < best) {
          best = cost(bi, j);
          bj = j;
        }
      }
    } else {
      bj = best_line;
      for (int i = 0; i < m; ++i) {
        if (row_active[i] && cost(i, bj) < best) {
          best = cost(i, bj);
          bi = i;
        }
      }
    }
    assign(bi, bj);
  }

  // Pad a degenerate start to a spanning tree with zero-flow cells.
  const int node_count = m + n;
  DisjointSet components(node_count);
  for (const Cell& c : basis) components.unite(c.i, m + c.j);
  for (int i = 0; i < m && static_cast<int>(basis.size()) < m + n - 1; ++i) {
    for (int j = 0; j < n && static_cast<int>(basis.size()) < m + n - 1; ++j) {
      if (!basic[i][j] && components.unite(i, m + j)) {
        basic[i][j] = 1;
        basis.push_back({i, j});
      }
    }
  }

  // ---- MODI pivots ------------------------------------------------------
  for (int pivot = 0;; ++pivot) {
    if (pivot > kMaxPivots) {
      throw std::runtime_error("wasserstein2: simplex failed to converge");
    }

    // Adjacency of the basis tree over row nodes [0, m) and column nodes
    // [m, m + n).
    std::vector<std::vector<std::pair<int, int>>> adjacency(node_count);
    for (std::size_t e = 0; e < basis.size(); ++e) {
      const Cell& c = basis[e];
      adjacency[c.i].push_back({m + c.j, static_cast<int>(e)});
      adjacency[m + c.j].push_back({c.i, static_cast<int>(e)});
    }

    // Potentials: u_i + v_j = cost(i, j) on basic cells.
    std::vector<double> potential(node_count, 0.0);
    std::vector<char> seen(node_count, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      const int node = queue.front();
      queue.pop_front();
      for (const auto& [next, edge] : adjacency[node]) {
        if (seen[next]) continue;
        seen[next] = 1;
        const Cell& c = basis[edge];
        potential[next] = cost(c.i, c.j) - potential[node];
        queue.push_back(next);
      }
    }

    int enter_i = -1, enter_j = -1;
    double most_negative = -kReducedCostTol;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        if (basic[i][j]) continue;
        const double reduced = cost(i, j) - potential[i] - potential[m + j];
        if (reduced < most_negative) {
          most_negative = reduced;
          enter_i = i;
          enter_j = j;
        }
      }
    }
    if (enter_i < 0) break;  // every reduced cost is nonnegative: optimal

    // The unique tree path from the entering row to the entering column
    // closes the pivot cycle.
    std::vector<int> parent_node(node_count, -1), parent_edge(node_count, -1);
    std::fill(seen.begin(), seen.end(), 0);
    queue = {enter_i};
    seen[enter_i] = 1;
    while (!queue.empty()) {
      const int node = queue.front();
      queue.pop_front();
      if (node == m + enter_j) break;
      for (const auto& [next, edge] : adjacency[node]) {
        if (seen[next]) continue;
        seen[next] = 1;
        parent_node[next] = node;
        parent_edge[next] = edge;
        queue.push_back(next);
      }
    }

    std::vector<int> path;  // basis edge indices from the column end back
    for (int node = m + enter_j; node != enter_i; node = parent_node[node]) {
      path.push_back(parent_edge[node]);
    }

    // Alternate signs along the cycle; the entering cell takes +theta and
    // the edge adjacent to the entering column takes -theta.
    double theta = std::numeric_limits<double>::infinity();
    int leaving = -1;
    for (std::size_t t = 0; t < path.size(); t += 2) {
      const Cell& c = basis[path[t]];
      if (flow(c.i, c.j) < theta) {
        theta = flow(c.i, c.j);
        leaving = path[t];
      }
    }

    flow(enter_i, enter_j) += theta;
    for (std::size_t t = 0; t < path.size(); ++t) {
      const Cell& c = basis[path[t]];
      if (t % 2 == 0) {
        flow(c.i, c.j) = std::max(0.0, flow(c.i, c.j) - theta);
      } else {
        flow(c.i, c.j) += theta;
      }
    }

    const Cell leaving_cell = basis[leaving];
    flow(leaving_cell.i, leaving_cell.j) = 0.0;
    basic[leaving_cell.i][leaving_cell.j] = 0;
    basic[enter_i][enter_j] = 1;
    basis[leaving] = {enter_i, enter_j};
  }

  TransportResult result;
  result.plan.row_values.resize(m);
  result.plan.col_values.resize(n);
  for (int i = 0; i < m; ++i) result.plan.row_values[i] = p.atom(i).value;
  for (int j = 0; j < n; ++j) result.plan.col_values[j] = q.atom(j).value;
  result.plan.flow = flow;
  result.squared = std::max(0.0, (flow.array() * cost.array()).sum());
  result.distance = std::sqrt(result.squared);
  return result;
}

DiscreteDistribution distribution_of(const DiscreteObservable& obs,
                                     const QuantumState& rho) {
  if (obs.dim() != rho.dim()) {
    throw precondition_error("distribution_of: dimension mismatch");
  }
  std::vector<DiscreteDistribution::Atom> atoms;
  atoms.reserve(obs.size());
  for (const Outcome& o : obs.outcomes()) {
    atoms.push_back({o.value, real_expectation(rho, o.effect)});
  }
  return DiscreteDistribution(std::move(atoms));
}

namespace {

// Nelder-Mead refinement of the sphere search, run in a tangent plane of the
// grid optimum. Coordinates (s, t) map to normalize(base + s e1 + t e2).
template <typename F>
std::pair<Eigen::Vector2d, double> nelder_mead_max(const F& f,
                                                   double init_step,
                                                   double tol, int max_iter) {
  std::array<Eigen::Vector2d, 3> x = {Eigen::Vector2d(0, 0),
                                      Eigen::Vector2d(init_step, 0),
                                      Eigen::Vector2d(0, init_step)};
  std::array<double, 3> y = {f(x[0]), f(x[1]), f(x[2])};

  for (int iter = 0; iter < max_iter; ++iter) {
    // Order so y[0] is the best (largest) vertex.
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return y[a] > y[b]; });
    x = {x[idx[0]], x[idx[1]], x[idx[2]]};
    y = {y[idx[0]], y[idx[1]], y[idx[2]]};

    const double spread = std::max((x[0] - x[2]).norm(), (x[1] - x[2]).norm());
    if (spread < tol) break;

    const Eigen::Vector2d centroid = 0.5 * (x[0] + x[1]);
    const Eigen::Vector2d reflected = centroid + (centroid - x[2]);
    const double fr = f(reflected);
    if (fr > y[0]) {
      const Eigen::Vector2d expanded = centroid + 2.0 * (centroid - x[2]);
      const double fe = f(expanded);
      if (fe > fr) {
        x[2] = expanded;
        y[2] = fe;
      } else {
        x[2] = reflected;
        y[2] = fr;
      }
    } else if (fr > y[1]) {
      x[2] = reflected;
      y[2] = fr;
    } else {
      const Eigen::Vector2d contracted = centroid + 0.5 * (x[2] - centroid);
      const double fc = f(contracted);
      if (fc > y[2]) {
        x[2] = contracted;
        y[2] = fc;
      } else {
        x[1] = x[0] + 0.5 * (x[1] - x[0]);
        x[2] = x[0] + 0.5 * (x[2] - x[0]);
        y[1] = f(x[1]);
        y[2] = f(x[2]);
      }
    }
  }

  int best = 0;
  for (int k = 1; k < 3; ++k) {
    if (y[k] > y[best]) best = k;
  }
  return {x[best], y[best]};
}

}  // namespace

Delta2Result delta2_observables(const DiscreteObservable& a,
                                const DiscreteObservable& c) {
  if (a.dim() != 2 || c.dim() != 2) {
    throw precondition_error(
        "delta2_observables: only qubit observables are supported");
  }

  const auto objective = [&](const BlochVector& r) {
    const QuantumState rho = QuantumState::from_bloch(r);
    return wasserstein2(distribution_of(a, rho), distribution_of(c, rho))
        .squared;
  };

  // Stage 1: Fibonacci sphere grid.
  constexpr int kGridPoints = 2048;
  constexpr double kGoldenAngle = 2.399963229728653;  // pi (3 - sqrt 5)
  BlochVector best_r(0, 0, 1);
  double best = -1.0;
  for (int k = 0; k < kGridPoints; ++k) {
    const double z = 1.0 - (2.0 * k + 1.0) / kGridPoints;
    const double radius = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = kGoldenAngle * k;
    const BlochVector r(radius * std::cos(phi), radius * std::sin(phi), z);
    const double f = objective(r);
    if (f > best) {
      best = f;
      best_r = r;
    }
  }

  // Stage 2: Nelder-Mead in the tangent plane of the grid optimum.
  const BlochVector aux =
      std::abs(best_r.x()) < 0.9 ? BlochVector(1, 0, 0) : BlochVector(0, 1, 0);
  const BlochVector e1 = aux.cross(best_r).normalized();
  const BlochVector e2 = best_r.cross(e1);
  const auto chart = [&](const Eigen::Vector2d& st) {
    return BlochVector((best_r + st.x() * e1 + st.y() * e2).normalized());
  };
  const auto [arg, value] = nelder_mead_max(
      [&](const Eigen::Vector2d& st) { return objective(chart(st)); },
      /*init_step=*/0.05, /*tol=*/1e-7, /*max_iter=*/200);

  Delta2Result result;
  if (value > best) {
    result.squared = value;
    result.maximizer = chart(arg);
  } else {
    result.squared = best;
    result.maximizer = best_r;
  }
  result.distance = std::sqrt(result.squared);
  return result;
}

}  // namespace murlab
