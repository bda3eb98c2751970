/* Copyright 2026 The Pavelka Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "pavelka/optimizer.h"

#include <functional>
#include <stdexcept>
#include <utility>

#include "pavelka/errors.h"

namespace pavelka {

LinExpr LinExpr::Var(int index, const Rational& coef) {
  LinExpr e;
  if (!coef.is_zero()) e.terms_[index] = coef;
  return e;
}

Rational LinExpr::Evaluate(std::span<const Rational> values) const {
  Rational sum = constant_;
  for (const auto& [index, coef] : terms_) sum += coef * values[index];
  return sum;
}

LinExpr& LinExpr::operator+=(const LinExpr& rhs) {
  constant_ += rhs.constant_;
  for (const auto& [index, coef] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(index, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& rhs) {
  LinExpr neg = rhs;
  neg *= Rational(-1);
  return *this += neg;
}

LinExpr& LinExpr::operator*=(const Rational& k) {
  if (k.is_zero()) {
    terms_.clear();
    constant_ = Rational(0);
    return *this;
  }
  constant_ *= k;
  for (auto& [index, coef] : terms_) coef *= k;
  return *this;
}

int LinearProgram::AddVariable(std::string name, std::optional<Rational> lower,
                               std::optional<Rational> upper) {
  variables_.push_back({std::move(name), std::move(lower), std::move(upper)});
  return static_cast<int>(variables_.size()) - 1;
}

void LinearProgram::SetBounds(int index, std::optional<Rational> lower,
                              std::optional<Rational> upper) {
  variables_.at(index).lower = std::move(lower);
  variables_.at(index).upper = std::move(upper);
}

void LinearProgram::AddConstraint(const LinExpr& lhs, Relation relation,
                                  const LinExpr& rhs) {
  for (const auto& [index, coef] : lhs.terms()) {
    if (index < 0 || index >= num_variables()) {
      throw std::out_of_range("constraint references undeclared variable");
    }
  }
  for (const auto& [index, coef] : rhs.terms()) {
    if (index < 0 || index >= num_variables()) {
      throw std::out_of_range("constraint references undeclared variable");
    }
  }
  constraints_.push_back({lhs - rhs, relation});
}

void LinearProgram::SetObjective(LinExpr objective, Sense sense) {
  objective_ = std::move(objective);
  sense_ = sense;
}

bool LinearProgram::IsFeasible(std::span<const Rational> values) const {
  if (values.size() != variables_.size()) return false;
  for (std::size_t j = 0; j < variables_.size(); ++j) {
    const Variable& v = variables_[j];
    if (v.lower && values[j] < *v.lower) return false;
    if (v.upper && values[j] > *v.upper) return false;
  }
  for (const Constraint& c : constraints_) {
    int s = c.expr.Evaluate(values).sign();
    switch (c.relation) {
      case Relation::kLessEqual:
        if (s > 0) return false;
        break;
      case Relation::kGreaterEqual:
        if (s < 0) return false;
        break;
      case Relation::kEqual:
        if (s != 0) return false;
        break;
    }
  }
  return true;
}

namespace {

// Dense tableau over nonnegative columns in canonical form: the basic
// column of row i is a unit vector. The objective row holds reduced costs
// and, in its last entry, minus the current objective value.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : cols_(cols), t_(rows, std::vector<mpq_class>(cols + 1)), basis_(rows) {}

  mpq_class& at(int i, int j) { return t_[i][j]; }
  mpq_class& rhs(int i) { return t_[i][cols_]; }
  int rows() const { return static_cast<int>(t_.size()); }
  int cols() const { return cols_; }
  int& basis(int i) { return basis_[i]; }

  void RemoveRow(int i) {
    t_.erase(t_.begin() + i);
    basis_.erase(basis_.begin() + i);
  }

  // Reduced costs for `cost` (one entry per column) given the basis.
  void PriceOut(const std::vector<mpq_class>& cost) {
    z_.assign(cols_ + 1, mpq_class(0));
    for (int j = 0; j < cols_; ++j) z_[j] = cost[j];
    for (int i = 0; i < rows(); ++i) {
      const mpq_class& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (int j = 0; j <= cols_; ++j) {
        if (sgn(t_[i][j]) != 0) z_[j] -= cb * t_[i][j];
      }
    }
  }

  // Current objective value.
  mpq_class Objective() const { return -z_[cols_]; }

  void Pivot(int r, int c) {
    std::vector<mpq_class>& pr = t_[r];
    mpq_class inv = 1 / pr[c];
    std::vector<int> nz;
    for (int j = 0; j <= cols_; ++j) {
      if (sgn(pr[j]) != 0) {
        pr[j] *= inv;
        nz.push_back(j);
      }
    }
    auto eliminate = [&](std::vector<mpq_class>& row) {
      if (sgn(row[c]) == 0) return;
      mpq_class factor = row[c];
      for (int j : nz) row[j] -= factor * pr[j];
    };
    for (int i = 0; i < rows(); ++i) {
      if (i != r) eliminate(t_[i]);
    }
    eliminate(z_);
    basis_[r] = c;
  }

  enum class Outcome { kOptimal, kUnbounded };

  // Bland's rule: lowest-index improving column enters; ties in the ratio
  // test go to the lowest-index basic variable.
  Outcome Run(const std::vector<bool>& may_enter) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (may_enter[j] && sgn(z_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return Outcome::kOptimal;
      int leave = -1;
      mpq_class best;
      for (int i = 0; i < rows(); ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        mpq_class ratio = t_[i][cols_] / t_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return Outcome::kUnbounded;
      Pivot(leave, enter);
    }
  }

 private:
  int cols_;
  std::vector<std::vector<mpq_class>> t_;
  std::vector<mpq_class> z_;
  std::vector<int> basis_;
};

struct SparseRow {
  std::map<int, mpq_class> coefs;
  Relation relation;
  mpq_class rhs;
};

}  // namespace

LpResult SolveLp(const LinearProgram& program) {
  const int n = program.num_variables();
  LpResult infeasible{LpStatus::kInfeasible, Rational(0), {}};

  // Substitute every variable by nonnegative columns:
  //   x = lower + y, x = upper - y, or x = y+ - y-.
  std::vector<mpq_class> offset(n);
  std::vector<std::vector<std::pair<int, int>>> columns(n);  // (col, +-1)
  std::vector<SparseRow> rows;
  int ny = 0;
  for (int j = 0; j < n; ++j) {
    const Variable& v = program.variable(j);
    if (v.lower && v.upper && *v.upper < *v.lower) return infeasible;
    if (v.lower) {
      offset[j] = v.lower->mpq();
      int y = ny++;
      columns[j] = {{y, 1}};
      if (v.upper) {
        rows.push_back({{{y, mpq_class(1)}},
                        Relation::kLessEqual,
                        v.upper->mpq() - v.lower->mpq()});
      }
    } else if (v.upper) {
      offset[j] = v.upper->mpq();
      columns[j] = {{ny++, -1}};
    } else {
      int plus = ny++;
      int minus = ny++;
      columns[j] = {{plus, 1}, {minus, -1}};
    }
  }

  auto translate = [&](const LinExpr& e, mpq_class& constant) {
    std::map<int, mpq_class> out;
    constant = e.constant().mpq();
    for (const auto& [j, coef] : e.terms()) {
      constant += coef.mpq() * offset[j];
      for (auto [col, s] : columns[j]) out[col] += s * coef.mpq();
    }
    std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
  };

  for (const Constraint& c : program.constraints()) {
    mpq_class k;
    auto coefs = translate(c.expr, k);
    mpq_class rhs = -k;
    if (coefs.empty()) {
      int s = sgn(rhs);  // 0 relation rhs
      bool ok = c.relation == Relation::kEqual          ? s == 0
                : c.relation == Relation::kLessEqual ? s >= 0
                                                     : s <= 0;
      if (!ok) return infeasible;
      continue;
    }
    rows.push_back({std::move(coefs), c.relation, rhs});
  }
  mpq_class objective_constant;
  auto objective = translate(program.objective(), objective_constant);
  if (program.sense() == Sense::kMaximize) {
    for (auto& [col, coef] : objective) coef = -coef;
  }

  // Normalize to nonnegative right-hand sides and count auxiliary columns.
  int slack_count = 0;
  int artificial_count = 0;
  for (SparseRow& row : rows) {
    if (sgn(row.rhs) < 0) {
      for (auto& [col, coef] : row.coefs) coef = -coef;
      row.rhs = -row.rhs;
      if (row.relation == Relation::kLessEqual) {
        row.relation = Relation::kGreaterEqual;
      } else if (row.relation == Relation::kGreaterEqual) {
        row.relation = Relation::kLessEqual;
      }
    }
    if (row.relation != Relation::kEqual) ++slack_count;
    if (row.relation != Relation::kLessEqual) ++artificial_count;
  }

  const int m = static_cast<int>(rows.size());
  const int first_slack = ny;
  const int first_artificial = ny + slack_count;
  const int cols = ny + slack_count + artificial_count;
  Tableau tab(m, cols);
  int next_slack = first_slack;
  int next_artificial = first_artificial;
  for (int i = 0; i < m; ++i) {
    for (auto& [col, coef] : rows[i].coefs) tab.at(i, col) = coef;
    tab.rhs(i) = rows[i].rhs;
    switch (rows[i].relation) {
      case Relation::kLessEqual:
        tab.at(i, next_slack) = 1;
        tab.basis(i) = next_slack++;
        break;
      case Relation::kGreaterEqual:
        tab.at(i, next_slack++) = -1;
        tab.at(i, next_artificial) = 1;
        tab.basis(i) = next_artificial++;
        break;
      case Relation::kEqual:
        tab.at(i, next_artificial) = 1;
        tab.basis(i) = next_artificial++;
        break;
    }
  }

  std::vector<bool> may_enter(cols, true);
  if (artificial_count > 0) {
    std::vector<mpq_class> phase1(cols, mpq_class(0));
    for (int j = first_artificial; j < cols; ++j) phase1[j] = 1;
    tab.PriceOut(phase1);
    tab.Run(may_enter);  // bounded below by 0
    if (sgn(tab.Objective()) > 0) return infeasible;
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (int i = tab.rows() - 1; i >= 0; --i) {
      if (tab.basis(i) < first_artificial) continue;
      int pivot_col = -1;
      for (int j = 0; j < first_artificial; ++j) {
        if (sgn(tab.at(i, j)) != 0) {
          pivot_col = j;
          break;
        }
      }
      if (pivot_col >= 0) {
        tab.Pivot(i, pivot_col);
      } else {
        tab.RemoveRow(i);
      }
    }
    for (int j = first_artificial; j < cols; ++j) may_enter[j] = false;
  }

  std::vector<mpq_class> phase2(cols, mpq_class(0));
  for (auto& [col, coef] : objective) phase2[col] = coef;
  tab.PriceOut(phase2);
  if (tab.Run(may_enter) == Tableau::Outcome::kUnbounded) {
    return {LpStatus::kUnbounded, Rational(0), {}};
  }

  std::vector<mpq_class> y(ny);
  for (int i = 0; i < tab.rows(); ++i) {
    if (tab.basis(i) < ny) y[tab.basis(i)] = tab.rhs(i);
  }
  LpResult result;
  result.status = LpStatus::kOptimal;
  result.assignment.reserve(n);
  for (int j = 0; j < n; ++j) {
    mpq_class x = offset[j];
    for (auto [col, s] : columns[j]) x += s * y[col];
    result.assignment.emplace_back(Rational(x));
  }
  result.value = program.objective().Evaluate(result.assignment);
  return result;
}

int MixedProgram::AddBinary(std::string name) {
  int index = lp_.AddVariable(std::move(name), Rational(0), Rational(1));
  binaries_.push_back(index);
  return index;
}

LpResult SolveMilp(const MixedProgram& program, const MilpOptions& options) {
  if (static_cast<int>(program.binaries().size()) > options.max_binaries) {
    throw LimitError("program has " +
                     std::to_string(program.binaries().size()) +
                     " binary variables; the limit is " +
                     std::to_string(options.max_binaries));
  }
  LinearProgram lp = program.lp();
  for (int b : program.binaries()) lp.SetBounds(b, Rational(0), Rational(1));
  const bool minimize = lp.sense() == Sense::kMinimize;
  auto better = [minimize](const Rational& a, const Rational& b) {
    return minimize ? a < b : a > b;
  };

  std::optional<LpResult> best;
  bool unbounded = false;
  std::function<void()> explore = [&]() {
    if (unbounded) return;
    LpResult relaxed = SolveLp(lp);
    if (relaxed.status == LpStatus::kInfeasible) return;
    if (relaxed.status == LpStatus::kUnbounded) {
      unbounded = true;
      return;
    }
    if (best && !better(relaxed.value, best->value)) return;
    int branch = -1;
    for (int b : program.binaries()) {
      const Rational& v = relaxed.assignment[b];
      if (!(v.is_zero() || v == Rational(1))) {
        branch = b;
        break;
      }
    }
    if (branch < 0) {
      best = std::move(relaxed);
      return;
    }
    Variable saved = lp.variable(branch);
    lp.SetBounds(branch, Rational(0), Rational(0));
    explore();
    lp.SetBounds(branch, Rational(1), Rational(1));
    explore();
    lp.SetBounds(branch, saved.lower, saved.upper);
  };
  explore();
  if (unbounded) return {LpStatus::kUnbounded, Rational(0), {}};
  if (!best) return {LpStatus::kInfeasible, Rational(0), {}};
  return *best;
}

}  // namespace pavelka
