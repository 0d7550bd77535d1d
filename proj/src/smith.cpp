#include "ternhom/smith.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

#include "ternhom/errors.hpp"

namespace ternhom {

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

namespace {

void apply_op(const ElementaryOp& op, std::vector<Integer>& v) {
  if (op.i == op.j) {
    v[op.i] *= op.a;
    return;
  }
  if (op.a == 1 && op.c == 0 && op.d == 1) {
    if (v[op.j] != 0) v[op.i] += op.b * v[op.j];
    return;
  }
  const Integer vi = v[op.i], vj = v[op.j];
  v[op.i] = op.a * vi + op.b * vj;
  v[op.j] = op.c * vi + op.d * vj;
}

ElementaryOp inverse(const ElementaryOp& op) {
  if (op.i == op.j) return op;
  const Integer det = op.a * op.d - op.b * op.c;
  return {op.i, op.j, det * op.d, -det * op.b, -det * op.c, det * op.a};
}

ElementaryOp transpose(const ElementaryOp& op) {
  if (op.i == op.j) return op;
  return {op.i, op.j, op.a, op.c, op.b, op.d};
}

}  // namespace

std::vector<Integer> SmithDecomposition::torsion() const {
  std::vector<Integer> out;
  for (const auto& d : factors_)
    if (d > 1) out.push_back(d);
  return out;
}

DenseMatrix SmithDecomposition::diagonal() const {
  DenseMatrix s(rows_, cols_);
  for (std::size_t k = 0; k < factors_.size(); ++k) s(k, k) = factors_[k];
  return s;
}

std::vector<Integer> SmithDecomposition::left_coordinates(std::span<const Integer> z) const {
  if (z.size() != rows_) throw MalformedInput("vector length does not match matrix rows");
  std::vector<Integer> v(z.begin(), z.end());
  for (const auto& op : row_ops_) apply_op(op, v);
  std::vector<Integer> y(rows_);
  for (std::size_t k = 0; k < rows_; ++k) y[k] = std::move(v[row_perm_[k]]);
  return y;
}

std::vector<Integer> SmithDecomposition::left_column(std::size_t k) const {
  std::vector<Integer> v(rows_);
  v[row_perm_.at(k)] = 1;
  for (auto it = row_ops_.rbegin(); it != row_ops_.rend(); ++it) apply_op(inverse(*it), v);
  return v;
}

std::vector<Integer> SmithDecomposition::left_inverse_row(std::size_t k) const {
  std::vector<Integer> v(rows_);
  v[row_perm_.at(k)] = 1;
  for (auto it = row_ops_.rbegin(); it != row_ops_.rend(); ++it) apply_op(transpose(*it), v);
  return v;
}

std::vector<Integer> SmithDecomposition::right_row(std::size_t k) const {
  if (!column_log_) throw ContractViolation("right_row needs a decomposition with logged column operations");
  std::vector<Integer> v(cols_);
  v[col_perm_.at(k)] = 1;
  for (auto it = col_ops_.rbegin(); it != col_ops_.rend(); ++it) apply_op(transpose(inverse(*it)), v);
  return v;
}

std::vector<Integer> SmithDecomposition::right_apply(std::span<const Integer> w) const {
  if (!column_log_) throw ContractViolation("right_apply needs a decomposition with logged column operations");
  if (w.size() != cols_) throw MalformedInput("vector length does not match matrix columns");
  std::vector<Integer> v(w.begin(), w.end());
  for (const auto& op : col_ops_) apply_op(inverse(op), v);
  std::vector<Integer> out(cols_);
  for (std::size_t k = 0; k < cols_; ++k) out[k] = std::move(v[col_perm_[k]]);
  return out;
}

// ---------------------------------------------------------------------------

class SmithEliminator {
 public:
  SmithEliminator(const SparseMatrix& a, const SmithOptions& options, SmithDecomposition& out)
      : options_(options),
        out_(out),
        log_columns_(options.log_column_ops || options.compute_transforms),
        rows_(a.rows()),
        col_rows_(a.cols()),
        col_count_(a.cols(), 0),
        row_active_(a.rows(), 1),
        col_active_(a.cols(), 1),
        stamp_(a.rows(), 0),
        start_(std::chrono::steady_clock::now()) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (const auto& e : a.column(j)) {
        check_bits(e.value);
        rows_[e.row].push_back({static_cast<std::uint32_t>(j), e.value});
        col_rows_[j].push_back(static_cast<std::uint32_t>(e.row));
        ++col_count_[j];
      }
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (col_count_[j]) by_count_.insert({col_count_[j], static_cast<std::uint32_t>(j)});
    out_.rows_ = a.rows();
    out_.cols_ = a.cols();
    out_.column_log_ = log_columns_;
  }

  void run() {
    while (auto pivot = find_pivot()) {
      check_time();
      eliminate(pivot->first, pivot->second);
    }
    finish();
  }

 private:
  struct Cell {
    std::uint32_t col;
    Integer v;
  };
  using Row = std::vector<Cell>;
  struct Pivot {
    std::uint32_t row, col;
    Integer value;
  };

  const SmithOptions& options_;
  SmithDecomposition& out_;
  bool log_columns_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;  // superset of the true occupancy
  std::vector<std::uint32_t> col_count_;              // exact
  std::set<std::pair<std::uint32_t, std::uint32_t>> by_count_;
  std::vector<char> row_active_, col_active_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  bool units_exhausted_ = false;
  std::vector<Pivot> pivots_;
  std::chrono::steady_clock::time_point start_;

  void check_bits(const Integer& v) const {
    if (bit_length(v) > options_.max_entry_bits)
      throw ResourceLimit("Smith normal form entry exceeded " + std::to_string(options_.max_entry_bits) + " bits");
  }

  void check_time() const {
    if (options_.time_budget.count() <= 0) return;
    if (std::chrono::steady_clock::now() - start_ > options_.time_budget)
      throw ResourceLimit("Smith normal form exceeded its time budget of " +
                          std::to_string(options_.time_budget.count()) + " ms");
  }

  const Integer* entry(std::uint32_t r, std::uint32_t c) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Cell& x, std::uint32_t col) { return x.col < col; });
    return (it != row.end() && it->col == c) ? &it->v : nullptr;
  }

  void set_count(std::uint32_t c, std::uint32_t count) {
    if (col_active_[c]) {
      if (col_count_[c]) by_count_.erase({col_count_[c], c});
      if (count) by_count_.insert({count, c});
    }
    col_count_[c] = count;
  }

  // Active rows with a nonzero in column c, ascending; compacts the list.
  const std::vector<std::uint32_t>& column_rows(std::uint32_t c) {
    ++epoch_;
    auto& list = col_rows_[c];
    std::vector<std::uint32_t> clean;
    clean.reserve(col_count_[c]);
    for (auto r : list) {
      if (!row_active_[r] || stamp_[r] == epoch_) continue;
      stamp_[r] = epoch_;
      if (entry(r, c)) clean.push_back(r);
    }
    std::sort(clean.begin(), clean.end());
    list = std::move(clean);
    return list;
  }

  void replace_row(std::uint32_t r, Row next) {
    Row& prev = rows_[r];
    std::size_t i = 0, j = 0;
    while (i < prev.size() || j < next.size()) {
      if (j == next.size() || (i < prev.size() && prev[i].col < next[j].col)) {
        set_count(prev[i].col, col_count_[prev[i].col] - 1);
        ++i;
      } else if (i == prev.size() || next[j].col < prev[i].col) {
        set_count(next[j].col, col_count_[next[j].col] + 1);
        col_rows_[next[j].col].push_back(r);
        ++j;
      } else {
        ++i;
        ++j;
      }
    }
    prev = std::move(next);
  }

  Row combine(const Integer& fx, const Row& x, const Integer& fy, const Row& y) const {
    Row out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      Cell cell;
      if (j == y.size() || (i < x.size() && x[i].col < y[j].col)) {
        cell = {x[i].col, fx * x[i].v};
        ++i;
      } else if (i == x.size() || y[j].col < x[i].col) {
        cell = {y[j].col, fy * y[j].v};
        ++j;
      } else {
        cell = {x[i].col, fx * x[i].v + fy * y[j].v};
        ++i;
        ++j;
      }
      if (cell.v != 0) {
        check_bits(cell.v);
        out.push_back(std::move(cell));
      }
    }
    return out;
  }

  void set_entry(std::uint32_t r, std::uint32_t c, Integer v) {
    auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Cell& x, std::uint32_t col) { return x.col < col; });
    const bool present = it != row.end() && it->col == c;
    if (v == 0) {
      if (present) {
        row.erase(it);
        set_count(c, col_count_[c] - 1);
      }
      return;
    }
    check_bits(v);
    if (present) {
      it->v = std::move(v);
    } else {
      row.insert(it, Cell{c, std::move(v)});
      set_count(c, col_count_[c] + 1);
      col_rows_[c].push_back(r);
    }
  }

  // row t += f * row p
  void row_add(std::uint32_t t, std::uint32_t p, const Integer& f) {
    replace_row(t, combine(Integer(1), rows_[t], f, rows_[p]));
    out_.row_ops_.push_back({t, p, 1, f, 0, 1});
  }

  std::size_t min_row_length() const {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (row_active_[r] && !rows_[r].empty()) best = std::min(best, rows_[r].size());
    return best;
  }

  std::optional<std::pair<std::uint32_t, std::uint32_t>> find_pivot() {
    if (by_count_.empty()) return std::nullopt;
    if (!units_exhausted_) {
      std::optional<std::pair<std::uint32_t, std::uint32_t>> best;
      std::uint64_t best_cost = 0;
      const std::uint64_t min_len = min_row_length();
      for (const auto& [count, c] : by_count_) {
        if (best && std::uint64_t(count - 1) * (min_len - 1) >= best_cost) break;
        for (auto r : column_rows(c)) {
          const Integer& v = *entry(r, c);
          if (v != 1 && v != -1) continue;
          const std::uint64_t cost = std::uint64_t(rows_[r].size() - 1) * (count - 1);
          if (!best || cost < best_cost) {
            best = {r, c};
            best_cost = cost;
          }
        }
        if (best && best_cost == 0) break;
      }
      if (best) return best;
      units_exhausted_ = true;
    }
    // Least magnitude, then Markowitz cost, then (row, col).
    std::optional<std::pair<std::uint32_t, std::uint32_t>> best;
    Integer best_mag;
    std::uint64_t best_cost = 0;
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      if (!row_active_[r]) continue;
      for (const auto& cell : rows_[r]) {
        const Integer mag = abs(cell.v);
        const std::uint64_t cost = std::uint64_t(rows_[r].size() - 1) * (col_count_[cell.col] - 1);
        if (!best || mag < best_mag || (mag == best_mag && cost < best_cost)) {
          best = {r, cell.col};
          best_mag = mag;
          best_cost = cost;
        }
      }
    }
    return best;
  }

  // Nearest-integer quotient, so that |b - q a| <= |a| / 2.
  static Integer nearest_quotient(const Integer& b, const Integer& a) {
    Integer q = b / a;
    const Integer rem = b - q * a;
    if (2 * abs(rem) > abs(a)) q += (rem < 0) == (a < 0) ? 1 : -1;
    return q;
  }

  // Clears row r and column c around the pivot by Euclidean reduction. The
  // pivot moves to the least remainder whenever one appears, so its
  // magnitude strictly decreases until it divides its row and column.
  void eliminate(std::uint32_t& r, std::uint32_t& c) {
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (;;) {
        const std::vector<std::uint32_t> rows = column_rows(c);
        if (rows.size() <= 1) break;
        for (auto x : rows)
          if (abs(*entry(x, c)) < abs(*entry(r, c))) r = x;
        const Integer a = *entry(r, c);
        for (auto x : rows) {
          if (x == r) continue;
          const Integer q = nearest_quotient(*entry(x, c), a);
          if (q != 0) row_add(x, r, -q);
        }
      }
      const Row pivot_row = rows_[r];
      const Integer a = *entry(r, c);
      std::optional<std::uint32_t> smaller;
      Integer least = abs(a);
      for (const auto& cell : pivot_row) {
        if (cell.col == c) continue;
        // Column c is zero off row r, so this column operation only
        // touches the pivot row.
        const Integer q = nearest_quotient(cell.v, a);
        const Integer rem = cell.v - q * a;
        set_entry(r, cell.col, rem);
        if (log_columns_) out_.col_ops_.push_back({c, cell.col, 1, -q, 0, 1});
        if (rem != 0 && abs(rem) < least) {
          least = abs(rem);
          smaller = cell.col;
        }
      }
      if (smaller) {
        c = *smaller;
        dirty = true;
      }
    }
    pivots_.push_back({r, c, *entry(r, c)});
    set_count(c, 0);
    rows_[r].clear();
    row_active_[r] = 0;
    col_active_[c] = 0;
  }

  void finish() {
    for (auto& p : pivots_)
      if (p.value < 0) {
        out_.row_ops_.push_back({p.row, p.row, -1, 0, 0, 1});
        p.value = -p.value;
      }

    std::vector<std::size_t> chain;
    for (std::size_t k = 0; k < pivots_.size(); ++k)
      if (pivots_[k].value != 1) chain.push_back(k);
    for (std::size_t x = 0; x < chain.size(); ++x)
      for (std::size_t y = x + 1; y < chain.size(); ++y) {
        auto& p = pivots_[chain[x]];
        auto& q = pivots_[chain[y]];
        if (q.value % p.value == 0) continue;
        const Integer a = p.value, b = q.value;
        const auto [g, s, t] = extended_gcd(a, b);
        if (log_columns_) out_.col_ops_.push_back({p.col, q.col, 1, 0, 1, 1});
        out_.row_ops_.push_back({p.row, q.row, s, t, -(b / g), a / g});
        if (log_columns_) out_.col_ops_.push_back({p.col, q.col, 1, -(t * b / g), 0, 1});
        p.value = g;
        q.value = a * b / g;
      }

    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < pivots_.size(); ++k)
      if (pivots_[k].value == 1) order.push_back(k);
    for (auto k : chain)
      if (pivots_[k].value != 1) order.push_back(k);

    std::vector<char> row_used(out_.rows_, 0), col_used(out_.cols_, 0);
    for (auto k : order) {
      const auto& p = pivots_[k];
      out_.factors_.push_back(p.value);
      out_.row_perm_.push_back(p.row);
      out_.col_perm_.push_back(p.col);
      row_used[p.row] = 1;
      col_used[p.col] = 1;
    }
    for (std::size_t r = 0; r < out_.rows_; ++r)
      if (!row_used[r]) out_.row_perm_.push_back(r);
    for (std::size_t c = 0; c < out_.cols_; ++c)
      if (!col_used[c]) out_.col_perm_.push_back(c);
  }
};

SmithDecomposition smith_normal_form(const SparseMatrix& a, const SmithOptions& options) {
  SmithDecomposition out;
  SmithEliminator(a, options, out).run();
  if (options.compute_transforms) {
    DenseMatrix u(a.rows(), a.rows());
    for (std::size_t k = 0; k < a.rows(); ++k) {
      const auto col = out.left_column(k);
      for (std::size_t i = 0; i < a.rows(); ++i) u(i, k) = col[i];
    }
    DenseMatrix v(a.cols(), a.cols());
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto row = out.right_row(k);
      for (std::size_t j = 0; j < a.cols(); ++j) v(k, j) = row[j];
    }
    out.u_ = std::move(u);
    out.v_ = std::move(v);
  }
  return out;
}

}  // namespace ternhom
