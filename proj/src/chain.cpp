#include "ternhom/chain.hpp"

#include <algorithm>
#include <ostream>

#include "ternhom/errors.hpp"
#include "ternhom/parallel.hpp"

namespace ternhom {

Tuple Tuple::of(std::initializer_list<std::uint32_t> zero_based) {
  Tuple t;
  for (auto x : zero_based) t.entries.push_back(Element{x});
  return t;
}

Tuple Tuple::one_based(std::initializer_list<std::uint32_t> one_based) {
  Tuple t;
  for (auto x : one_based) {
    if (x == 0) throw MalformedInput("1-based tuple entry must be positive");
    t.entries.push_back(Element{x - 1});
  }
  return t;
}

std::string Tuple::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries[i].index + 1);
  }
  return out + ")";
}

std::int64_t Chain::coefficient(const Tuple& t) const {
  const auto it = terms_.find(t);
  return it == terms_.end() ? 0 : it->second;
}

void Chain::add(const Tuple& t, std::int64_t coefficient) {
  if (t.degree() != degree_)
    throw MalformedInput("tuple " + t.to_string() + " has degree " + std::to_string(t.degree()) +
                         ", chain has degree " + std::to_string(degree_));
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Chain& Chain::operator+=(const Chain& other) {
  for (const auto& [t, c] : other.terms_) add(t, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  for (const auto& [t, c] : other.terms_) add(t, -c);
  return *this;
}

Chain Chain::operator+(const Chain& other) const {
  Chain out = *this;
  return out += other;
}

Chain Chain::operator-(const Chain& other) const {
  Chain out = *this;
  return out -= other;
}

Chain Chain::operator*(std::int64_t k) const {
  Chain out(degree_);
  if (k == 0) return out;
  for (const auto& [t, c] : terms_) out.terms_.emplace(t, c * k);
  return out;
}

std::string Chain::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (c < 0)
      out += "-";
    else if (!first)
      out += "+";
    const auto magnitude = c < 0 ? -c : c;
    if (magnitude != 1) out += std::to_string(magnitude);
    out += t.to_string();
    first = false;
  }
  return out;
}

namespace {

std::vector<std::uint32_t> raw(const TernaryGroup& g, const Tuple& t) {
  std::vector<std::uint32_t> x;
  x.reserve(t.entries.size());
  for (auto e : t.entries) {
    if (e.index >= g.order()) throw MalformedInput("tuple entry out of range");
    x.push_back(e.index);
  }
  return x;
}

Tuple from_raw(std::span<const std::uint32_t> x) {
  Tuple t;
  t.entries.reserve(x.size());
  for (auto v : x) t.entries.push_back(Element{v});
  return t;
}

std::uint64_t power_of(std::size_t base, std::size_t exponent) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < exponent; ++i) p *= base;
  return p;
}

}  // namespace

Chain boundary(const TernaryGroup& group, const Tuple& t, BoundaryPart part) {
  const auto x = raw(group, t);
  Chain out(std::max(t.degree() - 1, -2));
  if (t.degree() <= -1) return out;
  for_each_boundary_term(group, x, part,
                         [&](std::span<const std::uint32_t> face, int sign) { out.add(from_raw(face), sign); });
  return out;
}

Chain boundary(const TernaryGroup& group, const Chain& c, BoundaryPart part) {
  Chain out(std::max(c.degree() - 1, -2));
  for (const auto& [t, k] : c.terms()) out += boundary(group, t, part) * k;
  return out;
}

bool is_degenerate(const TernaryGroup& g, std::span<const std::uint32_t> t) {
  if (t.size() < 3) return false;
  for (std::size_t k = 0; k + 2 < t.size(); ++k) {
    const auto a = t[k], b = t[k + 1], c = t[k + 2];
    if (c == g.t(b, a, b) || a == g.t(b, c, b)) return true;
  }
  return false;
}

bool is_degenerate(const TernaryGroup& group, const Tuple& t) {
  const auto x = raw(group, t);
  return is_degenerate(group, std::span<const std::uint32_t>(x));
}

Chain project_to_quotient(const TernaryGroup& group, const Chain& c) {
  Chain out(c.degree());
  for (const auto& [t, k] : c.terms())
    if (!is_degenerate(group, t)) out.add(t, k);
  return out;
}

// ---------------------------------------------------------------------------

TupleBasis::TupleBasis(const TernaryGroup& group, int degree, std::size_t max_basis)
    : order_(group.order()), degree_(degree) {
  if (degree < -1) throw MalformedInput("tuple bases start at degree -1");
  const std::size_t len = length();
  const std::uint64_t total = power_of(order_, len);
  if (total > max_basis)
    throw ResourceLimit("degree " + std::to_string(degree) + " has " + std::to_string(total) +
                        " tuples, above the basis cap of " + std::to_string(max_basis));
  lookup_.assign(total, -1);
  std::vector<std::uint32_t> t(len);
  for (std::uint64_t code = 0; code < total; ++code) {
    decode(code, t);
    if (degree >= 1 && is_degenerate(group, std::span<const std::uint32_t>(t))) continue;
    lookup_[code] = static_cast<std::int64_t>(codes_.size());
    codes_.push_back(code);
  }
}

void TupleBasis::decode(std::uint64_t code, std::span<std::uint32_t> out) const {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<std::uint32_t>(code % order_);
    code /= order_;
  }
}

std::uint64_t TupleBasis::encode(std::span<const std::uint32_t> t) const {
  std::uint64_t code = 0;
  for (auto x : t) code = code * order_ + x;
  return code;
}

Tuple TupleBasis::tuple(std::size_t i) const {
  std::vector<std::uint32_t> t(length());
  decode(codes_.at(i), t);
  return from_raw(t);
}

std::optional<std::size_t> TupleBasis::index_of(const Tuple& t) const {
  if (t.entries.size() != length()) return std::nullopt;
  std::vector<std::uint32_t> x;
  for (auto e : t.entries) {
    if (e.index >= order_) return std::nullopt;
    x.push_back(e.index);
  }
  const auto idx = lookup_[encode(x)];
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

std::vector<Integer> TupleBasis::coordinates(const Chain& c) const {
  if (c.degree() != degree_) throw MalformedInput("chain degree does not match basis degree");
  std::vector<Integer> v(size());
  for (const auto& [t, k] : c.terms())
    if (const auto idx = index_of(t)) v[*idx] += k;
  return v;
}

Chain TupleBasis::to_chain(std::span<const Integer> coordinates) const {
  if (coordinates.size() != size()) throw MalformedInput("coordinate vector has wrong length");
  Chain c(degree_);
  for (std::size_t i = 0; i < size(); ++i)
    if (coordinates[i] != 0) c.add(tuple(i), static_cast<std::int64_t>(coordinates[i]));
  return c;
}

BoundaryMatrix boundary_matrix(const TernaryGroup& group, int degree, const ComputeLimits& limits) {
  if (degree < 0) throw MalformedInput("boundary matrices are built for degree >= 0");
  if (degree > limits.max_degree)
    throw ResourceLimit("boundary matrix of degree " + std::to_string(degree) + " is above the degree cap of " +
                        std::to_string(limits.max_degree));
  BoundaryMatrix out{degree, TupleBasis(group, degree - 1, limits.max_basis),
                     TupleBasis(group, degree, limits.max_basis), {}};
  const auto& rows = out.rows;
  const auto& cols = out.cols;
  out.matrix = SparseMatrix(rows.size(), cols.size());

  std::vector<std::vector<SparseMatrix::Entry>> columns(cols.size());
  parallel_chunks(cols.size(), limits.jobs, [&](std::size_t begin, std::size_t end, std::size_t) {
    std::vector<std::uint32_t> t(cols.length());
    std::vector<std::pair<std::size_t, int>> acc;
    for (std::size_t j = begin; j < end; ++j) {
      acc.clear();
      cols.decode(cols.code(j), t);
      for_each_boundary_term(group, t, BoundaryPart::Full,
                             [&](std::span<const std::uint32_t> face, int sign) {
                               const auto row = rows.index_of_code(rows.encode(face));
                               if (row >= 0) acc.emplace_back(static_cast<std::size_t>(row), sign);
                             });
      std::sort(acc.begin(), acc.end());
      auto& column = columns[j];
      for (std::size_t k = 0; k < acc.size();) {
        long long sum = 0;
        const auto row = acc[k].first;
        for (; k < acc.size() && acc[k].first == row; ++k) sum += acc[k].second;
        if (sum != 0) column.push_back({row, Integer(sum)});
      }
    }
  });
  for (std::size_t j = 0; j < cols.size(); ++j) out.matrix.set_column(j, std::move(columns[j]));
  return out;
}

void write_boundary_matrix(std::ostream& out, const BoundaryMatrix& m) {
  write_matrix_market(out, m.matrix,
                      {"ternhom boundary matrix", "degree " + std::to_string(m.degree),
                       "rows: " + std::to_string(m.rows.size()) + " non-degenerate tuples of degree " +
                           std::to_string(m.degree - 1),
                       "cols: " + std::to_string(m.cols.size()) + " non-degenerate tuples of degree " +
                           std::to_string(m.degree),
                       "bases in lexicographic order"});
}

// ---------------------------------------------------------------------------

namespace {

using Terms = std::vector<std::pair<std::vector<std::uint32_t>, long long>>;

void normalize(Terms& terms) {
  std::sort(terms.begin(), terms.end());
  Terms merged;
  for (auto& [t, c] : terms) {
    if (!merged.empty() && merged.back().first == t)
      merged.back().second += c;
    else
      merged.emplace_back(std::move(t), c);
  }
  std::erase_if(merged, [](const auto& term) { return term.second == 0; });
  terms = std::move(merged);
}

Terms boundary_terms(const TernaryGroup& g, std::span<const std::uint32_t> x) {
  Terms out;
  for_each_boundary_term(g, x, BoundaryPart::Full, [&](std::span<const std::uint32_t> face, int sign) {
    out.emplace_back(std::vector<std::uint32_t>(face.begin(), face.end()), sign);
  });
  normalize(out);
  return out;
}

Terms boundary_of(const TernaryGroup& g, const Terms& chain, bool quotient) {
  Terms out;
  for (const auto& [t, c] : chain) {
    if (quotient && is_degenerate(g, std::span<const std::uint32_t>(t))) continue;
    for_each_boundary_term(g, t, BoundaryPart::Full, [&](std::span<const std::uint32_t> face, int sign) {
      out.emplace_back(std::vector<std::uint32_t>(face.begin(), face.end()), c * sign);
    });
  }
  normalize(out);
  if (quotient)
    std::erase_if(out, [&](const auto& term) {
      return is_degenerate(g, std::span<const std::uint32_t>(term.first));
    });
  return out;
}

}  // namespace

ComplexReport verify_complex(const TernaryGroup& group, int max_degree, unsigned jobs) {
  ComplexReport report;
  const std::size_t n = group.order();
  for (int degree = 0; degree <= max_degree; ++degree) {
    const std::size_t len = static_cast<std::size_t>(degree + 2);
    const std::uint64_t total = power_of(n, len);

    struct Failure {
      std::uint64_t code;
      std::string what;
    };
    std::vector<std::optional<Failure>> failures(std::max(1u, jobs));
    parallel_chunks(total, jobs, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
      std::vector<std::uint32_t> t(len);
      for (std::uint64_t code = begin; code < end; ++code) {
        std::uint64_t rest = code;
        for (std::size_t i = len; i-- > 0;) {
          t[i] = static_cast<std::uint32_t>(rest % n);
          rest /= n;
        }
        const auto d1 = boundary_terms(group, t);
        if (degree >= 1 && !boundary_of(group, d1, false).empty()) {
          failures[chunk] = Failure{code, "d∘d is nonzero on the full complex"};
          return;
        }
        if (degree < 1) continue;
        if (is_degenerate(group, std::span<const std::uint32_t>(t))) {
          for (const auto& [face, c] : d1)
            if (degree - 1 < 1 || !is_degenerate(group, std::span<const std::uint32_t>(face))) {
              failures[chunk] = Failure{code, "boundary of a degenerate tuple leaves the degenerate subcomplex"};
              return;
            }
        } else {
          Terms projected;
          for (const auto& term : d1)
            if (!is_degenerate(group, std::span<const std::uint32_t>(term.first))) projected.push_back(term);
          if (!boundary_of(group, projected, true).empty()) {
            failures[chunk] = Failure{code, "d∘d is nonzero on the quotient complex"};
            return;
          }
        }
      }
    });
    report.tuples_checked += total;
    for (const auto& f : failures)
      if (f) {
        std::vector<std::uint32_t> t(len);
        std::uint64_t rest = f->code;
        for (std::size_t i = len; i-- > 0;) {
          t[i] = static_cast<std::uint32_t>(rest % n);
          rest /= n;
        }
        report.ok = false;
        report.failure = f->what + " (degree " + std::to_string(degree) + ")";
        report.witness = from_raw(t);
        return report;
      }
  }
  return report;
}

}  // namespace ternhom
