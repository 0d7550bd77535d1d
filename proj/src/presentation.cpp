#include "ternhom/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "ternhom/errors.hpp"

namespace ternhom {

// ---------------------------------------------------------------------------
// Parsing

namespace {

Word inverse_of(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->generator, !it->inverse});
  return out;
}

Word power(const Word& w, long long k) {
  const Word base = k < 0 ? inverse_of(w) : w;
  Word out;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

class PresentationParser {
 public:
  explicit PresentationParser(const std::string& text) : text_(text) {}

  GroupPresentation parse() {
    skip_space();
    do {
      skip_space();
      if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
        fail("expected a generator letter");
      const char g = text_[pos_];
      if (std::find(result_.generators.begin(), result_.generators.end(), g) !=
          result_.generators.end())
        fail(std::string("duplicate generator '") + g + "'");
      result_.generators.push_back(g);
      ++pos_;
      skip_space();
    } while (accept(','));
    if (!accept('|')) fail("expected '|' after the generator list");
    skip_space();
    if (pos_ < text_.size()) {
      do {
        relation();
      } while (accept(','));
    }
    skip_space();
    if (pos_ < text_.size()) fail("unexpected character");
    return std::move(result_);
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError("presentation: " + what, at + 1);
  }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void relation() {
    std::vector<Word> sides{product()};
    while (accept('=')) sides.push_back(product());
    if (sides.size() == 1) {
      result_.relators.push_back(std::move(sides[0]));
      return;
    }
    for (std::size_t i = 0; i + 1 < sides.size(); ++i) {
      Word r = sides[i];
      const Word inv = inverse_of(sides[i + 1]);
      r.insert(r.end(), inv.begin(), inv.end());
      result_.relators.push_back(std::move(r));
    }
  }

  bool at_factor_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || c == '1' || std::isalpha(static_cast<unsigned char>(c));
  }

  Word product() {
    if (!at_factor_start()) fail("expected a word");
    Word w = factor();
    while (true) {
      if (accept('*')) {
        if (!at_factor_start()) fail("expected a factor after '*'");
      } else if (!at_factor_start()) {
        break;
      }
      const Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    return w;
  }

  Word factor() {
    Word w = atom();
    if (accept('^')) w = power(w, exponent());
    return w;
  }

  long long exponent() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000) fail("exponent too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer exponent");
    return negative ? -value : value;
  }

  Word atom() {
    skip_space();
    const char c = text_[pos_];
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      Word w = product();
      if (!accept(')')) fail("unbalanced parenthesis", open);
      return w;
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    const auto it = std::find(result_.generators.begin(), result_.generators.end(), c);
    if (it == result_.generators.end()) fail(std::string("undeclared generator '") + c + "'");
    ++pos_;
    return Word{Letter{static_cast<std::uint32_t>(it - result_.generators.begin()), false}};
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  GroupPresentation result_;
};

}  // namespace

std::string GroupPresentation::render(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    out += generators[l.generator];
    if (l.inverse) out += "^-1";
  }
  return out;
}

std::string GroupPresentation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ",";
    out += generators[i];
  }
  out += " |";
  for (std::size_t i = 0; i < relators.size(); ++i) out += (i ? ", " : " ") + render(relators[i]);
  return out;
}

GroupPresentation parse_presentation(const std::string& text) {
  return PresentationParser(text).parse();
}

GroupPresentation triangle_presentation(unsigned l, unsigned m, unsigned n) {
  if (l < 2 || m < 2 || n < 2) throw MalformedInput("triangle group parameters must be >= 2");
  std::ostringstream text;
  text << "a,b,c | a^2, b^2, c^2, (ab)^" << l << ", (bc)^" << n << ", (ca)^" << m;
  return parse_presentation(text.str());
}

bool parity_well_defined(const GroupPresentation& p) {
  return std::all_of(p.relators.begin(), p.relators.end(),
                     [](const Word& r) { return r.size() % 2 == 0; });
}

// ---------------------------------------------------------------------------
// Coset enumeration

namespace {

constexpr std::int64_t kUndefined = -1;

// Column 2g is generator g, column 2g+1 its inverse.
class CosetTable {
 public:
  CosetTable(std::size_t generators, std::size_t max_cosets)
      : columns_(2 * generators), max_cosets_(max_cosets) {
    new_coset();
  }

  void enumerate(const std::vector<std::vector<std::size_t>>& relators) {
    for (std::size_t alpha = 0; alpha < parent_.size(); ++alpha) {
      for (const auto& r : relators) {
        if (!live(alpha)) break;
        scan_and_fill(alpha, r);
      }
      if (!live(alpha)) continue;
      for (std::size_t x = 0; x < columns_; ++x)
        if (entry(alpha, x) == kUndefined) define(alpha, x);
    }
  }

  bool live(std::size_t c) const { return parent_[c] == c; }
  std::size_t allocated() const { return parent_.size(); }
  std::size_t rep_of(std::size_t c) { return rep(c); }
  std::int64_t entry(std::size_t c, std::size_t x) const { return table_[c * columns_ + x]; }

 private:
  std::int64_t& slot(std::size_t c, std::size_t x) { return table_[c * columns_ + x]; }

  std::size_t new_coset() {
    if (parent_.size() >= max_cosets_)
      throw ResourceLimit("coset enumeration exceeded " + std::to_string(max_cosets_) +
                          " cosets (group infinite or bound too small)");
    const std::size_t c = parent_.size();
    parent_.push_back(c);
    table_.resize(table_.size() + columns_, kUndefined);
    return c;
  }

  void define(std::size_t c, std::size_t x) {
    const std::size_t d = new_coset();
    slot(c, x) = static_cast<std::int64_t>(d);
    slot(d, x ^ 1) = static_cast<std::int64_t>(c);
  }

  std::size_t rep(std::size_t c) {
    std::size_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const std::size_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::size_t k, std::size_t l) {
    const std::size_t a = rep(k);
    const std::size_t b = rep(l);
    if (a == b) return;
    const std::size_t keep = std::min(a, b);
    const std::size_t drop = std::max(a, b);
    parent_[drop] = keep;
    queue_.push_back(drop);
  }

  void coincidence(std::size_t alpha, std::size_t beta) {
    queue_.clear();
    merge(alpha, beta);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const std::size_t gamma = queue_[i];
      for (std::size_t x = 0; x < columns_; ++x) {
        const std::int64_t target = entry(gamma, x);
        if (target == kUndefined) continue;
        const auto delta = static_cast<std::size_t>(target);
        slot(delta, x ^ 1) = kUndefined;
        const std::size_t mu = rep(gamma);
        const std::size_t nu = rep(delta);
        if (entry(mu, x) != kUndefined) {
          merge(nu, static_cast<std::size_t>(entry(mu, x)));
        } else if (entry(nu, x ^ 1) != kUndefined) {
          merge(mu, static_cast<std::size_t>(entry(nu, x ^ 1)));
        } else {
          slot(mu, x) = static_cast<std::int64_t>(nu);
          slot(nu, x ^ 1) = static_cast<std::int64_t>(mu);
        }
      }
    }
  }

  void scan_and_fill(std::size_t alpha, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::size_t f = alpha, b = alpha;
    std::size_t i = 0;
    std::size_t j = w.size();  // scanning w[i, j)
    while (true) {
      while (i < j && entry(f, w[i]) != kUndefined) f = static_cast<std::size_t>(entry(f, w[i++]));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && entry(b, w[j - 1] ^ 1) != kUndefined)
        b = static_cast<std::size_t>(entry(b, w[--j] ^ 1));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        slot(f, w[i]) = static_cast<std::int64_t>(b);
        slot(b, w[i] ^ 1) = static_cast<std::int64_t>(f);
        return;
      }
      define(f, w[i]);
    }
  }

  std::size_t columns_;
  std::size_t max_cosets_;
  std::vector<std::int64_t> table_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> queue_;
};

// Breadth-first closure from the identity under right multiplication by the
// generators; numbers elements in shortlex order of their least word.
template <typename Elem, typename Step>
FiniteBinaryGroup close_under_generators(const Elem& identity, std::size_t generators,
                                         const std::vector<char>& names, Step&& step,
                                         std::size_t max_order) {
  std::map<Elem, std::uint32_t> index{{identity, 0}};
  std::vector<Elem> elems{identity};
  std::vector<std::uint32_t> parent{0};
  std::vector<std::uint32_t> via{0};
  std::vector<std::string> labels{""};
  std::vector<std::vector<std::uint32_t>> action(generators);

  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t g = 0; g < generators; ++g) {
      const Elem y = step(elems[x], g);
      auto [it, inserted] = index.try_emplace(y, static_cast<std::uint32_t>(elems.size()));
      if (inserted) {
        if (elems.size() >= max_order)
          throw ResourceLimit("group exceeds " + std::to_string(max_order) + " elements");
        elems.push_back(y);
        parent.push_back(static_cast<std::uint32_t>(x));
        via.push_back(static_cast<std::uint32_t>(g));
        labels.push_back(labels[x] + names[g]);
      }
      action[g].push_back(it->second);
    }
  }

  FiniteBinaryGroup group;
  group.order = elems.size();
  group.generator_names = names;
  group.labels = std::move(labels);
  const std::size_t n = group.order;
  group.cayley.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    group.cayley[x * n] = static_cast<std::uint32_t>(x);
    for (std::size_t y = 1; y < n; ++y)
      group.cayley[x * n + y] = action[via[y]][group.cayley[x * n + parent[y]]];
  }
  for (std::size_t g = 0; g < generators; ++g) group.generator_images.push_back(action[g][0]);
  return group;
}

void attach_parity(FiniteBinaryGroup& group) {
  std::vector<std::uint8_t> parity(group.order);
  for (std::size_t x = 0; x < group.order; ++x) parity[x] = group.labels[x].size() % 2;
  for (std::size_t x = 0; x < group.order; ++x)
    for (const auto g : group.generator_images)
      if (parity[group.mul(static_cast<std::uint32_t>(x), g)] == parity[x])
        throw ContractViolation("word-length parity is not a homomorphism on the group");
  group.parity = std::move(parity);
}

}  // namespace

FiniteBinaryGroup coset_enumerate(const GroupPresentation& p, std::size_t max_cosets) {
  if (p.generators.empty()) throw MalformedInput("presentation has no generators");
  std::vector<std::vector<std::size_t>> relators;
  for (const auto& r : p.relators) {
    std::vector<std::size_t> cols;
    for (const auto& l : r) cols.push_back(2 * l.generator + (l.inverse ? 1 : 0));
    relators.push_back(std::move(cols));
  }
  CosetTable table(p.generators.size(), max_cosets);
  table.enumerate(relators);

  auto step = [&](std::size_t coset, std::size_t g) {
    const auto target = table.entry(coset, 2 * g);
    if (target == kUndefined) throw ContractViolation("coset table incomplete after enumeration");
    return table.rep_of(static_cast<std::size_t>(target));
  };
  auto group = close_under_generators<std::size_t>(0, p.generators.size(), p.generators, step,
                                                   table.allocated());
  if (parity_well_defined(p)) attach_parity(group);
  return group;
}

FiniteBinaryGroup symmetric_group(unsigned k) {
  if (k < 1 || k > 8) throw MalformedInput("symmetric group degree must be in 1..8");
  using Perm = std::vector<std::uint8_t>;
  Perm identity(k);
  std::iota(identity.begin(), identity.end(), 0);
  const std::size_t generators = k - 1;
  std::vector<char> names;
  for (std::size_t g = 0; g < generators; ++g) names.push_back(static_cast<char>('a' + g));
  // x * s_g: apply x, then swap g and g+1.
  auto step = [](const Perm& x, std::size_t g) {
    Perm y = x;
    for (auto& v : y) {
      if (v == g)
        v = static_cast<std::uint8_t>(g + 1);
      else if (v == g + 1)
        v = static_cast<std::uint8_t>(g);
    }
    return y;
  };
  auto group = close_under_generators<Perm>(identity, generators, names, step, 50000);
  attach_parity(group);
  return group;
}

OddEvenSplit odd_even_split(const FiniteBinaryGroup& g) {
  if (!g.parity) throw StructuralError("group has no parity map (a relator has odd length)");
  const auto& parity = *g.parity;
  std::vector<std::uint32_t> odd, even;
  std::vector<std::int64_t> position(g.order, -1);
  for (std::uint32_t x = 0; x < g.order; ++x) {
    auto& bucket = parity[x] ? odd : even;
    position[x] = static_cast<std::int64_t>(bucket.size());
    bucket.push_back(x);
  }
  if (odd.empty()) throw StructuralError("parity map is trivial: the group has no odd elements");

  const std::size_t n = odd.size();
  std::vector<Element> table;
  table.reserve(n * n * n);
  for (auto a : odd)
    for (auto b : odd) {
      const auto ab = g.mul(a, b);
      for (auto c : odd) {
        const auto abc = g.mul(ab, c);
        if (!parity[abc]) throw ContractViolation("triple product of odd elements is even");
        table.push_back(Element{static_cast<std::uint32_t>(position[abc])});
      }
    }

  OddEvenSplit split{TernaryCube(n, std::move(table)), {}, odd, {}};
  for (auto x : odd) split.odd_labels.push_back(g.labels[x]);

  auto& e = split.even;
  e.order = even.size();
  e.cayley.resize(e.order * e.order);
  for (std::size_t i = 0; i < e.order; ++i) {
    e.labels.push_back(g.labels[even[i]]);
    for (std::size_t j = 0; j < e.order; ++j) {
      const auto prod = g.mul(even[i], even[j]);
      if (parity[prod]) throw ContractViolation("product of even elements is odd");
      e.cayley[i * e.order + j] = static_cast<std::uint32_t>(position[prod]);
    }
  }
  return split;
}

OddEvenSplit odd_even_from_presentation(const GroupPresentation& p, std::size_t max_cosets) {
  if (!parity_well_defined(p)) {
    for (const auto& r : p.relators)
      if (r.size() % 2)
        throw StructuralError("parity is not well defined: relator " + p.render(r) +
                              " has odd length " + std::to_string(r.size()));
  }
  return odd_even_split(coset_enumerate(p, max_cosets));
}

TernaryCube triangle_cube(unsigned l, unsigned m, unsigned n, std::size_t max_cosets) {
  auto split = odd_even_split(coset_enumerate(triangle_presentation(l, m, n), max_cosets));
  split.odd.set_name("O(triangle(" + std::to_string(l) + "," + std::to_string(m) + "," +
                     std::to_string(n) + "))");
  return std::move(split.odd);
}

}  // namespace ternhom
