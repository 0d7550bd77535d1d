#include "ternhom/report_io.hpp"

#include <limits>

#include "ternhom/errors.hpp"

namespace ternhom {

using nlohmann::json;

json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

namespace {

json integers(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

const char* violation_name(AxiomViolation kind) {
  switch (kind) {
    case AxiomViolation::Associativity: return "associativity";
    case AxiomViolation::LeftSlot: return "left-slot";
    case AxiomViolation::MiddleSlot: return "middle-slot";
    case AxiomViolation::RightSlot: return "right-slot";
  }
  return "unknown";
}

}  // namespace

json to_json(const HomologyGroup& h) {
  return {{"degree", h.degree}, {"betti", h.betti}, {"torsion", integers(h.torsion)}};
}

json to_json(const ClassCoordinates& c) {
  return {{"free", integers(c.free_part)},
          {"torsion", integers(c.torsion_part)},
          {"moduli", integers(c.moduli)},
          {"order", integer_to_json(c.additive_order())}};
}

json to_json(const KnotReport& r) {
  json histogram = json::array();
  for (const auto& [cls, count] : r.class_histogram) histogram.push_back({{"class", to_json(cls)}, {"count", count}});
  return {{"name", r.name},
          {"braid", r.braid.letters},
          {"strands", r.braid.strands},
          {"total", r.total},
          {"class_histogram", std::move(histogram)},
          {"order3_count", r.order3_count}};
}

json to_json(const CocycleFunction& f) {
  json values = json::array();
  const auto n = static_cast<std::uint32_t>(f.order());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (const auto v = f.value(a, b, c)) values.push_back({a + 1, b + 1, c + 1, v});
  return {{"modulus", f.modulus()}, {"values", std::move(values)}};
}

CocycleFunction cocycle_from_json(const json& j, std::size_t order) {
  try {
    CocycleFunction f(j.at("modulus").get<std::uint64_t>(), order);
    for (const auto& entry : j.at("values")) {
      if (!entry.is_array() || entry.size() != 4) throw MalformedInput("cocycle values are [a, b, c, v] lists");
      const auto a = entry[0].get<std::uint32_t>(), b = entry[1].get<std::uint32_t>(), c = entry[2].get<std::uint32_t>();
      if (a == 0 || b == 0 || c == 0) throw MalformedInput("cocycle arguments are 1-based");
      f.set(a - 1, b - 1, c - 1, entry[3].get<std::int64_t>());
    }
    return f;
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("bad cocycle JSON: ") + e.what());
  }
}

json to_json(const StateSum& s) { return {{"modulus", s.modulus}, {"counts", s.counts}}; }

json to_json(const AxiomReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    json args = json::array();
    for (auto e : w.tuple) args.push_back(e.index + 1);
    witnesses.push_back({{"kind", violation_name(w.kind)}, {"args", std::move(args)}});
  }
  return {{"is_group", r.is_group()},
          {"is_semigroup", r.is_semigroup},
          {"is_quasigroup", r.is_quasigroup},
          {"witnesses", std::move(witnesses)}};
}

}  // namespace ternhom
