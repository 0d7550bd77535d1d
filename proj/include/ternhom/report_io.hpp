#pragma once

// JSON forms of the reports. Integers that do not fit in 64 bits are written
// as decimal strings. Element indices are 1-based, as in cube files.

#include <json.hpp>

#include "ternhom/cocycle.hpp"
#include "ternhom/cube.hpp"
#include "ternhom/homology.hpp"
#include "ternhom/knot.hpp"

namespace ternhom {

nlohmann::json integer_to_json(const Integer& v);

// {"degree": n, "betti": b, "torsion": [...]}
nlohmann::json to_json(const HomologyGroup& h);
// {"free": [...], "torsion": [...], "moduli": [...], "order": k (0 = infinite)}
nlohmann::json to_json(const ClassCoordinates& c);
// {"name", "braid": [...], "strands", "total", "class_histogram": [{"class", "count"}], "order3_count"}
nlohmann::json to_json(const KnotReport& r);
// {"modulus": m, "values": [[a, b, c, v], ...]} listing nonzero values only
nlohmann::json to_json(const CocycleFunction& f);
CocycleFunction cocycle_from_json(const nlohmann::json& j, std::size_t order);
// {"modulus": m, "counts": [...]}
nlohmann::json to_json(const StateSum& s);
// {"is_group", "is_semigroup", "is_quasigroup", "witnesses": [{"kind", "args"}]}
nlohmann::json to_json(const AxiomReport& r);

}  // namespace ternhom
