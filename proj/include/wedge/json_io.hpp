#pragma once

#include <json.hpp>

#include "wedge/boson.hpp"
#include "wedge/correspondence.hpp"
#include "wedge/fock.hpp"
#include "wedge/glinf.hpp"
#include "wedge/maya.hpp"

namespace wedge::io {

using nlohmann::json;

// Canonical wire forms.  Rationals travel as strings "p" or "p/q" with q > 0
// and gcd(p, q) = 1; partitions as arrays of weakly decreasing positive
// integers; states as {"terms": [...]} sorted by (sector, partition in
// decreasing lexicographic order).  Parsers are strict: wrong types,
// non-canonical partitions and duplicate keys all raise ParseError.

json parse_text(const std::string& text);

json to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& where);

json to_json(const Partition& p);
Partition partition_from_json(const json& j, const std::string& where);

json to_json(const FockVector& v);
FockVector fock_from_json(const json& j);

json to_json(const BosonState& w);
BosonState boson_from_json(const json& j);

json to_json(const MayaDiagram& m);
MayaDiagram maya_from_json(const json& j);

json to_json(const BandMatrix& m);
BandMatrix band_from_json(const json& j);

json to_json(const GlElement& x);
GlElement element_from_json(const json& j);

json to_json(const LoopElement& x);
LoopElement loop_from_json(const json& j);

json to_json(const EquivarianceReport& r);

} // namespace wedge::io
