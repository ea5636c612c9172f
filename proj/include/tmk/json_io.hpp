#ifndef TMK_JSON_IO_HPP
#define TMK_JSON_IO_HPP

#include <json.hpp>

#include "tmk/fan.hpp"
#include "tmk/idealops.hpp"
#include "tmk/poly.hpp"
#include "tmk/polytope.hpp"
#include "tmk/triangulation.hpp"

namespace tmk {

using Json = nlohmann::ordered_json;

// integers as decimal strings, rationals as "p/q" strings
Json json_of(const Int& x);
Json json_of(const Rat& q);
Json json_of(const IVec& v);
Json json_of(const QVec& v);
Json json_of(const Polytope& p);
Json json_of(const NefPartition& n);
Json json_of(const Fan& f);
Json json_of(const ToricDivisor& d);
Json json_of(const CoxData& c);
Json json_of(const PointConfiguration& c);
Json json_of(const Subdivision& s, const PointConfiguration& c);
Json json_of(const Triangulation& t, const PointConfiguration& c);
Json json_of(const MonomialIdeal& m, const Ring& r);
Json json_of(const Ring& r, const Poly& f);

IVec ivec_from_json(const Json& j);
QVec qvec_from_json(const Json& j);
Polytope polytope_from_json(const Json& j);
Fan fan_from_json(const Json& j);
ToricDivisor divisor_from_json(const Json& j);
PointConfiguration config_from_json(const Json& j);
Subdivision cells_from_json(const Json& j, const PointConfiguration& c);

}  // namespace tmk

#endif
