#ifndef MORIKIT_JSON_IO_HPP
#define MORIKIT_JSON_IO_HPP

#include "morikit/chambers.hpp"
#include "morikit/cones.hpp"
#include "morikit/facts.hpp"
#include "morikit/linear_systems.hpp"
#include "morikit/picard.hpp"
#include "morikit/weights.hpp"

#include <nlohmann/json.hpp>

namespace morikit {

// Machine-readable output uses insertion-ordered JSON and serializes every
// formula-valued integer as a decimal string, so consumers never overflow;
// structural integers (dimensions, indices, levels) stay JSON numbers.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const QVector& v);
Json to_json(const QPolynomial& p);
Json to_json(const HCone& c);
Json to_json(const VCone& c);
Json to_json(const PointClass& pc);
Json to_json(const Wall& w);
Json to_json(const DivisorClass& d);
Json to_json(const CurveClass& c);
Json to_json(const ChamberReport& r);
Json to_json(const LinearSystem& sys);
Json to_json(const HilbertData& h);
Json to_json(const FactSheet& f);
Json to_json(const WeightVector& w);

const char* side_name(Side s);

} // namespace morikit

#endif
