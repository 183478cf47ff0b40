#pragma once

#include <string>

#include "json.hpp"
#include "lagconf/configuration.hpp"
#include "lagconf/estimators.hpp"
#include "lagconf/hofer.hpp"
#include "lagconf/novikov.hpp"
#include "lagconf/piecewise.hpp"
#include "lagconf/recurrence.hpp"
#include "lagconf/superpotential.hpp"

namespace lagconf {

/** Insertion-ordered JSON so identical inputs dump to identical bytes. */
using Json = nlohmann::ordered_json;

/** Exact values serialize as rational strings ("2/5", integers bare). */
Json json_of(const Rational& r);
/** Rational string, or null for an infinite bound. */
Json json_of(const OrderBound& o);
Json json_of(const NovikovScalar& x);
Json json_of(const LinkConfig& c);
Json json_of(const PiecewisePoly& h);
Json json_of(const CriticalPoint& pt);
Json json_of(const CalabiLimitReport& r);
Json json_of(const AxiomReport& r);
Json json_of(const FlatBoundReport& r);
Json json_of(const URReport& r);
Json json_of(const KerCalabiReport& r);
Json json_of(const BiLipschitzReport& r);
Json json_of(const DifferenceSet& d);
Json json_of(const DensityReport& r);
Json json_of(const EnumReport& r);
Json json_of(const RotationReport& r);

NovikovScalar novikov_from_json(const Json& j);
LinkConfig config_from_json(const Json& j);

/** Two-space indented dump with a trailing newline. */
std::string dump_json(const Json& j);

}  // namespace lagconf
