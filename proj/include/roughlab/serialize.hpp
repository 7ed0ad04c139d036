#pragma once

#include "roughlab/family.hpp"
#include "roughlab/glue.hpp"
#include "roughlab/pathology.hpp"
#include "roughlab/probe.hpp"
#include "roughlab/sandwich.hpp"
#include "roughlab/strip.hpp"
#include "roughlab/surface.hpp"

#include <json.hpp>

#include <string>

namespace roughlab {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings (or "p" for integers), enclosures as
// [lo, hi]. Readers throw Error(argument) on malformed documents.
Json rational_json(const Rational& q);
Rational rational_from(const Json& j);
Json enclosure_json(const Enclosure& e);
Enclosure enclosure_from(const Json& j);

// {depth, grid, g: {breakpoints, values}, records: [{d, x, boundNum,
// boundDen, encLoNum, encLoDen, encHiNum, encHiDen, verdict}]}. Numerators
// and denominators are decimal strings.
Json certificate_json(const SandwichCertificate& c);
SandwichCertificate certificate_from(const Json& j);

Json witness_json(const WitnessReport& r);
WitnessReport witness_from(const Json& j);

Json ladder_json(const LadderReport& r);
LadderReport ladder_from(const Json& j);
// h_num,h_den,q_lo,q_hi with an empty quotient for skipped samples.
std::string ladder_csv(const LadderReport& r);

Json margin_json(const MarginResult& r);
Json family_json(const FamilyReport& r);
Json glue_json(const GlueReport& r);
Json strip_json(const StripReport& r);
Json escape_json(const EscapeReport& r);
Json banach_json(const BanachReport& r);

}  // namespace roughlab
