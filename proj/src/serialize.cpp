#include "roughlab/serialize.hpp"

#include "roughlab/error.hpp"

#include <sstream>

namespace roughlab {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorKind::argument, std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string text(const Json& j) {
    if (!j.is_string()) fail(ErrorKind::argument, "expected a string, got " + j.dump());
    return j.get<std::string>();
}

Integer integer_from(const Json& j) {
    const std::string s = text(j);
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) fail(ErrorKind::argument, "malformed integer '" + s + "'");
    return z;
}

Json rationals_json(const std::vector<Rational>& qs) {
    Json out = Json::array();
    for (const auto& q : qs) out.push_back(rational_json(q));
    return out;
}

std::vector<Rational> rationals_from(const Json& j) {
    if (!j.is_array()) fail(ErrorKind::argument, "expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(rational_from(e));
    return out;
}

template <typename T>
Json optional_json(const std::optional<T>& v, Json (*f)(const T&)) {
    return v ? f(*v) : Json(nullptr);
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from(const Json& j) { return parse_rational(text(j)); }

Json enclosure_json(const Enclosure& e) { return Json::array({rational_json(e.lo()), rational_json(e.hi())}); }

Enclosure enclosure_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) fail(ErrorKind::argument, "expected [lo, hi], got " + j.dump());
    const Rational lo = rational_from(j[0]), hi = rational_from(j[1]);
    if (lo > hi) fail(ErrorKind::argument, "enclosure with lo > hi");
    return Enclosure(lo, hi);
}

// ---- certificates ----

Json certificate_json(const SandwichCertificate& c) {
    Json records = Json::array();
    for (const auto& r : c.records) {
        records.push_back({{"d", rational_json(r.d)},
                           {"x", rational_json(r.x)},
                           {"boundNum", to_string(Integer(r.bound.get_num()))},
                           {"boundDen", to_string(Integer(r.bound.get_den()))},
                           {"encLoNum", to_string(Integer(r.deviation.lo().get_num()))},
                           {"encLoDen", to_string(Integer(r.deviation.lo().get_den()))},
                           {"encHiNum", to_string(Integer(r.deviation.hi().get_num()))},
                           {"encHiDen", to_string(Integer(r.deviation.hi().get_den()))},
                           {"verdict", to_string(r.verdict)}});
    }
    return {{"depth", c.depth},
            {"grid", rationals_json(c.grid)},
            {"g", {{"breakpoints", rationals_json(c.g.breakpoints())}, {"values", rationals_json(c.g.values())}}},
            {"records", records},
            {"semantics", "bounds asserted at grid points only"}};
}

SandwichCertificate certificate_from(const Json& j) {
    SandwichCertificate c;
    const Json& depth = field(j, "depth");
    if (!depth.is_number_unsigned()) fail(ErrorKind::argument, "depth must be a non-negative integer");
    c.depth = depth.get<unsigned>();
    c.grid = rationals_from(field(j, "grid"));
    const Json& g = field(j, "g");
    c.g = PiecewiseLinear(rationals_from(field(g, "breakpoints")), rationals_from(field(g, "values")));
    for (const auto& r : field(j, "records")) {
        auto q = [&](const char* num, const char* den) {
            return make_rational(integer_from(field(r, num)), integer_from(field(r, den)));
        };
        c.records.push_back(SandwichRecord{rational_from(field(r, "d")), rational_from(field(r, "x")),
                                           Enclosure(q("encLoNum", "encLoDen"), q("encHiNum", "encHiDen")),
                                           q("boundNum", "boundDen"), parse_verdict(text(field(r, "verdict")))});
    }
    return c;
}

// ---- witnesses and ladders ----

Json witness_json(const WitnessReport& r) {
    Json j = {{"x", rational_json(r.x)},
              {"probe", rational_json(r.probe)},
              {"quotient", enclosure_json(r.quotient)},
              {"requiredBound", enclosure_json(r.required_bound)},
              {"verdict", to_string(r.verdict)}};
    if (r.w) {
        j["w"] = to_string(*r.w);
        j["m"] = r.m;
        j["s_m"] = r.s_m;
    }
    return j;
}

WitnessReport witness_from(const Json& j) {
    WitnessReport r;
    r.x = rational_from(field(j, "x"));
    r.probe = rational_from(field(j, "probe"));
    r.quotient = enclosure_from(field(j, "quotient"));
    r.required_bound = enclosure_from(field(j, "requiredBound"));
    r.verdict = parse_verdict(text(field(j, "verdict")));
    if (j.contains("w")) {
        r.w = integer_from(j.at("w"));
        r.m = field(j, "m").get<std::size_t>();
        r.s_m = field(j, "s_m").get<unsigned long>();
    }
    return r;
}

Json ladder_json(const LadderReport& r) {
    Json samples = Json::array();
    for (const auto& s : r.samples) {
        samples.push_back({{"h", rational_json(s.h)},
                           {"skipped", s.skipped},
                           {"quotient", optional_json(s.quotient, &enclosure_json)}});
    }
    return {{"function", r.function},
            {"point", Json::array({rational_json(r.px), rational_json(r.py)})},
            {"v", Json::array({rational_json(r.vx), rational_json(r.vy)})},
            {"direction", Json::array({enclosure_json(r.ux), enclosure_json(r.uy)})},
            {"samples", samples},
            {"trend",
             {{"maxAbsLo", rational_json(r.max_abs_lo)},
              {"absLoNondecreasing", r.abs_lo_nondecreasing},
              {"signStable", r.sign_stable}}}};
}

LadderReport ladder_from(const Json& j) {
    LadderReport r;
    r.function = text(field(j, "function"));
    const Json& p = field(j, "point");
    const Json& v = field(j, "v");
    const Json& u = field(j, "direction");
    if (!p.is_array() || p.size() != 2 || !v.is_array() || v.size() != 2 || !u.is_array() || u.size() != 2)
        fail(ErrorKind::argument, "point, v and direction must be pairs");
    r.px = rational_from(p[0]);
    r.py = rational_from(p[1]);
    r.vx = rational_from(v[0]);
    r.vy = rational_from(v[1]);
    r.ux = enclosure_from(u[0]);
    r.uy = enclosure_from(u[1]);
    for (const auto& s : field(j, "samples")) {
        LadderSample out{rational_from(field(s, "h")), field(s, "skipped").get<bool>(), std::nullopt};
        if (!field(s, "quotient").is_null()) out.quotient = enclosure_from(s.at("quotient"));
        r.samples.push_back(std::move(out));
    }
    const Json& t = field(j, "trend");
    r.max_abs_lo = rational_from(field(t, "maxAbsLo"));
    r.abs_lo_nondecreasing = field(t, "absLoNondecreasing").get<bool>();
    r.sign_stable = field(t, "signStable").get<bool>();
    return r;
}

std::string ladder_csv(const LadderReport& r) {
    std::ostringstream out;
    out << "h_num,h_den,q_lo,q_hi\n";
    for (const auto& s : r.samples) {
        out << s.h.get_num() << ',' << s.h.get_den() << ',';
        if (s.quotient) out << to_string(s.quotient->lo()) << ',' << to_string(s.quotient->hi());
        else out << ',';
        out << '\n';
    }
    return out.str();
}

// ---- reports ----

Json margin_json(const MarginResult& r) {
    Json j = {{"status", to_string(r.status)}, {"margin", optional_json(r.margin, &enclosure_json)}};
    if (r.params) j["params"] = {{"a", rational_json(r.params->a)}, {"b", r.params->b}};
    return j;
}

Json family_json(const FamilyReport& r) {
    Json records = Json::array();
    for (const auto& c : r.records) {
        records.push_back({{"condition", c.condition},
                           {"d", rational_json(c.d)},
                           {"d2", rational_json(c.d2)},
                           {"norm", enclosure_json(c.norm)},
                           {"bound", rational_json(c.bound)},
                           {"strict", c.strict},
                           {"verdict", to_string(c.verdict)}});
    }
    return {{"depth", r.depth},
            {"failed", r.failed},
            {"passed", r.passed()},
            {"thetaStar", optional_json(r.theta_star, &rational_json)},
            {"records", records}};
}

Json glue_json(const GlueReport& r) {
    Json bps = Json::array(), flat = Json::array();
    for (const auto& b : r.breakpoints) {
        bps.push_back({{"label", b.label},
                       {"x", rational_json(b.x)},
                       {"left", rational_json(b.left)},
                       {"right", rational_json(b.right)},
                       {"equal", b.equal}});
    }
    for (const auto& f : r.flat)
        flat.push_back({{"n", f.n}, {"x", rational_json(f.x)}, {"difference", rational_json(f.difference)}});
    return {{"continuous", r.continuous()}, {"flatOnI1", r.flat_on_I1()}, {"breakpoints", bps}, {"flat", flat}};
}

Json strip_json(const StripReport& r) {
    Json rep = Json::array(), mids = Json::array();
    for (const auto& c : r.reproduction) {
        rep.push_back({{"c", rational_json(c.c)},
                       {"y", rational_json(c.y)},
                       {"family", enclosure_json(c.family_value)},
                       {"extension", enclosure_json(c.extension_value)},
                       {"equal", c.equal}});
    }
    for (const auto& m : r.midpoints) {
        mids.push_back({{"alpha", rational_json(m.alpha)},
                        {"beta", rational_json(m.beta)},
                        {"y", rational_json(m.y)},
                        {"midpoint", enclosure_json(m.midpoint_value)},
                        {"average", enclosure_json(m.average)},
                        {"equal", m.equal}});
    }
    return {{"passed", r.passed()}, {"reproduction", rep}, {"midpoints", mids}};
}

Json escape_json(const EscapeReport& r) {
    Json slopes = Json::array();
    for (const auto& s : r.slopes) {
        slopes.push_back({{"i", s.piece.i},
                          {"j", s.piece.j},
                          {"upper", s.piece.upper},
                          {"gx", rational_json(s.piece.gx)},
                          {"gy", rational_json(s.piece.gy)},
                          {"margin", enclosure_json(s.margin)},
                          {"verdict", to_string(s.verdict)}});
    }
    return {{"eps", rational_json(r.eps)},
            {"n", r.n},
            {"m", r.m},
            {"maxGradient", enclosure_json(r.max_gradient)},
            {"minimal", r.minimal},
            {"distance", rational_json(r.distance)},
            {"distanceOk", r.distance_ok},
            {"v1", rational_json(r.v1)},
            {"v2", enclosure_json(r.v2)},
            {"certified", r.certified()},
            {"slopes", slopes}};
}

Json banach_json(const BanachReport& r) {
    const auto& s = r.settings;
    Json candidate = nullptr;
    if (r.candidate) {
        candidate = {{"x", rational_json(r.candidate->x)},
                     {"y", rational_json(r.candidate->y)},
                     {"v", Json::array({rational_json(r.candidate->vx), rational_json(r.candidate->vy)})}};
    }
    return {{"approximate", BanachReport::approximate},
            {"n", s.n},
            {"corner", Json::array({s.corner_i, s.corner_j})},
            {"vertical", s.vertical},
            {"xyResolution", s.xy_resolution},
            {"vResolution", s.v_resolution},
            {"points", r.points},
            {"directions", r.directions},
            {"h", rationals_json(r.h)},
            {"found", r.candidate.has_value()},
            {"candidate", candidate}};
}

}  // namespace roughlab
