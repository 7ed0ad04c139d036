#include "roughlab/cli.hpp"

#include "roughlab/error.hpp"
#include "roughlab/serialize.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace roughlab {

namespace {

const std::map<std::string, std::vector<ParamSpec>>& table() {
    static const std::map<std::string, std::vector<ParamSpec>> t = {
        {"eval",
         {{"fn", "takagi", "takagi, sum_takagi, radial_takagi or weierstrass"},
          {"x", "", "abscissa"},
          {"y", "", "second coordinate for 2D functions"},
          {"eps", "1/1000000000000", "enclosure tolerance"},
          {"a", "1/14", "weierstrass a"},
          {"b", "147", "weierstrass b"},
          {"signs", "+", "weierstrass sign prefix over +/-, zeros after"}}},
        {"family",
         {{"depth", "3", "level N"},
          {"theta", "", "fixture scale; default the largest certified"},
          {"base", "zero", "zero or takagi"},
          {"grid-level", "5", "grid k/3^level"},
          {"eps", "1/1000000", "enclosure tolerance"}}},
        {"build-g",
         {{"depth", "4", "level N"},
          {"theta", "", "fixture scale; default the largest certified"},
          {"base", "takagi", "zero or takagi"},
          {"grid-level", "6", "grid k/3^level"},
          {"eps", "1/1000000", "enclosure tolerance"}}},
        {"glue",
         {{"count", "6", "pieces N"},
          {"terms", "8", "Takagi terms in the roughener"},
          {"grid", "3000", "uniform grid intervals"},
          {"eps", "1/100", "enclosure tolerance"}}},
        {"extend",
         {{"depth", "5", "level N"}, {"y-points", "10", "y grid size"}, {"eps", "1/100", "enclosure tolerance"}}},
        {"perturb",
         {{"surface", "random", "random or plane"},
          {"cells", "3", "random surface cells per side"},
          {"gx", "0", "plane slope in x"},
          {"gy", "0", "plane slope in y"},
          {"eps", "1", "perturbation budget"},
          {"n", "1", "Banach level"}}},
        {"witness",
         {{"preset", "", "lemma-default"},
          {"a", "", "series ratio a"},
          {"b", "", "odd frequency b"},
          {"x", "", "base point in (0, 1]"},
          {"m", "1", "index into s (1-based)"},
          {"s", "", "comma list; default 1, 2, ..., terms"},
          {"r", "", "comma list of +1/-1, or random; default all +1"},
          {"terms", "12", "prefix length when s is not given"},
          {"eps", "1/1000000000000", "enclosure tolerance"}}},
        {"lipschitz",
         {{"fn", "takagi", "takagi"},
          {"x", "", "base point"},
          {"M", "", "Lipschitz constant"},
          {"grid", "256", "search grid k/grid"},
          {"eps", "1/1000000", "enclosure tolerance"}}},
        {"scan2d",
         {{"fn", "sum_takagi", "sum_takagi, radial_takagi or constant"},
          {"px", "", "point x"},
          {"py", "", "point y"},
          {"vx", "", "direction x"},
          {"vy", "", "direction y"},
          {"kmin", "3", "first k of h = 2^-k"},
          {"kmax", "10", "last k"},
          {"eps", "1/1000000000", "enclosure tolerance"}}},
        {"ladder",
         {{"fn", "sum_takagi", "sum_takagi, radial_takagi or constant"},
          {"px", "1/3", "point x"},
          {"py", "1/3", "point y"},
          {"vx", "1", "direction x"},
          {"vy", "1", "direction y"},
          {"kmin", "3", "first k of h = 2^-k"},
          {"kmax", "12", "last k"},
          {"eps", "1/1000000000", "enclosure tolerance"}}},
        {"banach",
         {{"fn", "sum_takagi", "sum_takagi, constant or escape"},
          {"n", "1", "level"},
          {"corner-i", "0", "box corner i"},
          {"corner-j", "0", "box corner j"},
          {"vertical", "0", "1 for v = (0, 1)"},
          {"xy", "8", "grid resolution"},
          {"v", "4", "direction resolution"},
          {"samples", "24", "h samples"},
          {"cells", "3", "escape: random surface cells"},
          {"budget", "1", "escape: perturbation budget"},
          {"eps", "1/1000", "enclosure tolerance"}}},
    };
    return t;
}

unsigned long whole_number(const std::string& key, const std::string& text) {
    const Rational q = parse_rational(text);
    if (q.get_den() != 1 || q < 0 || !q.get_num().fits_ulong_p())
        fail(ErrorKind::usage, "--" + key + " needs a non-negative integer, got '" + text + "'");
    return q.get_num().get_ui();
}

class Params {
public:
    explicit Params(const RunConfig& c) : values_(c.params), specs_(command_params(c.command)) {
        for (const auto& [k, v] : values_) {
            bool known = false;
            for (const auto& s : specs_) known = known || s.name == k;
            if (!known) fail(ErrorKind::usage, "unknown key '--" + k + "' for " + c.command);
        }
        for (const auto& s : specs_)
            if (!values_.count(s.name) && !s.fallback.empty()) values_[s.name] = s.fallback;
    }

    bool has(const std::string& k) const { return values_.count(k) > 0; }
    std::string str(const std::string& k) const {
        if (!has(k)) fail(ErrorKind::usage, "missing --" + k);
        return values_.at(k);
    }
    Rational rational(const std::string& k) const { return parse_rational(str(k)); }
    unsigned long whole(const std::string& k) const { return whole_number(k, str(k)); }
    Rational positive(const std::string& k) const {
        const Rational q = rational(k);
        if (q <= 0) fail(ErrorKind::usage, "--" + k + " must be positive");
        return q;
    }

private:
    std::map<std::string, std::string> values_;
    const std::vector<ParamSpec>& specs_;
};

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

struct Outcome {
    Outcome(Json d, int s = 0) : doc(std::move(d)), status(s) {}
    Json doc;
    int status;
    std::string csv;
};

int verdict_status(Verdict v) { return v == Verdict::certified ? 0 : v == Verdict::failed ? 2 : 3; }

FunctionHandle family_base(const Params& p) {
    const std::string base = p.str("base");
    if (base == "zero") return FunctionHandle::constant(0);
    if (base == "takagi") return takagi_handle();
    fail(ErrorKind::usage, "unknown base '" + base + "'");
}

// The fixture family at the requested theta, or at theta* when none is given.
// theta* only sees differences of members, so it is found on the zero base.
AdmissibleFamily fixture(const Params& p) {
    const unsigned depth = p.whole("depth");
    if (depth == 0 || depth > limits().max_levels)
        fail(ErrorKind::capacity, "depth must lie in 1.." + std::to_string(limits().max_levels));
    const FunctionHandle base = family_base(p);
    Rational theta = 1;
    if (p.has("theta")) {
        theta = p.rational("theta");
    } else {
        const FamilyReport probe = check_family_conditions(
            make_admissible_family(FunctionHandle::constant(0), depth, 1), triadic_grid(p.whole("grid-level")),
            p.positive("eps"));
        theta = probe.theta_star.value_or(0);
    }
    return make_admissible_family(base, depth, theta);
}

FunctionHandle2D surface_function(const std::string& fn) {
    if (fn == "sum_takagi") return sum_takagi_handle();
    if (fn == "radial_takagi") return radial_takagi_handle();
    if (fn == "constant") return FunctionHandle2D::constant(0);
    fail(ErrorKind::usage, "unknown 2D function '" + fn + "'");
}

Outcome eval(const Params& p) {
    const std::string fn = p.str("fn");
    const Rational x = p.rational("x");
    const Rational eps = p.positive("eps");
    Json j = {{"function", fn}, {"x", rational_json(x)}};
    auto exact_or = [&](auto exact, auto enclosed) {
        try {
            j["value"] = rational_json(exact());
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::capacity) throw;
            j["enclosure"] = enclosure_json(enclosed());
        }
    };
    if (fn == "takagi") {
        if (x < 0 || x > 1) fail(ErrorKind::domain, "takagi: x = " + to_string(x) + " outside [0, 1]");
        exact_or([&] { return takagi_exact(x); }, [&] { return takagi_enclosure(x, eps); });
    } else if (fn == "sum_takagi" || fn == "radial_takagi") {
        const Rational y = p.rational("y");
        j["y"] = rational_json(y);
        const FunctionHandle2D F = surface_function(fn);
        if (!F.in_domain(x, y)) fail(ErrorKind::domain, fn + ": point outside [0, 1]^2");
        if (fn == "sum_takagi") exact_or([&] { return sum_takagi(x, y); }, [&] { return F(x, y, eps); });
        else j["enclosure"] = enclosure_json(F(x, y, eps));
    } else if (fn == "weierstrass") {
        const MarginResult mr = weierstrass_margin(p.rational("a"), p.whole("b"), eps);
        if (!mr.params) fail(ErrorKind::precondition, std::string("weierstrass: parameters rejected, ") + to_string(mr.status));
        std::vector<std::uint8_t> bits;
        for (char c : p.str("signs")) {
            if (c != '+' && c != '-') fail(ErrorKind::usage, "signs take only '+' and '-'");
            bits.push_back(c == '-');
        }
        if (bits.empty()) fail(ErrorKind::usage, "empty --signs");
        j["enclosure"] = enclosure_json(weierstrass_handle(*mr.params, SignSequence(bits))(x, eps));
    } else {
        fail(ErrorKind::usage, "unknown function '" + fn + "'");
    }
    return {j};
}

Outcome family(const Params& p) {
    const AdmissibleFamily fam = fixture(p);
    const FamilyReport rep = check_family_conditions(fam, triadic_grid(p.whole("grid-level")), p.positive("eps"));
    Json j = family_json(rep);
    j["theta"] = rational_json(*fam.scale);
    return {j, rep.passed() ? 0 : 2};
}

Outcome build(const Params& p) {
    const AdmissibleFamily fam = fixture(p);
    const SandwichCertificate c = build_g(fam, triadic_grid(p.whole("grid-level")), p.positive("eps"));
    Json j = certificate_json(c);
    j["theta"] = rational_json(*fam.scale);
    return {j, c.failed() ? 2 : c.undecided() ? 3 : 0};
}

Outcome glue(const Params& p) {
    const unsigned N = p.whole("count");
    if (N == 0) fail(ErrorKind::usage, "--count must be positive");
    const auto bp = default_glue_breakpoints(N);
    std::vector<FunctionHandle> members;
    for (unsigned n = 1; n <= N; ++n) members.push_back(FunctionHandle::constant(Rational(1, n)));
    const GlueSpec spec{N, bp, members, FunctionHandle::constant(0), make_pinned_roughener(bp, p.whole("terms"))};
    const GlueResult r = glue_translation(spec, uniform_grid(0, 1, p.whole("grid")), p.positive("eps"));
    Json j = glue_json(r.report);
    j["h"] = {{"breakpoints", Json::array()}, {"values", Json::array()}};
    for (std::size_t i = 0; i < r.h.size(); ++i) {
        j["h"]["breakpoints"].push_back(rational_json(r.h.breakpoints()[i]));
        j["h"]["values"].push_back(rational_json(r.h.values()[i]));
    }
    return {j, r.report.continuous() && r.report.flat_on_I1() ? 0 : 2};
}

Outcome extend(const Params& p) {
    const unsigned N = p.whole("depth");
    if (N + 1 > limits().max_levels) fail(ErrorKind::capacity, "depth above cap");
    std::map<Rational, FunctionHandle2D> fam;
    for (const auto& c : level_points(N + 1).D) {
        fam.emplace(c, FunctionHandle2D("phi", {0, 1}, {0, 1}, [c](const Rational& x, const Rational& y, const Rational&) {
                        return Enclosure::point(c * c + x * y);
                    }));
    }
    const unsigned ny = p.whole("y-points");
    if (ny < 2) fail(ErrorKind::usage, "--y-points must be at least 2");
    const StripExtension ext = tietze_strip_extension(fam, N, uniform_grid(0, 1, ny - 1), p.positive("eps"));
    Json j = strip_json(ext.report);
    j["represented"] = Json::array();
    for (const auto& c : ext.represented) j["represented"].push_back(rational_json(c));
    return {j, ext.report.passed() ? 0 : 2};
}

PlSurface surface(const Params& p, std::uint64_t seed) {
    const std::string kind = p.str("surface");
    if (kind == "plane") return PlSurface::plane(0, p.rational("gx"), p.rational("gy"));
    if (kind != "random") fail(ErrorKind::usage, "unknown surface '" + kind + "'");
    std::mt19937_64 rng(seed);
    return PlSurface::random(rng, p.whole("cells"));
}

Outcome perturb(const Params& p, std::uint64_t seed) {
    const EscapeResult r = escape_perturbation(surface(p, seed), p.rational("eps"), p.whole("n"));
    bool undecided = false;
    for (const auto& s : r.report.slopes) undecided = undecided || s.verdict == Verdict::undecided;
    return {escape_json(r.report), r.report.certified() ? 0 : undecided ? 3 : 2};
}

Outcome witness(const Params& p, std::uint64_t seed) {
    const Rational eps = p.positive("eps");
    WeierstrassParams wp;
    if (p.has("preset")) {
        if (p.str("preset") != "lemma-default") fail(ErrorKind::usage, "unknown preset '" + p.str("preset") + "'");
        if (p.has("a") || p.has("b")) fail(ErrorKind::usage, "--preset excludes --a and --b");
        wp = lemma_default_params();
    } else {
        if (!p.has("a") || !p.has("b")) fail(ErrorKind::usage, "give --preset lemma-default or both --a and --b");
        const MarginResult mr = weierstrass_margin(p.rational("a"), p.whole("b"), eps);
        if (!mr.params) fail(ErrorKind::precondition, std::string("parameters rejected: ") + to_string(mr.status));
        wp = *mr.params;
    }
    std::vector<unsigned long> s;
    if (p.has("s")) {
        for (const auto& t : split(p.str("s"))) s.push_back(whole_number("s", t));
    } else {
        for (unsigned long j = 1; j <= p.whole("terms"); ++j) s.push_back(j);
    }
    std::vector<int> r;
    const std::string rs = p.has("r") ? p.str("r") : "";
    if (rs == "random") {
        std::mt19937_64 rng(seed);
        for (std::size_t j = 0; j < s.size(); ++j) r.push_back(rng() % 2 ? 1 : -1);
    } else if (rs.empty()) {
        r.assign(s.size(), 1);
    } else {
        for (const auto& t : split(rs)) {
            if (t == "1" || t == "+1" || t == "+") r.push_back(1);
            else if (t == "-1" || t == "-") r.push_back(-1);
            else fail(ErrorKind::usage, "sign '" + t + "' is not +1 or -1");
        }
    }
    const WitnessReport rep = lemma_witness(wp, p.rational("x"), s, r, p.whole("m"), eps);
    Json j = witness_json(rep);
    j["params"] = {{"a", rational_json(wp.a)}, {"b", wp.b}, {"margin", enclosure_json(wp.margin)}};
    return {j, verdict_status(rep.verdict)};
}

Outcome lipschitz(const Params& p) {
    if (p.str("fn") != "takagi") fail(ErrorKind::usage, "lipschitz supports fn = takagi");
    const Rational x = p.rational("x");
    if (x < 0 || x > 1) fail(ErrorKind::domain, "x outside [0, 1]");
    const auto grid = uniform_grid(0, 1, p.whole("grid"));
    const auto w = lipschitz_witness(takagi_handle(), x, p.positive("M"), grid, p.positive("eps"));
    Json j = {{"x", rational_json(x)}, {"M", rational_json(p.rational("M"))}, {"found", w.has_value()}};
    j["witness"] = w ? witness_json(*w) : Json(nullptr);
    return {j};
}

Outcome scan(const Params& p, bool csv) {
    const unsigned long kmin = p.whole("kmin"), kmax = p.whole("kmax");
    if (kmin > kmax) fail(ErrorKind::usage, "--kmin above --kmax");
    std::vector<Rational> ladder;
    for (unsigned long k = kmin; k <= kmax; ++k) ladder.push_back(Rational(1) / Rational(Integer(1) << k));
    const LadderReport r = directional_scan_2d(surface_function(p.str("fn")), p.rational("px"), p.rational("py"),
                                               p.rational("vx"), p.rational("vy"), ladder, p.positive("eps"));
    Outcome out{ladder_json(r)};
    if (csv) out.csv = ladder_csv(r);
    return out;
}

Outcome banach(const Params& p, std::uint64_t seed) {
    BanachScanSettings st;
    st.n = p.whole("n");
    st.corner_i = static_cast<int>(p.whole("corner-i"));
    st.corner_j = static_cast<int>(p.whole("corner-j"));
    st.vertical = p.whole("vertical") != 0;
    st.xy_resolution = p.whole("xy");
    st.v_resolution = p.whole("v");
    st.h_samples = p.whole("samples");
    if (st.n == 0 || st.corner_i > 1 || st.corner_j > 1 || !st.xy_resolution || !st.v_resolution || !st.h_samples)
        fail(ErrorKind::usage, "banach needs n, resolutions and samples positive and corners in {0, 1}");
    const std::string fn = p.str("fn");
    const Rational eps = p.positive("eps");
    if (fn == "escape") {
        std::mt19937_64 rng(seed);
        const EscapeResult e = escape_perturbation(PlSurface::random(rng, p.whole("cells")), p.positive("budget"), st.n);
        return {banach_json(banach_membership_scan(e.f, st, eps))};
    }
    return {banach_json(banach_membership_scan(surface_function(fn), st, eps))};
}

Outcome dispatch(const RunConfig& c) {
    const Params p(c);
    const bool csv = c.format == "csv";
    if (c.format != "json" && !csv) fail(ErrorKind::usage, "unknown format '" + c.format + "'");
    if (csv && c.command != "scan2d" && c.command != "ladder")
        fail(ErrorKind::usage, "csv output exists for scan2d and ladder only");
    if (c.command == "eval") return eval(p);
    if (c.command == "family") return family(p);
    if (c.command == "build-g") return build(p);
    if (c.command == "glue") return glue(p);
    if (c.command == "extend") return extend(p);
    if (c.command == "perturb") return perturb(p, c.seed);
    if (c.command == "witness") return witness(p, c.seed);
    if (c.command == "lipschitz") return lipschitz(p);
    if (c.command == "banach") return banach(p, c.seed);
    return scan(p, csv);
}

}  // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = {"eval",    "family",  "build-g",   "glue",   "extend", "perturb",
                                                   "witness", "lipschitz", "scan2d", "ladder", "banach"};
    return names;
}

const std::vector<ParamSpec>& command_params(const std::string& command) {
    const auto it = table().find(command);
    if (it == table().end()) fail(ErrorKind::usage, "unknown command '" + command + "'");
    return it->second;
}

RunResult execute(const RunConfig& config) {
    try {
        const Outcome o = dispatch(config);
        return {o.status, o.csv.empty() ? o.doc.dump(2) + "\n" : o.csv, ""};
    } catch (const Error& e) {
        const int status = e.kind() == ErrorKind::undecided ? 3 : e.kind() == ErrorKind::construction ? 2 : 1;
        return {status, "", std::string(to_string(e.kind())) + " error: " + e.what()};
    } catch (const std::exception& e) {
        return {1, "", std::string("error: ") + e.what()};
    }
}

int run(const RunConfig& config) {
    const RunResult r = execute(config);
    if (!r.output.empty()) {
        if (config.output_path.empty()) {
            std::cout << r.output;
        } else {
            std::ofstream out(config.output_path, std::ios::binary);
            out << r.output;
            if (!out) {
                std::cerr << "cannot write " << config.output_path << "\n";
                return 1;
            }
        }
    }
    if (!r.message.empty()) std::cerr << r.message << "\n";
    return r.status;
}

}  // namespace roughlab
