#include "bettilab/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "bettilab/betti.hpp"
#include "bettilab/chow.hpp"
#include "bettilab/curve.hpp"
#include "bettilab/hyperelliptic.hpp"
#include "bettilab/mrc.hpp"
#include "bettilab/random.hpp"
#include "bettilab/ulrich.hpp"

namespace bettilab {

std::filesystem::path default_run_store() {
    if (const char* env = std::getenv("BETTILAB_RUN_STORE"); env != nullptr && *env != '\0') return env;
    return "runs";
}

std::filesystem::path store_run(const nlohmann::json& record, const std::filesystem::path& dir) {
    const std::string text = record.dump(2) + "\n";
    std::ostringstream name;
    name << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(text) << ".json";
    std::filesystem::create_directories(dir);
    const std::filesystem::path path = dir / name.str();
    if (!std::filesystem::exists(path)) {
        std::ofstream os(path, std::ios::binary);
        os << text;
        if (!os) throw std::runtime_error("could not write " + path.string());
    }
    return path;
}

namespace {

struct Common {
    std::uint64_t seed = 1;
    std::size_t primes = 2;
    std::string format = "text";
    bool no_store = false;
    bool stamp = false;
    std::string store;
};

struct CurveOptions {
    std::string kind = "rnc";
    std::size_t r = 3;
    std::size_t d = 0;  // 0: same as r
    std::vector<std::size_t> exponents;
};

struct Result {
    nlohmann::json config = nlohmann::json::object();
    nlohmann::json outputs = nlohmann::json::object();
    nlohmann::json agreement = nlohmann::json::object();
    std::string text;
    std::string csv;
    std::vector<std::string> violations;  // "name: detail"
};

std::vector<std::uint32_t> run_primes(const Common& c) {
    std::vector<std::uint32_t> out;
    for (std::size_t k = 0; k < c.primes; ++k) out.push_back(random_prime_31(derive_seed(c.seed, "prime", k)));
    return out;
}

nlohmann::json common_config(const Common& c, const std::vector<std::uint32_t>& primes) {
    return {{"seed", c.seed}, {"primes", primes}};
}

std::size_t curve_degree(const CurveOptions& o) { return o.d == 0 ? o.r : o.d; }

nlohmann::json curve_config(const CurveOptions& o) {
    return {{"curve", o.kind}, {"r", o.r}, {"d", curve_degree(o)}, {"exponents", o.exponents}};
}

ParametricCurve make_curve(const PrimeField& f, const CurveOptions& o, std::uint64_t seed) {
    if (o.kind == "rnc") return rational_normal_curve(f, o.r);
    if (o.kind == "twisted-cubic") return rational_normal_curve(f, 3);
    if (o.kind == "random") return random_curve(f, o.r, curve_degree(o), derive_seed(seed, "curve"));
    if (o.kind == "monomial") return monomial_curve(f, curve_degree(o), o.exponents);
    throw std::invalid_argument("unknown curve kind " + o.kind);
}

void add_curve_options(CLI::App* sub, CurveOptions& o, const std::vector<std::string>& kinds) {
    sub->add_option("--curve", o.kind, "curve family")->check(CLI::IsMember(kinds))->capture_default_str();
    sub->add_option("--r", o.r, "ambient dimension")->check(CLI::Range(1, 7))->capture_default_str();
    sub->add_option("--d", o.d, "degree (defaults to r)");
    sub->add_option("--exponents", o.exponents, "monomial exponents for --curve monomial")->delimiter(',');
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i == 0 ? "" : ",") + std::to_string(v[i]);
    return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// --- predict -----------------------------------------------------------------

struct PredictOptions {
    std::int64_t g = 0, r = 3, d = 3, gamma = 20;
    int reg = -1;
};

Result run_predict(const PredictOptions& o) {
    Result res;
    res.config = {{"g", o.g}, {"r", o.r}, {"d", o.d}, {"gamma", o.gamma}, {"ideal_regularity", o.reg}};
    const MrcPrediction p = predict(o.g, o.r, o.d, o.gamma, o.reg);
    res.outputs["prediction"] = p.to_json();
    std::ostringstream os;
    os << "u=" << p.u << "\n"
       << "delta=(" << join(p.delta) << ")\n"
       << "row u-1: b[i+1][" << p.u - 1 << "] = (" << join(p.upper) << ")\n"
       << "row u:   b[i][" << p.u << "] = (" << join(p.lower) << ")\n"
       << "igc generators: " << p.igc_generators << "\n";
    if (!p.precondition_ok) os << "warning: gamma is below d*reg(I_C) - g + 1; the two-row prediction may not apply\n";
    res.text = os.str();
    return res;
}

// --- betti -------------------------------------------------------------------

struct BettiOptions {
    std::string points_file;
    std::string source = "random";  // random | curve
    CurveOptions curve;
    std::size_t gamma = 10;
};

Result run_betti(const Common& c, const BettiOptions& o) {
    Result res;
    std::vector<BettiTable> tables;
    if (!o.points_file.empty()) {
        std::ifstream in(o.points_file);
        if (!in) throw std::invalid_argument("cannot read " + o.points_file);
        const PointSet pts = PointSet::from_json(nlohmann::json::parse(in));
        res.config = {{"points", pts.to_json()}};
        tables.push_back(betti_table(pts));
    } else {
        const auto primes = run_primes(c);
        res.config = common_config(c, primes);
        res.config["source"] = o.source;
        res.config["gamma"] = o.gamma;
        if (o.source == "curve") res.config.update(curve_config(o.curve));
        else res.config["r"] = o.curve.r;
        for (std::size_t k = 0; k < primes.size(); ++k) {
            const PrimeField f(primes[k]);
            const std::uint64_t s = derive_seed(c.seed, "points", k);
            const PointSet pts = o.source == "curve" ? sample_points(make_curve(f, o.curve, c.seed), o.gamma, s)
                                                     : random_point_set(f, o.curve.r, o.gamma, s);
            BettiTable t = betti_table(pts);
            t.seed = s;
            tables.push_back(std::move(t));
        }
    }
    bool agree = true;
    for (const auto& t : tables) agree = agree && t.same_entries(tables.front());
    nlohmann::json js = nlohmann::json::array();
    std::vector<std::uint32_t> used;
    for (const auto& t : tables) {
        js.push_back(t.to_json());
        used.push_back(t.prime);
    }
    res.outputs["tables"] = js;
    res.agreement = {{"primes", used}, {"tables_agree", agree}};
    std::ostringstream os;
    os << render_betti(tables.front());
    os << "primes:";
    for (const auto p : used) os << ' ' << p;
    os << "\nagreement: " << yes_no(agree) << "\n";
    res.text = os.str();
    res.csv = betti_csv(tables.front());
    return res;
}

// --- mrc-check ---------------------------------------------------------------

struct MrcOptions {
    CurveOptions curve;
    std::size_t gamma = 20;
};

Result run_mrc_check(const Common& c, const MrcOptions& o) {
    Result res;
    const auto primes = run_primes(c);
    res.config = common_config(c, primes);
    res.config.update(curve_config(o.curve));
    res.config["gamma"] = o.gamma;
    nlohmann::json per = nlohmann::json::array();
    std::vector<BettiTable> tables;
    std::vector<bool> passes;
    std::ostringstream os;
    for (std::size_t k = 0; k < primes.size(); ++k) {
        const PrimeField f(primes[k]);
        const ParametricCurve curve = make_curve(f, o.curve, c.seed);
        const BettiTable ct = curve_table(curve);
        const int ireg = regularity(ct) + 1;
        const MrcPrediction pred = predict(0, static_cast<std::int64_t>(curve.r()), static_cast<std::int64_t>(curve.d()),
                                           static_cast<std::int64_t>(o.gamma), ireg);
        const std::uint64_t s = derive_seed(c.seed, "points", k);
        BettiTable t = betti_table(sample_points(curve, o.gamma, s), curve.r() + 1, pred.u + 1);
        t.seed = s;
        const Verdict v = verdict(t, pred, &ct);
        if (pred.precondition_ok && !v.differences_match) {
            res.violations.push_back("diagonal-difference: b[i+1][u-1] - b[i][u] != delta_i at p = " + std::to_string(f.modulus()));
        }
        const SplittingType type = splitting_type(curve);
        per.push_back({{"prime", f.modulus()},
                       {"splitting_type", type.a},
                       {"balanced", type.balanced()},
                       {"curve_table", ct.to_json()},
                       {"table", t.to_json()},
                       {"prediction", pred.to_json()},
                       {"verdict", v.to_json()}});
        if (k == 0) {
            os << render_betti(t);
            os << "u=" << pred.u << " delta=(" << join(pred.delta) << ")\n";
            if (!pred.precondition_ok) os << "warning: gamma below d*reg(I_C) - g + 1 = " << curve.d() * static_cast<std::size_t>(ireg) + 1 << "\n";
        }
        os << "p=" << f.modulus() << ": MRC " << (v.mrc_pass ? "pass" : "fail") << ", IGC " << (v.igc_pass ? "pass" : "fail")
           << ", rows<=u-2 " << (v.low_rows_match ? "match" : "differ") << ", rows>=u+1 " << (v.high_rows_zero ? "zero" : "nonzero");
        for (const auto& e : v.failing) os << ", failing diagonal i=" << e.i << " (" << e.upper << "," << e.lower << ")";
        os << "\n";
        tables.push_back(std::move(t));
        passes.push_back(v.mrc_pass);
    }
    bool agree = true;
    for (std::size_t k = 0; k < tables.size(); ++k) agree = agree && tables[k].same_entries(tables[0]) && passes[k] == passes[0];
    os << "agreement across primes: " << yes_no(agree) << "\n";
    res.outputs["runs"] = per;
    res.agreement = {{"primes", primes}, {"tables_agree", agree}};
    res.text = os.str();
    res.csv = betti_csv(tables.front());
    return res;
}

// --- splitting ---------------------------------------------------------------

Result run_splitting(const Common& c, const CurveOptions& o) {
    Result res;
    const auto primes = run_primes(c);
    res.config = common_config(c, primes);
    res.config.update(curve_config(o));
    nlohmann::json per = nlohmann::json::array();
    std::vector<SplittingType> types;
    std::ostringstream os;
    for (const auto p : primes) {
        const PrimeField f(p);
        const SplittingType t = splitting_type(make_curve(f, o, c.seed));
        per.push_back({{"prime", p}, {"a", t.a}, {"balanced", t.balanced()}});
        os << "p=" << p << ": T(-1)|R =";
        for (std::size_t i = 0; i < t.a.size(); ++i) os << (i == 0 ? " " : " + ") << "O(" << t.a[i] << ")";
        os << ", M_V =";
        for (std::size_t i = 0; i < t.a.size(); ++i) os << (i == 0 ? " " : " + ") << "O(" << -t.a[i] << ")";
        os << ", balanced: " << yes_no(t.balanced()) << "\n";
        types.push_back(t);
    }
    bool agree = true;
    for (const auto& t : types) agree = agree && t == types.front();
    res.outputs["types"] = per;
    res.agreement = {{"primes", primes}, {"types_agree", agree}};
    os << "agreement across primes: " << yes_no(agree) << "\n";
    res.text = os.str();
    return res;
}

// --- property-r --------------------------------------------------------------

struct PropertyROptions {
    std::size_t g = 2, r = 2, i = 1, trials = 200;
};

Result run_property_r(const Common& c, const PropertyROptions& o) {
    Result res;
    const auto primes = run_primes(c);
    res.config = common_config(c, primes);
    res.config.update({{"g", o.g}, {"r", o.r}, {"i", o.i}, {"trials", o.trials}});
    nlohmann::json per = nlohmann::json::array();
    std::ostringstream os;
    for (std::size_t k = 0; k < primes.size(); ++k) {
        const PrimeField f(primes[k]);
        const HyperellipticCurve curve = random_hyperelliptic(f, o.g, derive_seed(c.seed, "curve", k));
        const PropertyRResult r = property_r_sample(curve, o.r, o.i, o.trials, derive_seed(c.seed, "trials", k));
        per.push_back({{"prime", primes[k]}, {"curve", curve.to_json()}, {"trials", r.trials},
                       {"vanishing", r.vanishing}, {"frequency", r.frequency()}});
        os << "p=" << primes[k] << ": vanishing frequency " << std::fixed << std::setprecision(3) << r.frequency() << " ("
           << r.vanishing << "/" << r.trials << ")\n";
    }
    res.outputs["samples"] = per;
    res.agreement = {{"primes", primes}};
    res.text = os.str();
    return res;
}

// --- gonal -------------------------------------------------------------------

struct GonalOptions {
    std::size_t g = 2, r = 2, gamma = 12, samples = 5;
};

Result run_gonal(const Common& c, const GonalOptions& o) {
    Result res;
    const auto primes = run_primes(c);
    res.config = common_config(c, primes);
    res.config.update({{"g", o.g}, {"r", o.r}, {"gamma", o.gamma}, {"samples", o.samples}});
    nlohmann::json per = nlohmann::json::array();
    std::ostringstream os;
    for (std::size_t k = 0; k < primes.size(); ++k) {
        const PrimeField f(primes[k]);
        const HyperellipticCurve curve = random_hyperelliptic(f, o.g, derive_seed(c.seed, "curve", k));
        std::size_t vanish = 0;
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t s = 0; s < o.samples; ++s) {
            Rng rng(derive_seed(c.seed, "gamma", k * 1000 + s));
            const GonalRows gr = gonal_betti_rows(curve, o.r, random_effective_divisor(curve, o.gamma, rng));
            if (!gr.differences_match()) res.violations.push_back("gonal-difference: sample " + std::to_string(s));
            vanish += gr.products_vanish() ? 1 : 0;
            rows.push_back(gr.to_json());
            if (k == 0 && s == 0) {
                os << "u=" << gr.u << " delta=(" << join(gr.delta) << ")\n";
                for (std::size_t i = 0; i <= o.r; ++i)
                    os << "i=" << i << ": b[" << i + 1 << "][" << gr.u - 1 << "]=" << gr.upper[i] << " b[" << i << "][" << gr.u
                       << "]=" << gr.lower[i] << "\n";
            }
        }
        per.push_back({{"prime", primes[k]}, {"curve", curve.to_json()}, {"rows", rows}, {"products_vanish", vanish}});
        os << "p=" << primes[k] << ": products vanish on " << vanish << "/" << o.samples << " samples\n";
    }
    res.outputs["runs"] = per;
    res.agreement = {{"primes", primes}};
    res.text = os.str();
    return res;
}

// --- chow --------------------------------------------------------------------

struct ChowOptions {
    CurveOptions curve{"twisted-cubic", 3, 0, {}};
    std::size_t samples = 100;
    bool listing = false;
};

Result run_chow(const Common& c, const ChowOptions& o) {
    Result res;
    const auto primes = run_primes(c);
    res.config = common_config(c, primes);
    res.config.update(curve_config(o.curve));
    res.config["samples"] = o.samples;
    nlohmann::json per = nlohmann::json::array();
    std::ostringstream os;
    bool all_ok = true;
    for (std::size_t k = 0; k < primes.size(); ++k) {
        const PrimeField f(primes[k]);
        UlrichModuleData data;
        std::optional<ChowTarget> target;
        const std::string& kind = o.curve.kind;
        if (kind.rfind("quadric", 0) == 0) {
            std::vector<std::pair<int, int>> bd;
            if (kind == "quadric-01") bd = {{0, 1}};
            else if (kind == "quadric-10") bd = {{1, 0}};
            else bd = {{0, 1}, {1, 0}};
            data = quadric_data(f, bd);
            target = QuadricSurface{};
        } else {
            const ParametricCurve curve = make_curve(f, o.curve, c.seed);
            data = curve_line_bundle_data(curve, static_cast<int>(curve.d()) - 1);
            target = curve;
        }
        const UlrichReport cert = ulrich_certify(data);
        if (!cert.ulrich) throw std::invalid_argument("the sheaf is not Ulrich: " + cert.to_json().dump());
        const ChowMatrix cm = tate_phi(data, derive_seed(c.seed, "skew", k));
        const bool composite = tate_composite_is_zero(data, cm);
        if (!composite) res.violations.push_back("tate-composite: psi o phi != 0 at p = " + std::to_string(primes[k]));
        const ChowReport rep = chow_compare(cm, *target, o.samples, derive_seed(c.seed, "planes", k));
        if (!rep.ok()) res.violations.push_back("chow-agreement: " + std::to_string(rep.disagreements.size()) + " disagreements at p = " + std::to_string(primes[k]));
        all_ok = all_ok && rep.ok() && composite;
        per.push_back({{"prime", primes[k]}, {"certificate", cert.to_json()}, {"matrix", cm.to_json()},
                       {"composite_zero", composite}, {"report", rep.to_json()}});
        if (k == 0 && o.listing) os << cm.listing();
        os << "p=" << primes[k] << ": " << cm.size << "x" << cm.size << (cm.skew ? " skew" : "") << " matrix, psi o phi = 0: "
           << yes_no(composite) << ", " << rep.agreements << "/" << rep.samples << " agree with the oracle, "
           << rep.vanishing << " vanishing, ratio constant: " << yes_no(rep.ratio_constant) << "\n";
    }
    res.outputs["runs"] = per;
    res.agreement = {{"primes", primes}, {"all_ok", all_ok}};
    res.text = os.str();
    return res;
}

// --- oracle-compare ----------------------------------------------------------

struct OracleOptions {
    std::size_t r = 2, gamma = 8, instances = 1;
};

Result run_oracle_compare(const Common& c, const OracleOptions& o) {
    Result res;
    const auto primes = run_primes(c);
    res.config = common_config(c, primes);
    res.config.update({{"r", o.r}, {"gamma", o.gamma}, {"instances", o.instances}});
    nlohmann::json per = nlohmann::json::array();
    std::size_t matches = 0;
    std::ostringstream os;
    for (std::size_t k = 0; k < primes.size(); ++k) {
        const PrimeField f(primes[k]);
        for (std::size_t i = 0; i < o.instances; ++i) {
            const std::uint64_t s = derive_seed(c.seed, "points", k * 1000 + i);
            const PointSet pts = random_point_set(f, o.r, o.gamma, s);
            const BettiTable a = betti_table(pts);
            const BettiTable b = brute_force_betti(pts);
            const bool same = a.same_entries(b);
            matches += same ? 1 : 0;
            if (!same) res.violations.push_back("oracle-equivalence: p = " + std::to_string(primes[k]) + ", instance " + std::to_string(i));
            per.push_back({{"prime", primes[k]}, {"seed", s}, {"koszul", a.to_json()}, {"oracle", b.to_json()}, {"match", same}});
            if (k == 0 && i == 0) os << render_betti(a);
        }
    }
    os << "koszul vs free resolution: " << matches << "/" << primes.size() * o.instances << " match\n";
    res.outputs["instances"] = per;
    res.agreement = {{"primes", primes}, {"matches", matches}};
    res.text = os.str();
    return res;
}

std::string utc_stamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Betti tables of points on curves, minimal resolution predictions and Chow forms"};
    app.set_version_flag("--version", std::string(BETTILAB_VERSION));
    app.require_subcommand(1, 1);

    Common common;
    const auto add_common = [&](CLI::App* sub, bool with_primes) {
        sub->add_option("--seed", common.seed, "master seed")->capture_default_str();
        if (with_primes) sub->add_option("--primes", common.primes, "number of random 31-bit primes")->check(CLI::Range(1, 8))->capture_default_str();
        sub->add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
        sub->add_flag("--no-store", common.no_store, "do not write a run record");
        sub->add_flag("--stamp", common.stamp, "include a wall-clock timestamp in the run record");
        sub->add_option("--store", common.store, "run store directory (default $BETTILAB_RUN_STORE or ./runs)");
    };
    const std::vector<std::string> curve_kinds{"rnc", "twisted-cubic", "random", "monomial"};

    PredictOptions predict_o;
    auto* predict_cmd = app.add_subcommand("predict", "closed-form rows u-1, u and the IGC count");
    predict_cmd->add_option("--g", predict_o.g, "genus")->check(CLI::NonNegativeNumber)->capture_default_str();
    predict_cmd->add_option("--r", predict_o.r, "ambient dimension")->check(CLI::PositiveNumber)->capture_default_str();
    predict_cmd->add_option("--d", predict_o.d, "degree")->check(CLI::PositiveNumber)->capture_default_str();
    predict_cmd->add_option("--gamma", predict_o.gamma, "number of points")->check(CLI::NonNegativeNumber)->capture_default_str();
    predict_cmd->add_option("--reg", predict_o.reg, "regularity of the curve's ideal, if known");
    add_common(predict_cmd, false);

    BettiOptions betti_o;
    auto* betti_cmd = app.add_subcommand("betti", "Betti table of a point set");
    betti_cmd->add_option("--points", betti_o.points_file, "JSON point set file")->check(CLI::ExistingFile);
    betti_cmd->add_option("--source", betti_o.source, "random points or points on a curve")->check(CLI::IsMember({"random", "curve"}))->capture_default_str();
    add_curve_options(betti_cmd, betti_o.curve, curve_kinds);
    betti_cmd->add_option("--gamma", betti_o.gamma, "number of points")->capture_default_str();
    add_common(betti_cmd, true);

    MrcOptions mrc_o;
    auto* mrc_cmd = app.add_subcommand("mrc-check", "compare a computed table against the prediction");
    add_curve_options(mrc_cmd, mrc_o.curve, curve_kinds);
    mrc_cmd->add_option("--gamma", mrc_o.gamma, "number of points")->capture_default_str();
    add_common(mrc_cmd, true);

    CurveOptions split_o;
    auto* split_cmd = app.add_subcommand("splitting", "splitting type of a rational curve");
    add_curve_options(split_cmd, split_o, curve_kinds);
    add_common(split_cmd, true);

    PropertyROptions pr_o;
    auto* pr_cmd = app.add_subcommand("property-r", "vanishing frequency for random twists on a hyperelliptic curve");
    pr_cmd->add_option("--g", pr_o.g, "genus")->check(CLI::PositiveNumber)->capture_default_str();
    pr_cmd->add_option("--r", pr_o.r, "ambient dimension")->check(CLI::PositiveNumber)->capture_default_str();
    pr_cmd->add_option("--i", pr_o.i, "exterior power")->check(CLI::PositiveNumber)->capture_default_str();
    pr_cmd->add_option("--trials", pr_o.trials, "number of trials")->capture_default_str();
    add_common(pr_cmd, true);

    GonalOptions gonal_o;
    auto* gonal_cmd = app.add_subcommand("gonal", "rows u-1, u of the hyperelliptic construction");
    gonal_cmd->add_option("--g", gonal_o.g, "genus")->check(CLI::PositiveNumber)->capture_default_str();
    gonal_cmd->add_option("--r", gonal_o.r, "ambient dimension")->check(CLI::PositiveNumber)->capture_default_str();
    gonal_cmd->add_option("--gamma", gonal_o.gamma, "number of points")->check(CLI::PositiveNumber)->capture_default_str();
    gonal_cmd->add_option("--samples", gonal_o.samples, "divisor samples per prime")->check(CLI::PositiveNumber)->capture_default_str();
    add_common(gonal_cmd, true);

    ChowOptions chow_o;
    auto* chow_cmd = app.add_subcommand("chow", "Chow form from an Ulrich sheaf, checked against the oracle");
    add_curve_options(chow_cmd, chow_o.curve,
                      {"rnc", "twisted-cubic", "random", "monomial", "quadric-01", "quadric-10", "quadric-sum"});
    chow_cmd->add_option("--samples", chow_o.samples, "random planes per prime")->capture_default_str();
    chow_cmd->add_flag("--listing", chow_o.listing, "print the matrix of linear forms");
    add_common(chow_cmd, true);

    OracleOptions oracle_o;
    auto* oracle_cmd = app.add_subcommand("oracle-compare", "Koszul engine against an explicit free resolution");
    oracle_cmd->add_option("--r", oracle_o.r, "ambient dimension")->check(CLI::Range(1, 3))->capture_default_str();
    oracle_cmd->add_option("--gamma", oracle_o.gamma, "number of points")->check(CLI::Range(1, 30))->capture_default_str();
    oracle_cmd->add_option("--instances", oracle_o.instances, "point sets per prime")->capture_default_str();
    add_common(oracle_cmd, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << BETTILAB_VERSION << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    Result res;
    try {
        if (name == "predict") res = run_predict(predict_o);
        else if (name == "betti") res = run_betti(common, betti_o);
        else if (name == "mrc-check") res = run_mrc_check(common, mrc_o);
        else if (name == "splitting") res = run_splitting(common, split_o);
        else if (name == "property-r") res = run_property_r(common, pr_o);
        else if (name == "gonal") res = run_gonal(common, gonal_o);
        else if (name == "chow") res = run_chow(common, chow_o);
        else res = run_oracle_compare(common, oracle_o);
    } catch (const InvariantViolation& e) {
        err << "invariant violated: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal failure: " << e.what() << "\n";
        return 1;
    }

    nlohmann::json record = {{"tool", "bettilab"},
                             {"version", BETTILAB_VERSION},
                             {"command", name},
                             {"config", res.config},
                             {"outputs", res.outputs},
                             {"agreement", res.agreement},
                             {"violations", res.violations}};
    if (common.stamp) record["timestamp"] = utc_stamp();

    if (common.format == "json") {
        out << record.dump(2) << "\n";
    } else if (common.format == "csv") {
        if (res.csv.empty()) {
            err << "error: --format csv applies to commands that produce a Betti table\n";
            return 2;
        }
        out << res.csv;
    } else {
        out << res.text;
    }

    if (!common.no_store) {
        try {
            const auto path = store_run(record, common.store.empty() ? default_run_store() : std::filesystem::path(common.store));
            err << "run record: " << path.string() << "\n";
        } catch (const std::exception& e) {
            err << "internal failure: " << e.what() << "\n";
            return 1;
        }
    }
    if (!res.violations.empty()) {
        for (const auto& v : res.violations) err << "invariant violated: " << v << "\n";
        return 1;
    }
    return 0;
}

} // namespace bettilab
