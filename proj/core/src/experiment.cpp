#include "gausswidth/experiment.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <future>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gausswidth/assemble.hpp"
#include "gausswidth/csv.hpp"
#include "gausswidth/norms.hpp"
#include "gausswidth/rate_fit.hpp"
#include "gausswidth/test_functions.hpp"
#include "gausswidth/widths.hpp"

namespace gw {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& msg) {
    throw std::invalid_argument("experiment config: " + msg);
}

double jnum(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        bad(std::string("'") + key + "' (number) is required");
    return j.at(key).get<double>();
}

int jint(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        bad(std::string("'") + key + "' (integer) is required");
    return j.at(key).get<int>();
}

std::string jstr(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string())
        bad(std::string("'") + key + "' (string) is required");
    return j.at(key).get<std::string>();
}

struct Verdict {
    std::string name;
    bool pass = false;
    std::string detail;
};

// generic constraint schema evaluated against the kind's metric map
std::vector<Verdict> run_checks(const json& cfg,
                                const std::map<std::string, double>& metrics) {
    std::vector<Verdict> out;
    if (!cfg.contains("checks")) return out;
    const json& cs = cfg.at("checks");
    if (!cs.is_object()) bad("'checks' must be an object");
    for (auto it = cs.begin(); it != cs.end(); ++it) {
        Verdict v;
        v.name = it.key();
        const json& c = it.value();
        std::string metric = c.value("metric", "");
        auto mit = metrics.find(metric);
        if (mit == metrics.end()) {
            v.detail = "unknown metric '" + metric + "'";
            out.push_back(v);
            continue;
        }
        double val = mit->second;
        std::string d = metric + "=" + CsvWriter::num(val);
        bool pass = true, constrained = false;
        if (c.contains("max")) {
            constrained = true;
            double t = c.at("max").get<double>();
            pass = pass && val <= t;
            d += " max=" + CsvWriter::num(t);
        }
        if (c.contains("min")) {
            constrained = true;
            double t = c.at("min").get<double>();
            pass = pass && val >= t;
            d += " min=" + CsvWriter::num(t);
        }
        if (c.contains("target")) {
            constrained = true;
            double t = c.at("target").get<double>();
            d += " target=" + CsvWriter::num(t);
            if (c.contains("rel_tol")) {
                double rt = c.at("rel_tol").get<double>();
                pass = pass && std::abs(val - t) <= rt * std::abs(t);
                d += " rel_tol=" + CsvWriter::num(rt);
            } else if (c.contains("abs_tol")) {
                double at = c.at("abs_tol").get<double>();
                pass = pass && std::abs(val - t) <= at;
                d += " abs_tol=" + CsvWriter::num(at);
            } else {
                bad("check '" + v.name + "': target needs rel_tol or abs_tol");
            }
        }
        if (c.contains("expect")) {
            constrained = true;
            bool e = c.at("expect").get<bool>();
            pass = pass && ((val != 0.0) == e);
            d += e ? " expect=true" : " expect=false";
        }
        if (!constrained) bad("check '" + v.name + "' has no constraint");
        v.pass = pass;
        v.detail = d;
        out.push_back(v);
    }
    return out;
}

IntegratorConfig integrator_from(const json& cfg, std::uint64_t seed) {
    IntegratorConfig icfg;
    icfg.seed = seed;
    icfg.points = cfg.value("points", 20000);
    icfg.kind = cfg.value("integrator", std::string("mc")) == "quad"
                    ? IntegratorConfig::Kind::TensorQuadrature
                    : IntegratorConfig::Kind::MonteCarlo;
    icfg.radial.r_min = cfg.value("r_min", icfg.radial.r_min);
    icfg.radial.r_max = cfg.value("r_max", icfg.radial.r_max);
    icfg.radial.shells = cfg.value("shells", icfg.radial.shells);
    return icfg;
}

void run_spectral(const json& cfg, ExperimentReport& rep,
                  std::map<std::string, double>& metrics, ojson& params) {
    double s = jnum(cfg, "s");
    int dim = jint(cfg, "dim");
    std::vector<std::uint64_t> ns;
    if (cfg.contains("n_list")) {
        for (const auto& v : cfg.at("n_list")) ns.push_back(v.get<std::uint64_t>());
    } else if (cfg.contains("r_max")) {
        int rmax = jint(cfg, "r_max");
        for (int r = 1; r <= rmax; ++r) ns.push_back(count_ball(r, dim));
    } else {
        bad("spectral needs 'n_list' or 'r_max'");
    }
    if (ns.empty()) bad("empty n list");
    WidthCurve curve = width_curve_exact(s, dim, ns);
    CsvWriter csv({"s", "dim", "n", "sigma_n", "normalized", "limit_constant"});
    for (const auto& pt : curve.points)
        csv.add_row({CsvWriter::num(s), CsvWriter::num(static_cast<long long>(dim)),
                     CsvWriter::num(pt.n), CsvWriter::num(pt.sigma_n),
                     CsvWriter::num(pt.normalized),
                     CsvWriter::num(curve.limit_constant)});
    rep.csv_text = csv.text();
    double mono = 1.0;
    for (std::size_t i = 1; i < curve.points.size(); ++i)
        if (curve.points[i].n > curve.points[i - 1].n &&
            curve.points[i].sigma_n > curve.points[i - 1].sigma_n)
            mono = 0.0;
    metrics["limit_constant"] = curve.limit_constant;
    metrics["last_normalized"] = curve.points.back().normalized;
    metrics["limit_rel_gap"] =
        std::abs(curve.points.back().normalized / curve.limit_constant - 1.0);
    metrics["sigma_monotone"] = mono;
    params = {{"s", s}, {"dim", dim}, {"n_count", ns.size()}};
}

void run_assemble_rate(const json& cfg, ExperimentReport& rep,
                       std::map<std::string, double>& metrics, ojson& params,
                       std::uint64_t seed) {
    double p = jnum(cfg, "p"), q = jnum(cfg, "q"), s = jnum(cfg, "s");
    int dim = jint(cfg, "dim");
    std::string space = cfg.value("space_flavor", std::string("isotropic"));
    SpaceFlavor flavor;
    if (space == "isotropic")
        flavor = SpaceFlavor::Isotropic;
    else if (space == "gauss-gagliardo")
        flavor = SpaceFlavor::GaussGagliardo;
    else if (space == "mixed")
        flavor = SpaceFlavor::Mixed;
    else
        bad("space_flavor must be isotropic | gauss-gagliardo | mixed");
    std::string opname = cfg.value("operator", std::string("sampling"));
    int spline_order = cfg.value("spline_order", 3);
    double theta = cfg.value("theta", 1.5);
    int kappa = cfg.value("kappa", 2);
    std::string fid = jstr(cfg, "function");
    int esamples = cfg.value("error_samples", 4000);
    if (!cfg.contains("n_list") || !cfg.at("n_list").is_array())
        bad("'n_list' (array) is required");
    std::vector<long long> ns;
    for (const auto& v : cfg.at("n_list")) ns.push_back(v.get<long long>());
    if (ns.empty()) bad("empty n_list");

    TestFunction f = test_function(fid, dim);
    AuxParams aux = choose_aux_params(p, q, s, dim, flavor);
    PartitionOfUnity part = build_partition(theta, dim, kappa);
    LocalOperator lop;
    if (opname == "linear" || opname == "fourier")
        lop = local_fourier_operator();
    else if (opname == "sampling" || opname == "spline")
        lop = local_spline_sampler_operator(spline_order);
    else
        bad("operator must be linear|fourier or sampling|spline");

    struct Row {
        long long n = 0, rank = 0;
        double err = 0.0, se = 0.0;
    };
    auto one = [&](std::size_t i) {
        Row row;
        row.n = ns[i];
        AssembledOperator A = assemble(f.eval, ns[i], part, aux, lop);
        row.rank = A.total_rank();
        TestFunction resid;
        resid.dim = dim;
        resid.eval = [&f, &A](std::span<const double> x) {
            return f.eval(x) - A(x);
        };
        IntegratorConfig icfg;
        icfg.points = esamples;
        icfg.seed = seed * 1000003ull + i; // per-n substream, still reproducible
        NormEstimate e = lp_gamma_norm(resid, q, icfg);
        row.err = e.value;
        row.se = e.std_error;
        return row;
    };
    // n entries are independent; run them concurrently, report in order
    std::vector<std::future<Row>> futs;
    futs.reserve(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i)
        futs.push_back(std::async(std::launch::async, one, i));
    std::vector<Row> rows;
    rows.reserve(ns.size());
    for (auto& fu : futs) rows.push_back(fu.get());

    CsvWriter csv({"p", "q", "s", "dim", "space_flavor", "operator", "function",
                   "n", "rank", "error_lq", "stderr"});
    std::vector<std::pair<double, double>> pts;
    double rank_excess = -std::numeric_limits<double>::infinity();
    for (const auto& r : rows) {
        csv.add_row({CsvWriter::num(p), CsvWriter::num(q), CsvWriter::num(s),
                     CsvWriter::num(static_cast<long long>(dim)), space, opname,
                     fid, CsvWriter::num(r.n), CsvWriter::num(r.rank),
                     CsvWriter::num(r.err), CsvWriter::num(r.se)});
        if (r.err > 0.0 && std::isfinite(r.err))
            pts.emplace_back(static_cast<double>(r.n), r.err);
        rank_excess =
            std::max(rank_excess, static_cast<double>(r.rank - r.n));
    }
    rep.csv_text = csv.text();
    metrics["rank_excess"] = rank_excess;
    metrics["target_a"] = aux.a;
    metrics["target_b"] = aux.b;
    metrics["delta"] = aux.delta;
    if (pts.size() >= 4) {
        RateFit fit = rate_fit(pts, std::max(200, cfg.value("bootstrap", 200)),
                               seed);
        metrics["slope"] = fit.slope;
        metrics["r_squared"] = fit.r_squared;
        metrics["slope_lo90"] = fit.slope_lo90;
        metrics["slope_hi90"] = fit.slope_hi90;
    }
    params = {{"p", p},           {"q", q},
              {"s", s},           {"dim", dim},
              {"space_flavor", space}, {"operator", opname},
              {"function", fid},  {"theta", theta},
              {"kappa", kappa},   {"error_samples", esamples}};
}

void run_norms(const json& cfg, ExperimentReport& rep,
               std::map<std::string, double>& metrics, ojson& params,
               std::uint64_t seed) {
    std::string fid = jstr(cfg, "function");
    int dim = jint(cfg, "dim");
    std::string space = jstr(cfg, "space");
    // accept the short space ids used by the norms tool
    if (space == "Wsp") space = "gagliardo-cube";
    if (space == "WspG") space = "gagliardo-gauss";
    if (space == "Wkernel") space = "kernel";
    if (space == "mixed") space = "mixed-cube";
    double s = cfg.value("s", 1.0);
    double p = jnum(cfg, "p");
    IntegratorConfig icfg = integrator_from(cfg, seed);
    Cube cube{cfg.value("cube_lo", 0.0), cfg.value("cube_hi", 1.0)};
    TestFunction f = test_function(fid, dim);
    NormEstimate est;
    if (space == "lp")
        est = lp_gamma_norm(f, p, icfg);
    else if (space == "sobolev")
        est = sobolev_norm_integer(f, static_cast<int>(std::llround(s)), p, icfg);
    else if (space == "gagliardo-cube")
        est = gagliardo_seminorm_cube(f, s, p, cube, icfg);
    else if (space == "gagliardo-gauss")
        est = gagliardo_seminorm_gauss(f, s, p, icfg);
    else if (space == "kernel")
        est = kernel_seminorm_gauss(f, s, p, icfg);
    else if (space == "mixed-cube")
        est = mixed_seminorm(f, s, p, MixedFlavor::CubeGagliardo, cube, icfg);
    else if (space == "mixed-kernel")
        est = mixed_seminorm(f, s, p, MixedFlavor::GaussKernel, cube, icfg);
    else
        bad("space must be lp | sobolev | gagliardo-cube | gagliardo-gauss | "
            "kernel | mixed-cube | mixed-kernel");
    CsvWriter csv(
        {"function", "space", "s", "p", "points", "value", "stderr", "diverged"});
    csv.add_row({fid, space, CsvWriter::num(s), CsvWriter::num(p),
                 CsvWriter::num(static_cast<long long>(icfg.points)),
                 CsvWriter::num(est.value), CsvWriter::num(est.std_error),
                 est.diverged ? "1" : "0"});
    rep.csv_text = csv.text();
    metrics["value"] = est.value;
    metrics["std_error"] = est.std_error;
    metrics["diverged"] = est.diverged ? 1.0 : 0.0;
    params = {{"function", fid}, {"space", space}, {"s", s},
              {"p", p},          {"dim", dim},     {"points", icfg.points}};
}

void run_kernel(const json& cfg, ExperimentReport& rep,
                std::map<std::string, double>& metrics, ojson& params) {
    int dim = jint(cfg, "dim");
    std::vector<double> sigmas;
    if (cfg.contains("sigma") && cfg.at("sigma").is_array())
        for (const auto& v : cfg.at("sigma")) sigmas.push_back(v.get<double>());
    else
        sigmas.push_back(jnum(cfg, "sigma"));
    std::vector<std::pair<std::vector<double>, std::vector<double>>> pairs;
    if (cfg.contains("dists")) {
        for (const auto& v : cfg.at("dists")) {
            std::vector<double> x(dim, 0.0), y(dim, 0.0);
            y[0] = v.get<double>();
            pairs.emplace_back(x, y);
        }
    }
    if (cfg.contains("pairs")) {
        for (const auto& pr : cfg.at("pairs")) {
            auto x = pr.at("x").get<std::vector<double>>();
            auto y = pr.at("y").get<std::vector<double>>();
            if (static_cast<int>(x.size()) != dim ||
                static_cast<int>(y.size()) != dim)
                bad("pair dimension mismatch");
            pairs.emplace_back(x, y);
        }
    }
    if (pairs.empty()) bad("kernel needs 'dists' or 'pairs'");
    KernelEvalConfig kcfg;
    kcfg.rel_tol = cfg.value("rel_tol", kcfg.rel_tol);
    kcfg.t_split = cfg.value("t_split", kcfg.t_split);

    auto joined = [](const std::vector<double>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ';';
            s += CsvWriter::num(v[i]);
        }
        return s;
    };
    CsvWriter csv(
        {"sigma", "x", "y", "dist", "K_value", "lower_bound", "ratio"});
    double min_ratio = std::numeric_limits<double>::infinity();
    for (double sg : sigmas)
        for (const auto& [x, y] : pairs) {
            double d2 = 0.0;
            for (int j = 0; j < dim; ++j)
                d2 += (x[j] - y[j]) * (x[j] - y[j]);
            double dist = std::sqrt(d2);
            double K = k_sigma(sg, x, y, kcfg);
            double lb = k_sigma_lower_bound(sg, dim, dist);
            double ratio = K / lb;
            min_ratio = std::min(min_ratio, ratio);
            csv.add_row({CsvWriter::num(sg), joined(x), joined(y),
                         CsvWriter::num(dist), CsvWriter::num(K),
                         CsvWriter::num(lb), CsvWriter::num(ratio)});
        }
    rep.csv_text = csv.text();
    metrics["min_ratio"] = min_ratio;
    metrics["pair_count"] = static_cast<double>(pairs.size() * sigmas.size());
    params = {{"dim", dim},
              {"sigma_count", sigmas.size()},
              {"pair_count", pairs.size()}};
}

void run_counterexample(const json& cfg, ExperimentReport& rep,
                        std::map<std::string, double>& metrics, ojson& params) {
    int m = jint(cfg, "m"), dim = jint(cfg, "dim");
    double p = jnum(cfg, "p"), q = jnum(cfg, "q");
    if (!cfg.contains("radii") || !cfg.at("radii").is_array())
        bad("'radii' (array) is required");
    std::vector<double> radii;
    for (const auto& v : cfg.at("radii")) radii.push_back(v.get<double>());
    if (radii.size() < 2) bad("need at least two radii");
    auto scan = embedding_counterexample_scan(m, p, q, dim, radii);
    CsvWriter csv({"m", "p", "q", "dim", "R", "value"});
    for (const auto& [R, v] : scan)
        csv.add_row({CsvWriter::num(static_cast<long long>(m)),
                     CsvWriter::num(p), CsvWriter::num(q),
                     CsvWriter::num(static_cast<long long>(dim)),
                     CsvWriter::num(R), CsvWriter::num(v)});
    rep.csv_text = csv.text();
    metrics["growth_ratio"] = scan.back().second / scan.front().second;
    std::size_t k = scan.size();
    metrics["tail_rel_change"] =
        std::abs(scan[k - 1].second - scan[k - 2].second) / scan[k - 2].second;
    params = {{"m", m}, {"p", p}, {"q", q}, {"dim", dim},
              {"radius_count", radii.size()}};
}

} // namespace

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return {ss.str()};
}

ExperimentConfig ExperimentConfig::from_string(const std::string& text) {
    return {text};
}

ExperimentReport run(const ExperimentConfig& cfg) {
    json j;
    try {
        j = json::parse(cfg.json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") +
                                    e.what());
    }
    std::string kind = jstr(j, "kind");
    if (kind == "spectral-width") kind = "spectral";
    if (kind == "norm-check") kind = "norms";
    if (kind == "kernel-check") kind = "kernel";
    std::uint64_t seed = j.value("seed", 1);

    ExperimentReport rep;
    rep.kind = kind;
    std::map<std::string, double> metrics;
    ojson params;
    if (kind == "spectral")
        run_spectral(j, rep, metrics, params);
    else if (kind == "assemble-rate")
        run_assemble_rate(j, rep, metrics, params, seed);
    else if (kind == "norms")
        run_norms(j, rep, metrics, params, seed);
    else if (kind == "kernel")
        run_kernel(j, rep, metrics, params);
    else if (kind == "counterexample")
        run_counterexample(j, rep, metrics, params);
    else
        bad("unknown kind '" + kind + "'");

    auto verdicts = run_checks(j, metrics);
    ojson summary;
    summary["kind"] = kind;
    summary["seed"] = seed;
    summary["params"] = params;
    ojson mj = ojson::object();
    for (const auto& [k, v] : metrics) {
        if (std::isfinite(v))
            mj[k] = v;
        else
            mj[k] = CsvWriter::num(v); // JSON has no inf/nan; keep it readable
    }
    summary["metrics"] = mj;
    ojson cj = ojson::object();
    for (const auto& v : verdicts) {
        cj[v.name] = {{"pass", v.pass}, {"detail", v.detail}};
        rep.check_lines.push_back((v.pass ? "pass " : "fail ") + v.name + ": " +
                                  v.detail);
        rep.all_passed = rep.all_passed && v.pass;
    }
    summary["checks"] = cj;
    summary["all_passed"] = rep.all_passed;
    rep.summary_json = summary.dump(2) + "\n";
    return rep;
}

ExperimentReport run_and_write(const ExperimentConfig& cfg) {
    ExperimentReport rep = run(cfg);
    json j = json::parse(cfg.json_text);
    std::string output = j.value("output", std::string());
    if (!output.empty()) {
        std::ofstream csv(output + ".csv", std::ios::binary);
        if (!csv) throw std::runtime_error("cannot write " + output + ".csv");
        csv << rep.csv_text;
        std::ofstream sum(output + ".json", std::ios::binary);
        if (!sum) throw std::runtime_error("cannot write " + output + ".json");
        sum << rep.summary_json;
    }
    return rep;
}

} // namespace gw
