#include <cstdlib>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "motstats/acceptance.hpp"
#include "motstats/config_spaces.hpp"
#include "motstats/euler.hpp"
#include "motstats/ffverify.hpp"
#include "motstats/motring.hpp"
#include "motstats/serialize.hpp"
#include "motstats/theorems.hpp"
#include "motstats/witt.hpp"

using namespace motstats;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDivergent = 3;

struct Output {
    std::string format = "pretty";
    json data = json::object();
    // human strings keyed like data, rendered in pretty mode when present
    std::vector<std::pair<std::string, std::string>> pretty;

    void put(const std::string& key, json value) { data[key] = std::move(value); }
    void put(const std::string& key, json value, std::string rendered) {
        data[key] = std::move(value);
        pretty.emplace_back(key, std::move(rendered));
    }

    void csv_row(std::ostream& os, const std::string& key, const json& v) const {
        if (v.is_object() || v.is_array()) {
            os << key << "," << v.dump() << "\n";
        } else if (v.is_string()) {
            os << key << "," << v.get<std::string>() << "\n";
        } else {
            os << key << "," << v.dump() << "\n";
        }
    }

    void emit(std::ostream& os) const {
        if (format == "json") {
            os << data.dump(2) << "\n";
            return;
        }
        if (format == "csv") {
            for (const auto& [key, v] : data.items()) csv_row(os, key, v);
            return;
        }
        // pretty: prefer rendered strings, fall back to compact JSON
        for (const auto& [key, v] : data.items()) {
            std::string rendered;
            for (const auto& [k, r] : pretty)
                if (k == key) rendered = r;
            os << key << ": " << (rendered.empty() ? v.dump() : rendered) << "\n";
        }
    }
};

json load_json(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw CLI::ValidationError("cannot open file " + arg.substr(1));
        return json::parse(in);
    }
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw CLI::ValidationError("cannot open file " + arg);
    return json::parse(in);
}

LClass parse_class(const std::string& arg) {
    if (arg == "A1") return LClass::L(1);
    if (arg == "P1") return projective_class(1);
    if (arg == "P2") return projective_class(2);
    if (arg == "P3") return projective_class(3);
    if (arg == "GL2") return gl_class(1);
    return lclass_from_json(load_json(arg));
}

int class_dim(const std::string& arg) {
    if (arg == "A1" || arg == "P1") return 1;
    if (arg == "P2") return 2;
    if (arg == "P3") return 3;
    if (arg == "GL2") return 4;
    LClass c = parse_class(arg);
    auto d = c.dim();
    return d ? static_cast<int>(*d) : 0;
}

GroupMultiset parse_groups(const std::string& arg) { return multiset_from_json(json::parse(arg)); }

json filtered_json(const FilteredClass& c) { return to_json(c); }

std::string series_pretty(const TSeries& s) {
    std::ostringstream os;
    os << s.str();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"motivic statistics engine"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    long floor = -20;
    app.add_option("--floor", floor, "precision floor (keep exponents above this)");
    int maxdeg = 10;
    app.add_option("--maxdeg", maxdeg, "series truncation degree");
    std::string q_str = "2";
    app.add_option("--q", q_str, "prime power / rational evaluation point");
    uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for randomized suites");
    int threads = 1;
    app.add_option("--threads", threads, "worker threads (reserved)");
    std::string budget;
    app.add_option("--budget", budget, "enumeration budget (overrides MOTSTATS_FF_BUDGET)");

    // class ------------------------------------------------------------
    auto* cls = app.add_subcommand("class", "Grothendieck-class arithmetic");
    std::string cls_space, cls_mul, cls_add;
    int cls_gl = -1, cls_p1smooth = -1, cls_pow = 1;
    std::vector<int> cls_lnk;
    cls->add_option("--space", cls_space, "named preset or JSON class");
    cls->add_option("--gl", cls_gl, "class of GL_{n+1} (invertible matrices)");
    cls->add_option("--lnk", cls_lnk, "n k: product of (1 - L^{-n+j}), j < k")->expected(2);
    cls->add_option("--p1-smooth", cls_p1smooth, "class of smooth degree-d binary forms");
    cls->add_option("--mul", cls_mul, "multiply by this class");
    cls->add_option("--add", cls_add, "add this class");
    cls->add_option("--pow", cls_pow, "raise to this power");

    // zeta ---------------------------------------------------------------
    auto* zeta = app.add_subcommand("zeta", "Kapranov zeta functions");
    auto* zeta_kap = zeta->add_subcommand("kapranov", "series coefficients");
    std::string zk_space = "P1";
    int zk_m = -1;
    zeta_kap->add_option("--space", zk_space, "base class");
    zeta_kap->add_option("--m", zk_m, "restrict to cycles supported on exactly m points");
    auto* zeta_special = zeta->add_subcommand("special", "special value at L^{-N}");
    std::string zs_space = "P1";
    long zs_N = 2;
    zeta_special->add_option("--space", zs_space, "base class");
    zeta_special->add_option("--N", zs_N, "evaluate at t = L^{-N}");

    // conf ---------------------------------------------------------------
    auto* conf = app.add_subcommand("conf", "configuration-space classes");
    std::string conf_space = "P1", conf_groups = "[1]";
    conf->add_option("--space", conf_space, "ambient class");
    conf->add_option("--groups", conf_groups, "group sizes, JSON array");

    // euler ----------------------------------------------------------------
    auto* euler = app.add_subcommand("euler", "motivic Euler products");
    auto* euler_expand = euler->add_subcommand("expand", "expand a product spec");
    std::string ee_spec;
    euler_expand->add_option("--spec", ee_spec, "JSON spec (inline or path)")->required();
    auto* euler_eval = euler->add_subcommand("evaluate", "evaluate at t_i = L^{-N_i}");
    std::string ev_spec, ev_N = "[2]";
    euler_eval->add_option("--spec", ev_spec, "JSON spec (inline or path)")->required();
    euler_eval->add_option("--N", ev_N, "exponents, JSON array");
    auto* euler_subst = euler->add_subcommand("substitute", "monomial substitution");
    std::string es_spec, es_matrix, es_twists, es_vars;
    euler_subst->add_option("--spec", es_spec, "JSON spec (inline or path)")->required();
    euler_subst->add_option("--matrix", es_matrix, "exponent matrix, JSON")->required();
    euler_subst->add_option("--twists", es_twists, "L-twists per variable, JSON")->required();
    euler_subst->add_option("--target-vars", es_vars, "target variable names, JSON")->required();

    // density ---------------------------------------------------------------
    auto* density = app.add_subcommand("density", "limit densities");
    auto* d_vw = density->add_subcommand("vakil-wood", "smooth hypersurface sections");
    std::string dv_space = "P1";
    int dv_dim = -1;
    d_vw->add_option("--space", dv_space, "ambient class");
    d_vw->add_option("--dim", dv_dim, "ambient dimension (default: inferred)");
    auto* d_ci = density->add_subcommand("complete-intersection", "smooth (n,k) intersections");
    int ci_n = 2, ci_k = 2;
    d_ci->add_option("--n", ci_n, "ambient projective dimension");
    d_ci->add_option("--k", ci_k, "codimension");
    auto* d_ms = density->add_subcommand("m-singular", "exactly-m-singular sections");
    std::string ms_space = "P2";
    int ms_dim = -1, ms_m = 0;
    d_ms->add_option("--space", ms_space, "ambient class");
    d_ms->add_option("--dim", ms_dim, "ambient dimension (default: inferred)");
    d_ms->add_option("--m", ms_m, "number of singular points");
    auto* d_sj = density->add_subcommand("surjection", "vector-bundle surjection density");
    int sj_n = 2;
    d_sj->add_option("--n", sj_n, "bundle rank parameter");

    // witt ----------------------------------------------------------------
    auto* witt = app.add_subcommand("witt", "Witt-ring analytics");
    auto* w_spec = witt->add_subcommand("specialize", "divisor of the zeta function at q");
    std::string ws_class = "P1";
    w_spec->add_option("--class", ws_class, "class to specialize");
    auto* w_ghost = witt->add_subcommand("ghost", "ghost coordinate");
    std::string wg_class = "P1";
    int wg_k = 1;
    w_ghost->add_option("--class", wg_class, "class to specialize");
    w_ghost->add_option("--k", wg_k, "ghost index");
    auto* w_sigma = witt->add_subcommand("sigma", "symmetric-power series in the Witt ring");
    std::string wsg_class = "P1";
    w_sigma->add_option("--class", wsg_class, "class to specialize");
    auto* w_dist = witt->add_subcommand("dist", "distances between divisors");
    std::string wd_f, wd_g;
    int wd_depth = kWittDistDepth;
    w_dist->add_option("--f", wd_f, "first divisor, JSON")->required();
    w_dist->add_option("--g", wd_g, "second divisor, JSON")->required();
    w_dist->add_option("--depth", wd_depth, "Taylor depth for the coefficient metric");
    auto* w_conj = witt->add_subcommand("conjecture-p1", "distances to the limiting divisor");
    int wc_d = 3;
    w_conj->add_option("--d", wc_d, "degree of the binary forms");

    // verify ----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "finite-field verification");
    auto* v_smooth = verify->add_subcommand("ff-smooth", "count smooth forms");
    int vs_n = 1, vs_d = 3;
    uint64_t vs_samples = 0;
    v_smooth->add_option("--n", vs_n, "ambient projective dimension (1 or 2)");
    v_smooth->add_option("--d", vs_d, "form degree");
    v_smooth->add_option("--samples", vs_samples, "sample instead of exhausting");
    auto* v_conf = verify->add_subcommand("ff-config", "count fixed configurations");
    std::string vc_preset = "P1", vc_groups = "[1]";
    int vc_k = 1;
    v_conf->add_option("--preset", vc_preset, "A1, P1 or P2");
    v_conf->add_option("--groups", vc_groups, "group sizes, JSON array");
    v_conf->add_option("--k", vc_k, "Frobenius power");
    auto* v_ie = verify->add_subcommand("inclusion-exclusion", "randomized identity check");
    int vie_count = 100, vie_kmax = 12;
    v_ie->add_option("--count", vie_count, "number of random maps");
    v_ie->add_option("--kmax", vie_kmax, "Frobenius powers checked");
    auto* v_pole = verify->add_subcommand("zeta-pole", "randomized pole-collapse check");
    int vp_count = 50, vp_kmax = 12;
    v_pole->add_option("--count", vp_count, "number of random sets");
    v_pole->add_option("--kmax", vp_kmax, "Frobenius powers checked");
    auto* v_suite = verify->add_subcommand("suite", "full verification battery");
    int suite_only = 0;
    v_suite->add_option("--only", suite_only, "run a single criterion");

    // accept the global flags after a subcommand as well
    std::function<void(CLI::App*)> allow_global = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough();
            allow_global(sub);
        }
    };
    allow_global(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (!budget.empty()) setenv("MOTSTATS_FF_BUDGET", budget.c_str(), 1);

    try {
        Rat q = rat_from_string(q_str);

        if (cls->parsed()) {
            LClass c;
            if (cls_gl >= 0) c = gl_class(cls_gl);
            else if (!cls_lnk.empty()) c = lnk(cls_lnk[0], cls_lnk[1]);
            else if (cls_p1smooth >= 0) c = p1_smooth_class(cls_p1smooth);
            else if (!cls_space.empty()) c = parse_class(cls_space);
            else throw CLI::ValidationError("class: choose one of --space/--gl/--lnk/--p1-smooth");
            if (!cls_mul.empty()) c *= parse_class(cls_mul);
            if (!cls_add.empty()) c += parse_class(cls_add);
            if (cls_pow != 1) c = c.pow(static_cast<unsigned long>(cls_pow));
            out.put("class", to_json(c), c.str());
            out.put("at_q", json(rat_to_string(evaluate_at_prime_power(c, q))));
        } else if (zeta_kap->parsed()) {
            LClass x = parse_class(zk_space);
            TSeries s = zk_m >= 0 ? kapranov_m(x, zk_m, maxdeg) : sigma_series(x, maxdeg);
            out.put("series", to_json(s), series_pretty(s));
        } else if (zeta_special->parsed()) {
            LClass x = parse_class(zs_space);
            SpecialValue sv = kapranov_special_value(x, zs_N);
            json factors = json::array();
            for (const auto& [e, m] : sv.factors)
                factors.push_back(json{{"exponent", e}, {"multiplicity", m.str()}});
            out.put("factors", factors);
            FilteredClass exp = sv.expansion(floor);
            out.put("expansion", filtered_json(exp), exp.str());
        } else if (conf->parsed()) {
            LClass x = parse_class(conf_space);
            LClass c = conf_class(x, parse_groups(conf_groups));
            out.put("class", to_json(c), c.str());
        } else if (euler_expand->parsed()) {
            EulerFactorSpec spec = euler_spec_from_json(load_json(ee_spec));
            TSeries s = expand(spec, maxdeg);
            out.put("series", to_json(s), series_pretty(s));
        } else if (euler_eval->parsed()) {
            EulerFactorSpec spec = euler_spec_from_json(load_json(ev_spec));
            std::vector<long> N = json::parse(ev_N).get<std::vector<long>>();
            FilteredClass v = evaluate_at(spec, N, floor);
            out.put("value", filtered_json(v), v.str());
        } else if (euler_subst->parsed()) {
            EulerFactorSpec spec = euler_spec_from_json(load_json(es_spec));
            TSeries s = expand(spec, maxdeg);
            TSeries r = substitute_monomial(
                s, json::parse(es_matrix).get<std::vector<std::vector<int>>>(),
                json::parse(es_twists).get<std::vector<long>>(),
                json::parse(es_vars).get<std::vector<std::string>>());
            out.put("series", to_json(r), series_pretty(r));
        } else if (d_vw->parsed()) {
            int dim = dv_dim >= 0 ? dv_dim : class_dim(dv_space);
            DensityReport r = vakil_wood_density(parse_class(dv_space), dim);
            if (r.exact) out.put("exact", to_json(*r.exact), r.exact->str());
            out.put("truncated", filtered_json(r.truncated), r.truncated.str());
        } else if (d_ci->parsed()) {
            DensityReport r = complete_intersection_density(ci_n, ci_k, floor);
            if (r.exact) out.put("exact", to_json(*r.exact), r.exact->str());
            out.put("truncated", filtered_json(r.truncated), r.truncated.str());
        } else if (d_ms->parsed()) {
            int dim = ms_dim >= 0 ? ms_dim : class_dim(ms_space);
            DensityReport r = m_singular_density(parse_class(ms_space), dim, ms_m, floor);
            if (r.exact) out.put("exact", to_json(*r.exact), r.exact->str());
            out.put("truncated", filtered_json(r.truncated), r.truncated.str());
        } else if (d_sj->parsed()) {
            SurjectionReport r = surjection_density(sj_n, floor);
            out.put("product_side", filtered_json(r.product_side.truncated),
                    r.product_side.truncated.str());
            out.put("zeta_side", filtered_json(r.zeta_side.truncated), r.zeta_side.truncated.str());
            out.put("residual", filtered_json(r.residual), r.residual.str());
        } else if (w_spec->parsed()) {
            WittDivisor f = specialize(parse_class(ws_class), q);
            out.put("divisor", to_json(f));
        } else if (w_ghost->parsed()) {
            WittDivisor f = specialize(parse_class(wg_class), q);
            out.put("ghost", json(rat_to_string(ghost(f, wg_k))));
        } else if (w_sigma->parsed()) {
            std::vector<WittDivisor> s = sigma_s(specialize(parse_class(wsg_class), q), maxdeg);
            json arr = json::array();
            for (const auto& f : s) arr.push_back(to_json(f));
            out.put("coefficients", arr);
        } else if (w_dist->parsed()) {
            WittDivisor f = witt_from_json(load_json(wd_f));
            WittDivisor g = witt_from_json(load_json(wd_g));
            out.put("witt", json(rat_to_string(witt_dist(f, g, wd_depth))));
            out.put("weight", json(rat_to_string(weight_dist(f, g))));
            out.put("hadamard", json(rat_to_string(hadamard_dist(f, g))));
        } else if (w_conj->parsed()) {
            ConjectureDistances d = conjecture_p1_distances(wc_d, q);
            out.put("witt", json(rat_to_string(d.witt)));
            out.put("weight", json(rat_to_string(d.weight)));
            out.put("hadamard", json(rat_to_string(d.hadamard)));
        } else if (v_smooth->parsed()) {
            if (denominator(q) != 1) throw CLI::ValidationError("--q must be a prime power here");
            Int qint = numerator(q);
            uint32_t p = static_cast<uint32_t>(qint), k = 1;
            // accept prime powers by factoring the smallest prime divisor
            for (uint32_t f = 2; Int(f) * f <= qint; ++f)
                if (qint % f == 0) {
                    p = f;
                    k = 0;
                    Int rest = qint;
                    while (rest > 1) { rest /= f; ++k; }
                    break;
                }
            FqField F(p, k);
            SampleMode mode;
            if (vs_samples > 0) mode = SampleMode{false, vs_samples, seed};
            SmoothCount c = count_smooth_forms(vs_n, vs_d, F, mode);
            out.put("smooth", json(c.smooth.str()));
            out.put("total", json(c.total.str()));
            out.put("density", json(rat_to_string(Rat(c.smooth, c.total))));
        } else if (v_conf->parsed()) {
            Preset preset = vc_preset == "A1"   ? Preset::Affine1
                            : vc_preset == "P1" ? Preset::P1
                            : vc_preset == "P2" ? Preset::P2
                                                : throw CLI::ValidationError("unknown preset");
            GroupMultiset M = parse_groups(vc_groups);
            if (denominator(q) != 1) throw CLI::ValidationError("--q must be an integer here");
            uint32_t qi = static_cast<uint32_t>(numerator(q));
            std::vector<Int> a = closed_point_counts(preset, qi, 1, M.total());
            FrobSet X;
            for (int e = 1; e <= M.total(); ++e)
                for (Int i = 0; i < a[e]; ++i) {
                    int base = X.n;
                    for (int j = 0; j < e; ++j) X.sigma.push_back(base + (j + 1) % e);
                    X.n += e;
                }
            out.put("count", json(conf_count(X, M, vc_k).str()));
        } else if (v_ie->parsed()) {
            std::mt19937_64 rng(seed);
            int failures = 0;
            for (int i = 0; i < vie_count; ++i)
                if (!check_inclusion_exclusion(random_frobmap(rng, 8), vie_kmax)) ++failures;
            out.put("checked", json(vie_count));
            out.put("failures", json(failures));
            out.emit(std::cout);
            return failures == 0 ? kExitOk : kExitVerifyFail;
        } else if (v_pole->parsed()) {
            std::mt19937_64 rng(seed);
            int failures = 0;
            for (int i = 0; i < vp_count; ++i)
                if (!check_zeta_pole(random_frobset(rng, 8), vp_kmax)) ++failures;
            out.put("checked", json(vp_count));
            out.put("failures", json(failures));
            out.emit(std::cout);
            return failures == 0 ? kExitOk : kExitVerifyFail;
        } else if (v_suite->parsed()) {
            bool ok = suite_only > 0 ? run_acceptance_criterion(suite_only, std::cout)
                                     : run_acceptance(std::cout);
            return ok ? kExitOk : kExitVerifyFail;
        } else {
            std::cerr << "missing subcommand\n";
            return kExitUsage;
        }
    } catch (const DivergentProduct& e) {
        std::cerr << "divergent: " << e.what() << "\n";
        return kExitDivergent;
    } catch (const FloorUnreachable& e) {
        std::cerr << "divergent: " << e.what() << "\n";
        return kExitDivergent;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }

    out.emit(std::cout);
    return kExitOk;
}
