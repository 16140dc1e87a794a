// ddfkit command line: eval, check, demo.
//
// Exit codes: 0 ok, 1 property failure, 2 input or validation error, 3 dimension error.

#include <ddfkit/ddfkit.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ddfkit;
using io::json;

namespace {

constexpr int exit_ok = 0, exit_property = 1, exit_input = 2, exit_dimension = 3;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v + 0.0);
    return buf;
}

std::string vec(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + num(v[i]);
    return s + ")";
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::uint64_t default_seed() {
    const char* env = std::getenv("DDFKIT_SEED");
    if (!env || !*env) return 1;
    try {
        std::size_t used = 0;
        const auto s = std::stoull(env, &used);
        if (used != std::strlen(env)) throw std::invalid_argument("trailing characters");
        return s;
    } catch (const std::exception&) {
        throw io::SchemaError(std::string("DDFKIT_SEED is not an unsigned integer: ") + env);
    }
}

/// Text and JSON output for one command.
class Report {
public:
    Report(std::vector<std::string> argv, bool as_json) : argv_(std::move(argv)), json_(as_json) {}

    void line(const std::string& s) { text_ << s << '\n'; }
    json& results() { return results_; }
    void seed(std::uint64_t s) { seed_ = s; }

    void emit(double timing_ms) const {
        if (json_) {
            json j;
            j["command"] = argv_;
            j["seed"] = seed_ ? json(*seed_) : json(nullptr);
            j["results"] = results_;
            j["timing_ms"] = timing_ms;
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << text_.str();
        }
    }

private:
    std::vector<std::string> argv_;
    bool json_;
    std::ostringstream text_;
    json results_ = json::object();
    std::optional<std::uint64_t> seed_;
};

// ---------------------------------------------------------------- eval

struct EvalArgs {
    std::string tech_file, y, x, gy, gx, method = "auto";
    double step = 1e-4;
    int unsymmetric = 0;
};

int cmd_eval(const EvalArgs& a, Report& rep) {
    const Technology tech = io::read_technology(a.tech_file);
    const Bundle bundle(io::parse_vector(a.y), io::parse_vector(a.x));
    tech.require_dims(bundle.m(), bundle.n());
    auto& r = rep.results();
    r["technology"] = io::to_json(tech);
    r["y"] = bundle.y();
    r["x"] = bundle.x();

    if (a.unsymmetric > 0) {
        if (a.method == "grid") throw io::SchemaError("--unsymmetric does not support --method grid");
        const Method m = a.method == "closed" ? Method::closed : a.method == "bisect" ? Method::bisect : Method::automatic;
        const auto i = static_cast<std::size_t>(a.unsymmetric - 1);
        const auto t = unsymmetric_t(tech, i, bundle, m);
        r["output"] = a.unsymmetric;
        r["t"] = io::to_json(t);
        rep.line("t(y^-" + std::to_string(a.unsymmetric) + ", x) = " + to_string(t));
        return exit_ok;
    }

    if (a.gy.empty() || a.gx.empty()) throw io::SchemaError("--gy and --gx are required");
    const Direction dir(io::parse_vector(a.gy), io::parse_vector(a.gx));
    r["g_y"] = dir.g_y();
    r["g_x"] = dir.g_x();

    if (a.method == "grid") {
        const auto g = oracle::grid_ddf_detailed(tech, bundle, dir, a.step);
        r["value"] = io::to_json(g.value);
        r["method"] = "grid";
        r["step"] = a.step;
        r["truncated"] = g.truncated;
        rep.line("value: " + to_string(g.value));
        rep.line("method: grid");
        rep.line("step: " + num(a.step));
        if (g.truncated) rep.line("truncated: true");
        return exit_ok;
    }

    const Method m = a.method == "closed" ? Method::closed : a.method == "bisect" ? Method::bisect : Method::automatic;
    const auto d = eval_ddf_detailed(tech, bundle, dir, m);
    r["value"] = io::to_json(d.value);
    r["method"] = std::string(to_string(d.method));
    r["lambda"] = std::string(to_string(d.lambda));
    rep.line("value: " + to_string(d.value));
    rep.line("method: " + std::string(to_string(d.method)));
    rep.line("lambda: " + std::string(to_string(d.lambda)));
    if (d.method == Method::bisect) {
        r["iterations"] = d.iterations;
        rep.line("iterations: " + std::to_string(d.iterations));
        if (d.bracket_exhausted) {
            r["bracket_exhausted"] = true;
            rep.line("bracket_exhausted: true");
        }
    }
    return exit_ok;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
    std::string tech_file, props = "D1,D2,D3,D4,D5,D6", method = "auto";
    std::size_t samples = 200;
    std::optional<std::uint64_t> seed;
};

int cmd_check(const CheckArgs& a, Report& rep) {
    const Technology tech = io::read_technology(a.tech_file);
    if (!tech.is_quadratic())
        throw std::invalid_argument("property checks need a quadratic_separable technology, got " + std::string(tech.name()));
    std::vector<Property> props;
    std::stringstream ss(a.props);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto p = parse_property(item);
        if (!p) throw io::SchemaError("unknown property \"" + item + "\"");
        props.push_back(*p);
    }
    if (props.empty()) throw io::SchemaError("no properties given");
    const std::uint64_t seed = a.seed ? *a.seed : default_seed();
    rep.seed(seed);
    const Method m = a.method == "closed" ? Method::closed : a.method == "bisect" ? Method::bisect : Method::automatic;

    bool all = true;
    json arr = json::array();
    for (auto p : props) {
        const auto r = check_property(tech, p, {a.samples, seed, m});
        all = all && r.pass;
        arr.push_back({{"property", std::string(to_string(p))},
                       {"pass", r.pass},
                       {"samples", r.samples},
                       {"checked", r.checked},
                       {"worst_violation", r.worst_violation},
                       {"tolerance", r.tolerance},
                       {"witness", r.witness}});
        rep.line(std::string(to_string(p)) + ": " + (r.pass ? "pass" : "FAIL") + "  worst=" + num(r.worst_violation) +
                 "  tol=" + num(r.tolerance) + "  checked=" + std::to_string(r.checked));
        if (!r.witness.empty()) rep.line("    witness: " + r.witness);
    }
    rep.results()["properties"] = arr;
    rep.results()["all_pass"] = all;
    rep.line(std::string("all pass: ") + yes(all));
    return all ? exit_ok : exit_property;
}

// ---------------------------------------------------------------- demos

int demo_quadratic_homogeneity(std::uint64_t seed, Report& rep) {
    const auto free = quad::random_free_params(seed, 2, 2);
    const Bundle b({1, 1}, {1, 1});
    const Direction d({1, 1}, {1, 1});
    const auto w = quad::max_homogeneity_deviation(free, b, d);
    const auto p = quad::restrict_parameters(free, d);
    double residual = 0.0;
    for (double alpha : {-1.0, -0.5, 0.3, 1.0}) residual = std::max(residual, quad::translation_residual(p, b, alpha));
    const double restr = quad::restriction_residuals(p).max_abs();

    auto& r = rep.results();
    r["free"] = {{"alpha0", free.alpha0}, {"alpha", free.alpha},         {"beta", free.beta},
                 {"alpha_mat", free.alpha_mat}, {"beta_mat", free.beta_mat}, {"gamma", free.gamma}};
    r["bundle"] = {{"y", b.y()}, {"x", b.x()}};
    r["direction"] = {{"g_y", d.g_y()}, {"g_x", d.g_x()}};
    r["psi"] = w.psi;
    r["deviation"] = w.deviation;
    r["d2_violated"] = w.deviation > 1e-3;
    r["translation_residual"] = residual;
    r["restriction_residual"] = restr;
    r["d1_holds"] = residual <= 1e-10;

    rep.line("restricted quadratic, seed " + std::to_string(seed) + ", m = n = 2");
    rep.line("bundle y=" + vec(b.y()) + " x=" + vec(b.x()) + ", direction g_y=" + vec(d.g_y()) + " g_x=" + vec(d.g_x()));
    rep.line("max |psi Q_{psi g} - Q_g| = " + num(w.deviation) + " at psi = " + num(w.psi));
    rep.line("D2 violated (deviation > 1e-3): " + yes(w.deviation > 1e-3));
    rep.line("translation residual over alpha in {-1,-0.5,0.3,1}: " + num(residual));
    rep.line("D1 holds (residual <= 1e-10): " + yes(residual <= 1e-10));
    return exit_ok;
}

json pair_json(const std::pair<Vec, Vec>& p) { return {{"y", p.first}, {"x", p.second}}; }

bool has_violation(const oracle::JpfReport& r, const Vec& y, const Vec& x) {
    for (const auto& v : r.violations)
        if (v.first == y && v.second == x) return true;
    return false;
}

int demo_example_216(Report& rep) {
    const auto t = Technology::polyhedral_a();
    const Vec x{1}, y{0.5, 1};
    const bool not_eff = !frontier_member(t, Side::output, x, y, FrontierKind::eff);
    const bool weff = frontier_member(t, Side::output, x, y, FrontierKind::weff);
    const bool x_eff = frontier_member(t, Side::input, y, x, FrontierKind::eff);
    const auto grid = oracle::GridSpec::uniform(0.25, 0.0, 2.0, 3);
    const auto iso = oracle::jpf_existence_check(t, grid, oracle::JpfKind::isoquant);
    const auto eff = oracle::jpf_existence_check(t, grid, oracle::JpfKind::efficient);
    const bool reference_pair = has_violation(eff, y, x);
    const auto t1 = unsymmetric_t(t, 0, Bundle(y, x));

    auto& r = rep.results();
    r["y_not_in_eff_P"] = not_eff;
    r["y_in_weff_P"] = weff;
    r["x_in_eff_L"] = x_eff;
    r["isoquant_jpf_holds_on_grid"] = iso.holds_on_grid;
    r["efficient_jpf_holds_on_grid"] = eff.holds_on_grid;
    r["efficient_jpf_first_violation"] = eff.counterexample ? pair_json(*eff.counterexample) : json(nullptr);
    r["efficient_jpf_violations"] = eff.violations.size();
    r["reference_pair_among_violations"] = reference_pair;
    r["t_output1"] = io::to_json(t1);

    rep.line("P(x) = {y : y2 <= x, y1 + y2 <= 2x}");
    rep.line("(0.5,1) ∉ Eff P(1): " + yes(not_eff));
    rep.line("(0.5,1) ∈ WEff P(1): " + yes(weff));
    rep.line("1 ∈ Eff L(0.5,1): " + yes(x_eff));
    rep.line(std::string("isoquant JPF on grid: ") + (iso.holds_on_grid ? "holds" : "does not hold") + " (" +
             std::to_string(iso.pairs_checked) + " pairs, step 0.25)");
    rep.line(std::string("efficient JPF on grid: ") + (eff.holds_on_grid ? "holds" : "does not hold") + " (" +
             std::to_string(eff.violations.size()) + " violating pairs)");
    if (eff.counterexample)
        rep.line("first violating pair: y=" + vec(eff.counterexample->first) + " x=" + vec(eff.counterexample->second));
    rep.line("y=(0.5,1), x=1 among violating pairs: " + yes(reference_pair));
    rep.line("t(y2=1; i=1, x=1) = " + to_string(t1) + " > y1 = 0.5, so F^1((0.5,1),1) < 0 on a weakly efficient point");
    return exit_ok;
}

int demo_example_219(Report& rep) {
    const auto t = Technology::polyhedral_b();
    const Vec x{1, 1}, y{0.5, 1};
    const bool weff = frontier_member(t, Side::output, x, y, FrontierKind::weff);
    const bool not_eff = !frontier_member(t, Side::output, x, y, FrontierKind::eff);
    const auto grid = oracle::GridSpec::uniform(0.25, 0.0, 2.0, 2);
    const auto eff_set = oracle::grid_frontier(t, Side::output, x, grid, FrontierKind::eff);
    const auto weff_set = oracle::grid_frontier(t, Side::output, x, grid, FrontierKind::weff);
    const auto wit = oracle::weak_not_efficient_witnesses(t, x, grid);
    const auto t2 = unsymmetric_t(t, 1, Bundle(y, x));
    bool split_on_axis = false;
    // Exact membership at the grid points; the grid dominance filter itself keeps points one step
    // inside a slanted edge.
    for (const Vec& xz : {Vec{1, 0}, Vec{0, 1}})
        for (const auto& p : grid.points())
            split_on_axis = split_on_axis || frontier_member(t, Side::output, xz, p, FrontierKind::eff) !=
                                                 frontier_member(t, Side::output, xz, p, FrontierKind::weff);

    auto& r = rep.results();
    r["y_in_weff_P"] = weff;
    r["y_not_in_eff_P"] = not_eff;
    r["grid_eff_P"] = eff_set;
    r["grid_weff_P"] = weff_set;
    r["weff_equals_eff_when_an_input_is_zero"] = !split_on_axis;
    json wj = json::array();
    for (const auto& w : wit) wj.push_back({{"y", w.y}, {"output", w.output + 1}, {"t", w.t}});
    r["unsymmetric_witnesses"] = wj;
    r["t_output2"] = io::to_json(t2);

    auto list = [](const std::vector<Vec>& s) {
        std::string out;
        for (const auto& p : s) out += (out.empty() ? "" : " ") + vec(p);
        return out;
    };
    rep.line("P(x) = {y : y2 <= x2, y1 + y2 <= x1 + x2}");
    rep.line("(0.5,1) ∈ WEff P(1,1): " + yes(weff));
    rep.line("(0.5,1) ∉ Eff P(1,1): " + yes(not_eff));
    rep.line("Eff P(1,1) on grid 0.25: " + list(eff_set));
    rep.line("WEff P(1,1) on grid 0.25: " + list(weff_set));
    rep.line("WEff P(x) = Eff P(x) at the grid points when an input is zero: " + yes(!split_on_axis));
    rep.line("t(y1=0.5; i=2, x=(1,1)) = " + to_string(t2) + " = y2 though (0.5,1) ∉ Eff P(1,1)");
    rep.line("grid witnesses in WEff \\ Eff reproduced by t: " + std::to_string(wit.size()));
    return exit_ok;
}

int demo_staircase(Report& rep) {
    const auto t = Technology::staircase();
    const Vec one{1}, two{2};
    const bool y_isoq = frontier_member(t, Side::output, two, one, FrontierKind::isoq);
    const bool x_not_isoq = !frontier_member(t, Side::input, one, two, FrontierKind::isoq);
    const auto jpf = oracle::jpf_existence_check(t, oracle::GridSpec::uniform(0.25, 0.0, 3.0, 2), oracle::JpfKind::isoquant);
    const bool reference_pair = has_violation(jpf, one, two);

    auto& r = rep.results();
    r["y1_in_isoq_P2"] = y_isoq;
    r["x2_not_in_isoq_L1"] = x_not_isoq;
    r["isoquant_jpf_holds_on_grid"] = jpf.holds_on_grid;
    r["first_violation"] = jpf.counterexample ? pair_json(*jpf.counterexample) : json(nullptr);
    r["reference_pair_among_violations"] = reference_pair;

    rep.line("P(x) = {y : y <= h(x)}, h(x) = x on [0,1), 1 on [1,inf)");
    rep.line("1 ∈ Isoq P(2): " + yes(y_isoq));
    rep.line("2 ∉ Isoq L(1): " + yes(x_not_isoq));
    rep.line(std::string("isoquant JPF on grid: ") + (jpf.holds_on_grid ? "holds" : "does not hold"));
    if (jpf.counterexample)
        rep.line("first violating pair: y=" + vec(jpf.counterexample->first) + " x=" + vec(jpf.counterexample->second));
    rep.line("y=1, x=2 among violating pairs: " + yes(reference_pair));
    return exit_ok;
}

void write_csv(const std::filesystem::path& path, const std::string& header, const std::vector<Vec>& rows) {
    std::ofstream out(path);
    if (!out) throw io::SchemaError("cannot write " + path.string());
    out << header << '\n';
    char buf[64];
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", r[i] + 0.0);
            out << (i ? "," : "") << buf;
        }
        out << '\n';
    }
}

// Polyline through the vertices, `per` samples per edge.
std::vector<Vec> polyline(const std::vector<Vec>& v, int per) {
    std::vector<Vec> out;
    for (std::size_t e = 0; e + 1 < v.size(); ++e)
        for (int k = 0; k < per; ++k) {
            const double s = static_cast<double>(k) / per;
            out.push_back({v[e][0] + s * (v[e + 1][0] - v[e][0]), v[e][1] + s * (v[e + 1][1] - v[e][1])});
        }
    out.push_back(v.back());
    return out;
}

int demo_figure_data(const std::string& out_dir, Report& rep) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    json files = json::array();
    auto save = [&](const std::string& series, const std::string& header, const std::vector<Vec>& rows) {
        const auto p = dir / ("figure-data_" + series + ".csv");
        write_csv(p, header, rows);
        files.push_back({{"series", series}, {"file", p.filename().string()}, {"rows", rows.size()}});
        rep.line("wrote " + p.string() + " (" + std::to_string(rows.size()) + " rows)");
    };

    // Upper boundaries of P(1) and P((1,1)).
    save("figure1", "y1,y2", polyline({{0, 1}, {1, 1}, {2, 0}}, 20));
    save("figure2", "y1,y2", polyline({{0, 1}, {1, 1}, {2, 0}}, 20));

    // Input space, g_y = 0: boundary of L(y) and two projections from x = (1,2).
    const auto q = Technology::quadratic_separable({{1, 1}, {1, 1}, {{1, 0}, {0, 1}}});
    const Vec y{0.5, 0.5}, x{1, 2};
    const double level = eval_F_raw(q, y, Vec{0, 0}); // a'x must reach this
    save("figure3_boundary", "x1,x2", polyline({{0, level}, {level, 0}}, 20));
    std::vector<Vec> proj;
    json betas = json::array();
    int k = 1;
    for (const Vec& g : {Vec{1, 1}, Vec{1, 0}}) {
        const auto d = eval_ddf_detailed(q, Bundle(y, x), Direction({0, 0}, g));
        const double beta = d.value.value();
        proj.push_back({static_cast<double>(k), beta, x[0], x[1]});
        proj.push_back({static_cast<double>(k), beta, x[0] - beta * g[0], x[1] - beta * g[1]});
        betas.push_back({{"g_x", g}, {"beta", beta}, {"lambda", std::string(to_string(d.lambda))}});
        rep.line("figure 3 direction " + std::to_string(k) + " g_x=" + vec(g) + ": beta* = " + num(beta) + " (" +
                 std::string(to_string(d.lambda)) + ")");
        ++k;
    }
    save("figure3_projections", "direction,beta,x1,x2", proj);

    // F on the search line for the figure 4 instance.
    const Bundle b4({0.5, 0.5}, {1, 1});
    const Direction d4({0.5, 0.5}, {0, 0});
    const double root = eval_ddf(q, b4, d4, Method::closed).value();
    std::vector<Vec> curve;
    bool root_done = false;
    for (int i = 0; i <= 400; ++i) {
        const double beta = -1.0 + 0.01 * i;
        if (!root_done && beta > root) {
            curve.push_back({root, restricted_F(q, b4, d4, root)});
            root_done = true;
        }
        curve.push_back({beta, restricted_F(q, b4, d4, beta)});
    }
    save("figure4", "beta,value", curve);
    std::vector<Vec> level4;
    for (int i = 0; i <= 40; ++i) {
        // boundary of P((1,1)): y1 + y1^2/2 + y2 + y2^2/2 = 2, parametrised by y1
        const double y1 = (std::sqrt(5.0) - 1.0) * i / 40.0;
        const double rest = 2.0 - y1 - 0.5 * y1 * y1;
        level4.push_back({y1, std::sqrt(1.0 + 2.0 * std::max(rest, 0.0)) - 1.0});
    }
    save("figure4_boundary", "y1,y2", level4);
    save("figure4_segment", "y1,y2", {{0.0, 0.0}, {0.5 + root * 0.5, 0.5 + root * 0.5}, {2.0, 2.0}});

    rep.results()["files"] = files;
    rep.results()["figure3"] = betas;
    rep.results()["figure4_root"] = root;
    rep.results()["figure4_F_at_root"] = restricted_F(q, b4, d4, root);
    rep.line("figure 4 root beta* = " + num(root) + ", F there = " + num(restricted_F(q, b4, d4, root)));
    return exit_ok;
}

const char* demo_names[] = {"quadratic-homogeneity", "example-2-1-6", "example-2-1-9", "staircase", "figure-data"};

struct DemoArgs {
    std::string name, out_dir = ".";
    std::optional<std::uint64_t> seed;
};

int cmd_demo(const DemoArgs& a, Report& rep) {
    if (a.name == "quadratic-homogeneity") {
        const std::uint64_t seed = a.seed ? *a.seed : default_seed();
        rep.seed(seed);
        return demo_quadratic_homogeneity(seed, rep);
    }
    if (a.name == "example-2-1-6") return demo_example_216(rep);
    if (a.name == "example-2-1-9") return demo_example_219(rep);
    if (a.name == "staircase") return demo_staircase(rep);
    if (a.name == "figure-data") return demo_figure_data(a.out_dir, rep);
    std::string known;
    for (const char* n : demo_names) known += std::string(known.empty() ? "" : ", ") + n;
    throw io::SchemaError("unknown demo \"" + a.name + "\"; known: " + known);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Directional technology distance functions"};
    app.require_subcommand(1);
    bool as_json = false;

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "evaluate the distance function or the unsymmetric t");
    eval->add_option("technology", ea.tech_file, "technology JSON file")->required();
    eval->add_option("--y", ea.y, "outputs, comma separated")->required();
    eval->add_option("--x", ea.x, "inputs, comma separated")->required();
    eval->add_option("--gy", ea.gy, "output direction");
    eval->add_option("--gx", ea.gx, "input direction");
    eval->add_option("--method", ea.method, "closed, bisect, grid or auto")
        ->check(CLI::IsMember({"auto", "closed", "bisect", "grid"}));
    eval->add_option("--step", ea.step, "grid step for --method grid");
    eval->add_option("--unsymmetric", ea.unsymmetric, "evaluate t for this output (1-based) instead")
        ->check(CLI::PositiveNumber);
    eval->add_flag("--json", as_json, "print a JSON run report");

    CheckArgs ca;
    auto* check = app.add_subcommand("check", "sampled property checks on a quadratic technology");
    check->add_option("technology", ca.tech_file, "technology JSON file")->required();
    check->add_option("--props", ca.props, "comma separated, from D1..D6, F1, F3, F4, T4, T5");
    check->add_option("--samples", ca.samples, "draws per property");
    check->add_option("--seed", ca.seed, "seed (default: DDFKIT_SEED or 1)");
    check->add_option("--method", ca.method, "closed, bisect or auto")->check(CLI::IsMember({"auto", "closed", "bisect"}));
    check->add_flag("--json", as_json, "print a JSON run report");

    DemoArgs da;
    auto* demo = app.add_subcommand("demo", "reproduce the worked examples and figure data");
    demo->add_option("name", da.name, "quadratic-homogeneity, example-2-1-6, example-2-1-9, staircase, figure-data")
        ->required();
    demo->add_option("--out-dir", da.out_dir, "directory for CSV files");
    demo->add_option("--seed", da.seed, "seed (default: DDFKIT_SEED or 1)");
    demo->add_flag("--json", as_json, "print a JSON run report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    Report rep(std::vector<std::string>(argv + 1, argv + argc), as_json);
    const auto start = std::chrono::steady_clock::now();
    int code = exit_ok;
    try {
        if (*eval) code = cmd_eval(ea, rep);
        else if (*check) code = cmd_check(ca, rep);
        else code = cmd_demo(da, rep);
    } catch (const DimensionError& e) {
        std::cerr << "dimension error: " << e.what() << '\n';
        return exit_dimension;
    } catch (const InvalidParameters& e) {
        std::cerr << "invalid technology parameters:\n";
        for (const auto& s : e.report()) std::cerr << "  - " << s << '\n';
        return exit_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rep.emit(ms);
    return code;
}
