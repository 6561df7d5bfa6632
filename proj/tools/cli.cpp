#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scene.hpp"
#include "verify.hpp"
#include "weingarten/errors.hpp"
#include "weingarten/hyperbolic_family.hpp"
#include "weingarten/parallel_lw.hpp"
#include "weingarten/profiles.hpp"

namespace weingarten::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

void emit(const std::string& content, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw BadInput(fmt::format("cannot open '{}' for writing", path));
    }
    file << content;
    if (!file) {
        throw BadInput(fmt::format("failed writing '{}'", path));
    }
}

/// Fills options of `sub` that were not given on the command line from the
/// JSON object in `path`. Keys are long option names without dashes.
void apply_config(CLI::App& sub, const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw BadInput(fmt::format("cannot read config '{}'", path));
    }
    Json config;
    try {
        config = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw BadInput(fmt::format("config '{}' is not valid JSON: {}", path, e.what()));
    }
    if (!config.is_object()) {
        throw BadInput(fmt::format("config '{}' must hold a JSON object", path));
    }
    const auto scalar = [&path](const std::string& key, const Json& v) -> std::string {
        if (v.is_string()) {
            return v.get<std::string>();
        }
        if (v.is_number() || v.is_boolean()) {
            return v.dump();
        }
        throw BadInput(fmt::format("config '{}': unsupported value for '{}'", path, key));
    };
    for (const auto& [key, value] : config.items()) {
        if (key == "config") {
            throw BadInput("config files cannot include other config files");
        }
        CLI::Option* opt = sub.get_option_no_throw("--" + key);
        if (opt == nullptr) {
            opt = sub.get_option_no_throw(key);
        }
        if (opt == nullptr) {
            throw BadInput(fmt::format("config '{}': unknown key '{}' for '{}'", path, key, sub.get_name()));
        }
        if (opt->count() > 0) {
            continue;  // the command line wins
        }
        if (value.is_array()) {
            for (const Json& item : value) {
                opt->add_result(scalar(key, item));
            }
        } else {
            opt->add_result(scalar(key, value));
        }
        try {
            opt->run_callback();
        } catch (const CLI::ParseError& e) {
            throw BadInput(fmt::format("config '{}': {}", path, e.what()));
        }
    }
}

void check_grid(std::size_t n_s, std::size_t n_theta)
{
    if (n_s < 2) {
        throw BadInput(fmt::format("--n-s must be at least 2, got {}", n_s));
    }
    if (n_theta < 3) {
        throw BadInput(fmt::format("--n-theta must be at least 3, got {}", n_theta));
    }
}

std::string join_values(const std::vector<double>& values, std::size_t limit = 20)
{
    std::string out;
    for (std::size_t i = 0; i < values.size() && i < limit; ++i) {
        out += (i ? ", " : "") + num(values[i]);
    }
    if (values.size() > limit) {
        out += fmt::format(", ... ({} total)", values.size());
    }
    return out;
}

Json triple_json(const LWCoefficients& lw)
{
    return Json{{"a", lw.a}, {"b", lw.b}, {"c", lw.c}};
}

// ---------------------------------------------------------------- profile

struct ProfileArgs {
    FamilySpec spec;
    std::string range;
    std::size_t n = 200;
    std::string format = "csv";
    std::string output;
    std::string config;
};

void add_family_options(CLI::App* sub, FamilySpec& spec, const std::vector<std::string>& families)
{
    sub->add_option("--family", spec.family, "Profile or surface family")->check(CLI::IsMember(families));
    sub->add_option("--K", spec.K, "Sign of the Gauss curvature for cn and dn (1 or -1)");
    sub->add_option("--p", spec.p, "Elliptic modulus in (0, 1)");
    sub->add_option("--t", spec.t, "Offset distance of the hyperbolic family member");
}

std::string cmd_profile(const ProfileArgs& args)
{
    if (args.n < 2) {
        throw BadInput(fmt::format("--n must be at least 2, got {}", args.n));
    }
    const ResolvedProfile rp = resolve_profile(args.spec);
    const Range range = args.range.empty() ? default_range(args.spec, rp) : parse_range(args.range);
    const std::vector<double> s = linspace(range.lo, range.hi, args.n);
    std::vector<ProfilePoint> pts;
    pts.reserve(s.size());
    for (double si : s) {
        const ProfilePoint pt = rp.profile.eval(si);
        if (!(std::isfinite(pt.r) && std::isfinite(pt.h) && std::isfinite(pt.dr) && std::isfinite(pt.dh))) {
            throw SingularEvaluation(fmt::format("profile is not finite at s = {}", num(si)));
        }
        pts.push_back(pt);
    }

    if (args.format == "csv") {
        std::string out = "s,r,h,r',h'\n";
        for (std::size_t i = 0; i < s.size(); ++i) {
            out += fmt::format("{},{},{},{},{}\n", num(s[i]), num(pts[i].r), num(pts[i].h), num(pts[i].dr),
                               num(pts[i].dh));
        }
        return out;
    }
    if (args.format == "svg") {
        std::vector<std::vector<Vec2>> curves(1);
        for (const ProfilePoint& pt : pts) {
            curves[0].emplace_back(pt.h, pt.r);
        }
        return polyline_svg(curves);
    }
    Json rows = Json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        rows.push_back(Json::array({s[i], pts[i].r, pts[i].h, pts[i].dr, pts[i].dh}));
    }
    Json j;
    j["family"] = std::string(to_string(rp.profile.family()));
    j["K"] = rp.profile.K_target() ? Json(*rp.profile.K_target()) : Json(nullptr);
    j["C"] = rp.profile.C() ? Json(*rp.profile.C()) : Json(nullptr);
    j["p"] = rp.profile.modulus() ? Json(rp.profile.modulus()->p()) : Json(nullptr);
    j["t"] = rp.member ? Json(rp.member->t) : Json(nullptr);
    j["columns"] = {"s", "r", "h", "r'", "h'"};
    j["rows"] = std::move(rows);
    return dump(j);
}

// ---------------------------------------------------------------- surface

struct SurfaceArgs {
    FamilySpec spec;
    std::string range;
    std::size_t n_s = 64;
    std::size_t n_theta = 64;
    bool caps = false;
    std::string attributes;
    std::string format = "obj";
    std::string output;
    std::string config;
};

struct BuiltSurface {
    std::shared_ptr<const Surface> surface;
    Mesh mesh;
};

BuiltSurface build_revolved(const ResolvedProfile& rp, Range range, std::size_t n_s, std::size_t n_theta, bool caps)
{
    const std::vector<double> singular = singular_parameters(rp, range, n_s);
    if (!singular.empty()) {
        throw SingularEvaluation(fmt::format("patch [{}, {}] contains singular points (profile cusps or points on "
                                             "the axis) at s = {}",
                                             num(range.lo), num(range.hi), join_values(singular)));
    }
    auto surface = revolve(rp.profile);
    std::optional<std::array<Vec3, 2>> cap_points;
    if (caps) {
        cap_points = std::array<Vec3, 2>{Vec3(0.0, 0.0, rp.profile.eval(range.lo).h),
                                         Vec3(0.0, 0.0, rp.profile.eval(range.hi).h)};
    }
    Mesh mesh = grid_mesh(*surface, linspace(range.lo, range.hi, n_s), n_theta, false, cap_points);
    return {std::move(surface), std::move(mesh)};
}

std::string attributes_csv(const Surface& surface, const Mesh& mesh)
{
    std::string out = "vertex,u,v,K,H\n";
    for (std::size_t i = 0; i < mesh.grid_vertices; ++i) {
        CurvatureData cd;
        try {
            cd = curvatures(surface.jet(mesh.u[i], mesh.v[i]));
        } catch (const DegenerateJet& e) {
            throw SingularEvaluation(fmt::format("curvature undefined at u = {}: {}", num(mesh.u[i]), e.what()));
        }
        out += fmt::format("{},{},{},{},{}\n", i + 1, num(mesh.u[i]), num(mesh.v[i]), num(cd.K), num(cd.H));
    }
    return out;
}

void check_finite(const Mesh& mesh)
{
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        if (!mesh.vertices[i].allFinite()) {
            throw SingularEvaluation(fmt::format("vertex {} is not finite", i + 1));
        }
    }
}

std::string cmd_surface(const SurfaceArgs& args)
{
    check_grid(args.n_s, args.n_theta);
    BuiltSurface built;
    if (is_tube(args.spec.family)) {
        if (args.caps) {
            throw BadInput("--caps applies to surfaces of revolution only");
        }
        if (args.spec.family == "tube-line") {
            built.surface = tube(straight_line(Vec3::Zero(), Vec3::UnitZ()), args.spec.rho);
            const Range range = args.range.empty() ? Range{-2.0, 2.0} : parse_range(args.range);
            built.mesh = grid_mesh(*built.surface, linspace(range.lo, range.hi, args.n_s), args.n_theta, false);
        } else {
            built.surface = tube(circle_curve(args.spec.R), args.spec.rho);
            if (args.range.empty()) {
                // the full torus, stitched in both directions
                std::vector<double> u(args.n_s);
                for (std::size_t i = 0; i < args.n_s; ++i) {
                    u[i] = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(args.n_s);
                }
                built.mesh = grid_mesh(*built.surface, u, args.n_theta, true);
            } else {
                const Range range = parse_range(args.range);
                built.mesh = grid_mesh(*built.surface, linspace(range.lo, range.hi, args.n_s), args.n_theta, false);
            }
        }
    } else {
        const ResolvedProfile rp = resolve_profile(args.spec);
        const Range range = args.range.empty() ? default_range(args.spec, rp) : parse_range(args.range);
        built = build_revolved(rp, range, args.n_s, args.n_theta, args.caps);
    }
    check_finite(built.mesh);
    if (!args.attributes.empty()) {
        emit(attributes_csv(*built.surface, built.mesh), args.attributes, std::cerr);
    }
    return to_obj(built.mesh);
}

// ---------------------------------------------------------------- classify

struct TripleArgs {
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> c;
    std::string output;
    std::string config;
};

LWCoefficients required_triple(const TripleArgs& args)
{
    if (!args.a || !args.b || !args.c) {
        throw BadInput("a triple a b c is required");
    }
    return {*args.a, *args.b, *args.c};
}

struct ClassifyArgs {
    TripleArgs triple;
    double tol = kDefaultClassifyTol;
};

std::string cmd_classify(const ClassifyArgs& args)
{
    const LWCoefficients lw = required_triple(args.triple);
    const LWClass cls = classify(lw, args.tol);
    Json offsets = Json::array();
    for (const LabeledOffset& off : cls.offsets) {
        offsets.push_back({{"label", off.label}, {"t", off.t}});
    }
    Json j;
    j["a"] = lw.a;
    j["b"] = lw.b;
    j["c"] = lw.c;
    j["discriminant"] = lw.discriminant();
    j["kind"] = to_string(cls.kind);
    j["offsets"] = std::move(offsets);
    j["K_at_cgc_offset"] = cls.K_at_cgc_offset ? Json(*cls.K_at_cgc_offset) : Json(nullptr);
    j["constant_principal_curvature"] =
        cls.constant_principal_curvature ? Json(*cls.constant_principal_curvature) : Json(nullptr);
    return dump(j);
}

// ---------------------------------------------------------------- parallel

struct ParallelArgs {
    TripleArgs triple;
    std::optional<double> t;
    std::optional<double> K;
    std::optional<double> H;
};

std::string cmd_parallel(const ParallelArgs& args)
{
    const LWCoefficients lw = required_triple(args.triple);
    if (lw.a == 0.0 && lw.b == 0.0 && lw.c == 0.0) {
        throw InvalidTriple("the zero triple (0, 0, 0) imposes no condition");
    }
    if (!args.t || !std::isfinite(*args.t)) {
        throw BadInput("--t is required and must be finite");
    }
    if (args.K.has_value() != args.H.has_value()) {
        throw BadInput("--K and --H must be given together");
    }
    const double t = *args.t;
    const LWCoefficients tr = transform_coefficients(lw, t);
    Json j;
    j["t"] = t;
    j["input"] = triple_json(lw);
    j["transformed"] = triple_json(tr);
    j["discriminant"] = lw.discriminant();
    j["transformed_discriminant"] = tr.discriminant();
    if (args.K) {
        const ParallelCurvatures pc = parallel_curvatures(*args.K, *args.H, t);
        j["K"] = *args.K;
        j["H"] = *args.H;
        j["K_t"] = pc.K;
        j["H_t"] = pc.H;
    }
    return dump(j);
}

// ---------------------------------------------------------------- hyperbolic

struct HyperbolicArgs {
    double p = 0.5;
    std::vector<double> t{1.0};
    std::string svg;
    std::string obj_dir;
    std::size_t n_s = 128;
    std::size_t n_theta = 48;
    std::string output;
    std::string config;
};

Json interval_json(const std::optional<OffsetInterval>& iv)
{
    if (!iv) {
        return nullptr;
    }
    return Json::array({iv->lo, iv->hi});
}

std::string cmd_hyperbolic(const HyperbolicArgs& args)
{
    const EllipticModulus m = make_modulus(args.p);
    if (args.t.empty()) {
        throw BadInput("at least one --t is required");
    }
    for (double t : args.t) {
        if (!std::isfinite(t)) {
            throw BadInput("--t values must be finite");
        }
    }
    if (!args.obj_dir.empty()) {
        check_grid(args.n_s, args.n_theta);
        std::filesystem::create_directories(args.obj_dir);
    }
    const auto safe = safe_interval(m);

    std::vector<FamilyMember> members;
    Json list = Json::array();
    for (std::size_t k = 0; k < args.t.size(); ++k) {
        FamilyMember member = family_member(m, args.t[k]);
        Json entry;
        entry["t"] = member.t;
        entry["status"] = member.status();
        entry["singular"] = member.singular;
        entry["reaches_axis"] = member.reaches_axis;
        entry["in_safe_interval"] = member.in_safe_interval;
        entry["s_period"] = member.s_period;
        entry["h_translation"] = member.h_translation;
        const auto root = member.singular ? locate_singularity(member) : std::nullopt;
        entry["singular_s"] = root ? Json(*root) : Json(nullptr);
        entry["singular_residual"] = root ? Json(member_speed(member, *root)) : Json(nullptr);
        entry["min_speed"] = min_speed(member).value;
        entry["min_radius"] = min_radius(member).value;
        if (!args.obj_dir.empty() && member.status() == "immersed") {
            const std::string path = (std::filesystem::path(args.obj_dir) / fmt::format("member_{}.obj", k)).string();
            const ResolvedProfile rp{member.profile, member};
            const BuiltSurface built = build_revolved(rp, {0.0, member.s_period}, args.n_s, args.n_theta, false);
            check_finite(built.mesh);
            emit(to_obj(built.mesh), path, std::cerr);
            entry["obj"] = path;
        } else {
            entry["obj"] = nullptr;
        }
        list.push_back(std::move(entry));
        members.push_back(std::move(member));
    }
    if (!args.svg.empty()) {
        emit(profile_svg(members), args.svg, std::cerr);
    }

    Json j;
    j["p"] = m.p();
    j["q"] = m.q();
    j["safe_interval"] = interval_json(safe);
    j["safe_interval_mirrored"] = safe ? interval_json(safe->mirrored()) : Json(nullptr);
    j["singular_range"] = {{"abs_t_at_most", singular_range(m).bound}};
    j["axis_range"] = {{"abs_t_at_least", axis_crossing_range(m).bound}};
    j["members"] = std::move(list);
    return dump(j);
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    VerifyOptions options;
    std::optional<double> tol;
    std::string output;
    std::string config;
};

std::optional<double> env_tolerance()
{
    const char* raw = std::getenv("WEINGARTEN_TOL");
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(raw, &used);
        if (used == std::string(raw).size() && std::isfinite(v) && v > 0.0) {
            return v;
        }
    } catch (const std::logic_error&) {
    }
    throw BadInput(fmt::format("WEINGARTEN_TOL must be a positive number, got '{}'", raw));
}

std::string cmd_verify(VerifyArgs args, bool& passed)
{
    if (args.options.target.empty()) {
        throw BadInput("--target is required");
    }
    if (args.tol) {
        if (!(*args.tol > 0.0)) {
            throw BadInput("--tol must be positive");
        }
        args.options.tolerance = args.tol;
    } else {
        args.options.tolerance = env_tolerance();
    }
    const std::vector<Check> checks = run_verify(args.options);
    passed = true;
    Json list = Json::array();
    for (const Check& c : checks) {
        passed = passed && c.pass();
        list.push_back({{"name", c.name},
                        {"value", c.value},
                        {"tolerance", c.tolerance},
                        {"relation", c.lower_bound ? ">" : "<="},
                        {"pass", c.pass()}});
    }
    Json j;
    j["target"] = args.options.target;
    j["pass"] = passed;
    j["checks"] = std::move(list);
    return dump(j);
}

void add_io(CLI::App* sub, std::string& output, std::string& config)
{
    sub->add_option("-o,--output", output, "Write the result here instead of stdout");
    sub->add_option("--config", config, "JSON file with option values; flags take precedence");
}

void add_triple(CLI::App* sub, TripleArgs& triple)
{
    sub->add_option("a", triple.a, "Coefficient of K");
    sub->add_option("b", triple.b, "Coefficient of 2H");
    sub->add_option("c", triple.c, "Constant term");
    add_io(sub, triple.output, triple.config);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Linear Weingarten surfaces: profiles, meshes, classification and verification", "weingarten"};
    app.require_subcommand(1);

    ProfileArgs profile;
    CLI::App* sub_profile = app.add_subcommand("profile", "Sample a profile curve as CSV, SVG or JSON");
    add_family_options(sub_profile, profile.spec, kProfileFamilies);
    sub_profile->add_option("--range", profile.range, "Parameter window a:b");
    sub_profile->add_option("--n", profile.n, "Number of samples");
    sub_profile->add_option("--format", profile.format)->check(CLI::IsMember({"csv", "svg", "json"}));
    add_io(sub_profile, profile.output, profile.config);

    SurfaceArgs surface;
    CLI::App* sub_surface = app.add_subcommand("surface", "Export a surface patch as an OBJ mesh");
    add_family_options(sub_surface, surface.spec, kSurfaceFamilies);
    sub_surface->add_option("--rho", surface.spec.rho, "Tube radius");
    sub_surface->add_option("--R", surface.spec.R, "Radius of the centre circle for tube-circle");
    sub_surface->add_option("--range", surface.range, "Parameter window a:b along the profile or centre curve");
    sub_surface->add_option("--n-s", surface.n_s, "Samples along the profile");
    sub_surface->add_option("--n-theta", surface.n_theta, "Samples around the axis");
    sub_surface->add_flag("--caps", surface.caps, "Close both boundary rings with a fan to the axis");
    sub_surface->add_option("--attributes", surface.attributes, "Write per-vertex K and H as CSV");
    sub_surface->add_option("--format", surface.format)->check(CLI::IsMember({"obj"}));
    add_io(sub_surface, surface.output, surface.config);

    ClassifyArgs classify_args;
    CLI::App* sub_classify = app.add_subcommand("classify", "Classify the parallel family of a triple a b c");
    add_triple(sub_classify, classify_args.triple);
    sub_classify->add_option("--tol", classify_args.tol, "Relative tolerance for zero tests");

    ParallelArgs parallel;
    CLI::App* sub_parallel = app.add_subcommand("parallel", "Transform a triple and curvatures to offset t");
    add_triple(sub_parallel, parallel.triple);
    sub_parallel->add_option("--t", parallel.t, "Offset distance");
    sub_parallel->add_option("--K", parallel.K, "Gauss curvature of the base surface");
    sub_parallel->add_option("--H", parallel.H, "Mean curvature of the base surface");

    HyperbolicArgs hyperbolic;
    CLI::App* sub_hyperbolic = app.add_subcommand("hyperbolic", "Report on the parallel family of the dn profile");
    sub_hyperbolic->add_option("--p", hyperbolic.p, "Elliptic modulus in (0, 1)");
    sub_hyperbolic->add_option("--t", hyperbolic.t, "Offset distances")->expected(1, -1);
    sub_hyperbolic->add_option("--svg", hyperbolic.svg, "Write the member profiles as SVG");
    sub_hyperbolic->add_option("--obj-dir", hyperbolic.obj_dir, "Write one period of each immersed member as OBJ");
    sub_hyperbolic->add_option("--n-s", hyperbolic.n_s, "Samples along one period");
    sub_hyperbolic->add_option("--n-theta", hyperbolic.n_theta, "Samples around the axis");
    add_io(sub_hyperbolic, hyperbolic.output, hyperbolic.config);

    VerifyArgs verify;
    CLI::App* sub_verify = app.add_subcommand("verify", "Run a residual suite; exit 1 if any check fails");
    sub_verify->add_option("--target", verify.options.target)->check(CLI::IsMember(kVerifyTargets));
    sub_verify->add_option("--p", verify.options.p, "Elliptic modulus; 0 keeps the target default");
    sub_verify->add_option("--K", verify.options.K, "Curvature sign for cn and dn; both when omitted");
    sub_verify->add_option("--t", verify.options.t, "Offset for the hyperbolic target");
    sub_verify->add_option("--rho", verify.options.rho, "Tube radius; 0 keeps the target default");
    sub_verify->add_option("--R", verify.options.R, "Centre circle radius for the torus");
    sub_verify->add_option("--tol", verify.tol, "Tolerance for every residual check");
    add_io(sub_verify, verify.output, verify.config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kBadInput;
    }

    try {
        if (sub_profile->parsed()) {
            if (!profile.config.empty()) {
                apply_config(*sub_profile, profile.config);
            }
            emit(cmd_profile(profile), profile.output, out);
        } else if (sub_surface->parsed()) {
            if (!surface.config.empty()) {
                apply_config(*sub_surface, surface.config);
            }
            emit(cmd_surface(surface), surface.output, out);
        } else if (sub_classify->parsed()) {
            if (!classify_args.triple.config.empty()) {
                apply_config(*sub_classify, classify_args.triple.config);
            }
            emit(cmd_classify(classify_args), classify_args.triple.output, out);
        } else if (sub_parallel->parsed()) {
            if (!parallel.triple.config.empty()) {
                apply_config(*sub_parallel, parallel.triple.config);
            }
            emit(cmd_parallel(parallel), parallel.triple.output, out);
        } else if (sub_hyperbolic->parsed()) {
            if (!hyperbolic.config.empty()) {
                apply_config(*sub_hyperbolic, hyperbolic.config);
            }
            emit(cmd_hyperbolic(hyperbolic), hyperbolic.output, out);
        } else if (sub_verify->parsed()) {
            if (!verify.config.empty()) {
                apply_config(*sub_verify, verify.config);
            }
            bool passed = false;
            emit(cmd_verify(verify, passed), verify.output, out);
            if (!passed) {
                err << "verification failed\n";
                return kVerificationFailed;
            }
        }
    } catch (const SingularEvaluation& e) {
        err << "error: " << e.what() << "\n";
        return kSingular;
    } catch (const DegenerateJet& e) {
        err << "error: " << e.what() << "\n";
        return kSingular;
    } catch (const FocalPoint& e) {
        err << "error: " << e.what() << "\n";
        return kSingular;
    } catch (const FormulaSingular& e) {
        err << "error: " << e.what() << "\n";
        return kSingular;
    } catch (const std::exception& e) {
        // bad input: domain errors, invalid triples, immersion failures, I/O
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kOk;
}

}  // namespace weingarten::cli
