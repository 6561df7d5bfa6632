#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "cli_harness.hpp"

using testing_cli::inspect;
using testing_cli::invoke;
using testing_cli::parse_obj;
using Json = nlohmann::ordered_json;

namespace fs = std::filesystem;

namespace {

fs::path scratch_dir()
{
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    fs::path dir = fs::temp_directory_path() / "weingarten_cli_tests" /
                   (std::string(info->test_suite_name()) + "_" + info->name());
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        out.push_back(line);
    }
    return out;
}

std::vector<std::pair<double, double>> svg_points(const std::string& svg)
{
    std::vector<std::pair<double, double>> pts;
    const std::regex pair_re(R"((-?[0-9.]+),(-?[0-9.]+))");
    const auto start = svg.find("points=\"");
    const auto end = svg.find('"', start + 8);
    const std::string body = svg.substr(start + 8, end - start - 8);
    for (auto it = std::sregex_iterator(body.begin(), body.end(), pair_re); it != std::sregex_iterator(); ++it) {
        pts.emplace_back(std::stod((*it)[1]), std::stod((*it)[2]));
    }
    return pts;
}

class ScopedEnv {
public:
    ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
    ~ScopedEnv() { ::unsetenv(name_); }

private:
    const char* name_;
};

}  // namespace

TEST(CliProfile, DnCsvHasRequestedRows)
{
    const auto r = invoke({"profile", "--family", "dn", "--K", "-1", "--p", "0.5", "--range", "0:3.37", "--n", "200",
                           "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 201u);
    EXPECT_EQ(rows[0], "s,r,h,r',h'");
    EXPECT_EQ(rows[1].substr(0, 4), "0,2,");
    EXPECT_EQ(rows[200].substr(0, 5), "3.37,");
    EXPECT_EQ(r.out.find('\r'), std::string::npos);
    EXPECT_EQ(invoke({"profile", "--family", "dn", "--K", "-1", "--p", "0.5", "--range", "0:3.37", "--n", "200"}).out,
              r.out);
}

TEST(CliProfile, CsvValuesMatchLibrary)
{
    const auto r = invoke({"profile", "--family", "cn", "--K", "1", "--p", "0.3", "--range", "-1:1", "--n", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 6u);
    // s = 0: r = p, h = 0, r' = 0, h' = 1
    EXPECT_EQ(rows[3], "0,0.3,0,0,1");
}

TEST(CliProfile, SphereSvgIsSemicircle)
{
    const auto r = invoke({"profile", "--family", "sphere", "--format", "svg"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.find("<polyline"), r.out.rfind("<polyline"));
    const auto pts = svg_points(r.out);
    ASSERT_EQ(pts.size(), 200u);
    // r^2 + h^2 = 1 becomes a circle in pixel space because the scale is
    // uniform; take the circle through three samples and test the rest.
    const auto [ax, ay] = pts.front();
    const auto [bx, by] = pts[100];
    const auto [qx, qy] = pts.back();
    const double d = 2.0 * (ax * (by - qy) + bx * (qy - ay) + qx * (ay - by));
    const double a2 = ax * ax + ay * ay;
    const double b2 = bx * bx + by * by;
    const double q2 = qx * qx + qy * qy;
    const double cx = (a2 * (by - qy) + b2 * (qy - ay) + q2 * (ay - by)) / d;
    const double cy = (a2 * (qx - bx) + b2 * (ax - qx) + q2 * (bx - ax)) / d;
    const double radius = std::hypot(bx - cx, by - cy);
    EXPECT_GT(radius, 50.0);
    for (const auto& [x, y] : pts) {
        ASSERT_NEAR(std::hypot(x - cx, y - cy), radius, 0.02);
        ASSERT_LE(y, cy + 1e-9);  // r >= 0 is drawn above the axis
    }
}

TEST(CliProfile, JsonRoundTrips)
{
    const auto r = invoke({"profile", "--family", "pseudosphere", "--format", "json", "--n", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["family"], "pseudosphere");
    EXPECT_EQ(j["K"], -1.0);
    EXPECT_EQ(j["rows"].size(), 4u);
    EXPECT_EQ(j.dump(2) + "\n", r.out);
}

TEST(CliProfile, BadInputExitsTwo)
{
    EXPECT_EQ(invoke({"profile", "--family", "cn", "--p", "1.5"}).code, 2);
    EXPECT_EQ(invoke({"profile", "--family", "cn", "--K", "2"}).code, 2);
    EXPECT_EQ(invoke({"profile", "--family", "torus"}).code, 2);
    EXPECT_EQ(invoke({"profile", "--format", "png"}).code, 2);
    EXPECT_EQ(invoke({"profile", "--n", "1"}).code, 2);
    EXPECT_EQ(invoke({"profile", "--range", "3:1"}).code, 2);
    EXPECT_EQ(invoke({"profile", "--range", "a:b"}).code, 2);
    // cn lives on (-K, K)
    EXPECT_EQ(invoke({"profile", "--family", "cn", "--range", "-5:5"}).code, 2);
}

TEST(CliSurface, PseudospherePatchCounts)
{
    const auto r = invoke({"surface", "--family", "pseudosphere", "--range", "0.2:3", "--n-s", "64", "--n-theta",
                           "64"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto obj = parse_obj(r.out);
    ASSERT_TRUE(obj.well_formed);
    EXPECT_EQ(obj.vertices.size(), 64u * 64u);
    EXPECT_EQ(obj.faces.size(), 2u * 63u * 64u);
    const auto rep = inspect(obj);
    EXPECT_TRUE(rep.indices_in_range);
    EXPECT_TRUE(rep.finite);
    EXPECT_EQ(rep.duplicate_positions, 0u);
    EXPECT_EQ(rep.nonmanifold_edges, 0u);
    EXPECT_TRUE(rep.consistently_oriented);
    EXPECT_EQ(rep.boundary_edges, 2u * 64u);
    EXPECT_EQ(rep.euler, 0);
}

TEST(CliSurface, VertexLinesUseNineSignificantDigits)
{
    const auto r = invoke({"surface", "--family", "sphere", "--n-s", "3", "--n-theta", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::regex vline(R"(v (-?[0-9.]+(e-?[0-9]+)?) (-?[0-9.]+(e-?[0-9]+)?) (-?[0-9.]+(e-?[0-9]+)?))");
    for (const auto& line : lines(r.out)) {
        if (line[0] == 'v') {
            ASSERT_TRUE(std::regex_match(line, vline)) << line;
            std::istringstream ls(line.substr(2));
            std::string tok;
            while (ls >> tok) {
                std::string digits;
                for (char ch : tok.substr(0, tok.find('e'))) {
                    if (std::isdigit(static_cast<unsigned char>(ch))) {
                        digits += ch;
                    }
                }
                digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
                ASSERT_LE(digits.size(), 9u) << tok;
                ASSERT_NE(tok, "-0");
            }
        }
    }
    const auto obj = parse_obj(r.out);
    ASSERT_EQ(obj.vertices.size(), 9u);
    EXPECT_NEAR(obj.vertices[0][0], 1.0 / std::cosh(3.0), 1e-9);
    EXPECT_NEAR(obj.vertices[0][2], std::tanh(-3.0), 1e-9);
}

TEST(CliSurface, SphereGridAndCappedTopology)
{
    const auto open = invoke({"surface", "--family", "sphere", "--n-s", "40", "--n-theta", "24"});
    ASSERT_EQ(open.code, 0) << open.err;
    const auto grid = inspect(parse_obj(open.out));
    EXPECT_EQ(grid.euler, 0);  // stitched annulus
    EXPECT_EQ(grid.boundary_edges, 2u * 24u);
    EXPECT_EQ(grid.nonmanifold_edges, 0u);
    EXPECT_EQ(grid.duplicate_positions, 0u);

    const auto closed = invoke({"surface", "--family", "sphere", "--n-s", "40", "--n-theta", "24", "--caps"});
    ASSERT_EQ(closed.code, 0) << closed.err;
    const auto obj = parse_obj(closed.out);
    EXPECT_EQ(obj.vertices.size(), 40u * 24u + 2u);
    EXPECT_EQ(obj.faces.size(), 2u * 39u * 24u + 2u * 24u);
    const auto rep = inspect(obj);
    EXPECT_EQ(rep.euler, 2);  // watertight sphere
    EXPECT_EQ(rep.boundary_edges, 0u);
    EXPECT_EQ(rep.nonmanifold_edges, 0u);
    EXPECT_TRUE(rep.consistently_oriented);
    EXPECT_TRUE(rep.indices_in_range);
}

TEST(CliSurface, TorusCurvatureWithinBounds)
{
    const fs::path dir = scratch_dir();
    const auto r = invoke({"surface", "--family", "tube-circle", "--R", "3", "--rho", "1", "--n-s", "48", "--n-theta",
                           "32", "--attributes", (dir / "attr.csv").string(), "-o", (dir / "torus.obj").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    const auto obj = parse_obj(slurp(dir / "torus.obj"));
    const auto rep = inspect(obj);
    EXPECT_EQ(obj.vertices.size(), 48u * 32u);
    EXPECT_EQ(rep.euler, 0);
    EXPECT_EQ(rep.boundary_edges, 0u);
    EXPECT_EQ(rep.duplicate_positions, 0u);
    EXPECT_TRUE(rep.consistently_oriented);

    const auto attr = lines(slurp(dir / "attr.csv"));
    ASSERT_EQ(attr.size(), obj.vertices.size() + 1);
    EXPECT_EQ(attr[0], "vertex,u,v,K,H");
    double k_min = 1e9;
    double k_max = -1e9;
    for (std::size_t i = 1; i < attr.size(); ++i) {
        std::vector<double> cols;
        std::istringstream ls(attr[i]);
        std::string tok;
        while (std::getline(ls, tok, ',')) {
            cols.push_back(std::stod(tok));
        }
        ASSERT_EQ(cols.size(), 5u);
        ASSERT_EQ(cols[0], static_cast<double>(i));
        k_min = std::min(k_min, cols[3]);
        k_max = std::max(k_max, cols[3]);
    }
    EXPECT_GE(k_min, -1.0 / (1.0 * (3.0 - 1.0)) - 1e-9);
    EXPECT_LE(k_max, 1.0 / (1.0 * (3.0 + 1.0)) + 1e-9);
    // the grid reaches both extremes (v = 0 and v = pi lie on it)
    EXPECT_NEAR(k_min, -0.5, 1e-9);
    EXPECT_NEAR(k_max, 0.25, 1e-9);
}

TEST(CliSurface, SingularPatchExitsThreeAndListsParameters)
{
    const auto r = invoke({"surface", "--family", "pseudosphere", "--range", "-1:3"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("s = 0"), std::string::npos) << r.err;

    const auto dn = invoke({"surface", "--family", "dn", "--K", "1", "--p", "0.5", "--range", "0:3.37"});
    EXPECT_EQ(dn.code, 3);
    EXPECT_NE(dn.err.find("0.842875177"), std::string::npos) << dn.err;

    EXPECT_EQ(invoke({"surface", "--family", "hyperbolic", "--p", "0.5", "--t", "0.3"}).code, 3);
    EXPECT_EQ(invoke({"surface", "--family", "hyperbolic", "--p", "0.5", "--t", "2.0"}).code, 3);
    EXPECT_EQ(invoke({"surface", "--family", "hyperbolic", "--p", "0.5", "--t", "1.0"}).code, 0);
}

TEST(CliSurface, BadInputExitsTwo)
{
    EXPECT_EQ(invoke({"surface", "--n-s", "1"}).code, 2);
    EXPECT_EQ(invoke({"surface", "--n-theta", "2"}).code, 2);
    EXPECT_EQ(invoke({"surface", "--format", "stl"}).code, 2);
    EXPECT_EQ(invoke({"surface", "--family", "tube-circle", "--R", "3", "--rho", "3"}).code, 2);
    EXPECT_EQ(invoke({"surface", "--family", "tube-line", "--rho", "0"}).code, 2);
    EXPECT_EQ(invoke({"surface", "--family", "tube-line", "--caps"}).code, 2);
}

TEST(CliClassify, SphereTriple)
{
    const auto r = invoke({"classify", "1", "0", "-1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) {
        keys.push_back(k);
    }
    const std::vector<std::string> expected{"a",       "b",       "c", "discriminant", "kind",
                                            "offsets", "K_at_cgc_offset", "constant_principal_curvature"};
    EXPECT_EQ(keys, expected);
    EXPECT_EQ(j["kind"], "ParallelToCGC");
    EXPECT_EQ(j["discriminant"], 1.0);
    ASSERT_EQ(j["offsets"].size(), 3u);
    EXPECT_EQ(j["offsets"][1]["label"], "cmc");
    EXPECT_EQ(j["offsets"][1]["t"], -1.0);
    EXPECT_EQ(j["offsets"][2]["t"], 1.0);
    EXPECT_EQ(j["K_at_cgc_offset"], 1.0);
    EXPECT_EQ(j.dump(2) + "\n", r.out);
}

TEST(CliClassify, TubularAndZero)
{
    const auto r = invoke({"classify", "1", "1", "1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["kind"], "Tubular");
    EXPECT_EQ(Json::parse(r.out)["constant_principal_curvature"], -1.0);
    EXPECT_EQ(invoke({"classify", "0", "0", "0"}).code, 2);
    EXPECT_EQ(invoke({"classify", "1", "0"}).code, 2);
    EXPECT_EQ(invoke({"classify", "1", "x", "0"}).code, 2);
}

TEST(CliParallel, TransformsTripleAndCurvatures)
{
    const auto r = invoke({"parallel", "1", "0", "-1", "--t", "0.5", "--K", "1", "--H", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["transformed"]["a"], 0.75);
    EXPECT_EQ(j["transformed"]["b"], -0.5);
    EXPECT_EQ(j["transformed"]["c"], -1.0);
    EXPECT_EQ(j["transformed_discriminant"], j["discriminant"]);
    EXPECT_DOUBLE_EQ(j["K_t"].get<double>(), 4.0);
    EXPECT_DOUBLE_EQ(j["H_t"].get<double>(), 2.0);
    // the unit sphere focalises at its centre
    EXPECT_EQ(invoke({"parallel", "1", "0", "-1", "--t", "1", "--K", "1", "--H", "1"}).code, 3);
    EXPECT_EQ(invoke({"parallel", "1", "0", "-1"}).code, 2);
    EXPECT_EQ(invoke({"parallel", "1", "0", "-1", "--t", "1", "--K", "1"}).code, 2);
    EXPECT_EQ(invoke({"parallel", "0", "0", "0", "--t", "1"}).code, 2);
}

TEST(CliHyperbolic, ImmersedMember)
{
    const auto r = invoke({"hyperbolic", "--p", "0.5", "--t", "1.0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_NEAR(j["safe_interval"][0].get<double>(), 0.5773503, 1e-7);
    EXPECT_NEAR(j["safe_interval"][1].get<double>(), 1.7320508, 1e-7);
    ASSERT_EQ(j["members"].size(), 1u);
    EXPECT_EQ(j["members"][0]["status"], "immersed");
    EXPECT_GT(j["members"][0]["min_speed"].get<double>(), 1e-3);
    EXPECT_GT(j["members"][0]["min_radius"].get<double>(), 1e-3);
    EXPECT_EQ(j.dump(2) + "\n", r.out);
}

TEST(CliHyperbolic, EmptyIntervalAndSingularMember)
{
    const auto wide = invoke({"hyperbolic", "--p", "0.8", "--t", "1.0"});
    ASSERT_EQ(wide.code, 0);
    EXPECT_TRUE(Json::parse(wide.out)["safe_interval"].is_null());

    const auto sing = invoke({"hyperbolic", "--p", "0.5", "--t", "0.3"});
    ASSERT_EQ(sing.code, 0);
    const Json m = Json::parse(sing.out)["members"][0];
    EXPECT_EQ(m["status"], "singular");
    ASSERT_TRUE(m["singular_s"].is_number());
    EXPECT_LE(m["singular_residual"].get<double>(), 1e-10);
    EXPECT_EQ(invoke({"hyperbolic", "--p", "1.0"}).code, 2);
}

TEST(CliHyperbolic, SvgMatchesGoldenAndObjPerImmersedMember)
{
    const fs::path dir = scratch_dir();
    const auto r = invoke({"hyperbolic", "--p", "0.5", "--t", "0.7", "1.0", "1.5", "0.3", "--svg",
                           (dir / "fig.svg").string(), "--obj-dir", (dir / "obj").string(), "--n-s", "32",
                           "--n-theta", "12"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto members = Json::parse(r.out)["members"];
    ASSERT_EQ(members.size(), 4u);
    for (std::size_t k = 0; k < 3; ++k) {
        ASSERT_TRUE(members[k]["obj"].is_string());
        const auto obj = parse_obj(slurp(members[k]["obj"].get<std::string>()));
        EXPECT_EQ(obj.vertices.size(), 32u * 12u);
        EXPECT_TRUE(inspect(obj).indices_in_range);
    }
    EXPECT_TRUE(members[3]["obj"].is_null());
    EXPECT_FALSE(fs::exists(dir / "obj" / "member_3.obj"));

    // three immersed members: same picture as the golden file
    const auto golden = invoke({"hyperbolic", "--p", "0.5", "--t", "0.7", "1.0", "1.5", "--svg",
                                (dir / "golden.svg").string()});
    ASSERT_EQ(golden.code, 0);
    EXPECT_EQ(slurp(dir / "golden.svg"), slurp(fs::path(WEINGARTEN_GOLDEN_DIR) / "hyperbolic_members.svg"));
}

TEST(CliVerify, TargetsFromTheContract)
{
    const auto ps = invoke({"verify", "--target", "pseudosphere"});
    ASSERT_EQ(ps.code, 0) << ps.out;
    const Json j = Json::parse(ps.out);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(j["checks"][0]["name"], "max_abs_K_error");
    EXPECT_LE(j["checks"][0]["value"].get<double>(), 1e-8);

    const auto bonnet = invoke({"verify", "--target", "bonnet", "--p", "0.6"});
    EXPECT_EQ(bonnet.code, 0) << bonnet.out;

    const auto bad = invoke({"verify", "--target", "corrupted-fixture"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_FALSE(Json::parse(bad.out)["pass"].get<bool>());

    EXPECT_EQ(invoke({"verify", "--target", "nonsense"}).code, 2);
    EXPECT_EQ(invoke({"verify"}).code, 2);
}

TEST(CliVerify, EverySuitePasses)
{
    const auto r = invoke({"verify", "--target", "all"});
    EXPECT_EQ(r.code, 0) << r.out;
}

TEST(CliVerify, ToleranceFromEnvironmentAndFlag)
{
    {
        const ScopedEnv env("WEINGARTEN_TOL", "1e-30");
        EXPECT_EQ(invoke({"verify", "--target", "sphere"}).code, 1);
        // the flag takes precedence over the environment
        EXPECT_EQ(invoke({"verify", "--target", "sphere", "--tol", "1e-6"}).code, 0);
        // other subcommands ignore the variable
        EXPECT_EQ(invoke({"classify", "1", "0", "-1"}).code, 0);
    }
    {
        const ScopedEnv env("WEINGARTEN_TOL", "abc");
        EXPECT_EQ(invoke({"verify", "--target", "sphere"}).code, 2);
    }
    {
        // a loose enough tolerance accepts the 2e-3 fault
        const ScopedEnv env("WEINGARTEN_TOL", "1e-2");
        EXPECT_EQ(invoke({"verify", "--target", "corrupted-fixture"}).code, 0);
    }
}

TEST(CliConfig, FileSuppliesDefaultsAndFlagsWin)
{
    const fs::path dir = scratch_dir();
    {
        std::ofstream cfg(dir / "profile.json");
        cfg << R"({"family": "dn", "K": -1, "p": 0.5, "range": "0:3.37", "n": 200, "format": "csv"})";
    }
    const auto from_file = invoke({"profile", "--config", (dir / "profile.json").string()});
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    const auto from_flags = invoke({"profile", "--family", "dn", "--K", "-1", "--p", "0.5", "--range", "0:3.37",
                                    "--n", "200", "--format", "csv"});
    EXPECT_EQ(from_file.out, from_flags.out);

    const auto override_n = invoke({"profile", "--config", (dir / "profile.json").string(), "--n", "10"});
    ASSERT_EQ(override_n.code, 0);
    EXPECT_EQ(lines(override_n.out).size(), 11u);

    {
        std::ofstream cfg(dir / "hyper.json");
        cfg << R"({"p": 0.5, "t": [0.7, 1.0]})";
    }
    const auto h = invoke({"hyperbolic", "--config", (dir / "hyper.json").string()});
    ASSERT_EQ(h.code, 0) << h.err;
    EXPECT_EQ(Json::parse(h.out)["members"].size(), 2u);

    {
        std::ofstream cfg(dir / "triple.json");
        cfg << R"({"a": 1, "b": 1, "c": 1})";
    }
    const auto c = invoke({"classify", "--config", (dir / "triple.json").string()});
    ASSERT_EQ(c.code, 0) << c.err;
    EXPECT_EQ(Json::parse(c.out)["kind"], "Tubular");

    {
        std::ofstream cfg(dir / "bad.json");
        cfg << R"({"famly": "dn"})";
    }
    EXPECT_EQ(invoke({"profile", "--config", (dir / "bad.json").string()}).code, 2);
    {
        std::ofstream cfg(dir / "broken.json");
        cfg << "{ not json";
    }
    EXPECT_EQ(invoke({"profile", "--config", (dir / "broken.json").string()}).code, 2);
    {
        std::ofstream cfg(dir / "invalid.json");
        cfg << R"({"family": "torus"})";
    }
    EXPECT_EQ(invoke({"profile", "--config", (dir / "invalid.json").string()}).code, 2);
    EXPECT_EQ(invoke({"profile", "--config", (dir / "missing.json").string()}).code, 2);
}

TEST(CliGeneral, HelpAndUsage)
{
    EXPECT_EQ(invoke({"--help"}).code, 0);
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"profile", "--bogus"}).code, 2);
}
