#include "scene.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace weingarten::cli {

Range parse_range(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw BadInput(fmt::format("range must look like a:b, got '{}'", text));
    }
    Range r;
    try {
        std::size_t used = 0;
        const std::string a = text.substr(0, colon);
        const std::string b = text.substr(colon + 1);
        r.lo = std::stod(a, &used);
        if (used != a.size()) {
            throw std::invalid_argument(a);
        }
        r.hi = std::stod(b, &used);
        if (used != b.size()) {
            throw std::invalid_argument(b);
        }
    } catch (const std::logic_error&) {
        throw BadInput(fmt::format("range must look like a:b, got '{}'", text));
    }
    if (!(std::isfinite(r.lo) && std::isfinite(r.hi) && r.lo < r.hi)) {
        throw BadInput(fmt::format("range needs finite a < b, got '{}'", text));
    }
    return r;
}

bool is_tube(const std::string& family)
{
    return family == "tube-line" || family == "tube-circle";
}

namespace {

int checked_K(int K)
{
    if (K != 1 && K != -1) {
        throw BadInput(fmt::format("--K must be 1 or -1, got {}", K));
    }
    return K;
}

}  // namespace

ResolvedProfile resolve_profile(const FamilySpec& spec)
{
    const std::string& f = spec.family;
    if (f == "cn") {
        return {profile_cn(checked_K(spec.K), make_modulus(spec.p)), std::nullopt};
    }
    if (f == "dn") {
        return {profile_dn(checked_K(spec.K), make_modulus(spec.p)), std::nullopt};
    }
    if (f == "sphere") {
        return {profile_sphere(), std::nullopt};
    }
    if (f == "pseudosphere") {
        return {profile_pseudosphere(), std::nullopt};
    }
    if (f == "catenoid") {
        return {profile_catenoid(), std::nullopt};
    }
    if (f == "hyperbolic") {
        if (!std::isfinite(spec.t)) {
            throw BadInput("--t must be finite");
        }
        FamilyMember member = family_member(make_modulus(spec.p), spec.t);
        ProfileCurve profile = member.profile;
        return {std::move(profile), std::move(member)};
    }
    throw BadInput(fmt::format("unknown profile family '{}'", f));
}

Range default_range(const FamilySpec& spec, const ResolvedProfile& resolved)
{
    const std::string& f = spec.family;
    if (f == "sphere") {
        return {-3.0, 3.0};
    }
    if (f == "pseudosphere") {
        return {0.2, 3.0};
    }
    if (f == "catenoid") {
        return {-2.0, 2.0};
    }
    if (f == "hyperbolic") {
        return {0.0, resolved.member->s_period};
    }
    const double K = resolved.profile.modulus()->complete_K();
    if (f == "cn") {
        return spec.K > 0 ? Range{-0.99 * K, 0.99 * K} : Range{0.01 * K, 0.99 * K};
    }
    const double pK = spec.p * K;
    return spec.K > 0 ? Range{-0.99 * pK, 0.99 * pK} : Range{0.02 * pK, 1.98 * pK};
}

std::vector<double> singular_parameters(const ResolvedProfile& resolved, Range range, std::size_t n)
{
    std::vector<double> out;
    if (resolved.member) {
        out = singular_points(*resolved.member, range.lo, range.hi);
    } else if (const auto& lattice = resolved.profile.singular()) {
        if (lattice->spacing > 0.0) {
            const double k0 = std::ceil((range.lo - lattice->offset) / lattice->spacing);
            for (double k = k0;; k += 1.0) {
                const double s = lattice->offset + k * lattice->spacing;
                if (s > range.hi) {
                    break;
                }
                out.push_back(s);
            }
        } else if (lattice->offset >= range.lo && lattice->offset <= range.hi) {
            out.push_back(lattice->offset);
        }
    }
    // Zeros of r put the profile on the rotation axis.
    const std::vector<double> s = linspace(range.lo, range.hi, std::max<std::size_t>(n, 2) * 8);
    double prev = resolved.profile.eval(s.front()).r;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double r = i == 0 ? prev : resolved.profile.eval(s[i]).r;
        if (r == 0.0 || (i > 0 && (r < 0.0) != (prev < 0.0))) {
            out.push_back(s[i]);
        }
        prev = r;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t n)
{
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

Mesh grid_mesh(const Surface& surface, const std::vector<double>& u, std::size_t n_v, bool wrap_u,
               std::optional<std::array<Vec3, 2>> caps)
{
    const std::size_t n_u = u.size();
    Mesh mesh;
    mesh.vertices.reserve(n_u * n_v + 2);
    for (std::size_t i = 0; i < n_u; ++i) {
        for (std::size_t j = 0; j < n_v; ++j) {
            const double v = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_v);
            mesh.vertices.push_back(surface.point(u[i], v));
            mesh.u.push_back(u[i]);
            mesh.v.push_back(v);
        }
    }
    mesh.grid_vertices = mesh.vertices.size();

    const auto idx = [n_u, n_v](std::size_t i, std::size_t j) { return (i % n_u) * n_v + (j % n_v); };
    const std::size_t rows = wrap_u ? n_u : n_u - 1;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n_v; ++j) {
            const std::size_t a = idx(i, j);
            const std::size_t b = idx(i + 1, j);
            const std::size_t c = idx(i + 1, j + 1);
            const std::size_t d = idx(i, j + 1);
            mesh.faces.push_back({a, b, c});
            mesh.faces.push_back({a, c, d});
        }
    }
    if (caps && !wrap_u) {
        const std::size_t lo = mesh.vertices.size();
        mesh.vertices.push_back((*caps)[0]);
        const std::size_t hi = mesh.vertices.size();
        mesh.vertices.push_back((*caps)[1]);
        for (std::size_t j = 0; j < n_v; ++j) {
            mesh.faces.push_back({lo, idx(0, j), idx(0, j + 1)});
            mesh.faces.push_back({hi, idx(n_u - 1, j + 1), idx(n_u - 1, j)});
        }
    }
    return mesh;
}

std::string num(double v)
{
    return fmt::format("{:.9g}", v + 0.0);
}

std::string to_obj(const Mesh& mesh)
{
    std::string out;
    out.reserve(mesh.vertices.size() * 40 + mesh.faces.size() * 24);
    for (const Vec3& x : mesh.vertices) {
        out += fmt::format("v {} {} {}\n", num(x.x()), num(x.y()), num(x.z()));
    }
    for (const auto& f : mesh.faces) {
        out += fmt::format("f {} {} {}\n", f[0] + 1, f[1] + 1, f[2] + 1);
    }
    return out;
}

}  // namespace weingarten::cli
