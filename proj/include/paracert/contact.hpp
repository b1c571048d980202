#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace paracert::contact {

/// A point of R^4 in coordinates (x1, y1, x2, y2).
struct Point4 {
    double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0;

    bool operator==(const Point4&) const = default;
};

/// A tangent 4-vector, same coordinate order as Point4.
struct Vec4 {
    double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0;

    bool operator==(const Vec4&) const = default;
};

/// |x1^2 + y1^2 + x2^2 + y2^2 - 1|
double sphere_deviation(const Point4& p);

/// Tolerance for the on-sphere precondition of frame evaluation.
inline constexpr double kOnSphereTol = 1e-12;

/// The adapted frame at a base point of S^3, with named residual
/// diagnostics (tangency, orthogonality, unit norms).
struct Frame3At {
    Point4 base;
    Vec4 e1, e2, e3;
    std::map<std::string, double> residuals;
};

/// Evaluate the adapted frame
///   e1 = x1 d_y1 - y1 d_x1 + x2 d_y2 - y2 d_x2   (Reeb direction)
///   e2 = x1 d_x2 - x2 d_x1 + y2 d_y1 - y1 d_y2
///   e3 = x1 d_y2 - y2 d_x1 + y1 d_x2 - x2 d_y1
/// at p. Throws std::domain_error if p is off the sphere beyond
/// kOnSphereTol.
Frame3At frame_at(const Point4& p);

/// The same frame via quaternions: with n = x1 + y1 i + x2 j + y2 k,
/// the left products i n, j n, k n projected back to coordinates equal
/// e1, e2, e3 exactly (no sign adjustments needed). Residuals carry the
/// componentwise deviation from frame_at.
Frame3At quaternion_frame(const Point4& p);

/// The standard contact form evaluated on v at p:
/// alpha = x1 dy1 - y1 dx1 + x2 dy2 - y2 dx2.
double alpha(const Point4& p, const Vec4& v);

/// Its exterior derivative, dalpha = 2 (dx1^dy1 + dx2^dy2), evaluated
/// on the pair (u, v). Constant in p; the parameter mirrors alpha's
/// signature.
double d_alpha(const Point4& p, const Vec4& u, const Vec4& v);

/// Per-point residuals of every frame identity, plus the
/// finite-difference cross-check of d_alpha against alpha.
struct PointChecks {
    double tangency = 0.0;
    double orthonormality = 0.0;
    double alpha_e1 = 0.0;
    double alpha_e23 = 0.0;
    double dalpha_e2e3 = 0.0;
    double quaternion_agreement = 0.0;
    double fd_dalpha = 0.0;
};

PointChecks check_point(const Point4& p);

/// Deterministic uniform points on S^3: four Box-Muller normals per
/// point from a seeded mt19937_64, normalized.
std::vector<Point4> sample_sphere(std::size_t count, std::uint64_t seed);

struct CheckResult {
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct FrameCheckReport {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::map<std::string, CheckResult> checks;
    bool all_pass = false;
};

/// Draw `samples` seeded points on S^3 and report the max residual per
/// check. Exact-identity checks are held to 1e-10, the
/// finite-difference dalpha check (step 1e-6) to 1e-5, and quaternion
/// agreement to 1e-12. The batched exact checks run through the
/// dispatched SIMD kernel.
FrameCheckReport verify_frame_properties(std::size_t samples,
                                         std::uint64_t seed);

}  // namespace paracert::contact
