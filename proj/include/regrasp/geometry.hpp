#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace regrasp {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;
using Mat3 = Eigen::Matrix3d;

struct DegenerateGeometry : std::runtime_error {
    explicit DegenerateGeometry(const std::string& what) : std::runtime_error(what) {}
};

struct MeshError : std::runtime_error {
    explicit MeshError(const std::string& what) : std::runtime_error(what) {}
};

// Rigid transform: x_world = R * x_local + t.
struct Transform {
    Mat3 R = Mat3::Identity();
    Vec3 t = Vec3::Zero();

    static Transform identity() { return {}; }
    static Transform translation(const Vec3& v) { return {Mat3::Identity(), v}; }
    static Transform rotation(const Vec3& axis, double angle) {
        return {Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix(), Vec3::Zero()};
    }

    Transform operator*(const Transform& o) const { return {R * o.R, R * o.t + t}; }
    Transform inverse() const { return {R.transpose(), -(R.transpose() * t)}; }
    Vec3 apply(const Vec3& p) const { return R * p + t; }
    Vec3 rotate(const Vec3& v) const { return R * v; }
};

inline Transform compose(const Transform& a, const Transform& b) { return a * b; }

// Rotation matrix fixed to the Rx(rx)*Ry(ry)*Rz(rz) convention used for
// object poses throughout the library.
Transform euler_to_transform(const Vec3& p, const Vec3& r);

// Angle of the relative rotation between a and b, in [0, pi].
double rotation_distance(const Mat3& a, const Mat3& b);

// True if R is orthonormal with determinant +1 within tol.
bool is_rotation(const Mat3& R, double tol = 1e-9);

// Minimal rotation taking unit vector `from` onto unit vector `to`.
// Antiparallel case resolved by a deterministic perpendicular axis.
Mat3 rotation_between(const Vec3& from, const Vec3& to);

struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;
    Vec3 com = Vec3::Zero();

    Vec3 face_normal(int f) const;   // unit outward normal (CCW winding)
    double face_area(int f) const;
    Vec3 aabb_min() const;
    Vec3 aabb_max() const;
};

// Volume and volume centroid of a closed mesh (divergence theorem).
double mesh_volume(const TriMesh& m);
Vec3 mesh_volume_centroid(const TriMesh& m);

// Drops degenerate faces, validates indices, rejects NaNs; computes com from
// the volume centroid when `auto_com` is set.
TriMesh clean_mesh(TriMesh m, bool auto_com);

// ASCII STL / OFF readers (units: meters) and an OFF writer for fixtures.
TriMesh load_mesh(const std::string& path);               // dispatch on extension
TriMesh parse_off(const std::string& text, const std::string& name = "<off>");
TriMesh parse_stl_ascii(const std::string& text, const std::string& name = "<stl>");
void write_off(const TriMesh& m, const std::string& path);

// Axis-aligned box mesh, often used for tables, walls, and gripper parts.
TriMesh make_box(const Vec3& extents, const Vec3& center = Vec3::Zero());

struct HullFacet {
    Vec3 normal;                 // outward unit normal
    double offset = 0.0;         // plane: normal . x = offset
    std::vector<Vec3> polygon;   // support polygon vertices, CCW around normal
};

struct ConvexHull {
    std::vector<HullFacet> facets;
    std::vector<Vec3> points;    // source vertices (hull queries use these)
};

// Exact hull of the mesh vertices with coplanar facets merged
// (1e-6 rad normal deviation). Throws DegenerateGeometry when all
// points are coplanar.
ConvexHull convex_hull(const TriMesh& mesh);
ConvexHull convex_hull_points(std::span<const Vec3> points);

// Minimum distance between the convex hulls of two posed point sets (GJK).
double convex_distance(std::span<const Vec3> a, const Transform& ta,
                       std::span<const Vec3> b, const Transform& tb);

// margin > 0: true iff distance between the posed meshes is < margin.
// margin == 0: true iff the convex sets intersect (penetration test).
// Meshes are treated by their convex hulls (conservative for concave input).
bool collide(const TriMesh& a, const Transform& ta,
             const TriMesh& b, const Transform& tb, double margin);

bool collide_points(std::span<const Vec3> a, const Transform& ta,
                    std::span<const Vec3> b, const Transform& tb, double margin);

// Non-convex mesh against a convex part: per-triangle GJK, so concavities
// are respected on the mesh side. Same margin semantics as collide().
bool collide_mesh_convex(const TriMesh& mesh, const Transform& tm,
                         std::span<const Vec3> convex_pts, const Transform& tc,
                         double margin);

// Segment (capsule axis) against a convex point set; returns center distance.
double segment_convex_distance(const Vec3& s0, const Vec3& s1,
                               std::span<const Vec3> pts, const Transform& tp);

double segment_segment_distance(const Vec3& a0, const Vec3& a1,
                                const Vec3& b0, const Vec3& b1);

// Signed distance from point to a convex CCW polygon in 2D
// (positive inside, negative outside; magnitude = distance to boundary).
double polygon_signed_margin(const Vec2& p, std::span<const Vec2> polygon);

}  // namespace regrasp
