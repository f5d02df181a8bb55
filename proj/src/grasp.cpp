#include "regrasp/grasp.hpp"

#include "regrasp/kernels.hpp"
#include "regrasp/rng.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace regrasp {

bool force_closure(const Vec3& contact_a, const Vec3& normal_a,
                   const Vec3& contact_b, const Vec3& normal_b, double friction_mu) {
    const Vec3 line = contact_b - contact_a;
    const double len = line.norm();
    if (len < 1e-12) return false;
    const Vec3 d = line / len;
    const double cone = std::atan(friction_mu);
    // contact line must lie inside both friction cones; force at a pushes
    // along +d, at b along -d
    const double ang_a = std::acos(std::clamp(normal_a.dot(-d), -1.0, 1.0));
    const double ang_b = std::acos(std::clamp(normal_b.dot(d), -1.0, 1.0));
    return ang_a <= cone + 1e-12 && ang_b <= cone + 1e-12;
}

std::vector<Vec3> face_samples(const TriMesh& mesh, int face, double density, uint64_t seed) {
    const auto& f = mesh.faces[face];
    const Vec3& a = mesh.vertices[f[0]];
    const Vec3& b = mesh.vertices[f[1]];
    const Vec3& c = mesh.vertices[f[2]];
    const double area = mesh.face_area(face);
    const int n = std::max(1, static_cast<int>(std::lround(area * density)));
    const uint64_t offset = mix_seed(seed, static_cast<uint64_t>(face)) % 65536;
    std::vector<Vec3> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        double u = halton(offset + i + 1, 2);
        double v = halton(offset + i + 1, 3);
        if (u + v > 1.0) { u = 1.0 - u; v = 1.0 - v; }  // fold into the triangle
        out.push_back(a + u * (b - a) + v * (c - a));
    }
    return out;
}

Transform grasp_frame(const Vec3& contact_a, const Vec3& contact_b, int rotation,
                      int rotations_per_pair) {
    const Vec3 y = (contact_b - contact_a).normalized();
    // deterministic reference perpendicular: Gram-Schmidt on the axis least
    // aligned with y
    int k = 0;
    y.cwiseAbs().minCoeff(&k);
    const Vec3 ref = (Vec3::Unit(k) - y * y(k)).normalized();
    const double roll = 2.0 * M_PI * rotation / rotations_per_pair;
    const Vec3 z = Eigen::AngleAxisd(roll, y).toRotationMatrix() * ref;
    const Vec3 x = y.cross(z);
    Mat3 R;
    R.col(0) = x;
    R.col(1) = y;
    R.col(2) = z;
    Transform t;
    t.R = R;
    t.t = (contact_a + contact_b) / 2.0;
    return t;
}

namespace {

struct ContactPair {
    Vec3 a, b, na, nb;
    double jaw;
};

std::optional<double> ray_triangle(const Vec3& origin, const Vec3& dir,
                                   const Vec3& v0, const Vec3& v1, const Vec3& v2) {
    // Moller-Trumbore
    const Vec3 e1 = v1 - v0, e2 = v2 - v0;
    const Vec3 p = dir.cross(e2);
    const double det = e1.dot(p);
    if (std::abs(det) < 1e-14) return std::nullopt;
    const double inv = 1.0 / det;
    const Vec3 s = origin - v0;
    const double u = s.dot(p) * inv;
    if (u < -1e-10 || u > 1.0 + 1e-10) return std::nullopt;
    const Vec3 q = s.cross(e1);
    const double v = dir.dot(q) * inv;
    if (v < -1e-10 || u + v > 1.0 + 1e-10) return std::nullopt;
    const double t = e2.dot(q) * inv;
    if (t < 1e-9) return std::nullopt;
    return t;
}

std::vector<ContactPair> generate_contact_pairs(const TriMesh& mesh, const GripperSpec& gripper,
                                                const GraspParams& params) {
    std::vector<ContactPair> candidates;
    const int nf = static_cast<int>(mesh.faces.size());
    for (int f = 0; f < nf; ++f) {
        const Vec3 n = mesh.face_normal(f);
        for (const Vec3& p : face_samples(mesh, f, params.density, params.seed)) {
            const Vec3 dir = -n;
            for (int g = 0; g < nf; ++g) {
                if (g == f) continue;
                const auto& tg = mesh.faces[g];
                const auto hit = ray_triangle(p, dir, mesh.vertices[tg[0]],
                                              mesh.vertices[tg[1]], mesh.vertices[tg[2]]);
                if (!hit) continue;
                const double jaw = *hit;
                if (jaw < gripper.min_jawwidth || jaw > gripper.max_jawwidth) continue;
                const Vec3 q = p + jaw * dir;
                const Vec3 m = mesh.face_normal(g);
                if (!force_closure(p, n, q, m, params.friction_mu)) continue;
                candidates.push_back({p, q, n, m, jaw});
            }
        }
    }
    // canonical order, then greedy clustering: a candidate is dropped when a
    // kept pair has a nearby midpoint and an aligned contact axis
    std::sort(candidates.begin(), candidates.end(), [](const ContactPair& l, const ContactPair& r) {
        const Vec3 ml = (l.a + l.b) / 2.0, mr = (r.a + r.b) / 2.0;
        if (ml.x() != mr.x()) return ml.x() < mr.x();
        if (ml.y() != mr.y()) return ml.y() < mr.y();
        if (ml.z() != mr.z()) return ml.z() < mr.z();
        return l.a.x() < r.a.x();
    });
    std::vector<ContactPair> kept;
    for (const auto& c : candidates) {
        const Vec3 mid = (c.a + c.b) / 2.0;
        const Vec3 axis = (c.b - c.a).normalized();
        bool dup = false;
        for (const auto& k : kept) {
            const Vec3 kmid = (k.a + k.b) / 2.0;
            const Vec3 kaxis = (k.b - k.a).normalized();
            if ((mid - kmid).norm() < params.cluster_radius &&
                std::abs(axis.dot(kaxis)) > std::cos(0.0873)) {
                dup = true;
                break;
            }
        }
        if (!dup) kept.push_back(c);
    }
    return kept;
}

}  // namespace

std::vector<Grasp> synthesize_grasps(const TriMesh& mesh, const GripperSpec& gripper,
                                     const GraspParams& params) {
    const auto pairs = generate_contact_pairs(mesh, gripper, params);

    std::vector<Grasp> work(pairs.size() * params.rotations_per_pair);
    for (size_t i = 0; i < pairs.size(); ++i) {
        for (int r = 0; r < params.rotations_per_pair; ++r) {
            Grasp g;
            g.object_to_gripper = grasp_frame(pairs[i].a, pairs[i].b, r, params.rotations_per_pair);
            g.jawwidth = pairs[i].jaw;
            g.contact_a = pairs[i].a;
            g.contact_b = pairs[i].b;
            g.normal_a = pairs[i].na;
            g.normal_b = pairs[i].nb;
            work[i * params.rotations_per_pair + r] = g;
        }
    }

    const auto ok = grasp_clearance_sweep(mesh, gripper, work, params.pad_clearance, params.exec);

    std::vector<Grasp> out;
    for (size_t i = 0; i < work.size(); ++i) {
        if (!ok[i]) continue;
        bool dup = false;
        for (const auto& kept : out) {
            if ((kept.object_to_gripper.t - work[i].object_to_gripper.t).norm() < 1e-9 &&
                rotation_distance(kept.object_to_gripper.R, work[i].object_to_gripper.R) < 1e-9) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(work[i]);
    }
    return out;
}

bool revalidate_grasp(const Grasp& g, const TriMesh& mesh, const GripperSpec& gripper,
                      const GraspParams& params) {
    if (g.jawwidth < gripper.min_jawwidth || g.jawwidth > gripper.max_jawwidth) return false;
    if (std::abs((g.contact_a - g.contact_b).norm() - g.jawwidth) > 1e-6) return false;
    if (g.normal_a.dot(g.normal_b) >= 0.0) return false;
    if (!force_closure(g.contact_a, g.normal_a, g.contact_b, g.normal_b, params.friction_mu))
        return false;
    return gripper_object_clear(mesh, gripper, g.object_to_gripper, g.jawwidth,
                                params.pad_clearance);
}

}  // namespace regrasp
