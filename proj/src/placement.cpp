#include "regrasp/placement.hpp"

#include <cmath>

namespace regrasp {

PoseGrid PoseGrid::regular(int n_r, int nx, int ny, const Vec2& center, const Vec2& extent,
                           double table_height) {
    PoseGrid g;
    g.n_r = n_r;
    g.rotation_step = 2.0 * M_PI / n_r;
    g.table_height = table_height;
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            const double fx = nx > 1 ? (double)i / (nx - 1) - 0.5 : 0.0;
            const double fy = ny > 1 ? (double)j / (ny - 1) - 0.5 : 0.0;
            g.positions.emplace_back(center.x() + fx * extent.x(), center.y() + fy * extent.y());
        }
    }
    return g;
}

std::vector<StablePlacement> plan_stable_placements(const TriMesh& mesh, double min_margin) {
    const ConvexHull hull = convex_hull(mesh);
    std::vector<StablePlacement> out;
    for (size_t f = 0; f < hull.facets.size(); ++f) {
        const HullFacet& facet = hull.facets[f];
        // rotate the facet normal onto -z
        const Mat3 R = rotation_between(facet.normal, Vec3(0, 0, -1));
        const Vec3 com_r = R * mesh.com;
        // facet plane height after rotation
        const double plane_z = (R * facet.polygon[0]).z();
        std::vector<Vec2> poly;
        poly.reserve(facet.polygon.size());
        for (const auto& v : facet.polygon) {
            const Vec3 r = R * v;
            poly.emplace_back(r.x(), r.y());
        }
        const Vec2 com_xy(com_r.x(), com_r.y());
        const double margin = polygon_signed_margin(com_xy, poly);
        if (margin < min_margin) continue;

        StablePlacement p;
        p.source_facet = static_cast<int>(f);
        p.stability_margin = margin;
        // center the projected com at the origin and rest the facet at z = 0
        p.object_to_table.R = R;
        p.object_to_table.t = Vec3(-com_xy.x(), -com_xy.y(), -plane_z);
        for (auto& v : poly) p.support_polygon.push_back(v - com_xy);
        out.push_back(std::move(p));
    }
    return out;
}

Transform placed_world(const StablePlacement& p, int rotation_id, double rotation_step,
                       const Vec2& position, double table_height) {
    const Transform spin = Transform::rotation(Vec3::UnitZ(), rotation_id * rotation_step);
    const Transform shift = Transform::translation({position.x(), position.y(), table_height});
    return shift * spin * p.object_to_table;
}

std::vector<ObjectPose> discretize(std::span<const StablePlacement> placements,
                                   const PoseGrid& grid) {
    std::vector<ObjectPose> out;
    out.reserve(placements.size() * grid.n_r * grid.positions.size());
    for (size_t p = 0; p < placements.size(); ++p) {
        for (int r = 0; r < grid.n_r; ++r) {
            for (size_t c = 0; c < grid.positions.size(); ++c) {
                ObjectPose pose;
                pose.placement_id = static_cast<int>(p);
                pose.rotation_id = r;
                pose.position_id = static_cast<int>(c);
                pose.world = placed_world(placements[p], r, grid.rotation_step,
                                          grid.positions[c], grid.table_height);
                out.push_back(pose);
            }
        }
    }
    return out;
}

bool recheck_stable(const TriMesh& mesh, const StablePlacement& p, const Transform& world,
                    double min_margin) {
    const Vec3 com_w = world.apply(mesh.com);
    // support polygon in world: placement polygon is centered at the com
    // projection, so transform it by the world xy motion
    const Transform rel = world * p.object_to_table.inverse();
    std::vector<Vec2> poly;
    for (const auto& v : p.support_polygon) {
        const Vec3 w = rel.apply(Vec3(v.x(), v.y(), 0.0));
        poly.emplace_back(w.x(), w.y());
    }
    // polygon may flip orientation under rotation about z only if mirrored,
    // which rigid transforms cannot do
    return polygon_signed_margin(Vec2(com_w.x(), com_w.y()), poly) >= min_margin;
}

}  // namespace regrasp
