#pragma once

#include "regrasp/geometry.hpp"

namespace regrasp {

// One resting pose of the object on a horizontal table. object_to_table maps
// the object frame to a canonical table-contact frame: the supporting hull
// facet faces -z, its plane sits at z = 0, and the com projects to (0, 0).
struct StablePlacement {
    Transform object_to_table;
    std::vector<Vec2> support_polygon;   // CCW, table frame
    double stability_margin = 0.0;       // com projection to polygon boundary
    int source_facet = -1;               // hull facet index
};

struct PoseGrid {
    int n_r = 8;                     // rotations about the vertical axis
    double rotation_step = 0.0;      // 2*pi / n_r
    std::vector<Vec2> positions;     // table xy coordinates
    double table_height = 0.0;

    int n_p() const { return static_cast<int>(positions.size()); }
    static PoseGrid regular(int n_r, int nx, int ny, const Vec2& center, const Vec2& extent,
                            double table_height);
};

// One modal object pose: (placement, rotation, position) plus the composed
// world transform.
struct ObjectPose {
    int placement_id = 0;
    int rotation_id = 0;
    int position_id = 0;
    Transform world;
};

inline int flat_pose_id(const ObjectPose& p, int n_r, int n_p) {
    return (p.placement_id * n_r + p.rotation_id) * n_p + p.position_id;
}

// One placement per convex-hull facet whose com projection lies inside the
// facet polygon with at least min_margin. Symmetric duplicates are kept.
std::vector<StablePlacement> plan_stable_placements(const TriMesh& mesh, double min_margin);

// Full pose set: |placements| x n_r x n_p, placement-major order.
std::vector<ObjectPose> discretize(std::span<const StablePlacement> placements,
                                   const PoseGrid& grid);

// World transform for one (placement, rotation, position) triple.
Transform placed_world(const StablePlacement& p, int rotation_id, double rotation_step,
                       const Vec2& position, double table_height);

// Static re-check used by tests and query validation: under pose.world the
// com still projects inside the support polygon.
bool recheck_stable(const TriMesh& mesh, const StablePlacement& p, const Transform& world,
                    double min_margin);

}  // namespace regrasp
