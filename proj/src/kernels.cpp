#include "regrasp/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <thread>

namespace regrasp {

int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return static_cast<int>(std::thread::hardware_concurrency());
#endif
}

bool gripper_object_clear(const TriMesh& mesh, const GripperSpec& gripper,
                          const Transform& object_to_gripper, double jaw, double pad_clearance) {
    for (const auto& part : gripper.body_parts(jaw, pad_clearance)) {
        if (collide_mesh_convex(mesh, Transform::identity(), part.vertices, object_to_gripper,
                                0.0)) {
            return false;
        }
    }
    return true;
}

std::vector<char> grasp_clearance_sweep_serial(const TriMesh& mesh, const GripperSpec& gripper,
                                               std::span<const Grasp> candidates,
                                               double pad_clearance) {
    std::vector<char> ok(candidates.size(), 0);
    for (size_t i = 0; i < candidates.size(); ++i) {
        ok[i] = gripper_object_clear(mesh, gripper, candidates[i].object_to_gripper,
                                     candidates[i].jawwidth, pad_clearance);
    }
    return ok;
}

std::vector<char> grasp_clearance_sweep_parallel(const TriMesh& mesh, const GripperSpec& gripper,
                                                 std::span<const Grasp> candidates,
                                                 double pad_clearance) {
    std::vector<char> ok(candidates.size(), 0);
    const auto n = static_cast<long long>(candidates.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < n; ++i) {
        ok[i] = gripper_object_clear(mesh, gripper, candidates[i].object_to_gripper,
                                     candidates[i].jawwidth, pad_clearance);
    }
    return ok;
}

}  // namespace regrasp
