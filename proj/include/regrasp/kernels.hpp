#pragma once

#include "regrasp/exec.hpp"
#include "regrasp/grasp.hpp"

#include <span>
#include <vector>

namespace regrasp {

// Data-parallel sweeps on independent items. Each sweep has an OpenMP kernel
// and a plain serial reference; outputs are bit-identical, so the graph cache
// stays byte-stable no matter which one runs. tools/bench_kernels compares
// their wall times.

// Gripper-vs-object clearance for a batch of candidate grasps.
std::vector<char> grasp_clearance_sweep_serial(const TriMesh& mesh, const GripperSpec& gripper,
                                               std::span<const Grasp> candidates,
                                               double pad_clearance);
std::vector<char> grasp_clearance_sweep_parallel(const TriMesh& mesh, const GripperSpec& gripper,
                                                 std::span<const Grasp> candidates,
                                                 double pad_clearance);

inline std::vector<char> grasp_clearance_sweep(const TriMesh& mesh, const GripperSpec& gripper,
                                               std::span<const Grasp> candidates,
                                               double pad_clearance, Exec exec) {
    return exec == Exec::parallel
               ? grasp_clearance_sweep_parallel(mesh, gripper, candidates, pad_clearance)
               : grasp_clearance_sweep_serial(mesh, gripper, candidates, pad_clearance);
}

bool gripper_object_clear(const TriMesh& mesh, const GripperSpec& gripper,
                          const Transform& object_to_gripper, double jaw, double pad_clearance);

}  // namespace regrasp
