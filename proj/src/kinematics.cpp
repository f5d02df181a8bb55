#include "regrasp/kinematics.hpp"

#include "regrasp/rng.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace regrasp {

double ArmModel::total_reach() const {
    double reach = 0.0;
    for (const auto& j : joints) reach += j.parent_to_joint.t.norm();
    reach += tool.t.norm();
    return reach;
}

bool ArmModel::within_limits(const Eigen::VectorXd& q, double slack) const {
    if (q.size() != dof()) return false;
    for (int i = 0; i < dof(); ++i) {
        if (q[i] < joints[i].lo - slack || q[i] > joints[i].hi + slack) return false;
    }
    return true;
}

Eigen::VectorXd ArmModel::clamp(Eigen::VectorXd q) const {
    for (int i = 0; i < dof(); ++i) q[i] = std::clamp(q[i], joints[i].lo, joints[i].hi);
    return q;
}

const ArmModel& RobotModel::arm(ArmId id) const {
    for (const auto& a : arms) {
        if (a.id == id) return a;
    }
    throw std::out_of_range(std::string("robot has no ") + arm_name(id) + " arm");
}

const GripperSpec& RobotModel::gripper(ArmId id) const {
    for (size_t i = 0; i < arms.size(); ++i) {
        if (arms[i].id == id) return grippers[i];
    }
    throw std::out_of_range(std::string("robot has no ") + arm_name(id) + " gripper");
}

bool RobotModel::has_arm(ArmId id) const {
    for (const auto& a : arms) {
        if (a.id == id) return true;
    }
    return false;
}

Transform fk(const ArmModel& arm, const Eigen::VectorXd& q) {
    if (!arm.within_limits(q)) throw JointLimit("fk: joint vector outside limits");
    Transform t = arm.base;
    for (int i = 0; i < arm.dof(); ++i) {
        t = t * arm.joints[i].parent_to_joint * Transform::rotation(arm.joints[i].axis, q[i]);
    }
    return t * arm.tool;
}

std::vector<Vec3> fk_joint_origins(const ArmModel& arm, const Eigen::VectorXd& q) {
    std::vector<Vec3> pts;
    pts.reserve(arm.dof() + 2);
    Transform t = arm.base;
    pts.push_back(t.t);
    for (int i = 0; i < arm.dof(); ++i) {
        t = t * arm.joints[i].parent_to_joint * Transform::rotation(arm.joints[i].axis, q[i]);
        pts.push_back(t.t);
    }
    pts.push_back((t * arm.tool).t);
    return pts;
}

Eigen::Matrix<double, 6, Eigen::Dynamic> jacobian(const ArmModel& arm, const Eigen::VectorXd& q) {
    if (!arm.within_limits(q)) throw JointLimit("jacobian: joint vector outside limits");
    const int n = arm.dof();
    Eigen::Matrix<double, 6, Eigen::Dynamic> J(6, n);
    Transform t = arm.base;
    std::vector<Vec3> axes(n), origins(n);
    for (int i = 0; i < n; ++i) {
        t = t * arm.joints[i].parent_to_joint;
        axes[i] = t.R * arm.joints[i].axis;
        origins[i] = t.t;
        t = t * Transform::rotation(arm.joints[i].axis, q[i]);
    }
    const Vec3 tool_pos = (t * arm.tool).t;
    for (int i = 0; i < n; ++i) {
        J.block<3, 1>(0, i) = axes[i].cross(tool_pos - origins[i]);
        J.block<3, 1>(3, i) = axes[i];
    }
    return J;
}

Vec3 rotation_error(const Mat3& target, const Mat3& current) {
    const Mat3 r = target * current.transpose();
    const double c = std::clamp((r.trace() - 1.0) / 2.0, -1.0, 1.0);
    const double angle = std::acos(c);
    Vec3 axis(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
    const double s = axis.norm();
    if (angle < 1e-9) return 0.5 * axis;
    if (s < 1e-9) {
        // angle ~ pi: extract axis from the diagonal
        int k = 0;
        r.diagonal().maxCoeff(&k);
        Vec3 a = Vec3::Zero();
        a[k] = std::sqrt(std::max(0.0, (r(k, k) + 1.0) / 2.0));
        for (int i = 0; i < 3; ++i) {
            if (i != k && a[k] > 1e-12) a[i] = r(k, i) / (2.0 * a[k]);
        }
        return angle * a.normalized();
    }
    return (angle / s) * axis;
}

std::optional<ArmConfig> ik(const ArmModel& arm, const Transform& target,
                            const Eigen::VectorXd& seed_q, const IkParams& params) {
    if (!target.t.allFinite()) return std::nullopt;
    // quick workspace reject
    if ((target.t - arm.base.t).norm() > arm.total_reach() + 1e-9) return std::nullopt;

    const int n = arm.dof();
    const Eigen::VectorXd seed = arm.clamp(seed_q);
    static const uint32_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};

    for (int restart = 0; restart < params.max_restarts; ++restart) {
        Eigen::VectorXd q = seed;
        if (restart > 0) {
            for (int i = 0; i < n; ++i) {
                const double span = std::min(arm.joints[i].hi - arm.joints[i].lo, 2.0 * M_PI);
                const double h = halton(restart, primes[i % 9]) - 0.5;
                q[i] += h * span * (0.25 + 0.75 * restart / params.max_restarts);
            }
            q = arm.clamp(q);
        }
        for (int iter = 0; iter < params.max_iterations; ++iter) {
            const Transform cur = fk(arm, q);
            Eigen::Matrix<double, 6, 1> err;
            err.head<3>() = target.t - cur.t;
            err.tail<3>() = rotation_error(target.R, cur.R);
            if (err.head<3>().norm() <= params.pos_tol && err.tail<3>().norm() <= params.rot_tol) {
                return ArmConfig{arm.id, q, 0.0};
            }
            const auto J = jacobian(arm, q);
            const Eigen::Matrix<double, 6, 6> A =
                J * J.transpose() +
                params.damping * params.damping * Eigen::Matrix<double, 6, 6>::Identity();
            Eigen::VectorXd dq = J.transpose() * A.ldlt().solve(err);
            const double m = dq.cwiseAbs().maxCoeff();
            if (m > params.step_clip) dq *= params.step_clip / m;
            q = arm.clamp(q + dq);
        }
    }
    return std::nullopt;
}

Transform object_frame_grasp(const Transform& object_world, const ArmConfig& config,
                             const RobotModel& robot) {
    return object_world.inverse() * fk(robot.arm(config.arm), config.q);
}

Transform object_frame_grasp(const ObjectPose& pose, const ArmConfig& config,
                             const RobotModel& robot) {
    return object_frame_grasp(pose.world, config, robot);
}

}  // namespace regrasp
