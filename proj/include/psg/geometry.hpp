// Copyright (c) 2026 the psg authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE

#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace psg::geometry {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr int kWorldFrame = -1;

/// Direction vectors shorter than this are treated as degenerate.
inline constexpr double kDegenerateLength = 1e-12;

/// |sin(angle)| below this classifies two directions as parallel.
inline constexpr double kParallelSinTol = 1e-8;

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateSkeleton : GeometryError {
  using GeometryError::GeometryError;
};

struct InvalidSkeleton : GeometryError {
  using GeometryError::GeometryError;
};

struct NonOrthonormalRotation : GeometryError {
  using GeometryError::GeometryError;
};

enum class SkeletonKind { Point, Line, Plane };

const char* to_string(SkeletonKind kind);

/// A point, bounded line segment, or bounded plane segment. Inflated by
/// `radius` the center geometry describes a sphere, a capsule, or a rounded
/// cuboid face. Surface points are origin + s*dir_p + t*dir_q with
/// s,t in [0,1]; unused direction vectors are zero.
struct PrimitiveSkeleton {
  SkeletonKind kind = SkeletonKind::Point;
  Vec3 origin = Vec3::Zero();  // O
  Vec3 dir_p = Vec3::Zero();   // P, zero for points
  Vec3 dir_q = Vec3::Zero();   // Q, zero for points and lines
  double radius = 0.0;
  std::string name;
  int frame_id = kWorldFrame;
  std::vector<std::string> ignore;

  static PrimitiveSkeleton point(std::string name, const Vec3& origin,
                                 double radius, int frame_id = kWorldFrame);
  static PrimitiveSkeleton line(std::string name, const Vec3& origin,
                                const Vec3& dir, double radius,
                                int frame_id = kWorldFrame);
  static PrimitiveSkeleton plane(std::string name, const Vec3& origin,
                                 const Vec3& dir_p, const Vec3& dir_q,
                                 double radius, int frame_id = kWorldFrame);

  /// Surface-center point at (s, t); factors beyond the skeleton kind are
  /// ignored.
  Vec3 at(double s, double t = 0.0) const;

  /// ||P|| + ||Q||, an upper bound on the center geometry's diameter.
  double max_extent() const;

  bool ignores(const std::string& other) const;

  /// Throws DegenerateSkeleton / InvalidSkeleton when the type invariants
  /// (nonzero directions, P perpendicular Q, radius >= 0) are violated.
  void validate() const;
};

/// Closest-point segment between two skeletons: foot point `u` on skeleton i,
/// direction `w` toward the closest center point of skeleton j.
struct DistanceResult {
  Vec3 u = Vec3::Zero();
  Vec3 w = Vec3::Zero();
  double s_i = 0.0, t_i = 0.0;  // clamped factors on skeleton i
  double s_j = 0.0, t_j = 0.0;  // clamped factors on skeleton j
  double center_distance = 0.0;  // ||w||
  double surface_distance = 0.0;  // ||w|| - r_i - r_j, negative on penetration
};

/// Globally minimal center-to-center distance over the bounded domains,
/// for every kind pairing. Both skeletons must satisfy their invariants.
DistanceResult closest_points(const PrimitiveSkeleton& a,
                              const PrimitiveSkeleton& b);

/// Rigid transform of a skeleton into the world frame:
/// O' = t + R O, P' = R P, Q' = R Q. R must be orthonormal.
PrimitiveSkeleton transform_to_world(const PrimitiveSkeleton& ps,
                                     const Mat3& rotation,
                                     const Vec3& translation);

/// Sampling reference for closest_points: minimum pairwise distance over
/// uniform grids of both domains, minus both radii. Over-estimates the true
/// surface distance by at most ~2*max_extent/samples_per_axis.
double brute_force_distance(const PrimitiveSkeleton& a,
                            const PrimitiveSkeleton& b, int samples_per_axis);

}  // namespace psg::geometry
