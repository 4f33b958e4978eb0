#ifndef ATTACKSET_POLYTOPE_HPP
#define ATTACKSET_POLYTOPE_HPP

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

#include "attackset/tolerances.hpp"

namespace attackset {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Support value in a direction; `bounded == false` means +infinity.
struct SupportValue {
  bool bounded = true;
  double value = 0.0;
};

/// Convex polyhedron {x : normals * x <= offsets} with unit-norm rows.
///
/// Emptiness is decided at construction (phase-1 LP) and carried as an
/// explicit flag. A feasible system with zero rows is the whole space.
/// Degenerate (lower-dimensional) sets are legal values: a segment in the
/// plane carries an opposing pair of halfspaces plus end caps.
///
/// Instances are immutable after construction and safe to share across
/// threads. An optional vertex cache is attached by the factories that
/// compute one; queries never mutate.
class Polytope {
 public:
  Polytope() = default;

  /// Normalizes rows, drops zero normals (an unsatisfiable zero row makes
  /// the set empty) and runs the feasibility check.
  static Polytope from_halfspaces(Matrix normals, Vector offsets,
                                  const Tolerances& tol = default_tolerances());

  static Polytope empty_set(int dim);
  static Polytope whole_space(int dim);

  /// [-radius, radius]^dim.
  static Polytope unit_box(int dim, double radius = 1.0);

  static Polytope singleton(const Vector& point);

  /// Convex hull of a point cloud. Fewer than dim+1 affinely independent
  /// points produce a degenerate polytope (equality pairs added for the
  /// unused directions).
  static Polytope from_vertices(const std::vector<Vector>& points,
                                const Tolerances& tol = default_tolerances());

  /// Trusted constructor for internal call sites that already hold
  /// normalized rows and a known emptiness verdict. Skips all checks.
  static Polytope unchecked(int dim, Matrix normals, Vector offsets, bool empty,
                            std::optional<std::vector<Vector>> vertex_cache = std::nullopt,
                            std::optional<bool> bounded = std::nullopt);

  int dim() const { return dim_; }
  bool empty_flag() const { return empty_; }
  int num_halfspaces() const { return static_cast<int>(normals_.rows()); }
  const Matrix& normals() const { return normals_; }
  const Vector& offsets() const { return offsets_; }

  bool has_vertex_cache() const { return vertices_.has_value(); }
  const std::vector<Vector>& vertex_cache() const { return *vertices_; }
  std::optional<bool> bounded_hint() const { return bounded_; }

 private:
  int dim_ = 0;
  bool empty_ = true;
  Matrix normals_;  // one unit-norm row per halfspace
  Vector offsets_;
  std::optional<std::vector<Vector>> vertices_;
  std::optional<bool> bounded_;
};

/// h_P(v) = max{v.x : x in P}; unbounded directions are flagged.
/// Empty P is a domain error (the support of an empty set is undefined).
SupportValue support(const Polytope& p, const Vector& direction,
                     const Tolerances& tol = default_tolerances());

bool is_empty(const Polytope& p);

bool is_bounded(const Polytope& p, const Tolerances& tol = default_tolerances());

bool contains_point(const Polytope& p, const Vector& x,
                    const Tolerances& tol = default_tolerances());

/// Q subseteq P, tested by support(Q, n) <= b + incl per halfspace of P.
/// An empty Q is contained in everything.
bool contains_set(const Polytope& p, const Polytope& q,
                  const Tolerances& tol = default_tolerances());

bool set_equal(const Polytope& p, const Polytope& q,
               const Tolerances& tol = default_tolerances());

/// Convex compact set containing the origin.
bool is_c_set(const Polytope& p, const Tolerances& tol = default_tolerances());

/// C-set with the origin strictly inside.
bool is_pc_set(const Polytope& p, const Tolerances& tol = default_tolerances());

/// Exact vertex set (deduplicated). In the plane the order is canonical:
/// counter-clockwise starting from the lexicographically smallest vertex.
/// Pairwise halfspace intersection is used in 2-D; dimensions 3..8 use an
/// incremental double-description-style clipping. Unbounded input is a
/// domain error; dim > 8 is unsupported.
std::vector<Vector> vertices(const Polytope& p,
                             const Tolerances& tol = default_tolerances());

/// Drops every halfspace implied by the others (one LP per row). The set is
/// preserved exactly.
Polytope remove_redundancy(const Polytope& p,
                           const Tolerances& tol = default_tolerances());

/// JSON schema: {"dim": d, "empty": bool, "normals": [[...]], "offsets":
/// [...], "vertices": [[...]] (optional)}.
nlohmann::ordered_json to_json(const Polytope& p);
Polytope polytope_from_json(const nlohmann::json& j,
                            const Tolerances& tol = default_tolerances());

}  // namespace attackset

#endif  // ATTACKSET_POLYTOPE_HPP
