#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "symkit/component.hpp"
#include "symkit/pencil.hpp"

namespace symkit {

/// A line in P^3, stored as the reduced row echelon form of a 2x4 span
/// matrix so equal lines compare equal.
class ProjLine {
 public:
  static ProjLine through(const VecX<GaussianRational>& p, const VecX<GaussianRational>& q);
  /// The common zeros of two independent linear forms (given as coefficient
  /// vectors).
  static ProjLine cut_out(const VecX<GaussianRational>& a, const VecX<GaussianRational>& b);
  /// Line from a 4x2 basis (columns span it).
  static ProjLine from_basis(const MatX<GaussianRational>& basis);

  const MatX<GaussianRational>& span() const { return span_; }
  VecX<GaussianRational> point(int k) const { return span_.row(k).transpose(); }
  bool contains(const VecX<GaussianRational>& p) const;
  bool is_real() const;
  ProjLine conj() const;
  /// Two independent linear forms vanishing on the line.
  MatX<GaussianRational> equations() const;
  std::string str() const;

  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.span_ == b.span_; }

 private:
  explicit ProjLine(MatX<GaussianRational> span) : span_(std::move(span)) {}
  MatX<GaussianRational> span_;
};

/// Incidence by the determinant of the four stacked span points.
bool lines_meet(const ProjLine& a, const ProjLine& b);
/// Incidence by intersecting the two kernels; the cross-check route.
bool lines_meet_by_kernel(const ProjLine& a, const ProjLine& b);

struct QuadricForm {
  GaussMatrix gram;

  int rank() const;
  MultiPoly poly() const { return quadratic_form(gram); }
  /// Kernel basis (columns); its projectivization is the singular locus.
  MatX<GaussianRational> singular_locus() const;
};

QuadricForm quadric_at(const SymmetricPencil& pencil, const VecX<GaussianRational>& x);

struct Rank2Pencil {
  int kind = 0;            // 1, 2 or 3
  int rank1_members = 0;   // 0, 1 or 2
  /// Linear form h with H = V(h); cases 1 and 2.
  std::optional<VecX<GaussianRational>> plane;
  ProjLine line = ProjLine::through(VecX<GaussianRational>::Unit(4, 0), VecX<GaussianRational>::Unit(4, 1));
  bool line_in_plane = false;
};

/// Trichotomy for a pencil of quadrics in P^3 whose general member has rank 2:
/// no rank-1 member gives a plane H and a line L not in H; one gives H and
/// a double line L inside H; two give a double line L. Throws
/// std::invalid_argument when the general member does not have rank 2.
Rank2Pencil classify_rank2_pencil(const GaussMatrix& q1, const GaussMatrix& q2);

struct BasePoint {
  VecX<GaussianRational> point;
  long length = 1;
  /// For a length-2 point, the line it spans.
  std::optional<ProjLine> tangent;
};

struct BaseLocus {
  std::vector<BasePoint> points;
  long total = 0;          // sum of the local lengths
  long degree = 0;         // from the Hilbert function
  bool residual = false;   // solutions outside Q(i) remain
};

/// Common zeros in P^3 of the web's quadrics. Throws PositiveDimensional
/// when they contain a curve.
BaseLocus web_base_locus(const SymmetricPencil& pencil);

/// Tangent line of a length-2 point: the directions v with v^T A_i p = 0.
std::optional<ProjLine> fat_point_line(const SymmetricPencil& pencil, const VecX<GaussianRational>& p);

struct SurfaceLines {
  ProjLine l1, l2;
  Rank2Pencil ruling1, ruling2;
  VecX<GaussianRational> point;  // where the two rulings were taken
};

/// The lines L1, L2 with L1 u L2 in the base locus of every member of a
/// smooth quadric surface Q of rank-2 points: through a Q(i) point of Q, one
/// pencil from each ruling is classified. Throws std::invalid_argument when
/// Q is not a smooth quadric surface, std::runtime_error when no Q(i) ruling
/// is found within the budget.
SurfaceLines rank2_surface_lines(const SymmetricPencil& pencil, const ComponentClaim& q, std::mt19937_64& rng,
                                 int budget = 50);

struct RealityFlags {
  bool l1_meets_conj_l1 = false;
  bool l2_meets_conj_l2 = false;
  bool l1_meets_conj_l2 = false;
};

RealityFlags reality_predicates(const ProjLine& l1, const ProjLine& l2);

/// Sufficient condition for Q to have no real points: L1 misses conj(L2)
/// and one of L1, L2 misses its own conjugate.
bool no_real_points_criterion(const RealityFlags& flags);

struct CyclideVerdict {
  bool criterion = false;
  /// For a real pencil and real Q the criterion must fail; true when it
  /// does (or when the test does not apply).
  bool consistent = true;
  bool applies = false;
  SurfaceLines lines;
};

CyclideVerdict cyclide_check(const SymmetricPencil& pencil, const ComponentClaim& q, std::mt19937_64& rng);

/// Linear systems whose general member has rank 2. Rank-1 members are
/// counted in the parameter space of the system: none, finitely many, or a
/// hypersurface of them.
struct Rank2System {
  int kind = 0;              // 1, 2 or 3, by the rank-1 members
  long rank1_points = 0;     // when finitely many
  bool rank1_hypersurface = false;
  /// A plane contained in the base locus, when there is one.
  std::optional<VecX<GaussianRational>> plane;
  /// A line along which every member is singular, when there is one.
  std::optional<ProjLine> double_line;
  std::optional<bool> line_in_plane;
};

Rank2System classify_rank2_system(const std::vector<GaussMatrix>& members);

/// A stratum of rank-2 quadrics inside the space of quadrics through a base
/// scheme, in coordinates z0..z5 of that space.
struct Stratum {
  std::string label;
  int dimension = -1;
  std::vector<GaussMatrix> span;
  std::vector<MultiPoly> ideal;
  bool rank2_samples = false;  // ten random members all have rank 2
};

struct StrataMeet {
  std::string surface, linear;
  bool is_line = false;
};

struct Strata {
  bool fat = false;
  bool coplanar = false;
  std::vector<GaussMatrix> basis;  // the six quadrics spanning the space
  std::vector<Stratum> surfaces;
  /// The planes X_i of four spanning points, or the single 3-space X.
  std::vector<Stratum> linear;
  std::vector<StrataMeet> meets;
  /// Two fat points: every other rank-2 quadric through the scheme is
  /// singular at one of the two points. Unset when the check ran out of
  /// budget.
  std::optional<bool> others_singular;
};

/// Strata of rank-2 quadrics through four simple points or two length-2
/// points. Throws std::invalid_argument for other base loci.
Strata strata_intersections(const BaseLocus& base, std::mt19937_64& rng);

/// The ideal in x0..xn of the points whose quadric sum x_i A_i lies in
/// V(ideal) of the strata space. Throws std::invalid_argument when some A_i
/// does not contain the base scheme.
std::vector<MultiPoly> pull_back(const SymmetricPencil& pencil, const Strata& strata,
                                 const std::vector<MultiPoly>& ideal);

/// z0..z5
const std::vector<std::string>& z_variables();

}  // namespace symkit
