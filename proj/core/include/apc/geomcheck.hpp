#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "apc/eschenburg.hpp"

namespace apc {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Cplx = std::complex<double>;

/// Cheeger deformation parameters lambda_i = t_i / (t_i + 1), both in (0,1).
struct MetricParams {
  double lambda1 = 0.5;
  double lambda2 = 0.5;
};

/// <X,Y>_0 = -Tr(XY); real for skew-Hermitian arguments.
double inner0(const CMat& X, const CMat& Y);

CMat bracket(const CMat& X, const CMat& Y);
CMat ad(const CMat& B, const CMat& X);      // B X B^{-1} for unitary B
CMat ad_inv(const CMat& B, const CMat& X);  // B^{-1} X B

double skew_residual(const CMat& X);     // ||X + X*||
double unitary_residual(const CMat& B);  // ||B*B - I||

/// Real orthogonal frame diag(A(t,r), I_{n-2}) of size (n+1); n >= 2.
CMat frame_point(double t, double r, int n);

/// k = u(1) + u(n) block diagonal part, p = first row/column remainder.
std::pair<CMat, CMat> split_kp(const CMat& X);
/// h = u(1) + u(1) + u(n-1) diagonal blocks, m = everything else.
std::pair<CMat, CMat> split_hm(const CMat& X);
/// The part of the u(n) block off its u(1)+u(n-1) diagonal: entries (2,j),
/// (j,2) for j >= 3 in 1-based terms.  This is the m-part that the two-stage
/// deformation bracket condition constrains for matrices already known to be
/// horizontal; see kerin_residuals.
CMat km_part(const CMat& X);

CMat phi1(const CMat& X, const MetricParams& mp);
CMat phi1_inv(const CMat& X, const MetricParams& mp);
CMat psi(const CMat& X, const MetricParams& mp);

/// Named nonnegative residuals, one per checked condition.
struct ResidualReport {
  std::vector<std::pair<std::string, double>> entries;
  double max_residual() const;
  void add(const std::string& name, double value) { entries.emplace_back(name, value); }
};

/// Scale-normalized measure of real linear dependence of two complex vectors
/// (norm of the wedge of their real flattenings).
double dependence_residual(const CVec& u, const CVec& v);

/// Zero-curvature conditions for the one-stage deformation metric:
/// horizontality, [X,Y] = 0, and linear dependence of the p-parts before and
/// after conjugation by B^{-1}.
ResidualReport wilking_residuals(const CMat& B, const CMat& X, const CMat& Y,
                                 const Triple& tri, const MetricParams& mp);

/// Conditions for the two-stage metric: phi1-twisted horizontality and
/// conjugated dependence, plus the extra h/m bracket condition.
ResidualReport kerin_residuals(const CMat& B, const CMat& X, const CMat& Y,
                               const Triple& tri, const MetricParams& mp);

enum class PlaneType { I, II, III, IV, V };

/// A concrete plane candidate in the shape of the horizontal zero-curvature
/// classification: X carries (alpha, x2..x_{n+1}), Y carries (beta,
/// y3..y_{n+1}); epsilon = 1 for type IV and 0 for type V.
struct PlaneCandidate {
  PlaneType type = PlaneType::IV;
  double alpha = 0;
  double beta = 0;
  std::vector<Cplx> x;  // x[0] = x_2, x[1] = x_3, ...
  std::vector<Cplx> y;  // y[0] = y_3, ...
  double t = 0, r = 0;  // frame parameters

  int epsilon() const { return type == PlaneType::IV ? 1 : 0; }
  CMat X_matrix(int n) const;
  CMat Y_matrix(int n) const;
};

/// The two horizontality left-hand sides for a type IV/V candidate at the
/// frame A(t,r); both vanish iff the plane is horizontal.
std::pair<double, double> horizontality_scalars(double t, double r, const Triple& tri,
                                                const PlaneCandidate& cand,
                                                const MetricParams& mp);

struct VWResult {
  CVec V, W;          // closed-form vectors
  CVec V_direct, W_direct;  // extracted from the conjugated matrices
  std::string matched_entries;  // which entries of the conjugated matrices matched
  double discrepancy = 0;
};

/// Closed-form V and W plus a from-first-principles cross-check against the
/// p-part of Ad_{B^{-1}} phi1(X) and Ad_{B^{-1}} Y.
VWResult vw_vectors(double t, double r, const PlaneCandidate& cand, const Triple& tri,
                    const MetricParams& mp);

struct PlaneRejection : std::runtime_error {
  enum class Reason { Inadmissible, ExcludedTriple, NegativeF, DegenerateDenominator, DegenerateFrame };
  Reason reason;
  PlaneRejection(Reason r, const std::string& msg) : std::runtime_error(msg), reason(r) {}
};

struct ConstructedPlane {
  PlaneCandidate cand;
  ResidualReport residuals;
  Rat f_value;  // exact f(x, y) >= 0
};

/// Realizes the zero-curvature plane at the interior rational point (x, y)
/// when f(x, y) >= 0 (checked exactly); rejects negative f and vanishing
/// denominators with a diagnostic.
ConstructedPlane construct_zero_plane(const Triple& tri, const Rat& x, const Rat& y,
                                      const MetricParams& mp, int n = 2);

/// The explicit everywhere-flat plane family of the (1,1,0) space.
ResidualReport w0_plane_110(double t, double r, const MetricParams& mp, int n = 2);

struct A0Report {
  std::vector<double> solution_constant;  // u with y3 = 0
  std::vector<double> solution_re_y3;     // d u / d Re(y3)
  std::vector<double> solution_im_y3;     // d u / d Im(y3)
  double printed_solution_residual = 0;   // against the closed-form vector
  std::vector<double> im_y3_candidates;   // roots of the quadratic constraint
  std::vector<double> re_y3_squared;      // forced values, both negative
  bool contradiction = false;             // positive curvature confirmed at A0
};

/// Fixed n = 2 check at A0 = A(3 pi/4, pi/4) with exponents (1,-1,-1)/(0,0):
/// solves the four horizontality/dependence equations for the plane data in
/// terms of y3 and confirms that Re(y3)^2 would have to be negative.
A0Report quasipositive_A0_check();

struct DetReport {
  double assembled = 0;       // determinant of the assembled 3x3 system
  double closed_printed = 0;  // (p-2q1) cos^2 r cos^3 t + q1 cos^3 t
  double closed_derived = 0;  // cos r cos t ((p-2q1) cos^2 r cos^2 t + q1)
};

/// Assembles the three-equation system of the V = 0 analysis and compares its
/// determinant against the printed closed form and the rederived one.
DetReport small_det_check(double t, double r, const Triple& tri);

/// Seeded random skew-Hermitian matrix with O(1) entries.
CMat random_skew(int n, std::mt19937_64& rng);

}  // namespace apc
