#include "apc/geomcheck.hpp"

#include <cmath>

namespace apc {

namespace {

constexpr Cplx kI{0.0, 1.0};

double frob(const CMat& X) { return X.norm(); }

long to_long(const Int& v) { return static_cast<long>(v.get_si()); }

CMat circle_generator_left(const Triple& tri, int n) {
  CMat P = CMat::Zero(n + 1, n + 1);
  P(0, 0) = Cplx(static_cast<double>(to_long(tri.p)), 0);
  return P;
}

CMat circle_generator_right(const Triple& tri, int n) {
  CMat Q = CMat::Zero(n + 1, n + 1);
  Q(0, 0) = Cplx(static_cast<double>(to_long(tri.q1)), 0);
  Q(1, 1) = Cplx(static_cast<double>(to_long(tri.q2)), 0);
  return Q;
}

}  // namespace

double inner0(const CMat& X, const CMat& Y) { return -(X * Y).trace().real(); }

CMat bracket(const CMat& X, const CMat& Y) { return X * Y - Y * X; }

CMat ad(const CMat& B, const CMat& X) { return B * X * B.adjoint(); }

CMat ad_inv(const CMat& B, const CMat& X) { return B.adjoint() * X * B; }

double skew_residual(const CMat& X) { return frob(X + X.adjoint()); }

double unitary_residual(const CMat& B) {
  return frob(B.adjoint() * B - CMat::Identity(B.rows(), B.cols()));
}

CMat frame_point(double t, double r, int n) {
  if (n < 2) throw std::invalid_argument("frame_point: n >= 2 required");
  CMat B = CMat::Identity(n + 1, n + 1);
  double ct = std::cos(t), st = std::sin(t), cr = std::cos(r), sr = std::sin(r);
  B(0, 0) = ct * cr;
  B(0, 1) = -sr;
  B(0, 2) = -st * cr;
  B(1, 0) = ct * sr;
  B(1, 1) = cr;
  B(1, 2) = -st * sr;
  B(2, 0) = st;
  B(2, 1) = 0;
  B(2, 2) = ct;
  return B;
}

std::pair<CMat, CMat> split_kp(const CMat& X) {
  if (skew_residual(X) > 1e-12 * (1 + frob(X)))
    throw std::invalid_argument("split_kp: input is not skew-Hermitian");
  CMat k = X;
  CMat p = CMat::Zero(X.rows(), X.cols());
  for (int j = 1; j < X.cols(); ++j) {
    p(0, j) = X(0, j);
    p(j, 0) = X(j, 0);
    k(0, j) = 0;
    k(j, 0) = 0;
  }
  return {k, p};
}

std::pair<CMat, CMat> split_hm(const CMat& X) {
  if (skew_residual(X) > 1e-12 * (1 + frob(X)))
    throw std::invalid_argument("split_hm: input is not skew-Hermitian");
  CMat h = CMat::Zero(X.rows(), X.cols());
  h(0, 0) = X(0, 0);
  h(1, 1) = X(1, 1);
  for (int i = 2; i < X.rows(); ++i)
    for (int j = 2; j < X.cols(); ++j) h(i, j) = X(i, j);
  return {h, X - h};
}

CMat km_part(const CMat& X) {
  CMat m = CMat::Zero(X.rows(), X.cols());
  for (int j = 2; j < X.cols(); ++j) {
    m(1, j) = X(1, j);
    m(j, 1) = X(j, 1);
  }
  return m;
}

CMat phi1(const CMat& X, const MetricParams& mp) {
  auto [k, p] = split_kp(X);
  return mp.lambda1 * k + p;
}

CMat phi1_inv(const CMat& X, const MetricParams& mp) {
  auto [k, p] = split_kp(X);
  return (1.0 / mp.lambda1) * k + p;
}

CMat psi(const CMat& X, const MetricParams& mp) {
  auto [h, m] = split_hm(X);
  return mp.lambda2 * h + m;
}

double ResidualReport::max_residual() const {
  double mx = 0;
  for (const auto& [name, v] : entries) mx = std::max(mx, v);
  return mx;
}

namespace {

/// Norm of the wedge of two real vectors via explicit 2x2 minors; avoids the
/// cancellation in |U|^2 |V|^2 - <U,V>^2 for nearly dependent pairs.
double wedge_norm(const Eigen::VectorXd& U, const Eigen::VectorXd& V) {
  double acc = 0;
  for (int i = 0; i < U.size(); ++i)
    for (int j = i + 1; j < U.size(); ++j) {
      double m = U(i) * V(j) - U(j) * V(i);
      acc += m * m;
    }
  return std::sqrt(acc);
}

}  // namespace

double dependence_residual(const CVec& u, const CVec& v) {
  Eigen::VectorXd U(2 * u.size()), V(2 * v.size());
  for (int i = 0; i < u.size(); ++i) {
    U(2 * i) = u(i).real();
    U(2 * i + 1) = u(i).imag();
    V(2 * i) = v(i).real();
    V(2 * i + 1) = v(i).imag();
  }
  // Normalizing by the square of the larger norm keeps a vanishing partner
  // (the W = 0 family) dependent instead of reading float noise as a
  // direction.
  double scale = std::max(U.squaredNorm(), V.squaredNorm());
  if (scale == 0) return 0;
  return wedge_norm(U, V) / scale;
}

namespace {

CVec p_part_vector(const CMat& X) {
  CVec v(X.rows() - 1);
  for (int j = 1; j < X.rows(); ++j) v(j - 1) = X(j, 0);
  return v;
}

double rank_measure(const CMat& X, const CMat& Y) {
  Eigen::VectorXd u(2 * X.size()), v(2 * Y.size());
  int k = 0;
  for (int i = 0; i < X.rows(); ++i)
    for (int j = 0; j < X.cols(); ++j) {
      u(2 * k) = X(i, j).real();
      u(2 * k + 1) = X(i, j).imag();
      v(2 * k) = Y(i, j).real();
      v(2 * k + 1) = Y(i, j).imag();
      ++k;
    }
  double scale = std::max(u.squaredNorm(), v.squaredNorm());
  if (scale == 0) return 0;
  return wedge_norm(u, v) / scale;
}

void check_inputs(const CMat& B, const CMat& X, const CMat& Y) {
  if (unitary_residual(B) > 1e-10)
    throw std::invalid_argument("residuals: B is not unitary");
  if (skew_residual(X) > 1e-12 * (1 + frob(X)) ||
      skew_residual(Y) > 1e-12 * (1 + frob(Y)))
    throw std::invalid_argument("residuals: X, Y must be skew-Hermitian");
  if (rank_measure(X, Y) < 1e-6)
    throw std::invalid_argument("residuals: X, Y are linearly dependent");
}

/// Residual of <Z, Ad_B L1 - L2>_0 = 0 over the circle generator and the
/// u(n-1) block of the action group.
void horizontality_entries(ResidualReport& rep, const std::string& tag, const CMat& B,
                           const CMat& Z, const Triple& tri) {
  int n = static_cast<int>(B.rows()) - 1;
  CMat L = kI * (ad(B, circle_generator_left(tri, n)) - circle_generator_right(tri, n));
  rep.add(tag + "_circle", std::abs(inner0(Z, L)));
  double block = 0;
  for (int i = 2; i <= n; ++i)
    for (int j = 2; j <= n; ++j) block += std::norm(Z(i, j));
  rep.add(tag + "_un1_block", std::sqrt(block));
}

}  // namespace

ResidualReport wilking_residuals(const CMat& B, const CMat& X, const CMat& Y,
                                 const Triple& tri, const MetricParams& mp) {
  (void)mp;
  check_inputs(B, X, Y);
  ResidualReport rep;
  horizontality_entries(rep, "horiz_X", B, X, tri);
  horizontality_entries(rep, "horiz_Y", B, Y, tri);
  rep.add("bracket", frob(bracket(X, Y)));
  rep.add("dep_p", dependence_residual(p_part_vector(X), p_part_vector(Y)));
  rep.add("dep_p_conj",
          dependence_residual(p_part_vector(ad_inv(B, X)), p_part_vector(ad_inv(B, Y))));
  return rep;
}

ResidualReport kerin_residuals(const CMat& B, const CMat& X, const CMat& Y,
                               const Triple& tri, const MetricParams& mp) {
  check_inputs(B, X, Y);
  ResidualReport rep;
  CMat pX = phi1(X, mp);
  CMat pY = phi1(Y, mp);
  horizontality_entries(rep, "horiz_phiX", B, pX, tri);
  horizontality_entries(rep, "horiz_phiY", B, pY, tri);
  rep.add("bracket", frob(bracket(X, Y)));
  rep.add("dep_p", dependence_residual(p_part_vector(X), p_part_vector(Y)));
  rep.add("dep_p_conj", dependence_residual(p_part_vector(ad_inv(B, pX)),
                                            p_part_vector(ad_inv(B, pY))));
  rep.add("bracket_m", frob(bracket(km_part(X), km_part(Y))));
  auto [hX, mX] = split_hm(X);
  auto [hY, mY] = split_hm(Y);
  rep.add("bracket_h", frob(bracket(hX, hY)));
  return rep;
}

CMat PlaneCandidate::X_matrix(int n) const {
  CMat X = CMat::Zero(n + 1, n + 1);
  X(0, 0) = kI * alpha;
  for (int j = 1; j <= n; ++j) {
    Cplx xe = (j - 1) < static_cast<int>(x.size()) ? x[j - 1] : Cplx(0, 0);
    X(j, 0) = xe;
    X(0, j) = -std::conj(xe);
  }
  return X;
}

CMat PlaneCandidate::Y_matrix(int n) const {
  CMat Y = CMat::Zero(n + 1, n + 1);
  Y(0, 0) = kI * static_cast<double>(epsilon());
  Y(1, 1) = kI * beta;
  for (int j = 2; j <= n; ++j) {
    Cplx ye = (j - 2) < static_cast<int>(y.size()) ? y[j - 2] : Cplx(0, 0);
    Y(j, 1) = ye;
    Y(1, j) = -std::conj(ye);
  }
  return Y;
}

std::pair<double, double> horizontality_scalars(double t, double r, const Triple& tri,
                                                const PlaneCandidate& cand,
                                                const MetricParams& mp) {
  double p = static_cast<double>(to_long(tri.p));
  double q1 = static_cast<double>(to_long(tri.q1));
  double q2 = static_cast<double>(to_long(tri.q2));
  double eps = cand.epsilon();
  double ct = std::cos(t), st = std::sin(t), cr = std::cos(r), sr = std::sin(r);
  double la = mp.lambda1 * cand.alpha;
  Cplx x2 = cand.x.empty() ? Cplx(0, 0) : cand.x[0];
  Cplx x3 = cand.x.size() < 2 ? Cplx(0, 0) : cand.x[1];
  Cplx y3 = cand.y.empty() ? Cplx(0, 0) : cand.y[0];
  double eq42 = la * p * ct * ct * cr * cr - la * q1 +
                2 * p * (eps * x2.imag() * ct * ct * sr + x3.imag() * ct * st) * cr;
  double eq41 = p * ct * ct * (cand.beta * sr * sr + eps * cr * cr) +
                2 * p * y3.imag() * ct * st * sr - cand.beta * q2 - eps * q1;
  return {eq42, eq41};
}

VWResult vw_vectors(double t, double r, const PlaneCandidate& cand, const Triple& tri,
                    const MetricParams& mp) {
  (void)tri;
  int n = std::max<int>(2, static_cast<int>(cand.x.size()));
  double ct = std::cos(t), st = std::sin(t), cr = std::cos(r), sr = std::sin(r);
  double eps = cand.epsilon();
  double la = mp.lambda1 * cand.alpha;
  Cplx x2 = cand.x.empty() ? Cplx(0, 0) : cand.x[0];
  Cplx x3 = cand.x.size() < 2 ? Cplx(0, 0) : cand.x[1];
  Cplx y3 = cand.y.empty() ? Cplx(0, 0) : cand.y[0];

  CVec V(n), W(n);
  V(0) = (eps * x2 * cr * cr + eps * std::conj(x2) * sr * sr - kI * la * cr * sr) * ct +
         std::conj(x3) * sr * st;
  V(1) = cr * (x3 * ct * ct + (-kI * la * cr - 2.0 * eps * x2.imag() * kI * sr) * st * ct +
               std::conj(x3) * st * st);
  for (int j = 2; j < n; ++j) {
    Cplx xj = (j < static_cast<int>(cand.x.size()) + 0) ? cand.x[j] : Cplx(0, 0);
    V(j) = xj * ct * cr;
  }
  W(0) = cr * ((cand.beta - eps) * kI * sr * ct - std::conj(y3) * st);
  W(1) = y3 * ct * ct * sr - kI * (cand.beta * sr * sr + eps * cr * cr) * st * ct +
         std::conj(y3) * st * st * sr;
  for (int j = 2; j < n; ++j) {
    Cplx yj = (j - 1 < static_cast<int>(cand.y.size())) ? cand.y[j - 1] : Cplx(0, 0);
    W(j) = yj * ct * sr;
  }

  VWResult res;
  res.V = V;
  res.W = W;

  CMat B = frame_point(t, r, n);
  CMat MV = ad_inv(B, phi1(cand.X_matrix(n), mp));
  CMat MW = ad_inv(B, cand.Y_matrix(n));
  CVec col_v = p_part_vector(MV), col_w = p_part_vector(MW);
  CVec row_v(n), row_w(n);
  for (int j = 1; j <= n; ++j) {
    row_v(j - 1) = MV(0, j);
    row_w(j - 1) = MW(0, j);
  }
  double d_col = (col_v - V).norm() + (col_w - W).norm();
  double d_row = (row_v - V).norm() + (row_w - W).norm();
  if (d_col <= d_row) {
    res.V_direct = col_v;
    res.W_direct = col_w;
    res.matched_entries = "column (j,1), j = 2..n+1";
    res.discrepancy = d_col;
  } else {
    res.V_direct = row_v;
    res.W_direct = row_w;
    res.matched_entries = "row (1,j), j = 2..n+1";
    res.discrepancy = d_row;
  }
  return res;
}

ConstructedPlane construct_zero_plane(const Triple& tri, const Rat& x, const Rat& y,
                                      const MetricParams& mp, int n) {
  using Reason = PlaneRejection::Reason;
  if (!is_admissible(tri))
    throw PlaneRejection(Reason::Inadmissible, "inadmissible triple " + tri.str());
  if (is_excluded_special(tri))
    throw PlaneRejection(Reason::ExcludedTriple,
                         "triple excluded from the polynomial criterion");
  if (!(x > 0 && x < 1 && y > 0 && y < 1))
    throw PlaneRejection(Reason::DegenerateFrame, "(x, y) must be interior to (0,1)^2");

  const Int& p = tri.p;
  const Int& q1 = tri.q1;
  const Int& q2 = tri.q2;

  Rat fval = build_f(tri).eval(x, y);
  if (sign(fval) < 0)
    throw PlaneRejection(Reason::NegativeF,
                         "f(x,y) = " + to_string(fval) + " < 0: no plane exists here");

  Rat d_step4 = Rat(p) * x * y - Rat(q1);
  Rat d_step5 = Rat(p) * y * (Rat(1) - x) - Rat(q2);
  Rat Qxy = Rat(Int(p * (p - 2 * q1 - q2))) * x * y + Rat(Int(q1 * (p - q2)));
  if (d_step4 == 0)
    throw PlaneRejection(Reason::DegenerateDenominator, "p x y - q1 vanishes at (x, y)");
  if (d_step5 == 0)
    throw PlaneRejection(Reason::DegenerateDenominator,
                         "p y (1 - x) - q2 vanishes at (x, y)");
  if (Qxy == 0)
    throw PlaneRejection(Reason::DegenerateDenominator,
                         "p (p-2q1-q2) x y + q1 (p-q2) vanishes at (x, y)");

  double cr = std::sqrt(to_double(x)), ct = std::sqrt(to_double(y));
  double sr = std::sqrt(1 - to_double(x)), st = std::sqrt(1 - to_double(y));
  double t = std::acos(ct), r = std::acos(cr);

  Rat Pxy = Rat(Int(p * (p - 3 * q1))) * x * y + Rat(Int(q1 * (p + q1)));
  Rat Nxy = Rat(Int(p * (q1 - q2))) * x * x * y * y + Rat(Int(p * (p - 3 * q1))) * x * y * y +
            Rat(Int(-p * q1 - p * q2 + q1 * q1 + 3 * q1 * q2)) * x * y +
            Rat(Int(p * q1 + q1 * q1)) * y + Rat(Int(-q1 * (q1 + q2)));

  double D = -2.0 * sr * st * ct * to_double(Qxy);
  double im_y3 = to_double(Nxy) / D;
  double beta = to_double(Pxy) / to_double(Qxy);
  double re_y3 = std::sqrt(to_double(fval)) / std::abs(D);
  Cplx y3(re_y3, im_y3);

  Cplx x2 = (kI * sr * ct - std::conj(y3) * st) / (ct * cr);
  Cplx x3 = (y3 * sr * ct + kI * (1.0 - beta) * st) / (ct * cr);
  double pd = to_double(Rat(p));
  double la = 2.0 * pd *
              (beta * st * st - 1.0 + ct * ct * cr * cr - 2.0 * im_y3 * sr * st * ct) /
              to_double(d_step4);

  PlaneCandidate cand;
  cand.type = PlaneType::IV;
  cand.alpha = la / mp.lambda1;
  cand.beta = beta;
  cand.x.assign(n, Cplx(0, 0));  // x_2 .. x_{n+1}
  cand.x[0] = x2;
  cand.x[1] = x3;
  cand.y.assign(n - 1, Cplx(0, 0));  // y_3 .. y_{n+1}
  cand.y[0] = y3;
  cand.t = t;
  cand.r = r;

  ConstructedPlane out;
  out.cand = cand;
  out.f_value = fval;
  out.residuals = kerin_residuals(frame_point(t, r, n), cand.X_matrix(n),
                                  cand.Y_matrix(n), tri, mp);
  return out;
}

ResidualReport w0_plane_110(double t, double r, const MetricParams& mp, int n) {
  if (std::abs(std::sin(r)) < 1e-9 || std::abs(std::cos(t)) < 1e-9)
    throw PlaneRejection(PlaneRejection::Reason::DegenerateFrame,
                         "w0_plane_110: sin r and cos t must be nonzero");
  Triple tri(1, 1, 0);
  double ct = std::cos(t), st = std::sin(t), cr = std::cos(r), sr = std::sin(r);
  PlaneCandidate cand;
  cand.type = PlaneType::IV;
  cand.t = t;
  cand.r = r;
  cand.beta = 1.0 - (st * st) / (ct * ct * sr * sr);
  Cplx y3 = kI * (st / (ct * sr));
  Cplx x2(1.0, 0.0);
  Cplx x3 = -kI * y3;
  // lambda1*alpha from the first horizontality equation.
  double denom = 1.0 * ct * ct * cr * cr - 1.0;  // p = q1 = 1
  double la = -2.0 * 1.0 * (x2.imag() * ct * ct * sr + x3.imag() * ct * st) * cr / denom;
  cand.alpha = la / mp.lambda1;
  cand.x.assign(n, Cplx(0, 0));
  cand.x[0] = x2;
  cand.x[1] = x3;
  cand.y.assign(n - 1, Cplx(0, 0));
  cand.y[0] = y3;
  return kerin_residuals(frame_point(t, r, n), cand.X_matrix(n), cand.Y_matrix(n), tri,
                         mp);
}

namespace {

/// Evaluates the six real homogeneous conditions of the A0 system for the
/// given unknown vector u = (l1a, beta, Re x2, Im x2, Re x3, Im x3) and the
/// parameters (Re y3, Im y3).
Eigen::VectorXd a0_conditions(const Eigen::VectorXd& u, double yr, double yi) {
  const int n = 2;
  CMat B = CMat::Zero(n + 1, n + 1);
  {
    // The printed system corresponds to the frame with the 3 pi / 4 angle in
    // the second slot; the literal (t, r) order only flips the sign of
    // Im(y3) via a diagonal conjugation and loses the printed solution.
    double t = M_PI / 4.0, r = 3.0 * M_PI / 4.0;
    double ct = std::cos(t), st = std::sin(t), cr = std::cos(r), sr = std::sin(r);
    B(0, 0) = ct * cr;
    B(0, 1) = -sr;
    B(0, 2) = -st * cr;
    B(1, 0) = ct * sr;
    B(1, 1) = cr;
    B(1, 2) = -st * sr;
    B(2, 0) = st;
    B(2, 1) = 0;
    B(2, 2) = ct;
  }
  CMat P = CMat::Zero(3, 3);
  P(0, 0) = 1;
  P(1, 1) = -1;
  P(2, 2) = -1;
  CMat Z = kI * ad(B, P);  // q-vector is (0,0)

  double l1a = u(0), beta = u(1);
  Cplx x2(u(2), u(3)), x3(u(4), u(5)), y3(yr, yi);

  CMat Mphi = CMat::Zero(3, 3);
  Mphi(0, 0) = kI * l1a;
  Mphi(1, 0) = x2;
  Mphi(0, 1) = -std::conj(x2);
  Mphi(2, 0) = x3;
  Mphi(0, 2) = -std::conj(x3);

  CMat Y = CMat::Zero(3, 3);
  Y(0, 0) = kI;
  Y(1, 1) = kI * beta;
  Y(2, 1) = y3;
  Y(1, 2) = -std::conj(y3);

  CMat MV = ad_inv(B, Mphi);
  CMat MW = ad_inv(B, Y);

  Eigen::VectorXd out(6);
  out(0) = inner0(Mphi, Z);
  out(1) = inner0(Y, Z);
  Cplx d1 = MV(1, 0) - MW(1, 0);
  Cplx d2 = MV(2, 0) - MW(2, 0);
  out(2) = d1.real();
  out(3) = d1.imag();
  out(4) = d2.real();
  out(5) = d2.imag();
  return out;
}

}  // namespace

A0Report quasipositive_A0_check() {
  const double s2 = std::sqrt(2.0);
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(6);
  Eigen::VectorXd c0 = a0_conditions(zero, 0, 0);
  Eigen::VectorXd cr = a0_conditions(zero, 1, 0) - c0;
  Eigen::VectorXd ci = a0_conditions(zero, 0, 1) - c0;
  Eigen::MatrixXd M(6, 6);
  for (int k = 0; k < 6; ++k) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(6);
    e(k) = 1;
    M.col(k) = a0_conditions(e, 0, 0) - c0;
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
  Eigen::VectorXd u0 = lu.solve(-c0);
  Eigen::VectorXd uR = lu.solve(-cr);
  Eigen::VectorXd uI = lu.solve(-ci);

  A0Report rep;
  rep.solution_constant.assign(u0.data(), u0.data() + 6);
  rep.solution_re_y3.assign(uR.data(), uR.data() + 6);
  rep.solution_im_y3.assign(uI.data(), uI.data() + 6);

  // Printed closed-form solution vector.
  Eigen::VectorXd p0(6), pR(6), pI(6);
  p0 << 1, -1, 0, 0.5, 0, -s2 / 2;
  pR << 0, 0, s2, 0, -1, 0;
  pI << -s2, 2 * s2, 0, -1.5 * s2, 0, 2;
  rep.printed_solution_residual = std::max({(u0 - p0).cwiseAbs().maxCoeff(),
                                            (uR - pR).cwiseAbs().maxCoeff(),
                                            (uI - pI).cwiseAbs().maxCoeff()});

  // Imaginary part of x3 = -i x2 y3 with Re(y3)^2 eliminated through
  // beta = 1 - |y3|^2, as a quadratic in Im(y3).
  double rex2_r = uR(2);  // Re x2 = rex2_r * yr
  double beta0 = u0(1), betai = uI(1);
  double a = -rex2_r - uI(3);
  double b = uI(5) - rex2_r * betai - u0(3);
  double c = u0(5) + rex2_r * (1.0 - beta0);
  double disc = b * b - 4 * a * c;
  if (disc >= 0) {
    double r1 = (-b + std::sqrt(disc)) / (2 * a);
    double r2 = (-b - std::sqrt(disc)) / (2 * a);
    if (r1 > r2) std::swap(r1, r2);
    rep.im_y3_candidates = {r1, r2};
    for (double root : rep.im_y3_candidates) {
      double beta = beta0 + betai * root;
      rep.re_y3_squared.push_back(1.0 - beta - root * root);
    }
    rep.contradiction = rep.re_y3_squared.size() == 2 && rep.re_y3_squared[0] < 0 &&
                        rep.re_y3_squared[1] < 0;
  }
  return rep;
}

DetReport small_det_check(double t, double r, const Triple& tri) {
  double p = static_cast<double>(to_long(tri.p));
  double q1 = static_cast<double>(to_long(tri.q1));
  double ct = std::cos(t), st = std::sin(t), cr = std::cos(r), sr = std::sin(r);
  Eigen::Matrix3d M;
  // Rows: the two imaginary-part equations of V = 0 and the first
  // horizontality equation; unknowns (l1a, Im x2, Im x3).
  M << -cr * sr * ct, (cr * cr - sr * sr) * ct, -sr * st,
      -cr * cr * st * ct, -2 * cr * sr * st * ct, cr * (ct * ct - st * st),
      p * ct * ct * cr * cr - q1, 2 * p * ct * ct * sr * cr, 2 * p * ct * st * cr;
  DetReport rep;
  rep.assembled = M.determinant();
  rep.closed_printed = (p - 2 * q1) * cr * cr * ct * ct * ct + q1 * ct * ct * ct;
  rep.closed_derived = cr * ct * ((p - 2 * q1) * cr * cr * ct * ct + q1);
  return rep;
}

CMat random_skew(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  CMat A(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) A(i, j) = Cplx(dist(rng), dist(rng));
  return 0.5 * (A - CMat(A.adjoint()));
}

}  // namespace apc
