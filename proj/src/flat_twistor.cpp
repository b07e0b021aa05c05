#include "qctw/flat_twistor.hpp"

#include "qctw/parallel.hpp"
#include "qctw/sampling.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qctw {

namespace {

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("flat model: n >= 1 required");
}

std::string pair_label(const char* what, int a, std::size_t p, std::size_t q) {
  std::ostringstream os;
  os << what << " a=" << a << " (" << p << ',' << q << ')';
  return os.str();
}

}  // namespace

RMatrix left_multiplication_matrix(const Quaternion& q, int n) {
  require_n(n);
  RMatrix m(4 * n, 4 * n);
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < 4; ++c) {
      const Quaternion col = q * Quaternion::basis(c);
      for (int r = 0; r < 4; ++r) m(4 * b + r, 4 * b + c) = col[r];
    }
  }
  return m;
}

std::vector<std::string> flat_coordinate_names(int n) {
  std::vector<std::string> names;
  for (int q = 0; q < 4 * n; ++q) names.push_back("x" + std::to_string(q));
  for (int a = 1; a <= 3; ++a) names.push_back("t" + std::to_string(a));
  return names;
}

std::array<PolyForm, 3> contact_forms(int n, const Rational& k) {
  require_n(n);
  const std::size_t nvars = 4 * n + 3;
  std::array<PolyForm, 3> eta;
  for (int a = 0; a < 3; ++a) {
    const RMatrix L = left_multiplication_matrix(Quaternion::basis(a + 1), n);
    PolyForm w = PolyForm::differential(nvars, 4 * n + a);
    for (int q = 0; q < 4 * n; ++q) {
      Polynomial coeff(nvars);
      for (int p = 0; p < 4 * n; ++p)
        if (!is_zero(L(q, p))) coeff += Rational(k * L(q, p)) * Polynomial::variable(nvars, p);
      w += coeff * PolyForm::differential(nvars, q);
    }
    eta[a] = w;
  }
  return eta;
}

FlatQC build_flat_qc(int n) {
  require_n(n);
  FlatQC m;
  m.n = n;
  m.nvars = 4 * n + 3;
  const Rational& k = contact_coefficient();
  m.eta = contact_forms(n, k);
  for (int a = 0; a < 3; ++a) {
    m.reeb[a] = coordinate_field(m.nvars, 4 * n + a);
    m.complex_structure[a] = left_multiplication_matrix(Quaternion::basis(a + 1), n);
  }
  for (int q = 0; q < 4 * n; ++q) {
    VectorField x = coordinate_field(m.nvars, q);
    for (int a = 0; a < 3; ++a) {
      // minus the dx_q coefficient of eta^a
      x[4 * n + a] = -m.eta[a].coefficient({static_cast<std::size_t>(q)});
    }
    m.d_frame.push_back(x);
  }
  m.metric = RMatrix::identity(4 * n);
  return m;
}

std::optional<std::string> distribution_violation(const FlatQC& m) {
  for (int b = 0; b < 3; ++b)
    for (std::size_t q = 0; q < m.d_frame.size(); ++q)
      if (!evaluate(m.eta[b], {m.d_frame[q]}).is_zero()) return pair_label("eta(X) != 0", b + 1, q, q);
  // X_q together with the Reeb fields span the tangent space at the origin
  RMatrix frame(m.nvars, m.nvars);
  const std::vector<Rational> origin(m.nvars, Rational(0));
  for (std::size_t c = 0; c < m.nvars; ++c) {
    const VectorField& v = c < m.d_frame.size() ? m.d_frame[c] : m.reeb[c - m.d_frame.size()];
    for (std::size_t r = 0; r < m.nvars; ++r) frame(r, c) = v[r].evaluate(origin);
  }
  if (rank(frame) != m.nvars) return std::string("D + span(xi) is not the full tangent space");
  return std::nullopt;
}

std::optional<std::string> contact_violation(const FlatQC& m) {
  const std::size_t dim = m.d_frame.size();
  for (int a = 0; a < 3; ++a) {
    const PolyForm d_eta = exterior_derivative(m.eta[a]);
    const RMatrix gI = m.metric * m.complex_structure[a];  // g(I_a X_p, X_q) = (g I_a)_{qp}
    for (std::size_t p = 0; p < dim; ++p) {
      for (std::size_t q = 0; q < dim; ++q) {
        const Polynomial lhs = evaluate(d_eta, {m.d_frame[p], m.d_frame[q]});
        const Polynomial rhs = Polynomial::constant(m.nvars, Rational(2 * gI(q, p)));
        if (!(lhs == rhs)) return pair_label("d eta(X_p, X_q) != 2 g(I X_p, X_q)", a + 1, p, q);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> reeb_violation(const FlatQC& m) {
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const Polynomial v = evaluate(m.eta[b], {m.reeb[a]});
      if (!(v == Polynomial::constant(m.nvars, Rational(a == b ? 1 : 0))))
        return pair_label("xi_a _| eta^b != delta", a + 1, a, b);
    }
  }
  std::array<PolyForm, 3> d_eta;
  for (int a = 0; a < 3; ++a) d_eta[a] = exterior_derivative(m.eta[a]);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const PolyForm lhs = interior(m.reeb[a], d_eta[b]);
      const PolyForm rhs = interior(m.reeb[b], d_eta[a]);
      for (std::size_t q = 0; q < m.d_frame.size(); ++q) {
        if (!(evaluate(lhs, {m.d_frame[q]}) == -evaluate(rhs, {m.d_frame[q]})))
          return pair_label("xi_a _| d eta^b not antisymmetric on D", a + 1, static_cast<std::size_t>(b), q);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> quaternion_violation(const FlatQC& m) {
  const auto& I = m.complex_structure;
  const RMatrix minus_id = RMatrix::identity(4 * m.n).scaled(Rational(-1));
  for (int a = 0; a < 3; ++a) {
    if (!(I[a] * I[a] == minus_id)) return "I_" + std::to_string(a + 1) + "^2 != -1";
    if (!(I[a].transpose() * m.metric * I[a] == m.metric)) return "I_" + std::to_string(a + 1) + " not g-orthogonal";
  }
  if (!(I[0] * I[1] == I[2])) return std::string("I_1 I_2 != I_3");
  if (!(I[1] * I[2] == I[0])) return std::string("I_2 I_3 != I_1");
  if (!(I[2] * I[0] == I[1])) return std::string("I_3 I_1 != I_2");
  return std::nullopt;
}

std::optional<std::string> d_squared_violation(const FlatQC& m) {
  for (int a = 0; a < 3; ++a)
    if (!exterior_derivative(exterior_derivative(m.eta[a])).is_zero()) return "d d eta^" + std::to_string(a + 1) + " != 0";
  return std::nullopt;
}

// --- Duchemin condition on D, n = 1 ----------------------------------------------

namespace {

using TwoForm4 = std::array<std::array<Rational, 4>, 4>;

int permutation_sign(std::array<int, 4> p) {
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

Rational inner(const TwoForm4& a, const TwoForm4& b) {
  Rational s = 0;
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) s += a[p][q] * b[p][q];
  return s;
}

TwoForm4 hodge_star(const TwoForm4& a) {
  TwoForm4 out{};
  for (int p = 0; p < 4; ++p) {
    for (int q = p + 1; q < 4; ++q) {
      std::array<int, 4> perm{p, q, 0, 0};
      int k = 2;
      for (int r = 0; r < 4; ++r)
        if (r != p && r != q) perm[k++] = r;
      const Rational v = Rational(permutation_sign(perm)) * a[p][q];
      out[perm[2]][perm[3]] += v;
      out[perm[3]][perm[2]] -= v;
    }
  }
  return out;
}

TwoForm4 basis_form(std::initializer_list<std::array<int, 3>> terms) {
  TwoForm4 f{};
  for (const auto& [p, q, s] : terms) {
    f[p][q] += s;
    f[q][p] -= s;
  }
  return f;
}

}  // namespace

DucheminReport duchemin_check(const FlatQC& m) {
  if (m.n != 1) throw std::invalid_argument("duchemin_check: n = 1 only");
  DucheminReport rep;
  rep.gram = RMatrix(3, 3);
  std::array<TwoForm4, 3> w{};
  bool constant = true;
  for (int a = 0; a < 3; ++a) {
    const PolyForm d_eta = exterior_derivative(m.eta[a]);
    for (int p = 0; p < 4; ++p) {
      for (int q = 0; q < 4; ++q) {
        const Polynomial v = evaluate(d_eta, {m.d_frame[p], m.d_frame[q]});
        constant = constant && v.is_constant();
        w[a][p][q] = v.constant_term();
      }
    }
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) rep.gram(a, b) = inner(w[a], w[b]);
  const Rational c = rep.gram(0, 0);
  rep.orthonormal = constant && sgn(c) > 0 && rep.gram == RMatrix::identity(3).scaled(c);

  rep.self_dual = true;
  for (const auto& f : w) rep.self_dual = rep.self_dual && hodge_star(f) == f;

  // reference oriented basis of L^2_+: e01 + e23, e02 + e31, e03 + e12
  const std::array<TwoForm4, 3> ref = {basis_form({{0, 1, 1}, {2, 3, 1}}), basis_form({{0, 2, 1}, {1, 3, -1}}),
                                       basis_form({{0, 3, 1}, {1, 2, 1}})};
  RMatrix coeff(3, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) coeff(a, b) = inner(w[a], ref[b]) / inner(ref[b], ref[b]);
  rep.orientation = coeff(0, 0) * (coeff(1, 1) * coeff(2, 2) - coeff(1, 2) * coeff(2, 1)) -
                    coeff(0, 1) * (coeff(1, 0) * coeff(2, 2) - coeff(1, 2) * coeff(2, 0)) +
                    coeff(0, 2) * (coeff(1, 0) * coeff(2, 1) - coeff(1, 1) * coeff(2, 0));
  return rep;
}

// --- exact twistor charts --------------------------------------------------------

std::vector<Rational> TwistorChart::coordinates() const {
  std::vector<Rational> p = base;
  p.push_back(sigma[0]);
  p.push_back(sigma[1]);
  return p;
}

twistor::ChartPoint<Rational> TwistorChart::point() const { return {n, chart, coordinates()}; }

TwistorChart make_twistor_chart(int n, std::vector<Rational> base, const TwistorPoint& I, int chart) {
  require_n(n);
  if (base.size() != static_cast<std::size_t>(4 * n + 3)) throw std::invalid_argument("make_twistor_chart: base point size");
  const twistor::Vec3<Rational> a = {I.coefficient(1), I.coefficient(2), I.coefficient(3)};
  TwistorChart c;
  c.n = n;
  c.chart = chart < 0 ? twistor::preferred_chart(a) : chart;
  c.base = std::move(base);
  c.sigma = twistor::fiber_chart_coordinates(c.chart, a);
  return c;
}

CRStructure cr_structure_at(const TwistorChart& c) {
  const auto pt = c.point();
  const std::size_t h = twistor::h_rank(c.n);
  CRStructure cr;
  cr.J = RMatrix(h, h);
  for (std::size_t alpha = 0; alpha < h; ++alpha) {
    cr.basis.push_back(pt.frame(alpha));
    const auto col = pt.frame_coordinates(pt.apply_J(cr.basis.back()));
    for (std::size_t r = 0; r < h; ++r) cr.J(r, alpha) = col[r];
  }
  return cr;
}

// --- numeric Levi form and integrability -------------------------------------------

namespace {

using DVec = std::vector<double>;
using DPoint = twistor::ChartPoint<double>;

DVec apply_J(const DPoint& pt, const DVec& v, const ModelConfig& cfg) {
  DVec out = pt.apply_J(v);
  if (cfg.perturbation != 0.0) out[twistor::s_offset(pt.n())] += cfg.perturbation * v[0];
  return out;
}

DVec shifted(const DVec& p, std::size_t j, double h) {
  DVec q = p;
  q[j] += h;
  return q;
}

double max_abs(const DVec& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

/// Values of F_alpha and J F_alpha at a point, alpha = 0..rank-1, then rank..2 rank-1.
std::vector<DVec> h_fields(int n, int chart, const DVec& coords, const ModelConfig& cfg) {
  const DPoint pt(n, chart, coords);
  const std::size_t h = twistor::h_rank(n);
  std::vector<DVec> out(2 * h);
  for (std::size_t a = 0; a < h; ++a) {
    out[a] = pt.frame(a);
    out[h + a] = apply_J(pt, out[a], cfg);
  }
  return out;
}

struct FieldJets {
  std::vector<DVec> value;
  std::vector<std::vector<DVec>> jacobian;  ///< jacobian[f][j][i] = d_j field_f^i
};

FieldJets field_jets(int n, const ModelPoint& p, const ModelConfig& cfg) {
  const std::size_t dim = twistor::dimension(n);
  FieldJets jets;
  jets.value = h_fields(n, p.chart, p.coords, cfg);
  jets.jacobian.assign(jets.value.size(), std::vector<DVec>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    const auto plus = h_fields(n, p.chart, shifted(p.coords, j, cfg.fd_step), cfg);
    const auto minus = h_fields(n, p.chart, shifted(p.coords, j, -cfg.fd_step), cfg);
    for (std::size_t f = 0; f < plus.size(); ++f) {
      DVec d(dim);
      for (std::size_t i = 0; i < dim; ++i) d[i] = (plus[f][i] - minus[f][i]) / (2 * cfg.fd_step);
      jets.jacobian[f][j] = std::move(d);
    }
  }
  return jets;
}

/// [X, Y]^i = X^j d_j Y^i - Y^j d_j X^i, accumulated term by term.
DVec bracket(const FieldJets& jets, std::size_t x, std::size_t y) {
  const DVec& X = jets.value[x];
  const DVec& Y = jets.value[y];
  const std::size_t dim = X.size();
  DVec out(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    double s = 0;
    for (std::size_t j = 0; j < dim; ++j) s += X[j] * jets.jacobian[y][j][i] - Y[j] * jets.jacobian[x][j][i];
    out[i] = s;
  }
  return out;
}

IntegrabilityResult pair_residual(const DPoint& pt, const FieldJets& jets, std::size_t alpha, std::size_t beta,
                                  const ModelConfig& cfg) {
  const std::size_t h = twistor::h_rank(pt.n());
  const DVec xy = bracket(jets, alpha, beta);
  const DVec jxjy = bracket(jets, h + alpha, h + beta);
  const DVec jxy = bracket(jets, h + alpha, beta);
  const DVec xjy = bracket(jets, alpha, h + beta);
  DVec A(xy.size()), B(xy.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    A[i] = xy[i] - jxjy[i];
    B[i] = jxy[i] + xjy[i];
  }
  IntegrabilityResult r;
  r.partial = std::max(std::abs(pt.theta(A)), std::abs(pt.theta(B)));
  const DVec jA = apply_J(pt, pt.project_to_h(A), cfg);
  const DVec pB = pt.project_to_h(B);
  DVec diff(jA.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = jA[i] - pB[i];
  r.nijenhuis = max_abs(diff);
  return r;
}

}  // namespace

ModelPoint model_point(int n, std::uint64_t seed, std::uint64_t index) {
  require_n(n);
  Sampler s(derive_seed(seed, "model-point", index));
  ModelPoint p;
  p.coords.resize(twistor::dimension(n));
  for (std::size_t i = 0; i < twistor::s_offset(n); ++i) p.coords[i] = s.uniform(-1.0, 1.0);
  std::normal_distribution<double> normal;
  twistor::Vec3<double> a{};
  double len = 0;
  while (len < 1e-3) {
    for (auto& c : a) c = normal(s.engine());
    len = std::sqrt(twistor::dot(a, a));
  }
  for (auto& c : a) c /= len;
  p.chart = twistor::preferred_chart(a);
  const auto sigma = twistor::fiber_chart_coordinates(p.chart, a);
  p.coords[twistor::s_offset(n)] = sigma[0];
  p.coords[twistor::s_offset(n) + 1] = sigma[1];
  return p;
}

LeviResult levi_form_at(int n, const ModelPoint& p, const ModelConfig& cfg) {
  const std::size_t dim = twistor::dimension(n);
  const std::size_t h = twistor::h_rank(n);
  const DPoint pt(n, p.chart, p.coords);

  // dtheta_ij = d_i theta_j - d_j theta_i
  std::vector<DVec> grad(dim);  // grad[i][j] = d_i theta_j
  for (std::size_t i = 0; i < dim; ++i) {
    const DVec plus = DPoint(n, p.chart, shifted(p.coords, i, cfg.fd_step)).theta();
    const DVec minus = DPoint(n, p.chart, shifted(p.coords, i, -cfg.fd_step)).theta();
    grad[i].resize(dim);
    for (std::size_t j = 0; j < dim; ++j) grad[i][j] = cfg.theta_sign * (plus[j] - minus[j]) / (2 * cfg.fd_step);
  }

  std::vector<DVec> F(h), JF(h);
  for (std::size_t a = 0; a < h; ++a) {
    F[a] = pt.frame(a);
    JF[a] = apply_J(pt, F[a], cfg);
  }
  Eigen::MatrixXd L(h, h);
  for (std::size_t a = 0; a < h; ++a) {
    for (std::size_t b = 0; b < h; ++b) {
      double s = 0;
      for (std::size_t i = 0; i < dim; ++i) {
        if (F[a][i] == 0.0) continue;
        for (std::size_t j = 0; j < dim; ++j) s += (grad[i][j] - grad[j][i]) * F[a][i] * JF[b][j];
      }
      L(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = s;
    }
  }

  LeviResult r;
  r.asymmetry = (L - L.transpose()).cwiseAbs().maxCoeff();
  const Eigen::MatrixXd S = 0.5 * (L + L.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(S, Eigen::EigenvaluesOnly);
  r.min_abs_eig = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double lambda = solver.eigenvalues()(k);
    r.eigenvalues.push_back(lambda);
    if (lambda > cfg.eig_floor) ++r.positive;
    if (lambda < -cfg.eig_floor) ++r.negative;
    r.min_abs_eig = std::min(r.min_abs_eig, std::abs(lambda));
  }
  return r;
}

IntegrabilityResult integrability_pair(int n, const ModelPoint& p, std::size_t alpha, std::size_t beta,
                                       const ModelConfig& cfg) {
  const std::size_t h = twistor::h_rank(n);
  if (alpha >= h || beta >= h) throw std::out_of_range("integrability_pair: frame index");
  return pair_residual(DPoint(n, p.chart, p.coords), field_jets(n, p, cfg), alpha, beta, cfg);
}

IntegrabilityResult integrability_at(int n, const ModelPoint& p, const ModelConfig& cfg) {
  const DPoint pt(n, p.chart, p.coords);
  const FieldJets jets = field_jets(n, p, cfg);
  const std::size_t h = twistor::h_rank(n);
  IntegrabilityResult worst;
  for (std::size_t a = 0; a < h; ++a) {
    for (std::size_t b = a + 1; b < h; ++b) {
      const IntegrabilityResult r = pair_residual(pt, jets, a, b, cfg);
      worst.partial = std::max(worst.partial, r.partial);
      worst.nijenhuis = std::max(worst.nijenhuis, r.nijenhuis);
    }
  }
  return worst;
}

ModelSample evaluate_sample(int n, const ModelPoint& p, const ModelConfig& cfg) {
  ModelSample s;
  s.point = p;
  const DPoint pt(n, p.chart, p.coords);
  s.fiber = pt.fiber();
  s.levi = levi_form_at(n, p, cfg);
  s.integrability = integrability_at(n, p, cfg);
  s.degenerate = !(s.levi.min_abs_eig > cfg.eig_floor);
  return s;
}

std::vector<ModelSample> sample_model(int n, std::size_t count, std::uint64_t seed, const ModelConfig& cfg,
                                      Execution exec) {
  require_n(n);
  std::vector<ModelSample> out(count);
  auto body = [&](std::size_t i) { out[i] = evaluate_sample(n, model_point(n, seed, i), cfg); };
  if (exec == Execution::parallel)
    parallel_for(count, body);
  else
    serial_for(count, body);
  return out;
}

LeviSignature levi_signature(const std::vector<ModelSample>& samples) {
  LeviSignature sig;
  if (samples.empty()) return sig;
  sig.positive = samples.front().levi.positive;
  sig.negative = samples.front().levi.negative;
  sig.min_abs_eig = std::numeric_limits<double>::infinity();
  for (const auto& s : samples) {
    if (s.levi.positive != sig.positive || s.levi.negative != sig.negative) sig.positive = sig.negative = -1;
    sig.min_abs_eig = std::min(sig.min_abs_eig, s.levi.min_abs_eig);
    if (s.degenerate) ++sig.degenerate_samples;
  }
  return sig;
}

double integrability_residual(const std::vector<ModelSample>& samples) {
  double r = 0;
  for (const auto& s : samples) r = std::max(r, s.integrability.max());
  return r;
}

}  // namespace qctw
