#pragma once

// The flat quaternionic contact model H^n x Im H, its twistor space and the CR
// structure (H, J) there.

#include "qctw/g0_actions.hpp"
#include "qctw/matrix.hpp"
#include "qctw/polyform.hpp"
#include "qctw/twistor_geometry.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qctw {

/// Coefficient k in eta^a = dt_a + k <i_a x, dx>. Solved by tools/derive_flat_contact.
inline const Rational& contact_coefficient() {
  static const Rational k(1);
  return k;
}

/// eta^1, eta^2, eta^3 with coefficient k, on coordinates (x_0..x_{4n-1}, t_1, t_2, t_3).
std::array<PolyForm, 3> contact_forms(int n, const Rational& k);
std::vector<std::string> flat_coordinate_names(int n);
/// Real 4n x 4n matrix of left multiplication by the quaternion q on H^n.
RMatrix left_multiplication_matrix(const Quaternion& q, int n);

struct FlatQC {
  int n = 0;
  std::size_t nvars = 0;  ///< 4n + 3
  std::array<PolyForm, 3> eta;
  std::array<VectorField, 3> reeb;
  std::vector<VectorField> d_frame;          ///< g-orthonormal frame X_q of D
  std::array<RMatrix, 3> complex_structure;  ///< I_a on D in the frame X_q
  RMatrix metric;                            ///< g on D in the frame X_q
};

/// Throws std::invalid_argument for n < 1.
FlatQC build_flat_qc(int n);

// Each returns a description of the first violated identity, or nullopt.
/// eta^b(X_q) = 0 and the X_q are independent.
std::optional<std::string> distribution_violation(const FlatQC& m);
/// d eta^a(u, v) = 2 g(I_a u, v) on D.
std::optional<std::string> contact_violation(const FlatQC& m);
/// xi_a _| eta^b = delta and (xi_a _| d eta^b)|D = -(xi_b _| d eta^a)|D.
std::optional<std::string> reeb_violation(const FlatQC& m);
/// I_a^2 = -1, I_1 I_2 = I_3, g(I_a u, I_a v) = g(u, v).
std::optional<std::string> quaternion_violation(const FlatQC& m);
/// d(d eta^a) = 0.
std::optional<std::string> d_squared_violation(const FlatQC& m);

struct DucheminReport {
  RMatrix gram;             ///< <d eta^a|D, d eta^b|D>
  Rational orientation;     ///< det of the coefficients in the reference basis of L^2_+
  bool self_dual = false;
  bool orthonormal = false;  ///< gram is a positive multiple of Id_3
  bool passed() const { return orthonormal && self_dual && sgn(orientation) > 0; }
};

/// Throws std::invalid_argument unless m.n == 1.
DucheminReport duchemin_check(const FlatQC& m);

// --- twistor space --------------------------------------------------------------

struct TwistorChart {
  int n = 0;
  int chart = 0;
  std::vector<Rational> base;  ///< (x, t), length 4n + 3
  std::array<Rational, 2> sigma;
  std::vector<Rational> coordinates() const;
  twistor::ChartPoint<Rational> point() const;
};

/// Chart around I at the base point; chart -1 picks the one with |s| <= 1.
TwistorChart make_twistor_chart(int n, std::vector<Rational> base, const TwistorPoint& I, int chart = -1);

struct CRStructure {
  std::vector<std::vector<Rational>> basis;  ///< frame of H in chart coordinates
  RMatrix J;                                 ///< J in that frame
};

CRStructure cr_structure_at(const TwistorChart& c);

// --- numeric checks -----------------------------------------------------------------

struct ModelConfig {
  double fd_step = 1e-5;
  double residual_tol = 1e-6;
  double eig_floor = 1e-8;
  double theta_sign = 1.0;    ///< use theta_sign * theta as defining form
  double perturbation = 0.0;  ///< J + eps E, E: X_0-coefficient -> d/ds_1
};

struct ModelPoint {
  int chart = 0;
  std::vector<double> coords;
};

/// Deterministic random point of Z: (x, t) uniform in [-1, 1], I uniform on S^2.
ModelPoint model_point(int n, std::uint64_t seed, std::uint64_t index);

struct LeviResult {
  int positive = 0;
  int negative = 0;
  double min_abs_eig = 0;
  double asymmetry = 0;  ///< max |L - L^T|
  std::vector<double> eigenvalues;
};

/// Levi form dtheta(F_a, J F_b) on the frame of H, dtheta by central differences.
LeviResult levi_form_at(int n, const ModelPoint& p, const ModelConfig& cfg);

struct IntegrabilityResult {
  double partial = 0;    ///< max |theta([X,Y] - [JX,JY])|, |theta([JX,Y] + [X,JY])|
  double nijenhuis = 0;  ///< max |J([X,Y] - [JX,JY]) - ([JX,Y] + [X,JY])| mod xi_I
  double max() const { return partial > nijenhuis ? partial : nijenhuis; }
};

/// Over all pairs of frame fields of H.
IntegrabilityResult integrability_at(int n, const ModelPoint& p, const ModelConfig& cfg);
/// One pair (X, Y) = (F_alpha, F_beta).
IntegrabilityResult integrability_pair(int n, const ModelPoint& p, std::size_t alpha, std::size_t beta,
                                       const ModelConfig& cfg);

struct ModelSample {
  ModelPoint point;
  std::array<double, 3> fiber{};
  LeviResult levi;
  IntegrabilityResult integrability;
  bool degenerate = false;  ///< min |eigenvalue| <= eig_floor
};

ModelSample evaluate_sample(int n, const ModelPoint& p, const ModelConfig& cfg);

enum class Execution { serial, parallel };

/// Samples model_point(n, seed, 0..count-1).
std::vector<ModelSample> sample_model(int n, std::size_t count, std::uint64_t seed, const ModelConfig& cfg,
                                      Execution exec = Execution::parallel);

struct LeviSignature {
  int positive = -1;  ///< -1 when samples disagree
  int negative = -1;
  double min_abs_eig = 0;
  std::size_t degenerate_samples = 0;
};

LeviSignature levi_signature(const std::vector<ModelSample>& samples);
double integrability_residual(const std::vector<ModelSample>& samples);

}  // namespace qctw
