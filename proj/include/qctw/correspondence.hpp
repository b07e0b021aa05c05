#pragma once

// Algebra behind the identification of the CR Fefferman space with the twistor
// space: values of the projected Cartan connection on lifted Reeb fields, the
// complex structure J0 on gt_{-1}, and its action on vertical and horizontal parts.

#include "qctw/embedding.hpp"
#include "qctw/g0_actions.hpp"
#include "qctw/report.hpp"

namespace qctw {

enum class ReebDirection { J, K };

/// Rescaled qc scalar curvature, taken as a free parameter (0 on the flat model).
struct ScaleParams {
  Rational s_tilde{0};
};

/// Row4 value at u g_I of the lifted Reeb field xi_J (or xi_K):
/// phi_{-1}(Ad(g_I^{-1}) ([-z i_d conj z]_{-2} + [(s z i_d conj z, omega_A)]_0)),
/// i_d = j for J and k for K, z = z(g_I).
Row4 omega_value_reeb(ReebDirection direction, const ScaleParams& scale, const G0Element& g_I, const QMatrix& omega_A);
/// g_I = (1, z_I, Id) and omega_A = 0.
Row4 omega_value_reeb(ReebDirection direction, const ScaleParams& scale, const Quaternion& z_I, int n = 1);

/// Componentwise multiplication by -i.
Row4 j0(const Row4& v);

/// (I, J, K) = (z i conj z, z j conj z, z k conj z).
struct TwistorFrame {
  Quaternion I, J, K;
};
TwistorFrame twistor_frame(const Quaternion& z);
/// Orthonormal, oriented (K = I J as quaternions, equal to the cross product I x J).
bool is_oriented_orthonormal(const TwistorFrame& f);

/// Vertical part: J0 sends phi_{-1}[(j,0)]_0 to phi_{-1}[(k,0)]_0 and that to -phi_{-1}[(j,0)]_0.
CheckReport vertical_map_check(int n = 1);
/// Horizontal part: J0 phi_{-1}[xbar]_{-1} = phi_{-1}[xbar conj(i)]_{-1}, including the frame change by g_I.
CheckReport horizontal_map_check(int n, std::size_t samples, std::uint64_t seed);
/// Fibre of the orbit map, right action property, and dimension count of the Fefferman space.
CheckReport identification_audit(int n, std::size_t samples, std::uint64_t seed);

}  // namespace qctw
