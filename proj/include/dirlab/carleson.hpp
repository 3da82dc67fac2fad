#ifndef DIRLAB_CARLESON_HPP
#define DIRLAB_CARLESON_HPP

#include "dirlab/outer.hpp"
#include "dirlab/thresholds.hpp"

#include <string>
#include <vector>

namespace dirlab {

/// (a^2 - b^2) log(a/b) >= 0, with the 2-comparability regime of the pair.
struct KernelValue {
    enum class Regime { Comparable, AboveDouble, BelowHalf };
    double value = 0.0;
    Regime regime = Regime::Comparable;
};
KernelValue logequiv_kernel(double a, double b);

/// Quadrature nodes for the circle carrying boundary values and weights
/// (weights sum to ~2 pi).  Uniform meshes use midpoint nodes; for the
/// power-log family the arc (0, pi] is graded geometrically toward the
/// singular point via theta = gamma e^{-s} with uniform s-spacing, and
/// refinement extends the depth s_max while keeping earlier nodes fixed,
/// so successive levels differ exactly by the added tail.
struct AngularMesh {
    std::vector<double> theta;
    std::vector<double> value;  // h at the nodes
    std::vector<double> weight;
    bool graded = false;

    static AngularMesh uniform(const BoundaryFunction& h, std::size_t n, bool staggered);
    static AngularMesh graded_mesh(const BoundaryFunction& h, double s_max, bool staggered);
    /// Level-indexed builder: uniform n = 128 * 2^level for regular h,
    /// graded depth s_max = s0 + 16 * 2^level for the power-log family.
    static AngularMesh for_function(const BoundaryFunction& h, int level, bool staggered);
    static int max_level(const BoundaryFunction& h);
};

/// A functional evaluated under grid refinement, with a divergence flag
/// from the increment-ratio classifier.
struct FunctionalValue {
    double value = 0.0;           // finest-level value
    bool flagged_infinite = false;
    bool inconclusive = false;
    std::vector<double> refinement;
};

/// SS |h(phi) - h(theta)|^2 / |e^{i phi} - e^{i theta}|^{2-alpha} (no prefactor).
FunctionalValue big_n_alpha(const BoundaryFunction& h, double alpha);

/// SS (h^2(phi) - h^2(theta)) log(h(phi)/h(theta)) / |e^{i phi} - e^{i theta}|^{2-alpha}.
FunctionalValue c_alpha(const BoundaryFunction& h, double alpha);

struct IdentityCheck {
    double lhs = 0.0;          // D(O_h)
    double rhs = 0.0;          // C_0(h) / (4 pi^2)
    double relative_gap = 0.0;
    bool flagged = false;
};
/// The exact alpha = 0 identity D(O_h) = C_0(h) / (4 pi^2).
IdentityCheck carleson_identity_check(const BoundaryFunction& h);

/// Averaged log-oscillations over the sublevel set {h(phi) <= h(theta)/2},
/// split at chord distance lambda:
///   a  = (1/2pi) int_{far,  chord >= lambda} log(h(theta)/h(phi)) / chord^2 dphi
///   a~ = (1/2pi) int_{near, chord <= lambda} log(h(theta)/h(phi)) dphi
struct OscillationAverages {
    double theta = 0.0;
    double a = 0.0;
    double a_tilde = 0.0;
    double lambda = 0.0;
};
OscillationAverages oscillation_averages(const BoundaryFunction& h, double lambda,
                                         double theta, std::size_t n = 4096);

/// Per-node scale mu(theta) = sup { mu in (0,1] : for all delta <= mu,
/// delta * a_delta <= 2 and a~_delta / delta <= 2 }, found by an exact
/// piecewise-monotone scan over the chord distances of the mesh.
struct MuProfile {
    std::vector<double> theta;
    std::vector<double> mu;
    std::vector<double> weight;   // quadrature weight of each node
    std::vector<double> h_value;
    std::vector<char> floored;    // violation already at the positive floor

    std::string to_json() const;
    void to_csv(const std::string& path) const;
};
MuProfile mu_profile(const BoundaryFunction& h, int level = -1);

/// Distance scales per node, either a constant or a computed mu profile.
struct LambdaFunction {
    enum class Provenance { User, Mu, Constant };
    std::vector<double> values; // aligned with the mesh used
    Provenance provenance = Provenance::Constant;
};

struct NAlphaPair {
    FunctionalValue n;
    FunctionalValue n_tilde;
};
/// n_alpha  = int h^2(theta) (int_{far,  chord >= lambda} logratio / chord^2 dphi)^{1-alpha} dtheta
/// n~_alpha = int h^2(theta)  int_{near, chord <= lambda} logratio / chord^{2-alpha} dphi  dtheta
/// with the inner integrals exactly as printed: no 1/2pi inside, so the far
/// integral equals 2 pi a_{h,lambda}.
NAlphaPair n_alphas(const BoundaryFunction& h, double lambda, double alpha);

struct CarlesonDecomposition {
    double alpha = 0.0;
    double h_norm_sq = 0.0;       // int h^2 dtheta
    FunctionalValue big_n;
    FunctionalValue n;
    FunctionalValue n_tilde;
    FunctionalValue lhs;          // |O_h(0)|^2 + D_alpha(O_h)
    double rhs = 0.0;             // h_norm_sq + N + n + n~ at the finest level
    double ratio = 0.0;           // rhs / lhs when both finite
    bool rhs_flagged = false;
    bool lhs_flagged = false;
    std::string lambda_provenance = "mu";

    std::string to_json() const;
};
/// The two-sided decomposition with lambda = mu_h (the infimum over all
/// admissible lambda is not computable; mu_h is the canonical choice).
CarlesonDecomposition theorem_decomposition(const BoundaryFunction& h, double alpha);

/// min over profile nodes theta and radii r >= 1 - mu(theta) of
/// |O_h(r e^{i theta})| / h(theta), respecting the clearance rule.
double check_lower_bound_outer(const BoundaryFunction& h, const MuProfile& profile,
                               std::size_t n = 512);

/// int h^2(theta) mu(theta)^{alpha-1} dtheta / (D_alpha(O_h) + ||h||_2^2).
double check_dauglas_bound(const BoundaryFunction& h, double alpha,
                           const MuProfile& profile);

/// |O_h(0)|^2 + D_alpha(O_h); for the power-log family the finiteness flag
/// comes from the reduced 1D integrand and the value from a truncated
/// coefficient series.
FunctionalValue outer_norm_sq(const BoundaryFunction& h, double alpha);

} // namespace dirlab

#endif
