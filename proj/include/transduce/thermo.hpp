#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace transduce::thermo {

// Scalar polynomial free energy (J/m^3) in strain x and displacement D (C/m^2):
//
//   A = c x^2 / 2 + h x D + eta1 D^2 / 2 + eta2 D^3 / 3
//       + p x D^2 / (2 eps0) + q x D^3 / (3 eps0)
//
// Coefficients are placed so that E = dA/dD = eta1 D + eta2 D^2 + ... and so
// that q = eps0 d(eta2)/dx of the model.
struct FreeEnergyModel
{
    double c = 0.0;     // elastic stiffness, Pa
    double h = 0.0;     // stress-voltage piezoelectric coefficient, V/m
    double eta1 = 0.0;  // inverse permittivity, m/F
    double eta2 = 0.0;  // second-order inverse susceptibility
    double p = 0.0;     // photoelasticity, dimensionless
    double q = 0.0;     // second-order photoelasticity, m^2/C
};

double eval_free_energy(const FreeEnergyModel& m, double x, double d);
double stress_of(const FreeEnergyModel& m, double x, double d);  // dA/dx
double efield_of(const FreeEnergyModel& m, double x, double d);  // dA/dD

using ScalarField = std::function<double(double x, double d)>;
using VectorField = std::function<double(std::span<const double>)>;

// Central differences with step base * max(1, |coordinate|), refined by one
// level of Richardson extrapolation (h and h/2). Truncation error vanishes for
// polynomials within the degree caps, so the step is kept large to minimise
// rounding.
struct StepPolicy
{
    double base = 0.25;
    bool richardson = true;
};

struct FdEstimate
{
    double value = 0.0;
    // Bound on the rounding contribution, eps * sum |w_i f_i| / prod h.
    double rounding = 0.0;
    double step = 0.0;  // largest step used on any coordinate
};

struct DerivativeOrders
{
    int x = 0;
    int d = 0;
};

// Mixed partial d^(nx + nd) f / dx^nx dD^nd at (x, d). Throws ArgumentError
// unless 0 <= nx <= 1 and 0 <= nd <= 3.
FdEstimate fd_partial(const ScalarField& f, double x, double d, DerivativeOrders orders,
                      const StepPolicy& policy = {});

// Same engine over any number of coordinates; orders[i] in 0..4.
FdEstimate fd_partial_nd(const VectorField& f, std::span<const double> point, std::span<const int> orders,
                         const StepPolicy& policy = {});

// Stress and field as functions of (x, D). Usually both come from one
// FreeEnergyModel; pairing them from different models breaks the Maxwell
// relations, which is how the checker is exercised.
struct ConstitutiveLaw
{
    ScalarField stress;
    ScalarField efield;
};

ConstitutiveLaw constitutive_law(const FreeEnergyModel& m);

// eta2 at strain x, as half the second D-derivative of E at D = 0.
FdEstimate extract_eta2(const ConstitutiveLaw& law, double x, const StepPolicy& policy = {});
double extract_eta2(const FreeEnergyModel& m, double x);

struct ProbePoint
{
    double x = 0.0;
    double d = 0.0;
};

struct VerifyOptions
{
    std::vector<ProbePoint> probes{{0.0, 0.0}, {0.3, -0.2}, {-0.7, 0.45}};
    StepPolicy policy{};
};

// Residuals are relative, |a - b| / max(|a|, |b|, floor), with floor set far
// above the finite-difference rounding bound so that two estimates that are
// both pure rounding noise compare equal. Maximum over all probes.
struct RelationReport
{
    double order1_residual = 0.0;   // dX/dD vs dE/dx
    double order2_residual = 0.0;   // d2X/dD2 vs d2E/dx dD
    double order3_residual = 0.0;   // d3X/dD3 vs d3E/dx dD2
    double factor2_residual = 0.0;  // d3X/dD3 vs 2 d(eta2)/dx
    double fd_step_used = 0.0;
    double tolerance = 0.0;
    bool order1_passed = true;
    bool order2_passed = true;
    bool order3_passed = true;
    bool factor2_passed = true;

    bool passed() const { return order1_passed && order2_passed && order3_passed && factor2_passed; }
};

// Throws ArgumentError unless tol > 0.
RelationReport verify_relations(const ConstitutiveLaw& law, double tol, const VerifyOptions& options = {});
RelationReport verify_relations(const FreeEnergyModel& m, double tol, const VerifyOptions& options = {});

// Relative difference used by the reports; 0 when both values are 0.
double relative_residual(double a, double b, double floor = 0.0);

// ---------------------------------------------------------------------------
// Two-component displacement (D1, D2) with a single strain component.

using Vec2 = std::array<double, 2>;
using Mat2 = std::array<Vec2, 2>;
using Cube2 = std::array<Mat2, 2>;

// A = c x^2/2 + x h_k D_k + eta1_kl D_k D_l / 2 + eta2_klm D_k D_l D_m / 3
//     + x p_kl D_k D_l / (2 eps0) + x q_klm D_k D_l D_m / (3 eps0)
struct TensorFreeEnergyModel
{
    double c = 0.0;
    Vec2 h{};
    Mat2 eta1{};
    Cube2 eta2{};
    Mat2 p{};
    Cube2 q{};
};

double eval_free_energy(const TensorFreeEnergyModel& m, double x, const Vec2& d);
double stress_of(const TensorFreeEnergyModel& m, double x, const Vec2& d);
Vec2 efield_of(const TensorFreeEnergyModel& m, double x, const Vec2& d);

// True when eta2 and q are invariant under every index permutation.
bool is_kleinman_symmetric(const TensorFreeEnergyModel& m, double rel_tol = 1e-12);

struct TensorRelationReport
{
    RelationReport relations;
    // Product-rule identity d2E_m/dD_l dD_k = eta2_mlk + eta2_mkl and the
    // coefficient identity d3X/dD_k dD_l dD_m = 2 q_klm / eps0. Only evaluated
    // for Kleinman-symmetric models.
    std::optional<double> kleinman_residual;
    bool kleinman_passed = true;

    bool passed() const { return relations.passed() && kleinman_passed; }
};

TensorRelationReport verify_relations(const TensorFreeEnergyModel& m, double tol,
                                      const VerifyOptions& options = {});

}  // namespace transduce::thermo
