#include <algorithm>
#include <cmath>

#include "transduce/constants.hpp"
#include "transduce/errors.hpp"
#include "transduce/thermo.hpp"

namespace transduce::thermo {

namespace {

// Residual floor as a multiple of the combined rounding bound.
constexpr double kNoiseFloorFactor = 1e7;

double residual(const FdEstimate& a, const FdEstimate& b)
{
    return relative_residual(a.value, b.value, kNoiseFloorFactor * (a.rounding + b.rounding));
}

// d/dx of a quantity that is itself a finite-difference estimate; the inner
// rounding is propagated through the outer first-derivative stencil.
template <class Inner>
FdEstimate outer_x_derivative(Inner inner, double x, const StepPolicy& policy)
{
    const FdEstimate outer = fd_partial([&](double xx, double) { return inner(xx).value; }, x, 0.0, {1, 0}, policy);
    const double step = policy.base * std::max(1.0, std::fabs(x));
    return {outer.value, outer.rounding + 2.0 * inner(x).rounding / step, outer.step};
}

void finish(RelationReport& r, double tol, const StepPolicy& policy)
{
    r.tolerance = tol;
    r.fd_step_used = policy.base;
    r.order1_passed = r.order1_residual < tol;
    r.order2_passed = r.order2_residual < tol;
    r.order3_passed = r.order3_residual < tol;
    r.factor2_passed = r.factor2_residual < tol;
}

void check_tol(double tol)
{
    if (!(tol > 0.0)) {
        throw ArgumentError("relation tolerance must be positive");
    }
}

}  // namespace

double relative_residual(double a, double b, double floor)
{
    const double scale = std::max({std::fabs(a), std::fabs(b), floor});
    if (scale == 0.0) {
        return 0.0;
    }
    return std::fabs(a - b) / scale;
}

FdEstimate extract_eta2(const ConstitutiveLaw& law, double x, const StepPolicy& policy)
{
    const FdEstimate e2 = fd_partial(law.efield, x, 0.0, {0, 2}, policy);
    return {0.5 * e2.value, 0.5 * e2.rounding, e2.step};
}

double extract_eta2(const FreeEnergyModel& m, double x) { return extract_eta2(constitutive_law(m), x).value; }

RelationReport verify_relations(const ConstitutiveLaw& law, double tol, const VerifyOptions& options)
{
    check_tol(tol);
    const StepPolicy& pol = options.policy;
    RelationReport r;
    for (const auto& pt : options.probes) {
        auto fd = [&](const ScalarField& f, int nx, int nd, double d) { return fd_partial(f, pt.x, d, {nx, nd}, pol); };

        // Piezoelectric pair: forward and converse coefficients.
        r.order1_residual = std::max(r.order1_residual, residual(fd(law.stress, 0, 1, pt.d), fd(law.efield, 1, 0, pt.d)));
        // Electrostriction vs photoelasticity.
        r.order2_residual = std::max(r.order2_residual, residual(fd(law.stress, 0, 2, pt.d), fd(law.efield, 1, 1, pt.d)));
        // Cubic electrostriction vs strain derivative of the D^2 field response.
        const FdEstimate cubic = fd(law.stress, 0, 3, pt.d);
        r.order3_residual = std::max(r.order3_residual, residual(cubic, fd(law.efield, 1, 2, pt.d)));

        // Factor-of-two identity, taken at D = 0 where eta2 is defined.
        const FdEstimate cubic0 = fd(law.stress, 0, 3, 0.0);
        FdEstimate slope = outer_x_derivative([&](double xx) { return extract_eta2(law, xx, pol); }, pt.x, pol);
        slope.value *= 2.0;
        slope.rounding *= 2.0;
        r.factor2_residual = std::max(r.factor2_residual, residual(cubic0, slope));
    }
    finish(r, tol, pol);
    return r;
}

RelationReport verify_relations(const FreeEnergyModel& m, double tol, const VerifyOptions& options)
{
    return verify_relations(constitutive_law(m), tol, options);
}

// ---------------------------------------------------------------------------

bool is_kleinman_symmetric(const TensorFreeEnergyModel& m, double rel_tol)
{
    auto symmetric = [rel_tol](const Cube2& t) {
        double scale = 0.0;
        for (const auto& a : t) {
            for (const auto& b : a) {
                for (double v : b) {
                    scale = std::max(scale, std::fabs(v));
                }
            }
        }
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                for (int k = 0; k < 2; ++k) {
                    const double v = t[i][j][k];
                    for (double w : {t[i][k][j], t[j][i][k], t[j][k][i], t[k][i][j], t[k][j][i]}) {
                        if (std::fabs(v - w) > rel_tol * scale) {
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    };
    return symmetric(m.eta2) && symmetric(m.q);
}

namespace {

// Coordinates are (x, D1, D2). `d_indices` lists the D components to
// differentiate by, repeated as needed.
FdEstimate tensor_fd(const VectorField& f, const std::array<double, 3>& point, int nx,
                     std::initializer_list<int> d_indices, const StepPolicy& pol)
{
    int orders[3] = {nx, 0, 0};
    for (int k : d_indices) {
        ++orders[1 + k];
    }
    return fd_partial_nd(f, point, orders, pol);
}

}  // namespace

TensorRelationReport verify_relations(const TensorFreeEnergyModel& m, double tol, const VerifyOptions& options)
{
    check_tol(tol);
    const StepPolicy& pol = options.policy;
    const VectorField stress = [&m](std::span<const double> p) { return stress_of(m, p[0], {p[1], p[2]}); };
    std::array<VectorField, 2> efield;
    for (int k = 0; k < 2; ++k) {
        efield[k] = [&m, k](std::span<const double> p) { return efield_of(m, p[0], {p[1], p[2]})[k]; };
    }

    TensorRelationReport out;
    RelationReport& r = out.relations;
    for (const auto& pt : options.probes) {
        const std::array<double, 3> at{pt.x, pt.d, -0.5 * pt.d + 0.25 * pt.x};
        const std::array<double, 3> at0{pt.x, 0.0, 0.0};
        for (int k = 0; k < 2; ++k) {
            r.order1_residual =
                std::max(r.order1_residual, residual(tensor_fd(stress, at, 0, {k}, pol), tensor_fd(efield[k], at, 1, {}, pol)));
            for (int l = 0; l < 2; ++l) {
                r.order2_residual = std::max(r.order2_residual, residual(tensor_fd(stress, at, 0, {k, l}, pol),
                                                                         tensor_fd(efield[l], at, 1, {k}, pol)));
                for (int n = 0; n < 2; ++n) {
                    r.order3_residual = std::max(r.order3_residual, residual(tensor_fd(stress, at, 0, {k, l, n}, pol),
                                                                             tensor_fd(efield[n], at, 1, {k, l}, pol)));
                    const FdEstimate cubic0 = tensor_fd(stress, at0, 0, {k, l, n}, pol);
                    auto eta2_at = [&](double xx) {
                        const FdEstimate e = tensor_fd(efield[n], {xx, 0.0, 0.0}, 0, {l, k}, pol);
                        return FdEstimate{0.5 * e.value, 0.5 * e.rounding, e.step};
                    };
                    FdEstimate slope = outer_x_derivative(eta2_at, pt.x, pol);
                    slope.value *= 2.0;
                    slope.rounding *= 2.0;
                    r.factor2_residual = std::max(r.factor2_residual, residual(cubic0, slope));
                }
            }
        }
    }
    finish(r, tol, pol);

    if (is_kleinman_symmetric(m)) {
        constexpr double eps0 = constants::eps0.value();
        const std::array<double, 3> origin{0.0, 0.0, 0.0};
        double worst = 0.0;
        for (int k = 0; k < 2; ++k) {
            for (int l = 0; l < 2; ++l) {
                for (int n = 0; n < 2; ++n) {
                    const FdEstimate e2 = tensor_fd(efield[n], origin, 0, {l, k}, pol);
                    worst = std::max(worst, relative_residual(e2.value, m.eta2[n][l][k] + m.eta2[n][k][l],
                                                              kNoiseFloorFactor * e2.rounding));
                    const FdEstimate x3 = tensor_fd(stress, origin, 0, {k, l, n}, pol);
                    worst = std::max(worst, relative_residual(x3.value, 2.0 * m.q[k][l][n] / eps0,
                                                              kNoiseFloorFactor * x3.rounding));
                }
            }
        }
        out.kleinman_residual = worst;
        out.kleinman_passed = worst < tol;
    }
    return out;
}

}  // namespace transduce::thermo
