#include "transduce/thermo.hpp"

#include "transduce/constants.hpp"

namespace transduce::thermo {

namespace {

constexpr double kEps0 = constants::eps0.value();

}  // namespace

double eval_free_energy(const FreeEnergyModel& m, double x, double d)
{
    const double d2 = d * d;
    const double d3 = d2 * d;
    return 0.5 * m.c * x * x + m.h * x * d + 0.5 * m.eta1 * d2 + m.eta2 * d3 / 3.0 +
           m.p * x * d2 / (2.0 * kEps0) + m.q * x * d3 / (3.0 * kEps0);
}

double stress_of(const FreeEnergyModel& m, double x, double d)
{
    const double d2 = d * d;
    return m.c * x + m.h * d + m.p * d2 / (2.0 * kEps0) + m.q * d2 * d / (3.0 * kEps0);
}

double efield_of(const FreeEnergyModel& m, double x, double d)
{
    return m.h * x + m.eta1 * d + m.eta2 * d * d + m.p * x * d / kEps0 + m.q * x * d * d / kEps0;
}

ConstitutiveLaw constitutive_law(const FreeEnergyModel& m)
{
    return {[m](double x, double d) { return stress_of(m, x, d); },
            [m](double x, double d) { return efield_of(m, x, d); }};
}

double eval_free_energy(const TensorFreeEnergyModel& m, double x, const Vec2& d)
{
    double a = 0.5 * m.c * x * x;
    for (int k = 0; k < 2; ++k) {
        a += x * m.h[k] * d[k];
        for (int l = 0; l < 2; ++l) {
            const double dd = d[k] * d[l];
            a += 0.5 * m.eta1[k][l] * dd + x * m.p[k][l] * dd / (2.0 * kEps0);
            for (int n = 0; n < 2; ++n) {
                const double ddd = dd * d[n];
                a += m.eta2[k][l][n] * ddd / 3.0 + x * m.q[k][l][n] * ddd / (3.0 * kEps0);
            }
        }
    }
    return a;
}

double stress_of(const TensorFreeEnergyModel& m, double x, const Vec2& d)
{
    double s = m.c * x;
    for (int k = 0; k < 2; ++k) {
        s += m.h[k] * d[k];
        for (int l = 0; l < 2; ++l) {
            s += m.p[k][l] * d[k] * d[l] / (2.0 * kEps0);
            for (int n = 0; n < 2; ++n) {
                s += m.q[k][l][n] * d[k] * d[l] * d[n] / (3.0 * kEps0);
            }
        }
    }
    return s;
}

// dA/dD_k for general (not necessarily symmetric) coefficient tensors.
Vec2 efield_of(const TensorFreeEnergyModel& m, double x, const Vec2& d)
{
    Vec2 e{};
    for (int k = 0; k < 2; ++k) {
        double v = x * m.h[k];
        for (int b = 0; b < 2; ++b) {
            v += 0.5 * (m.eta1[k][b] + m.eta1[b][k]) * d[b];
            v += x * (m.p[k][b] + m.p[b][k]) * d[b] / (2.0 * kEps0);
            for (int c = 0; c < 2; ++c) {
                const double dd = d[b] * d[c];
                v += (m.eta2[k][b][c] + m.eta2[b][k][c] + m.eta2[b][c][k]) * dd / 3.0;
                v += x * (m.q[k][b][c] + m.q[b][k][c] + m.q[b][c][k]) * dd / (3.0 * kEps0);
            }
        }
        e[k] = v;
    }
    return e;
}

}  // namespace transduce::thermo
