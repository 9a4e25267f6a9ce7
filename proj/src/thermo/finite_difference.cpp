#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "transduce/errors.hpp"
#include "transduce/thermo.hpp"

namespace transduce::thermo {

namespace {

struct Tap
{
    int offset;
    double weight;
};

// Second-order accurate central stencils, weights for unit step.
const std::vector<Tap>& stencil(int order)
{
    static const std::vector<Tap> table[5] = {
        {{0, 1.0}},
        {{-1, -0.5}, {1, 0.5}},
        {{-1, 1.0}, {0, -2.0}, {1, 1.0}},
        {{-2, -0.5}, {-1, 1.0}, {1, -1.0}, {2, 0.5}},
        {{-2, 1.0}, {-1, -4.0}, {0, 6.0}, {1, -4.0}, {2, 1.0}},
    };
    return table[order];
}

struct Raw
{
    double value;
    double rounding;
};

Raw apply(const VectorField& f, std::span<const double> point, std::span<const int> orders,
          const std::vector<double>& steps)
{
    const std::size_t dim = point.size();
    std::vector<double> probe(point.begin(), point.end());
    std::vector<std::size_t> cursor(dim, 0);
    double sum = 0.0;
    double abs_sum = 0.0;
    while (true) {
        double w = 1.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const Tap& t = stencil(orders[i])[cursor[i]];
            w *= t.weight;
            probe[i] = point[i] + t.offset * steps[i];
        }
        const double term = w * f(probe);
        sum += term;
        abs_sum += std::fabs(term);

        std::size_t i = 0;
        for (; i < dim; ++i) {
            if (++cursor[i] < stencil(orders[i]).size()) {
                break;
            }
            cursor[i] = 0;
        }
        if (i == dim) {
            break;
        }
    }
    double scale = 1.0;
    for (std::size_t i = 0; i < dim; ++i) {
        scale *= std::pow(steps[i], orders[i]);
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    return {sum / scale, eps * abs_sum / scale};
}

}  // namespace

FdEstimate fd_partial_nd(const VectorField& f, std::span<const double> point, std::span<const int> orders,
                         const StepPolicy& policy)
{
    if (point.size() != orders.size()) {
        throw ArgumentError("derivative orders must match the point dimension");
    }
    if (!(policy.base > 0.0)) {
        throw ArgumentError("finite-difference base step must be positive");
    }
    for (int o : orders) {
        if (o < 0 || o > 4) {
            throw ArgumentError("per-coordinate derivative order must be 0..4");
        }
    }
    std::vector<double> steps(point.size());
    double largest = 0.0;
    for (std::size_t i = 0; i < point.size(); ++i) {
        steps[i] = policy.base * std::max(1.0, std::fabs(point[i]));
        if (orders[i] > 0) {
            largest = std::max(largest, steps[i]);
        }
    }
    const Raw coarse = apply(f, point, orders, steps);
    if (!policy.richardson) {
        return {coarse.value, coarse.rounding, largest};
    }
    for (double& h : steps) {
        h *= 0.5;
    }
    const Raw fine = apply(f, point, orders, steps);
    // Leading truncation term is O(h^2) on every coordinate.
    return {(4.0 * fine.value - coarse.value) / 3.0, (4.0 * fine.rounding + coarse.rounding) / 3.0, largest};
}

FdEstimate fd_partial(const ScalarField& f, double x, double d, DerivativeOrders orders, const StepPolicy& policy)
{
    if (orders.x < 0 || orders.x > 1 || orders.d < 0 || orders.d > 3) {
        throw ArgumentError("derivative orders (" + std::to_string(orders.x) + ", " + std::to_string(orders.d) +
                            ") exceed the model degree caps (1 in strain, 3 in displacement)");
    }
    const double point[2] = {x, d};
    const int ord[2] = {orders.x, orders.d};
    return fd_partial_nd([&f](std::span<const double> p) { return f(p[0], p[1]); }, point, ord, policy);
}

}  // namespace transduce::thermo
