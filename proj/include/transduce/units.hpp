#pragma once

#include <cmath>
#include <compare>
#include <type_traits>

namespace transduce::units {

// SI dimension exponents over (metre, kilogram, second, ampere). Radians are
// treated as dimensionless.
template <int M, int Kg, int S, int A>
struct Dim
{
    static constexpr int metre = M;
    static constexpr int kilogram = Kg;
    static constexpr int second = S;
    static constexpr int ampere = A;
};

template <class L, class R>
using DimProduct = Dim<L::metre + R::metre, L::kilogram + R::kilogram, L::second + R::second,
                       L::ampere + R::ampere>;

template <class L, class R>
using DimQuotient = Dim<L::metre - R::metre, L::kilogram - R::kilogram, L::second - R::second,
                        L::ampere - R::ampere>;

using NoDim = Dim<0, 0, 0, 0>;

// A double tagged with its dimension. Addition only compiles between equal
// dimensions; multiplication and division compose exponents.
template <class D>
class Quantity
{
public:
    using dimension = D;

    constexpr Quantity() = default;
    constexpr explicit Quantity(double v) : value_(v) {}

    constexpr double value() const { return value_; }

    // Only dimensionless quantities decay to a plain number.
    constexpr operator double() const
        requires std::is_same_v<D, NoDim>
    {
        return value_;
    }

    constexpr Quantity operator-() const { return Quantity(-value_); }
    constexpr Quantity& operator+=(Quantity o)
    {
        value_ += o.value_;
        return *this;
    }
    constexpr Quantity& operator-=(Quantity o)
    {
        value_ -= o.value_;
        return *this;
    }

    friend constexpr Quantity operator+(Quantity a, Quantity b) { return Quantity(a.value_ + b.value_); }
    friend constexpr Quantity operator-(Quantity a, Quantity b) { return Quantity(a.value_ - b.value_); }
    friend constexpr Quantity operator*(double s, Quantity q) { return Quantity(s * q.value_); }
    friend constexpr Quantity operator*(Quantity q, double s) { return Quantity(q.value_ * s); }
    friend constexpr Quantity operator/(Quantity q, double s) { return Quantity(q.value_ / s); }
    friend constexpr auto operator<=>(Quantity a, Quantity b) = default;

private:
    double value_ = 0.0;
};

template <class L, class R>
constexpr Quantity<DimProduct<L, R>> operator*(Quantity<L> a, Quantity<R> b)
{
    return Quantity<DimProduct<L, R>>(a.value() * b.value());
}

template <class L, class R>
constexpr Quantity<DimQuotient<L, R>> operator/(Quantity<L> a, Quantity<R> b)
{
    return Quantity<DimQuotient<L, R>>(a.value() / b.value());
}

template <class D>
constexpr Quantity<DimQuotient<NoDim, D>> operator/(double s, Quantity<D> q)
{
    return Quantity<DimQuotient<NoDim, D>>(s / q.value());
}

template <class D>
Quantity<D> abs(Quantity<D> q)
{
    return Quantity<D>(std::fabs(q.value()));
}

// Square root, defined only when every exponent is even.
template <class D>
    requires(D::metre % 2 == 0 && D::kilogram % 2 == 0 && D::second % 2 == 0 && D::ampere % 2 == 0)
Quantity<Dim<D::metre / 2, D::kilogram / 2, D::second / 2, D::ampere / 2>> sqrt(Quantity<D> q)
{
    return Quantity<Dim<D::metre / 2, D::kilogram / 2, D::second / 2, D::ampere / 2>>(
        std::sqrt(q.value()));
}

template <class A, class B>
inline constexpr bool same_dimension_v = std::is_same_v<typename A::dimension, typename B::dimension>;

using Dimensionless = Quantity<NoDim>;
using Length = Quantity<Dim<1, 0, 0, 0>>;
using Area = Quantity<Dim<2, 0, 0, 0>>;
using Time = Quantity<Dim<0, 0, 1, 0>>;
using AngularFrequency = Quantity<Dim<0, 0, -1, 0>>;  // rad/s
using Wavenumber = Quantity<Dim<-1, 0, 0, 0>>;        // rad/m
using Velocity = Quantity<Dim<1, 0, -1, 0>>;
using Power = Quantity<Dim<2, 1, -3, 0>>;             // W
using Intensity = Quantity<Dim<0, 1, -3, 0>>;         // W/m^2
using EnergyDensity = Quantity<Dim<-1, 1, -2, 0>>;    // J/m^3
using Stress = EnergyDensity;                         // Pa
using Charge = Quantity<Dim<0, 0, 1, 1>>;             // C
using ElectricField = Quantity<Dim<1, 1, -3, -1>>;    // V/m
using DisplacementField = Quantity<Dim<-2, 0, 1, 1>>; // C/m^2
using Permittivity = Quantity<Dim<-3, -1, 4, 2>>;     // F/m
using NonlinearCoefficient = Quantity<Dim<-1, -1, 3, 1>>;  // m/V
using SecondOrderPhotoelasticity = Quantity<Dim<2, 0, -1, -1>>;  // m^2/C

// eta2 relates E to D^2: (V/m) / (C/m^2)^2.
using InverseSusceptibility2 =
    decltype(ElectricField{} / (DisplacementField{} * DisplacementField{}));

// Miller's proportionality constant shares eta2's dimension.
using MillerConstant = InverseSusceptibility2;

static_assert(same_dimension_v<decltype(Permittivity{} * SecondOrderPhotoelasticity{} * ElectricField{}),
                               Dimensionless>,
              "virtual photoelasticity must be dimensionless");
static_assert(same_dimension_v<decltype(Permittivity{} * ElectricField{}), DisplacementField>);
static_assert(same_dimension_v<decltype(Power{} / Area{}), Intensity>);
static_assert(same_dimension_v<decltype(DisplacementField{} * DisplacementField{} / Permittivity{}),
                               EnergyDensity>);
static_assert(same_dimension_v<decltype(NonlinearCoefficient{} / (Permittivity{} * Permittivity{})),
                               InverseSusceptibility2>);
static_assert(same_dimension_v<decltype(Permittivity{} * InverseSusceptibility2{}),
                               SecondOrderPhotoelasticity>);

}  // namespace transduce::units
