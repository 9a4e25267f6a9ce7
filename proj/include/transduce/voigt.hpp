#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace transduce {

// Packed index of a symmetric Cartesian pair (i, j).
// Order: xx, yy, zz, yz, xz, xy.
class VoigtIndex
{
public:
    constexpr VoigtIndex() = default;
    // Throws ArgumentError unless 0 <= v <= 5.
    explicit VoigtIndex(int v);

    constexpr int value() const { return v_; }
    constexpr operator std::size_t() const { return static_cast<std::size_t>(v_); }
    friend constexpr bool operator==(VoigtIndex, VoigtIndex) = default;

private:
    int v_ = 0;
};

// Throws ArgumentError for i or j outside 0..2.
VoigtIndex voigt_index(int i, int j);

// Inverse of voigt_index, returned with first <= second.
std::pair<int, int> voigt_unpack(VoigtIndex v);

using Voigt6 = std::array<double, 6>;

// Strain x_kl in tensor-strain packing (shear components carry no factor 2).
struct StrainVoigt
{
    Voigt6 entries{};

    // True if any component magnitude exceeds the small-strain bound (1e-2).
    bool exceeds_small_strain() const;
};

// First-order photoelastic tensor p_ijkl, entries[Voigt(ij)][Voigt(kl)].
class PhotoelasticTensor
{
public:
    PhotoelasticTensor() = default;
    // Throws ArgumentError on non-finite entries.
    explicit PhotoelasticTensor(const std::array<Voigt6, 6>& entries);

    double operator()(VoigtIndex ij, VoigtIndex kl) const { return entries_[ij][kl]; }
    double at(int i, int j, int k, int l) const;
    const std::array<Voigt6, 6>& entries() const { return entries_; }

private:
    std::array<Voigt6, 6> entries_{};
};

// Second-order photoelastic tensor q_hijkl in m^2/C,
// entries[Voigt(hi)][j][Voigt(kl)].
class SecondOrderPhotoelastic
{
public:
    using Storage = std::array<std::array<Voigt6, 3>, 6>;

    SecondOrderPhotoelastic() = default;
    // Throws ArgumentError on non-finite entries.
    explicit SecondOrderPhotoelastic(const Storage& entries);

    double operator()(VoigtIndex hi, int j, VoigtIndex kl) const { return entries_[hi][j][kl]; }
    double& mutable_entry(VoigtIndex hi, int j, VoigtIndex kl) { return entries_[hi][j][kl]; }
    double at(int h, int i, int j, int k, int l) const;
    const Storage& entries() const { return entries_; }

    // Average each entry over all permutations of the three optical indices.
    SecondOrderPhotoelastic symmetrized() const;

private:
    Storage entries_{};
};

// Delta(eps0 * eta)_V = sum_W p[V][W] x[W].
Voigt6 contract_photoelastic(const PhotoelasticTensor& p, const StrainVoigt& x);

struct SymmetryEntry
{
    VoigtIndex hi;
    int j = 0;
    VoigtIndex kl;
    double asymmetry = 0.0;  // relative deviation from the permutation-orbit median
};

struct SymmetryReport
{
    double max_asymmetry = 0.0;
    std::vector<SymmetryEntry> flagged;

    bool symmetric() const { return flagged.empty(); }
};

// Compares every entry q[hi][j][kl] against the entries reached by permuting
// the optical indices (h, i, j), the interchange implied by Kleinman symmetry.
// Entries deviating from their orbit's median by more than tol (relative to the
// orbit's largest magnitude) are flagged. Throws ArgumentError unless tol > 0.
SymmetryReport check_pair_symmetry(const SecondOrderPhotoelastic& t, double tol);

}  // namespace transduce
