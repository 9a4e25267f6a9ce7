#include "transduce/voigt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "transduce/errors.hpp"

namespace transduce {

namespace {

constexpr int kVoigtTable[3][3] = {{0, 5, 4}, {5, 1, 3}, {4, 3, 2}};
constexpr std::pair<int, int> kUnpackTable[6] = {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}};

void check_axis(int a, const char* name)
{
    if (a < 0 || a > 2) {
        throw ArgumentError(std::string("axis ") + name + " = " + std::to_string(a) +
                            " outside 0..2");
    }
}

}  // namespace

VoigtIndex::VoigtIndex(int v) : v_(v)
{
    if (v < 0 || v > 5) {
        throw ArgumentError("Voigt index " + std::to_string(v) + " outside 0..5");
    }
}

VoigtIndex voigt_index(int i, int j)
{
    check_axis(i, "i");
    check_axis(j, "j");
    return VoigtIndex(kVoigtTable[i][j]);
}

std::pair<int, int> voigt_unpack(VoigtIndex v) { return kUnpackTable[v.value()]; }

bool StrainVoigt::exceeds_small_strain() const
{
    return std::any_of(entries.begin(), entries.end(),
                       [](double e) { return std::fabs(e) > 1e-2; });
}

PhotoelasticTensor::PhotoelasticTensor(const std::array<Voigt6, 6>& entries) : entries_(entries)
{
    for (const auto& row : entries_) {
        for (double e : row) {
            if (!std::isfinite(e)) {
                throw ArgumentError("photoelastic tensor entry is not finite");
            }
        }
    }
}

double PhotoelasticTensor::at(int i, int j, int k, int l) const
{
    return entries_[voigt_index(i, j)][voigt_index(k, l)];
}

SecondOrderPhotoelastic::SecondOrderPhotoelastic(const Storage& entries) : entries_(entries)
{
    for (const auto& plane : entries_) {
        for (const auto& row : plane) {
            for (double e : row) {
                if (!std::isfinite(e)) {
                    throw ArgumentError("second-order photoelastic entry is not finite");
                }
            }
        }
    }
}

double SecondOrderPhotoelastic::at(int h, int i, int j, int k, int l) const
{
    check_axis(j, "j");
    return entries_[voigt_index(h, i)][j][voigt_index(k, l)];
}

namespace {

// Distinct (Voigt(ab), c) slots reached by permuting (h, i, j).
std::vector<std::pair<int, int>> optical_orbit(int hi, int j)
{
    auto [h, i] = kUnpackTable[hi];
    int idx[3] = {h, i, j};
    std::sort(idx, idx + 3);
    std::vector<std::pair<int, int>> orbit;
    do {
        std::pair<int, int> slot{kVoigtTable[idx[0]][idx[1]], idx[2]};
        if (std::find(orbit.begin(), orbit.end(), slot) == orbit.end()) {
            orbit.push_back(slot);
        }
    } while (std::next_permutation(idx, idx + 3));
    return orbit;
}

}  // namespace

SecondOrderPhotoelastic SecondOrderPhotoelastic::symmetrized() const
{
    Storage out{};
    for (int hi = 0; hi < 6; ++hi) {
        for (int j = 0; j < 3; ++j) {
            for (int kl = 0; kl < 6; ++kl) {
                // Weight each slot by how many index permutations land on it so
                // the average is over all 6 permutations of (h, i, j).
                auto [h, i] = kUnpackTable[hi];
                int idx[3] = {h, i, j};
                std::sort(idx, idx + 3);
                double sum = 0.0;
                int count = 0;
                do {
                    sum += entries_[kVoigtTable[idx[0]][idx[1]]][idx[2]][kl];
                    ++count;
                } while (std::next_permutation(idx, idx + 3));
                out[hi][j][kl] = sum / count;
            }
        }
    }
    return SecondOrderPhotoelastic(out);
}

Voigt6 contract_photoelastic(const PhotoelasticTensor& p, const StrainVoigt& x)
{
    Voigt6 out{};
    for (std::size_t v = 0; v < 6; ++v) {
        double acc = 0.0;
        for (std::size_t w = 0; w < 6; ++w) {
            acc += p.entries()[v][w] * x.entries[w];
        }
        out[v] = acc;
    }
    return out;
}

SymmetryReport check_pair_symmetry(const SecondOrderPhotoelastic& t, double tol)
{
    if (!(tol > 0.0)) {
        throw ArgumentError("symmetry tolerance must be positive");
    }
    SymmetryReport report;
    const auto& e = t.entries();
    for (int hi = 0; hi < 6; ++hi) {
        for (int j = 0; j < 3; ++j) {
            auto orbit = optical_orbit(hi, j);
            if (orbit.size() < 2) {
                continue;
            }
            for (int kl = 0; kl < 6; ++kl) {
                std::vector<double> values;
                double scale = 0.0;
                for (auto [v, c] : orbit) {
                    values.push_back(e[v][c][kl]);
                    scale = std::max(scale, std::fabs(e[v][c][kl]));
                }
                if (scale == 0.0) {
                    continue;
                }
                std::sort(values.begin(), values.end());
                const std::size_t n = values.size();
                const double median =
                    n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
                const double asym = std::fabs(e[hi][j][kl] - median) / scale;
                report.max_asymmetry = std::max(report.max_asymmetry, asym);
                if (asym > tol) {
                    report.flagged.push_back({VoigtIndex(hi), j, VoigtIndex(kl), asym});
                }
            }
        }
    }
    return report;
}

}  // namespace transduce
