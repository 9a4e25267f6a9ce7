#include <doctest.h>

#include <random>

#include "transduce/errors.hpp"
#include "transduce/voigt.hpp"

using namespace transduce;

TEST_CASE("voigt_index follows the crystallographic order")
{
    CHECK(voigt_index(0, 0).value() == 0);
    CHECK(voigt_index(1, 1).value() == 1);
    CHECK(voigt_index(2, 2).value() == 2);
    CHECK(voigt_index(1, 2).value() == 3);
    CHECK(voigt_index(2, 1).value() == 3);
    CHECK(voigt_index(0, 2).value() == 4);
    CHECK(voigt_index(0, 1).value() == 5);
    CHECK_THROWS_AS(voigt_index(3, 0), ArgumentError);
    CHECK_THROWS_AS(voigt_index(0, -1), ArgumentError);
    CHECK_THROWS_AS(VoigtIndex(6), ArgumentError);
}

TEST_CASE("voigt packing is a bijection on unordered pairs")
{
    bool seen[6] = {};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const VoigtIndex v = voigt_index(i, j);
            CHECK(v == voigt_index(j, i));
            const auto [a, b] = voigt_unpack(v);
            CHECK(a == std::min(i, j));
            CHECK(b == std::max(i, j));
            seen[v.value()] = true;
        }
    }
    for (bool s : seen) {
        CHECK(s);
    }
}

TEST_CASE("contract_photoelastic")
{
    std::array<Voigt6, 6> e{};
    e[2][2] = 0.77;
    const PhotoelasticTensor p(e);

    SUBCASE("zero strain gives zero")
    {
        for (double v : contract_photoelastic(p, StrainVoigt{})) {
            CHECK(v == 0.0);
        }
    }

    SUBCASE("single term")
    {
        const auto out = contract_photoelastic(p, StrainVoigt{{0, 0, 1e-4, 0, 0, 0}});
        CHECK(out[2] == doctest::Approx(7.7e-5).epsilon(1e-15));
        for (int v : {0, 1, 3, 4, 5}) {
            CHECK(out[v] == 0.0);
        }
    }

    SUBCASE("linearity and superposition on random draws")
    {
        std::mt19937_64 rng(42);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int trial = 0; trial < 200; ++trial) {
            std::array<Voigt6, 6> r{};
            for (auto& row : r) {
                for (auto& v : row) {
                    v = u(rng);
                }
            }
            const PhotoelasticTensor pr(r);
            StrainVoigt x, y, sum;
            for (int k = 0; k < 6; ++k) {
                x.entries[k] = 1e-3 * u(rng);
                y.entries[k] = 1e-3 * u(rng);
                sum.entries[k] = x.entries[k] + y.entries[k];
            }
            const double a = 3.0 * u(rng);
            StrainVoigt ax;
            for (int k = 0; k < 6; ++k) {
                ax.entries[k] = a * x.entries[k];
            }
            const auto cx = contract_photoelastic(pr, x);
            const auto cy = contract_photoelastic(pr, y);
            const auto cs = contract_photoelastic(pr, sum);
            const auto ca = contract_photoelastic(pr, ax);
            for (int v = 0; v < 6; ++v) {
                CHECK(cs[v] == doctest::Approx(cx[v] + cy[v]).epsilon(1e-12).scale(1e-3));
                CHECK(ca[v] == doctest::Approx(a * cx[v]).epsilon(1e-12).scale(1e-3));
            }
        }
    }
}

TEST_CASE("photoelastic tensor rejects non-finite entries")
{
    std::array<Voigt6, 6> e{};
    e[1][4] = std::nan("");
    CHECK_THROWS_AS(PhotoelasticTensor{e}, ArgumentError);
    CHECK(PhotoelasticTensor{}.at(2, 1, 1, 2) == 0.0);
}

TEST_CASE("small-strain warning threshold")
{
    CHECK_FALSE(StrainVoigt{{1e-3, 0, 0, 0, 0, 0}}.exceeds_small_strain());
    CHECK(StrainVoigt{{0, 0, 0, -2e-2, 0, 0}}.exceeds_small_strain());
}

namespace {

SecondOrderPhotoelastic random_q(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-0.05, 0.05);
    SecondOrderPhotoelastic::Storage s{};
    for (auto& plane : s) {
        for (auto& row : plane) {
            for (auto& v : row) {
                v = u(rng);
            }
        }
    }
    return SecondOrderPhotoelastic(s);
}

}  // namespace

TEST_CASE("check_pair_symmetry")
{
    std::mt19937_64 rng(7);

    SUBCASE("symmetrized random tensor passes at 1e-12")
    {
        for (int trial = 0; trial < 20; ++trial) {
            const auto sym = random_q(rng).symmetrized();
            const auto report = check_pair_symmetry(sym, 1e-12);
            CHECK(report.symmetric());
            CHECK(report.max_asymmetry <= 1e-12);
            // Symmetrization is a projection.
            const auto twice = sym.symmetrized();
            CHECK(check_pair_symmetry(twice, 1e-12).symmetric());
        }
    }

    SUBCASE("fully symmetric fixture has zero asymmetry")
    {
        SecondOrderPhotoelastic::Storage s{};
        for (int h = 0; h < 3; ++h) {
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    for (int kl = 0; kl < 6; ++kl) {
                        s[voigt_index(h, i)][j][kl] = 0.01 * (1 + h + i + j) + 0.001 * kl;
                    }
                }
            }
        }
        const auto report = check_pair_symmetry(SecondOrderPhotoelastic(s), 1e-3);
        CHECK(report.max_asymmetry == 0.0);
        CHECK(report.flagged.empty());
    }

    SUBCASE("one entry perturbed by 10 percent is flagged")
    {
        auto sym = random_q(rng).symmetrized();
        const VoigtIndex hi = voigt_index(0, 1);
        const VoigtIndex kl(4);
        sym.mutable_entry(hi, 2, kl) *= 1.1;
        const auto report = check_pair_symmetry(sym, 1e-3);
        REQUIRE(report.flagged.size() == 1);
        CHECK(report.flagged[0].hi == hi);
        CHECK(report.flagged[0].j == 2);
        CHECK(report.flagged[0].kl == kl);
        CHECK(report.max_asymmetry > 1e-3);
    }

    CHECK_THROWS_AS(check_pair_symmetry(SecondOrderPhotoelastic{}, 0.0), ArgumentError);
}
