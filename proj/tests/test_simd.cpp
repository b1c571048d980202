#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "paracert/simd/kernels.hpp"

using namespace paracert;
using simd::FrameResidualMax;
using simd::KernelTable;

namespace {

std::vector<double> random_doubles(std::size_t n, std::mt19937_64& rng,
                                   double scale) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

}  // namespace

TEST_CASE("registry: scalar is always available and active is registered") {
    const auto variants = simd::available_kernels();
    REQUIRE(!variants.empty());
    CHECK(variants[0] == &simd::scalar_kernels());
    CHECK(simd::kernel_by_name("scalar") == &simd::scalar_kernels());
    CHECK(simd::kernel_by_name("imaginary-isa") == nullptr);

    bool active_known = false;
    for (const KernelTable* t : variants)
        active_known = active_known || t == &simd::active();
    CHECK(active_known);

    for (const KernelTable* t : variants) {
        INFO("variant: ", t->name);
        CHECK(t->xor_words != nullptr);
        CHECK(t->and_parity != nullptr);
        CHECK(t->frame_residual_max != nullptr);
    }
}

TEST_CASE("xor_words: every variant matches the scalar reference") {
    std::mt19937_64 rng(0xd15ea5e);
    for (const KernelTable* variant : simd::available_kernels()) {
        INFO("variant: ", variant->name);
        for (std::size_t words : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 33u, 64u}) {
            std::vector<std::uint64_t> a(words), b(words);
            for (auto& w : a) w = rng();
            for (auto& w : b) w = rng();
            auto expect = a;
            simd::scalar_kernels().xor_words(expect.data(), b.data(), words);
            auto got = a;
            variant->xor_words(got.data(), b.data(), words);
            REQUIRE(got == expect);
        }
    }
}

TEST_CASE("and_parity: every variant matches the scalar reference") {
    std::mt19937_64 rng(0xd15ea5f);
    for (const KernelTable* variant : simd::available_kernels()) {
        INFO("variant: ", variant->name);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t words = rng() % 40;
            std::vector<std::uint64_t> a(words), b(words);
            for (auto& w : a) w = rng();
            for (auto& w : b) w = rng();
            REQUIRE(variant->and_parity(a.data(), b.data(), words) ==
                    simd::scalar_kernels().and_parity(a.data(), b.data(),
                                                      words));
        }
    }
}

TEST_CASE("and_parity: hand values") {
    const std::uint64_t a[2] = {0b1011, ~0ull};
    const std::uint64_t b[2] = {0b0011, 0};
    // popcount(a & b) = popcount(0b0011) = 2 -> even
    CHECK(simd::scalar_kernels().and_parity(a, b, 2) == 0);
    const std::uint64_t c[1] = {0b111};
    const std::uint64_t d[1] = {0b100};
    CHECK(simd::scalar_kernels().and_parity(c, d, 1) == 1);
}

TEST_CASE("frame_residual_max: variants are bit-identical to scalar") {
    std::mt19937_64 rng(0xd15ea60);
    for (const KernelTable* variant : simd::available_kernels()) {
        INFO("variant: ", variant->name);
        // off-sphere inputs included: equivalence must hold pointwise
        // regardless of the residual magnitudes
        for (std::size_t count :
             {0u, 1u, 2u, 3u, 4u, 5u, 8u, 31u, 64u, 257u, 1000u}) {
            const auto x1 = random_doubles(count, rng, 2.0);
            const auto y1 = random_doubles(count, rng, 2.0);
            const auto x2 = random_doubles(count, rng, 2.0);
            const auto y2 = random_doubles(count, rng, 2.0);

            FrameResidualMax expect;
            simd::scalar_kernels().frame_residual_max(
                x1.data(), y1.data(), x2.data(), y2.data(), count, expect);
            FrameResidualMax got;
            variant->frame_residual_max(x1.data(), y1.data(), x2.data(),
                                        y2.data(), count, got);

            REQUIRE(got.tangency == expect.tangency);
            REQUIRE(got.orthonormality == expect.orthonormality);
            REQUIRE(got.alpha_e1 == expect.alpha_e1);
            REQUIRE(got.alpha_e23 == expect.alpha_e23);
            REQUIRE(got.dalpha_e2e3 == expect.dalpha_e2e3);
            REQUIRE(got.quaternion == expect.quaternion);
        }
    }
}

TEST_CASE("frame_residual_max folds into existing maxima") {
    const double x1[1] = {1.0}, y1[1] = {0.0}, x2[1] = {0.0}, y2[1] = {0.0};
    for (const KernelTable* variant : simd::available_kernels()) {
        FrameResidualMax m;
        m.tangency = 0.5;
        variant->frame_residual_max(x1, y1, x2, y2, 1, m);
        CHECK(m.tangency == 0.5);  // residual 0 at the pole keeps the max
    }
}
