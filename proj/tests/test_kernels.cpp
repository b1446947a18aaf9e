#include <doctest.h>

#include <cstring>
#include <vector>

#include "amco/core/rng.hpp"
#include "amco/kernels/kernels.hpp"

using namespace amco;
namespace k = amco::kernels;

namespace {

std::vector<float> random_floats(Rng& rng, std::size_t n, float lo, float hi) {
    std::vector<float> v(n);
    for (auto& x : v) x = float(rng.uniform(lo, hi));
    return v;
}

bool bit_equal(const std::vector<float>& a, const std::vector<float>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(float)) == 0;
}

const std::vector<const k::Backend*>& variants() {
    static std::vector<const k::Backend*> v = [] {
        std::vector<const k::Backend*> out;
#if defined(__x86_64__) || defined(_M_X64)
        if (__builtin_cpu_supports("avx2")) out.push_back(&k::avx2_backend());
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
        out.push_back(&k::neon_backend());
#endif
        return out;
    }();
    return v;
}

// Sizes straddling the vector width, including empty and remainder tails.
const std::size_t kSizes[] = {0, 1, 3, 7, 8, 9, 15, 16, 17, 31, 32, 33, 100, 1021};

}  // namespace

TEST_CASE("backend selection") {
    CHECK(k::scalar_backend().name == "scalar");
    CHECK(!k::active_backend().name.empty());
    CHECK_THROWS(k::set_active_backend("not_a_backend"));
    // Restores the detected default for the rest of the process.
    k::set_active_backend(k::active_backend().name);
}

TEST_CASE("fuse_couple variants are bit-exact against scalar") {
    Rng rng(101);
    for (const auto* backend : variants()) {
        for (std::size_t n : kSizes) {
            const auto cg = random_floats(rng, n, -100.0f, 400.0f);
            const auto ch = random_floats(rng, n, -3000.0f, 3000.0f);
            const auto cp = random_floats(rng, n, 0.0f, 255.0f);
            const float xi = float(rng.uniform(0.0, 1.0));
            std::vector<float> ref(n), got(n);
            k::scalar_backend().fuse_couple(ref.data(), cg.data(), ch.data(),
                                            cp.data(), xi, n);
            backend->fuse_couple(got.data(), cg.data(), ch.data(), cp.data(),
                                 xi, n);
            REQUIRE(bit_equal(ref, got));
        }
    }
}

TEST_CASE("scale_clamp and clamp255 variants are bit-exact") {
    Rng rng(102);
    for (const auto* backend : variants()) {
        for (std::size_t n : kSizes) {
            const auto src = random_floats(rng, n, -1.5f, 1.5f);
            const float scale = float(rng.uniform(-300.0, 300.0));
            std::vector<float> ref(n), got(n);
            k::scalar_backend().scale_clamp(ref.data(), src.data(), scale, n);
            backend->scale_clamp(got.data(), src.data(), scale, n);
            REQUIRE(bit_equal(ref, got));

            auto a = random_floats(rng, n, -500.0f, 500.0f);
            auto b = a;
            k::scalar_backend().clamp255(a.data(), n);
            backend->clamp255(b.data(), n);
            REQUIRE(bit_equal(a, b));
        }
    }
}

TEST_CASE("rgb_sums is exact on known and random inputs") {
    // Hand-checkable case.
    std::vector<std::uint8_t> px = {10, 20, 30, 1, 2, 3, 200, 100, 50};
    const auto s = k::scalar_backend().rgb_sums(px.data(), 3);
    CHECK(s.r == 211);
    CHECK(s.g == 122);
    CHECK(s.b == 83);

    Rng rng(103);
    for (const auto* backend : variants()) {
        for (std::size_t n : kSizes) {
            std::vector<std::uint8_t> rgb(3 * n);
            for (auto& b : rgb) b = std::uint8_t(rng.uniform_index(256));
            const auto ref = k::scalar_backend().rgb_sums(rgb.data(), n);
            const auto got = backend->rgb_sums(rgb.data(), n);
            REQUIRE(ref.r == got.r);
            REQUIRE(ref.g == got.g);
            REQUIRE(ref.b == got.b);
        }
    }
}

TEST_CASE("edge_energy variants are bit-exact") {
    Rng rng(104);
    for (const auto* backend : variants()) {
        for (std::size_t n : kSizes) {
            const auto lh = random_floats(rng, n, -200.0f, 200.0f);
            const auto hl = random_floats(rng, n, -200.0f, 200.0f);
            const auto hh = random_floats(rng, n, -200.0f, 200.0f);
            std::vector<float> ref(n), got(n);
            k::scalar_backend().edge_energy(ref.data(), lh.data(), hl.data(),
                                            hh.data(), n);
            backend->edge_energy(got.data(), lh.data(), hl.data(), hh.data(), n);
            REQUIRE(bit_equal(ref, got));
        }
    }
}

TEST_CASE("scalar kernels compute what they claim") {
    // fuse_couple reference semantics, checked against a double-precision
    // reimplementation within float tolerance.
    Rng rng(105);
    const std::size_t n = 257;
    const auto cg = random_floats(rng, n, 0.0f, 255.0f);
    const auto ch = random_floats(rng, n, -400.0f, 400.0f);
    const auto cp = random_floats(rng, n, 0.0f, 255.0f);
    const float xi = 0.625f;
    std::vector<float> out(n);
    k::scalar_backend().fuse_couple(out.data(), cg.data(), ch.data(), cp.data(),
                                    xi, n);
    for (std::size_t i = 0; i < n; ++i) {
        double v = double(xi) * (double(cg[i]) + double(ch[i])) + double(cp[i]);
        v = std::min(255.0, std::max(0.0, v));
        CHECK(out[i] == doctest::Approx(v).epsilon(1e-5));
    }
}
