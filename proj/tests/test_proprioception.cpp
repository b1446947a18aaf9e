#include <doctest.h>

#include <vector>

#include "amco/core/rng.hpp"
#include "amco/proprioception/ellipse.hpp"
#include "amco/proprioception/pca.hpp"

using namespace amco;

namespace {

// Independent eigensolver oracle: power iteration with deflation on the
// sample covariance. Deliberately avoids Eigen's decompositions.
struct TopTwo {
    double l1, l2;
    Eigen::Matrix<double, kSignalDim, 1> v1, v2;
};

TopTwo power_iteration_top2(const std::vector<RawSignal>& samples) {
    RawSignal mean = RawSignal::Zero();
    for (const auto& s : samples) mean += s;
    mean /= double(samples.size());
    Eigen::Matrix<double, kSignalDim, kSignalDim> cov;
    cov.setZero();
    for (const auto& s : samples) {
        RawSignal d = s - mean;
        cov += d * d.transpose();
    }
    cov /= double(samples.size() - 1);

    auto top = [](const Eigen::Matrix<double, kSignalDim, kSignalDim>& m) {
        Eigen::Matrix<double, kSignalDim, 1> v;
        Rng rng(99);
        for (int i = 0; i < kSignalDim; ++i) v(i) = rng.normal();
        v.normalize();
        double lambda = 0.0;
        for (int it = 0; it < 5000; ++it) {
            Eigen::Matrix<double, kSignalDim, 1> w = m * v;
            const double n = w.norm();
            if (n < 1e-300) break;
            w /= n;
            lambda = w.dot(m * w);
            if ((w - v).norm() < 1e-13) { v = w; break; }
            v = w;
        }
        return std::make_pair(lambda, v);
    };

    TopTwo out{};
    auto [l1, v1] = top(cov);
    out.l1 = l1;
    out.v1 = v1;
    const auto deflated = (cov - l1 * v1 * v1.transpose()).eval();
    auto [l2, v2] = top(deflated);
    out.l2 = l2;
    out.v2 = v2;
    return out;
}

RawSignal random_signal(Rng& rng) {
    RawSignal s;
    for (int i = 0; i < kSignalDim; ++i) s(i) = rng.normal();
    return s;
}

}  // namespace

TEST_CASE("fit_pca reconstructs exactly planar data") {
    Rng rng(1);
    RawSignal u1 = random_signal(rng), u2 = random_signal(rng), base = random_signal(rng);
    u1.normalize();
    u2 -= u1.dot(u2) * u1;
    u2.normalize();
    std::vector<RawSignal> samples;
    for (int i = 0; i < 50; ++i)
        samples.push_back(base + rng.uniform(-3, 3) * u1 + rng.uniform(-1, 1) * u2);
    const PcaModel m = fit_pca(samples);
    for (const auto& s : samples) {
        const PcaPoint p = project(m, s);
        const RawSignal rec =
            m.mean + m.components.row(0).transpose() * p.x() +
            m.components.row(1).transpose() * p.y();
        CHECK((rec - s).norm() < 1e-9);
    }
    // Component rows orthonormal.
    CHECK(m.components.row(0).norm() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(m.components.row(1).norm() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(m.components.row(0).dot(m.components.row(1))) < 1e-9);
    CHECK(m.eigenvalues(0) >= m.eigenvalues(1));
}

TEST_CASE("fit_pca captured variance matches the power-iteration oracle") {
    Rng rng(2);
    std::vector<RawSignal> samples;
    for (int i = 0; i < 1000; ++i) {
        RawSignal s = random_signal(rng);
        s(0) *= 3.0;  // widen the spectrum so the top-2 gap is clear
        s(1) *= 2.0;
        samples.push_back(s);
    }
    const PcaModel m = fit_pca(samples);
    const TopTwo oracle = power_iteration_top2(samples);
    CHECK(m.eigenvalues(0) == doctest::Approx(oracle.l1).epsilon(1e-6));
    CHECK(m.eigenvalues(1) == doctest::Approx(oracle.l2).epsilon(1e-6));
    // Directions agree up to sign.
    CHECK(std::abs(m.components.row(0).dot(oracle.v1)) ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(m.components.row(1).dot(oracle.v2)) ==
          doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("fit_pca rejects degenerate data") {
    Rng rng(3);
    const RawSignal s = random_signal(rng);
    CHECK_THROWS_AS(fit_pca({s, s, s, s}), Error);           // zero variance
    CHECK_THROWS_AS(fit_pca({s, s}), Error);                 // too few
    std::vector<RawSignal> line;
    RawSignal dir = random_signal(rng);
    for (int i = 0; i < 10; ++i) line.push_back(s + double(i) * dir);
    CHECK_THROWS_AS(fit_pca(line), Error);                   // rank 1
}

TEST_CASE("fit_pca sign convention is deterministic") {
    Rng rng(4);
    std::vector<RawSignal> samples;
    for (int i = 0; i < 200; ++i) samples.push_back(random_signal(rng));
    const PcaModel a = fit_pca(samples);
    std::vector<RawSignal> flipped = samples;
    std::reverse(flipped.begin(), flipped.end());
    const PcaModel b = fit_pca(flipped);
    CHECK((a.components - b.components).cwiseAbs().maxCoeff() < 1e-9);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < kSignalDim; ++c) {
            if (std::abs(a.components(r, c)) > 1e-12) {
                CHECK(a.components(r, c) > 0.0);
                break;
            }
        }
    }
}

TEST_CASE("project: centered input, axis alignment, batch equals loop") {
    Rng rng(5);
    std::vector<RawSignal> samples;
    for (int i = 0; i < 100; ++i) samples.push_back(random_signal(rng));
    const PcaModel m = fit_pca(samples);

    CHECK(project(m, m.mean).norm() < 1e-12);

    const RawSignal s1 = m.mean + m.components.row(0).transpose();
    const PcaPoint p1 = project(m, s1);
    CHECK(p1.x() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p1.y() == doctest::Approx(0.0).epsilon(1e-12));

    // Batch projection is just the per-sample projection.
    for (const auto& s : samples) {
        const PcaPoint direct = m.components * (s - m.mean);
        CHECK((project(m, s) - direct).norm() < 1e-15);
    }
}

TEST_CASE("traversability norms") {
    CHECK(traversability({0.0, 0.0}) == 0.0);
    CHECK(traversability({3.0, 4.0}) == doctest::Approx(5.0));
    // Mean norm grows with the scale of the sampled cloud.
    Rng rng(6);
    double means[3] = {};
    const double scales[3] = {0.5, 1.0, 2.0};
    for (int k = 0; k < 3; ++k) {
        double acc = 0.0;
        for (int i = 0; i < 20000; ++i)
            acc += traversability(
                {scales[k] * rng.normal(), scales[k] * rng.normal()});
        means[k] = acc / 20000.0;
    }
    CHECK(means[0] < means[1]);
    CHECK(means[1] < means[2]);
}

TEST_CASE("pca model save/load round trip") {
    Rng rng(7);
    std::vector<RawSignal> samples;
    for (int i = 0; i < 50; ++i) samples.push_back(random_signal(rng));
    const PcaModel m = fit_pca(samples);
    const std::string path = "/tmp/amco_pca_test.txt";
    m.save(path);
    const PcaModel l = PcaModel::load(path);
    CHECK((l.mean - m.mean).norm() < 1e-15);
    CHECK((l.components - m.components).cwiseAbs().maxCoeff() < 1e-15);
}

// ---------------------------------------------------------------------------
// Ellipses
// ---------------------------------------------------------------------------

TEST_CASE("fit_ellipse on a unit-circle grid") {
    std::vector<PcaPoint> points;
    const int k = 360;
    for (int i = 0; i < k; ++i) {
        const double a = 2.0 * M_PI * i / k;
        points.push_back({std::cos(a), std::sin(a)});
    }
    const GaitTerrainEllipse e = fit_ellipse(points, 0.95);
    CHECK(e.center.norm() < 1e-12);
    CHECK(e.covariance(0, 0) == doctest::Approx(0.5).epsilon(0.01));
    CHECK(e.covariance(1, 1) == doctest::Approx(0.5).epsilon(0.01));
    CHECK(std::abs(e.covariance(0, 1)) < 1e-9);
}

TEST_CASE("95% ellipse contains about 95% of fresh samples") {
    Rng rng(8);
    std::vector<PcaPoint> fit_points;
    for (int i = 0; i < 10000; ++i)
        fit_points.push_back({rng.normal(), rng.normal()});
    const GaitTerrainEllipse e = fit_ellipse(fit_points, 0.95);
    int inside = 0;
    const int fresh = 10000;
    for (int i = 0; i < fresh; ++i)
        if (e.contains({rng.normal(), rng.normal()})) ++inside;
    const double frac = double(inside) / fresh;
    CHECK(frac > 0.93);
    CHECK(frac < 0.97);
}

TEST_CASE("fit_ellipse rejects collinear points") {
    std::vector<PcaPoint> pts = {{0, 0}, {1, 1}, {2, 2}};
    CHECK_THROWS_AS(fit_ellipse(pts), Error);
    CHECK_THROWS_AS(fit_ellipse({{0, 0}, {1, 1}}), Error);
}

TEST_CASE("ellipse_area closed form") {
    GaitTerrainEllipse e;
    e.covariance = Eigen::Matrix2d::Identity();
    // Confidence with chi-square quantile exactly 1.
    e.confidence = 1.0 - std::exp(-0.5);
    CHECK(chi2_quantile_2dof(e.confidence) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ellipse_area(e) == doctest::Approx(M_PI).epsilon(1e-12));

    // Doubling the covariance doubles the area.
    GaitTerrainEllipse d = e;
    d.covariance *= 2.0;
    CHECK(ellipse_area(d) == doctest::Approx(2.0 * ellipse_area(e)).epsilon(1e-12));

    GaitTerrainEllipse bad = e;
    bad.covariance << 1.0, 2.0, 2.0, 1.0;  // indefinite
    CHECK_THROWS_AS(ellipse_area(bad), Error);
}

TEST_CASE("ellipse_area matches rejection sampling within 1%") {
    GaitTerrainEllipse e;
    e.center << 0.3, -0.2;
    e.covariance << 1.3, 0.4, 0.4, 0.7;
    e.confidence = 0.95;
    const double analytic = ellipse_area(e);

    const double chi2 = chi2_quantile_2dof(e.confidence);
    const double hx = std::sqrt(chi2 * e.covariance(0, 0));
    const double hy = std::sqrt(chi2 * e.covariance(1, 1));
    Rng rng(9);
    const int n = 400000;
    int inside = 0;
    for (int i = 0; i < n; ++i) {
        const PcaPoint p{e.center.x() + rng.uniform(-hx, hx),
                         e.center.y() + rng.uniform(-hy, hy)};
        if (e.contains(p)) ++inside;
    }
    const double estimate = 4.0 * hx * hy * double(inside) / n;
    CHECK(estimate == doctest::Approx(analytic).epsilon(0.01));
}

TEST_CASE("area is invariant under rotation of the point cloud") {
    Rng rng(10);
    std::vector<PcaPoint> pts;
    for (int i = 0; i < 4000; ++i)
        pts.push_back({2.0 * rng.normal() + 1.0, 0.5 * rng.normal() - 0.4});
    const double base = ellipse_area(fit_ellipse(pts, 0.95));
    for (double angle : {0.3, 1.1, 2.7}) {
        Eigen::Rotation2Dd rot(angle);
        std::vector<PcaPoint> rotated;
        for (const auto& p : pts) rotated.push_back(rot * p);
        const double area = ellipse_area(fit_ellipse(rotated, 0.95));
        CHECK(area == doctest::Approx(base).epsilon(1e-9));
    }
}

TEST_CASE("same-confidence areas order by covariance determinant") {
    Rng rng(11);
    std::vector<GaitTerrainEllipse> es;
    for (int k = 0; k < 6; ++k) {
        GaitTerrainEllipse e;
        const double a = rng.uniform(0.2, 3.0), b = rng.uniform(0.2, 3.0);
        const double c = rng.uniform(-0.5, 0.5) * std::sqrt(a * b) * 0.5;
        e.covariance << a, c, c, b;
        e.confidence = 0.95;
        es.push_back(e);
    }
    for (const auto& x : es)
        for (const auto& y : es) {
            const bool det_less =
                x.covariance.determinant() < y.covariance.determinant();
            const bool area_less = ellipse_area(x) < ellipse_area(y);
            CHECK(det_less == area_less);
        }
}
