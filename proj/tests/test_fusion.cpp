#include <doctest.h>

#include "amco/core/rng.hpp"
#include "amco/fusion/maps.hpp"

using namespace amco;

namespace {

GaitTerrainEllipse make_ellipse(TerrainClass t, Gait g, double area,
                                double confidence = 0.95) {
    GaitTerrainEllipse e;
    e.terrain = t;
    e.gait = g;
    e.confidence = confidence;
    const double sqrt_det = area / (M_PI * chi2_quantile_2dof(confidence));
    e.covariance = Eigen::Matrix2d::Identity() * sqrt_det;  // det = sqrt_det^2
    return e;
}

/// Table with per-terrain min areas {stable: 20, granular: 60, poor: 90,
/// high-res: 45} and distinct per-gait argmins.
EllipseTable test_table() {
    EllipseTable t;
    const double areas[kWalkableTerrainCount][kGaitCount] = {
        // trot, crawl, amble
        {20.0, 50.0, 35.0},   // stable -> trot
        {140.0, 60.0, 95.0},  // granular -> crawl
        {200.0, 90.0, 130.0}, // poor foothold -> crawl
        {120.0, 70.0, 45.0},  // high resistance -> amble
    };
    for (int ter = 0; ter < kWalkableTerrainCount; ++ter)
        for (int g = 0; g < kGaitCount; ++g)
            t.set(make_ellipse(TerrainClass(ter), Gait(g), areas[ter][g]));
    return t;
}

SemanticGrid grid_of(const LabelImage& img, int n) {
    return discretize_semantic(img, n);
}

}  // namespace

TEST_CASE("ellipse table: completeness, argmin, io") {
    EllipseTable t = test_table();
    CHECK(t.complete());
    CHECK(t.min_area(TerrainClass::Stable) == doctest::Approx(20.0));
    CHECK(t.argmin_gait(TerrainClass::Stable) == Gait::Trot);
    CHECK(t.argmin_gait(TerrainClass::Granular) == Gait::Crawl);
    CHECK(t.argmin_gait(TerrainClass::HighResistance) == Gait::Amble);

    EllipseTable partial;
    partial.set(make_ellipse(TerrainClass::Stable, Gait::Trot, 10.0));
    CHECK(!partial.complete());
    CHECK_THROWS_AS(partial.validate(), Error);
    CHECK_THROWS_AS(partial.area(TerrainClass::Granular, Gait::Trot), Error);

    const std::string path = "/tmp/amco_table_test.txt";
    t.save(path);
    const EllipseTable l = EllipseTable::load(path);
    for (int ter = 0; ter < kWalkableTerrainCount; ++ter)
        for (int g = 0; g < kGaitCount; ++g)
            CHECK(l.area(TerrainClass(ter), Gait(g)) ==
                  doctest::Approx(t.area(TerrainClass(ter), Gait(g))).epsilon(1e-12));
}

TEST_CASE("general knowledge map: uniform cell costs its class min area") {
    const EllipseTable table = test_table();
    LabelImage img(80, 40, TerrainClass::Granular);
    const CostMap m = general_knowledge_map(grid_of(img, 40), table);
    CHECK(m.width() == 2);
    CHECK(m.height() == 1);
    CHECK(m.at(0, 0) == doctest::Approx(60.0f).epsilon(1e-6));  // gamma = 1

    FusionParams fp;
    CHECK(fp.gamma == 1.0);  // paper default
}

TEST_CASE("general knowledge map: mixed cell averages per-pixel areas") {
    const EllipseTable table = test_table();
    LabelImage img(40, 40);
    // Half stable (min 20), half granular (min 60) -> 40.
    for (int r = 0; r < 40; ++r)
        for (int c = 0; c < 40; ++c)
            img.at(r, c) = r < 20 ? TerrainClass::Stable : TerrainClass::Granular;
    const CostMap m = general_knowledge_map(grid_of(img, 40), table);
    CHECK(m.at(0, 0) == doctest::Approx(40.0f).epsilon(1e-6));
}

TEST_CASE("general knowledge map: obstacle, unknown and the pixel oracle") {
    const EllipseTable table = test_table();
    Rng rng(3);
    LabelImage img(120, 80);
    for (auto& p : img.px)
        p = TerrainClass(rng.uniform_index(kTerrainClassCount));
    const SemanticGrid grid = grid_of(img, 40);
    const FusionParams fp;
    const CostMap m = general_knowledge_map(grid, table, fp);

    // Independent per-pixel summation oracle.
    for (int i = 0; i < grid.height(); ++i) {
        for (int j = 0; j < grid.width(); ++j) {
            double sum = 0.0;
            for (int r = i * 40; r < (i + 1) * 40; ++r) {
                for (int c = j * 40; c < (j + 1) * 40; ++c) {
                    const TerrainClass tc = img.at(r, c);
                    if (tc == TerrainClass::Obstacle) sum += 255.0;
                    else if (tc == TerrainClass::Unknown) sum += fp.u_moderate;
                    else sum += table.min_area(tc);
                }
            }
            const double want =
                std::min(255.0, std::max(0.0, fp.gamma / 1600.0 * sum));
            CHECK(m.at(i, j) == doctest::Approx(want).epsilon(1e-6));
        }
    }
}

TEST_CASE("general knowledge map is permutation-invariant within a cell") {
    const EllipseTable table = test_table();
    Rng rng(17);
    LabelImage a(40, 40);
    for (auto& p : a.px) p = TerrainClass(rng.uniform_index(kTerrainClassCount));
    LabelImage b = a;  // Fisher-Yates shuffle of the same pixel multiset
    for (std::size_t i = b.px.size() - 1; i > 0; --i)
        std::swap(b.px[i], b.px[rng.uniform_index(i + 1)]);
    const CostMap ma = general_knowledge_map(grid_of(a, 40), table);
    const CostMap mb = general_knowledge_map(grid_of(b, 40), table);
    CHECK(ma.at(0, 0) == mb.at(0, 0));
}

TEST_CASE("select_gait: single class, majority, tie and unknown cases") {
    const EllipseTable table = test_table();

    LabelImage stable_img(80, 40, TerrainClass::Stable);
    const SemanticGrid sg = grid_of(stable_img, 40);
    CHECK(select_gait(sg, table, {{0, 0}, {0, 1}}) == Gait::Trot);

    // 60% granular / 40% stable: the granular row decides (crawl).
    LabelImage mixed(80, 40);
    for (int r = 0; r < 40; ++r)
        for (int c = 0; c < 80; ++c)
            mixed.at(r, c) = (c % 5) < 3 ? TerrainClass::Granular
                                         : TerrainClass::Stable;
    CHECK(select_gait(grid_of(mixed, 40), table, {{0, 0}, {0, 1}}) == Gait::Crawl);

    // All-unknown footprint: keep the current gait (signaled as nullopt).
    LabelImage unknown_img(80, 40, TerrainClass::Unknown);
    CHECK(!select_gait(grid_of(unknown_img, 40), table, {{0, 0}, {0, 1}}).has_value());

    CHECK_THROWS_AS(select_gait(sg, table, {}), Error);

    // Equal areas across gaits: tie resolves Trot first.
    EllipseTable tied;
    for (int ter = 0; ter < kWalkableTerrainCount; ++ter)
        for (int g = 0; g < kGaitCount; ++g)
            tied.set(make_ellipse(TerrainClass(ter), Gait(g), 33.0));
    CHECK(select_gait(sg, tied, {{0, 0}}) == Gait::Trot);
}

TEST_CASE("history store: recording, partition, eviction, regression") {
    HistoryStore store(60.0);
    CHECK(!store.traversed(TerrainClass::Granular));

    store.record(TerrainClass::Granular, 2.0, 0.0);
    CHECK(store.traversed(TerrainClass::Granular));
    CHECK(store.count(TerrainClass::Granular) == 1);

    // Interleaved classes stay in their own rings.
    store.record(TerrainClass::Stable, 1.0, 0.1);
    store.record(TerrainClass::Granular, 2.5, 0.2);
    CHECK(store.count(TerrainClass::Granular) == 2);
    CHECK(store.count(TerrainClass::Stable) == 1);
    CHECK(store.norm_sum(TerrainClass::Granular) == doctest::Approx(4.5));

    // Window eviction, replayed with explicit timestamps.
    HistoryStore w(10.0);
    for (int k = 0; k <= 150; ++k) w.record(TerrainClass::Stable, 1.0, k * 0.1);
    CHECK(w.count(TerrainClass::Stable) == 101);  // [5.0, 15.0]
    CHECK(w.samples(TerrainClass::Stable).front().t >= 5.0 - 1e-12);

    CHECK_THROWS_AS(w.record(TerrainClass::Stable, 1.0, 0.0), Error);
    CHECK_THROWS_AS(w.record(TerrainClass::Obstacle, 1.0, 99.0), Error);
}

TEST_CASE("history map: empty Gamma gives all zeros") {
    const EllipseTable table = test_table();
    LabelImage img(120, 80, TerrainClass::Granular);
    const SemanticGrid grid = grid_of(img, 40);
    const CostMap cg = general_knowledge_map(grid, table);
    const HistoryStore store(60.0);
    const CostMap ch = history_map(store, cg, grid);
    for (int i = 0; i < ch.height(); ++i)
        for (int j = 0; j < ch.width(); ++j) CHECK(ch.at(i, j) == 0.0f);
}

TEST_CASE("history map: closed form alpha*T*(c-k) against loop oracle") {
    FusionParams fp;
    CHECK(fp.alpha == 4.5);  // paper value

    const EllipseTable table = test_table();
    LabelImage img(120, 80, TerrainClass::Granular);
    const SemanticGrid grid = grid_of(img, 40);
    const CostMap cg = general_knowledge_map(grid, table, fp);
    const double k = cg.at(0, 0);  // constant prior (= 60)

    // T samples whose scaled norm is a constant c.
    const double c_scaled = 100.0;
    const int T = 7;
    HistoryStore store(60.0);
    for (int i = 0; i < T; ++i)
        store.record(TerrainClass::Granular, c_scaled / fp.kappa, i * 0.1);

    const CostMap ch = history_map(store, cg, grid, fp);
    const double want = fp.alpha * T * (c_scaled - k);
    for (int i = 0; i < ch.height(); ++i)
        for (int j = 0; j < ch.width(); ++j)
            CHECK(ch.at(i, j) == doctest::Approx(want).epsilon(1e-5));

    // Loop oracle with varying norms on a mixed grid.
    Rng rng(5);
    LabelImage mixed(120, 80);
    for (auto& p : mixed.px)
        p = TerrainClass(rng.uniform_index(kWalkableTerrainCount));
    const SemanticGrid mg = grid_of(mixed, 40);
    const CostMap mcg = general_knowledge_map(mg, table, fp);
    HistoryStore hs(60.0);
    std::vector<std::pair<TerrainClass, double>> recs;
    for (int i = 0; i < 40; ++i) {
        const auto terrain = TerrainClass(rng.uniform_index(2));  // stable/granular
        const double norm = rng.uniform(0.0, 4.0);
        hs.record(terrain, norm, i * 0.1);
        recs.push_back({terrain, norm});
    }
    const CostMap mch = history_map(hs, mcg, mg, fp);
    for (int i = 0; i < mg.height(); ++i) {
        for (int j = 0; j < mg.width(); ++j) {
            const TerrainClass tau = mg.at(i, j).majority;
            double want_cell = 0.0;
            if (is_walkable(tau)) {
                bool any = false;
                double sum = 0.0;
                for (const auto& [terrain, norm] : recs) {
                    if (terrain != tau) continue;
                    any = true;
                    sum += fp.kappa * norm - mcg.at(i, j);
                }
                if (any) want_cell = fp.alpha * sum;
            }
            CHECK(mch.at(i, j) == doctest::Approx(want_cell).epsilon(1e-4));
        }
    }

    CHECK_THROWS_AS(history_map(hs, CostMap(2, 2, MapKind::General), mg, fp), Error);
}

TEST_CASE("proprioception map: Eq.-5 closed form") {
    FusionParams fp;
    CHECK(fp.u_moderate == 127.0);
    CHECK(fp.delta == 31.875);

    const CostMap m = proprioception_map(2.0, 11, 9, fp);
    // Bottom-center cell: d = 0 -> 127 - 63.75 = 63.25.
    CHECK(m.at(8, 5) == doctest::Approx(63.25).epsilon(1e-9));
    // Farthest cell (top corner): d = 1 -> 0.
    CHECK(m.at(0, 0) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(m.at(0, 10) == doctest::Approx(0.0).epsilon(1e-9));

    // Whole map zero once the norm crosses U/delta ~ 3.984.
    const CostMap z = proprioception_map(127.0 / 31.875 + 1e-9, 11, 9, fp);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 11; ++j) CHECK(z.at(i, j) == 0.0f);

    // Everything in [0, 255], decreasing along rows toward the top.
    const CostMap p = proprioception_map(0.5, 11, 9, fp);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 11; ++j) {
            CHECK(p.at(i, j) >= 0.0f);
            CHECK(p.at(i, j) <= 255.0f);
        }
    CHECK(p.at(8, 5) > p.at(0, 5));
}

TEST_CASE("couple: identities and elementwise oracle") {
    Rng rng(6);
    const int w = 13, h = 7;
    CostMap cg(w, h, MapKind::General), ch(w, h, MapKind::History),
        cp(w, h, MapKind::Proprio);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) {
            cg.at(i, j) = float(rng.uniform(0, 255));
            ch.at(i, j) = float(rng.uniform(-200, 200));
            cp.at(i, j) = float(rng.uniform(0, 255));
        }

    // xi = 0: coupled equals the proprioception map exactly.
    const CostMap c0 = couple(cg, ch, cp, 0.0);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) CHECK(c0.at(i, j) == cp.at(i, j));

    // xi = 1, zero history: clamp(cg + cp).
    const CostMap zero(w, h, MapKind::History, 0.0f);
    const CostMap c1 = couple(cg, zero, cp, 1.0);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j)
            CHECK(c1.at(i, j) == clamp_cost(cg.at(i, j) + cp.at(i, j)));

    // Random xi against the scalar oracle.
    const CostMap c5 = couple(cg, ch, cp, 0.5);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) {
            const float want =
                clamp_cost(0.5f * (cg.at(i, j) + ch.at(i, j)) + cp.at(i, j));
            CHECK(c5.at(i, j) == want);
        }

    CHECK_THROWS_AS(couple(cg, CostMap(2, 2, MapKind::History), cp, 0.5), Error);
    CHECK_THROWS_AS(couple(cg, ch, cp, 1.5), Error);
}

TEST_CASE("couple is monotone in xi per the sign of cg + ch") {
    Rng rng(7);
    const int w = 9, h = 5;
    CostMap cg(w, h, MapKind::General), ch(w, h, MapKind::History),
        cp(w, h, MapKind::Proprio);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) {
            cg.at(i, j) = float(rng.uniform(0, 200));
            ch.at(i, j) = float(rng.uniform(-300, 300));
            cp.at(i, j) = float(rng.uniform(0, 200));
        }
    const CostMap lo = couple(cg, ch, cp, 0.25);
    const CostMap hi = couple(cg, ch, cp, 0.75);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) {
            const float vision = cg.at(i, j) + ch.at(i, j);
            if (vision >= 0.0f) CHECK(hi.at(i, j) >= lo.at(i, j));
            else CHECK(hi.at(i, j) <= lo.at(i, j));
        }
}
