#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "xxzstrip/bounds.hpp"
#include "xxzstrip/levels.hpp"

using namespace xxzstrip;

TEST_SUITE("bounds") {

TEST_CASE("tunneling constants by direct arithmetic") {
    const DropletConstants dc = droplet_constants(1, 1.0, 4.0);
    CHECK(dc.C == doctest::Approx(1.5 * std::sqrt(5.0) * std::pow(3.0, 1.5)).epsilon(1e-14));
    CHECK(dc.mu == doctest::Approx(0.5 * std::log(5.0 / 3.0)).epsilon(1e-14));

    // delta < 1 switches the min{1, delta^{3/2}} branch
    const DropletConstants dm = droplet_constants(2, 0.25, 2.0);
    CHECK(dm.C == doctest::Approx(1.5 * std::sqrt(5.0) * std::pow(5.0, 1.5) /
                                  std::pow(0.25, 1.5)).epsilon(1e-14));
    CHECK(dm.mu == doctest::Approx(0.5 * std::log1p(0.25 * 2.0 / 10.0)).epsilon(1e-14));

    CHECK_THROWS_AS((void)droplet_constants(1, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)droplet_constants(1, 0.0, 4.0), std::invalid_argument);
    CHECK_THROWS_AS((void)droplet_constants(0, 1.0, 4.0), std::invalid_argument);
}

TEST_CASE("disorder constants by direct arithmetic") {
    const DropletConstants dc = droplet_constants(1, 1.0, 4.0);
    const DisorderConstants xc = disorder_constants(dc, 0.5, 1);
    CHECK(xc.lambda == doctest::Approx(0.5 + 0.5 * std::exp(-dc.mu)).epsilon(1e-14));
    CHECK(xc.C_tilde == doctest::Approx(dc.C).epsilon(1e-14));

    const DisorderConstants x3 = disorder_constants(dc, 0.25, 3);
    CHECK(x3.C_tilde == doctest::Approx(dc.C * std::exp(2.0 * dc.mu)).epsilon(1e-14));
    CHECK_THROWS_AS((void)disorder_constants(dc, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)disorder_constants(dc, 0.5, 0), std::invalid_argument);
}

TEST_CASE("configuration sum cap closed form") {
    CHECK(fsum_cap(1, 2.0) == doctest::Approx(2.0 * std::exp(2.0)).epsilon(1e-14));
    CHECK(fsum_cap(1, 1.0) == doctest::Approx(3.0 * std::exp(4.0)).epsilon(1e-14));
    CHECK(fsum_cap(2, 2.0) == doctest::Approx(3.0 * std::exp(4.0)).epsilon(1e-14));
    CHECK(log_fsum_cap(1, 0.01) ==
          doctest::Approx(std::log1p(200.0) + 400.0).epsilon(1e-12));
}

TEST_CASE("level function of a rectangle") {
    const RectangleSpec rect{2, 3, 2};   // columns 2..4
    CHECK(internal_boundary_distance(rect, Vertex{2, 1}) == 0);
    CHECK(internal_boundary_distance(rect, Vertex{3, 2}) == 1);
    CHECK(internal_boundary_distance(rect, Vertex{6, 1}) == 2);
    CHECK(level_of(rect, Vertex{3, 1}) == -1);
    CHECK(level_of(rect, Vertex{4, 2}) == 0);
    CHECK(level_of(rect, Vertex{0, 1}) == 2);

    const LevelStructure ls = level_structure(rect, ColumnWindow{0, 6});
    REQUIRE(ls.enumeration.size() == 14);
    // deepest column first, then the boundary columns, then outward
    CHECK(ls.enumeration[0] == Vertex{3, 1});
    CHECK(ls.levels.front() == -1);
    CHECK(std::is_sorted(ls.levels.begin(), ls.levels.end()));
}

TEST_CASE("level prefix counts enumeration sites inside the window") {
    const RectangleSpec rect{1, 2, 1};
    // window equal to the rectangle: both rectangle sites precede any outside site
    CHECK(level_prefix_in_window(rect, ColumnWindow{1, 2}) == 2);
    // symmetric margin of one column adds the first outside level completely
    CHECK(level_prefix_in_window(rect, ColumnWindow{0, 3}) == 4);
    // asymmetric window stops at the first missing column of a level set
    CHECK(level_prefix_in_window(rect, ColumnWindow{0, 2}) >= 2);
    CHECK(level_prefix_in_window(rect, ColumnWindow{0, 2}) <
          level_prefix_in_window(rect, ColumnWindow{0, 3}));
}

TEST_CASE("boundary distance lower bound is pointwise valid") {
    const RectangleSpec rect{1, 3, 1};
    CHECK(boundary_distance_lower(rect.configuration(), rect) == 0);

    std::mt19937 gen(23);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Vertex> pts;
        while (pts.size() < 3) {
            const Vertex v{-2 + static_cast<int>(gen() % 10), 1};
            if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
        }
        const Configuration x(std::move(pts));
        CHECK(boundary_distance_lower(x, rect) <=
              config_distance(x, rect.configuration()));
    }
}

TEST_CASE("truncated sum equals the direct exponential sum for one particle") {
    const RectangleSpec rect{1, 1, 1};
    const ColumnWindow window{-2, 4};
    for (double mu : {0.25, 1.0, 2.0}) {
        double direct = 0.0;
        for (int c = -2; c <= 4; ++c) direct += std::exp(-mu * std::abs(c - 1));
        const FsumInterval fs = fsum_truncated(rect, mu, window);
        CHECK(fs.lower == doctest::Approx(direct).epsilon(1e-13));
        CHECK(fs.upper >= fs.lower);
        CHECK(fs.config_count == 7);
    }
}

TEST_CASE("bracket upper end dominates the true infinite sum") {
    // M = 1, N = 1: f = 1 + 2 sum_{d>=1} exp(-mu d) in closed form
    const RectangleSpec rect{1, 1, 1};
    for (double mu : {0.5, 1.0, 2.0}) {
        const double truth = 1.0 + 2.0 * std::exp(-mu) / (1.0 - std::exp(-mu));
        for (int margin : {1, 2, 4, 8}) {
            const FsumInterval fs =
                fsum_truncated(rect, mu, ColumnWindow{1 - margin, 1 + margin});
            CHECK(fs.lower <= truth);
            CHECK(fs.upper >= truth);
        }
    }
}

TEST_CASE("bracket gap shrinks as the window grows") {
    for (int width : {1, 2}) {
        const RectangleSpec rect{1, width, width};
        for (double mu : {0.5, 1.0}) {
            double prev = std::numeric_limits<double>::infinity();
            for (int margin : {1, 2, 3}) {
                const FsumInterval fs = fsum_truncated(
                    rect, mu, ColumnWindow{1 - margin, rect.end_column() + margin});
                const double gap = fs.upper - fs.lower;
                CHECK(gap <= prev);
                CHECK(gap >= 0.0);
                prev = gap;
            }
        }
    }
}

TEST_CASE("tail bound by direct arithmetic") {
    // geometric block times the binomial-weighted inverse powers
    const int n = 2;
    const int width = 1;
    const double mu = 1.0;
    const int prefix = 5;
    const double nu = mu / (2.0 * width);
    const double geo = std::exp(-nu * (prefix - n + 1)) / (1.0 - std::exp(-nu));
    double series = 0.0;
    for (int j = 1; j <= n; ++j) {
        double choose = j == 1 ? 2.0 : 1.0;
        double fact = 1.0;
        for (int i = 2; i < j; ++i) fact *= i;
        series += choose * std::pow(nu, -(j - 1)) / fact;
    }
    CHECK(fsum_tail_bound(n, width, mu, prefix) ==
          doctest::Approx(geo * series).epsilon(1e-12));

    CHECK(fsum_tail_bound(n, width, mu, 9) < fsum_tail_bound(n, width, mu, 5));
    CHECK(fsum_tail_bound(n, width, mu, 200) < 1e-30);
}

TEST_CASE("histogram driven bracket matches the direct one") {
    const RectangleSpec rect{1, 2, 1};
    const ColumnWindow window{-1, 4};
    const DistanceHistogram hist = rect_distance_histogram(rect, window);
    for (double mu : {0.25, 1.5}) {
        const FsumInterval a = fsum_from_histogram(hist, rect, mu, window);
        const FsumInterval b = fsum_truncated(rect, mu, window);
        CHECK(a.lower == doctest::Approx(b.lower).epsilon(1e-15));
        CHECK(a.upper == doctest::Approx(b.upper).epsilon(1e-15));
        CHECK(a.level_prefix == b.level_prefix);
    }
    std::uint64_t total = 0;
    for (const auto& [d, c] : hist) total += c;
    CHECK(total == binomial(6, 2));
    CHECK(hist.at(0) == 1);   // only the rectangle itself sits at distance zero
}

TEST_CASE("family sum check on a small grid") {
    const StripGeometry geom = build_strip(2, 1);
    const FamilyFsumCheck check =
        family_fsum_check(geom, 2, 1, 1.0, ColumnWindow{-4, 7});
    CHECK(check.family_count == 2);
    CHECK(check.lhs > 0.0);
    CHECK(check.rhs_lower <= check.rhs_upper);
    CHECK(check.pass);

    // exact lhs by enumerating the two crossing singletons
    double direct = 0.0;
    for (const Vertex v : {Vertex{3, 1}, Vertex{4, 1}}) {
        const Configuration x({v});
        direct += std::exp(-1.0 * static_cast<double>(
                               family_rect_distance(x, 2, geom).distance));
    }
    CHECK(check.lhs == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("volume cap stays finite and matches the plain formula when small") {
    const DropletConstants dc = droplet_constants(1, 1.0, 4.0);
    for (double alpha : {0.3, 0.5, 0.7}) {
        const double cap = renyi_volume_cap(alpha, 2, dc);
        CHECK(std::isfinite(cap));
        const double direct =
            std::log(6.0 + 16.0 * std::pow(dc.C, 2.0 * alpha) /
                               (1.0 - std::exp(-dc.mu * alpha)) * 1.0 * 2.0 *
                               fsum_cap(1, dc.mu * alpha)) /
            (1.0 - alpha);
        CHECK(cap == doctest::Approx(direct).epsilon(1e-10));
    }
    // extreme alpha overflows the plain formula but not the log-space one
    CHECK(std::isfinite(renyi_volume_cap(0.001, 64, dc)));
}

TEST_CASE("disorder cap assembles from its factors") {
    const DropletConstants dc = droplet_constants(1, 1.0, 4.0);
    const DisorderConstants xc = disorder_constants(dc, 0.5, 1);
    const double alpha = 0.5;
    const double lam_a = std::pow(xc.lambda, alpha);
    const double direct =
        6.0 + 2.0 * std::pow(dc.C * xc.C_tilde, alpha) * 8.0 /
                  (1.0 - std::exp(-dc.mu * alpha / 2.0)) *
                  fsum_cap(1, dc.mu * alpha / 2.0) * lam_a / (1.0 - lam_a);
    CHECK(disorder_log_K(alpha, dc, xc) == doctest::Approx(std::log(direct)).epsilon(1e-10));
    CHECK(disorder_K(alpha, dc, xc) == doctest::Approx(direct).epsilon(1e-10));
    CHECK(ee_expectation_cap(dc, xc) ==
          doctest::Approx(2.0 * disorder_log_K(0.5, dc, xc)).epsilon(1e-14));
}

TEST_CASE("crossing norm cap") {
    CHECK(crossing_norm_cap({}, 0.5) == doctest::Approx(6.0));
    CHECK(crossing_norm_cap({{1.0}}, 0.5) == doctest::Approx(8.0));
    // entries are vector norms n; the weights are n^2, so the cap sums n^(2 alpha)
    CHECK(crossing_norm_cap({{0.25}, {0.5, 0.5}}, 0.5) ==
          doctest::Approx(6.0 + 2.0 * (std::pow(0.25, 2.0 * 0.5) +
                                       2.0 * std::pow(0.5, 2.0 * 0.5))));
    CHECK(crossing_norm_cap({{1.0 + 5e-10}}, 0.5) == doctest::Approx(8.0));
    CHECK_THROWS_AS((void)crossing_norm_cap({{1.1}}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS((void)crossing_norm_cap({{0.5}}, 1.0), std::invalid_argument);
}

}
