#include <doctest.h>

#include <stdexcept>

#include <random>

#include "boxline/predicates.hpp"
#include "boxline/seeding.hpp"
#include "fixtures.hpp"

using namespace boxline;

TEST_CASE("two-point fit brackets the pair's envelope") {
    Dataset d = fixtures::table1();
    ParamBox fit = two_point_fit(d[0], d[1]);

    // Slope spread of lines through ([0.8,1.0],[3.2,4.1]) and
    // ([1.8,2.0],[4.2,5.0]): [0.1/1.2, 1.8/0.8].
    CHECK(fit.a.lo() == doctest::Approx(0.1 / 1.2).epsilon(1e-12));
    CHECK(fit.a.hi() == doctest::Approx(2.25).epsilon(1e-12));
    CHECK(fit.b.lo() == doctest::Approx(0.95).epsilon(1e-12));
    CHECK(fit.b.hi() == doctest::Approx(4.0 + 1.0 / 30.0).epsilon(1e-10));

    // Midpoint slope is always inside.
    CHECK(contains_point(fit.a, (4.6 - 3.65) / (1.9 - 0.9)));
}

TEST_CASE("two-point fit requires disjoint x") {
    Measurement m1{Interval::make(0, 2), Interval::make(0, 1), 1};
    Measurement m2{Interval::make(1, 3), Interval::make(1, 2), 2};
    CHECK_THROWS_AS(two_point_fit(m1, m2), std::invalid_argument);
}

TEST_CASE("sampled member lines always land inside the pair fit") {
    std::mt19937 rng(20260814);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    Dataset d = fixtures::table1();
    for (int t = 0; t < 2000; ++t) {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(d.size()) - 1);
        int i = pick(rng), j = pick(rng);
        if (i == j || !is_disjoint(d[i].x, d[j].x)) continue;
        ParamBox fit = two_point_fit(d[i], d[j]);
        double x1 = d[i].x.lo() + frac(rng) * width(d[i].x);
        double y1 = d[i].y.lo() + frac(rng) * width(d[i].y);
        double x2 = d[j].x.lo() + frac(rng) * width(d[j].x);
        double y2 = d[j].y.lo() + frac(rng) * width(d[j].y);
        double a = (y2 - y1) / (x2 - x1);
        double b = y1 - a * x1;
        CHECK(contains_point(fit.a, a));
        CHECK(contains_point(fit.b, b));
    }
}

TEST_CASE("initial union box spans all pair fits and covers the known hull") {
    Dataset d = fixtures::table1();
    ParamBox seed = initial_union_box(d, 1e40);

    CHECK(seed.a.lo() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(seed.a.hi() == doctest::Approx(12.5).epsilon(1e-12));
    CHECK(seed.b.lo() == doctest::Approx(-99.2).epsilon(1e-10));
    CHECK(seed.b.hi() == doctest::Approx(14.0).epsilon(1e-12));

    // Any sound seed must contain the published answer box.
    CHECK(is_subset(fixtures::kPubA, seed.a));
    CHECK(is_subset(fixtures::kPubB, seed.b));
}

TEST_CASE("union box falls back to the omega square without usable pairs") {
    Dataset d = fixtures::overlapping_x();
    ParamBox seed = initial_union_box(d, 1e6);
    CHECK(seed.a == Interval::make(-1e6, 1e6));
    CHECK(seed.b == Interval::make(-1e6, 1e6));
    CHECK_THROWS_AS(initial_union_box(d, 0.0), std::invalid_argument);
}

TEST_CASE("pairwise intersection box pins the narrow corridor") {
    Dataset d = fixtures::table1();
    auto vt = pairwise_intersection_box(d);
    REQUIRE(vt.has_value());
    REQUIRE_FALSE(vt->is_empty());

    CHECK(vt->a.lo() == doctest::Approx(45.0 / 44.0).epsilon(1e-10));
    CHECK(vt->a.hi() == doctest::Approx(43.0 / 38.0).epsilon(1e-10));
    CHECK(vt->b.lo() == doctest::Approx(2.0684210526).epsilon(1e-9));
    CHECK(vt->b.hi() == doctest::Approx(2.9681818182).epsilon(1e-9));

    // The corridor sits inside the union box, componentwise.
    ParamBox seed = initial_union_box(d, 1e40);
    CHECK(box_subset(*vt, seed));
}

TEST_CASE("pairwise intersection detects contradictory clusters") {
    auto box = pairwise_intersection_box(fixtures::parallel_clusters());
    REQUIRE(box.has_value());
    CHECK(box->is_empty());
}

TEST_CASE("pairwise intersection is indeterminate without disjoint pairs") {
    CHECK_FALSE(pairwise_intersection_box(fixtures::overlapping_x()).has_value());
}

TEST_CASE("serial and parallel seeding agree bit for bit") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 10; ++t) {
        std::vector<std::pair<Interval, Interval>> boxes;
        int n = 8 + t;
        for (int i = 0; i < n; ++i) {
            double x = i + 0.3 * u(rng);
            double y = 1.7 * x + 0.5 + (u(rng) - 0.5);
            boxes.emplace_back(fixtures::centered(x, 0.05 + 0.2 * u(rng)),
                               fixtures::centered(y, 0.3 + 0.5 * u(rng)));
        }
        Dataset d = Dataset::from_boxes(boxes);
        CHECK(initial_union_box(d, 1e40, Exec::serial) ==
              initial_union_box(d, 1e40, Exec::parallel));
        auto s = pairwise_intersection_box(d, Exec::serial);
        auto p = pairwise_intersection_box(d, Exec::parallel);
        REQUIRE(s.has_value() == p.has_value());
        if (s) CHECK(*s == *p);
    }
}

TEST_CASE("auxiliary images are per-measurement line images of the seed") {
    Dataset d = fixtures::table1();
    auto vt = pairwise_intersection_box(d);
    REQUIRE(vt.has_value());
    std::vector<Interval> images = auxiliary_images(*vt, d);
    REQUIRE(images.size() == d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        CHECK(images[i] == line_image(vt->a, vt->b, d[i].x));

    // The corridor through x_1 must still reach y_1, or no tolerable
    // candidate could survive.
    CHECK_FALSE(is_disjoint(images[0], d[0].y));

    CHECK_THROWS_AS(auxiliary_images(ParamBox::empty(), d), std::invalid_argument);
}

TEST_CASE("simple auxiliary image shapes") {
    Dataset d = Dataset::from_boxes({{Interval::make(2, 3), Interval::make(0, 1)},
                                     {Interval::point(1.0), Interval::make(0, 1)}});
    ParamBox thin_line{Interval::point(1.0), Interval::point(0.0)};
    std::vector<Interval> img = auxiliary_images(thin_line, d);
    CHECK(img[0] == Interval::make(2, 3));

    ParamBox spread{Interval::make(1, 2), Interval::make(0, 1)};
    CHECK(auxiliary_images(spread, d)[1] == Interval::make(1, 3));
}
