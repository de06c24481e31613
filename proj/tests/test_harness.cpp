#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <vector>

#include "rrt/experiments.hpp"
#include "rrt/gem.hpp"
#include "rrt/harness.hpp"
#include "rrt/io.hpp"

using namespace rrt;

namespace {

// sup |F_a - F_b| evaluated at every sample point by counting.
double ks_naive(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    auto cdf = [](const std::vector<double>& s, double x) {
        return static_cast<double>(std::count_if(s.begin(), s.end(), [&](double v) { return v <= x; }))
               / static_cast<double>(s.size());
    };
    for (const auto* s : {&a, &b}) {
        for (double x : *s) d = std::max(d, std::abs(cdf(a, x) - cdf(b, x)));
    }
    return d;
}

}  // namespace

TEST_CASE("estimates") {
    auto constant = mc_estimate([](CounterRng&, std::size_t) { return 3.0; }, 100, 1, 3.0);
    CHECK(constant.mean == 3.0);
    CHECK(constant.std_error == 0.0);
    CHECK(constant.within());
    CHECK_FALSE(mc_estimate([](CounterRng&, std::size_t) { return 3.0; }, 100, 1, 2.0).within());

    std::vector<double> v{1, 2, 3, 4};
    auto e = make_estimate(v, 2.0);
    CHECK(e.mean == 2.5);
    CHECK(e.std_error == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
    CHECK(*e.z_score == doctest::Approx(0.5 / e.std_error));
    CHECK(make_estimate(v).within());
    CHECK_THROWS_AS(make_estimate(std::vector<double>{}), std::invalid_argument);
    CHECK(e.str().find("target=2") != std::string::npos);
}

TEST_CASE("pairwise summation") {
    std::vector<double> v(1000);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i) * 0.5;
    CHECK(pairwise_sum(v) == 249750.0);
    CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
    std::vector<double> tiny(1 << 20, 0.1);
    CHECK(pairwise_sum(tiny) == doctest::Approx(104857.6).epsilon(1e-14));
}

TEST_CASE("replication is indexed by replication number") {
    auto f = [](CounterRng& rng, std::size_t r) { return rng.uniform() + static_cast<double>(r); };
    auto one = replicate<double>(1001, 5, f, 1);
    for (unsigned threads : {2u, 3u, 8u}) CHECK(replicate<double>(1001, 5, f, threads) == one);
    auto longer = replicate<double>(2000, 5, f, 3);
    CHECK(std::equal(one.begin(), one.end(), longer.begin()));
    CHECK(replicate<double>(10, 6, f, 1) != std::vector<double>(one.begin(), one.begin() + 10));
    CHECK(replication_stream(5, 3).uniform() == replication_stream(5, 3).uniform());
}

TEST_CASE("two-sample KS statistic") {
    std::vector<double> a{0.1, 0.4, 0.4, 0.7, 0.9};
    CHECK(ks_two_sample(a, a) == 0.0);
    CHECK(ks_two_sample(a, std::vector<double>{2, 3}) == 1.0);
    CounterRng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> x(1 + trial % 7), y(1 + trial % 5);
        // Coarse values force ties inside and across the samples.
        for (auto& v : x) v = std::floor(rng.uniform() * 4);
        for (auto& v : y) v = std::floor(rng.uniform() * 4);
        CHECK(ks_two_sample(x, y) == doctest::Approx(ks_naive(x, y)));
    }
    CHECK_THROWS_AS(ks_two_sample(a, std::vector<double>{}), std::invalid_argument);
    CHECK(ks_critical_value(100, 100) == doctest::Approx(1.63 * std::sqrt(0.02)));

    // First sticks of independent standard GEM draws share a law.
    int below = 0;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        auto sticks = [&](std::uint64_t seed) {
            return replicate<double>(500, seed, [](CounterRng& r, std::size_t) {
                return sample_gem(GemParams{}, 8, r).masses[0];
            });
        };
        if (ks_two_sample(sticks(2 * trial + 10), sticks(2 * trial + 11)) < ks_critical_value(500, 500)) ++below;
    }
    CHECK(below >= 95);
}

TEST_CASE("default thread count") {
    ::setenv("RRT_THREADS", "3", 1);
    CHECK(default_threads() == 3);
    ::setenv("RRT_THREADS", "zero", 1);
    CHECK(default_threads() >= 1);
    ::unsetenv("RRT_THREADS");
    CHECK(default_threads() >= 1);
}

TEST_CASE("simulated functionals") {
    constexpr std::size_t n = 100;
    auto records = simulate_functionals(n, 4000, 21, default_threads());
    std::vector<double> centered;
    for (const auto& r : records) {
        CHECK(r.n == n);
        CHECK(r.comparisons == r.tpl + r.hpl);
        centered.push_back(static_cast<double>(r.tpl) / n - harmonic(n) + 1.0);
    }
    auto e = make_estimate(centered, 0.0);
    CHECK_MESSAGE(e.within(), e.str());
    CHECK(simulate_functionals(50, 30, 4, 1)[7].wiener == simulate_functionals(50, 30, 4, 3)[7].wiener);
    CHECK_THROWS_AS(simulate_functionals(0, 1, 1), std::invalid_argument);
}

TEST_CASE("limit sampling configuration") {
    LimitSampleConfig cfg;
    cfg.mode = LimitMode::conditional;
    CHECK_THROWS_AS(sample_limits(cfg), std::invalid_argument);
    cfg.mode = LimitMode::unconditional;
    cfg.reps = 0;
    CHECK_THROWS_AS(sample_limits(cfg), std::invalid_argument);
    CHECK(parse_limit_mode("input") == LimitMode::from_input);
    CHECK(parse_limit_mode("from_input") == LimitMode::from_input);
    CHECK(to_string(LimitMode::conditional) == "conditional");
    CHECK_THROWS_AS(parse_limit_mode("posterior"), std::invalid_argument);
}

TEST_CASE("CSV output") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
    CHECK(format_double(0.1) == "0.1");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);

    std::ostringstream os;
    FunctionalRecord r;
    r.n = 4;
    r.tpl = 4;
    r.hpl = 1;
    r.wiener = 10;
    r.comparisons = 5;
    std::vector<FunctionalRecord> recs{r};
    write_functional_csv(os, recs);
    CHECK(os.str() == "replication,n,tpl,hpl,wiener,comparisons\n0,4,4,1,10,5\n");

    std::ostringstream ls;
    std::vector<SeriesValues> s{{0.5, -0.25, 2.0}};
    write_limit_csv(ls, s);
    CHECK(ls.str() == "replication,y,z,w,y_plus_z\n0,0.5,-0.25,2,0.25\n");

    std::ostringstream ds;
    ExactDist d{3, {{2, 1}, {3, 1}}};
    write_exact_dist_csv(ds, d);
    CHECK(ds.str() == "value,numerator,denominator\n2,1,2\n3,1,2\n");

    std::ostringstream js;
    write_joint_table_csv(js, JointTable{{{1, 0}, 1}});
    CHECK(js.str() == "tpl,hpl,count\n1,0,1\n");
}

TEST_CASE("JSON round trips") {
    std::vector<Word> words{{}, {1}, {2}, {1, 1}};
    HarrisTree x = HarrisTree::from_words(words);
    nlohmann::json j = tree_to_json(x);
    CHECK(j.is_array());
    CHECK(tree_from_json(j) == x);
    CHECK(tree_from_json(nlohmann::json::parse("[[], [1], [2], [1, 1]]")) == x);
    CHECK_THROWS_AS(tree_from_json(nlohmann::json::parse("[\"()\", \"(2)\"]")), InvalidTree);
    CHECK_THROWS_AS(tree_from_json(nlohmann::json::parse("{\"a\": 1}")), std::invalid_argument);
    CHECK_THROWS_AS(tree_from_json(nlohmann::json::parse("[1.5]")), std::invalid_argument);

    Encoding e{1, 2, 1, 3};
    CHECK(encoding_from_json(encoding_to_json(e)) == e);
    CHECK_THROWS_AS(encoding_from_json(nlohmann::json::parse("[1, 3]")), std::invalid_argument);

    SimplexVec s{{0.5, 0.25}, 0.25};
    nlohmann::json sj = simplex_to_json(s);
    CHECK(sj["masses"].get<std::vector<double>>() == s.masses);
    CHECK(sj["residual"].get<double>() == 0.25);

    std::vector<double> t{.83, .04, .81, .22, .59, .01, .39, .42, .17};
    nlohmann::json tj = trace_to_json(rt_build(t, 10));
    CHECK(tj.size() == 10);
    CHECK(tj["(2,2)"]["tau"] == 4);
    CHECK(tj["(2,2)"]["kappa"] == 2);
    CHECK(tj["(2,2)"]["label"].get<double>() == 0.22);
    CHECK_THROWS_AS(read_file("/nonexistent/tree.json"), std::runtime_error);
}

TEST_CASE("Philox4x32-10 known answers") {
    // Reference vectors distributed with Random123 (kat_vectors).
    auto block = [](std::uint32_t c0, std::uint32_t c1, std::uint32_t c2, std::uint32_t c3, std::uint32_t k0,
                    std::uint32_t k1) {
        auto out = CounterRng::generate((std::uint64_t{k1} << 32) | k0, (std::uint64_t{c1} << 32) | c0,
                                        (std::uint64_t{c3} << 32) | c2);
        return std::array<std::uint32_t, 4>{static_cast<std::uint32_t>(out[0]), static_cast<std::uint32_t>(out[0] >> 32),
                                            static_cast<std::uint32_t>(out[1]), static_cast<std::uint32_t>(out[1] >> 32)};
    };
    CHECK(block(0, 0, 0, 0, 0, 0) == std::array<std::uint32_t, 4>{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(block(0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff)
          == std::array<std::uint32_t, 4>{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(block(0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344, 0xa4093822, 0x299f31d0)
          == std::array<std::uint32_t, 4>{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}
