// Copyright 2026 The qaoa-spsa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "qaoa_spsa/spsa.hpp"
#include "test_util.hpp"

namespace qaoa_spsa {
namespace {

double bowl(const Graph&, const QaoaParams& p) {
    const double dg = p.gammas[0] - 1.0;
    const double db = p.betas[0] - 1.0;
    return -dg * dg - db * db;
}

TEST(SpsaConfig, Validation) {
    SpsaConfig c;
    EXPECT_NO_THROW(c.validate());
    auto bad = [](auto mutate) {
        SpsaConfig cfg;
        mutate(cfg);
        EXPECT_THROW(cfg.validate(), ConfigError);
    };
    bad([](SpsaConfig& cfg) { cfg.n_iterations = 0; });
    bad([](SpsaConfig& cfg) { cfg.a_start = 0; });
    bad([](SpsaConfig& cfg) { cfg.c_start = -1; });
    bad([](SpsaConfig& cfg) { cfg.decay = -0.1; });
    bad([](SpsaConfig& cfg) { cfg.c_floor = 0; });
    bad([](SpsaConfig& cfg) { cfg.init_half_range = -1; });
    bad([](SpsaConfig& cfg) { cfg.a_start = NAN; });
}

TEST(GainSchedule, ClosedForms) {
    SpsaConfig c;
    c.n_iterations = 100;
    const GainSchedule g = gain_schedule(c);
    ASSERT_EQ(g.a.size(), 100u);
    EXPECT_EQ(g.a[0], 0.25);
    EXPECT_EQ(g.a[3], 0.125);
    EXPECT_NEAR(g.c[99], 0.025, 1e-15);
    for (std::size_t i = 1; i < 100; ++i) {
        EXPECT_LE(g.a[i], g.a[i - 1]);
        EXPECT_LE(g.c[i], g.c[i - 1]);
        EXPECT_EQ(g.a[i], 0.25 / std::pow(static_cast<double>(i + 1), 0.5));
    }
}

TEST(GainSchedule, PerturbationFloor) {
    SpsaConfig c;
    c.n_iterations = 1000;
    const GainSchedule g = gain_schedule(c);
    // 0.25 / sqrt(i+1) drops below 0.01 once i+1 > 625
    EXPECT_GT(g.c[623], 0.01);
    EXPECT_EQ(g.c[625], 0.01);
    EXPECT_EQ(g.c[999], 0.01);
    EXPECT_LT(g.a[999], 0.01);  // no floor on a
}

TEST(InitParams, RangeAndDeterminism) {
    Rng zero_rng(1);
    EXPECT_EQ(init_params(3, 0.0, zero_rng), QaoaParams::zeros(3));

    Rng a(5);
    Rng b(5);
    const QaoaParams pa = init_params(2, 0.1, a);
    const QaoaParams pb = init_params(2, 0.1, b);
    EXPECT_EQ(pa, pb);
    ASSERT_EQ(pa.gammas.size(), 2u);
    ASSERT_EQ(pa.betas.size(), 2u);
    for (double x : pa.flatten()) EXPECT_LE(std::abs(x), 0.1);
    EXPECT_THROW(init_params(0, 0.1, a), ArgumentError);
}

TEST(Perturb, MidpointAndMagnitude) {
    Rng rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        const QaoaParams params = testing::random_params(3, rng);
        const double c = 0.01 + 0.3 * std::uniform_real_distribution<double>(0, 1)(rng);
        const PerturbedPair pair = perturb(params, c, rng);
        const auto base = params.flatten();
        const auto plus = pair.plus.flatten();
        const auto minus = pair.minus.flatten();
        const auto delta = pair.delta.flatten();
        for (std::size_t j = 0; j < base.size(); ++j) {
            EXPECT_EQ(std::abs(delta[j]), c);
            EXPECT_NEAR((plus[j] + minus[j]) / 2, base[j], 1e-15);
            EXPECT_NEAR(std::abs(plus[j] - base[j]), c, 1e-15);
            EXPECT_EQ(plus[j], base[j] + delta[j]);
            EXPECT_EQ(minus[j], base[j] - delta[j]);
        }
    }
}

TEST(Perturb, MidpointExactForRepresentableValues) {
    Rng rng(7);
    const QaoaParams params{{0.5, -0.25}, {0.125, 1.0}};
    const PerturbedPair pair = perturb(params, 0.25, rng);
    const auto base = params.flatten();
    const auto plus = pair.plus.flatten();
    const auto minus = pair.minus.flatten();
    for (std::size_t j = 0; j < base.size(); ++j) EXPECT_EQ((plus[j] + minus[j]) / 2, base[j]);
}

TEST(Perturb, SignsAreFairCoins) {
    Rng rng(8);
    const QaoaParams params = QaoaParams::zeros(2);
    std::vector<int> positives(4, 0);
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
        const auto delta = perturb(params, 0.1, rng).delta.flatten();
        for (std::size_t j = 0; j < 4; ++j) positives[j] += delta[j] > 0;
    }
    for (int count : positives) EXPECT_NEAR(static_cast<double>(count) / draws, 0.5, 0.02);
}

TEST(Perturb, RejectsNonPositiveMagnitude) {
    Rng rng(1);
    EXPECT_THROW(perturb(QaoaParams::zeros(1), 0.0, rng), ArgumentError);
}

TEST(GradientEstimate, Examples) {
    const Perturbation delta{{0.25}, {-0.25}};
    EXPECT_EQ(gradient_estimate(3.0, 2.0, delta), (std::vector<double>{2.0, -2.0}));
    EXPECT_EQ(gradient_estimate(2.5, 2.5, delta), (std::vector<double>{0.0, 0.0}));
    EXPECT_THROW(gradient_estimate(1.0, 0.0, Perturbation{{0.0}, {0.1}}), ArgumentError);
}

TEST(GradientEstimate, EqualMagnitudes) {
    Rng rng(9);
    std::uniform_real_distribution<double> value(0.0, 4.0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto pair = perturb(testing::random_params(3, rng), 0.07, rng);
        const double fp = value(rng);
        const double fm = value(rng);
        const auto g = gradient_estimate(fp, fm, pair.delta);
        for (double gj : g) EXPECT_NEAR(std::abs(gj), std::abs(fp - fm) / (2 * 0.07), 1e-12);
    }
}

TEST(UpdateParams, Examples) {
    const QaoaParams zero = QaoaParams::zeros(1);
    EXPECT_EQ(update_params(zero, 0.25, {2.0, -2.0}), (QaoaParams{{0.5}, {-0.5}}));
    const QaoaParams some{{0.3}, {-0.1}};
    EXPECT_EQ(update_params(some, 0.0, {5.0, 7.0}), some);
    EXPECT_THROW(update_params(zero, 0.1, {1.0}), ArgumentError);
}

TEST(UpdateParams, MovesTowardBetterSide) {
    Rng rng(10);
    std::uniform_real_distribution<double> value(0.0, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        const QaoaParams params = testing::random_params(2, rng);
        const auto pair = perturb(params, 0.1, rng);
        const double fp = value(rng);
        const double fm = trial % 10 == 0 ? fp : value(rng);
        const auto updated = update_params(params, 0.2, gradient_estimate(fp, fm, pair.delta)).flatten();
        const auto base = params.flatten();
        const auto toward_plus = pair.plus.flatten();
        for (std::size_t j = 0; j < base.size(); ++j) {
            const double step = updated[j] - base[j];
            const double dir = toward_plus[j] - base[j];
            if (fp > fm) {
                EXPECT_GT(step * dir, 0.0);
            } else if (fp < fm) {
                EXPECT_LT(step * dir, 0.0);
            } else {
                EXPECT_EQ(step, 0.0);
            }
        }
    }
}

TEST(Optimize, ConstantObjectiveIsFixedPoint) {
    SpsaConfig c;
    c.n_iterations = 20;
    const auto trace = optimize(cycle4(), 2, c, [](const Graph&, const QaoaParams&) { return 1.0; });
    ASSERT_EQ(trace.iterations.size(), 20u);
    for (const auto& r : trace.iterations) {
        EXPECT_EQ(r.params, trace.initial_params);
        for (double g : r.gradient) EXPECT_EQ(g, 0.0);
    }
    EXPECT_EQ(trace.final_params, trace.initial_params);
    EXPECT_FALSE(trace.best.has_value());
}

TEST(Optimize, TraceRecordsSchedule) {
    SpsaConfig c;
    c.n_iterations = 7;
    const auto gains = gain_schedule(c);
    const auto trace = optimize(cycle4(), 1, c, bowl);
    for (std::size_t i = 0; i < 7; ++i) {
        EXPECT_EQ(trace.iterations[i].index, i);
        EXPECT_EQ(trace.iterations[i].a, gains.a[i]);
        EXPECT_EQ(trace.iterations[i].c, gains.c[i]);
        EXPECT_EQ(trace.iterations[i].gradient.size(), 2u);
    }
    EXPECT_EQ(trace.final_params, trace.iterations.back().params);
    EXPECT_EQ(trace.final_expectation, bowl(cycle4(), trace.final_params));
}

TEST(Optimize, BowlConverges) {
    int converged = 0;
    for (Seed seed = 1; seed <= 10; ++seed) {
        SpsaConfig c;
        c.n_iterations = 200;
        c.seed = seed;
        const auto trace = optimize(cycle4(), 1, c, bowl);
        const auto& p = trace.final_params;
        if (std::abs(p.gammas[0] - 1.0) <= 0.2 && std::abs(p.betas[0] - 1.0) <= 0.2) ++converged;
    }
    EXPECT_GE(converged, 8);
}

TEST(Optimize, ObserverSeesEveryIteration) {
    SpsaConfig c;
    c.n_iterations = 5;
    std::vector<std::size_t> seen;
    optimize(cycle4(), 1, c, bowl, [&](const IterationRecord& r) { seen.push_back(r.index); });
    EXPECT_EQ(seen, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
}

void expect_same_trace(const SpsaTrace& x, const SpsaTrace& y) {
    ASSERT_EQ(x.iterations.size(), y.iterations.size());
    EXPECT_EQ(x.initial_params, y.initial_params);
    for (std::size_t i = 0; i < x.iterations.size(); ++i) {
        EXPECT_EQ(x.iterations[i].f_plus, y.iterations[i].f_plus);
        EXPECT_EQ(x.iterations[i].f_minus, y.iterations[i].f_minus);
        EXPECT_EQ(x.iterations[i].gradient, y.iterations[i].gradient);
        EXPECT_EQ(x.iterations[i].params, y.iterations[i].params);
    }
    EXPECT_EQ(x.final_params, y.final_params);
    EXPECT_EQ(x.final_expectation, y.final_expectation);
    EXPECT_EQ(x.best, y.best);
}

TEST(Optimize, ReproducibleAndThreadIndependent) {
    SpsaConfig c;
    c.n_iterations = 15;
    c.seed = 321;
    const SampledEvaluator eval{2000};
    const auto first = optimize(cycle4(), 2, c, eval);
    const auto second = optimize(cycle4(), 2, c, eval);
    expect_same_trace(first, second);

    c.parallel_evaluations = true;
    expect_same_trace(first, optimize(cycle4(), 2, c, eval));

    c.parallel_evaluations = false;
    c.seed = 322;
    EXPECT_NE(optimize(cycle4(), 2, c, eval).final_params, first.final_params);
}

TEST(Optimize, SampledEvaluatorTracksBestBitstring) {
    SpsaConfig c;
    c.n_iterations = 3;
    const auto trace = optimize(cycle4(), 1, c, SampledEvaluator{1000});
    ASSERT_TRUE(trace.best);
    EXPECT_EQ(trace.best->score, 4u);
    EXPECT_EQ(cut_score(trace.best->bits, cycle4()), 4u);
}

// Averaged SPSA estimates against a central finite difference at c = 1e-3.
TEST(GradientEstimate, MatchesFiniteDifferencesOnAverage) {
    const Graph g = cycle4();
    const QaoaParams at{{0.2}, {-0.3}};
    const double h = 1e-3;
    std::vector<double> fd(2);
    for (std::size_t j = 0; j < 2; ++j) {
        auto up = at.flatten();
        auto down = at.flatten();
        up[j] += h;
        down[j] -= h;
        fd[j] = (bowl(g, QaoaParams::unflatten(up)) - bowl(g, QaoaParams::unflatten(down))) / (2 * h);
    }
    Rng rng(1234);
    std::vector<double> mean(2, 0.0);
    const int draws = 1000;
    for (int i = 0; i < draws; ++i) {
        const auto pair = perturb(at, h, rng);
        const auto est = gradient_estimate(bowl(g, pair.plus), bowl(g, pair.minus), pair.delta);
        for (std::size_t j = 0; j < 2; ++j) mean[j] += est[j] / draws;
    }
    const double err = std::hypot(mean[0] - fd[0], mean[1] - fd[1]);
    EXPECT_LE(err / std::hypot(fd[0], fd[1]), 0.10);
}

}  // namespace
}  // namespace qaoa_spsa
