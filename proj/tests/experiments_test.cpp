// Copyright 2026 The sqkd Authors
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

#include "sqkd/experiments.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <sstream>

#include "sqkd/serialization.hpp"

namespace sqkd {
namespace {

TEST(GridSpecTest, Parse) {
  const GridSpec g = GridSpec::parse("theta=0:1.5:4");
  EXPECT_EQ(g.key, "theta");
  EXPECT_EQ(g.start, 0.0);
  EXPECT_EQ(g.stop, 1.5);
  EXPECT_EQ(g.count, 4u);
  EXPECT_EQ(g.points(), (std::vector<double>{0.0, 0.5, 1.0, 1.5}));

  const GridSpec single = GridSpec::parse("theta=0.3");
  EXPECT_EQ(single.points(), std::vector<double>{0.3});

  const GridSpec wide = GridSpec::parse("theta=0:1.5707963267948966:100");
  EXPECT_EQ(wide.points().back(), 1.5707963267948966);

  for (const char* bad : {"theta", "=1", "theta=0:1", "theta=0:1:0", "theta=a:1:3", "theta=0:1:2x"}) {
    EXPECT_THROW(GridSpec::parse(bad), DomainError) << bad;
  }
}

TEST(SweepTest, PartialForwardCnotCsv) {
  SweepConfig cfg{"partial-forward-cnot", GridSpec::parse("theta=0:1.5707963267948966:5"),
                  PovmChoice::parse("z"), {}};
  const std::vector<SweepRow> rows = run_sweep(cfg);
  ASSERT_EQ(rows.size(), 5u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double s = std::sin(rows[i].theta);
    EXPECT_NEAR(rows[i].p_ctrl, s * s / 2, 1e-12);
    EXPECT_NEAR(rows[i].p_sift, 0.0, 1e-12);
    EXPECT_TRUE(rows[i].holds);
  }
  EXPECT_NEAR(rows.back().info_lower, 1.0, 1e-9);

  const std::string csv = sweep_csv(rows);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "family,theta,p_ctrl,p_sift,info_lower,rhs,gap,holds");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("partial-forward-cnot,0,0,0,", 0), 0u) << line;
  EXPECT_EQ(line.substr(line.size() - 5), ",true") << line;
  std::istringstream cells(line);
  std::vector<std::string> fields;
  for (std::string f; std::getline(cells, f, ',');) fields.push_back(f);
  ASSERT_EQ(fields.size(), 8u);
  EXPECT_NEAR(std::stod(fields[4]), 0.0, 1e-15);
  EXPECT_EQ(std::stod(fields[5]), 0.0);
  int count = 1;
  while (std::getline(in, line)) ++count;
  EXPECT_EQ(count, 5);
}

TEST(SweepTest, RejectsUnknownKeyOrFamily) {
  SweepConfig cfg{"partial-forward-cnot", GridSpec::parse("phi=0:1:3"), PovmChoice::parse("z"), {}};
  EXPECT_THROW(run_sweep(cfg), DomainError);
  cfg.family = "no-such-family";
  cfg.grid = GridSpec::parse("theta=0:1:3");
  EXPECT_ANY_THROW(run_sweep(cfg));
  cfg.family = "partial-return-cz";
  cfg.grid = GridSpec::parse("theta=0:2:3");
  EXPECT_THROW(run_sweep(cfg), DomainError);
}

TEST(PovmChoiceTest, Parse) {
  EXPECT_EQ(PovmChoice::parse("z").kind, PovmChoice::Kind::kComputational);
  EXPECT_EQ(PovmChoice::parse("x").kind, PovmChoice::Kind::kFourier);
  EXPECT_EQ(PovmChoice::parse("optimize").kind, PovmChoice::Kind::kOptimize);
  EXPECT_THROW(PovmChoice::parse("/nonexistent/povm.json"), ParseError);
}

TEST(PovmChoiceTest, ResolveChecksDimension) {
  PovmChoice choice{PovmChoice::Kind::kExplicit, computational_basis_povm(3)};
  EXPECT_THROW(resolve_povm(choice, identity_attack(), {}), DimensionError);
  choice.povm = fourier_basis_povm(2);
  const ResolvedPovm r = resolve_povm(choice, identity_attack(), {});
  EXPECT_FALSE(r.search.has_value());
  OptimizerConfig small;
  small.restarts = 4;
  const ResolvedPovm opt = resolve_povm(PovmChoice::parse("optimize"), forward_cnot_attack(), small);
  ASSERT_TRUE(opt.search.has_value());
  EXPECT_GE(opt.search->bits, 1.0 - 1e-6);
}

TEST(VerifyTest, SuitesNamesRoundTrip) {
  for (const char* name : {"lemma1", "lemma2", "theorem", "proof-chain", "proof-chain-named",
                           "sift-crosscheck"}) {
    EXPECT_EQ(suite_name(parse_suite(name)), name);
  }
  EXPECT_THROW(parse_suite("lemma3"), DomainError);
}

TEST(VerifyTest, SmallSuitesPass) {
  for (Suite suite : {Suite::kLemma1, Suite::kLemma2, Suite::kTheorem, Suite::kProofChain,
                      Suite::kProofChainNamed, Suite::kSiftCrosscheck}) {
    const VerifySummary s = run_verify({suite, 200, 17});
    EXPECT_EQ(s.violations, 0u) << suite_name(suite);
    EXPECT_GE(s.min_slack, -1e-9) << suite_name(suite);
    EXPECT_LE(s.max_equality_error, 1e-12) << suite_name(suite);
    EXPECT_NE(format_summary(s).find("status: pass"), std::string::npos);
  }
}

TEST(VerifyTest, Deterministic) {
  const VerifySummary a = run_verify({Suite::kTheorem, 300, 42});
  const VerifySummary b = run_verify({Suite::kTheorem, 300, 42});
  EXPECT_EQ(format_summary(a), format_summary(b));
  const VerifySummary c = run_verify({Suite::kTheorem, 300, 43});
  EXPECT_NE(format_summary(a), format_summary(c));
}

TEST(OptimizeTest, ObjectiveNames) {
  EXPECT_EQ(parse_objective("max-gap"), Objective::kMaxGap);
  EXPECT_EQ(parse_objective("max-info"), Objective::kMaxInfo);
  EXPECT_EQ(objective_name(Objective::kMaxInfo), "max-info");
  EXPECT_THROW(parse_objective("min-gap"), DomainError);
}

TEST(OptimizeTest, SmallMaxInfoRunRespectsBudget) {
  OptimizeConfig cfg;
  cfg.objective = Objective::kMaxInfo;
  cfg.epsilon = 0.05;
  cfg.restarts = 2;
  cfg.seed = 3;
  cfg.simplex.max_iterations = 1500;
  cfg.povm_optimizer.restarts = 4;
  const OptimizeResult r = run_optimize(cfg);
  ASSERT_EQ(r.restarts.size(), 2u);
  EXPECT_LT(r.best_restart, 2u);
  EXPECT_TRUE(r.report.holds);
  EXPECT_GE(r.report.info, 0.0);
  // The budget is a penalty, so overshoot is bounded by info / penalty.
  EXPECT_GE(r.objective, 0.0);
  EXPECT_LE(r.report.p_ctrl + r.report.p_sift,
            cfg.epsilon + r.report.info / kDisturbancePenalty + 1e-12);
  EXPECT_NO_THROW(r.attack.validate());
  EXPECT_NO_THROW(validate_report(tradeoff_report_to_json(r.report)));
}

TEST(OptimizeTest, SmallMaxGapRunHolds) {
  OptimizeConfig cfg;
  cfg.restarts = 2;
  cfg.seed = 9;
  cfg.simplex.max_iterations = 1000;
  cfg.povm_optimizer.restarts = 4;
  const OptimizeResult r = run_optimize(cfg);
  EXPECT_TRUE(r.report.holds);
  EXPECT_NEAR(r.objective, optimize_objective(cfg, r.report), 1e-12);
}

}  // namespace
}  // namespace sqkd
