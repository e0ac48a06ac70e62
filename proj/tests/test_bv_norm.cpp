// SPDX-License-Identifier: Apache-2.0
//
// BV norm search: cvar, certificates, exhaustive / branch-bound / heuristic
// modes, and the 1-D fast path.

#include <gtest/gtest.h>

#include <memory>

#include "bvsigma/bv_norm.hpp"
#include "testutil.hpp"

using namespace bvsigma;
using testutil::Rng;

namespace {

Point P(long x, long y) { return Point(Rational(x), Rational(y)); }

std::shared_ptr<const SigmaSet> sharp_sigma() {
  return std::make_shared<SigmaSet>(std::vector<Point>{P(0, 1), P(0, 0), P(0, -1)});
}

FiniteFunction chi_origin(std::shared_ptr<const SigmaSet> sigma) {
  return FiniteFunction::indicator(sigma, {P(0, 0)});
}

TEST(Cvar, ConstantFunctionIsZero) {
  auto sigma = sharp_sigma();
  FiniteFunction f = FiniteFunction::constant(sigma, RatComplex(3, -2));
  EXPECT_EQ(cvar(f, Polyline({P(0, 1), P(0, 0), P(0, -1)})), 0.0);
}

TEST(Cvar, JumpsThroughOrigin) {
  auto sigma = sharp_sigma();
  FiniteFunction f = chi_origin(sigma);
  EXPECT_DOUBLE_EQ(cvar(f, Polyline({P(0, 1), P(0, 0), P(0, -1)})), 2.0);
  // The straight segment from i to -i passes through 0, so the hit at the
  // origin is picked up automatically.
  EXPECT_DOUBLE_EQ(cvar(f, Polyline({P(0, 1), P(0, -1)})), 2.0);
}

TEST(Cvar, InterleavedMidpointHits) {
  // lambda-points joined by a segment through an interleaved midpoint.
  Point l0 = P(1, 0), l1 = P(0, 1);
  Point mid(Rational(1, 2), Rational(1, 2));
  SigmaSet sigma({l0, l1, mid});
  FiniteFunction f = FiniteFunction::indicator(std::make_shared<SigmaSet>(sigma), {l0, l1});
  EXPECT_DOUBLE_EQ(cvar(f, Polyline({l0, l1})), 2.0);
}

TEST(Cvar, VertexOutsideDomainIsAnError) {
  auto sigma = sharp_sigma();
  FiniteFunction f = chi_origin(sigma);
  EXPECT_THROW(cvar(f, Polyline({P(0, 1), P(5, 5)})), ValidationError);
}

TEST(VarLower, SharpListGivesTwo) {
  auto sigma = sharp_sigma();
  FiniteFunction f = chi_origin(sigma);
  NormCertificate cert = var_lower(f, {P(0, 1), P(0, 0), P(0, -1)});
  EXPECT_DOUBLE_EQ(cert.cvar_value, 2.0);
  EXPECT_EQ(cert.vf, 1);
  EXPECT_DOUBLE_EQ(cert.product, 2.0);
}

TEST(VarLower, DegenerateListsGiveZero) {
  auto sigma = sharp_sigma();
  FiniteFunction f = chi_origin(sigma);
  EXPECT_DOUBLE_EQ(var_lower(f, {}).product, 0.0);
  EXPECT_DOUBLE_EQ(var_lower(f, {P(0, 1)}).product, 0.0);
  FiniteFunction c = FiniteFunction::constant(sigma, RatComplex(2, 1));
  EXPECT_DOUBLE_EQ(var_lower(c, {P(0, 1), P(0, -1), P(0, 0)}).product, 0.0);
}

TEST(VarLower, CertificateReplays) {
  Rng rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    SigmaSet sigma = testutil::random_sigma(rng, 5);
    FiniteFunction f = testutil::random_function(rng, sigma);
    NormResult r = var_search(f, {.mode = SearchMode::branch_bound, .list_budget = 6});
    const NormCertificate& cert = r.certificate;
    if (cert.vertex_list.size() < 2) continue;
    NormCertificate replay = var_lower(f, cert.vertex_list);
    EXPECT_DOUBLE_EQ(replay.cvar_value, cert.cvar_value);
    EXPECT_EQ(replay.vf, cert.vf);
    EXPECT_DOUBLE_EQ(replay.product, cert.product);
    EXPECT_DOUBLE_EQ(r.lower, cert.product);
  }
}

TEST(VarSearch, SingletonSigmaHasNoVariation) {
  SigmaSet sigma({P(4, 4)});
  FiniteFunction f = FiniteFunction::constant(std::make_shared<SigmaSet>(sigma), RatComplex(1, 0));
  NormResult r = var_search(f);
  EXPECT_EQ(r.lower, 0.0);
  EXPECT_TRUE(r.exact);
}

TEST(VarSearch, SharpExampleAtSmallBudget) {
  auto sigma = sharp_sigma();
  FiniteFunction f = chi_origin(sigma);
  NormResult r = var_search(f, {.mode = SearchMode::exhaustive, .list_budget = 3});
  EXPECT_DOUBLE_EQ(r.lower, 2.0);
  EXPECT_TRUE(r.exact);
}

TEST(VarSearch, LexicographicallySmallestCertificateWins) {
  SigmaSet sigma({P(-1, 0), P(0, 0), P(1, 0)});
  FiniteFunction f =
      FiniteFunction::indicator(std::make_shared<SigmaSet>(sigma), {P(0, 0)});
  NormResult r = var_search(f, {.mode = SearchMode::exhaustive, .list_budget = 4});
  EXPECT_DOUBLE_EQ(r.lower, 2.0);
  // Several lists tie at 2 (e.g. (-1,1) and its reverse); enumeration in
  // lexicographic order reports (-1,0,1), the smallest of them.
  ASSERT_EQ(r.certificate.vertex_list.size(), 3u);
  EXPECT_EQ(r.certificate.vertex_list[0], P(-1, 0));
  EXPECT_EQ(r.certificate.vertex_list[1], P(0, 0));
  EXPECT_EQ(r.certificate.vertex_list[2], P(1, 0));
}

TEST(VarSearch, BranchBoundMatchesExhaustive) {
  Rng rng(808);
  for (int trial = 0; trial < 25; ++trial) {
    SigmaSet sigma = testutil::random_sigma(rng, 5);
    FiniteFunction f = testutil::random_function(rng, sigma);
    SearchOptions ex{.mode = SearchMode::exhaustive, .list_budget = 7};
    SearchOptions bb{.mode = SearchMode::branch_bound, .list_budget = 7};
    NormResult rex = var_search(f, ex);
    NormResult rbb = var_search(f, bb);
    EXPECT_EQ(rex.lower, rbb.lower) << "trial " << trial;
  }
}

TEST(VarSearch, ValueMatchesProfileAtEveryBudget) {
  Rng rng(505);
  SigmaSet sigma = testutil::random_sigma(rng, 4);
  FiniteFunction f = testutil::random_function(rng, sigma);
  VarSearchProfile profile;
  var_search(f, {.mode = SearchMode::exhaustive, .list_budget = 8}, &profile);
  for (int l = 2; l <= 8; ++l) {
    NormResult r = var_search(f, {.mode = SearchMode::exhaustive, .list_budget = l});
    EXPECT_DOUBLE_EQ(r.lower, profile.best_by_length[l]) << "budget " << l;
  }
  for (int l = 1; l < 8; ++l)
    EXPECT_LE(profile.best_by_length[l], profile.best_by_length[l + 1]);
}

TEST(VarSearch, ThreadedSearchIsDeterministic) {
  Rng rng(606);
  SigmaSet sigma = testutil::random_sigma(rng, 5);
  FiniteFunction f = testutil::random_function(rng, sigma);
  NormResult seq = var_search(f, {.mode = SearchMode::branch_bound, .list_budget = 8, .threads = 1});
  NormResult par = var_search(f, {.mode = SearchMode::branch_bound, .list_budget = 8, .threads = 4});
  EXPECT_EQ(seq.lower, par.lower);
  EXPECT_EQ(seq.certificate.vertex_list, par.certificate.vertex_list);
}

TEST(VarSearch, OversizedBudgetIsAResourceError) {
  Rng rng(707);
  SigmaSet sigma = testutil::random_sigma(rng, 6);
  FiniteFunction f = testutil::random_function(rng, sigma);
  SearchOptions opts{.mode = SearchMode::exhaustive, .list_budget = 40, .node_limit = 100000};
  EXPECT_THROW(var_search(f, opts), ResourceError);
}

TEST(VarSearch, HeuristicNeverExceedsExact) {
  Rng rng(909);
  for (int trial = 0; trial < 15; ++trial) {
    SigmaSet sigma = testutil::random_sigma(rng, 5);
    FiniteFunction f = testutil::random_function(rng, sigma);
    NormResult exact = var_search(f, {.mode = SearchMode::exhaustive, .list_budget = 8});
    NormResult heur = var_search(f, {.mode = SearchMode::heuristic, .list_budget = 8});
    EXPECT_FALSE(heur.exact);
    EXPECT_FALSE(heur.upper.has_value());
    EXPECT_LE(heur.lower, exact.lower + 1e-12);
    EXPECT_GE(heur.lower, 0.0);
  }
}

TEST(BvNorm, SharpConstantIsThree) {
  auto sigma = sharp_sigma();
  FiniteFunction f = chi_origin(sigma);
  NormResult r = bv_norm(f, {.mode = SearchMode::exhaustive});
  EXPECT_DOUBLE_EQ(r.lower, 3.0);
  EXPECT_TRUE(r.exact);
  ASSERT_TRUE(r.upper.has_value());
  EXPECT_DOUBLE_EQ(*r.upper, 3.0);
}

TEST(BvNorm, ConstantFunctionNormIsItsModulus) {
  auto sigma = sharp_sigma();
  FiniteFunction f = FiniteFunction::constant(sigma, RatComplex(-3, 4));
  NormResult r = bv_norm(f);
  EXPECT_DOUBLE_EQ(r.lower, 5.0);
}

TEST(BvNorm, SinglePointIndicatorsStayBelowThree) {
  Rng rng(111);
  for (int trial = 0; trial < 15; ++trial) {
    SigmaSet sigma = testutil::random_sigma(rng, 5);
    auto shared = std::make_shared<SigmaSet>(sigma);
    FiniteFunction chi = FiniteFunction::indicator(shared, {sigma[0]});
    NormResult r = bv_norm(chi, {.mode = SearchMode::branch_bound, .list_budget = 8});
    EXPECT_LE(r.lower, 3.0 + 1e-9) << "trial " << trial;
  }
}

TEST(BvNorm, RestrictionNeverIncreasesTheNorm) {
  Rng rng(222);
  for (int trial = 0; trial < 12; ++trial) {
    SigmaSet sigma = testutil::random_sigma(rng, 5);
    FiniteFunction f = testutil::random_function(rng, sigma);
    std::vector<Point> sub_pts(sigma.points().begin(),
                               sigma.points().begin() + 3);
    SigmaSet sub(sub_pts);
    FiniteFunction g = f.restrict_to(sub);
    double full = bv_norm(f, {.mode = SearchMode::branch_bound}).lower;
    double restricted = bv_norm(g, {.mode = SearchMode::branch_bound}).lower;
    EXPECT_LE(restricted, full + 1e-9) << "trial " << trial;
  }
}

TEST(BvNorm, BanachAlgebraOnDeskInstances) {
  Rng rng(333);
  for (int trial = 0; trial < 10; ++trial) {
    SigmaSet sigma = testutil::random_sigma(rng, 4);
    auto shared = std::make_shared<SigmaSet>(sigma);
    FiniteFunction f = testutil::random_function(rng, sigma, 4);
    FiniteFunction g = testutil::random_function(rng, sigma, 4);
    FiniteFunction fg = f * g;
    SearchOptions opts{.mode = SearchMode::exhaustive, .list_budget = 8};
    double nf = bv_norm(f, opts).lower;
    double ng = bv_norm(g, opts).lower;
    double nfg = bv_norm(fg, opts).lower;
    EXPECT_LE(nfg, nf * ng + 1e-9) << "trial " << trial;
    FiniteFunction one = FiniteFunction::constant(shared, RatComplex(1, 0));
    EXPECT_DOUBLE_EQ(bv_norm(one, opts).lower, 1.0);
  }
}

TEST(OneD, TwoPointStep) {
  SigmaSet sigma({P(0, 0), P(2, 0)});
  FiniteFunction f(std::make_shared<SigmaSet>(sigma),
                   {RatComplex(0, 0), RatComplex(1, 0)});
  EXPECT_DOUBLE_EQ(one_d_bv_norm(f), 2.0);
}

TEST(OneD, VerticalRayExample) {
  // sigma_n = {0, i}, g(0) = 0, g(i) = -1.
  SigmaSet sigma({P(0, 0), P(0, 1)});
  FiniteFunction f(std::make_shared<SigmaSet>(sigma),
                   {RatComplex(0, 0), RatComplex(-1, 0)});
  EXPECT_DOUBLE_EQ(one_d_bv_norm(f), 2.0);
}

TEST(OneD, ConstantOnCollinearSet) {
  SigmaSet sigma({P(0, 0), P(1, 1), P(2, 2), P(-5, -5)});
  FiniteFunction f = FiniteFunction::constant(std::make_shared<SigmaSet>(sigma), RatComplex(0, -7));
  EXPECT_DOUBLE_EQ(one_d_bv_norm(f), 7.0);
}

TEST(OneD, MatchesSearchOnCollinearSets) {
  Rng rng(444);
  for (int trial = 0; trial < 10; ++trial) {
    // Random collinear sigma through the origin.
    long dx = testutil::rand_int(rng, -3, 3), dy = testutil::rand_int(rng, -3, 3);
    if (dx == 0 && dy == 0) dx = 1;
    std::vector<Point> pts;
    for (int k = 0; k < 4; ++k) {
      long t = testutil::rand_int(rng, -6, 6);
      Point p(Rational(dx * t, 2), Rational(dy * t, 2));
      p.x.canonicalize();
      p.y.canonicalize();
      pts.push_back(p);
    }
    SigmaSet sigma(pts);
    if (sigma.size() < 2) continue;
    FiniteFunction f = testutil::random_function(rng, sigma);
    double direct = one_d_bv_norm(f);
    double searched = bv_norm(f, {.mode = SearchMode::exhaustive, .list_budget = 8}).lower;
    EXPECT_NEAR(direct, searched, 1e-9) << "trial " << trial;
  }
}

TEST(OneD, NonCollinearDomainIsAnError) {
  SigmaSet sigma({P(0, 0), P(1, 0), P(0, 1)});
  FiniteFunction f = FiniteFunction::constant(std::make_shared<SigmaSet>(sigma), RatComplex(1, 0));
  EXPECT_THROW(one_d_bv_norm(f), ValidationError);
}

}  // namespace
