#include "fank/classify.hpp"
#include "fank/error.hpp"
#include "fank/examples.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace fank;
using namespace fank::testing;

namespace {

Fan relabel_and_transform(Rng& rng, const Fan& f) {
  IntMatrix U = rng.unimodular(f.ambient(), 8);
  std::vector<std::size_t> perm(f.rays().size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng.engine());
  std::vector<NamedRay> rays;
  for (auto p : perm) rays.push_back({"x" + std::to_string(p), U.apply(f.rays()[p].primitive)});
  std::vector<ConeSpec> cones;
  for (auto m : f.maximal()) {
    ConeSpec s{"c" + std::to_string(m), {}};
    for (auto r : f.cell(m).rays) s.rays.push_back("x" + std::to_string(r));
    std::shuffle(s.rays.begin(), s.rays.end(), rng.engine());
    cones.push_back(s);
  }
  std::shuffle(cones.begin(), cones.end(), rng.engine());
  return Fan::from_description(f.ambient(), rays, cones);
}

Fan random_index_fan(Rng& rng, std::initializer_list<long> wanted) {
  for (;;) {
    Fan f = random_complete_2d_fan(rng, 5, 5);
    long m = ray_span_index(f)->get_si();
    if (std::find(wanted.begin(), wanted.end(), m) != wanted.end()) return f;
  }
}

}  // namespace

TEST(Classify, ExampleTable) {
  struct Row {
    const char* name;
    long r;
    Outcome outcome;
    const char* rule;
  };
  for (auto row : {Row{"hirzebruch-r", 1, Outcome::Isomorphic, "smooth-fan"},
                   Row{"hirzebruch-r", 2, Outcome::Isomorphic, "smooth-fan"},
                   Row{"hirzebruch-r", 3, Outcome::Isomorphic, "smooth-fan"},
                   Row{"p2", 1, Outcome::Isomorphic, "smooth-fan"},
                   Row{"wps-1-1-2", 1, Outcome::Isomorphic, "distant-singular-cones"},
                   Row{"fake-p2", 1, Outcome::NotIsomorphic, "planar-span-index"},
                   Row{"pyramid", 1, Outcome::Isomorphic, "distant-singular-cones"},
                   Row{"simplicial-distant", 1, Outcome::Isomorphic, "distant-singular-cones"},
                   Row{"two-distant", 1, Outcome::Isomorphic, "distant-singular-cones"},
                   Row{"gt-flag3", 1, Outcome::Isomorphic, "distant-singular-cones"},
                   Row{"isolated-not-distant", 1, Outcome::Unknown, ""}}) {
    SCOPED_TRACE(row.name);
    Verdict v = classify(example_fan(row.name, row.r));
    EXPECT_EQ(v.outcome, row.outcome);
    EXPECT_EQ(v.rule, row.rule);
  }
}

TEST(Classify, HirzebruchSpanCertificate) {
  for (long r = 1; r <= 3; ++r) {
    Verdict v = classify(example_fan("hirzebruch-r", r));
    ASSERT_TRUE(v.span_index);
    EXPECT_EQ(*v.span_index, 1);
    EXPECT_EQ(*v.odd_rank, 0);
    bool span_cert = false;
    for (const auto& c : v.certificates) span_cert = span_cert || c.criterion == "planar-span-index";
    EXPECT_TRUE(span_cert);
  }
}

TEST(Classify, FakeProjectivePlane) {
  Fan f = example_fan("fake-p2");
  Verdict v = classify(f);
  EXPECT_EQ(*v.span_index, 3);
  EXPECT_EQ(*v.odd_rank, 2);
  EXPECT_EQ(odd_k1_rank(f), 2);
  EXPECT_EQ(brute_force_odd_rank(f, 2), 2);
  EXPECT_TRUE(v.certificates.empty());
}

TEST(Classify, IsolatedNotDistantExplains) {
  Verdict v = classify(example_fan("isolated-not-distant"));
  EXPECT_EQ(v.outcome, Outcome::Unknown);
  EXPECT_TRUE(v.certificates.empty());
  EXPECT_NE(v.explanation.find("isolated"), std::string::npos);
  EXPECT_FALSE(v.odd_rank);
}

TEST(Classify, IncompletePlane) {
  Fan f = Fan::from_cones(2, {make_vector({1, 2}), make_vector({1, -1}), make_vector({-2, -1})}, {{0, 1}, {1, 2}});
  Verdict v = classify(f);
  EXPECT_EQ(v.outcome, Outcome::Isomorphic);
  EXPECT_EQ(v.rule, "planar-incomplete");
  EXPECT_FALSE(v.odd_rank);
}

TEST(Classify, OddRankRejectsBadInput) {
  EXPECT_THROW(odd_k1_rank(example_fan("pyramid")), Error);
  EXPECT_THROW(odd_k1_rank(Fan::from_cones(2, {make_vector({1, 0}), make_vector({0, 1})}, {{0, 1}})), Error);
}

TEST(Weights, Examples) {
  auto w = fwps_weights(example_fan("p2"));
  EXPECT_EQ(w.weights, make_vector({1, 1, 1}));
  EXPECT_TRUE(w.is_genuine_wps);
  w = fwps_weights(example_fan("wps-1-1-2"));
  EXPECT_EQ(w.weights, make_vector({1, 1, 2}));
  EXPECT_TRUE(w.is_genuine_wps);
  w = fwps_weights(example_fan("fake-p2"));
  EXPECT_EQ(w.weights, make_vector({1, 1, 1}));
  EXPECT_FALSE(w.is_genuine_wps);
  try {
    fwps_weights(example_fan("hirzebruch-r", 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFwps);
  }
}

TEST(Weights, RelationHolds) {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    Fan f = random_complete_2d_fan(rng, 5, 3);
    auto w = fwps_weights(f);
    IntVector sum = zero_vector(2);
    Integer g = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_GT(w.weights[i], 0);
      sum = sum + w.weights[i] * f.rays()[i].primitive;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.weights[i].get_mpz_t());
    }
    EXPECT_TRUE(is_zero(sum));
    EXPECT_EQ(g, 1);
    EXPECT_EQ(w.is_genuine_wps, *ray_span_index(f) == 1);
  }
}

TEST(Splitting, Examples) {
  for (const auto& sp : all_2d_splittings(example_fan("hirzebruch-r", 1))) EXPECT_TRUE(splitting_surjectivity(example_fan("hirzebruch-r", 1), sp));
  Fan fake = example_fan("fake-p2");
  for (const auto& sp : all_2d_splittings(fake)) EXPECT_FALSE(splitting_surjectivity(fake, sp));
  Fan p2 = example_fan("p2");
  EXPECT_TRUE(splitting_surjectivity(p2, complete_2d_splitting(p2)));
  Splitting2D bad = complete_2d_splitting(p2);
  std::swap(bad.second.rays.front(), bad.second.rays.back());
  EXPECT_THROW(splitting_surjectivity(p2, bad), Error);
}

TEST(ClassifyProperty, SplittingsAgreeWithSpanIndex) {
  Rng rng(71);
  for (int t = 0; t < 60; ++t) {
    Fan f = random_complete_2d_fan(rng);
    bool first = splitting_surjectivity(f, complete_2d_splitting(f));
    for (const auto& sp : all_2d_splittings(f)) EXPECT_EQ(splitting_surjectivity(f, sp), first);
    EXPECT_EQ(first, *ray_span_index(f) == 1);
    EXPECT_EQ(first, odd_k1_rank(f) == 0);
    EXPECT_EQ(first, classify(f).outcome == Outcome::Isomorphic);
  }
}

TEST(ClassifyProperty, OddRankOracle) {
  Rng rng(72);
  for (int t = 0; t < 8; ++t) {
    Fan f = random_index_fan(rng, {2, 3, 4});
    EXPECT_EQ(brute_force_odd_rank(f, 3), odd_k1_rank(f));
  }
}

TEST(ClassifyProperty, InvariantUnderRelabelingAndBasisChange) {
  Rng rng(73);
  std::vector<Fan> fans;
  for (const auto& e : example_registry()) fans.push_back(example_fan(e.name, 2));
  for (int t = 0; t < 20; ++t) fans.push_back(random_complete_2d_fan(rng));
  for (const Fan& f : fans) {
    Verdict a = classify(f);
    for (int s = 0; s < 2; ++s) {
      Verdict b = classify(relabel_and_transform(rng, f));
      EXPECT_EQ(a.outcome, b.outcome);
      EXPECT_EQ(a.rule, b.rule);
      EXPECT_EQ(a.odd_rank, b.odd_rank);
    }
  }
}

TEST(ClassifyProperty, CertificatesRevalidate) {
  Rng rng(74);
  std::vector<Fan> fans;
  for (const auto& e : example_registry()) fans.push_back(example_fan(e.name, 2));
  for (int t = 0; t < 30; ++t) fans.push_back(random_complete_2d_fan(rng));
  for (const Fan& f : fans) {
    Verdict v = classify(f);
    if (v.outcome == Outcome::NotIsomorphic) {
      EXPECT_EQ(f.ambient(), 2u);
      EXPECT_TRUE(is_complete(f));
      EXPECT_GT(*ray_span_index(f), 1);
    }
    for (const auto& c : v.certificates) {
      if (c.criterion == "smooth-fan") {
        for (const auto& cell : f.cells()) EXPECT_TRUE(cell.cone.is_smooth());
      } else if (c.criterion == "distant-singular-cones") {
        std::vector<Cone> sing;
        for (const auto& cell : f.cells())
          if (!cell.cone.is_smooth()) sing.push_back(cell.cone);
        EXPECT_FALSE(sing.empty());
        for (std::size_t i = 0; i < sing.size(); ++i)
          for (std::size_t j = i + 1; j < sing.size(); ++j) EXPECT_EQ(intersect(sing[i], sing[j]).dim(), 0u);
      } else if (c.criterion == "planar-span-index") {
        EXPECT_EQ(*ray_span_index(f), 1);
      }
    }
  }
}
