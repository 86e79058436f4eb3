#include <gtest/gtest.h>

#include <set>

#include "flatteam/report.hpp"
#include "flatteam/structure.hpp"
#include "oracle.hpp"

using namespace flatteam;

namespace {

Structure plain(std::size_t n) {
  std::vector<std::string> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back("m" + std::to_string(i));
  return Structure(d);
}

std::vector<ElemTuple> edges(const Structure& s) { return s.relation("E")->tuples(); }

std::vector<Permutation> rotations(std::size_t n) {
  std::vector<Permutation> out;
  for (std::size_t k = 0; k < n; ++k) {
    Permutation p = Permutation::identity(n);
    for (std::size_t i = 0; i < n; ++i) p.image[i] = static_cast<ElemId>((i + k) % n);
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(Structure, Validation) {
  EXPECT_THROW(Structure({}), StructureError);
  EXPECT_THROW(Structure({"a", "a"}), StructureError);
  EXPECT_THROW(Structure({"a-b"}), StructureError);
  Structure s({"a", "b"});
  s.add_relation("E", 2);
  EXPECT_THROW(s.add_tuple("E", {0}), StructureError);
  EXPECT_THROW(s.add_tuple("E", {0, 2}), StructureError);
  EXPECT_THROW(s.add_tuple("R", {0}), StructureError);
  EXPECT_THROW(s.set_constant("c", 5), StructureError);
}

TEST(Structure, ModelFileRoundTrip) {
  const Structure s = parse_model_text(
      "# two elements\n"
      "domain: a b\n"
      "\n"
      "rel E/2: (a,b) (b,a)\n"
      "rel P/1: (a)\n"
      "const c0 = b   # trailing comment\n");
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.relation("E")->size(), 2u);
  EXPECT_TRUE(s.relation("P")->contains(std::vector<ElemId>{0}));
  EXPECT_EQ(s.constant("c0"), ElemId{1});
  EXPECT_EQ(parse_model_text(write_model(s)), s);
}

TEST(Structure, ModelFileErrors) {
  EXPECT_THROW(parse_model_text("rel E/2: (a,b)\n"), StructureError);
  EXPECT_THROW(parse_model_text("domain: a\nrel E/2: (a,z)\n"), StructureError);
  EXPECT_THROW(parse_model_text("domain: a\nrel E/2: (a)\n"), StructureError);
  EXPECT_THROW(parse_model_text("domain: a\nnonsense\n"), StructureError);
}

TEST(GenCycle, Examples) {
  EXPECT_EQ(edges(gen_cycle(4, true)).size(), 8u);
  EXPECT_EQ(edges(gen_cycle(2, true)), (std::vector<ElemTuple>{{0, 1}, {1, 0}}));
  EXPECT_EQ(edges(gen_cycle(3, false)), (std::vector<ElemTuple>{{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_EQ(gen_cycle(3, false).domain(), (std::vector<std::string>{"v0", "v1", "v2"}));
  EXPECT_THROW(gen_cycle(1, true), StructureError);
}

TEST(GraphFamilies, SizesAndConnectivity) {
  EXPECT_EQ(gen_A(1).size(), 8u);
  EXPECT_EQ(gen_B(1).size(), 8u);
  EXPECT_EQ(edges(gen_A(1)).size(), 16u);
  EXPECT_EQ(edges(gen_B(1)).size(), 16u);
  for (unsigned n = 0; n <= 4; ++n) {
    EXPECT_EQ(gen_A(n).size(), gen_B(n).size());
    EXPECT_EQ(gen_B(n).size(), std::size_t{1} << (n + 2));
    EXPECT_FALSE(is_connected(gen_A(n), "E")) << n;
    EXPECT_TRUE(is_connected(gen_B(n), "E")) << n;
  }
}

TEST(IsConnected, Edges) {
  Structure one({"a"});
  one.add_relation("E", 2);
  EXPECT_TRUE(is_connected(one, "E"));
  // Direction is ignored.
  Structure path({"a", "b", "c"});
  path.add_relation("E", 2, {{0, 1}, {2, 1}});
  EXPECT_TRUE(is_connected(path, "E"));
  EXPECT_THROW(is_connected(path, "F"), StructureError);
  path.add_relation("P", 1);
  EXPECT_THROW(is_connected(path, "P"), StructureError);
}

TEST(Automorphisms, Examples) {
  EXPECT_EQ(automorphisms(plain(3)).size(), 6u);
  const auto c4 = automorphisms(gen_cycle(4, true));
  EXPECT_EQ(c4.size(), oracle::automorphisms(gen_cycle(4, true)).size());
  EXPECT_EQ(c4.size(), 8u);
  EXPECT_TRUE(c4.front().is_identity());
  EXPECT_THROW(automorphisms(plain(9)), StructureError);
}

TEST(Automorphisms, MatchOracleAndFormGroup) {
  std::vector<Structure> cases = {gen_cycle(5, false), gen_cycle(6, true), gen_A(0)};
  Structure c = gen_cycle(4, true);
  c.set_constant("k", 2);
  cases.push_back(c);
  Structure mixed({"a", "b", "c", "d"});
  mixed.add_relation("P", 1, {{0}, {1}});
  mixed.add_relation("E", 2, {{0, 2}, {1, 3}});
  cases.push_back(mixed);
  for (const Structure& s : cases) {
    const auto got = automorphisms(s);
    EXPECT_EQ(got, oracle::automorphisms(s));
    const std::set<Permutation> group(got.begin(), got.end());
    EXPECT_TRUE(group.count(Permutation::identity(s.size())));
    for (const Permutation& p : got) {
      EXPECT_TRUE(group.count(p.inverse()));
      for (const Permutation& q : got) EXPECT_TRUE(group.count(p.then(q)));
    }
  }
}

TEST(Automorphisms, ConstantsFixed) {
  Structure s = plain(3);
  s.set_constant("c", 0);
  EXPECT_EQ(automorphisms(s).size(), 2u);
}

TEST(Permutation, Algebra) {
  const Permutation p{{1, 2, 0}}, q{{0, 2, 1}};
  EXPECT_EQ(p.then(q)(0), q(p(0)));
  EXPECT_TRUE(p.then(p.inverse()).is_identity());
  EXPECT_FALSE(is_automorphism(plain(3), Permutation{{0, 0, 1}}));
}

TEST(MagmaHypothesis, FullSymmetricGroupHolds) {
  // Independent check of the hypothesis: for each ordered pair some
  // permutation fixes the first and moves the second.
  const Structure s = plain(3);
  const auto all = oracle::automorphisms(s);
  for (ElemId a = 0; a < 3; ++a)
    for (ElemId b = 0; b < 3; ++b)
      if (a != b) {
        bool ok = false;
        for (const Permutation& p : all) ok = ok || (p(a) == a && p(b) != b);
        EXPECT_TRUE(ok);
      }
  EXPECT_TRUE(check_magma_hypothesis(s, all).holds());
}

TEST(MagmaHypothesis, Failures) {
  EXPECT_TRUE(check_magma_hypothesis(plain(2), {Permutation::identity(2)}).refuted());
  // Rotations of a 4-cycle: a non-trivial rotation fixes nothing.
  const auto rot = rotations(4);
  for (const Permutation& p : rot) {
    if (p.is_identity()) continue;
    for (ElemId e = 0; e < 4; ++e) EXPECT_NE(p(e), e);
  }
  EXPECT_TRUE(check_magma_hypothesis(gen_cycle(4, true), rot).refuted());
  // Not closed under composition.
  EXPECT_TRUE(check_magma_hypothesis(plain(3), {Permutation::identity(3), Permutation{{1, 2, 0}}})
                  .refuted());
  // Missing identity.
  EXPECT_TRUE(check_magma_hypothesis(plain(2), {Permutation{{1, 0}}}).refuted());
  EXPECT_THROW(check_magma_hypothesis(gen_cycle(4, true), {Permutation{{1, 0, 2, 3}}}),
               StructureError);
}
