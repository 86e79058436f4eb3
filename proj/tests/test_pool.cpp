#include <gtest/gtest.h>

#include <functional>

#include "flatteam/parser.hpp"
#include "flatteam/pool.hpp"

using namespace flatteam;

namespace {

std::set<Kind> kinds_of(const Formula& f) {
  std::set<Kind> out = {f.kind()};
  for (const Formula& c : f.children()) out.merge(kinds_of(c));
  return out;
}

}  // namespace

TEST(Pool, DeterministicInSeed) {
  PoolOptions o;
  o.seed = 7;
  o.count = 50;
  const auto a = generate_pool(o);
  const auto b = generate_pool(o);
  ASSERT_EQ(a.size(), 50u);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
  o.seed = 8;
  const auto c = generate_pool(o);
  std::size_t same = 0;
  for (std::size_t i = 0; i < a.size(); ++i) same += a[i] == c[i];
  EXPECT_LT(same, 50u);
}

TEST(Pool, RespectsOptions) {
  PoolOptions o;
  o.seed = 9;
  o.count = 150;
  o.max_depth = 3;
  o.kinds = flattenable_kinds();
  std::set<std::string> seen;
  for (const Formula& f : generate_pool(o)) {
    EXPECT_LE(formula_depth(f), 3u) << render(f);
    for (const auto& v : all_variables(f)) EXPECT_TRUE(v == "x" || v == "y") << render(f);
    for (Kind k : kinds_of(f)) EXPECT_TRUE(o.kinds.count(k)) << render(f);
    EXPECT_TRUE(seen.insert(render(f)).second) << "duplicate " << render(f);
  }
}

TEST(Pool, CoversEveryKind) {
  PoolOptions o;
  o.seed = 10;
  o.count = 200;
  std::set<Kind> seen;
  for (const Formula& f : generate_pool(o)) seen.merge(kinds_of(f));
  EXPECT_EQ(seen, all_kinds());
}

TEST(Pool, UnaryAtoms) {
  PoolOptions o;
  o.seed = 11;
  o.count = 60;
  o.relations = {};
  o.unary_atoms = true;
  o.kinds = {Kind::Equal, Kind::Anon, Kind::And, Kind::Or, Kind::Exists, Kind::Forall};
  const std::function<void(const Formula&)> check = [&](const Formula& f) {
    if (f.kind() == Kind::Anon) {
      EXPECT_EQ(f.tuple(0).size(), 1u) << render(f);
    }
    for (const Formula& c : f.children()) check(c);
  };
  for (const Formula& f : generate_pool(o)) check(f);
}

TEST(Pool, ImpossibleRequestThrows) {
  PoolOptions o;
  o.count = 50;
  o.max_depth = 0;
  o.kinds = {Kind::Top, Kind::Bot};
  EXPECT_THROW(generate_pool(o), std::runtime_error);
}

TEST(Pool, NaiveCostGrowsWithSearch) {
  EXPECT_LT(naive_cost(parse_formula("P(x)"), 4), naive_cost(parse_formula("P(x) | P(y)"), 4));
  EXPECT_LT(naive_cost(parse_formula("E x. P(x)"), 2), naive_cost(parse_formula("E x. P(x)"), 6));
}
