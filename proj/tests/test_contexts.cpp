#include <gtest/gtest.h>

#include "ncov/contexts.hpp"
#include "ncov/error.hpp"

using namespace ncov;

namespace {

void expect_orders(const GroupFile& g, std::uint64_t a, std::uint64_t s) {
  EXPECT_EQ(g.group().order(), a) << g.name;
  EXPECT_EQ(g.socle().order(), s) << g.socle_name;
  PermGroup A = g.group();
  for (const auto& x : g.socle_gens) EXPECT_TRUE(A.contains(x));
}

}  // namespace

TEST(Contexts, Alternating) {
  expect_orders(alternating_context(5), 120, 60);
  expect_orders(alternating_context(6), 720, 360);
  expect_orders(alternating_context(8), 40320, 20160);
}

TEST(Contexts, Mathieu) {
  EXPECT_EQ(mathieu_group(11).group().order(), 7920u);
  EXPECT_EQ(mathieu_group(12).group().order(), 95040u);
  EXPECT_THROW(mathieu_group(22), Error);
}

TEST(Contexts, MathieuTwelveOuter) {
  GroupFile g = mathieu12_with_outer();
  EXPECT_EQ(g.degree, 24u);
  expect_orders(g, 190080, 95040);
  // the socle has two inequivalent orbits of size 12
  PermGroup S = g.socle();
  EXPECT_EQ(S.orbit(0).size(), 12u);
  EXPECT_FALSE(S.is_transitive());
  EXPECT_TRUE(g.group().is_transitive());
}

TEST(Contexts, Linear) {
  expect_orders(linear_context(2, 7, false), 336, 168);
  expect_orders(linear_context(2, 8, false), 1512, 504);
  expect_orders(linear_context(3, 3, true), 11232, 5616);
  expect_orders(linear_context(3, 4, true), 241920, 20160);
}

TEST(Contexts, Unitary) {
  expect_orders(unitary_context(3, 3), 12096, 6048);
  expect_orders(unitary_context(4, 2), 51840, 25920);
  expect_orders(unitary_context(3, 5), 756000, 126000);
}

TEST(Contexts, Symplectic) {
  GroupFile g = symplectic_context(4, 3);
  EXPECT_EQ(g.degree, 40u);
  expect_orders(g, 51840, 25920);
  GroupFile h = symplectic_context(4, 4);
  EXPECT_EQ(h.degree, 170u);
  expect_orders(h, 3916800, 979200);
}

TEST(Contexts, ProjectivePoints) {
  ProjectivePoints P(make_field(2, 2), 3);
  EXPECT_EQ(P.size(), 21u);
  for (std::size_t i = 0; i < P.size(); ++i) {
    EXPECT_EQ(P.find(P.point(i)), i);
    Vec v = P.point(i);
    for (auto& x : v) x = P.field()->mul(x, 3);
    EXPECT_EQ(P.find(v), i);
  }
}
