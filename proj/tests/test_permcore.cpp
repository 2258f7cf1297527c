#include <gtest/gtest.h>

#include "ncov/classes.hpp"
#include "ncov/error.hpp"
#include "ncov/group.hpp"
#include "ncov/lattice.hpp"
#include "ncov/subgroup.hpp"

using namespace ncov;

namespace {

PermGroup a5() {
  return PermGroup({parse_permutation("(1,2,3,4,5)", 5), parse_permutation("(1,2,3)", 5)}, 5);
}

PermGroup psl27() {
  // action on the 7 points of the Fano plane
  return PermGroup({parse_permutation("(1,2,3,4,5,6,7)", 7), parse_permutation("(2,3)(4,7)", 7)},
                   7);
}

PermGroup m11() {
  return PermGroup({parse_permutation("(1,2,3,4,5,6,7,8,9,10,11)", 11),
                    parse_permutation("(3,7,11,8)(4,10,5,6)", 11)},
                   11);
}

}  // namespace

TEST(Perm, ParseAndPrint) {
  Perm p = parse_permutation("(1,3)(2,4,5)", 6);
  EXPECT_EQ(p.to_string(), "(1,3)(2,4,5)");
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(parse_permutation("[2,3,1]", 3).to_string(), "(1,2,3)");
  EXPECT_EQ(Perm(4).to_string(), "()");
  EXPECT_THROW(parse_permutation("(1,2,1)", 3), Error);
  EXPECT_THROW(parse_permutation("(1,9)", 3), Error);
}

TEST(Perm, RightAction) {
  Perm p = parse_permutation("(1,2)", 3), q = parse_permutation("(2,3)", 3);
  // 1 -> 2 under p, then 2 -> 3 under q
  EXPECT_EQ((p * q)[0], 2);
  EXPECT_EQ(conjugate(p, q).to_string(), "(1,3)");
}

TEST(PermGroup, Orders) {
  EXPECT_EQ(a5().order(), 60u);
  EXPECT_EQ(psl27().order(), 168u);
  EXPECT_EQ(m11().order(), 7920u);
  auto g = m11();
  EXPECT_TRUE(g.contains(parse_permutation("(1,2,3,4,5,6,7,8,9,10,11)", 11)));
  EXPECT_FALSE(g.contains(parse_permutation("(1,2)", 11)));
  EXPECT_EQ(group_order({parse_permutation("(1,2,3,4,5,6,7,8,9,10,11,12)", 12),
                         parse_permutation("(1,2)", 12)},
                        12),
            479001600u);
}

TEST(Classes, A5) {
  auto G = a5();
  ElementTable T(G);
  auto C = conjugacy_classes(T);
  ASSERT_EQ(C.size(), 5u);
  std::vector<std::uint64_t> sizes(C.sizes.begin(), C.sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::uint64_t>{1, 15, 20, 12, 12}));
  EXPECT_EQ(C.names, (std::vector<std::string>{"1A", "2A", "3A", "5A", "5B"}));
  auto w = are_conjugate(T, C, parse_permutation("(1,2,3)", 5), parse_permutation("(3,4,5)", 5));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(conjugate(parse_permutation("(1,2,3)", 5), *w), parse_permutation("(3,4,5)", 5));
  EXPECT_FALSE(are_conjugate(T, C, parse_permutation("(1,2,3,4,5)", 5),
                             parse_permutation("(1,3,5,2,4)", 5)));
}

TEST(Classes, M11) {
  auto G = m11();
  ElementTable T(G);
  auto C = conjugacy_classes(T);
  EXPECT_EQ(C.size(), 10u);
}

TEST(Subgroups, PermutationCharacterA4) {
  auto G = a5();
  ElementTable T(G);
  auto C = conjugacy_classes(T);
  auto H = make_subgroup(T, {parse_permutation("(1,2,3)", 5), parse_permutation("(1,2)(3,4)", 5)});
  EXPECT_EQ(H.order(), 12u);
  auto pi = permutation_character(T, C, H);
  EXPECT_EQ(pi, (std::vector<std::uint64_t>{5, 1, 2, 0, 0}));
  EXPECT_EQ(permutation_character_by_count(T, C, H), pi);
}

TEST(Subgroups, Lattices) {
  {
    auto G = a5();
    ElementTable T(G);
    auto C = conjugacy_classes(T);
    auto L = all_subgroups(T, C);
    EXPECT_EQ(L.classes.size(), 9u);
    std::vector<std::uint64_t> maxo;
    for (const auto& r : maximal_subgroups(L)) maxo.push_back(r.order);
    std::sort(maxo.begin(), maxo.end());
    EXPECT_EQ(maxo, (std::vector<std::uint64_t>{6, 10, 12}));
  }
  {
    auto G = psl27();
    ElementTable T(G);
    auto C = conjugacy_classes(T);
    auto L = all_subgroups(T, C);
    EXPECT_EQ(L.classes.size(), 15u);
    EXPECT_EQ(maximal_subgroups(L).size(), 3u);
  }
}

TEST(Subgroups, MaximalSearchM11) {
  auto G = m11();
  ElementTable T(G);
  auto C = conjugacy_classes(T);
  MaximalSearchOptions opt;
  opt.pairs_per_class = 60;
  auto M = search_maximal_subgroups(T, C, opt);
  std::vector<std::uint64_t> orders;
  for (const auto& m : M) orders.push_back(m.order());
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{720, 660, 144, 120, 48}));
  for (const auto& m : M) EXPECT_TRUE(is_maximal_subgroup(T, m));
}
