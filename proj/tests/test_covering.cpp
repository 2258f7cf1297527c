#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ncov/covering.hpp"
#include "ncov/error.hpp"

using namespace ncov;

namespace {

struct Fixture {
  PermGroup G;
  ElementTable T;
  ConjClassTable C;
  SubgroupLattice L;
  explicit Fixture(PermGroup g) : G(std::move(g)), T(G), C(conjugacy_classes(T)), L(all_subgroups(T, C)) {}
  std::vector<SubgroupRecord> maximal() const { return maximal_subgroups(L); }
};

PermGroup from(std::initializer_list<const char*> gens, std::size_t n) {
  std::vector<Perm> g;
  for (auto s : gens) g.push_back(parse_permutation(s, n));
  return PermGroup(g, n);
}

PermGroup a5() { return from({"(1,2,3,4,5)", "(1,2,3)"}, 5); }
PermGroup psl27() { return from({"(1,2,3,4,5,6,7)", "(2,3)(4,7)"}, 7); }
PermGroup m11() { return from({"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"}, 11); }

std::size_t column_of_order(const CoverInstance& inst, std::uint64_t order) {
  for (std::size_t j = 0; j < inst.subgroups.size(); ++j)
    if (inst.subgroups[j].order == order) return j;
  ADD_FAILURE() << "no column of order " << order;
  return 0;
}

std::size_t class_of_order(const CoverInstance& inst, std::uint64_t order) {
  for (std::size_t i = 0; i < inst.nclasses(); ++i)
    if (inst.class_orders[i] == order) return i;
  ADD_FAILURE() << "no class of element order " << order;
  return 0;
}

// Union of all conjugates of the selected subgroups, element by element.
bool covers_elementwise(const ElementTable& T, const std::vector<SubgroupRecord>& subs) {
  std::vector<char> hit(T.size(), 0);
  for (const auto& s : subs) {
    auto H = make_subgroup(T, s.gens);
    for (std::uint32_t g = 0; g < T.size(); ++g) {
      const Perm x = T.element(g);
      for (auto h : H.elems) hit[T.index_of(conjugate(T.element(h), x))] = 1;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

}  // namespace

TEST(Incidence, AlternatingFiveRows) {
  Fixture s(a5());
  auto inst = incidence_matrix(s.T, s.C, s.maximal());
  const auto a4 = column_of_order(inst, 12), d10 = column_of_order(inst, 10), s3 = column_of_order(inst, 6);
  for (std::size_t i = 0; i < inst.nclasses(); ++i) {
    if (inst.class_orders[i] == 5) {
      EXPECT_FALSE(inst.meets[i][a4]);
      EXPECT_TRUE(inst.meets[i][d10]);
      EXPECT_FALSE(inst.meets[i][s3]);
    }
  }
  const auto c3 = class_of_order(inst, 3);
  EXPECT_TRUE(inst.meets[c3][a4]);
  EXPECT_TRUE(inst.meets[c3][s3]);
  EXPECT_FALSE(inst.meets[c3][d10]);
  for (std::size_t j = 0; j < inst.subgroups.size(); ++j) EXPECT_TRUE(inst.meets[0][j]);
}

TEST(Incidence, WholeGroupColumnIsFull) {
  Fixture s(psl27());
  auto inst = incidence_matrix(s.T, s.C, s.L, false);
  const auto g = column_of_order(inst, 168);
  for (std::size_t i = 0; i < inst.nclasses(); ++i) EXPECT_TRUE(inst.meets[i][g]);
}

TEST(Incidence, CharacterSupportAgrees) {
  for (auto G : {a5(), psl27(), m11()}) {
    Fixture s(G);
    auto recs = s.maximal();
    auto inst = incidence_matrix(s.T, s.C, recs);
    EXPECT_EQ(inst.meets, incidence_by_characters(s.T, s.C, recs));
  }
}

TEST(Incidence, MathieuElevenNoEmptyRow) {
  Fixture s(m11());
  auto inst = incidence_matrix(s.T, s.C, s.maximal());
  EXPECT_EQ(inst.nclasses(), 10u);
  EXPECT_EQ(inst.subgroups.size(), 5u);
  for (const auto& row : inst.meets) EXPECT_TRUE(std::any_of(row.begin(), row.end(), [](char c) { return c; }));
}

TEST(NormalCovering, AlternatingFive) {
  Fixture s(a5());
  auto inst = incidence_matrix(s.T, s.C, s.L, false);
  const auto a4 = column_of_order(inst, 12), d10 = column_of_order(inst, 10), s3 = column_of_order(inst, 6);
  EXPECT_TRUE(is_normal_covering(inst, {a4, d10}));
  EXPECT_FALSE(is_normal_covering(inst, {a4, s3}));
  EXPECT_FALSE(is_normal_covering(inst, {a4}));
  try {
    is_normal_covering(inst, {a4, column_of_order(inst, 60)});
    ADD_FAILURE() << "whole group accepted as a component";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::improper_component);
  }
}

TEST(NormalCovering, AgreesWithElementwiseUnion) {
  for (auto G : {a5(), psl27()}) {
    Fixture s(G);
    auto inst = incidence_matrix(s.T, s.C, s.L);
    const auto& subs = inst.subgroups;
    for (std::size_t h = 0; h < subs.size(); ++h)
      for (std::size_t k = h + 1; k < subs.size(); ++k) {
        if (subs[h].order == inst.group_order || subs[k].order == inst.group_order) continue;
        EXPECT_EQ(is_normal_covering(inst, {h, k}), covers_elementwise(s.T, {subs[h], subs[k]}))
            << subs[h].label << " " << subs[k].label;
      }
  }
}

TEST(CoveringNumber, Examples) {
  {
    Fixture s(a5());
    EXPECT_EQ(covering_number(incidence_matrix(s.T, s.C, s.maximal())), 2u);
  }
  {
    Fixture s(m11());
    auto inst = incidence_matrix(s.T, s.C, s.maximal());
    EXPECT_EQ(covering_number(inst), 2u);
    std::vector<std::size_t> all(inst.subgroups.size());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    EXPECT_TRUE(is_normal_covering(inst, all));
    EXPECT_TRUE(is_normal_covering(inst, minimum_covering(inst)));
  }
}

TEST(CoveringNumber, CyclicGroupRejected) {
  Fixture s(from({"(1,2,3,4,5,6)"}, 6));
  auto inst = incidence_matrix(s.T, s.C, s.maximal());
  try {
    covering_number(inst);
    ADD_FAILURE() << "C6 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::cyclic_group);
  }
}

TEST(Enumerate, AlternatingFivePairs) {
  Fixture s(a5());
  auto maximal = incidence_matrix(s.T, s.C, s.maximal());
  auto pairs = enumerate_2coverings(maximal, true);
  ASSERT_EQ(pairs.size(), 2u);
  std::multiset<std::uint64_t> orders;
  for (const auto& p : pairs) orders.insert(maximal.subgroups[p.h].order * maximal.subgroups[p.k].order);
  EXPECT_EQ(orders, (std::multiset<std::uint64_t>{60, 120}));

  auto full = incidence_matrix(s.T, s.C, s.L);
  EXPECT_EQ(enumerate_2coverings(full, false).size(), 5u);
}

TEST(Enumerate, PslTwoSevenWithoutMaximality) {
  Fixture s(psl27());
  auto full = incidence_matrix(s.T, s.C, s.L);
  auto pairs = enumerate_2coverings(full, false);
  for (const auto& p : pairs) EXPECT_TRUE(is_normal_covering(full, {p.h, p.k}));
  EXPECT_GE(pairs.size(), enumerate_2coverings(full, true).size());
}

TEST(InvariableGraph, Structure) {
  Fixture s(m11());
  auto inst = incidence_matrix(s.T, s.C, s.maximal());
  Graph g = invariable_graph(inst);
  EXPECT_EQ(g.vertices.size(), inst.nclasses() - 1);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    EXPECT_NE(g.vertices[v], 0u);
    EXPECT_FALSE(g.adj[v].test(v));
    for (std::size_t w = 0; w < g.vertices.size(); ++w) EXPECT_EQ(g.adj[v].test(w), g.adj[w].test(v));
  }
  const auto kappa = clique_number(g);
  EXPECT_EQ(kappa, 2u);
  EXPECT_LE(kappa, covering_number(inst));
  EXPECT_EQ(max_clique(g).size(), kappa);
}

TEST(SetCover, SmallInstances) {
  Bits u(4);
  for (int i = 0; i < 4; ++i) u.set(i);
  Bits a(4), b(4), c(4);
  a.set(0), a.set(1), b.set(2), b.set(3), c.set(1), c.set(2);
  auto best = min_set_cover({c, a, b}, u);
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(best->size(), 2u);
  EXPECT_FALSE(min_set_cover({c}, u).has_value());
}
