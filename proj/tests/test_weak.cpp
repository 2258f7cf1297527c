#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "ncov/contexts.hpp"
#include "ncov/dataset.hpp"
#include "ncov/error.hpp"
#include "ncov/weak.hpp"

using namespace ncov;

namespace {

// A bundled group file together with its maximal subgroup file.
struct Bundled {
  GroupFile file;
  AutContext ctx;
  std::optional<ElementTable> T;
  ConjClassTable C;
  std::vector<SubgroupRecord> maximal;

  explicit Bundled(const std::string& stem) {
    const std::string dir = default_data_dir();
    file = read_group_file(dir + "/groups/" + stem + ".grp");
    ctx = make_aut_context(file.group(), file.is_aut_context() ? file.socle_gens : file.gens);
    T.emplace(ctx.G);
    C = conjugacy_classes(*T);
    maximal = read_subgroup_file(dir + "/subgroups/" + stem + ".max", file.degree).subgroups;
  }
  WeakInstance weak() const { return build_weak(ctx, *T, C, maximal); }
  std::size_t column(std::uint64_t order, std::size_t nth = 0) const {
    for (std::size_t j = 0; j < maximal.size(); ++j)
      if (maximal[j].order == order && nth-- == 0) return j;
    throw std::logic_error("no maximal subgroup of order " + std::to_string(order));
  }
};

std::vector<std::uint64_t> sorted_counts(const std::vector<WeakPair>& pairs) {
  std::vector<std::uint64_t> v;
  for (const auto& p : pairs) v.push_back(p.count.C);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(AutContext, RejectsNonNormalSubgroup) {
  GroupFile s5 = alternating_context(5);
  try {
    make_aut_context(s5.group(), {parse_permutation("(1,2)", 5)});
    ADD_FAILURE() << "<(1,2)> accepted as normal in S5";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_normal);
  }
}

TEST(Fusion, SymmetricOverAlternatingFive) {
  GroupFile g = alternating_context(5);
  AutContext ctx = make_aut_context(g.group(), g.socle_gens);
  EXPECT_EQ(ctx.transversal.size(), 2u);
  ElementTable T(ctx.G);
  auto C = conjugacy_classes(T);
  auto F = fuse_classes(ctx, T, C);
  EXPECT_EQ(C.size(), 5u);
  EXPECT_EQ(F.size(), 4u);
  std::uint64_t total = 0;
  for (const auto& m : F.members)
    for (auto c : m) total += C.sizes[c];
  EXPECT_EQ(total, 60u);
}

TEST(Fusion, TrivialWhenOvergroupIsGroup) {
  GroupFile g = mathieu_group(11);
  AutContext ctx = make_aut_context(g.group(), g.gens);
  ElementTable T(ctx.G);
  auto C = conjugacy_classes(T);
  auto F = fuse_classes(ctx, T, C);
  ASSERT_EQ(F.size(), C.size());
  for (std::size_t c = 0; c < C.size(); ++c) EXPECT_EQ(F.members[F.aut_class_of[c]].size(), 1u);
}

TEST(Fusion, AlternatingSixInsideProjectiveSemilinear) {
  Bundled b("A6");
  auto F = fuse_classes(b.ctx, *b.T, b.C);
  EXPECT_EQ(b.C.size(), 7u);
  EXPECT_EQ(F.size(), 5u);
  // the two classes of order 3 elements fuse
  std::vector<std::uint32_t> threes;
  for (std::size_t c = 0; c < b.C.size(); ++c)
    if (b.C.reps[c].order() == 3) threes.push_back(F.aut_class_of[c]);
  ASSERT_EQ(threes.size(), 2u);
  EXPECT_EQ(threes[0], threes[1]);
}

TEST(WeakNumbers, AlternatingFive) {
  Bundled b("A5");
  auto W = b.weak();
  EXPECT_EQ(weak_covering_number(W), 2u);
  EXPECT_EQ(covering_number(W.inst), 2u);
  EXPECT_EQ(clique_number(aut_invariable_graph(W)), 2u);
  auto pairs = weak_2coverings(W);
  EXPECT_EQ(pairs.size(), 2u);
  EXPECT_EQ(sorted_counts(pairs), (std::vector<std::uint64_t>{1, 1}));
}

TEST(WeakNumbers, InequalitiesOnSmallDatasetGroups) {
  for (auto stem : {"A5", "A6", "A7", "PSL2_7", "PSL2_8", "PSL3_3", "PSU3_3", "M11"}) {
    Bundled b(stem);
    auto W = b.weak();
    const auto gamma = covering_number(W.inst), gamma_w = weak_covering_number(W);
    const auto kappa = clique_number(invariable_graph(W.inst));
    const auto kappa_w = clique_number(aut_invariable_graph(W));
    EXPECT_LE(gamma_w, gamma) << stem;
    EXPECT_LE(kappa, gamma) << stem;
    EXPECT_LE(kappa_w, std::min(kappa, gamma_w)) << stem;
    EXPECT_GE(gamma_w, 2u) << stem;
    EXPECT_GE(kappa, 2u) << stem;
    for (const auto& p : weak_2coverings(W)) EXPECT_TRUE(p.count.invariants_hold) << stem;
  }
}

TEST(WeakNumbers, AlternatingNineHasNoNormalPair) {
  Bundled b("A9");
  auto W = b.weak();
  EXPECT_EQ(covering_number(W.inst), 3u);
  EXPECT_EQ(weak_covering_number(W), 2u);
  auto pairs = weak_2coverings(W);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].count.C, 0u);
  // the components are A9 cap (S4 x S5) and PGammaL2(8)
  std::vector<std::uint64_t> orders{W.inst.subgroups[W.orbits[pairs[0].orbit_h].front()].order,
                                    W.inst.subgroups[W.orbits[pairs[0].orbit_k].front()].order};
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{1440, 1512}));
}

TEST(CountInAutClass, AlternatingSix) {
  Bundled b("A6");
  auto W = b.weak();
  // A6 cap (S2 x S4) is S4 (order 24), paired with A5 (order 60)
  auto pc = count_normal_in_aut_class(W, b.column(24), b.column(60));
  EXPECT_EQ(pc.h, 2u);
  EXPECT_EQ(pc.k, 2u);
  EXPECT_EQ(pc.C, 2u);
  EXPECT_TRUE(pc.invariants_hold);
}

TEST(CountInAutClass, LinearThreeFour) {
  Bundled b("PSL3_4");
  auto W = b.weak();
  // SL3(2) has order 168; the point stabilizer 2^4:A5 has order 960
  auto pc = count_normal_in_aut_class(W, b.column(168), b.column(960));
  EXPECT_EQ(pc.C, 6u);
  EXPECT_EQ(pc.h, 3u);
  EXPECT_EQ(pc.k, 2u);
  EXPECT_TRUE(pc.invariants_hold);
}

TEST(CountInAutClass, NotAWeakCovering) {
  Bundled b("A5");
  auto W = b.weak();
  try {
    count_normal_in_aut_class(W, b.column(12), b.column(6));
    ADD_FAILURE() << "{A4, S3} accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_weak_covering);
  }
}

TEST(Shintani, SmallCases) {
  for (auto [q0, e] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}}) {
    auto r = shintani_check(q0, e);
    EXPECT_TRUE(r.ok()) << q0 << "^" << e;
    EXPECT_TRUE(r.bijective);
    EXPECT_EQ(r.coset_classes, r.h_classes);
    EXPECT_EQ(r.coset_classes, r.perm_coset_classes);
    for (const auto& row : r.rows) EXPECT_EQ(row.centralizer_g, row.centralizer_h);
  }
}

TEST(Shintani, ExponentOneIsIdentity) {
  auto r = shintani_check(3, 1);
  EXPECT_TRUE(r.ok());
  std::vector<std::size_t> images;
  for (const auto& row : r.rows) images.push_back(row.h_class);
  std::sort(images.begin(), images.end());
  std::vector<std::size_t> expect(r.h_classes);
  std::iota(expect.begin(), expect.end(), 0);
  EXPECT_EQ(images, expect);
}
