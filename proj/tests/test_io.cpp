#include <gtest/gtest.h>

#include "ncov/error.hpp"
#include "ncov/io.hpp"

using namespace ncov;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::io_error;
}

const char* kA5 =
    "degree 5\n"
    "name A5\n"
    "gen (1,2,3,4,5)\n"
    "gen (1,2,3)\n"
    "order 60\n";

}  // namespace

TEST(GroupFile, ParseAndRoundTrip) {
  GroupFile g = parse_group_file(kA5);
  EXPECT_EQ(g.degree, 5u);
  EXPECT_EQ(g.name, "A5");
  ASSERT_EQ(g.gens.size(), 2u);
  EXPECT_EQ(g.gens[1].to_string(), "(1,2,3)");
  EXPECT_EQ(g.group().order(), 60u);
  EXPECT_FALSE(g.is_aut_context());
  EXPECT_EQ(format_group_file(g), kA5);
}

TEST(GroupFile, WrongOrderLineIsChecksumMismatch) {
  std::string text = kA5;
  text.replace(text.find("order 60"), 8, "order 61");
  GroupFile g = parse_group_file(text);
  EXPECT_EQ(code_of([&] { g.group(); }), Errc::checksum_mismatch);
}

TEST(GroupFile, MalformedInput) {
  EXPECT_EQ(code_of([] { parse_group_file("name X\ngen (1,2)\n"); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { parse_group_file("degree 3\nname X\n"); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { parse_group_file("degree 3\nname X\ngen (1,2)\nfoo 1\n"); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { parse_group_file("degree 3\nname X\ngen (1,2,1)\n"); }),
            Errc::malformed_permutation);
  EXPECT_EQ(code_of([] { read_group_file("/nonexistent/file.grp"); }), Errc::io_error);
}

TEST(GroupFile, AutContextLines) {
  const std::string text = std::string(
                               "degree 5\n"
                               "name S5\n"
                               "gen (1,2,3,4,5)\n"
                               "gen (1,2)\n"
                               "order 120\n") +
                           "socle name A5\n"
                           "socle gen (1,2,3,4,5)\n"
                           "socle gen (1,2,3)\n"
                           "socle order 60\n";
  GroupFile g = parse_group_file(text);
  EXPECT_TRUE(g.is_aut_context());
  EXPECT_EQ(g.socle_name, "A5");
  EXPECT_EQ(g.socle().order(), 60u);
  EXPECT_EQ(parse_group_file(format_group_file(g)).socle_gens.size(), 2u);

  std::string bad = text;
  bad.replace(bad.find("socle order 60"), 14, "socle order 30");
  GroupFile h = parse_group_file(bad);
  EXPECT_EQ(code_of([&] { h.socle(); }), Errc::checksum_mismatch);
}

TEST(SubgroupFile, ParseValidateAndRoundTrip) {
  const std::string text =
      "parent A5\n"
      "subgroup A4 maximal\n"
      "gen (1,2)(3,4)\n"
      "gen (1,2,3)\n"
      "order 12\n"
      "subgroup C5 aschbacher C3\n"
      "gen (1,2,3,4,5)\n";
  SubgroupFile s = parse_subgroup_file(text, 5);
  ASSERT_EQ(s.subgroups.size(), 2u);
  EXPECT_TRUE(s.subgroups[0].is_maximal);
  EXPECT_FALSE(s.subgroups[1].is_maximal);
  EXPECT_EQ(s.subgroups[1].aschbacher, "C3");
  PermGroup A5 = parse_group_file(kA5).group();
  validate_subgroups(A5, s.subgroups);
  EXPECT_EQ(parse_subgroup_file(format_subgroup_file(s), 5).subgroups.size(), 2u);
}

TEST(SubgroupFile, ValidationErrors) {
  PermGroup A5 = parse_group_file(kA5).group();
  auto one = [](const std::string& gen, const std::string& order) {
    return parse_subgroup_file("parent A5\nsubgroup X\ngen " + gen + "\n" + order, 5).subgroups;
  };
  EXPECT_EQ(code_of([&] { validate_subgroups(A5, one("(1,2)", "")); }), Errc::not_a_member);
  EXPECT_EQ(code_of([&] { validate_subgroups(A5, one("(1,2,3)", "order 4\n")); }), Errc::checksum_mismatch);
  EXPECT_EQ(code_of([&] {
              auto r = parse_subgroup_file("parent A5\nsubgroup X\ngen (1,2,3,4,5)\ngen (1,2,3)\n", 5).subgroups;
              validate_subgroups(A5, r);
            }),
            Errc::improper_component);
  EXPECT_EQ(code_of([] { parse_subgroup_file("parent A5\ngen (1,2)\n", 5); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { parse_subgroup_file("parent A5\n", 5); }), Errc::parse_error);
}
