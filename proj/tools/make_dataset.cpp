// Regenerates data/: group files, maximal subgroup files and manifest.json.
// Usage: make_dataset <output-dir> [entry names...]

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "json.hpp"
#include "ncov/contexts.hpp"
#include "ncov/error.hpp"
#include "ncov/weak.hpp"

using namespace ncov;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Spec {
  std::string name;
  std::function<GroupFile()> build;
  std::size_t maximal_classes;  // ATLAS count, checked after the search
  std::string context;
  bool heavy = false;
  json expected = json::array();
};

json expect(const std::string& q, json value, const std::string& citation, const std::string& source,
            bool heavy = false) {
  json j{{"quantity", q}, {"value", value}, {"citation", citation}, {"source", source}};
  if (heavy) j["heavy"] = true;
  return j;
}

std::string file_stem(std::string s) {
  std::string out;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += c;
    else if (c == '(' || c == '.')
      out += '_';
  }
  return out;
}

// Adds the usual quantities for a row of a weak 2-covering table.
void weak_row(Spec& s, const std::string& table, int nr, std::vector<int> normal, int drop = -1,
              bool drop_heavy = false) {
  const std::string row = table + ", row " + s.name;
  s.expected.push_back(expect("weak_nr", nr, row, "table"));
  s.expected.push_back(expect("weak_normal", normal, row, "table"));
  if (nr >= 1) s.expected.push_back(expect("gamma_w", 2, row + " (a weak 2-covering exists)", "derived"));
  if (std::any_of(normal.begin(), normal.end(), [](int c) { return c > 0; }))
    s.expected.push_back(expect("gamma", 2, row + " (a normal 2-covering exists)", "derived"));
  s.expected.push_back(expect("pair_bounds", 1, "C <= hk and max(h,k) | C for every listed pair", "derived"));
  if (drop >= 0)
    s.expected.push_back(expect("drop_nr", drop,
                                "weak 2-coverings without maximality, row " + s.name, "table", drop_heavy));
}

GroupFile rename(GroupFile g, const std::string& socle, const std::string& name) {
  g.socle_name = socle;
  g.name = name;
  return g;
}

// Treat the whole group as G, with A = G.
GroupFile as_own_group(GroupFile g, const std::string& name) {
  g.socle_gens.clear();
  g.socle_order.reset();
  g.socle_name.clear();
  g.name = name;
  return g;
}

std::vector<Spec> all_specs() {
  const std::string alt = "weak 2-coverings table (alternating)";
  const std::string lin = "weak 2-coverings table (linear)";
  const std::string uni = "weak 2-coverings table (unitary)";
  const std::string sym = "weak 2-coverings table (symplectic)";
  const std::string spor = "sporadic socle table";
  std::vector<Spec> v;
  auto add = [&](Spec s) { v.push_back(std::move(s)); return &v.back(); };

  weak_row(*add({"A5", [] { return alternating_context(5); }, 3, "S5"}), alt, 2, {1, 1}, 5);
  weak_row(*add({"A6", [] { return rename(linear_context(2, 9, false), "A6", "Aut(A6)"); }, 5,
                 "PGammaL2(9), the full automorphism group"}),
           alt, 2, {2, 2}, 8);
  weak_row(*add({"A7", [] { return alternating_context(7); }, 5, "S7"}), alt, 1, {2}, 2);
  weak_row(*add({"A8", [] { return alternating_context(8); }, 6, "S8"}), alt, 1, {2}, 4);
  weak_row(*add({"A9", [] { return alternating_context(9); }, 8, "S9"}), alt, 1, {0});
  weak_row(*add({"PSL2(7)", [] { return linear_context(2, 7, false); }, 3, "PGL2(7)"}), lin, 1, {2}, 4);
  weak_row(*add({"PSL2(8)", [] { return linear_context(2, 8, false); }, 3, "PGammaL2(8)"}), lin, 2,
           {1, 1}, 5);
  weak_row(*add({"PSL2(11)", [] { return linear_context(2, 11, false); }, 4, "PGL2(11)"}), lin, 1, {1}, 2);
  weak_row(*add({"PSL2(13)", [] { return linear_context(2, 13, false); }, 4, "PGL2(13)"}), lin, 1, {1}, 2);
  weak_row(*add({"PSL3(3)", [] { return linear_context(3, 3, true); }, 4, "PSL3(3).2 with the polarity"}),
           lin, 1, {2}, 4);
  weak_row(*add({"PSL3(4)", [] { return linear_context(3, 4, true); }, 9,
                 "PGammaL3(4) with the polarity, the full automorphism group"}),
           lin, 2, {0, 6}, 13);
  weak_row(*add({"PSU3(3)", [] { return unitary_context(3, 3); }, 4, "PGammaU3(3)"}), uni, 2, {1, 1}, 4);
  weak_row(*add({"PSU3(5)", [] { return unitary_context(3, 5); }, 8, "PGammaU3(5)"}), uni, 2, {0, 3}, 3,
           true);
  weak_row(*add({"PSU4(2)", [] { return unitary_context(4, 2); }, 5, "PGammaU4(2)"}), uni, 2, {1, 1}, 3);
  weak_row(*add({"PSp4(3)", [] { return symplectic_context(4, 3); }, 5, "PGSp4(3)"}), sym, 2, {1, 1}, 3);
  weak_row(*add({"Sp4(4)", [] { return rename(symplectic_context(4, 4), "Sp4(4)", "Aut(Sp4(4))"); }, 7,
                 "Sp4(4) with field and graph automorphisms on points and lines"}),
           sym, 2, {2, 0});
  weak_row(*add({"Sp6(2)", [] { return rename(symplectic_context(6, 2), "Sp6(2)", "Sp6(2)"); }, 8,
                 "Sp6(2), which has no outer automorphisms", true}),
           sym, 1, {1});
  {
    Spec* s = add({"Sz(8)", [] { return suzuki_context(8); }, 4, "Sz(8).3"});
    s->expected.push_back(expect("weak_nr", 0, "Suzuki groups admit no weak 2-covering", "table"));
    s->expected.push_back(expect("weak_normal", json::array(), "Suzuki groups admit no weak 2-covering", "table"));
  }
  {
    Spec* s = add({"M11", [] { return mathieu_group(11); }, 5, "M11, which has no outer automorphisms"});
    const std::string row = spor + ", row M11";
    for (auto q : {"gamma", "gamma_w", "kappa", "kappa_w"}) s->expected.push_back(expect(q, 2, row, "table"));
    s->expected.push_back(expect("weak_nr", 3, "weak 2-coverings table (sporadic), row M11", "table"));
    s->expected.push_back(expect("weak_normal", {1, 1, 1}, "weak 2-coverings table (sporadic), row M11", "table"));
    s->expected.push_back(expect("pair_bounds", 1, "C <= hk and max(h,k) | C for every listed pair", "derived"));
    s->expected.push_back(expect("drop_nr", 8, "weak 2-coverings without maximality, row M11", "table"));
  }
  {
    Spec* s = add({"M12", [] { return mathieu12_with_outer(); }, 11, "M12.2 on 24 points"});
    const std::string row = spor + ", row M12";
    s->expected.push_back(expect("gamma", 3, row, "table"));
    s->expected.push_back(expect("gamma_w", 2, row, "table"));
    s->expected.push_back(expect("kappa", 2, row, "table"));
    s->expected.push_back(expect("kappa_w", 2, row, "table"));
    s->expected.push_back(expect("weak_nr", 2, "weak 2-coverings table (sporadic), row M12", "table"));
    s->expected.push_back(expect("weak_normal", {0, 0}, "weak 2-coverings table (sporadic), row M12", "table"));
    s->expected.push_back(expect("pair_bounds", 1, "C <= hk and max(h,k) | C for every listed pair", "derived"));
    s->expected.push_back(
        expect("drop_nr", 3, "weak 2-coverings without maximality, row M12", "table", true));
  }
  {
    Spec* s = add({"M12.2", [] { return as_own_group(mathieu12_with_outer(), "M12.2"); }, 9,
                   "M12.2 treated as the group itself"});
    const std::string row = spor + ", row M12.2";
    s->expected.push_back(expect("gamma", 3, row, "table"));
    s->expected.push_back(expect("kappa", 2, row, "table"));
  }
  {
    Spec* s = add({"J2", [] { return janko2_context(); }, 9, "J2.2 on the Hall-Janko graph", true});
    const std::string row = spor + ", row J2";
    s->expected.push_back(expect("gamma", 3, row, "table"));
    s->expected.push_back(expect("kappa", 2, row, "table"));
    s->expected.push_back(expect("gamma_w", 3, row, "table"));
    s->expected.push_back(expect("kappa_w", 2, row, "table"));
  }
  {
    Spec* s = add({"J2.2", [] { return as_own_group(janko2_context(), "J2.2"); }, 10,
                   "J2.2 treated as the group itself", true});
    const std::string row = spor + ", row J2.2";
    s->expected.push_back(expect("gamma", 3, row, "table"));
    s->expected.push_back(expect("kappa", 3, row, "table"));
  }
  for (auto& s : v)
    s.expected.push_back(expect("maximal_classes", static_cast<int>(s.maximal_classes),
                                "ATLAS of Finite Groups, maximal subgroups of " + s.name, "classification"));
  return v;
}

// Maximal subgroup classes of the socle, closed under the overgroup.
std::vector<SubgroupRecord> maximal_records(const GroupFile& g, std::size_t expected) {
  PermGroup A = g.group();
  AutContext ctx = make_aut_context(A, g.is_aut_context() ? g.socle_gens : g.gens);
  ElementTable T(ctx.G);
  ConjClassTable C = conjugacy_classes(T);
  MaximalSearchOptions opt;
  auto found = search_maximal_subgroups(T, C, opt);
  found = close_under_aut(ctx, T, C, std::move(found));
  for (const auto& m : found)
    if (!is_maximal_subgroup(T, m)) throw Error(Errc::unsupported_parameters, "non-maximal class in search output");
  if (found.size() != expected)
    throw Error(Errc::unsupported_parameters, "found " + std::to_string(found.size()) +
                                                  " maximal classes, expected " + std::to_string(expected));
  std::stable_sort(found.begin(), found.end(),
                   [](const TableSubgroup& a, const TableSubgroup& b) { return a.order() > b.order(); });
  std::vector<SubgroupRecord> out;
  std::map<std::string, int> seen;
  for (const auto& m : found) {
    SubgroupRecord r;
    r.label = guess_label(T, C, m);
    int k = seen[r.label]++;
    if (k > 0) r.label += "_" + std::to_string(k + 1);
    r.gens = m.gens;
    r.order = m.order();
    r.is_maximal = true;
    out.push_back(std::move(r));
  }
  // the first of a repeated label gets a suffix too, so labels stay unambiguous
  for (auto& r : out)
    if (seen.count(r.label) && seen[r.label] > 1) r.label += "_1";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: make_dataset <output-dir> [entry...]\n";
    return 2;
  }
  const fs::path out(argv[1]);
  std::vector<std::string> only(argv + 2, argv + argc);
  fs::create_directories(out / "groups");
  fs::create_directories(out / "subgroups");

  json manifest{{"format", 1}, {"entries", json::array()}};
  int failures = 0;
  for (auto& s : all_specs()) {
    const std::string stem = file_stem(s.name);
    json entry{{"name", s.name},
               {"group", "groups/" + stem + ".grp"},
               {"maximal", "subgroups/" + stem + ".max"},
               {"context", s.context},
               {"heavy", s.heavy},
               {"expected", s.expected}};
    manifest["entries"].push_back(entry);
    if (!only.empty() && std::find(only.begin(), only.end(), s.name) == only.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    try {
      GroupFile g = s.build();
      write_group_file((out / "groups" / (stem + ".grp")).string(), g);
      SubgroupFile sf;
      sf.parent = g.is_aut_context() ? g.socle_name : g.name;
      sf.subgroups = maximal_records(g, s.maximal_classes);
      write_subgroup_file((out / "subgroups" / (stem + ".max")).string(), sf);
      std::cout << s.name << ": " << sf.subgroups.size() << " maximal classes, "
                << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n"
                << std::flush;
    } catch (const std::exception& e) {
      std::cerr << s.name << ": " << e.what() << "\n";
      ++failures;
    }
  }
  std::ofstream(out / "manifest.json") << manifest.dump(2) << "\n";
  return failures ? 1 : 0;
}
