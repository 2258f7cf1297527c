#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncov/group.hpp"
#include "ncov/lattice.hpp"

namespace ncov {

// Group file, optionally with `socle gen` lines (an Aut-context file).
struct GroupFile {
  std::string name;
  std::size_t degree = 0;
  std::vector<Perm> gens;
  std::optional<std::uint64_t> order;
  std::vector<Perm> socle_gens;
  std::optional<std::uint64_t> socle_order;
  std::string socle_name;

  bool is_aut_context() const { return !socle_gens.empty(); }
  // Builds the group, checking the `order` line.
  PermGroup group() const;
  PermGroup socle() const;
};

GroupFile parse_group_file(const std::string& text, const std::string& origin = "<string>");
GroupFile read_group_file(const std::string& path);
std::string format_group_file(const GroupFile& g);
void write_group_file(const std::string& path, const GroupFile& g);

struct SubgroupFile {
  std::string parent;
  std::vector<SubgroupRecord> subgroups;
};

SubgroupFile parse_subgroup_file(const std::string& text, std::size_t degree,
                                 const std::string& origin = "<string>");
SubgroupFile read_subgroup_file(const std::string& path, std::size_t degree);
std::string format_subgroup_file(const SubgroupFile& s);
void write_subgroup_file(const std::string& path, const SubgroupFile& s);

// Order, properness and generator membership of every record; throws on failure.
void validate_subgroups(const PermGroup& G, const std::vector<SubgroupRecord>& subs);

std::string read_text(const std::string& path);

}  // namespace ncov
