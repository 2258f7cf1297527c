#include "ncov/io.hpp"

#include <fstream>
#include <sstream>

#include "ncov/error.hpp"

namespace ncov {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(const std::string& s, const std::string& where) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::parse_error, where + ": expected an integer, got '" + s + "'");
  }
}

// split "key rest"
std::pair<std::string, std::string> head(const std::string& line) {
  auto sp = line.find_first_of(" \t");
  if (sp == std::string::npos) return {line, ""};
  return {line.substr(0, sp), trim(line.substr(sp))};
}

}  // namespace

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupFile parse_group_file(const std::string& text, const std::string& origin) {
  GroupFile g;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::vector<std::string> pending, pending_socle;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    auto [key, rest] = head(line);
    if (key == "degree") {
      g.degree = parse_u64(rest, where);
    } else if (key == "name") {
      g.name = rest;
    } else if (key == "gen") {
      pending.push_back(rest);
    } else if (key == "order") {
      g.order = parse_u64(rest, where);
    } else if (key == "socle") {
      auto [k2, r2] = head(rest);
      if (k2 == "gen")
        pending_socle.push_back(r2);
      else if (k2 == "order")
        g.socle_order = parse_u64(r2, where);
      else if (k2 == "name")
        g.socle_name = r2;
      else
        throw Error(Errc::parse_error, where + ": unknown socle field '" + k2 + "'");
    } else {
      throw Error(Errc::parse_error, where + ": unknown keyword '" + key + "'");
    }
  }
  if (g.degree == 0) throw Error(Errc::parse_error, origin + ": missing degree line");
  if (pending.empty()) throw Error(Errc::parse_error, origin + ": no generators");
  for (const auto& s : pending) g.gens.push_back(parse_permutation(s, g.degree));
  for (const auto& s : pending_socle) g.socle_gens.push_back(parse_permutation(s, g.degree));
  return g;
}

GroupFile read_group_file(const std::string& path) { return parse_group_file(read_text(path), path); }

PermGroup GroupFile::group() const {
  PermGroup G(gens, degree);
  if (order && *order != G.order())
    throw Error(Errc::checksum_mismatch, name + ": order line says " + std::to_string(*order) +
                                             ", generators give " + std::to_string(G.order()));
  return G;
}

PermGroup GroupFile::socle() const {
  if (socle_gens.empty()) return group();
  PermGroup S(socle_gens, degree);
  if (socle_order && *socle_order != S.order())
    throw Error(Errc::checksum_mismatch, name + ": socle order line says " +
                                             std::to_string(*socle_order) + ", generators give " +
                                             std::to_string(S.order()));
  return S;
}

std::string format_group_file(const GroupFile& g) {
  std::ostringstream out;
  out << "degree " << g.degree << "\n";
  out << "name " << g.name << "\n";
  for (const auto& p : g.gens) out << "gen " << p.to_string() << "\n";
  if (g.order) out << "order " << *g.order << "\n";
  if (!g.socle_name.empty()) out << "socle name " << g.socle_name << "\n";
  for (const auto& p : g.socle_gens) out << "socle gen " << p.to_string() << "\n";
  if (g.socle_order) out << "socle order " << *g.socle_order << "\n";
  return out.str();
}

void write_group_file(const std::string& path, const GroupFile& g) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot write " + path);
  out << format_group_file(g);
}

SubgroupFile parse_subgroup_file(const std::string& text, std::size_t degree,
                                 const std::string& origin) {
  SubgroupFile f;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  SubgroupRecord* cur = nullptr;
  std::vector<std::uint64_t> checks;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    auto [key, rest] = head(line);
    if (key == "parent") {
      f.parent = rest;
    } else if (key == "subgroup") {
      std::istringstream ws(rest);
      SubgroupRecord r;
      if (!(ws >> r.label)) throw Error(Errc::parse_error, where + ": subgroup needs a label");
      std::string w;
      while (ws >> w) {
        if (w == "maximal") {
          r.is_maximal = true;
        } else if (w == "aschbacher") {
          if (!(ws >> r.aschbacher)) throw Error(Errc::parse_error, where + ": missing tag");
        } else {
          throw Error(Errc::parse_error, where + ": unexpected '" + w + "'");
        }
      }
      f.subgroups.push_back(std::move(r));
      cur = &f.subgroups.back();
    } else if (key == "gen") {
      if (!cur) throw Error(Errc::parse_error, where + ": gen before any subgroup");
      cur->gens.push_back(parse_permutation(rest, degree));
    } else if (key == "order") {
      if (!cur) throw Error(Errc::parse_error, where + ": order before any subgroup");
      cur->order = parse_u64(rest, where);
    } else {
      throw Error(Errc::parse_error, where + ": unknown keyword '" + key + "'");
    }
  }
  if (f.subgroups.empty()) throw Error(Errc::parse_error, origin + ": no subgroups");
  return f;
}

SubgroupFile read_subgroup_file(const std::string& path, std::size_t degree) {
  return parse_subgroup_file(read_text(path), degree, path);
}

std::string format_subgroup_file(const SubgroupFile& s) {
  std::ostringstream out;
  out << "parent " << s.parent << "\n";
  for (const auto& r : s.subgroups) {
    out << "subgroup " << r.label;
    if (r.is_maximal) out << " maximal";
    if (!r.aschbacher.empty()) out << " aschbacher " << r.aschbacher;
    out << "\n";
    for (const auto& g : r.gens) out << "gen " << g.to_string() << "\n";
    if (r.order) out << "order " << r.order << "\n";
  }
  return out.str();
}

void write_subgroup_file(const std::string& path, const SubgroupFile& s) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot write " + path);
  out << format_subgroup_file(s);
}

void validate_subgroups(const PermGroup& G, const std::vector<SubgroupRecord>& subs) {
  for (const auto& r : subs) {
    for (const auto& g : r.gens) {
      if (g.degree() != G.degree())
        throw Error(Errc::degree_mismatch, r.label + ": generator degree differs from the group");
      if (!G.contains(g)) throw Error(Errc::not_a_member, r.label + ": generator " + g.to_string());
    }
    std::uint64_t o = group_order(r.gens, G.degree(), G.order());
    if (r.order && o != r.order)
      throw Error(Errc::checksum_mismatch, r.label + ": order line says " +
                                               std::to_string(r.order) + ", generators give " +
                                               std::to_string(o));
    if (o >= G.order()) throw Error(Errc::improper_component, r.label + " is the whole group");
  }
}

}  // namespace ncov
