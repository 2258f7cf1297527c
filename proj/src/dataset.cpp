#include "ncov/dataset.hpp"

#include <algorithm>
#include <filesystem>

#include "json.hpp"
#include "ncov/error.hpp"
#include "ncov/weak.hpp"

namespace ncov {

namespace fs = std::filesystem;
using json = nlohmann::json;

const DatasetEntry* DatasetManifest::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::string default_data_dir() {
#ifdef NCOV_DATA_DIR
  return NCOV_DATA_DIR;
#else
  return "data";
#endif
}

const std::vector<std::string>& known_quantities() {
  static const std::vector<std::string> q{"gamma",       "kappa",   "gamma_w", "kappa_w",
                                          "weak_nr",     "weak_normal", "pair_bounds",
                                          "drop_nr",     "maximal_classes"};
  return q;
}

namespace {

std::string read_referenced(const fs::path& p) {
  try {
    return read_text(p.string());
  } catch (const Error& e) {
    throw Error(Errc::parse_error, "manifest references an unreadable file: " + p.string());
  }
}

Expectation parse_expectation(const json& j, const std::string& where) {
  Expectation x;
  if (!j.is_object() || !j.contains("quantity") || !j.contains("value"))
    throw Error(Errc::parse_error, where + ": expectation needs quantity and value");
  x.quantity = j.at("quantity").get<std::string>();
  const auto& known = known_quantities();
  if (std::find(known.begin(), known.end(), x.quantity) == known.end())
    throw Error(Errc::parse_error, where + ": unknown quantity '" + x.quantity + "'");
  const json& v = j.at("value");
  if (v.is_array()) {
    x.is_list = true;
    for (const auto& y : v) x.value.push_back(y.get<std::int64_t>());
  } else {
    x.value.push_back(v.get<std::int64_t>());
  }
  x.citation = j.value("citation", "");
  if (x.citation.empty()) throw Error(Errc::parse_error, where + ": expectation without citation");
  x.source = j.value("source", "");
  if (x.source != "table" && x.source != "classification" && x.source != "derived")
    throw Error(Errc::parse_error, where + ": expectation source must be table, classification or derived");
  x.heavy = j.value("heavy", false);
  return x;
}

}  // namespace

DatasetManifest load_dataset(const std::string& path) {
  fs::path p(path);
  if (fs::is_directory(p)) p /= "manifest.json";
  if (!fs::exists(p)) throw Error(Errc::parse_error, "no manifest at " + p.string());
  DatasetManifest m;
  m.root = p.parent_path().string();
  json doc;
  try {
    doc = json::parse(read_text(p.string()));
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, p.string() + ": " + e.what());
  }
  try {
    if (!doc.contains("entries") || !doc["entries"].is_array())
      throw Error(Errc::parse_error, p.string() + ": missing entries array");
    for (const auto& je : doc["entries"]) {
      DatasetEntry e;
      e.name = je.at("name").get<std::string>();
      e.group_path = je.at("group").get<std::string>();
      e.maximal_path = je.value("maximal", "");
      e.context = je.value("context", "");
      e.heavy = je.value("heavy", false);
      const fs::path root(m.root);
      e.group = parse_group_file(read_referenced(root / e.group_path), e.group_path);
      PermGroup G = e.group.socle();
      e.group.group();  // checks the overgroup order line too
      if (!e.maximal_path.empty()) {
        e.maximal = parse_subgroup_file(read_referenced(root / e.maximal_path), e.group.degree,
                                        e.maximal_path);
        validate_subgroups(G, e.maximal->subgroups);
      }
      for (const auto& jx : je.value("expected", json::array()))
        e.expected.push_back(parse_expectation(jx, e.name));
      m.entries.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, p.string() + ": " + e.what());
  }
  return m;
}

namespace {

std::string show(const std::vector<std::int64_t>& v, bool list) {
  if (!list) return std::to_string(v.at(0));
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// Lazily computed data for one entry.
class Evaluator {
 public:
  explicit Evaluator(const DatasetEntry& e) : e_(e) {}

  std::vector<std::int64_t> get(const std::string& q) {
    if (q == "maximal_classes") return {std::int64_t(records().size())};
    if (q == "gamma") return {std::int64_t(covering_number(weak().inst))};
    if (q == "kappa") return {std::int64_t(clique_number(invariable_graph(weak().inst)))};
    if (q == "gamma_w") return {std::int64_t(weak_covering_number(weak()))};
    if (q == "kappa_w") return {std::int64_t(clique_number(aut_invariable_graph(weak())))};
    if (q == "weak_nr") return {std::int64_t(pairs().size())};
    if (q == "weak_normal") {
      std::vector<std::int64_t> out;
      for (const auto& p : pairs()) out.push_back(std::int64_t(p.count.C));
      std::sort(out.begin(), out.end());
      return out;
    }
    if (q == "pair_bounds") {
      std::int64_t ok = 1;
      for (const auto& p : pairs()) ok = ok && p.count.invariants_hold;
      return {ok};
    }
    if (q == "drop_nr") {
      SubgroupLattice L = all_subgroups(table(), classes());
      auto recs = L.records();
      recs.pop_back();  // G itself
      WeakInstance W = build_weak(context(), table(), classes(), recs, false);
      return {std::int64_t(weak_2coverings(W, false).size())};
    }
    throw Error(Errc::parse_error, "unknown quantity " + q);
  }

 private:
  const AutContext& context() {
    if (!ctx_) {
      const auto& socle = e_.group.is_aut_context() ? e_.group.socle_gens : e_.group.gens;
      ctx_ = make_aut_context(e_.group.group(), socle);
    }
    return *ctx_;
  }
  const ElementTable& table() {
    if (!T_) T_.emplace(context().G);
    return *T_;
  }
  const ConjClassTable& classes() {
    if (!C_) C_ = conjugacy_classes(table());
    return *C_;
  }
  const std::vector<SubgroupRecord>& records() {
    if (!e_.maximal) throw Error(Errc::parse_error, e_.name + " has no maximal subgroup file");
    return e_.maximal->subgroups;
  }
  const WeakInstance& weak() {
    if (!W_) W_ = build_weak(context(), table(), classes(), records());
    return *W_;
  }
  const std::vector<WeakPair>& pairs() {
    if (!P_) P_ = weak_2coverings(weak());
    return *P_;
  }

  const DatasetEntry& e_;
  std::optional<AutContext> ctx_;
  std::optional<ElementTable> T_;
  std::optional<ConjClassTable> C_;
  std::optional<WeakInstance> W_;
  std::optional<std::vector<WeakPair>> P_;
};

}  // namespace

bool Report::all_pass() const {
  for (const auto& l : lines)
    if (l.status == "FAIL" || l.status == "ERROR") return false;
  return true;
}

std::string Report::to_json() const {
  json arr = json::array();
  for (const auto& l : lines)
    arr.push_back({{"entry", l.entry},
                   {"quantity", l.quantity},
                   {"expected", l.expected},
                   {"computed", l.computed},
                   {"citation", l.citation},
                   {"status", l.status}});
  return arr.dump(2);
}

std::string format_report_line(const ReportLine& l) {
  std::string s = l.status + " " + l.entry + " " + l.quantity + " expected=" + l.expected +
                  " computed=" + l.computed;
  if (l.status != "PASS" && l.status != "SKIP") s += " (" + l.citation + ")";
  return s;
}

Report reproduce_tables(const DatasetManifest& manifest, const ReproOptions& opt) {
  Report rep;
  auto emit = [&](ReportLine l) {
    if (opt.sink) opt.sink(l);
    rep.lines.push_back(std::move(l));
  };
  for (const auto& e : manifest.entries) {
    if (!opt.filter.empty() &&
        std::find(opt.filter.begin(), opt.filter.end(), e.name) == opt.filter.end())
      continue;
    Evaluator ev(e);
    for (const auto& x : e.expected) {
      ReportLine l{e.name, x.quantity, show(x.value, x.is_list), "", x.citation, ""};
      if ((e.heavy || x.heavy) && !opt.heavy) {
        l.computed = "-";
        l.status = "SKIP";
        emit(std::move(l));
        continue;
      }
      try {
        auto got = ev.get(x.quantity);
        auto want = x.value;
        std::sort(want.begin(), want.end());
        l.computed = show(got, x.is_list);
        l.status = got == want ? "PASS" : "FAIL";
      } catch (const std::exception& err) {
        l.computed = err.what();
        l.status = "ERROR";
      }
      emit(std::move(l));
    }
  }
  return rep;
}

}  // namespace ncov
