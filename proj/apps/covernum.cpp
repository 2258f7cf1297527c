#include <iostream>

#include "CLI11.hpp"
#include "ncov/classical.hpp"
#include "ncov/dataset.hpp"
#include "ncov/error.hpp"
#include "ncov/numtheory.hpp"
#include "ncov/weak.hpp"

using namespace ncov;

namespace {

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw Error(Errc::parse_error, "sign must be + or -, got '" + s + "'");
}

void print_matrix(const Matrix& m) { std::cout << m.to_string(); }

std::vector<SubgroupRecord> load_or_compute_maximal(const ElementTable& T, const ConjClassTable& C,
                                                    const PermGroup& G, const std::string& subgroups,
                                                    std::size_t degree) {
  if (!subgroups.empty()) {
    auto sf = read_subgroup_file(subgroups, degree);
    validate_subgroups(G, sf.subgroups);
    return sf.subgroups;
  }
  return maximal_subgroups(all_subgroups(T, C));
}

std::size_t find_label(const std::vector<SubgroupRecord>& recs, const std::string& label) {
  for (std::size_t i = 0; i < recs.size(); ++i)
    if (recs[i].label == label) return i;
  throw Error(Errc::parse_error, "no subgroup labelled '" + label + "'");
}

void add_numtheory(CLI::App& app) {
  auto* nt = app.add_subcommand("numtheory", "Number-theoretic helpers");
  nt->require_subcommand(1);

  static std::uint64_t q = 0, t = 0, a = 0, b = 0, n = 0;
  static std::string sa, sb, family;

  auto* ppd = nt->add_subcommand("ppd", "Primitive prime divisors of q^t - 1");
  ppd->add_option("q", q)->required();
  ppd->add_option("t", t)->required();
  ppd->callback([] {
    for (const auto& r : primitive_prime_divisors(q, t)) std::cout << r << "\n";
  });

  auto* gcdq = nt->add_subcommand("gcdq", "gcd(q^a +- 1, q^b +- 1)");
  gcdq->add_option("q", q)->required();
  gcdq->add_option("a", a)->required();
  gcdq->add_option("b", b)->required();
  gcdq->add_option("sign_a", sa)->required();
  gcdq->add_option("sign_b", sb)->required();
  gcdq->callback([] { std::cout << gcd_qpow(q, a, b, parse_sign(sa), parse_sign(sb)) << "\n"; });

  auto* bert = nt->add_subcommand("bertrand", "Bertrand number of n");
  bert->add_option("n", n)->required();
  bert->callback([] { std::cout << bertrand_number(n) << "\n"; });

  auto* singer = nt->add_subcommand("singer", "Order of a Singer cycle");
  singer->add_option("family", family)->required();
  singer->add_option("n", n)->required();
  singer->add_option("q", q)->required();
  singer->callback([] { std::cout << singer_order({parse_singer_family(family), n, q}) << "\n"; });
}

void add_matgroup(CLI::App& app) {
  auto* mg = app.add_subcommand("matgroup", "Classical matrix groups");
  mg->require_subcommand(1);

  static std::string family, domain = "projective", out;
  static std::size_t n = 0;
  static std::uint64_t q = 0;

  auto* build = mg->add_subcommand("build", "Build a classical group and export it as a group file");
  build->add_option("family", family)->required();
  build->add_option("n", n)->required();
  build->add_option("q", q)->required();
  build->add_option("--export-perm", domain)->check(CLI::IsMember({"projective", "vectors"}));
  build->add_option("--out", out);
  build->callback([] {
    MatGroup M = build_classical(parse_classical(family), n, q);
    PermExport ex = to_permutation(M, domain == "vectors" ? PermDomain::vectors : PermDomain::projective);
    GroupFile g;
    g.name = M.name;
    g.degree = ex.degree;
    g.gens = ex.gens;
    g.order = ex.order;
    if (out.empty())
      std::cout << format_group_file(g);
    else
      write_group_file(out, g);
  });

  auto* singer = mg->add_subcommand("singer", "A Singer cycle as a matrix");
  singer->add_option("family", family)->required();
  singer->add_option("n", n)->required();
  singer->add_option("q", q)->required();
  singer->callback([] { print_matrix(singer_cycle({parse_singer_family(family), n, q})); });

  auto* bert = mg->add_subcommand("bertrand", "A Bertrand element");
  bert->add_option("family", family)->required();
  bert->add_option("n", n)->required();
  bert->add_option("q", q)->required();
  bert->callback([] {
    auto z = bertrand_element(parse_bertrand_family(family), n, q);
    std::cout << "t=" << z.t << "\norder=" << z.expected_order << "\n";
    print_matrix(z.z);
  });

  auto* upm = mg->add_subcommand("uplusminus", "Regular unipotents u+ and u- of Sp_n(q), q even");
  upm->add_option("n", n)->required();
  upm->add_option("q", q)->required();
  upm->callback([] {
    auto u = regular_unipotents_sp(n, q);
    std::cout << "u+\n";
    print_matrix(u.u_plus);
    std::cout << "u-\n";
    print_matrix(u.u_minus);
  });
}

void add_cover(CLI::App& app) {
  auto* cv = app.add_subcommand("cover", "Normal coverings (the socle is used when the file has one)");
  cv->require_subcommand(1);

  static std::string file, subgroups;
  static bool all = false;

  auto setup = [](CLI::App* c) {
    c->add_option("group-file", file)->required()->check(CLI::ExistingFile);
    c->add_option("--subgroups", subgroups, "maximal subgroup file; computed from the lattice if absent");
  };
  auto prepare = [](auto&& body) {
    GroupFile g = read_group_file(file);
    PermGroup G = g.is_aut_context() ? g.socle() : g.group();
    ElementTable T(G);
    ConjClassTable C = conjugacy_classes(T);
    body(g, G, T, C);
  };

  auto* gamma = cv->add_subcommand("gamma", "Normal covering number");
  setup(gamma);
  gamma->callback([prepare] {
    prepare([](const GroupFile& g, const PermGroup& G, const ElementTable& T, const ConjClassTable& C) {
      auto inst = incidence_matrix(T, C, load_or_compute_maximal(T, C, G, subgroups, g.degree));
      std::cout << "gamma=" << covering_number(inst) << "\n";
    });
  });

  auto* kappa = cv->add_subcommand("kappa", "Clique number of the invariable generating graph");
  setup(kappa);
  kappa->callback([prepare] {
    prepare([](const GroupFile& g, const PermGroup& G, const ElementTable& T, const ConjClassTable& C) {
      auto inst = incidence_matrix(T, C, load_or_compute_maximal(T, C, G, subgroups, g.degree));
      std::cout << "kappa=" << clique_number(invariable_graph(inst)) << "\n";
    });
  });

  auto* enum2 = cv->add_subcommand("enum2", "Pairs of subgroup classes and whether they cover");
  setup(enum2);
  enum2->add_flag("--all-subgroups", all, "use every proper subgroup class, not only maximal ones");
  enum2->callback([prepare] {
    prepare([](const GroupFile& g, const PermGroup& G, const ElementTable& T, const ConjClassTable& C) {
      CoverInstance inst;
      if (all) {
        inst = incidence_matrix(T, C, all_subgroups(T, C));
      } else {
        inst = incidence_matrix(T, C, load_or_compute_maximal(T, C, G, subgroups, g.degree));
      }
      std::size_t count = 0;
      const auto& S = inst.subgroups;
      for (std::size_t h = 0; h < S.size(); ++h)
        for (std::size_t k = h + 1; k < S.size(); ++k) {
          if (S[h].order >= inst.group_order || S[k].order >= inst.group_order) continue;
          bool normal = is_normal_covering(inst, {h, k});
          count += normal;
          std::cout << "pair " << S[h].label << " " << S[k].label << " normal=" << (normal ? "true" : "false")
                    << "\n";
        }
      std::cout << "coverings=" << count << "\n";
    });
  });
}

void add_weak(CLI::App& app) {
  auto* wk = app.add_subcommand("weak", "Weak normal coverings over an automorphism context");
  wk->require_subcommand(1);

  static std::string file, socle, subgroups;
  static std::vector<std::string> pair;
  static std::uint64_t q0 = 0;
  static std::uint32_t e = 0;

  auto setup = [](CLI::App* c) {
    c->add_option("aut-file", file)->required()->check(CLI::ExistingFile);
    c->add_option("--socle", socle, "expected socle name");
    c->add_option("--subgroups", subgroups, "maximal subgroups of the socle");
  };
  struct Ctx {
    GroupFile g;
    AutContext ctx;
    std::optional<ElementTable> T;
    ConjClassTable C;
    std::vector<SubgroupRecord> maximal;
  };
  auto prepare = [] {
    auto c = std::make_unique<Ctx>();
    c->g = read_group_file(file);
    if (!socle.empty() && c->g.is_aut_context() && c->g.socle_name != socle)
      throw Error(Errc::parse_error, "socle is named '" + c->g.socle_name + "', not '" + socle + "'");
    c->ctx = make_aut_context(c->g.group(), c->g.is_aut_context() ? c->g.socle_gens : c->g.gens);
    c->T.emplace(c->ctx.G);
    c->C = conjugacy_classes(*c->T);
    c->maximal = load_or_compute_maximal(*c->T, c->C, c->ctx.G, subgroups, c->g.degree);
    return c;
  };

  auto* gamma = wk->add_subcommand("gamma", "Weak normal covering number");
  setup(gamma);
  gamma->callback([prepare] {
    auto c = prepare();
    std::cout << "gamma_w=" << weak_covering_number(build_weak(c->ctx, *c->T, c->C, c->maximal)) << "\n";
  });

  auto* kappa = wk->add_subcommand("kappa", "Clique number of the Aut-class graph");
  setup(kappa);
  kappa->callback([prepare] {
    auto c = prepare();
    auto W = build_weak(c->ctx, *c->T, c->C, c->maximal);
    std::cout << "kappa_w=" << clique_number(aut_invariable_graph(W)) << "\n";
  });

  auto* count = wk->add_subcommand("count", "Normal coverings inside the Aut-class of a pair");
  setup(count);
  count->add_option("--pair", pair, "two subgroup labels")->expected(2)->required();
  count->callback([prepare] {
    auto c = prepare();
    auto W = build_weak(c->ctx, *c->T, c->C, c->maximal);
    auto pc = count_normal_in_aut_class(W, find_label(c->maximal, pair[0]), find_label(c->maximal, pair[1]));
    std::cout << "h=" << pc.h << "\nk=" << pc.k << "\nnormal=" << pc.C
              << "\ninvariants=" << (pc.invariants_hold ? "true" : "false") << "\n";
  });

  auto* sh = wk->add_subcommand("shintani", "Check the descent bijection for SL2(q0^e)");
  sh->add_option("q0", q0)->required();
  sh->add_option("e", e)->required();
  sh->callback([] {
    auto r = shintani_check(q0, e);
    std::cout << "coset_classes=" << r.coset_classes << "\nperm_coset_classes=" << r.perm_coset_classes
              << "\nh_classes=" << r.h_classes << "\n";
    for (const auto& row : r.rows)
      std::cout << "row class_size=" << row.class_size << " norm_order=" << row.norm_order
                << " h_class=" << row.h_class << " centralizer=" << row.centralizer_g << "/"
                << row.centralizer_h << (row.centralizer_conjugate ? " conjugate" : " mismatch")
                << (row.well_defined ? "" : " ill-defined") << "\n";
    std::cout << "bijective=" << (r.bijective ? "true" : "false") << "\nok=" << (r.ok() ? "true" : "false")
              << "\n";
    if (!r.ok()) throw Error(Errc::lang_steinberg_search_failed, "descent check failed");
  });
}

int repro_status = 0;

void add_repro(CLI::App& app) {
  auto* rp = app.add_subcommand("repro", "Reproduce the bundled result tables");
  static std::vector<std::string> filter;
  static bool heavy = false, as_json = false;
  static std::string data = default_data_dir();
  rp->add_option("--filter", filter, "entry name (repeatable)");
  rp->add_flag("--heavy", heavy, "also run entries marked heavy");
  rp->add_flag("--json", as_json, "print the report as JSON");
  rp->add_option("--data", data, "dataset directory or manifest");
  rp->callback([] {
    DatasetManifest m = load_dataset(data);
    for (const auto& f : filter)
      if (!m.find(f)) throw Error(Errc::parse_error, "no dataset entry named '" + f + "'");
    ReproOptions opt;
    opt.filter = filter;
    opt.heavy = heavy;
    if (!as_json) opt.sink = [](const ReportLine& l) { std::cout << format_report_line(l) << std::endl; };
    Report r = reproduce_tables(m, opt);
    if (as_json) std::cout << r.to_json() << "\n";
    repro_status = r.all_pass() ? 0 : 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covernum: normal and weak normal coverings of finite groups"};
  app.require_subcommand(1);
  add_numtheory(app);
  add_matgroup(app);
  add_cover(app);
  add_weak(app);
  add_repro(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return repro_status;
}
