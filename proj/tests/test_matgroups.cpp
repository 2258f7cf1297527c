#include <gtest/gtest.h>

#include <random>

#include "ncov/classes.hpp"
#include "ncov/classical.hpp"
#include "ncov/error.hpp"

using namespace ncov;

namespace {

Matrix mat(FieldPtr F, std::vector<Vec> rows) { return Matrix::from_rows(F, rows); }

std::vector<std::size_t> sorted_desc(std::vector<std::size_t> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

}  // namespace

TEST(Field, LexSmallestModulus) {
  auto F16 = make_field(2, 4);
  EXPECT_EQ(F16->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
  auto F2 = make_field(2, 1);
  EXPECT_EQ(F2->q(), 2u);
  auto F9 = make_field(3, 2);
  // x^2 + 1 is the smallest irreducible quadratic over F3
  EXPECT_EQ(F9->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  try {
    make_field(4, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_prime);
  }
}

TEST(Field, AxiomsAndPrimitiveElement) {
  for (auto [p, f] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 3}, {5, 2}, {3, 3}, {7, 1}, {2, 6}}) {
    auto F = make_field(p, f);
    std::uint32_t q = F->q();
    EXPECT_EQ(F->order(F->primitive()), q - 1);
    for (std::uint32_t a = 0; a < q; ++a) {
      EXPECT_EQ(F->add(a, F->neg(a)), 0u);
      if (a) EXPECT_EQ(F->mul(a, F->inv(a)), 1u);
      for (std::uint32_t b = 0; b < q && b < 20; ++b) {
        EXPECT_EQ(F->mul(a, b), F->mul(b, a));
        // Frobenius is additive
        EXPECT_EQ(F->frob(F->add(a, b)), F->add(F->frob(a), F->frob(b)));
      }
    }
  }
}

TEST(Field, ExtensionMinimalPolynomial) {
  auto F = make_field(2, 1);
  ExtField K(F, 3);
  auto a = K.primitive();
  Poly m = K.minimal_polynomial(a);
  EXPECT_EQ(m.size(), 4u);
  EXPECT_TRUE(poly_is_irreducible(*F, m));
  EXPECT_FALSE(poly_is_irreducible(*F, Poly{1, 0, 1}));  // (x+1)^2
}

TEST(Matrix, InverseDeterminantOrder) {
  auto F = make_field(3, 1);
  Matrix a = mat(F, {{1, 2, 0}, {0, 1, 1}, {2, 0, 1}});
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(a.det(), F->from_int(1 * (1 - 0) - 2 * (0 - 2)));
  Matrix j = mat(F, {{1, 1}, {0, 1}});
  EXPECT_EQ(matrix_order(j), 3);
}

TEST(Classical, OrdersViaPermutationExport) {
  struct Case {
    Classical c;
    std::size_t n;
    std::uint64_t q;
    PermDomain dom;
    std::uint64_t order;
  };
  std::vector<Case> cases{
      {Classical::Sp, 4, 2, PermDomain::vectors, 720},
      {Classical::SL, 2, 4, PermDomain::projective, 60},
      {Classical::SL, 3, 3, PermDomain::projective, 5616},
      {Classical::SU, 3, 3, PermDomain::projective, 6048},
      {Classical::SU, 4, 2, PermDomain::singular_points, 25920},
      {Classical::Sp, 4, 3, PermDomain::projective, 25920},
      {Classical::Sp, 4, 4, PermDomain::projective, 979200},
      {Classical::GL, 1, 5, PermDomain::vectors, 4},
      {Classical::Omegaplus, 4, 3, PermDomain::vectors, 288},
      {Classical::Ominus, 4, 2, PermDomain::vectors, 120},
      {Classical::SOodd, 3, 5, PermDomain::vectors, 120},
      {Classical::Omegaodd, 5, 3, PermDomain::projective, 25920},
  };
  for (const auto& c : cases) {
    MatGroup M = build_classical(c.c, c.n, c.q);
    for (const auto& g : M.gens)
      if (M.form) EXPECT_TRUE(preserves(g, *M.form)) << M.name;
    PermExport ex = to_permutation(M, c.dom);
    EXPECT_EQ(ex.order, c.order) << M.name;
  }
  EXPECT_EQ(to_permutation(build_classical(Classical::SL, 2, 4), PermDomain::projective).degree, 5u);
  EXPECT_EQ(to_permutation(build_classical(Classical::Sp, 4, 4), PermDomain::projective).degree, 85u);
}

TEST(Classical, OrderFormulas) {
  EXPECT_EQ(classical_order(Classical::GL, 3, 2), 168);
  EXPECT_EQ(classical_order(Classical::SU, 3, 5), 378000);
  EXPECT_EQ(classical_order(Classical::Sp, 6, 2), 1451520);
  EXPECT_EQ(classical_order(Classical::Ominus, 4, 4), 8160);
  EXPECT_EQ(classical_order(Classical::Omegaminus, 2, 3), 2);
  EXPECT_EQ(classical_center_order(Classical::Omegaplus, 4, 3), 2u);
  EXPECT_EQ(classical_center_order(Classical::Omegaplus, 2, 3), 1u);
}

TEST(Classical, OmegaMinusTwoThreeIsScalar) {
  MatGroup M = build_classical(Classical::Omegaminus, 2, 3);
  ASSERT_FALSE(M.gens.empty());
  for (const auto& g : M.gens) {
    EXPECT_TRUE(g.is_scalar());
    EXPECT_LE(matrix_order(g), 2);
  }
  EXPECT_EQ(to_permutation(M, PermDomain::vectors).order, 2u);
}

TEST(Classical, UnfaithfulExportReportsKernel) {
  MatGroup M = build_classical(Classical::SL, 2, 5);
  PermExport ex = to_permutation(M, PermDomain::projective);
  EXPECT_EQ(ex.order, 60u);
  EXPECT_EQ(ex.kernel_order, 2u);
  try {
    to_permutation(M, PermDomain::projective, 2048, false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unfaithful_without_quotient);
  }
  try {
    to_permutation(build_classical(Classical::SL, 5, 7), PermDomain::projective);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::degree_too_large);
  }
}

TEST(Classical, FrobeniusExtension) {
  auto ext = frobenius_extension(build_classical(Classical::SL, 2, 8), 1);
  EXPECT_EQ(ext.order, 504u * 3);
  auto same = frobenius_extension(build_classical(Classical::SL, 2, 8), 3);
  EXPECT_EQ(same.order, 504u);
  auto sp = frobenius_extension(build_classical(Classical::Sp, 4, 4), 1, PermDomain::projective);
  EXPECT_EQ(sp.order, 979200u * 2);
}

TEST(Singer, Examples) {
  Matrix g = singer_cycle({SingerFamily::GL, 3, 2});
  EXPECT_EQ(matrix_order(g), 7);
  EXPECT_TRUE(is_irreducible(g));
  EXPECT_EQ(action_type(g), (std::vector<std::size_t>{3}));

  Matrix s = singer_cycle({SingerFamily::Sp, 4, 4});
  EXPECT_EQ(matrix_order(s), 17);
  EXPECT_EQ(s.det(), 1u);
  EXPECT_TRUE(preserves(s, standard_symplectic(s.field_ptr(), 4)));

  try {
    singer_cycle({SingerFamily::SU, 3, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::no_singer_cycle);
  }
}

TEST(Singer, DeterminantGeneratesFieldUnits) {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {2, 5}, {4, 3}, {3, 7}}) {
    Matrix g = singer_cycle({SingerFamily::GL, std::uint64_t(n), std::uint64_t(q)});
    EXPECT_EQ(g.field().order(g.det()), std::uint64_t(q - 1));
  }
}

// Any element whose order equals the Singer order acts irreducibly; checked
// on coprime powers of the constructed cycles for every row with q^(dn)
// at most 4096.
TEST(Singer, TableRowsIrreducibleAndInGroup) {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (auto fam : {SingerFamily::GL, SingerFamily::SL, SingerFamily::GU, SingerFamily::SU, SingerFamily::Sp,
                   SingerFamily::Ominus, SingerFamily::Omegaminus}) {
    bool unitary = fam == SingerFamily::GU || fam == SingerFamily::SU;
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      for (std::uint64_t n = 1; n <= 12; ++n) {
        double size = std::pow(double(q), double(unitary ? 2 * n : n));
        if (size > 4096) continue;
        bigint ord;
        try {
          ord = singer_order({fam, n, q});
        } catch (const Error&) {
          continue;
        }
        if (ord <= 2 && n > 1) continue;
        Matrix g = singer_cycle({fam, n, q});
        ASSERT_EQ(matrix_order(g), ord) << to_string(fam) << n << "," << q;
        if (n > 1) EXPECT_TRUE(is_irreducible(g)) << to_string(fam) << n << "," << q;
        FieldPtr F = g.field_ptr();
        switch (fam) {
          case SingerFamily::SL:
          case SingerFamily::SU:
          case SingerFamily::Sp: EXPECT_EQ(g.det(), 1u); break;
          default: break;
        }
        if (unitary) EXPECT_TRUE(preserves(g, standard_hermitian(F, n)));
        if (fam == SingerFamily::Sp) EXPECT_TRUE(preserves(g, standard_symplectic(F, n)));
        if (fam == SingerFamily::Ominus || fam == SingerFamily::Omegaminus)
          EXPECT_TRUE(preserves(g, standard_quadratic(F, n, -1)));
        for (int t = 0; t < 3 && n > 1; ++t) {
          std::uint64_t k = 1 + rng() % 1000;
          if (boost::multiprecision::gcd(bigint(k), ord) != 1) continue;
          EXPECT_TRUE(is_irreducible(g.pow(k)));
        }
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 40);
}

TEST(ActionType, Basics) {
  auto F = make_field(2, 1);
  EXPECT_EQ(action_type(Matrix::identity(F, 4)), (std::vector<std::size_t>{1, 1, 1, 1}));
  Matrix s2 = singer_cycle({SingerFamily::Sp, 2, 3});
  Matrix s4 = singer_cycle({SingerFamily::Sp, 4, 3});
  EXPECT_EQ(action_type(block_diag(s2, s4)), (std::vector<std::size_t>{4, 2}));
  try {
    action_type(mat(F, {{1, 1}, {0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_semisimple);
  }
}

TEST(Forms, StandardizeRoundTrip) {
  // a Singer cycle's invariant form, standardized, gives the standard form
  for (auto [n, q] : std::vector<std::pair<int, int>>{{4, 3}, {6, 2}, {4, 5}}) {
    auto F = make_field_q(q);
    auto form = find_invariant_form({singer_cycle({SingerFamily::GL, std::uint64_t(n), std::uint64_t(q)}).pow(
                                        ipow(bigint(q), n / 2) - 1)},
                                    FormKind::symplectic);
    ASSERT_TRUE(form);
    auto S = standardize(*form);
    EXPECT_EQ(S.P * form->gram * S.P.transpose(), S.standard.gram);
  }
  auto F = make_field(3, 1);
  EXPECT_EQ(quadratic_type(standard_quadratic(F, 4, 1).gram), 1);
  EXPECT_EQ(quadratic_type(standard_quadratic(F, 4, -1).gram), -1);
  // x1^2 + x2^2 over F3 is anisotropic since -1 is a nonsquare
  Matrix U = mat(F, {{1, 0}, {0, 1}});
  EXPECT_EQ(quadratic_type(U), -1);
  // over F5, -1 is a square
  auto F5 = make_field(5, 1);
  EXPECT_EQ(quadratic_type(mat(F5, {{1, 0}, {0, 1}})), 1);
}

TEST(Spinor, ReflectionsAndIdentity) {
  auto F = make_field(5, 1);
  FormSpec Q = standard_quadratic(F, 4, 1);
  EXPECT_TRUE(spinor_norm_is_square(Matrix::identity(F, 4), Q));
  EXPECT_TRUE(in_omega(Matrix::identity(F, 4), Q));
  // Q(e1 + e4) = 1 (square) and Q(e1 + 2 e4) = 2 (nonsquare mod 5)
  Vec v{1, 0, 0, 1}, w{1, 0, 0, 2};
  Matrix g = reflection(Q, v) * reflection(Q, w);
  EXPECT_FALSE(spinor_norm_is_square(g, Q));
  EXPECT_FALSE(in_omega(g, Q));
  Matrix h = reflection(Q, v) * reflection(Q, Vec{0, 1, 1, 0});
  EXPECT_TRUE(spinor_norm_is_square(h, Q));
  // the factorization reproduces g
  auto ws = reflection_factorization(g, Q);
  Matrix prod = Matrix::identity(F, 4);
  for (const auto& x : ws) prod = prod * reflection(Q, x);
  EXPECT_EQ(prod, g);
}

TEST(Spinor, SingerCycleOfOminusNotInOmega) {
  for (auto [l, q] : std::vector<std::pair<int, int>>{{2, 3}, {4, 3}, {2, 5}, {6, 3}}) {
    Matrix s = singer_cycle({SingerFamily::Ominus, std::uint64_t(l), std::uint64_t(q)});
    FormSpec Q = standard_quadratic(s.field_ptr(), l, -1);
    EXPECT_FALSE(in_omega(s, Q)) << l << "," << q;
    if (l == 2 && q == 3) continue;
    Matrix t = singer_cycle({SingerFamily::Omegaminus, std::uint64_t(l), std::uint64_t(q)});
    EXPECT_TRUE(in_omega(t, Q)) << l << "," << q;
  }
}

TEST(Spinor, HomomorphismAndIndexTwo) {
  for (auto [n, q, eps] : std::vector<std::tuple<int, int, int>>{{4, 3, 1}, {4, 3, -1}, {3, 5, 0}, {6, 3, 1}}) {
    Classical so = eps == 1 ? Classical::SOplus : eps == -1 ? Classical::SOminus : Classical::SOodd;
    Classical om = eps == 1 ? Classical::Omegaplus : eps == -1 ? Classical::Omegaminus : Classical::Omegaodd;
    MatGroup G = build_classical(so, n, q);
    const FormSpec& Q = *G.form;
    std::vector<Matrix> els = G.gens;
    for (std::size_t i = 0; i < G.gens.size(); ++i)
      for (std::size_t j = 0; j < G.gens.size(); ++j) els.push_back(G.gens[i] * G.gens[j]);
    bool some_out = false;
    for (const auto& a : els) {
      some_out |= !spinor_norm_is_square(a, Q);
      for (const auto& b : els)
        EXPECT_EQ(spinor_norm_is_square(a * b, Q), spinor_norm_is_square(a, Q) == spinor_norm_is_square(b, Q));
    }
    EXPECT_TRUE(some_out);
    MatGroup O = build_classical(om, n, q);
    for (const auto& g : O.gens) EXPECT_TRUE(in_omega(g, Q));
    EXPECT_EQ(classical_order(so, n, q), 2 * classical_order(om, n, q));
  }
}

TEST(Spinor, EvenCharacteristicDickson) {
  auto F = make_field(2, 2);
  FormSpec Q = standard_quadratic(F, 4, -1);
  MatGroup O = build_classical(Classical::Ominus, 4, 4);
  for (const auto& g : O.gens) {
    auto ws = reflection_factorization(g, Q);
    EXPECT_EQ(in_omega(g, Q), ws.size() % 2 == 0);
  }
  try {
    in_omega(Matrix::identity(F, 4) + Matrix::identity(F, 4).scaled(2), Q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_orthogonal);
  }
}

TEST(OmegaPlus, SingerSums) {
  Matrix x = omega_plus_singer_sum(2, 8, 3);
  FormSpec Q = standard_quadratic(x.field_ptr(), 8, 1);
  EXPECT_EQ(matrix_order(x), 28);
  EXPECT_TRUE(in_omega(x, Q));
  EXPECT_EQ(action_type(x), (std::vector<std::size_t>{6, 2}));

  Matrix y = omega_plus_singer_sum(4, 8, 2);
  EXPECT_EQ(matrix_order(y), 5);
  EXPECT_TRUE(in_omega(y, standard_quadratic(y.field_ptr(), 8, 1)));

  Matrix z = omega_plus_singer_sum(2, 4, 3);
  EXPECT_TRUE(in_omega(z, standard_quadratic(z.field_ptr(), 4, 1)));
}

TEST(OmegaPlus, NotOmegaWitness) {
  for (auto [l, q, ord] : std::vector<std::tuple<int, int, int>>{{1, 3, 2}, {2, 3, 8}, {2, 5, 24}, {3, 3, 26}}) {
    Matrix x = not_omega_witness(l, q);
    FormSpec Q = standard_quadratic(x.field_ptr(), 2 * l, 1);
    EXPECT_TRUE(preserves(x, Q));
    EXPECT_EQ(x.det(), 1u);
    EXPECT_EQ(matrix_order(x), ord);
    EXPECT_FALSE(in_omega(x, Q));
  }
}

TEST(Bertrand, TableExamples) {
  auto sp = bertrand_element(BertrandFamily::Sp, 10, 2);
  EXPECT_EQ(sp.t, 3u);
  EXPECT_EQ(matrix_order(sp.z), 45);
  EXPECT_EQ(action_type(sp.z), (std::vector<std::size_t>{6, 4}));

  auto su = bertrand_element(BertrandFamily::SU, 7, 2);
  EXPECT_EQ(su.t, 5u);
  // (2^5 + 1)(2^2 - 1) / gcd(33, 3)
  EXPECT_EQ(matrix_order(su.z), 33);
  EXPECT_EQ(su.z.det(), 1u);

  auto om = bertrand_element(BertrandFamily::OmegaOdd, 11, 3);
  EXPECT_EQ(om.t, 3u);
  EXPECT_EQ(action_type(om.z), (std::vector<std::size_t>{6, 4, 1}));
  EXPECT_EQ(matrix_order(om.z), 140);
  EXPECT_TRUE(in_omega(om.z, standard_quadratic(om.z.field_ptr(), 11, 0)));
}

TEST(Bertrand, AllConstructibleSmallCases) {
  int count = 0;
  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (std::size_t n = 5; n <= 14; ++n) {
      std::vector<BertrandFamily> fams;
      if (n != 6) fams.push_back(BertrandFamily::SU);
      if (n % 2 == 0 && n >= 10) fams.push_back(BertrandFamily::Sp);
      if (n % 2 == 1 && q % 2 == 1 && n >= 11) fams.push_back(BertrandFamily::OmegaOdd);
      for (auto fam : fams) {
        auto b = bertrand_element(fam, n, q);
        EXPECT_EQ(matrix_order(b.z), b.expected_order) << int(fam) << " " << n << " " << q;
        EXPECT_EQ(action_type(b.z), b.expected_type) << int(fam) << " " << n << " " << q;
        auto F = b.z.field_ptr();
        if (fam == BertrandFamily::SU) {
          EXPECT_EQ(b.z.det(), 1u);
          EXPECT_TRUE(preserves(b.z, standard_hermitian(F, n)));
        } else if (fam == BertrandFamily::Sp) {
          EXPECT_TRUE(preserves(b.z, standard_symplectic(F, n)));
        } else {
          EXPECT_TRUE(in_omega(b.z, standard_quadratic(F, n, 0)));
        }
        ++count;
      }
    }
  }
  EXPECT_GT(count, 30);
}

TEST(RegularUnipotent, MatricesForEight) {
  auto r = regular_unipotents_sp(8, 2);
  auto F = r.u_plus.field_ptr();
  Matrix up = mat(F, {{1, 1, 1, 1, 1, 0, 0, 0},
                      {0, 1, 1, 1, 1, 0, 0, 0},
                      {0, 0, 1, 1, 1, 0, 0, 0},
                      {0, 0, 0, 1, 1, 0, 0, 0},
                      {0, 0, 0, 0, 1, 1, 0, 0},
                      {0, 0, 0, 0, 0, 1, 1, 0},
                      {0, 0, 0, 0, 0, 0, 1, 1},
                      {0, 0, 0, 0, 0, 0, 0, 1}});
  Matrix um = mat(F, {{1, 1, 1, 1, 1, 1, 0, 0},
                      {0, 1, 1, 1, 1, 1, 0, 0},
                      {0, 0, 1, 1, 1, 1, 0, 0},
                      {0, 0, 0, 1, 1, 0, 0, 0},
                      {0, 0, 0, 0, 1, 1, 0, 0},
                      {0, 0, 0, 0, 0, 1, 1, 0},
                      {0, 0, 0, 0, 0, 0, 1, 1},
                      {0, 0, 0, 0, 0, 0, 0, 1}});
  EXPECT_EQ(r.u_plus, up);
  EXPECT_EQ(r.u_minus, um);
  EXPECT_EQ(jordan_partition(r.u_plus), (std::vector<std::size_t>{8}));
}

TEST(RegularUnipotent, FormInvariants) {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{6, 2}, {8, 2}, {6, 4}}) {
    auto r = regular_unipotents_sp(n, q);
    // the block form of u- only works when T^2 + T + 1 is irreducible
    EXPECT_EQ(r.u_minus_from_blocks, q == 2);
    EXPECT_TRUE(preserves(r.u_plus, r.symplectic));
    EXPECT_TRUE(preserves(r.u_minus, r.symplectic));
    EXPECT_EQ(r.Q_plus.bilinear(), r.symplectic.gram);
    EXPECT_EQ(r.Q_minus.bilinear(), r.symplectic.gram);
    EXPECT_EQ(quadratic_type(r.Q_plus.gram), 1);
    EXPECT_EQ(quadratic_type(r.Q_minus.gram), -1);
    EXPECT_TRUE(preserves(r.u_plus, r.Q_plus)) << n << "," << q;
    EXPECT_TRUE(preserves(r.u_minus, r.Q_minus)) << n << "," << q;
    EXPECT_EQ(jordan_partition(r.u_plus), (std::vector<std::size_t>{std::size_t(n)}));
    EXPECT_EQ(jordan_partition(r.u_minus), (std::vector<std::size_t>{std::size_t(n)}));
    EXPECT_FALSE(in_omega(r.u_plus, r.Q_plus));
    EXPECT_FALSE(in_omega(r.u_minus, r.Q_minus));
    // the types of the invariant quadratic forms separate the two classes
    auto tp = r.u_plus.field().p() == 2 ? fixed_form_types(r.u_plus, r.symplectic) : std::make_pair(0ul, 0ul);
    auto tm = fixed_form_types(r.u_minus, r.symplectic);
    EXPECT_GT(tp.first, 0u);
    EXPECT_GT(tm.second, 0u);
    EXPECT_NE(tp, tm) << n << "," << q;
  }
}

TEST(RegularUnipotent, NotConjugateInSp62) {
  auto r = regular_unipotents_sp(6, 2);
  MatGroup G = build_classical(Classical::Sp, 6, 2);
  PermExport ex = to_permutation(G, PermDomain::vectors);
  ASSERT_EQ(ex.order, 1451520u);
  PermGroup P(ex.gens, ex.degree);
  Perm a = ex.image(r.u_plus), b = ex.image(r.u_minus);
  EXPECT_TRUE(P.contains(a));
  EXPECT_TRUE(P.contains(b));
  EXPECT_FALSE(are_conjugate_by_orbit(P, a, b).has_value());
}

TEST(Jordan, Basics) {
  auto F = make_field(3, 1);
  EXPECT_EQ(jordan_partition(Matrix::identity(F, 3)), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(jordan_partition(mat(F, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}})), (std::vector<std::size_t>{3}));
  EXPECT_EQ(jordan_partition(mat(F, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})), (std::vector<std::size_t>{2, 1}));
  try {
    jordan_partition(Matrix::scalar(F, 2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_unipotent);
  }
}

TEST(Aschbacher, SubgroupExamples) {
  MatGroup so = subgroup_construct(AschbacherKind::so_in_sp, {Classical::Sp, 4, 4, 1, false, -1});
  EXPECT_EQ(to_permutation(so, PermDomain::projective).order, 2u * 17 * 16 * 15);
  EXPECT_EQ(so.aschbacher, "C8");

  MatGroup par = subgroup_construct(AschbacherKind::subspace, {Classical::SL, 3, 3, 1});
  EXPECT_EQ(to_permutation(par, PermDomain::vectors).order, 432u);
  EXPECT_EQ(par.aschbacher, "C1");

  for (std::uint64_t q : {2, 3}) {
    MatGroup c3 = subgroup_construct(AschbacherKind::field_extension, {Classical::SL, 4, q, 2});
    for (const auto& g : c3.gens) EXPECT_EQ(g.det(), 1u);
    std::uint64_t expect = static_cast<std::uint64_t>(classical_order(Classical::SL, 2, q * q)) * (q + 1) * 2;
    PermExport ex = to_permutation(c3, q == 2 ? PermDomain::vectors : PermDomain::projective);
    EXPECT_EQ(ex.order * (q == 2 ? 1 : 2), expect) << q;
  }

  MatGroup c2 = subgroup_construct(AschbacherKind::sum, {Classical::SL, 4, 3, 2});
  // (GL2(3) x GL2(3)).2 cap SL4(3)
  EXPECT_EQ(to_permutation(c2, PermDomain::projective).order * 2, 48u * 48 * 2 / 2);

  MatGroup p2 = subgroup_construct(AschbacherKind::subspace, {Classical::Sp, 4, 3, 2});
  // the stabilizer of a totally isotropic line, 3^3:GL2(3)
  EXPECT_EQ(to_permutation(p2, PermDomain::projective).order * 2, 27u * 48);
}
