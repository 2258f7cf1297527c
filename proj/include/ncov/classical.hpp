#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncov/forms.hpp"
#include "ncov/group.hpp"
#include "ncov/numtheory.hpp"

namespace ncov {

enum class Classical {
  GL, SL, GU, SU, Sp,
  Oplus, Ominus, Oodd,
  SOplus, SOminus, SOodd,
  Omegaplus, Omegaminus, Omegaodd,
};

Classical parse_classical(const std::string& s);
std::string to_string(Classical c);
bool is_unitary(Classical c);
bool is_orthogonal(Classical c);
int orthogonal_epsilon(Classical c);

// Order of the classical group (q is the field of definition; for unitary
// groups the matrices live over GF(q^2)).
bigint classical_order(Classical c, std::size_t n, std::uint64_t q);
// |G cap scalars|
std::uint64_t classical_center_order(Classical c, std::size_t n, std::uint64_t q);

struct MatGroup {
  FieldPtr field;  // GF(q^2) for unitary groups
  std::size_t n = 0;
  std::uint64_t q = 0;
  Classical family = Classical::GL;
  std::string name;
  std::vector<Matrix> gens;
  std::optional<FormSpec> form;
  std::string aschbacher;
  bigint order = 0;  // 0 when unknown
};

MatGroup build_classical(Classical family, std::size_t n, std::uint64_t q);
// The orthogonal groups can be built on any nondegenerate quadratic form.
MatGroup build_orthogonal_on(Classical family, const FormSpec& Q, std::uint64_t q);

enum class PermDomain { vectors, projective, singular_points };

struct PermExport {
  std::vector<Perm> gens;
  std::size_t degree = 0;
  std::vector<Vec> labels;
  std::uint64_t order = 0;           // order of the permutation group
  std::uint64_t kernel_order = 0;    // scalars acting trivially, 0 if unknown
  Perm image(const Matrix& g) const;  // action of an arbitrary matrix
  FieldPtr field;
  PermDomain domain = PermDomain::vectors;
};

PermExport to_permutation(const MatGroup& M, PermDomain domain,
                          std::size_t degree_bound = 2048, bool allow_quotient = true);
// Matrix acting on a domain of row vectors, recovered from a permutation of
// the vectors domain.
Matrix matrix_from_vector_perm(const PermExport& ex, const Perm& g);

// M extended by sigma: x -> x^(p^k) entrywise, on nonzero vectors (or the
// projective points).
struct FrobeniusExtension {
  PermExport base;   // M itself on the same domain
  Perm sigma;
  std::vector<Perm> gens;  // base gens followed by sigma
  std::uint64_t order = 0;
};
FrobeniusExtension frobenius_extension(const MatGroup& M, std::uint32_t k,
                                       PermDomain domain = PermDomain::vectors);

Matrix singer_cycle(const SingerSpec& spec);

// Dimensions of the irreducible constituents, largest first.
std::vector<std::size_t> action_type(const Matrix& g);
bool is_irreducible(const Matrix& g);

Matrix omega_plus_singer_sum(std::size_t m, std::size_t n, std::uint64_t q);
Matrix not_omega_witness(std::size_t l, std::uint64_t q);

enum class BertrandFamily { SU, Sp, OmegaOdd };
BertrandFamily parse_bertrand_family(const std::string& s);
struct BertrandElement {
  Matrix z;
  std::uint64_t t = 0;
  bigint expected_order;
  std::vector<std::size_t> expected_type;
};
BertrandElement bertrand_element(BertrandFamily family, std::size_t n, std::uint64_t q);

struct RegularUnipotents {
  Matrix u_plus, u_minus;
  FormSpec Q_plus, Q_minus;
  FormSpec symplectic;
  bool u_minus_from_blocks = true;  // false when q is a square, see regular_unipotents_sp
};
RegularUnipotents regular_unipotents_sp(std::size_t n, std::uint64_t q);
std::vector<std::size_t> jordan_partition(const Matrix& u);
// Number of quadratic forms of each Witt type (plus, minus) polarizing to
// the symplectic form and fixed by u. A conjugacy invariant in Sp.
std::pair<std::size_t, std::size_t> fixed_form_types(const Matrix& u, const FormSpec& symplectic);

enum class AschbacherKind { subspace, sum, field_extension, so_in_sp };
AschbacherKind parse_aschbacher_kind(const std::string& s);

struct SubgroupParams {
  Classical ambient = Classical::SL;
  std::size_t n = 0;
  std::uint64_t q = 0;
  std::size_t k = 1;          // subspace dimension, number of summands, or extension degree
  bool nondegenerate = false;  // subspace kind: nondegenerate instead of totally singular
  int epsilon = 1;            // so_in_sp kind
};
MatGroup subgroup_construct(AschbacherKind kind, const SubgroupParams& params);

// Generators for the determinant-one part of <gens>.
std::vector<Matrix> determinant_kernel(const std::vector<Matrix>& gens);

}  // namespace ncov
