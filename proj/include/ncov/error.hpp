#pragma once

#include <stdexcept>
#include <string>

namespace ncov {

enum class Errc {
  malformed_permutation,
  degree_mismatch,
  group_too_large,
  not_a_member,
  index_too_large,
  lattice_explosion,
  not_prime,
  unsupported_parameters,
  no_singer_cycle,
  not_semisimple,
  not_orthogonal,
  degenerate_form,
  not_unipotent,
  degree_too_large,
  unfaithful_without_quotient,
  not_normalized,
  improper_component,
  cyclic_group,
  not_normal,
  not_a_weak_covering,
  lang_steinberg_search_failed,
  checksum_mismatch,
  parse_error,
  io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace ncov
