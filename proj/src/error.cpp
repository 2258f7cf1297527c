#include "ncov/error.hpp"

namespace ncov {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::malformed_permutation: return "MalformedPermutation";
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::group_too_large: return "GroupTooLarge";
    case Errc::not_a_member: return "NotAMember";
    case Errc::index_too_large: return "IndexTooLarge";
    case Errc::lattice_explosion: return "LatticeExplosion";
    case Errc::not_prime: return "NotPrime";
    case Errc::unsupported_parameters: return "UnsupportedParameters";
    case Errc::no_singer_cycle: return "NoSingerCycle";
    case Errc::not_semisimple: return "NotSemisimple";
    case Errc::not_orthogonal: return "NotOrthogonal";
    case Errc::degenerate_form: return "DegenerateForm";
    case Errc::not_unipotent: return "NotUnipotent";
    case Errc::degree_too_large: return "DegreeTooLarge";
    case Errc::unfaithful_without_quotient: return "UnfaithfulWithoutQuotient";
    case Errc::not_normalized: return "NotNormalized";
    case Errc::improper_component: return "ImproperComponent";
    case Errc::cyclic_group: return "CyclicGroup";
    case Errc::not_normal: return "NotNormal";
    case Errc::not_a_weak_covering: return "NotAWeakCovering";
    case Errc::lang_steinberg_search_failed: return "LangSteinbergSearchFailed";
    case Errc::checksum_mismatch: return "ChecksumMismatch";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IOError";
  }
  return "Error";
}

}  // namespace ncov
