#pragma once

#include <stdexcept>
#include <string>

namespace qdesign {

enum class errc {
  not_irreducible,
  not_primitive,
  too_large,
  context_mismatch,
  divide_by_zero,
  equal_points,
  not_divisible,
  not_hyperplane,
  not_prime,
  not_primitive_root,
  bad_params,
  collision,
  seed_incomplete,
  family_not_verified,
  even_order,
  semiregularity_fails,
  not_admissible,
  infeasible_count,
  unknown_id,
  corrupt_entry,
  bad_prime,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_irreducible: return "NotIrreducible";
    case errc::not_primitive: return "NotPrimitive";
    case errc::too_large: return "TooLarge";
    case errc::context_mismatch: return "ContextMismatch";
    case errc::divide_by_zero: return "DivideByZero";
    case errc::equal_points: return "EqualPoints";
    case errc::not_divisible: return "NotDivisible";
    case errc::not_hyperplane: return "NotHyperplane";
    case errc::not_prime: return "NotPrime";
    case errc::not_primitive_root: return "NotPrimitiveRoot";
    case errc::bad_params: return "BadParams";
    case errc::collision: return "Collision";
    case errc::seed_incomplete: return "SeedIncomplete";
    case errc::family_not_verified: return "FamilyNotVerified";
    case errc::even_order: return "EvenOrder";
    case errc::semiregularity_fails: return "SemiregularityFails";
    case errc::not_admissible: return "NotAdmissible";
    case errc::infeasible_count: return "InfeasibleCount";
    case errc::unknown_id: return "UnknownId";
    case errc::corrupt_entry: return "CorruptEntry";
    case errc::bad_prime: return "BadPrime";
  }
  return "?";
}

struct error : std::runtime_error {
  errc code;
  error(errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code(c) {}
};

}  // namespace qdesign
