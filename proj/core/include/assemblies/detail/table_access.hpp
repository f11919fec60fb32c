#ifndef ASSEMBLIES_DETAIL_TABLE_ACCESS_HPP_
#define ASSEMBLIES_DETAIL_TABLE_ACCESS_HPP_

#include <cstddef>  // for size_t

#include "assemblies/table.hpp"  // for SemigroupTable

namespace assemblies::detail {

  // Tables up to this order are re-validated after construction; larger
  // ones rely on the construction being associative by design.
  inline constexpr std::size_t revalidate_limit = 512;

  struct TableAccess {
    static void mark_validated(SemigroupTable& t) noexcept {
      t._validated = true;
    }
  };

  // Validates constructions of order <= revalidate_limit (throwing
  // InconsistencyError on failure, since every construction is associative
  // in theory) and marks larger ones validated.
  SemigroupTable finish_construction(SemigroupTable t, char const* what);

}  // namespace assemblies::detail

#endif  // ASSEMBLIES_DETAIL_TABLE_ACCESS_HPP_
