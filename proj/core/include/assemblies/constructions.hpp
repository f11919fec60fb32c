#ifndef ASSEMBLIES_CONSTRUCTIONS_HPP_
#define ASSEMBLIES_CONSTRUCTIONS_HPP_

#include <array>    // for array
#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>   // for string
#include <utility>  // for pair
#include <vector>   // for vector

#include "assemblies/group.hpp"  // for GroupTable
#include "assemblies/table.hpp"  // for SemigroupTable, Subset

namespace assemblies {

  // Additive cyclic group Z/n with elements "0", ..., "n-1".
  GroupTable cyclic_group(std::size_t n);

  // g with a new zero z (zx = xz = z) appended as the last element. The zero
  // is named "0" unless that name is taken, then "z", "zero", "zero'", ...
  SemigroupTable with_zero(SemigroupTable const& g);

  // xy = x (resp. xy = y). Elements "a", "b", ... (or "x0", "x1", ...
  // beyond 26 elements).
  SemigroupTable left_zero_band(std::size_t n);
  SemigroupTable right_zero_band(std::size_t n);

  // {0, ..., n-1} under min.
  SemigroupTable chain_assembly(std::size_t n);

  // M(I, G, Lambda; P): triples (i, g, l) with
  // (i, g, l)(j, h, m) = (i, g P[l][j] h, m).
  struct ReesSpec {
    GroupTable                          group;
    std::size_t                         rows;  // |I|
    std::size_t                         cols;  // |Lambda|
    std::vector<std::vector<ElementId>> sandwich;  // cols x rows
  };

  // Element (i, g, l) has index (i * |G| + g) * |Lambda| + l and is named
  // "i.g.l" with the group element's name in the middle.
  SemigroupTable rees_matrix(ReesSpec const& spec);

  // G = {1, -1}, P = [[1, -1], [1, 1]], realised on 2x2 matrices with
  // X * Y = X P Y: A = E11, B = E12, C = E21, D = E22 and their negatives.
  ReesSpec       rees_paper_spec();
  SemigroupTable rees_paper();

  // Integer 2x2 matrices, row-major.
  using Matrix2 = std::array<long long, 4>;

  Matrix2 multiply(Matrix2 const& x, Matrix2 const& y);

  // The semigroup formed by named matrices under X * Y = X S Y, or the
  // ordinary product when no sandwich S is given. Every product must equal
  // one of the given matrices.
  SemigroupTable
  matrix_semigroup(std::vector<std::pair<std::string, Matrix2>> const& elements,
                   std::optional<Matrix2> sandwich = std::nullopt);

  // {0, A, M, AM} with A = E11 and M = [[0, 1], [0, 1]] under the ordinary
  // matrix product; its idempotents {0, A, M} are not closed.
  SemigroupTable idempotent_nonclosure_example();

  struct SubgroupCaps {
    std::size_t group_order = 128;
  };

  // All subgroups, sorted by size and then members.
  std::vector<Subset> subgroups(GroupTable const& g, SubgroupCaps caps = {});
  std::vector<Subset> normal_subgroups(GroupTable const& g, SubgroupCaps caps = {});

  struct CosetElement {
    ElementId   representative;  // least member of the coset
    std::size_t subgroup;        // index into CosetAssembly::normal_subgroups
    Subset      members;
  };

  struct CosetAssembly {
    SemigroupTable            table;
    std::vector<Subset>       normal_subgroups;
    std::vector<CosetElement> cosets;  // cosets[x] describes element x
  };

  // All distinct cosets gN, N normal in g, under the setwise product.
  // Elements are grouped by normal subgroup (ascending size) and named by
  // their member sets, "{a|b|...}". The product is checked against
  // (g1 N1)(g2 N2) = (g1 g2) N1 N2.
  CosetAssembly  coset_assembly_full(GroupTable const& g, SubgroupCaps caps = {});
  SemigroupTable coset_assembly(GroupTable const& g, SubgroupCaps caps = {});

  // The normal subgroups of g under N1 N2 (a semilattice).
  SemigroupTable normal_subgroup_semilattice(GroupTable const& g,
                                             SubgroupCaps      caps = {});

  // l x g for a semilattice l. Throws PreconditionError otherwise.
  SemigroupTable semilattice_times_group(SemigroupTable const& l,
                                         GroupTable const&     g);

}  // namespace assemblies

#endif  // ASSEMBLIES_CONSTRUCTIONS_HPP_
