#ifndef ASSEMBLIES_CENSUS_HPP_
#define ASSEMBLIES_CENSUS_HPP_

#include <cstddef>  // for size_t
#include <map>      // for map
#include <string>   // for string
#include <vector>   // for vector

#include "assemblies/assembly.hpp"  // for WitnessOptions
#include "assemblies/table.hpp"     // for SemigroupTable

namespace assemblies {

  // The lexicographically least relabelling of t (comparing the row-major
  // product vector), with elements named "0", ..., "n-1".
  SemigroupTable canonical_form(SemigroupTable const& t);

  // True when no relabelling of the products is lexicographically smaller.
  bool is_canonical(SemigroupTable const& t);

  struct EnumerationOptions {
    // Only tables with xx = x for every x.
    bool bands_only = false;
    // Worker threads; the search space is split by first table row.
    unsigned threads = 1;
  };

  // Canonical representatives of all associative tables of order n, sorted,
  // found by backtracking with incremental associativity checks.
  std::vector<SemigroupTable>
  enumerate_canonical_tables(std::size_t n, EnumerationOptions const& opts = {});

  // The same set by brute force over all n^(n*n) tables. Only for n <= 3.
  std::vector<SemigroupTable> naive_canonical_tables(std::size_t n);

  // Canonical bands of order n, computed once per order and shared.
  std::vector<SemigroupTable> const& band_catalogue(std::size_t n);

  struct CensusFlags {
    bool is_band                    = false;
    bool is_semilattice             = false;
    bool is_union_of_groups         = false;
    bool satisfies_a1_a2            = false;
    bool is_assembly                = false;
    bool is_strong                  = false;
    bool strong_by_idempotents      = false;
    bool idempotents_commute        = false;
    bool idempotents_central        = false;
    bool is_semilattice_of_groups   = false;
    bool idempotent_order_total     = false;
    bool has_band_of_groups_witness = false;
    bool has_semilattice_witness    = false;
  };

  struct CensusRecord {
    std::size_t    order;
    SemigroupTable canonical_table;
    CensusFlags    flags;
  };

  struct CensusOptions {
    // Order 5 takes minutes; it must be asked for explicitly.
    bool           allow_order_5 = false;
    unsigned       threads       = 1;
    WitnessOptions witness;
  };

  CensusFlags classify(SemigroupTable const& t, WitnessOptions const& opts = {});

  // All semigroups of order n up to isomorphism, with flags.
  std::vector<CensusRecord> enumerate_semigroups(std::size_t          n,
                                                 CensusOptions const& opts = {});

  struct CensusSummary {
    std::size_t                        order = 0;
    std::size_t                        total = 0;
    std::map<std::string, std::size_t> counts;
    // Descriptions of records violating a checked equivalence.
    std::vector<std::string> violations;
  };

  // Flag counts plus the population-level equivalences:
  //   assembly <=> band-of-groups witness;
  //   assembly and commuting idempotents <=> assembly and central
  //     idempotents <=> semilattice witness;
  //   union of groups and commuting idempotents => assembly;
  //   union of groups <=> A1 and A2;
  //   on assemblies, strong <=> fg in {f, g} for idempotents f, g.
  CensusSummary summarize_census(std::vector<CensusRecord> const& records);

  // As summarize_census, but throws InconsistencyError naming the first
  // offending table if any equivalence fails.
  CensusSummary classify_census(std::vector<CensusRecord> const& records);

}  // namespace assemblies

#endif  // ASSEMBLIES_CENSUS_HPP_
