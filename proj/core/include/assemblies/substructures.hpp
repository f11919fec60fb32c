#ifndef ASSEMBLIES_SUBSTRUCTURES_HPP_
#define ASSEMBLIES_SUBSTRUCTURES_HPP_

#include <optional>  // for optional

#include "assemblies/assembly.hpp"  // for AssemblyAnalysis
#include "assemblies/table.hpp"     // for Subset, ElementPair

namespace assemblies {

  struct SubassemblyVerdict {
    // x * s(y) in B for all x, y in B.
    bool                       holds = false;
    std::optional<ElementPair> witness;  // first (x, y) with x * s(y) outside B

    // Filled only when the criterion holds.
    bool closed_under_product = false;
    bool closed_under_e       = false;
    bool closed_under_s       = false;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // Throws PreconditionError if a is not an assembly or b is empty, and
  // InconsistencyError if the criterion holds but b is not closed under the
  // product, e and s.
  SubassemblyVerdict is_subassembly(AssemblyAnalysis const& a, Subset const& b);

  // Closure under product, e and s, checked directly.
  bool closed_under_operations(AssemblyAnalysis const& a, Subset const& b);

  // b1 and b2 must be subassemblies. A non-empty result is re-certified.
  Subset intersect_subassemblies(AssemblyAnalysis const& a,
                                 Subset const&           b1,
                                 Subset const&           b2);

  // b1 * b2, re-certified; nullopt when a is not commutative.
  std::optional<Subset> setwise_product_subassemblies(AssemblyAnalysis const& a,
                                                      Subset const&           b1,
                                                      Subset const&           b2);

  // {z : za = az for all a}. Possibly empty.
  Subset centre(SemigroupTable const& t);

  struct CentreReport {
    Subset members;
    // Set when t is an assembly and the centre is non-empty.
    std::optional<SubassemblyVerdict> certificate;
    // t is an assembly with an empty centre.
    bool empty_edge_case = false;
  };

  CentreReport centre_report(AssemblyAnalysis const& a);

}  // namespace assemblies

#endif  // ASSEMBLIES_SUBSTRUCTURES_HPP_
