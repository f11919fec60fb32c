#ifndef ASSEMBLIES_MORPHISMS_HPP_
#define ASSEMBLIES_MORPHISMS_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <vector>    // for vector

#include "assemblies/assembly.hpp"  // for AssemblyAnalysis
#include "assemblies/group.hpp"     // for GroupTable
#include "assemblies/table.hpp"     // for SemigroupTable, Subset

namespace assemblies {

  // map[x] is the image of source element x.
  using ElementMap = std::vector<ElementId>;

  // phi(xy) = phi(x)phi(y) for all x, y; witness is the first failing pair.
  // Throws PreconditionError if the map is not total or out of range.
  PairVerdict is_homomorphism(SemigroupTable const&      s,
                              SemigroupTable const&      t,
                              std::span<ElementId const> map);

  // As above; when the map is a homomorphism between assemblies, also
  // checks phi(e(x)) = e(phi(x)) and phi(s(x)) = s(phi(x)) and throws
  // InconsistencyError if either fails.
  PairVerdict is_homomorphism(AssemblyAnalysis const&    s,
                              AssemblyAnalysis const&    t,
                              std::span<ElementId const> map);

  struct HomSearchOptions {
    // Search nodes visited before giving up.
    std::size_t node_cap = 10'000'000;
  };

  // Every homomorphism s -> t, in lexicographic order of the maps. Images
  // are propagated through products of already-mapped elements;
  // idempotents only go to idempotents.
  std::vector<ElementMap> enumerate_homomorphisms(SemigroupTable const&   s,
                                                  SemigroupTable const&   t,
                                                  HomSearchOptions const& opts = {});

  // Between assemblies the search also keeps x and e(x) in matching blocks:
  // e(phi(x)) = phi(e(x)).
  std::vector<ElementMap> enumerate_homomorphisms(AssemblyAnalysis const& s,
                                                  AssemblyAnalysis const& t,
                                                  HomSearchOptions const& opts = {});

  // phi^-1(phi(E)). Requires a homomorphism from an assembly. Throws
  // InconsistencyError unless it equals the union of the component kernels
  // {x : phi(x) = phi(e(x))}, contains E and is a subassembly.
  Subset kernel(AssemblyAnalysis const& s,
                SemigroupTable const&   t,
                std::span<ElementId const> map);

  // phi(s), certified a subassembly of t. Requires both to be assemblies.
  Subset image(AssemblyAnalysis const& s,
               AssemblyAnalysis const& t,
               std::span<ElementId const> map);

  struct InjectivityReport {
    bool literal     = false;  // x != y implies phi(x) != phi(y)
    bool kernel_is_e = false;  // kernel(phi) = E(s)
    bool agree() const noexcept {
      return literal == kernel_is_e;
    }
  };

  InjectivityReport injectivity_check(AssemblyAnalysis const& s,
                                      SemigroupTable const&   t,
                                      std::span<ElementId const> map);

  // Decided by the kernel criterion; throws InconsistencyError when that
  // disagrees with literal injectivity.
  bool is_injective_hom(AssemblyAnalysis const& s,
                        SemigroupTable const&   t,
                        std::span<ElementId const> map);

  // phi_e : S_e -> T_phi(e).
  struct HomComponent {
    ElementId  source_identity;
    ElementId  target_identity;
    Subset     domain;
    Subset     image;
    Subset     kernel;     // phi_e^-1(phi(e))
    bool       injective;  // on S_e
    bool       onto;       // image = T_phi(e)
  };

  struct ComponentsReport {
    std::vector<HomComponent> components;

    bool injective = false;  // phi itself
    bool surjective = false;
    bool all_components_injective = false;
    // Every target block is hit, and the components landing in it cover it.
    bool components_cover_target = false;

    bool injective_clause_holds() const noexcept {
      return injective == all_components_injective;
    }
    bool surjective_clause_holds() const noexcept {
      return surjective == components_cover_target;
    }
  };

  // Requires a homomorphism between assemblies. Throws InconsistencyError
  // if some component is not a group homomorphism into T_phi(e).
  ComponentsReport components(AssemblyAnalysis const& s,
                              AssemblyAnalysis const& t,
                              std::span<ElementId const> map);

  enum class ObstructionStatus {
    holds,           // E has a maximum and every homomorphism is constant
    violated,        // E has a maximum but a non-constant homomorphism exists
    no_maximum,      // E has no maximum
    not_applicable,  // a single idempotent: a is a group
  };

  struct ObstructionReport {
    ObstructionStatus        status = ObstructionStatus::not_applicable;
    // m with fm = m for every idempotent f.
    std::optional<ElementId> maximum;
    // am = m for every a.
    bool                       maximum_absorbs = false;
    std::size_t                homomorphisms   = 0;
    std::optional<ElementMap>  non_constant;
  };

  ObstructionReport max_idempotent_obstruction(AssemblyAnalysis const& a,
                                               GroupTable const&       g,
                                               HomSearchOptions const& opts = {});

  // Everything about one map between assemblies. kernel, image, components
  // and injectivity are filled only when the map is a homomorphism and both
  // sides are assemblies.
  struct HomAnalysis {
    ElementMap                      map;
    PairVerdict                     verdict;
    std::optional<Subset>           kernel;
    std::optional<Subset>           image;
    std::optional<ComponentsReport> components;
    std::optional<InjectivityReport> injectivity;
  };

  HomAnalysis analyze_hom(AssemblyAnalysis const& s,
                          AssemblyAnalysis const& t,
                          ElementMap              map);

}  // namespace assemblies

#endif  // ASSEMBLIES_MORPHISMS_HPP_
