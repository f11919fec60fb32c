#ifndef ASSEMBLIES_ASSEMBLY_HPP_
#define ASSEMBLIES_ASSEMBLY_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "assemblies/table.hpp"  // for SemigroupTable, Subset, ElementId

namespace assemblies {

  enum class AxiomStatus { holds, fails, not_applicable };

  template <typename Witness>
  struct AxiomResult {
    AxiomStatus            status = AxiomStatus::not_applicable;
    std::optional<Witness> witness;

    bool holds() const noexcept {
      return status == AxiomStatus::holds;
    }
  };

  // Diagnostics for the local identity of one element.
  struct LocalIdentityReport {
    // The local identity e of x: xe = ex = x and ef = fe = e for every f
    // with xf = fx = x. Unique when it exists.
    std::optional<ElementId> identity;
    // All f with xf = fx = x.
    std::vector<ElementId> local_identities;
    // The idempotent members of local_identities.
    std::vector<ElementId> idempotent_candidates;
  };

  // The relation f <= g iff fg = g on the idempotents, with the first
  // counterexample to each order axiom.
  struct IdempotentOrderReport {
    bool reflexive     = true;
    bool antisymmetric = true;
    bool transitive    = true;
    bool total         = true;

    std::optional<ElementId>     non_reflexive;
    std::optional<ElementPair>   antisymmetry_witness;
    std::optional<ElementTriple> transitivity_witness;
    std::optional<ElementPair>   incomparable;

    bool holds() const noexcept {
      return reflexive && antisymmetric && transitive && total;
    }
  };

  struct CliffordBlock {
    ElementId identity;
    Subset    members;
  };

  // Everything the axiom checker learns about a table.
  //
  // e_map and s_map are filled only when A1 (resp. A1 and A2) hold; A2 and
  // A3 are "not applicable" when A1 fails, since both are phrased in terms of
  // the map e.
  struct AssemblyAnalysis {
    SemigroupTable subject;

    AxiomResult<ElementId> a1 = {};
    // Idempotent local identities of the A1 witness, when there is one.
    std::vector<ElementId> a1_candidates = {};
    std::vector<ElementId> e_map = {};

    AxiomResult<ElementId> a2 = {};
    std::vector<ElementId> s_map = {};

    AxiomResult<ElementPair> a3 = {};

    Subset                     idempotents = {};
    std::vector<CliffordBlock> clifford = {};

    AxiomResult<ElementPair> strong = {};
    PairVerdict              idempotents_commute = {};
    IdempotentOrderReport    idempotent_order = {};
    bool                     semilattice_of_groups = false;

    bool is_union_of_groups() const noexcept {
      return a1.holds() && a2.holds();
    }
    bool is_assembly() const noexcept {
      return a1.holds() && a2.holds() && a3.holds();
    }

    // e(x) and s(x); throw PreconditionError when the map does not exist.
    ElementId e(ElementId x) const;
    ElementId s(ElementId x) const;
  };

  LocalIdentityReport local_identity_report(SemigroupTable const& t, ElementId x);

  std::optional<ElementId> local_identity(SemigroupTable const& t, ElementId x);

  // The unique s with xs = sx = e lying in the group of e (es = se = s).
  // Throws InconsistencyError if several exist, which associativity rules out.
  std::optional<ElementId>
  local_inverse(SemigroupTable const& t, ElementId x, ElementId e);

  AssemblyAnalysis check_axioms(SemigroupTable const& t);

  // Blocks S_e = {x : e(x) = e}, each certified a group with identity e.
  std::vector<CliffordBlock> clifford_decomposition(AssemblyAnalysis const& a);

  // e(xy) in {e(x), e(y)} for all x, y. Requires an assembly.
  PairVerdict is_strong(AssemblyAnalysis const& a);

  // fg in {f, g} for all idempotents f, g; computed without the e map.
  PairVerdict idempotent_products_are_factors(AssemblyAnalysis const& a);

  PairVerdict idempotents_commute(AssemblyAnalysis const& a);

  // Every idempotent commutes with every element; witness (f, x).
  PairVerdict idempotents_central(AssemblyAnalysis const& a);

  IdempotentOrderReport idempotent_order_total(AssemblyAnalysis const& a);

  bool is_semilattice_of_groups(AssemblyAnalysis const& a);

  // A surjective homomorphism onto a band whose fibers are groups.
  struct BandOfGroupsWitness {
    SemigroupTable         band;
    std::vector<ElementId> hom;
    std::vector<Subset>    fibers;  // fibers[b] = hom^-1(b)
  };

  struct WitnessOptions {
    std::size_t order_cap      = 8;
    std::size_t band_order_cap = 6;
    // Restrict the target bands to semilattices.
    bool semilattice_only = false;
  };

  // Searches the band catalogue for a band-of-groups structure on t,
  // without consulting the e map.
  std::optional<BandOfGroupsWitness>
  band_of_groups_witness(SemigroupTable const& t, WitnessOptions const& opts = {});

}  // namespace assemblies

#endif  // ASSEMBLIES_ASSEMBLY_HPP_
