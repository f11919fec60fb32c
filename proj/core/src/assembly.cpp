#include "assemblies/assembly.hpp"

#include <algorithm>  // for find

#include "assemblies/census.hpp"  // for band_catalogue
#include "assemblies/errors.hpp"  // for PreconditionError, ...
#include "assemblies/group.hpp"   // for subset_group_identity

namespace assemblies {

  ElementId AssemblyAnalysis::e(ElementId x) const {
    if (e_map.empty()) {
      throw PreconditionError("e(x) is undefined: A1 does not hold");
    }
    return e_map.at(x);
  }

  ElementId AssemblyAnalysis::s(ElementId x) const {
    if (s_map.empty()) {
      throw PreconditionError("s(x) is undefined: A1 and A2 do not both hold");
    }
    return s_map.at(x);
  }

  LocalIdentityReport local_identity_report(SemigroupTable const& t, ElementId x) {
    require_validated(t, "local_identity");
    LocalIdentityReport out;
    for (ElementId f = 0; f < t.order(); ++f) {
      if (t(x, f) == x && t(f, x) == x) {
        out.local_identities.push_back(f);
        if (t(f, f) == f) {
          out.idempotent_candidates.push_back(f);
        }
      }
    }
    // The local identity absorbs every other one: ef = fe = e.
    for (auto e : out.local_identities) {
      bool const least = std::all_of(
          out.local_identities.begin(),
          out.local_identities.end(),
          [&](ElementId f) { return t(e, f) == e && t(f, e) == e; });
      if (least) {
        out.identity = e;
        break;
      }
    }
    return out;
  }

  std::optional<ElementId> local_identity(SemigroupTable const& t, ElementId x) {
    return local_identity_report(t, x).identity;
  }

  std::optional<ElementId>
  local_inverse(SemigroupTable const& t, ElementId x, ElementId e) {
    require_validated(t, "local_inverse");
    std::optional<ElementId> found;
    for (ElementId s = 0; s < t.order(); ++s) {
      if (t(x, s) == e && t(s, x) == e && t(e, s) == s && t(s, e) == s) {
        if (found) {
          throw InconsistencyError("element " + t.name(x)
                                   + " has two local inverses, "
                                   + t.name(*found) + " and " + t.name(s));
        }
        found = s;
      }
    }
    return found;
  }

  namespace {

    PairVerdict first_noncommuting(SemigroupTable const& t,
                                   Subset const&         left,
                                   Subset const&         right) {
      for (auto f : left) {
        for (auto g : right) {
          if (t(f, g) != t(g, f)) {
            return PairVerdict::fail({f, g});
          }
        }
      }
      return PairVerdict::pass();
    }

    IdempotentOrderReport order_report(SemigroupTable const& t, Subset const& e) {
      IdempotentOrderReport r;
      auto leq = [&t](ElementId f, ElementId g) { return t(f, g) == g; };
      for (auto f : e) {
        if (r.reflexive && !leq(f, f)) {
          r.reflexive     = false;
          r.non_reflexive = f;
        }
        for (auto g : e) {
          if (r.antisymmetric && f != g && leq(f, g) && leq(g, f)) {
            r.antisymmetric        = false;
            r.antisymmetry_witness = ElementPair{f, g};
          }
          if (r.total && f < g && !leq(f, g) && !leq(g, f)) {
            r.total        = false;
            r.incomparable = ElementPair{f, g};
          }
          if (r.transitive && leq(f, g)) {
            for (auto h : e) {
              if (leq(g, h) && !leq(f, h)) {
                r.transitive           = false;
                r.transitivity_witness = ElementTriple{f, g, h};
                break;
              }
            }
          }
        }
      }
      return r;
    }

  }  // namespace

  AssemblyAnalysis check_axioms(SemigroupTable const& t) {
    require_validated(t, "check_axioms");
    AssemblyAnalysis a{.subject = t};
    auto const n = static_cast<ElementId>(t.order());

    a.idempotents         = idempotents(t);
    a.idempotents_commute = first_noncommuting(t, a.idempotents, a.idempotents);
    a.idempotent_order    = order_report(t, a.idempotents);

    // A1
    std::vector<ElementId> e_map(n);
    a.a1.status = AxiomStatus::holds;
    for (ElementId x = 0; x < n; ++x) {
      auto r = local_identity_report(t, x);
      if (!r.identity) {
        a.a1.status      = AxiomStatus::fails;
        a.a1.witness     = x;
        a.a1_candidates  = std::move(r.idempotent_candidates);
        break;
      }
      e_map[x] = *r.identity;
    }
    if (!a.a1.holds()) {
      return a;
    }
    a.e_map = std::move(e_map);

    // A2
    std::vector<ElementId> s_map(n);
    a.a2.status = AxiomStatus::holds;
    for (ElementId x = 0; x < n; ++x) {
      auto s = local_inverse(t, x, a.e_map[x]);
      if (!s) {
        a.a2.status  = AxiomStatus::fails;
        a.a2.witness = x;
        break;
      }
      s_map[x] = *s;
    }

    // A3
    a.a3.status = AxiomStatus::holds;
    for (ElementId x = 0; x < n && a.a3.holds(); ++x) {
      for (ElementId y = 0; y < n; ++y) {
        if (a.e_map[t(x, y)] != t(a.e_map[x], a.e_map[y])) {
          a.a3.status  = AxiomStatus::fails;
          a.a3.witness = ElementPair{x, y};
          break;
        }
      }
    }

    if (!a.a2.holds()) {
      return a;
    }
    a.s_map    = std::move(s_map);
    a.clifford = clifford_decomposition(a);

    if (a.is_assembly()) {
      a.strong.status = AxiomStatus::holds;
      for (ElementId x = 0; x < n && a.strong.holds(); ++x) {
        for (ElementId y = 0; y < n; ++y) {
          ElementId const exy = a.e_map[t(x, y)];
          if (exy != a.e_map[x] && exy != a.e_map[y]) {
            a.strong.status  = AxiomStatus::fails;
            a.strong.witness = ElementPair{x, y};
            break;
          }
        }
      }
      a.semilattice_of_groups = a.idempotents_commute.holds;
    }
    return a;
  }

  std::vector<CliffordBlock> clifford_decomposition(AssemblyAnalysis const& a) {
    if (!a.is_union_of_groups()) {
      throw PreconditionError(
          "clifford_decomposition requires A1 and A2 to hold");
    }
    SemigroupTable const&  t = a.subject;
    std::vector<CliffordBlock> blocks;
    for (auto e : a.idempotents) {
      std::vector<ElementId> members;
      for (ElementId x = 0; x < t.order(); ++x) {
        if (a.e_map[x] == e) {
          members.push_back(x);
        }
      }
      Subset block(std::move(members));
      auto   identity = subset_group_identity(t, block);
      if (!identity || *identity != e) {
        throw InconsistencyError("Clifford block of " + t.name(e)
                                 + " is not a group with identity "
                                 + t.name(e));
      }
      blocks.push_back({e, std::move(block)});
    }
    std::size_t total = 0;
    for (auto const& b : blocks) {
      total += b.members.size();
    }
    if (total != t.order()) {
      throw InconsistencyError("Clifford blocks do not partition the carrier");
    }
    return blocks;
  }

  PairVerdict is_strong(AssemblyAnalysis const& a) {
    if (!a.is_assembly()) {
      throw PreconditionError("is_strong requires an assembly");
    }
    if (a.strong.holds()) {
      return PairVerdict::pass();
    }
    return PairVerdict::fail(*a.strong.witness);
  }

  PairVerdict idempotent_products_are_factors(AssemblyAnalysis const& a) {
    SemigroupTable const& t = a.subject;
    for (auto f : a.idempotents) {
      for (auto g : a.idempotents) {
        if (t(f, g) != f && t(f, g) != g) {
          return PairVerdict::fail({f, g});
        }
      }
    }
    return PairVerdict::pass();
  }

  PairVerdict idempotents_commute(AssemblyAnalysis const& a) {
    return first_noncommuting(a.subject, a.idempotents, a.idempotents);
  }

  PairVerdict idempotents_central(AssemblyAnalysis const& a) {
    return first_noncommuting(
        a.subject, a.idempotents, Subset::all(a.subject.order()));
  }

  IdempotentOrderReport idempotent_order_total(AssemblyAnalysis const& a) {
    return order_report(a.subject, a.idempotents);
  }

  bool is_semilattice_of_groups(AssemblyAnalysis const& a) {
    return a.is_assembly() && idempotents_commute(a).holds;
  }

  ////////////////////////////////////////////////////////////////////////
  // Band-of-groups witness
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class BandMapSearch {
     public:
      BandMapSearch(SemigroupTable const& t, SemigroupTable const& band)
          : _t(t),
            _band(band),
            _map(t.order(), unset),
            _idempotent_image_used(band.order(), false) {}

      std::optional<std::vector<ElementId>> run() {
        if (extend(0)) {
          return _map;
        }
        return std::nullopt;
      }

     private:
      static constexpr ElementId unset = static_cast<ElementId>(-1);

      bool consistent(ElementId x) const {
        for (ElementId a = 0; a <= x; ++a) {
          ElementId const ax = _t(a, x), xa = _t(x, a);
          if (_map[ax] != unset && _map[ax] != _band(_map[a], _map[x])) {
            return false;
          }
          if (_map[xa] != unset && _map[xa] != _band(_map[x], _map[a])) {
            return false;
          }
        }
        for (ElementId a = 0; a < x; ++a) {
          for (ElementId b = 0; b < x; ++b) {
            if (_t(a, b) == x && _map[x] != _band(_map[a], _map[b])) {
              return false;
            }
          }
        }
        return true;
      }

      // Each fiber is a group, so it holds exactly one idempotent: the
      // idempotents of t map bijectively onto the band.
      bool extend(ElementId x) {
        if (x == _t.order()) {
          return fibers_are_groups();
        }
        bool const idempotent = _t(x, x) == x;
        for (ElementId b = 0; b < _band.order(); ++b) {
          if (idempotent && _idempotent_image_used[b]) {
            continue;
          }
          _map[x] = b;
          if (idempotent) {
            _idempotent_image_used[b] = true;
          }
          if (consistent(x) && extend(x + 1)) {
            return true;
          }
          if (idempotent) {
            _idempotent_image_used[b] = false;
          }
          _map[x] = unset;
        }
        return false;
      }

      bool fibers_are_groups() const {
        for (ElementId b = 0; b < _band.order(); ++b) {
          std::vector<ElementId> fiber;
          for (ElementId x = 0; x < _t.order(); ++x) {
            if (_map[x] == b) {
              fiber.push_back(x);
            }
          }
          if (!subset_group_identity(_t, Subset(std::move(fiber)))) {
            return false;
          }
        }
        return true;
      }

      SemigroupTable const&  _t;
      SemigroupTable const&  _band;
      std::vector<ElementId> _map;
      std::vector<bool>      _idempotent_image_used;
    };

  }  // namespace

  std::optional<BandOfGroupsWitness>
  band_of_groups_witness(SemigroupTable const& t, WitnessOptions const& opts) {
    require_validated(t, "band_of_groups_witness");
    if (t.order() > opts.order_cap) {
      throw CapExceeded(
          "band-of-groups search table is too large", t.order(), opts.order_cap);
    }
    std::size_t const k = idempotents(t).size();
    if (k == 0) {
      return std::nullopt;
    }
    if (k > opts.band_order_cap) {
      throw CapExceeded(
          "band-of-groups search needs bands that are too large", k, opts.band_order_cap);
    }
    for (auto const& band : band_catalogue(k)) {
      if (opts.semilattice_only && !is_commutative(band)) {
        continue;
      }
      auto hom = BandMapSearch(t, band).run();
      if (!hom) {
        continue;
      }
      std::vector<Subset> fibers;
      for (ElementId b = 0; b < band.order(); ++b) {
        std::vector<ElementId> fiber;
        for (ElementId x = 0; x < t.order(); ++x) {
          if ((*hom)[x] == b) {
            fiber.push_back(x);
          }
        }
        fibers.emplace_back(std::move(fiber));
      }
      return BandOfGroupsWitness{band, std::move(*hom), std::move(fibers)};
    }
    return std::nullopt;
  }

}  // namespace assemblies
