#include "assemblies/substructures.hpp"

#include <algorithm>  // for all_of

#include "assemblies/errors.hpp"  // for PreconditionError, InconsistencyError

namespace assemblies {

  namespace {

    void require_assembly(AssemblyAnalysis const& a, char const* what) {
      if (!a.is_assembly()) {
        throw PreconditionError(std::string(what) + " requires an assembly");
      }
    }

    void require_subassembly(AssemblyAnalysis const& a, Subset const& b) {
      if (!is_subassembly(a, b)) {
        throw PreconditionError(format_subset(a.subject, b) + " is not a subassembly");
      }
    }

    SubassemblyVerdict certify(AssemblyAnalysis const& a, Subset const& b, char const* what) {
      auto v = is_subassembly(a, b);
      if (!v) {
        throw InconsistencyError(std::string(what) + " " + format_subset(a.subject, b)
                                 + " is not a subassembly");
      }
      return v;
    }

  }  // namespace

  bool closed_under_operations(AssemblyAnalysis const& a, Subset const& b) {
    require_assembly(a, "closed_under_operations");
    return is_closed(a.subject, b)
           && std::all_of(b.begin(), b.end(), [&](ElementId x) {
                return b.contains(a.e_map[x]) && b.contains(a.s_map[x]);
              });
  }

  SubassemblyVerdict is_subassembly(AssemblyAnalysis const& a, Subset const& b) {
    require_assembly(a, "is_subassembly");
    if (b.empty()) {
      throw PreconditionError("is_subassembly needs a non-empty subset");
    }
    SemigroupTable const& t = a.subject;
    SubassemblyVerdict    v;
    for (auto x : b) {
      for (auto y : b) {
        if (!b.contains(t(x, a.s_map[y]))) {
          v.witness = ElementPair{x, y};
          return v;
        }
      }
    }
    v.holds                = true;
    v.closed_under_product = is_closed(t, b);
    v.closed_under_e = std::all_of(b.begin(), b.end(), [&](ElementId x) {
      return b.contains(a.e_map[x]);
    });
    v.closed_under_s = std::all_of(b.begin(), b.end(), [&](ElementId x) {
      return b.contains(a.s_map[x]);
    });
    if (!(v.closed_under_product && v.closed_under_e && v.closed_under_s)) {
      throw InconsistencyError(format_subset(t, b)
                               + " passes x*s(y) in B but is not closed");
    }
    return v;
  }

  Subset intersect_subassemblies(AssemblyAnalysis const& a,
                                 Subset const&           b1,
                                 Subset const&           b2) {
    require_subassembly(a, b1);
    require_subassembly(a, b2);
    Subset out = set_intersection(b1, b2);
    if (!out.empty()) {
      certify(a, out, "intersection");
    }
    return out;
  }

  std::optional<Subset> setwise_product_subassemblies(AssemblyAnalysis const& a,
                                                      Subset const&           b1,
                                                      Subset const&           b2) {
    require_subassembly(a, b1);
    require_subassembly(a, b2);
    if (!is_commutative(a.subject)) {
      return std::nullopt;
    }
    Subset out = setwise_product(a.subject, b1, b2);
    certify(a, out, "setwise product");
    return out;
  }

  Subset centre(SemigroupTable const& t) {
    require_validated(t, "centre");
    std::vector<ElementId> z;
    for (ElementId x = 0; x < t.order(); ++x) {
      bool central = true;
      for (ElementId y = 0; y < t.order() && central; ++y) {
        central = t(x, y) == t(y, x);
      }
      if (central) {
        z.push_back(x);
      }
    }
    return Subset(std::move(z));
  }

  CentreReport centre_report(AssemblyAnalysis const& a) {
    CentreReport r{centre(a.subject), std::nullopt, false};
    if (a.is_assembly()) {
      if (r.members.empty()) {
        r.empty_edge_case = true;
      } else {
        r.certificate = certify(a, r.members, "centre");
      }
    }
    return r;
  }

}  // namespace assemblies
