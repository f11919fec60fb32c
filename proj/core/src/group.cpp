#include "assemblies/group.hpp"

#include "assemblies/errors.hpp"  // for ValidationError

namespace assemblies {

  std::optional<ElementId> subset_group_identity(SemigroupTable const& t,
                                                 Subset const&         b) {
    if (b.empty() || !is_closed(t, b)) {
      return std::nullopt;
    }
    std::optional<ElementId> identity;
    for (auto e : b) {
      bool neutral = true;
      for (auto x : b) {
        if (t(e, x) != x || t(x, e) != x) {
          neutral = false;
          break;
        }
      }
      if (neutral) {
        identity = e;
        break;
      }
    }
    if (!identity) {
      return std::nullopt;
    }
    for (auto x : b) {
      bool found = false;
      for (auto y : b) {
        if (t(x, y) == *identity && t(y, x) == *identity) {
          found = true;
          break;
        }
      }
      if (!found) {
        return std::nullopt;
      }
    }
    return identity;
  }

  std::optional<GroupTable> GroupTable::try_certify(SemigroupTable const& t) {
    SemigroupTable base = t;
    if (!base.is_validated() && !base.validate()) {
      return std::nullopt;
    }
    auto identity = subset_group_identity(base, Subset::all(base.order()));
    if (!identity) {
      return std::nullopt;
    }
    std::vector<ElementId> inverse(base.order());
    for (ElementId x = 0; x < base.order(); ++x) {
      for (ElementId y = 0; y < base.order(); ++y) {
        if (base(x, y) == *identity) {
          inverse[x] = y;
          break;
        }
      }
    }
    return GroupTable(std::move(base), *identity, std::move(inverse));
  }

  GroupTable GroupTable::certify(SemigroupTable t) {
    if (!t.is_validated() && !t.validate()) {
      throw ValidationError("not a group: the table is not associative");
    }
    auto g = try_certify(t);
    if (!g) {
      throw ValidationError("not a group: no identity or missing inverses");
    }
    return std::move(*g);
  }

}  // namespace assemblies
