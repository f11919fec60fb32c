#ifndef ASSEMBLIES_GROUP_HPP_
#define ASSEMBLIES_GROUP_HPP_

#include <optional>  // for optional
#include <vector>    // for vector

#include "assemblies/table.hpp"  // for SemigroupTable, ElementId, Subset

namespace assemblies {

  // A validated table certified to be a group.
  class GroupTable {
   public:
    // Throws ValidationError unless t is an associative group table.
    static GroupTable certify(SemigroupTable t);

    static std::optional<GroupTable> try_certify(SemigroupTable const& t);

    SemigroupTable const& base() const noexcept {
      return _base;
    }
    std::size_t order() const noexcept {
      return _base.order();
    }
    ElementId identity() const noexcept {
      return _identity;
    }
    ElementId inverse(ElementId x) const {
      return _inverse.at(x);
    }
    std::vector<ElementId> const& inverses() const noexcept {
      return _inverse;
    }
    ElementId product(ElementId x, ElementId y) const noexcept {
      return _base.product(x, y);
    }

   private:
    GroupTable(SemigroupTable base, ElementId identity, std::vector<ElementId> inv)
        : _base(std::move(base)), _identity(identity), _inverse(std::move(inv)) {}

    SemigroupTable         _base;
    ElementId              _identity;
    std::vector<ElementId> _inverse;
  };

  // If the subset b of t is a group under the product of t, returns its
  // identity element; nullopt otherwise (including when b is empty).
  std::optional<ElementId> subset_group_identity(SemigroupTable const& t,
                                                 Subset const&         b);

}  // namespace assemblies

#endif  // ASSEMBLIES_GROUP_HPP_
