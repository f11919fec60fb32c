#ifndef ASSEMBLIES_TABLE_HPP_
#define ASSEMBLIES_TABLE_HPP_

#include <array>             // for array
#include <cstddef>           // for size_t
#include <cstdint>           // for uint32_t
#include <initializer_list>  // for initializer_list
#include <optional>          // for optional
#include <span>              // for span
#include <string>            // for string
#include <string_view>       // for string_view
#include <unordered_map>     // for unordered_map
#include <utility>           // for pair
#include <vector>            // for vector

namespace assemblies {

  // Dense index of an element in its owning table, in [0, order).
  using ElementId = std::uint32_t;

  using ElementPair   = std::pair<ElementId, ElementId>;
  using ElementTriple = std::array<ElementId, 3>;

  // Outcome of a universally quantified check, carrying the
  // lexicographically first counterexample when the check fails.
  template <typename Witness>
  struct Verdict {
    bool                   holds = true;
    std::optional<Witness> witness;

    explicit operator bool() const noexcept {
      return holds;
    }

    static Verdict pass() {
      return Verdict{};
    }
    static Verdict fail(Witness w) {
      return Verdict{false, std::move(w)};
    }
  };

  using PairVerdict    = Verdict<ElementPair>;
  using AssocVerdict   = Verdict<ElementTriple>;
  using ElementVerdict = Verdict<ElementId>;

  // A sorted, duplicate-free set of element indices of some table.
  class Subset {
   public:
    using const_iterator = std::vector<ElementId>::const_iterator;

    Subset() = default;
    explicit Subset(std::vector<ElementId> members);
    Subset(std::initializer_list<ElementId> members)
        : Subset(std::vector<ElementId>(members)) {}

    // Full carrier {0, ..., order - 1}.
    static Subset all(std::size_t order);

    std::size_t size() const noexcept {
      return _members.size();
    }
    bool empty() const noexcept {
      return _members.empty();
    }
    bool contains(ElementId x) const;

    std::vector<ElementId> const& members() const noexcept {
      return _members;
    }
    ElementId operator[](std::size_t i) const {
      return _members[i];
    }
    const_iterator begin() const noexcept {
      return _members.begin();
    }
    const_iterator end() const noexcept {
      return _members.end();
    }

    bool is_subset_of(Subset const& that) const;

    friend Subset set_intersection(Subset const& a, Subset const& b);
    friend Subset set_union(Subset const& a, Subset const& b);

    auto operator<=>(Subset const&) const = default;
    bool operator==(Subset const&) const  = default;

   private:
    std::vector<ElementId> _members;
  };

  Subset set_intersection(Subset const& a, Subset const& b);
  Subset set_union(Subset const& a, Subset const& b);

  // A finite magma given by its Cayley table over named elements.
  //
  // Construction only checks the structure (square table, entries in range,
  // names distinct and free of whitespace and '#'). Associativity is
  // established separately by validate(), which records the result; the
  // library's algebraic operations reject tables that were never validated.
  namespace detail {
    struct TableAccess;
  }

  class SemigroupTable {
    friend struct detail::TableAccess;

   public:
    // products is row-major: products[i * n + j] = element i times element j.
    SemigroupTable(std::vector<std::string> names,
                   std::vector<ElementId>   products);

    // Constructs and validates; throws ValidationError with the witness
    // triple if the table is not associative.
    static SemigroupTable make(std::vector<std::string> names,
                               std::vector<ElementId>   products);

    std::size_t order() const noexcept {
      return _names.size();
    }

    ElementId product(ElementId x, ElementId y) const noexcept {
      return _products[static_cast<std::size_t>(x) * _names.size() + y];
    }
    ElementId operator()(ElementId x, ElementId y) const noexcept {
      return product(x, y);
    }

    std::span<ElementId const> row(ElementId x) const noexcept {
      return {_products.data() + static_cast<std::size_t>(x) * order(),
              order()};
    }
    std::vector<ElementId> const& products() const noexcept {
      return _products;
    }

    std::string const& name(ElementId x) const {
      return _names.at(x);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::optional<ElementId> find(std::string_view name) const;

    // Runs the full associativity check and caches a positive result.
    AssocVerdict validate();
    bool         is_validated() const noexcept {
      return _validated;
    }

    // Tables compare equal when names and products agree.
    bool operator==(SemigroupTable const& that) const {
      return _names == that._names && _products == that._products;
    }

   private:
    std::vector<std::string>                   _names;
    std::vector<ElementId>                     _products;
    std::unordered_map<std::string, ElementId> _index;
    bool                                       _validated = false;
  };

  // Throws PreconditionError unless t.is_validated().
  void require_validated(SemigroupTable const& t, std::string_view operation);

  // True when the name may be used as an element name in a table.
  bool is_valid_element_name(std::string_view name);

  // Returns ok iff (xy)z = x(yz) for every triple, else the lexicographically
  // first failing triple.
  AssocVerdict validate_associativity(SemigroupTable const& t);

  Subset idempotents(SemigroupTable const& t);

  bool is_commutative(SemigroupTable const& t);
  bool is_band(SemigroupTable const& t);
  bool is_semilattice(SemigroupTable const& t);

  // Setwise product {xy : x in a, y in b}.
  Subset setwise_product(SemigroupTable const& t, Subset const& a, Subset const& b);

  bool is_closed(SemigroupTable const& t, Subset const& b);

  // The subtable on a product-closed subset, elements in subset order.
  // Validated if t is.
  SemigroupTable restrict_to(SemigroupTable const& t, Subset const& b);

  // Renames element i of t to new index perm[i]; names travel with elements.
  SemigroupTable relabel(SemigroupTable const& t,
                         std::span<ElementId const> perm);

  // Default caps for exponential constructions and searches.
  struct Caps {
    std::size_t product_order = 4096;
    std::size_t power_order   = 10;
    std::size_t iso_order     = 8;
  };

  // Componentwise product; element (i, j) is index i * |t| + j and is named
  // "name_i,name_j".
  SemigroupTable direct_product(SemigroupTable const& s,
                                SemigroupTable const& t,
                                std::size_t cap = Caps{}.product_order);

  // Nonempty subsets of t under the setwise product, ordered by size and
  // then lexicographically, so singleton {x} has index x. Subsets are named
  // "{a|b|...}".
  SemigroupTable power_semigroup(SemigroupTable const& t,
                                 std::size_t cap = Caps{}.power_order);

  // Smallest product-closed superset of a non-empty seed.
  Subset generated_subsemigroup(SemigroupTable const& t, Subset const& seed);

  // A product-preserving bijection s -> t (bijection[x] is the image of x),
  // or nullopt when none exists.
  std::optional<std::vector<ElementId>>
  are_isomorphic(SemigroupTable const& s,
                 SemigroupTable const& t,
                 std::size_t           cap = Caps{}.iso_order);

  // Index and period of the monogenic subsemigroup <x>: the least
  // index >= 1 and period >= 1 with x^(index + period) = x^index.
  std::pair<std::size_t, std::size_t> index_and_period(SemigroupTable const& t,
                                                       ElementId             x);

  // Every element lies in a subgroup, decided from the monogenic
  // subsemigroups alone (x^(m+1) = x for some m >= 1).
  bool is_union_of_groups(SemigroupTable const& t);

  // Element names of a subset, for messages.
  std::string format_subset(SemigroupTable const& t, Subset const& b);

}  // namespace assemblies

#endif  // ASSEMBLIES_TABLE_HPP_
