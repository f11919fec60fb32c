#include "assemblies/table.hpp"

#include <algorithm>  // for sort, unique, binary_search, ...
#include <bit>        // for popcount
#include <cctype>     // for isspace
#include <map>        // for map
#include <numeric>    // for iota
#include <sstream>    // for ostringstream

#include "assemblies/detail/table_access.hpp"  // for TableAccess
#include "assemblies/errors.hpp"               // for StructureError, ...

namespace assemblies {

  ////////////////////////////////////////////////////////////////////////
  // Subset
  ////////////////////////////////////////////////////////////////////////

  Subset::Subset(std::vector<ElementId> members) : _members(std::move(members)) {
    std::sort(_members.begin(), _members.end());
    _members.erase(std::unique(_members.begin(), _members.end()),
                   _members.end());
  }

  Subset Subset::all(std::size_t order) {
    std::vector<ElementId> v(order);
    std::iota(v.begin(), v.end(), ElementId{0});
    return Subset(std::move(v));
  }

  bool Subset::contains(ElementId x) const {
    return std::binary_search(_members.begin(), _members.end(), x);
  }

  bool Subset::is_subset_of(Subset const& that) const {
    return std::includes(that._members.begin(),
                         that._members.end(),
                         _members.begin(),
                         _members.end());
  }

  Subset set_intersection(Subset const& a, Subset const& b) {
    Subset out;
    std::set_intersection(a._members.begin(),
                          a._members.end(),
                          b._members.begin(),
                          b._members.end(),
                          std::back_inserter(out._members));
    return out;
  }

  Subset set_union(Subset const& a, Subset const& b) {
    Subset out;
    std::set_union(a._members.begin(),
                   a._members.end(),
                   b._members.begin(),
                   b._members.end(),
                   std::back_inserter(out._members));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // SemigroupTable
  ////////////////////////////////////////////////////////////////////////

  bool is_valid_element_name(std::string_view name) {
    if (name.empty()) {
      return false;
    }
    return std::none_of(name.begin(), name.end(), [](char c) {
      return c == '#' || std::isspace(static_cast<unsigned char>(c));
    });
  }

  SemigroupTable::SemigroupTable(std::vector<std::string> names,
                                 std::vector<ElementId>   products)
      : _names(std::move(names)), _products(std::move(products)) {
    std::size_t const n = _names.size();
    if (n == 0) {
      throw StructureError("a table must have at least one element");
    }
    if (_products.size() != n * n) {
      throw StructureError("expected " + std::to_string(n * n)
                           + " products, found "
                           + std::to_string(_products.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_valid_element_name(_names[i])) {
        throw StructureError("invalid element name \"" + _names[i] + "\"");
      }
      auto [it, inserted] = _index.emplace(_names[i], static_cast<ElementId>(i));
      if (!inserted) {
        throw StructureError("duplicate element name \"" + _names[i] + "\"");
      }
    }
    for (std::size_t k = 0; k < _products.size(); ++k) {
      if (_products[k] >= n) {
        throw StructureError("product of " + _names[k / n] + " and "
                             + _names[k % n] + " is out of range");
      }
    }
  }

  SemigroupTable SemigroupTable::make(std::vector<std::string> names,
                                      std::vector<ElementId>   products) {
    SemigroupTable t(std::move(names), std::move(products));
    auto           v = t.validate();
    if (!v) {
      auto const& [x, y, z] = *v.witness;
      throw AssociativityError("not associative: (" + t.name(x) + "*"
                                   + t.name(y) + ")*" + t.name(z) + " != "
                                   + t.name(x) + "*(" + t.name(y) + "*"
                                   + t.name(z) + ")",
                               *v.witness);
    }
    return t;
  }

  std::optional<ElementId> SemigroupTable::find(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  AssocVerdict SemigroupTable::validate() {
    auto v     = validate_associativity(*this);
    _validated = v.holds;
    return v;
  }

  void require_validated(SemigroupTable const& t, std::string_view operation) {
    if (!t.is_validated()) {
      throw PreconditionError(std::string(operation)
                              + " requires a validated (associative) table");
    }
  }

  namespace detail {
    SemigroupTable finish_construction(SemigroupTable t, char const* what) {
      if (t.order() <= revalidate_limit) {
        if (!t.validate()) {
          throw InconsistencyError(std::string(what)
                                   + " produced a non-associative table");
        }
      } else {
        TableAccess::mark_validated(t);
      }
      return t;
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Basic algebra
  ////////////////////////////////////////////////////////////////////////

  AssocVerdict validate_associativity(SemigroupTable const& t) {
    auto const n = static_cast<ElementId>(t.order());
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) {
        ElementId const xy = t(x, y);
        for (ElementId z = 0; z < n; ++z) {
          if (t(xy, z) != t(x, t(y, z))) {
            return AssocVerdict::fail({x, y, z});
          }
        }
      }
    }
    return AssocVerdict::pass();
  }

  Subset idempotents(SemigroupTable const& t) {
    require_validated(t, "idempotents");
    std::vector<ElementId> out;
    for (ElementId x = 0; x < t.order(); ++x) {
      if (t(x, x) == x) {
        out.push_back(x);
      }
    }
    return Subset(std::move(out));
  }

  bool is_commutative(SemigroupTable const& t) {
    for (ElementId x = 0; x < t.order(); ++x) {
      for (ElementId y = x + 1; y < t.order(); ++y) {
        if (t(x, y) != t(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_band(SemigroupTable const& t) {
    for (ElementId x = 0; x < t.order(); ++x) {
      if (t(x, x) != x) {
        return false;
      }
    }
    return true;
  }

  bool is_semilattice(SemigroupTable const& t) {
    return is_band(t) && is_commutative(t);
  }

  Subset setwise_product(SemigroupTable const& t, Subset const& a, Subset const& b) {
    std::vector<ElementId> out;
    out.reserve(a.size() * b.size());
    for (auto x : a) {
      for (auto y : b) {
        out.push_back(t(x, y));
      }
    }
    return Subset(std::move(out));
  }

  bool is_closed(SemigroupTable const& t, Subset const& b) {
    for (auto x : b) {
      for (auto y : b) {
        if (!b.contains(t(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  SemigroupTable restrict_to(SemigroupTable const& t, Subset const& b) {
    if (b.empty()) {
      throw PreconditionError("cannot restrict to the empty subset");
    }
    if (!is_closed(t, b)) {
      throw PreconditionError("subset " + format_subset(t, b)
                              + " is not closed under the product");
    }
    std::vector<ElementId> position(t.order(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
      position[b[i]] = static_cast<ElementId>(i);
    }
    std::vector<std::string> names;
    std::vector<ElementId>   products;
    for (auto x : b) {
      names.push_back(t.name(x));
      for (auto y : b) {
        products.push_back(position[t(x, y)]);
      }
    }
    SemigroupTable out(std::move(names), std::move(products));
    if (t.is_validated()) {
      detail::TableAccess::mark_validated(out);
    }
    return out;
  }

  SemigroupTable relabel(SemigroupTable const& t, std::span<ElementId const> perm) {
    std::size_t const n = t.order();
    if (perm.size() != n) {
      throw PreconditionError("relabelling has the wrong length");
    }
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
      if (p >= n || seen[p]) {
        throw PreconditionError("relabelling is not a permutation");
      }
      seen[p] = true;
    }
    std::vector<std::string> names(n);
    std::vector<ElementId>   products(n * n);
    for (ElementId x = 0; x < n; ++x) {
      names[perm[x]] = t.name(x);
      for (ElementId y = 0; y < n; ++y) {
        products[perm[x] * n + perm[y]] = perm[t(x, y)];
      }
    }
    SemigroupTable out(std::move(names), std::move(products));
    if (t.is_validated()) {
      detail::TableAccess::mark_validated(out);
    }
    return out;
  }

  std::string format_subset(SemigroupTable const& t, Subset const& b) {
    std::string out = "{";
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      out += t.name(b[i]);
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // Derived semigroups
  ////////////////////////////////////////////////////////////////////////

  SemigroupTable direct_product(SemigroupTable const& s,
                                SemigroupTable const& t,
                                std::size_t           cap) {
    require_validated(s, "direct_product");
    require_validated(t, "direct_product");
    std::size_t const m = s.order(), n = t.order();
    if (m * n > cap) {
      throw CapExceeded("direct product is too large", m * n, cap);
    }
    std::vector<std::string> names;
    names.reserve(m * n);
    for (ElementId i = 0; i < m; ++i) {
      for (ElementId j = 0; j < n; ++j) {
        names.push_back(s.name(i) + "," + t.name(j));
      }
    }
    std::vector<ElementId> products(m * n * m * n);
    for (ElementId i = 0; i < m; ++i) {
      for (ElementId j = 0; j < n; ++j) {
        std::size_t const row = (i * n + j) * m * n;
        for (ElementId k = 0; k < m; ++k) {
          for (ElementId l = 0; l < n; ++l) {
            products[row + k * n + l]
                = static_cast<ElementId>(s(i, k) * n + t(j, l));
          }
        }
      }
    }
    return detail::finish_construction(
        SemigroupTable(std::move(names), std::move(products)), "direct_product");
  }

  SemigroupTable power_semigroup(SemigroupTable const& t, std::size_t cap) {
    require_validated(t, "power_semigroup");
    std::size_t const n = t.order();
    if (n > cap) {
      throw CapExceeded("power semigroup base is too large", n, cap);
    }
    using Mask = std::uint32_t;
    std::vector<Mask> masks;
    for (Mask m = 1; m < (Mask{1} << n); ++m) {
      masks.push_back(m);
    }
    auto members = [n](Mask m) {
      std::vector<ElementId> v;
      for (ElementId x = 0; x < n; ++x) {
        if (m & (Mask{1} << x)) {
          v.push_back(x);
        }
      }
      return v;
    };
    std::sort(masks.begin(), masks.end(), [&members](Mask a, Mask b) {
      int const pa = std::popcount(a), pb = std::popcount(b);
      if (pa != pb) {
        return pa < pb;
      }
      return members(a) < members(b);
    });
    std::vector<ElementId> position(std::size_t{1} << n, 0);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      position[masks[i]] = static_cast<ElementId>(i);
    }
    std::vector<std::string> names;
    for (auto m : masks) {
      std::string name = "{";
      bool        first = true;
      for (auto x : members(m)) {
        name += (first ? "" : "|") + t.name(x);
        first = false;
      }
      names.push_back(name + "}");
    }
    std::size_t const      size = masks.size();
    std::vector<ElementId> products(size * size);
    for (std::size_t i = 0; i < size; ++i) {
      auto const xs = members(masks[i]);
      for (std::size_t j = 0; j < size; ++j) {
        Mask prod = 0;
        for (auto y : members(masks[j])) {
          for (auto x : xs) {
            prod |= Mask{1} << t(x, y);
          }
        }
        products[i * size + j] = position[prod];
      }
    }
    return detail::finish_construction(
        SemigroupTable(std::move(names), std::move(products)), "power_semigroup");
  }

  Subset generated_subsemigroup(SemigroupTable const& t, Subset const& seed) {
    require_validated(t, "generated_subsemigroup");
    if (seed.empty()) {
      throw PreconditionError("generated_subsemigroup needs a non-empty seed");
    }
    std::vector<bool>      in(t.order(), false);
    std::vector<ElementId> elts;
    for (auto x : seed) {
      if (x >= t.order()) {
        throw PreconditionError("seed element out of range");
      }
      in[x] = true;
      elts.push_back(x);
    }
    // Every product of a new element with any element found so far.
    for (std::size_t i = 0; i < elts.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (auto p : {t(elts[i], elts[j]), t(elts[j], elts[i])}) {
          if (!in[p]) {
            in[p] = true;
            elts.push_back(p);
          }
        }
      }
    }
    return Subset(std::move(elts));
  }

  std::pair<std::size_t, std::size_t> index_and_period(SemigroupTable const& t,
                                                       ElementId             x) {
    std::vector<std::size_t> first_seen(t.order(), 0);
    ElementId                power = x;
    for (std::size_t k = 1;; ++k) {
      if (first_seen[power] != 0) {
        return {first_seen[power], k - first_seen[power]};
      }
      first_seen[power] = k;
      power             = t(power, x);
    }
  }

  bool is_union_of_groups(SemigroupTable const& t) {
    require_validated(t, "is_union_of_groups");
    for (ElementId x = 0; x < t.order(); ++x) {
      if (index_and_period(t, x).first != 1) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Isomorphism-invariant profile of an element.
    std::vector<std::size_t> element_profile(SemigroupTable const& t, ElementId x) {
      auto const [index, period] = index_and_period(t, x);
      std::size_t right_id = 0, left_id = 0, commuting = 0, roots = 0;
      std::vector<bool> row_image(t.order(), false), col_image(t.order(), false);
      for (ElementId y = 0; y < t.order(); ++y) {
        right_id += t(x, y) == x;
        left_id += t(y, x) == x;
        commuting += t(x, y) == t(y, x);
        roots += t(y, y) == x;
        row_image[t(x, y)] = true;
        col_image[t(y, x)] = true;
      }
      return {index,
              period,
              right_id,
              left_id,
              commuting,
              roots,
              static_cast<std::size_t>(
                  std::count(row_image.begin(), row_image.end(), true)),
              static_cast<std::size_t>(
                  std::count(col_image.begin(), col_image.end(), true))};
    }

    class IsoSearch {
     public:
      IsoSearch(SemigroupTable const& s, SemigroupTable const& t)
          : _s(s), _t(t), _map(s.order(), unset), _used(t.order(), false) {
        for (ElementId x = 0; x < s.order(); ++x) {
          _ps.push_back(element_profile(s, x));
          _pt.push_back(element_profile(t, x));
        }
      }

      bool profiles_match() const {
        auto a = _ps, b = _pt;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
      }

      std::optional<std::vector<ElementId>> run() {
        if (!profiles_match()) {
          return std::nullopt;
        }
        if (extend(0)) {
          return _map;
        }
        return std::nullopt;
      }

     private:
      static constexpr ElementId unset = static_cast<ElementId>(-1);

      bool consistent(ElementId x) const {
        for (ElementId a = 0; a <= x; ++a) {
          for (ElementId b = 0; b <= x; ++b) {
            if (a != x && b != x) {
              continue;
            }
            ElementId const p = _s(a, b);
            if (_map[p] != unset && _map[p] != _t(_map[a], _map[b])) {
              return false;
            }
          }
        }
        // Earlier pairs whose product is x.
        for (ElementId a = 0; a < x; ++a) {
          for (ElementId b = 0; b < x; ++b) {
            if (_s(a, b) == x && _map[x] != _t(_map[a], _map[b])) {
              return false;
            }
          }
        }
        return true;
      }

      bool extend(ElementId x) {
        if (x == _s.order()) {
          return true;
        }
        for (ElementId y = 0; y < _t.order(); ++y) {
          if (_used[y] || _ps[x] != _pt[y]) {
            continue;
          }
          _map[x]  = y;
          _used[y] = true;
          if (consistent(x) && extend(x + 1)) {
            return true;
          }
          _used[y] = false;
          _map[x]  = unset;
        }
        return false;
      }

      SemigroupTable const&                 _s;
      SemigroupTable const&                 _t;
      std::vector<std::vector<std::size_t>> _ps, _pt;
      std::vector<ElementId>                _map;
      std::vector<bool>                     _used;
    };

  }  // namespace

  std::optional<std::vector<ElementId>> are_isomorphic(SemigroupTable const& s,
                                                       SemigroupTable const& t,
                                                       std::size_t           cap) {
    require_validated(s, "are_isomorphic");
    require_validated(t, "are_isomorphic");
    if (s.order() != t.order()) {
      return std::nullopt;
    }
    if (s.order() > cap) {
      throw CapExceeded("isomorphism search is too large", s.order(), cap);
    }
    return IsoSearch(s, t).run();
  }

}  // namespace assemblies
