#include "assemblies/constructions.hpp"

#include <algorithm>  // for sort
#include <map>        // for map
#include <set>        // for set

#include "assemblies/detail/table_access.hpp"  // for finish_construction
#include "assemblies/errors.hpp"               // for PreconditionError, ...

namespace assemblies {

  namespace {

    void require_positive(std::size_t n, char const* what) {
      if (n == 0) {
        throw PreconditionError(std::string(what) + " needs at least one element");
      }
    }

    std::vector<std::string> letter_names(std::size_t n) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i))
                                : "x" + std::to_string(i));
      }
      return names;
    }

    std::string subset_name(SemigroupTable const& t, Subset const& b) {
      std::string name = "{";
      for (std::size_t i = 0; i < b.size(); ++i) {
        name += (i == 0 ? "" : "|") + t.name(b[i]);
      }
      return name + "}";
    }

    bool by_size_then_members(Subset const& a, Subset const& b) {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      return a < b;
    }

    void check_group_cap(GroupTable const& g, SubgroupCaps caps) {
      if (g.order() > caps.group_order) {
        throw CapExceeded("group is too large for subgroup enumeration",
                          g.order(),
                          caps.group_order);
      }
    }

  }  // namespace

  GroupTable cyclic_group(std::size_t n) {
    require_positive(n, "cyclic_group");
    std::vector<std::string> names;
    std::vector<ElementId>   products(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(std::to_string(i));
      for (std::size_t j = 0; j < n; ++j) {
        products[i * n + j] = static_cast<ElementId>((i + j) % n);
      }
    }
    return GroupTable::certify(
        detail::finish_construction({std::move(names), std::move(products)}, "cyclic_group"));
  }

  SemigroupTable with_zero(SemigroupTable const& g) {
    require_validated(g, "with_zero");
    std::size_t const n = g.order();
    std::string       zero;
    for (std::string candidate : {"0", "z", "zero"}) {
      if (!g.find(candidate)) {
        zero = candidate;
        break;
      }
    }
    while (zero.empty() || g.find(zero)) {
      zero = (zero.empty() ? std::string("zero") : zero) + "'";
    }
    std::vector<std::string> names = g.names();
    names.push_back(zero);
    auto const             z = static_cast<ElementId>(n);
    std::vector<ElementId> products((n + 1) * (n + 1), z);
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) {
        products[x * (n + 1) + y] = g(x, y);
      }
    }
    return detail::finish_construction({std::move(names), std::move(products)},
                                       "with_zero");
  }

  SemigroupTable left_zero_band(std::size_t n) {
    require_positive(n, "left_zero_band");
    std::vector<ElementId> products(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        products[x * n + y] = static_cast<ElementId>(x);
      }
    }
    return detail::finish_construction({letter_names(n), std::move(products)},
                                       "left_zero_band");
  }

  SemigroupTable right_zero_band(std::size_t n) {
    require_positive(n, "right_zero_band");
    std::vector<ElementId> products(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        products[x * n + y] = static_cast<ElementId>(y);
      }
    }
    return detail::finish_construction({letter_names(n), std::move(products)},
                                       "right_zero_band");
  }

  SemigroupTable chain_assembly(std::size_t n) {
    require_positive(n, "chain_assembly");
    std::vector<std::string> names;
    std::vector<ElementId>   products(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      names.push_back(std::to_string(x));
      for (std::size_t y = 0; y < n; ++y) {
        products[x * n + y] = static_cast<ElementId>(std::min(x, y));
      }
    }
    return detail::finish_construction({std::move(names), std::move(products)},
                                       "chain_assembly");
  }

  ////////////////////////////////////////////////////////////////////////
  // Rees matrix semigroups
  ////////////////////////////////////////////////////////////////////////

  SemigroupTable rees_matrix(ReesSpec const& spec) {
    std::size_t const I = spec.rows, L = spec.cols, G = spec.group.order();
    if (I == 0 || L == 0) {
      throw PreconditionError("a Rees matrix semigroup needs I and Lambda non-empty");
    }
    if (spec.sandwich.size() != L) {
      throw PreconditionError("sandwich matrix must have |Lambda| rows");
    }
    for (auto const& row : spec.sandwich) {
      if (row.size() != I) {
        throw PreconditionError("sandwich matrix must have |I| columns");
      }
      for (auto p : row) {
        if (p >= G) {
          throw PreconditionError("sandwich entry is not a group element");
        }
      }
    }
    auto index = [G, L](std::size_t i, std::size_t g, std::size_t l) {
      return static_cast<ElementId>((i * G + g) * L + l);
    };
    std::size_t const        n = I * G * L;
    std::vector<std::string> names(n);
    std::vector<ElementId>   products(n * n);
    auto const&              grp = spec.group;
    for (std::size_t i = 0; i < I; ++i) {
      for (ElementId g = 0; g < G; ++g) {
        for (std::size_t l = 0; l < L; ++l) {
          ElementId const x = index(i, g, l);
          names[x] = std::to_string(i) + "." + grp.base().name(g) + "." + std::to_string(l);
          for (std::size_t j = 0; j < I; ++j) {
            for (ElementId h = 0; h < G; ++h) {
              for (std::size_t m = 0; m < L; ++m) {
                ElementId const mid = grp.product(grp.product(g, spec.sandwich[l][j]), h);
                products[x * n + index(j, h, m)] = index(i, mid, m);
              }
            }
          }
        }
      }
    }
    return detail::finish_construction({std::move(names), std::move(products)},
                                       "rees_matrix");
  }

  ReesSpec rees_paper_spec() {
    // Multiplicative {1, -1}.
    auto group = GroupTable::certify(SemigroupTable({"1", "-1"}, {0, 1, 1, 0}));
    return ReesSpec{std::move(group), 2, 2, {{0, 1}, {0, 0}}};
  }

  SemigroupTable rees_paper() {
    SemigroupTable const triples = rees_matrix(rees_paper_spec());
    // Triple (i, g, l) is g times the matrix unit E_{il}; (i, l) picks the
    // letter and g the sign. The order puts B first and C before -C.
    std::vector<std::string> const order
        = {"B", "C", "A", "D", "-B", "-C", "-A", "-D"};
    char const letters[2][2] = {{'A', 'B'}, {'C', 'D'}};

    std::vector<std::string> names(triples.order());
    std::vector<ElementId>   perm(triples.order());
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t g = 0; g < 2; ++g) {
        for (std::size_t l = 0; l < 2; ++l) {
          auto const        x    = static_cast<ElementId>((i * 2 + g) * 2 + l);
          std::string const name = (g == 1 ? "-" : "") + std::string(1, letters[i][l]);
          perm[x] = static_cast<ElementId>(
              std::find(order.begin(), order.end(), name) - order.begin());
          names[perm[x]] = name;
        }
      }
    }
    SemigroupTable relabelled = relabel(triples, perm);
    return detail::finish_construction({names, relabelled.products()}, "rees_paper");
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrix semigroups
  ////////////////////////////////////////////////////////////////////////

  Matrix2 multiply(Matrix2 const& x, Matrix2 const& y) {
    return {x[0] * y[0] + x[1] * y[2],
            x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
  }

  SemigroupTable
  matrix_semigroup(std::vector<std::pair<std::string, Matrix2>> const& elements,
                   std::optional<Matrix2>                              sandwich) {
    std::size_t const        n = elements.size();
    std::map<Matrix2, ElementId> index;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      if (!index.emplace(elements[i].second, static_cast<ElementId>(i)).second) {
        throw PreconditionError("matrix " + elements[i].first + " is listed twice");
      }
      names.push_back(elements[i].first);
    }
    std::vector<ElementId> products(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Matrix2 left = elements[i].second;
        if (sandwich) {
          left = multiply(left, *sandwich);
        }
        auto it = index.find(multiply(left, elements[j].second));
        if (it == index.end()) {
          throw PreconditionError("product of " + names[i] + " and " + names[j]
                                  + " is not among the given matrices");
        }
        products[i * n + j] = it->second;
      }
    }
    return SemigroupTable::make(std::move(names), std::move(products));
  }

  SemigroupTable idempotent_nonclosure_example() {
    Matrix2 const zero{0, 0, 0, 0}, a{1, 0, 0, 0}, m{0, 1, 0, 1};
    return matrix_semigroup(
        {{"0", zero}, {"A", a}, {"M", m}, {"AM", multiply(a, m)}});
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups and the coset assembly
  ////////////////////////////////////////////////////////////////////////

  std::vector<Subset> subgroups(GroupTable const& g, SubgroupCaps caps) {
    check_group_cap(g, caps);
    SemigroupTable const& t = g.base();
    std::set<Subset>      found;
    std::vector<Subset>   queue;
    auto                  add = [&](Subset s) {
      if (found.insert(s).second) {
        queue.push_back(std::move(s));
      }
    };
    add(Subset{g.identity()});
    for (ElementId x = 0; x < g.order(); ++x) {
      add(generated_subsemigroup(t, Subset{x}));
    }
    // Adjoin one generator at a time to every subgroup found so far.
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Subset const h = queue[i];
      for (ElementId x = 0; x < g.order(); ++x) {
        if (!h.contains(x)) {
          std::vector<ElementId> seed = h.members();
          seed.push_back(x);
          add(generated_subsemigroup(t, Subset(std::move(seed))));
        }
      }
    }
    std::vector<Subset> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), by_size_then_members);
    return out;
  }

  std::vector<Subset> normal_subgroups(GroupTable const& g, SubgroupCaps caps) {
    std::vector<Subset> out;
    for (auto& h : subgroups(g, caps)) {
      bool normal = true;
      for (ElementId x = 0; x < g.order() && normal; ++x) {
        for (auto y : h) {
          if (!h.contains(g.product(g.product(x, y), g.inverse(x)))) {
            normal = false;
            break;
          }
        }
      }
      if (normal) {
        out.push_back(std::move(h));
      }
    }
    return out;
  }

  CosetAssembly coset_assembly_full(GroupTable const& g, SubgroupCaps caps) {
    SemigroupTable const& t       = g.base();
    auto                  normals = normal_subgroups(g, caps);

    std::vector<CosetElement> cosets;
    std::map<Subset, ElementId> index;
    for (std::size_t k = 0; k < normals.size(); ++k) {
      for (ElementId x = 0; x < g.order(); ++x) {
        Subset coset = setwise_product(t, Subset{x}, normals[k]);
        if (index.emplace(coset, static_cast<ElementId>(cosets.size())).second) {
          cosets.push_back({x, k, std::move(coset)});
        }
      }
    }

    std::size_t const        n = cosets.size();
    std::vector<std::string> names;
    for (auto const& c : cosets) {
      names.push_back(subset_name(t, c.members));
    }
    std::vector<ElementId> products(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto const& ci   = cosets[i];
        auto const& cj   = cosets[j];
        Subset      prod = setwise_product(t, ci.members, cj.members);
        // (g1 N1)(g2 N2) = (g1 g2) N1 N2
        Subset const formula = setwise_product(
            t,
            Subset{g.product(ci.representative, cj.representative)},
            setwise_product(t, normals[ci.subgroup], normals[cj.subgroup]));
        if (prod != formula) {
          throw InconsistencyError("coset product of " + names[i] + " and "
                                   + names[j] + " disagrees with (g1g2)N1N2");
        }
        auto it = index.find(prod);
        if (it == index.end()) {
          throw InconsistencyError("coset product of " + names[i] + " and "
                                   + names[j] + " is not a coset");
        }
        products[i * n + j] = it->second;
      }
    }
    return {detail::finish_construction({std::move(names), std::move(products)},
                                        "coset_assembly"),
            std::move(normals),
            std::move(cosets)};
  }

  SemigroupTable coset_assembly(GroupTable const& g, SubgroupCaps caps) {
    return coset_assembly_full(g, caps).table;
  }

  SemigroupTable normal_subgroup_semilattice(GroupTable const& g, SubgroupCaps caps) {
    SemigroupTable const& t       = g.base();
    auto const            normals = normal_subgroups(g, caps);
    std::size_t const     n       = normals.size();
    std::vector<std::string> names;
    for (auto const& h : normals) {
      names.push_back(subset_name(t, h));
    }
    std::vector<ElementId> products(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Subset const prod = setwise_product(t, normals[i], normals[j]);
        auto         it   = std::find(normals.begin(), normals.end(), prod);
        if (it == normals.end()) {
          throw InconsistencyError("product of normal subgroups is not normal");
        }
        products[i * n + j] = static_cast<ElementId>(it - normals.begin());
      }
    }
    return detail::finish_construction({std::move(names), std::move(products)},
                                       "normal_subgroup_semilattice");
  }

  SemigroupTable semilattice_times_group(SemigroupTable const& l, GroupTable const& g) {
    require_validated(l, "semilattice_times_group");
    if (!is_semilattice(l)) {
      throw PreconditionError("semilattice_times_group: the first factor is not a semilattice");
    }
    return direct_product(l, g.base());
  }

}  // namespace assemblies
