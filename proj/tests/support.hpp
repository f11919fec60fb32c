#ifndef ASSEMBLIES_TESTS_SUPPORT_HPP_
#define ASSEMBLIES_TESTS_SUPPORT_HPP_

#include <algorithm>  // for next_permutation
#include <map>        // for map
#include <mutex>      // for mutex
#include <numeric>    // for iota
#include <string>     // for string
#include <vector>     // for vector

#include "assemblies/census.hpp"
#include "assemblies/format.hpp"

namespace support {

  using namespace assemblies;

  inline std::string fixture(std::string const& name) {
    return std::string(ASSEMBLIES_FIXTURE_DIR) + "/" + name;
  }

  inline SemigroupTable load(std::string const& name) {
    return read_table_file(fixture(name));
  }

  inline GroupTable group(std::string const& name) {
    return load_group(fixture(name));
  }

  // Census records of order n, computed once per process.
  inline std::vector<CensusRecord> const& census(std::size_t n) {
    static std::mutex                                       lock;
    static std::map<std::size_t, std::vector<CensusRecord>> cache;
    std::lock_guard                                         guard(lock);
    auto                                                    it = cache.find(n);
    if (it == cache.end()) {
      CensusOptions opts;
      opts.threads = 4;
      it           = cache.emplace(n, enumerate_semigroups(n, opts)).first;
    }
    return it->second;
  }

  inline std::vector<SemigroupTable> census_assemblies(std::size_t max_order) {
    std::vector<SemigroupTable> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      for (auto const& r : census(n)) {
        if (r.flags.is_assembly) {
          out.push_back(r.canonical_table);
        }
      }
    }
    return out;
  }

  // Every non-empty subset of {0, ..., n-1}.
  inline std::vector<Subset> nonempty_subsets(std::size_t n) {
    std::vector<Subset> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<ElementId> m;
      for (ElementId x = 0; x < n; ++x) {
        if (mask & (1u << x)) {
          m.push_back(x);
        }
      }
      out.emplace_back(std::move(m));
    }
    return out;
  }

  // Every map {0..n-1} -> {0..k-1}.
  inline std::vector<std::vector<ElementId>> all_maps(std::size_t n, std::size_t k) {
    std::vector<std::vector<ElementId>> out;
    std::vector<ElementId>              m(n, 0);
    while (true) {
      out.push_back(m);
      std::size_t i = 0;
      while (i < n && ++m[i] == k) {
        m[i++] = 0;
      }
      if (i == n) {
        return out;
      }
    }
  }

  inline bool brute_hom(SemigroupTable const& s, SemigroupTable const& t, std::vector<ElementId> const& m) {
    for (ElementId x = 0; x < s.order(); ++x) {
      for (ElementId y = 0; y < s.order(); ++y) {
        if (m[s(x, y)] != t(m[x], m[y])) {
          return false;
        }
      }
    }
    return true;
  }

  // Subgroups by brute force over all subsets.
  inline std::vector<Subset> brute_subgroups(GroupTable const& g) {
    std::vector<Subset> out;
    for (auto const& b : nonempty_subsets(g.order())) {
      bool ok = b.contains(g.identity());
      for (auto x : b) {
        ok = ok && b.contains(g.inverse(x));
        for (auto y : b) {
          ok = ok && b.contains(g.product(x, y));
        }
      }
      if (ok) {
        out.push_back(b);
      }
    }
    return out;
  }

}  // namespace support

#endif  // ASSEMBLIES_TESTS_SUPPORT_HPP_
