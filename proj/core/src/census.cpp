#include "assemblies/census.hpp"

#include <algorithm>  // for next_permutation, sort
#include <map>        // for map
#include <mutex>      // for mutex, lock_guard
#include <numeric>    // for iota
#include <set>        // for set
#include <thread>     // for thread

#include "assemblies/errors.hpp"  // for PreconditionError, CapExceeded, ...

namespace assemblies {

  namespace {

    using Flat = std::vector<ElementId>;

    std::vector<std::string> digit_names(std::size_t n) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
      }
      return names;
    }

    // Compares the table relabelled by q (q[new] = old, p = q^-1) against
    // best in row-major order: negative if smaller, 0 if equal, positive if
    // greater.
    int compare_relabelled(Flat const&                   table,
                           std::size_t                   n,
                           std::vector<ElementId> const& q,
                           std::vector<ElementId> const& p,
                           Flat const&                   best) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          ElementId const v = p[table[q[i] * n + q[j]]];
          ElementId const w = best[i * n + j];
          if (v != w) {
            return v < w ? -1 : 1;
          }
        }
      }
      return 0;
    }

    Flat canonical_flat(Flat const& table, std::size_t n) {
      std::vector<ElementId> q(n), p(n);
      std::iota(q.begin(), q.end(), ElementId{0});
      Flat best = table;
      do {
        for (std::size_t i = 0; i < n; ++i) {
          p[q[i]] = static_cast<ElementId>(i);
        }
        if (compare_relabelled(table, n, q, p, best) < 0) {
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              best[i * n + j] = p[table[q[i] * n + q[j]]];
            }
          }
        }
      } while (std::next_permutation(q.begin(), q.end()));
      return best;
    }

    bool is_canonical_flat(Flat const& table, std::size_t n) {
      std::vector<ElementId> q(n), p(n);
      std::iota(q.begin(), q.end(), ElementId{0});
      while (std::next_permutation(q.begin(), q.end())) {
        for (std::size_t i = 0; i < n; ++i) {
          p[q[i]] = static_cast<ElementId>(i);
        }
        if (compare_relabelled(table, n, q, p, table) < 0) {
          return false;
        }
      }
      return true;
    }

    bool flat_associative(Flat const& t, std::size_t n) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          for (std::size_t z = 0; z < n; ++z) {
            if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    SemigroupTable to_table(Flat products, std::size_t n) {
      SemigroupTable t(digit_names(n), std::move(products));
      if (!t.validate()) {
        throw InconsistencyError("census produced a non-associative table");
      }
      return t;
    }

    // Row-major backtracking over partial tables; a triple is checked as
    // soon as the four cells it reads are all defined.
    class TableSearch {
     public:
      static constexpr int unset = -1;

      TableSearch(std::size_t n, bool bands_only)
          : _n(n), _bands_only(bands_only) {}

      // All consistent assignments of the first row.
      std::vector<std::vector<int>> first_rows() const {
        std::vector<std::vector<int>> out;
        std::vector<int>              cells(_n * _n, unset);
        collect(cells, 0, _n, out);
        return out;
      }

      // Completes a partial table whose first `from` cells are set and
      // appends every canonical completion.
      void complete(std::vector<int>& cells, std::size_t from, std::vector<Flat>& out) const {
        walk(cells, from, [&](std::vector<int> const& full) {
          Flat flat(full.begin(), full.end());
          if (is_canonical_flat(flat, _n)) {
            out.push_back(std::move(flat));
          }
        });
      }

     private:
      int get(std::vector<int> const& c, std::size_t a, std::size_t b) const {
        return c[a * _n + b];
      }

      bool triple_ok(std::vector<int> const& c,
                     std::size_t             a,
                     std::size_t             b,
                     std::size_t             d) const {
        int const ab = get(c, a, b), bd = get(c, b, d);
        if (ab == unset || bd == unset) {
          return true;
        }
        int const l = get(c, ab, d), r = get(c, a, bd);
        return l == unset || r == unset || l == r;
      }

      // Checks every triple that reads cell (x, y).
      bool consistent(std::vector<int> const& c, std::size_t x, std::size_t y) const {
        for (std::size_t k = 0; k < _n; ++k) {
          if (!triple_ok(c, x, y, k) || !triple_ok(c, k, x, y)) {
            return false;
          }
        }
        for (std::size_t a = 0; a < _n; ++a) {
          for (std::size_t b = 0; b < _n; ++b) {
            int const ab = get(c, a, b);
            if (ab == static_cast<int>(x) && !triple_ok(c, a, b, y)) {
              return false;
            }
            if (ab == static_cast<int>(y) && !triple_ok(c, x, a, b)) {
              return false;
            }
          }
        }
        return true;
      }

      template <typename Leaf>
      void walk(std::vector<int>& c, std::size_t pos, Leaf&& leaf) const {
        if (pos == _n * _n) {
          leaf(c);
          return;
        }
        std::size_t const x = pos / _n, y = pos % _n;
        std::size_t       lo = 0, hi = _n;
        if (_bands_only && x == y) {
          lo = x;
          hi = x + 1;
        }
        for (std::size_t v = lo; v < hi; ++v) {
          c[pos] = static_cast<int>(v);
          if (consistent(c, x, y)) {
            walk(c, pos + 1, leaf);
          }
        }
        c[pos] = unset;
      }

      void collect(std::vector<int>&              c,
                   std::size_t                    pos,
                   std::size_t                    stop,
                   std::vector<std::vector<int>>& out) const {
        if (pos == stop) {
          out.push_back(c);
          return;
        }
        std::size_t const x = pos / _n, y = pos % _n;
        std::size_t       lo = 0, hi = _n;
        if (_bands_only && x == y) {
          lo = x;
          hi = x + 1;
        }
        for (std::size_t v = lo; v < hi; ++v) {
          c[pos] = static_cast<int>(v);
          if (consistent(c, x, y)) {
            collect(c, pos + 1, stop, out);
          }
        }
        c[pos] = unset;
      }

      std::size_t _n;
      bool        _bands_only;
    };

  }  // namespace

  SemigroupTable canonical_form(SemigroupTable const& t) {
    std::size_t const n = t.order();
    SemigroupTable    out(digit_names(n), canonical_flat(t.products(), n));
    if (t.is_validated()) {
      out.validate();
    }
    return out;
  }

  bool is_canonical(SemigroupTable const& t) {
    return is_canonical_flat(t.products(), t.order());
  }

  std::vector<SemigroupTable>
  enumerate_canonical_tables(std::size_t n, EnumerationOptions const& opts) {
    if (n == 0) {
      throw PreconditionError("order must be positive");
    }
    TableSearch const search(n, opts.bands_only);
    auto              rows    = search.first_rows();
    unsigned const    workers = std::max(1u, opts.threads);

    std::vector<std::vector<Flat>> found(workers);
    auto                           work = [&](unsigned w) {
      for (std::size_t i = w; i < rows.size(); i += workers) {
        std::vector<int> cells = rows[i];
        search.complete(cells, n, found[w]);
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(work, w);
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    std::vector<Flat> all;
    for (auto& f : found) {
      all.insert(all.end(),
                 std::make_move_iterator(f.begin()),
                 std::make_move_iterator(f.end()));
    }
    std::sort(all.begin(), all.end());
    std::vector<SemigroupTable> out;
    out.reserve(all.size());
    for (auto& flat : all) {
      out.push_back(to_table(std::move(flat), n));
    }
    return out;
  }

  std::vector<SemigroupTable> naive_canonical_tables(std::size_t n) {
    if (n == 0 || n > 3) {
      throw PreconditionError("the naive scan is only supported for orders 1 to 3");
    }
    std::size_t const cells = n * n;
    Flat              table(cells, 0);
    std::set<Flat>    classes;
    while (true) {
      if (flat_associative(table, n)) {
        classes.insert(canonical_flat(table, n));
      }
      // Odometer increment.
      std::size_t k = 0;
      while (k < cells && ++table[k] == n) {
        table[k++] = 0;
      }
      if (k == cells) {
        break;
      }
    }
    std::vector<SemigroupTable> out;
    for (auto const& flat : classes) {
      out.push_back(to_table(flat, n));
    }
    return out;
  }

  std::vector<SemigroupTable> const& band_catalogue(std::size_t n) {
    static std::mutex                                         mtx;
    static std::map<std::size_t, std::vector<SemigroupTable>> cache;
    std::lock_guard<std::mutex>                               lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) {
      it = cache.emplace(n, enumerate_canonical_tables(n, {true, 1})).first;
    }
    return it->second;
  }

  CensusFlags classify(SemigroupTable const& t, WitnessOptions const& opts) {
    auto const  a = check_axioms(t);
    CensusFlags f;
    f.is_band                  = is_band(t);
    f.is_semilattice           = is_semilattice(t);
    f.is_union_of_groups       = is_union_of_groups(t);
    f.satisfies_a1_a2          = a.is_union_of_groups();
    f.is_assembly              = a.is_assembly();
    f.is_strong                = a.is_assembly() && a.strong.holds();
    f.strong_by_idempotents    = a.is_assembly() && idempotent_products_are_factors(a).holds;
    f.idempotents_commute      = idempotents_commute(a).holds;
    f.idempotents_central      = idempotents_central(a).holds;
    f.is_semilattice_of_groups = is_semilattice_of_groups(a);
    f.idempotent_order_total   = idempotent_order_total(a).holds();
    f.has_band_of_groups_witness = band_of_groups_witness(t, opts).has_value();
    WitnessOptions semilattice   = opts;
    semilattice.semilattice_only = true;
    f.has_semilattice_witness    = band_of_groups_witness(t, semilattice).has_value();
    return f;
  }

  std::vector<CensusRecord> enumerate_semigroups(std::size_t n, CensusOptions const& opts) {
    if (n == 0 || n > 5) {
      throw PreconditionError("census order must be between 1 and 5");
    }
    if (n == 5 && !opts.allow_order_5) {
      throw CapExceeded("the order-5 census is long-running; enable it explicitly", 5, 4);
    }
    std::vector<CensusRecord> out;
    for (auto& t : enumerate_canonical_tables(n, {false, opts.threads})) {
      auto flags = classify(t, opts.witness);
      out.push_back({n, std::move(t), flags});
    }
    return out;
  }

  namespace {
    std::string describe(CensusRecord const& r, std::size_t index) {
      std::string s = "order " + std::to_string(r.order) + " record "
                      + std::to_string(index) + " [";
      for (auto v : r.canonical_table.products()) {
        s += std::to_string(v);
      }
      return s + "]";
    }
  }  // namespace

  CensusSummary summarize_census(std::vector<CensusRecord> const& records) {
    CensusSummary s;
    s.total = records.size();
    if (!records.empty()) {
      s.order = records.front().order;
    }
    for (char const* key : {"band",
                            "semilattice",
                            "union_of_groups",
                            "assembly",
                            "strong",
                            "idempotents_commute",
                            "idempotents_central",
                            "semilattice_of_groups",
                            "idempotent_order_total",
                            "band_of_groups_witness",
                            "semilattice_witness"}) {
      s.counts[key] = 0;
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
      auto const& f = records[i].flags;
      s.counts["band"] += f.is_band;
      s.counts["semilattice"] += f.is_semilattice;
      s.counts["union_of_groups"] += f.is_union_of_groups;
      s.counts["assembly"] += f.is_assembly;
      s.counts["strong"] += f.is_strong;
      s.counts["idempotents_commute"] += f.idempotents_commute;
      s.counts["idempotents_central"] += f.idempotents_central;
      s.counts["semilattice_of_groups"] += f.is_semilattice_of_groups;
      s.counts["idempotent_order_total"] += f.idempotent_order_total;
      s.counts["band_of_groups_witness"] += f.has_band_of_groups_witness;
      s.counts["semilattice_witness"] += f.has_semilattice_witness;

      auto fail = [&](char const* what) {
        s.violations.push_back(describe(records[i], i) + ": " + what);
      };
      if (f.is_assembly != f.has_band_of_groups_witness) {
        fail("assembly <=> band of groups");
      }
      bool const commuting = f.is_assembly && f.idempotents_commute;
      if (commuting != (f.is_assembly && f.idempotents_central)) {
        fail("commuting idempotents <=> central idempotents");
      }
      if (commuting != f.has_semilattice_witness) {
        fail("commuting idempotents <=> semilattice of groups");
      }
      if (f.is_union_of_groups && f.idempotents_commute && !f.is_assembly) {
        fail("union of groups with commuting idempotents => assembly");
      }
      if (f.is_union_of_groups != f.satisfies_a1_a2) {
        fail("union of groups <=> A1 and A2");
      }
      if (f.is_assembly && f.is_strong != f.strong_by_idempotents) {
        fail("strong <=> idempotent products are factors");
      }
    }
    return s;
  }

  CensusSummary classify_census(std::vector<CensusRecord> const& records) {
    auto s = summarize_census(records);
    if (!s.violations.empty()) {
      throw InconsistencyError("census equivalence violated: " + s.violations.front());
    }
    return s;
  }

}  // namespace assemblies
