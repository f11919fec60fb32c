#include "assemblies/morphisms.hpp"

#include <algorithm>  // for sort, all_of

#include "assemblies/errors.hpp"         // for PreconditionError, ...
#include "assemblies/substructures.hpp"  // for is_subassembly

namespace assemblies {

  namespace {

    void require_total(SemigroupTable const&      s,
                       SemigroupTable const&      t,
                       std::span<ElementId const> map) {
      if (map.size() != s.order()) {
        throw PreconditionError("map has " + std::to_string(map.size())
                                + " images for a source of order "
                                + std::to_string(s.order()));
      }
      for (auto y : map) {
        if (y >= t.order()) {
          throw PreconditionError("map image is not an element of the target");
        }
      }
    }

    void require_hom(SemigroupTable const&      s,
                     SemigroupTable const&      t,
                     std::span<ElementId const> map,
                     char const*                what) {
      if (!is_homomorphism(s, t, map)) {
        throw PreconditionError(std::string(what) + " requires a homomorphism");
      }
    }

    void require_assembly(AssemblyAnalysis const& a, char const* what) {
      if (!a.is_assembly()) {
        throw PreconditionError(std::string(what) + " requires an assembly");
      }
    }

    Subset image_of(std::span<ElementId const> map, Subset const& b) {
      std::vector<ElementId> out;
      for (auto x : b) {
        out.push_back(map[x]);
      }
      return Subset(std::move(out));
    }

    class HomSearch {
     public:
      HomSearch(SemigroupTable const&   s,
                SemigroupTable const&   t,
                AssemblyAnalysis const* sa,
                AssemblyAnalysis const* ta,
                HomSearchOptions const& opts)
          : _s(s), _t(t), _sa(sa), _ta(ta), _opts(opts), _map(s.order(), unset) {
        for (ElementId x = 0; x < s.order(); ++x) {
          if (s(x, x) == x) {
            _order.push_back(x);
          }
        }
        for (ElementId x = 0; x < s.order(); ++x) {
          if (s(x, x) != x) {
            _order.push_back(x);
          }
        }
        for (ElementId y = 0; y < t.order(); ++y) {
          _all_targets.push_back(y);
          if (t(y, y) == y) {
            _idempotent_targets.push_back(y);
          }
        }
      }

      std::vector<ElementMap> run() {
        search(0);
        std::sort(_found.begin(), _found.end());
        return std::move(_found);
      }

     private:
      static constexpr ElementId unset = static_cast<ElementId>(-1);

      bool coherent(ElementId x, ElementId v) const {
        if (_s(x, x) == x && _t(v, v) != v) {
          return false;
        }
        if (_sa == nullptr || _ta == nullptr) {
          return true;
        }
        ElementId const ex = _sa->e_map[x];
        if (_map[ex] != unset && _ta->e_map[v] != _map[ex]) {
          return false;
        }
        if (ex == x) {
          for (ElementId y = 0; y < _s.order(); ++y) {
            if (_map[y] != unset && _sa->e_map[y] == x && _ta->e_map[_map[y]] != v) {
              return false;
            }
          }
        }
        return true;
      }

      // Sets map[x] = v and everything it forces through products.
      bool assign(ElementId x, ElementId v) {
        _pending.clear();
        _pending.emplace_back(x, v);
        while (!_pending.empty()) {
          auto [a, w] = _pending.back();
          _pending.pop_back();
          if (_map[a] != unset) {
            if (_map[a] != w) {
              return false;
            }
            continue;
          }
          if (!coherent(a, w)) {
            return false;
          }
          _map[a] = w;
          _trail.push_back(a);
          for (ElementId b = 0; b < _s.order(); ++b) {
            if (_map[b] != unset) {
              _pending.emplace_back(_s(a, b), _t(w, _map[b]));
              _pending.emplace_back(_s(b, a), _t(_map[b], w));
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          _map[_trail.back()] = unset;
          _trail.pop_back();
        }
      }

      void search(std::size_t i) {
        while (i < _order.size() && _map[_order[i]] != unset) {
          ++i;
        }
        if (i == _order.size()) {
          _found.push_back(_map);
          return;
        }
        ElementId const x = _order[i];
        auto const& targets = _s(x, x) == x ? _idempotent_targets : _all_targets;
        for (auto v : targets) {
          if (++_nodes > _opts.node_cap) {
            throw CapExceeded("homomorphism search visited too many nodes",
                              _nodes,
                              _opts.node_cap);
          }
          std::size_t const mark = _trail.size();
          if (assign(x, v)) {
            search(i + 1);
          }
          undo(mark);
        }
      }

      SemigroupTable const&   _s;
      SemigroupTable const&   _t;
      AssemblyAnalysis const* _sa;
      AssemblyAnalysis const* _ta;
      HomSearchOptions        _opts;

      ElementMap                                 _map;
      std::vector<ElementId>                     _order;
      std::vector<ElementId>                     _all_targets;
      std::vector<ElementId>                     _idempotent_targets;
      std::vector<ElementId>                     _trail;
      std::vector<std::pair<ElementId, ElementId>> _pending;
      std::vector<ElementMap>                    _found;
      std::size_t                                _nodes = 0;
    };

  }  // namespace

  PairVerdict is_homomorphism(SemigroupTable const&      s,
                              SemigroupTable const&      t,
                              std::span<ElementId const> map) {
    require_validated(s, "is_homomorphism");
    require_validated(t, "is_homomorphism");
    require_total(s, t, map);
    for (ElementId x = 0; x < s.order(); ++x) {
      for (ElementId y = 0; y < s.order(); ++y) {
        if (map[s(x, y)] != t(map[x], map[y])) {
          return PairVerdict::fail({x, y});
        }
      }
    }
    return PairVerdict::pass();
  }

  PairVerdict is_homomorphism(AssemblyAnalysis const&    s,
                              AssemblyAnalysis const&    t,
                              std::span<ElementId const> map) {
    auto v = is_homomorphism(s.subject, t.subject, map);
    if (!v || !s.is_assembly() || !t.is_assembly()) {
      return v;
    }
    for (ElementId x = 0; x < s.subject.order(); ++x) {
      if (map[s.e_map[x]] != t.e_map[map[x]]) {
        throw InconsistencyError("homomorphism does not preserve e at "
                                 + s.subject.name(x));
      }
      if (map[s.s_map[x]] != t.s_map[map[x]]) {
        throw InconsistencyError("homomorphism does not preserve s at "
                                 + s.subject.name(x));
      }
    }
    return v;
  }

  std::vector<ElementMap> enumerate_homomorphisms(SemigroupTable const&   s,
                                                  SemigroupTable const&   t,
                                                  HomSearchOptions const& opts) {
    require_validated(s, "enumerate_homomorphisms");
    require_validated(t, "enumerate_homomorphisms");
    return HomSearch(s, t, nullptr, nullptr, opts).run();
  }

  std::vector<ElementMap> enumerate_homomorphisms(AssemblyAnalysis const& s,
                                                  AssemblyAnalysis const& t,
                                                  HomSearchOptions const& opts) {
    require_validated(s.subject, "enumerate_homomorphisms");
    require_validated(t.subject, "enumerate_homomorphisms");
    bool const both = s.is_assembly() && t.is_assembly();
    return HomSearch(s.subject,
                     t.subject,
                     both ? &s : nullptr,
                     both ? &t : nullptr,
                     opts)
        .run();
  }

  Subset kernel(AssemblyAnalysis const&    s,
                SemigroupTable const&      t,
                std::span<ElementId const> map) {
    require_assembly(s, "kernel");
    require_hom(s.subject, t, map, "kernel");
    Subset const           phi_e = image_of(map, s.idempotents);
    std::vector<ElementId> ker, by_components;
    for (ElementId x = 0; x < s.subject.order(); ++x) {
      if (phi_e.contains(map[x])) {
        ker.push_back(x);
      }
      if (map[x] == map[s.e_map[x]]) {
        by_components.push_back(x);
      }
    }
    Subset out(std::move(ker));
    if (out != Subset(std::move(by_components))) {
      throw InconsistencyError("kernel differs from the union of the component kernels");
    }
    if (!s.idempotents.is_subset_of(out)) {
      throw InconsistencyError("kernel does not contain the idempotents");
    }
    if (!is_subassembly(s, out)) {
      throw InconsistencyError("kernel " + format_subset(s.subject, out)
                               + " is not a subassembly");
    }
    return out;
  }

  Subset image(AssemblyAnalysis const&    s,
               AssemblyAnalysis const&    t,
               std::span<ElementId const> map) {
    require_assembly(s, "image");
    require_assembly(t, "image");
    require_hom(s.subject, t.subject, map, "image");
    Subset out = image_of(map, Subset::all(s.subject.order()));
    if (!is_subassembly(t, out)) {
      throw InconsistencyError("image " + format_subset(t.subject, out)
                               + " is not a subassembly");
    }
    return out;
  }

  InjectivityReport injectivity_check(AssemblyAnalysis const&    s,
                                      SemigroupTable const&      t,
                                      std::span<ElementId const> map) {
    InjectivityReport r;
    r.kernel_is_e = kernel(s, t, map) == s.idempotents;
    r.literal     = image_of(map, Subset::all(s.subject.order())).size()
                == s.subject.order();
    return r;
  }

  bool is_injective_hom(AssemblyAnalysis const&    s,
                        SemigroupTable const&      t,
                        std::span<ElementId const> map) {
    auto const r = injectivity_check(s, t, map);
    if (!r.agree()) {
      throw InconsistencyError(
          std::string("kernel criterion says ") + (r.kernel_is_e ? "injective" : "not injective")
          + " but the map is " + (r.literal ? "injective" : "not injective"));
    }
    return r.kernel_is_e;
  }

  ComponentsReport components(AssemblyAnalysis const&    s,
                              AssemblyAnalysis const&    t,
                              std::span<ElementId const> map) {
    require_assembly(s, "components");
    require_assembly(t, "components");
    require_hom(s.subject, t.subject, map, "components");
    ComponentsReport r;
    r.all_components_injective = true;
    std::vector<std::vector<ElementId>> covered(t.subject.order());
    for (auto const& block : s.clifford) {
      ElementId const e  = block.identity;
      ElementId const te = map[e];
      HomComponent    c{e, te, block.members, image_of(map, block.members), {}, false, false};
      std::vector<ElementId> ker;
      for (auto x : block.members) {
        if (t.e_map[map[x]] != te) {
          throw InconsistencyError("component at " + s.subject.name(e)
                                   + " leaves the block of " + t.subject.name(te));
        }
        if (map[x] == te) {
          ker.push_back(x);
        }
      }
      c.kernel    = Subset(std::move(ker));
      c.injective = c.image.size() == c.domain.size();
      auto const target_block
          = std::find_if(t.clifford.begin(), t.clifford.end(), [te](CliffordBlock const& b) {
              return b.identity == te;
            });
      c.onto = c.image == target_block->members;
      r.all_components_injective = r.all_components_injective && c.injective;
      for (auto y : c.image) {
        covered[te].push_back(y);
      }
      r.components.push_back(std::move(c));
    }
    Subset const all_images = image_of(map, Subset::all(s.subject.order()));
    r.injective  = all_images.size() == s.subject.order();
    r.surjective = all_images.size() == t.subject.order();
    r.components_cover_target = std::all_of(
        t.clifford.begin(), t.clifford.end(), [&](CliffordBlock const& b) {
          return Subset(covered[b.identity]) == b.members;
        });
    return r;
  }

  ObstructionReport max_idempotent_obstruction(AssemblyAnalysis const& a,
                                               GroupTable const&       g,
                                               HomSearchOptions const& opts) {
    require_assembly(a, "max_idempotent_obstruction");
    SemigroupTable const& t = a.subject;
    ObstructionReport     r;
    if (a.idempotents.size() == 1) {
      return r;
    }
    for (auto m : a.idempotents) {
      if (std::all_of(a.idempotents.begin(), a.idempotents.end(), [&](ElementId f) {
            return t(f, m) == m;
          })) {
        r.maximum = m;
        break;
      }
    }
    if (!r.maximum) {
      r.status = ObstructionStatus::no_maximum;
      return r;
    }
    ElementId const m = *r.maximum;
    r.maximum_absorbs = true;
    for (ElementId x = 0; x < t.order(); ++x) {
      r.maximum_absorbs = r.maximum_absorbs && t(x, m) == m;
    }
    auto const homs = enumerate_homomorphisms(a, check_axioms(g.base()), opts);
    r.homomorphisms = homs.size();
    r.status        = ObstructionStatus::holds;
    for (auto const& h : homs) {
      if (std::any_of(h.begin(), h.end(), [&](ElementId y) { return y != h[0]; })) {
        r.status       = ObstructionStatus::violated;
        r.non_constant = h;
        break;
      }
    }
    return r;
  }

  HomAnalysis analyze_hom(AssemblyAnalysis const& s,
                          AssemblyAnalysis const& t,
                          ElementMap              map) {
    HomAnalysis h;
    h.verdict = is_homomorphism(s, t, map);
    h.map     = std::move(map);
    if (!h.verdict || !s.is_assembly()) {
      return h;
    }
    h.kernel      = kernel(s, t.subject, h.map);
    h.injectivity = injectivity_check(s, t.subject, h.map);
    if (t.is_assembly()) {
      h.image      = image(s, t, h.map);
      h.components = components(s, t, h.map);
    }
    return h;
  }

}  // namespace assemblies
