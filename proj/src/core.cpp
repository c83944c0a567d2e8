//
// semilab - finite semirings, semimodules and their structure theory
//

#include "semilab/core.hpp"

#include <string>  // for string, stoull

#include "semilab/errors.hpp"   // for Error, CrosscheckFailure, ...
#include "semilab/kernels.hpp"  // for close, substructures_*, ...

namespace semilab {

  void Limits::set(std::string const& key_value) {
    auto const eq = key_value.find('=');
    if (eq == std::string::npos) {
      throw InvalidParameters("expected key=value, got '" + key_value + "'");
    }
    auto const key   = key_value.substr(0, eq);
    auto const value = key_value.substr(eq + 1);
    std::size_t v    = 0;
    try {
      std::size_t used = 0;
      v                = std::stoull(value, &used);
      if (used != value.size()) {
        throw std::invalid_argument(value);
      }
    } catch (std::exception const&) {
      throw InvalidParameters("limit '" + key + "' needs a positive integer");
    }
    if (v == 0) {
      throw InvalidParameters("limit '" + key + "' must be positive");
    }
    if (key == "max_results") {
      max_results = v;
    } else if (key == "max_steps") {
      max_steps = v;
    } else if (key == "max_hom_nodes") {
      max_hom_nodes = v;
    } else if (key == "max_carrier") {
      max_carrier = v;
    } else if (key == "max_family_carrier") {
      max_family_carrier = v;
    } else if (key == "threads") {
      threads = static_cast<int>(v);
    } else {
      throw InvalidParameters("unknown limit '" + key + "'");
    }
  }

  Subset closure_members(SemimoduleTable const& M, Subset const& L) {
    Subset out(M.order());
    for (elem_t m = 0; m < M.order(); ++m) {
      bool found = false;
      L.for_each([&](elem_t l) {
        if (!found && L.contains(M.add(m, l))) {
          found = true;
        }
      });
      if (found) {
        out.insert(m);
      }
    }
    return out;
  }

  SubStructure make_substructure(ModulePtr M, Subset L) {
    if (kernels::close(*M, L) != L) {
      throw Error("subset " + L.to_string() + " is not a subsemimodule");
    }
    auto cl = closure_members(*M, L);
    return {std::move(M), std::move(L), std::move(cl)};
  }

  SubStructure generated_subsemimodule(ModulePtr M, Subset const& seed) {
    auto members = kernels::close(*M, seed);
    auto cl      = closure_members(*M, members);
    return {std::move(M), std::move(members), std::move(cl)};
  }

  SubStructure subtractive_closure(SubStructure const& L) {
    auto const q = bourne_quotient(L.parent, L.members);
    auto const k = kernel_of(q.projection);
    if (k != L.closure) {
      throw CrosscheckFailure("subtractive closure " + L.closure.to_string()
                              + " differs from Bourne kernel "
                              + k.to_string());
    }
    return make_substructure(L.parent, L.closure);
  }

  CongruencePartition bourne_congruence(SemimoduleTable const& M,
                                        Subset const&          N) {
    std::size_t const   n = M.order();
    std::vector<Subset> shifts(n, Subset(n));
    for (elem_t m = 0; m < n; ++m) {
      N.for_each([&](elem_t x) { shifts[m].insert(M.add(m, x)); });
    }
    std::vector<elem_t> labels(n);
    for (elem_t m = 0; m < n; ++m) {
      labels[m] = m;
      for (elem_t p = 0; p < m; ++p) {
        if (shifts[m].intersects(shifts[p])) {
          labels[m] = labels[p];
          break;
        }
      }
    }
    return CongruencePartition::from_labels(labels);
  }

  Quotient quotient_by_congruence(ModulePtr const&           M,
                                  CongruencePartition const& rho) {
    if (rho.order() != M->order() || !is_compatible(translations(*M), rho)) {
      throw IncompatiblePartition("partition " + rho.to_string()
                                  + " is not a congruence");
    }
    std::size_t const   k = rho.num_classes();
    std::size_t const   r = M->base()->order();
    std::vector<elem_t> rep(k);
    for (elem_t x = M->order(); x-- > 0;) {
      rep[rho.class_of(x)] = x;
    }
    OpTable add(k, k), act(r, k);
    for (elem_t c = 0; c < k; ++c) {
      for (elem_t d = 0; d < k; ++d) {
        add.at(c, d) = rho.class_of(M->add(rep[c], rep[d]));
      }
      for (elem_t s = 0; s < r; ++s) {
        act.at(s, c) = rho.class_of(M->act(s, rep[c]));
      }
    }
    auto Q = validate_semimodule(
        M->base(), std::move(add), std::move(act), rho.class_of(M->zero()));
    return {Q, LinearMap{M, Q, rho.labels()}};
  }

  CongruencePartition
  congruence_closure(SemimoduleTable const&                        M,
                     std::vector<std::pair<elem_t, elem_t>> const& pairs) {
    return kernels::join_closure(
        translations(M), CongruencePartition::discrete(M.order()), pairs);
  }

  CongruencePartition
  congruence_closure(SemiringTable const&                          S,
                     std::vector<std::pair<elem_t, elem_t>> const& pairs) {
    return kernels::join_closure(
        translations(S), CongruencePartition::discrete(S.order()), pairs);
  }

  Enumeration<Subset> enumerate_submodule_sets(SemimoduleTable const& M,
                                               Limits const& limits) {
    return limits.threads == 1 ? kernels::substructures_serial(M, limits)
                               : kernels::substructures_omp(M, limits);
  }

  Enumeration<SubStructure> enumerate_subsemimodules(ModulePtr const& M,
                                                     Limits const&    limits,
                                                     bool subtractive_only) {
    auto                      sets = enumerate_submodule_sets(*M, limits);
    Enumeration<SubStructure> out;
    out.exhaustive = sets.exhaustive;
    for (auto& L : sets.items) {
      auto cl = closure_members(*M, L);
      if (!subtractive_only || cl == L) {
        out.items.push_back({M, std::move(L), std::move(cl)});
      }
    }
    return out;
  }

  Enumeration<CongruencePartition>
  enumerate_congruences(SemimoduleTable const& M, Limits const& limits) {
    auto fam = translations(M);
    return limits.threads == 1 ? kernels::congruences_serial(fam, limits)
                               : kernels::congruences_omp(fam, limits);
  }

  Enumeration<CongruencePartition>
  enumerate_congruences(SemiringTable const& S, Limits const& limits) {
    auto fam = translations(S);
    return limits.threads == 1 ? kernels::congruences_serial(fam, limits)
                               : kernels::congruences_omp(fam, limits);
  }

  Enumeration<Subset> enumerate_ideals(SemiringTable const& S,
                                       Limits const&        limits) {
    auto R    = regular_module(share(S));
    auto left = enumerate_submodule_sets(*R, limits);
    Enumeration<Subset> out;
    out.exhaustive = left.exhaustive;
    for (auto& L : left.items) {
      bool closed = true;
      L.for_each([&](elem_t x) {
        for (elem_t s = 0; s < S.order() && closed; ++s) {
          closed = L.contains(S.mul(x, s));
        }
      });
      if (closed) {
        out.items.push_back(std::move(L));
      }
    }
    return out;
  }

  Subset sum_of(SemimoduleTable const& M, Subset const& L, Subset const& K) {
    Subset out(M.order());
    L.for_each([&](elem_t a) {
      K.for_each([&](elem_t b) { out.insert(M.add(a, b)); });
    });
    return out;
  }

}  // namespace semilab
