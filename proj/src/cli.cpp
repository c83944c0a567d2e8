//
// semilab - finite semirings, semimodules and their structure theory
//

#include "semilab/cli.hpp"

#include <ostream>  // for ostream

#include <CLI11.hpp>  // for CLI::App

#include "semilab/auditor.hpp"      // for audit_corpus, format_jsonl, ...
#include "semilab/catalog.hpp"      // for make_B, make_end_semiring, ...
#include "semilab/core.hpp"         // for enumerate_*
#include "semilab/errors.hpp"       // for Error, ParseError, FileError
#include "semilab/homs.hpp"         // for kernel_image, normality_profile
#include "semilab/semisimple.hpp"   // for simplicity_profile, ...
#include "semilab/summands.hpp"     // for summand_poset, ...
#include "semilab/text_format.hpp"  // for parse_file, format_*

namespace semilab::cli {

  namespace {
    char const* yes(bool b) {
      return b ? "yes" : "no";
    }

    std::string list(std::vector<Subset> const& s) {
      std::string out;
      for (auto const& x : s) {
        out += " " + x.to_string();
      }
      return out;
    }

    char const* exhaustive(bool b) {
      return b ? "exhaustive" : "NOT exhaustive";
    }

    void analyze_module(std::ostream&    out,
                        ModulePtr const& M,
                        Limits const&    limits) {
      auto const subs  = enumerate_subsemimodules(M, limits);
      auto const congs = enumerate_congruences(*M, limits);
      std::vector<Subset> all, subtractive;
      for (auto const& L : subs.items) {
        all.push_back(L.members);
        if (L.is_subtractive()) {
          subtractive.push_back(L.members);
        }
      }
      out << "  subsemimodules: " << all.size() << " ("
          << exhaustive(subs.exhaustive) << "):" << list(all) << "\n"
          << "  subtractive: " << subtractive.size() << ":" << list(subtractive)
          << "\n"
          << "  congruences: " << congs.size() << " ("
          << exhaustive(congs.exhaustive) << "):";
      for (auto const& rho : congs.items) {
        out << " " << rho.to_string();
      }
      out << "\n";

      auto const P = summand_poset(M, limits);
      std::vector<Subset> summands;
      for (auto const& node : P.nodes) {
        summands.push_back(node.members);
      }
      out << "  direct summands: " << summands.size() << ":" << list(summands)
          << "\n  longest chain of summands: " << P.longest_chain << "\n";

      auto const r = simplicity_profile(M, limits);
      out << "  ideal-simple: " << yes(r.ideal_simple)
          << "\n  congruence-simple: " << yes(r.congruence_simple) << "\n";

      auto const ss = semisimplicity_profile(M, limits);
      out << "  ideal-semisimple: " << yes(ss.ideal_semisimple);
      if (ss.ideal_witness) {
        out << " via" << list(*ss.ideal_witness);
      }
      out << "\n  congruence-semisimple: " << yes(ss.congruence_semisimple);
      if (ss.congruence_witness) {
        out << " via" << list(*ss.congruence_witness);
      }
      out << "\n";

      auto const cp = condition_profile(M, limits);
      out << "  C1: " << yes(cp.C1);
      if (cp.c1_witness) {
        out << " (" << cp.c1_witness->to_string() << " is not a summand)";
      }
      out << "\n  C2: " << yes(cp.C2);
      if (cp.c2_witness) {
        out << " (M = " << cp.c2_witness->first.to_string()
            << ", L = " << cp.c2_witness->second.to_string() << ")";
      }
      out << "\n  C2': " << yes(cp.C2prime);
      if (cp.c2prime_witness) {
        out << " (M = " << cp.c2prime_witness->first.to_string()
            << ", L = " << cp.c2prime_witness->second.to_string() << ")";
      }
      out << "\n";
    }

    void analyze_semiring(std::ostream&      out,
                          SemiringPtr const& S,
                          Limits const&      limits) {
      out << "  order " << S->order() << ", commutative "
          << yes(S->is_commutative()) << ", zerosumfree "
          << yes(S->is_zerosumfree()) << ", cancellative "
          << yes(S->is_cancellative()) << "\n"
          << "  V(S) = " << S->v_set().to_string()
          << ", K+(S) = " << S->k_set().to_string() << "\n";
      auto const ideals = enumerate_ideals(*S, limits);
      auto const ts     = semiring_simplicity(*S, limits);
      out << "  two-sided ideals: " << ideals.size() << ":" << list(ideals.items)
          << "\n  two-sided congruences: "
          << enumerate_congruences(*S, limits).size()
          << "\n  ideal-simple (two-sided): " << yes(ts.ideal_simple)
          << "\n  congruence-simple (two-sided): " << yes(ts.congruence_simple)
          << "\n  as a left module over itself:\n";
      analyze_module(out, regular_module(S), limits);
      auto const C = comp_elements(*S);
      out << "  Comp(S):";
      for (auto const& c : C) {
        out << " " << c.t;
      }
      out << "\n";
    }

    ModulePtr map_end(Document const&                  doc,
                      std::optional<std::size_t> const& index,
                      std::size_t                       line) {
      if (doc.semimodules.empty()) {
        if (doc.semirings.empty()) {
          throw ParseError(line, "map needs a semiring or semimodule");
        }
        return regular_module(doc.semirings.back());
      }
      std::size_t const i = index.value_or(0);
      if (i >= doc.semimodules.size()) {
        throw ParseError(line, "no semimodule block " + std::to_string(i));
      }
      return doc.semimodules[i];
    }

    SemiringTable first_semiring(std::string const& path) {
      auto doc = parse_file(path);
      if (doc.semirings.empty()) {
        throw ParseError(0, path + " has no semiring block");
      }
      return *doc.semirings.front();
    }

    LatticeSpec first_lattice(std::string const& path) {
      auto doc = parse_file(path);
      if (doc.lattices.empty()) {
        throw ParseError(0, path + " has no lattice block");
      }
      return doc.lattices.front();
    }
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"semilab: finite semirings, semimodules and their structure "
                 "theory",
                 "semilab"};
    app.require_subcommand(1);

    std::vector<std::string> limit_args;
    int                      threads = 0;
    app.add_option("--limits", limit_args,
                   "search limits as key=value (max_results, max_steps, "
                   "max_hom_nodes, max_carrier, max_family_carrier)");
    app.add_option("--threads", threads,
                   "OpenMP threads; 1 selects the serial kernels")
        ->check(CLI::NonNegativeNumber);

    std::string file;
    auto* validate = app.add_subcommand("validate", "validate a file");
    validate->add_option("file", file)->required();
    auto* analyze = app.add_subcommand("analyze", "structure report");
    analyze->add_option("file", file)->required();
    auto* decompose
        = app.add_subcommand("decompose", "irreducible decomposition of S");
    decompose->add_option("file", file)->required();

    std::size_t order       = 0;
    bool        commutative = false, with_fixtures = false, no_lemmas = false;
    std::string format      = "text";
    auto* audit = app.add_subcommand("audit", "audit the implication chains "
                                              "and theorems");
    audit->add_option("--order", order,
                      "audit every semiring of order 2 .. N");
    audit->add_flag("--commutative", commutative,
                    "only commutative semirings");
    audit->add_flag("--fixtures", with_fixtures, "include the named examples");
    audit->add_flag("--no-lemmas", no_lemmas,
                    "skip the lemma suite on subobjects and quotients");
    audit->add_option("--format", format, "text or jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}));

    auto* catalog = app.add_subcommand("catalog", "emit a named semiring");
    catalog->require_subcommand(1);
    std::size_t bn = 0, bi = 0, k = 0;
    bool        preserve_top = false;
    std::vector<std::string> files;
    auto* bni = catalog->add_subcommand("bni", "B(n, i)");
    bni->add_option("--n", bn)->required();
    bni->add_option("--i", bi)->required();
    auto* lattice
        = catalog->add_subcommand("lattice", "distributive lattice semiring");
    lattice->add_option("file", file)->required();
    auto* end = catalog->add_subcommand("end", "endomorphism semiring E_L");
    end->add_option("file", file)->required();
    end->add_flag("--preserve-top", preserve_top,
                  "keep only the zero map and maps fixing top");
    auto* matrix = catalog->add_subcommand("matrix", "matrix semiring M_k(S)");
    matrix->add_option("file", file)->required();
    matrix->add_option("--k", k)->required();
    auto* product = catalog->add_subcommand("product", "direct product");
    product->add_option("files", files)->required();

    std::vector<char const*> argv{"semilab"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? success : input_error;
    }

    Limits limits;
    limits.threads = threads;
    try {
      for (auto const& kv : limit_args) {
        limits.set(kv);
      }

      if (*validate) {
        try {
          auto const doc = parse_file(file);
          for (std::size_t i = 0; i < doc.semirings.size(); ++i) {
            auto const& S = *doc.semirings[i];
            out << "semiring " << i << ": valid, order " << S.order()
                << ", commutative " << yes(S.is_commutative())
                << ", zerosumfree " << yes(S.is_zerosumfree())
                << ", cancellative " << yes(S.is_cancellative()) << "\n";
          }
          for (std::size_t i = 0; i < doc.semimodules.size(); ++i) {
            out << "semimodule " << i << ": valid, order "
                << doc.semimodules[i]->order() << "\n";
          }
          for (std::size_t i = 0; i < doc.lattices.size(); ++i) {
            out << "lattice " << i << ": valid, order " << doc.lattices[i].order
                << "\n";
          }
          for (std::size_t i = 0; i < doc.maps.size(); ++i) {
            auto const& m = doc.maps[i];
            auto const  f = make_linear_map(map_end(doc, m.source, m.line),
                                            map_end(doc, m.target, m.line),
                                            m.image);
            out << "map " << i << ": linear\n";
          }
          return success;
        } catch (AxiomViolation const& e) {
          out << "invalid: " << e.what() << "\n";
          return hard_failure;
        } catch (NotLinear const& e) {
          out << "invalid: " << e.what() << "\n";
          return hard_failure;
        }
      }

      if (*analyze) {
        auto const doc = parse_file(file);
        for (std::size_t i = 0; i < doc.semirings.size(); ++i) {
          out << "semiring " << i << "\n";
          analyze_semiring(out, doc.semirings[i], limits);
        }
        for (std::size_t i = 0; i < doc.semimodules.size(); ++i) {
          out << "semimodule " << i << "\n  order "
              << doc.semimodules[i]->order() << "\n";
          analyze_module(out, doc.semimodules[i], limits);
        }
        for (std::size_t i = 0; i < doc.maps.size(); ++i) {
          auto const& m  = doc.maps[i];
          auto const  f  = make_linear_map(map_end(doc, m.source, m.line),
                                           map_end(doc, m.target, m.line),
                                           m.image);
          auto const  ki = kernel_image(f);
          auto const  nm = normality_profile(f);
          out << "map " << i << " [" << f.to_string() << "]\n"
              << "  kernel " << ki.kernel.members.to_string() << ", image "
              << ki.image.members.to_string() << ", image closure "
              << ki.image_closure.members.to_string() << "\n"
              << "  injective " << yes(is_injective(f)) << ", surjective "
              << yes(is_surjective(f)) << ", k-normal " << yes(nm.k_normal)
              << ", i-normal " << yes(nm.i_normal) << ", normal "
              << yes(nm.normal) << "\n";
        }
        return success;
      }

      if (*decompose) {
        auto const S = share(first_semiring(file));
        auto const D = irreducible_decomposition(regular_module(S), limits);
        out << format_decomposition(D);
        return success;
      }

      if (*audit) {
        AuditOptions options;
        options.limits = limits;
        options.lemmas = !no_lemmas;
        bool complete  = true;
        auto entries   = enumerated_corpus(order, commutative, limits, &complete);
        if (with_fixtures) {
          for (auto& e : fixtures(limits)) {
            if (!commutative || e.semiring.is_commutative()) {
              entries.push_back(std::move(e));
            }
          }
        }
        auto report       = audit_corpus(entries, options);
        report.exhaustive = report.exhaustive && complete;
        out << (format == "jsonl" ? format_jsonl(report) : format_text(report));
        return report.green() ? success : hard_failure;
      }

      if (*bni) {
        out << format_semiring(make_B(bn, bi));
      } else if (*lattice) {
        out << format_semiring(make_lattice_semiring(first_lattice(file)));
      } else if (*end) {
        auto const E
            = make_end_semiring(first_lattice(file), preserve_top, limits);
        out << "# element k is the join endomorphism on line k + 1 below\n";
        for (auto const& f : E.maps) {
          out << "#";
          for (auto y : f) {
            out << " " << y;
          }
          out << "\n";
        }
        out << format_semiring(E.semiring);
      } else if (*matrix) {
        out << format_semiring(
            make_matrix_semiring(first_semiring(file), k, limits));
      } else if (*product) {
        std::vector<SemiringTable> factors;
        for (auto const& f : files) {
          factors.push_back(first_semiring(f));
        }
        out << format_semiring(make_product(factors));
      }
      return success;
    } catch (CrosscheckFailure const& e) {
      err << "semilab: internal cross-check failed: " << e.what() << "\n";
      return hard_failure;
    } catch (Error const& e) {
      err << "semilab: " << e.what() << "\n";
      return input_error;
    }
  }

}  // namespace semilab::cli
