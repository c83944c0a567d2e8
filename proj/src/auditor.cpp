//
// semilab - finite semirings, semimodules and their structure theory
//

#include "semilab/auditor.hpp"

#include <omp.h>  // for omp_get_max_threads

#include <functional>  // for function
#include <sstream>     // for ostringstream
#include <tuple>       // for tuple

#include <json.hpp>  // for ordered_json

#include "semilab/catalog.hpp"     // for make_B, make_product, ...
#include "semilab/core.hpp"        // for enumerate_*, bourne_quotient
#include "semilab/errors.hpp"      // for CrosscheckFailure, LimitExceeded
#include "semilab/homs.hpp"        // for find_section, check_exactness
#include "semilab/kernels.hpp"     // for semirings_serial, semirings_omp
#include "semilab/projinj.hpp"     // for bounded_family, is_M_*
#include "semilab/semisimple.hpp"  // for simplicity_profile, ...
#include "semilab/summands.hpp"    // for summand_poset, ...

namespace semilab {

  Enumeration<SemiringTable> enumerate_semirings(std::size_t   order,
                                                 bool          commutative_only,
                                                 Limits const& limits) {
    return limits.threads == 1
               ? kernels::semirings_serial(order, commutative_only, limits)
               : kernels::semirings_omp(order, commutative_only, limits);
  }

  std::size_t AuditReport::hard_failures() const {
    std::size_t n = 0;
    for (auto const& r : records) {
      n += r.hard_failure();
    }
    return n;
  }

  std::size_t AuditReport::discrepancies() const {
    std::size_t n = 0;
    for (auto const& r : records) {
      n += r.verdict == "discrepancy";
    }
    return n;
  }

  namespace {

    ////////////////////////////////////////////////////////////////////////
    // Items and records
    ////////////////////////////////////////////////////////////////////////

    struct Item {
      Verdict     v = Verdict::unknown;
      std::string witness;
    };

    Item item(bool value, std::string witness, bool exhaustive = true) {
      if (!exhaustive && !value) {
        return {Verdict::unknown, "limits reached; " + witness};
      }
      return {value ? Verdict::holds : Verdict::fails, std::move(witness)};
    }

    Item item(Decision const& d, std::string const& holds_witness) {
      return {d.verdict, d.holds() ? holds_witness : d.certificate};
    }

    Item conj(Item const& a, Item const& b) {
      if (a.v == Verdict::fails) {
        return a;
      }
      if (b.v == Verdict::fails) {
        return b;
      }
      if (a.v == Verdict::unknown) {
        return a;
      }
      if (b.v == Verdict::unknown) {
        return b;
      }
      return {Verdict::holds, a.witness + "; " + b.witness};
    }

    char const* truth(Verdict v) {
      switch (v) {
        case Verdict::holds:
          return "true";
        case Verdict::fails:
          return "false";
        default:
          return "unknown";
      }
    }

    class Recorder {
     public:
      explicit Recorder(AuditReport& rep) : _rep(rep) {}

      void add(std::string id,
               std::string verdict,
               std::string witness,
               bool        exhaustive,
               bool        hard) {
        _rep.records.push_back({_rep.instance, std::move(id),
                                std::move(verdict), std::move(witness),
                                exhaustive, hard});
      }

      void item(std::string const& id, Item const& it) {
        add(id, to_string(it.v), it.witness, it.v != Verdict::unknown, false);
      }

      void check(std::string const& id,
                 bool               ok,
                 std::string const& witness,
                 bool               exhaustive = true) {
        if (!ok) {
          add(id, "fails", witness, exhaustive, true);
        } else {
          add(id, exhaustive ? "holds" : "unknown", witness, exhaustive, true);
        }
      }

      void fact(std::string const& id, bool ok, std::string const& witness) {
        add(id, ok ? "holds" : "fails", witness, true, false);
      }

      void implies(std::string const& id,
                   std::string const& a_name,
                   Item const&        a,
                   std::string const& b_name,
                   Item const&        b) {
        std::string const w = a_name + " " + truth(a.v) + ": " + a.witness
                              + "; " + b_name + " " + truth(b.v) + ": "
                              + b.witness;
        if (a.v == Verdict::holds && b.v == Verdict::fails) {
          add(id, "fails", w, true, true);
        } else if (a.v == Verdict::fails || b.v == Verdict::holds) {
          add(id, "holds", w, true, true);
        } else {
          add(id, "unknown", w, false, true);
        }
      }

      void equivalent(std::string const& id,
                      std::string const& a_name,
                      Item const&        a,
                      std::string const& b_name,
                      Item const&        b,
                      bool               hard) {
        std::string const w = a_name + " " + truth(a.v) + ": " + a.witness
                              + "; " + b_name + " " + truth(b.v) + ": "
                              + b.witness;
        if (a.v == Verdict::unknown || b.v == Verdict::unknown) {
          add(id, "unknown", w, false, hard);
        } else if (a.v == b.v) {
          add(id, "holds", w, true, hard);
        } else {
          add(id, hard ? "fails" : "discrepancy", w, true, hard);
        }
      }

      //! Pairwise records of a claimed equivalence of all items.
      void theorem(std::string const&                              prefix,
                   std::vector<std::pair<std::string, Item>> const& items) {
        for (std::size_t i = 0; i < items.size(); ++i) {
          for (std::size_t j = i + 1; j < items.size(); ++j) {
            equivalent(prefix + "." + items[i].first + "<=>" + items[j].first,
                       items[i].first, items[i].second, items[j].first,
                       items[j].second, false);
          }
        }
      }

     private:
      AuditReport& _rep;
    };

    // Accumulates one hard claim over many sub-checks.
    struct Tally {
      std::size_t checked    = 0;
      std::string failure;
      bool        exhaustive = true;

      void fail(std::string const& w) {
        if (failure.empty()) {
          failure = w;
        }
      }

      void record(Recorder& rec, std::string const& id, std::string const& what) {
        rec.check(id, failure.empty(),
                  failure.empty() ? std::to_string(checked) + " " + what
                                  : failure,
                  exhaustive);
      }
    };

    std::string subsets_string(std::vector<Subset> const& parts,
                               char const*                sep = " (+) ") {
      std::string s;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        s += (i == 0 ? "" : sep) + parts[i].to_string();
      }
      return s;
    }

    Decision all_holds() {
      return {Verdict::holds, ""};
    }

    ////////////////////////////////////////////////////////////////////////
    // Lemma suite on one semimodule
    ////////////////////////////////////////////////////////////////////////

    struct LemmaTallies {
      Tally cong_s_char, id_ss_char, simple_subtractive, golan, lemint, dcc_acc,
          cor_ml, exact_1_2, d_iso, summand_retract, summand_subtractive;
    };

    void lemma_suite(std::string const& name,
                     ModulePtr const&   X,
                     Limits const&      limits,
                     LemmaTallies&      t) {
      auto const at = [&](std::string const& w) { return name + ": " + w; };

      SimplicityReport r;
      try {
        r = simplicity_profile(X, limits, true);
        ++t.cong_s_char.checked;
        ++t.id_ss_char.checked;
        if (!r.crosschecked) {
          t.cong_s_char.exhaustive = t.cong_s_char.exhaustive && r.exhaustive;
          t.id_ss_char.exhaustive  = t.id_ss_char.exhaustive && r.exhaustive;
        }
      } catch (CrosscheckFailure const& e) {
        std::string const what = e.what();
        if (what.find("congruence") != std::string::npos) {
          t.cong_s_char.fail(at(what));
        } else {
          t.id_ss_char.fail(at(what));
        }
        r = simplicity_profile(X, limits, false);
      }

      auto const subs   = enumerate_subsemimodules(X, limits);
      auto const congs  = enumerate_congruences(*X, limits);
      Subset const zero(X->order(), {X->zero()});
      Subset const full = Subset::full(X->order());

      ++t.simple_subtractive.checked;
      if (r.congruence_simple) {
        for (auto const& L : subs.items) {
          if (L.is_subtractive() && L.members != zero && L.members != full) {
            t.simple_subtractive.fail(
                at("congruence-simple but " + L.members.to_string()
                   + " is a non-trivial subtractive subsemimodule"));
          }
        }
      }

      for (auto const& g : golan_16_6(X, limits)) {
        ++t.golan.checked;
        if (g.direct_summand != g.comp_image
            || g.direct_summand != g.bourne_trivial) {
          std::ostringstream os;
          os << g.members.to_string() << ": summand " << g.direct_summand
             << ", complemented idempotent image " << g.comp_image
             << ", trivial restricted Bourne relations " << g.bourne_trivial;
          t.golan.fail(at(os.str()));
        }
      }

      auto const li = lemint_check(X, limits);
      t.lemint.checked += li.checked;
      t.lemint.exhaustive = t.lemint.exhaustive && li.exhaustive;
      if (!li.failures.empty()) {
        t.lemint.fail(at(li.failures.front()));
      }

      auto const P = summand_poset(X, limits);
      ++t.dcc_acc.checked;
      t.dcc_acc.exhaustive = t.dcc_acc.exhaustive && P.exhaustive;
      if (P.longest_chain == 0 || P.longest_chain > X->order()) {
        t.dcc_acc.fail(at("summand chains are not bounded by the carrier"));
      }

      for (auto const& L : subs.items) {
        auto const Lmod = restrict_module(X, L.members);
        auto const f    = inclusion_map(Lmod, X, L.members);
        for (auto const& rho : congs.items) {
          auto const q  = quotient_by_congruence(X, rho);
          auto const ce = check_exactness(f, q.projection, limits);
          ++t.cor_ml.checked;
          ++t.exact_1_2.checked;
          t.cor_ml.exhaustive = t.cor_ml.exhaustive && ce.exhaustive;
          bool const ok = ce.exact == ce.induced_isos
                          && ce.induced_isos == ce.elementwise
                          && (!ce.exact || (ce.abstract_isos && ce.normal_maps));
          if (!ok) {
            std::ostringstream os;
            os << "L = " << L.members.to_string() << ", rho = "
               << rho.to_string() << ": exact " << ce.exact
               << ", induced isomorphisms " << ce.induced_isos
               << ", elementwise " << ce.elementwise << ", abstract "
               << ce.abstract_isos << ", normal " << ce.normal_maps;
            t.cor_ml.fail(at(os.str()));
          }
          if (!ce.lemma_exact_1_2) {
            t.exact_1_2.fail(at("L = " + L.members.to_string() + ", rho = "
                                + rho.to_string()));
          }
        }
      }

      for (auto const& node : P.nodes) {
        ++t.d_iso.checked;
        ++t.summand_retract.checked;
        ++t.summand_subtractive.checked;
        auto const quot = bourne_quotient(X, node.complement).module;
        auto const iso
            = find_isomorphism(quot, restrict_module(X, node.members), limits);
        t.d_iso.exhaustive = t.d_iso.exhaustive && iso.status != Search::unknown;
        if (iso.absent()) {
          t.d_iso.fail(at("M/" + node.complement.to_string() + " is not "
                          "isomorphic to " + node.members.to_string()));
        }
        auto const ret = retract_check(X, node.members, limits);
        if (ret.absent()) {
          t.summand_retract.fail(
              at(node.members.to_string() + " is a summand but no retract"));
        }
        if (closure_members(*X, node.members) != node.members) {
          t.summand_subtractive.fail(
              at(node.members.to_string() + " is a summand but not "
                                            "subtractive"));
        }
      }
    }

    void record_lemmas(Recorder& rec, LemmaTallies& t) {
      t.cong_s_char.record(rec, "lemma-cong-s-char", "semimodules cross-checked");
      t.id_ss_char.record(rec, "lemma-id-ss-char", "semimodules cross-checked");
      t.simple_subtractive.record(rec, "rem-cong-simple-subtractive",
                                  "semimodules checked");
      t.golan.record(rec, "lemma-golan-16-6", "subsemimodules checked");
      t.lemint.record(rec, "lemma-lemint", "(L, K, N) triples checked");
      t.dcc_acc.record(rec, "lemma-dcc-acc", "summand posets are finite");
      t.cor_ml.record(rec, "cor-M-L", "sequences 0 -> L -> M -> M/rho -> 0 "
                                      "checked");
      t.exact_1_2.record(rec, "lemma-exact.1-2", "sequences checked");
      t.d_iso.record(rec, "rem-d-iso.2", "summands checked");
      t.summand_retract.record(rec, "summand=>retract", "summands checked");
      t.summand_subtractive.record(rec, "summand=>subtractive",
                                   "summands checked");
    }

    ////////////////////////////////////////////////////////////////////////
    // The full audit
    ////////////////////////////////////////////////////////////////////////

    struct Profile {
      Item C1, C2, C2prime, ideal_ss, cong_ss;
      SemisimplicityReport ss;
    };

    Profile condition_items(ModulePtr const& R, Limits const& limits) {
      Profile p;
      auto const cp = condition_profile(R, limits);
      p.C1 = item(cp.C1,
                  cp.c1_witness ? "subtractive left ideal "
                                      + cp.c1_witness->to_string()
                                      + " is not a direct summand"
                                : "every subtractive left ideal is a direct "
                                  "summand",
                  cp.exhaustive);
      auto pair_w = [](auto const& w, char const* kind) -> std::string {
        if (!w) {
          return std::string("every quotient M/L with L maximal subtractive "
                             "in M is ")
                 + kind;
        }
        return "M = " + w->first.to_string() + ", L = " + w->second.to_string()
               + ": M/L is not " + kind;
      };
      p.C2      = item(cp.C2, pair_w(cp.c2_witness, "ideal-simple"),
                       cp.exhaustive);
      p.C2prime = item(cp.C2prime,
                       pair_w(cp.c2prime_witness, "congruence-simple"),
                       cp.exhaustive);
      p.ss = semisimplicity_profile(R, limits);
      p.ideal_ss = item(
          p.ss.ideal_semisimple,
          p.ss.ideal_witness
              ? "S = " + subsets_string(*p.ss.ideal_witness)
              : "no direct decomposition into the "
                    + std::to_string(p.ss.ideal_candidates)
                    + " ideal-simple left ideals",
          p.ss.exhaustive);
      p.cong_ss = item(
          p.ss.congruence_semisimple,
          p.ss.congruence_witness
              ? "S = " + subsets_string(*p.ss.congruence_witness)
              : "no direct decomposition into the "
                    + std::to_string(p.ss.congruence_candidates)
                    + " congruence-simple left ideals",
          p.ss.exhaustive);
      return p;
    }

    void full_audit(SemiringTable const& S,
                    AuditOptions const&  options,
                    Pin                  pin,
                    Recorder&            rec) {
      auto const&  lim = options.limits;
      auto const   Sp  = share(S);
      auto const   R   = regular_module(Sp);
      auto const   n   = S.order();
      Subset const zero(n, {S.zero()});
      Subset const full = Subset::full(n);

      auto const ideals = enumerate_subsemimodules(R, lim);
      std::vector<Subset> subtractive, nontrivial_subtractive;
      bool left_subtractive = true;
      for (auto const& I : ideals.items) {
        if (I.is_subtractive()) {
          subtractive.push_back(I.members);
          if (I.members != zero && I.members != full) {
            nontrivial_subtractive.push_back(I.members);
          }
        } else {
          left_subtractive = false;
        }
      }
      auto const P  = summand_poset(R, lim);
      auto const pr = condition_items(R, lim);

      // the bounded family and the four homological properties on it
      auto const F = bounded_family(Sp, lim);
      rec.add("info.bounded-family", F.exhaustive ? "holds" : "unknown",
              F.description, F.exhaustive, false);
      Decision eproj = all_holds(), kproj = all_holds(), einj = all_holds(),
               iinj = all_holds();
      Tally e_k, e_i;
      for (auto const& X : F.members) {
        auto const de = is_M_e_projective(X.module, R, lim);
        auto const dk = is_M_k_projective(X.module, R, lim);
        auto const dE = is_M_e_injective(X.module, R, lim);
        auto const dI = is_M_i_injective(X.module, R, lim);
        combine(eproj, de, X.name);
        combine(kproj, dk, X.name);
        combine(einj, dE, X.name);
        combine(iinj, dI, X.name);
        ++e_k.checked;
        ++e_i.checked;
        if (de.holds() && dk.fails()) {
          e_k.fail(X.name + ": e-projective but " + dk.certificate);
        }
        if (dE.holds() && dI.fails()) {
          e_i.fail(X.name + ": e-injective but " + dI.certificate);
        }
        e_k.exhaustive = e_k.exhaustive && F.exhaustive;
        e_i.exhaustive = e_i.exhaustive && F.exhaustive;
      }
      e_k.record(rec, "projinj.e-proj=>k-proj", "family members checked");
      e_i.record(rec, "projinj.e-inj=>i-inj", "family members checked");
      std::string const fam = std::to_string(F.members.size())
                              + " family members";
      Item const all_eproj = item(eproj, "all " + fam + " are S-e-projective");
      Item const all_kproj = item(kproj, "all " + fam + " are S-k-projective");
      Item const all_einj  = item(einj, "all " + fam + " are S-e-injective");
      Item const all_iinj  = item(iinj, "all " + fam + " are S-i-injective");

      // conditions on the subtractive ideals themselves
      Decision    si_kproj = all_holds(), i_iinj = all_holds();
      Decision    right    = all_holds(), left = all_holds();
      std::string retractions, sections;
      for (auto const& I : subtractive) {
        auto const label = "I = " + I.to_string();
        auto const q     = bourne_quotient(R, I);
        auto const Imod  = restrict_module(R, I);
        auto const inc   = inclusion_map(Imod, R, I);
        combine(si_kproj, is_M_k_projective(q.module, R, lim), label);
        combine(i_iinj, is_M_i_injective(Imod, R, lim), label);
        bool const trivial = I == zero || I == full;

        auto const sec = find_section(q.projection, lim);
        if (sec.absent()) {
          combine(right, {Verdict::fails, "0 -> I -> S -> S/I -> 0 has no "
                                          "section"}, label);
        } else if (!sec.present()) {
          combine(right, {Verdict::unknown, ""}, label);
        } else if (!trivial) {
          sections += (sections.empty() ? "" : "; ") + label
                      + ": section S/I -> S [" + sec.witness->to_string()
                      + "]";
        }
        auto const ret = find_retraction(inc, lim);
        if (ret.absent()) {
          combine(left, {Verdict::fails, "0 -> I -> S -> S/I -> 0 has no "
                                         "retraction S -> I"}, label);
        } else if (!ret.present()) {
          combine(left, {Verdict::unknown, ""}, label);
        } else if (!trivial) {
          retractions += (retractions.empty() ? "" : "; ") + label
                         + ": retraction S -> I, x |-> ["
                         + compose(inc, *ret.witness).to_string() + "]";
        }
      }
      std::string const only_trivial = "only trivial subtractive left ideals";
      Item const SI_kproj = item(si_kproj, "S/I is S-k-projective for all "
                                               + std::to_string(
                                                   subtractive.size())
                                               + " subtractive I");
      Item const I_iinj = item(i_iinj, "I is S-i-injective for all "
                                           + std::to_string(subtractive.size())
                                           + " subtractive I");
      Item const right_split
          = item(right, sections.empty() ? only_trivial : sections);
      Item const left_split
          = item(left, retractions.empty() ? only_trivial : retractions);

      std::string const chain = "longest chain of direct summands has "
                                + std::to_string(P.longest_chain)
                                + " members";
      Item const acc    = item(true, chain, P.exhaustive);
      Item const dcc    = item(true, chain, P.exhaustive);
      Item const knoeth = item(true, std::to_string(subtractive.size())
                                         + " subtractive left ideals, all "
                                           "chains finite",
                               ideals.exhaustive);

      auto const D = irreducible_decomposition(R, lim);
      Item const decomp = item(true, "S = " + subsets_string(D.parts));

      // one-directional chains
      std::vector<Item> const proj{pr.C1,       all_eproj,   all_kproj,
                                   SI_kproj,    right_split, acc,
                                   dcc,         decomp};
      std::vector<Item> const sum{pr.C1,      all_einj, all_iinj,
                                  I_iinj,     left_split, knoeth,
                                  acc,        dcc,        decomp};
      auto num = [](std::size_t k) { return "(" + std::to_string(k) + ")"; };
      for (std::size_t k = 0; k < proj.size(); ++k) {
        rec.item("item.proj-impl." + num(k + 1), proj[k]);
      }
      for (std::size_t k = 0; k < sum.size(); ++k) {
        rec.item("item.sum-einj." + num(k + 1), sum[k]);
      }
      rec.item("item.C2", pr.C2);
      rec.item("item.C2prime", pr.C2prime);
      rec.item("item.ideal-semisimple", pr.ideal_ss);
      rec.item("item.congruence-semisimple", pr.cong_ss);

      for (std::size_t k = 1; k < 8; ++k) {
        rec.implies("prop-proj-impl." + std::to_string(k) + "=>"
                        + std::to_string(k + 1),
                    num(k), proj[k - 1], num(k + 1), proj[k]);
      }
      rec.equivalent("prop-proj-impl.6<=>7", num(6), proj[5], num(7), proj[6],
                     true);
      for (std::size_t k = 1; k < 7; ++k) {
        rec.implies("prop-sum-einj." + std::to_string(k) + "=>"
                        + std::to_string(k + 1),
                    num(k), sum[k - 1], num(k + 1), sum[k]);
      }
      rec.equivalent("prop-sum-einj.7<=>8", num(7), sum[6], num(8), sum[7],
                     true);
      rec.implies("prop-sum-einj.7=>9", num(7), sum[6], num(9), sum[8]);

      auto const replay = sum_einj_witness_check(Sp, F, lim);
      rec.check("prop-sum-einj.h1-witness", replay.failures.empty(),
                replay.failures.empty()
                    ? std::to_string(replay.checked)
                          + " extensions h = g o pi + h1 replayed"
                    : replay.failures.front(),
                replay.exhaustive);

      // decompositions
      auto parts_simple = [&](bool ideal) {
        for (auto const& part : D.parts) {
          auto r = simplicity_profile(restrict_module(R, part), lim, false);
          if (!(ideal ? r.ideal_simple : r.congruence_simple)) {
            return false;
          }
        }
        return true;
      };
      bool const pi = parts_simple(true), pc = parts_simple(false);
      rec.check("cor-sumidsim.ideal", !pi || pr.ss.ideal_semisimple,
                pi ? "irreducible parts are ideal-simple; "
                         + pr.ideal_ss.witness
                   : "some irreducible part is not ideal-simple");
      rec.check("cor-sumidsim.congruence", !pc || pr.ss.congruence_semisimple,
                pc ? "irreducible parts are congruence-simple; "
                         + pr.cong_ss.witness
                   : "some irreducible part is not congruence-simple");
      bool rem1 = true;
      for (auto const& e : D.idempotents) {
        rem1 = rem1 && e(S.one()) != S.zero();
      }
      rec.check("rem-rem1", rem1,
                std::to_string(D.parts.size())
                    + " parts, 1 has a non-zero component in each");

      Tally irr;
      for (auto const* w : {&pr.ss.ideal_witness, &pr.ss.congruence_witness}) {
        if (!*w) {
          continue;
        }
        for (auto const& part : **w) {
          ++irr.checked;
          if (!is_irreducible(restrict_module(R, part), lim)) {
            irr.fail("simple part " + part.to_string()
                     + " is not an irreducible summand");
          }
        }
      }
      irr.record(rec, "semisimple-parts-irreducible", "simple parts checked");

      if (S.is_commutative()) {
        for (auto const& [kind, w] :
             {std::pair{"ideal", &pr.ss.ideal_witness},
              std::pair{"congruence", &pr.ss.congruence_witness}}) {
          if (!*w) {
            continue;
          }
          auto const cs = comsum_check(S, **w, lim);
          std::string fail;
          for (auto const& c : cs.certificates) {
            if (fail.empty() && !(c.is_sub_sum && c.is_summand)) {
              fail = c.ideal.to_string() + ": sub-sum " + (c.is_sub_sum ? "yes" : "no")
                     + ", summand " + (c.is_summand ? "yes" : "no");
            }
          }
          rec.check(std::string("lemma-comsum.") + kind, cs.holds,
                    cs.holds ? std::to_string(cs.certificates.size())
                                   + " subtractive ideals are sub-sums of "
                                   + subsets_string(**w) + " and summands"
                             : fail);
        }
      }

      // equivalence theorems
      std::vector<std::pair<std::string, Item>> t;
      if (S.is_commutative()) {
        for (auto const& [prefix, cond, target] :
             {std::tuple{"thm-idssc1", &pr.C2, &pr.ideal_ss},
              std::tuple{"thm-congc2", &pr.C2prime, &pr.cong_ss}}) {
          t.clear();
          for (std::size_t k = 0; k < proj.size(); ++k) {
            t.emplace_back(num(k + 1), conj(proj[k], *cond));
          }
          t.emplace_back(num(9), *target);
          rec.theorem(prefix, t);
        }
        for (auto const& [prefix, cname, cond, target] :
             {std::tuple{"thm-isscomm", "C2", &pr.C2, &pr.ideal_ss},
              std::tuple{"thm-csscomm", "C2'", &pr.C2prime, &pr.cong_ss}}) {
          if (cond->v != Verdict::holds) {
            rec.add(prefix, "skipped",
                    std::string(cname) + " " + truth(cond->v) + ": "
                        + cond->witness,
                    cond->v != Verdict::unknown, false);
            continue;
          }
          t.clear();
          for (std::size_t k = 0; k < sum.size(); ++k) {
            t.emplace_back(num(k + 1), sum[k]);
          }
          t.emplace_back(num(10), *target);
          rec.theorem(prefix, t);
        }
        for (auto const& [prefix, cname, cond, target] :
             {std::tuple{"thm-comidss", "C2", &pr.C2, &pr.ideal_ss},
              std::tuple{"thm-comcss", "C2'", &pr.C2prime, &pr.cong_ss}}) {
          if (cond->v != Verdict::holds) {
            rec.add(prefix, "skipped",
                    std::string(cname) + " " + truth(cond->v) + ": "
                        + cond->witness,
                    cond->v != Verdict::unknown, false);
            continue;
          }
          t = {{"(1)", pr.C1},        {"(2)", all_eproj},
               {"(2')", all_kproj},   {"(3)", all_einj},
               {"(3')", all_iinj},    {"(4)", SI_kproj},
               {"(4')", I_iinj},      {"(5)", right_split},
               {"(5')", left_split},  {"(6)", knoeth},
               {"(7)", acc},          {"(8)", dcc},
               {"(9)", decomp},       {"(10)", *target}};
          rec.theorem(prefix, t);
        }
      }
      if (left_subtractive) {
        t = {{"(1)", all_eproj},
             {"(2)", all_kproj},
             {"(3)", right_split},
             {"(4)", pr.C1},
             {"(5)", pr.ideal_ss}};
        rec.theorem("thm-idsske", t);
      } else {
        rec.add("thm-idsske", "skipped",
                "S is not left subtractive", ideals.exhaustive, false);
      }

      // regression pins
      auto pin_check = [&](std::string const& id, bool ok,
                           std::string const& w) { rec.check(id, ok, w); };
      if (pin == Pin::b31) {
        Subset const I(n, {0, 2});
        auto const   Imod = restrict_module(R, I);
        auto const   q    = bourne_quotient(R, I);
        pin_check("pin.b31.I-subtractive", closure_members(*R, I) == I,
                  "closure of {0,2} is " + closure_members(*R, I).to_string());
        pin_check("pin.b31.I-not-summand", !P.is_summand(I),
                  "summands: " + [&] {
                    std::vector<Subset> m;
                    for (auto const& s : P.nodes) {
                      m.push_back(s.members);
                    }
                    return subsets_string(m, ", ");
                  }());
        auto const ret = retract_check(R, I, lim);
        pin_check("pin.b31.I-retract", ret.present(),
                  ret.present() ? "idempotent [" + ret.witness->to_string()
                                      + "]"
                                : "no idempotent with image {0,2}");
        pin_check("pin.b31.not-ideal-semisimple", pr.ideal_ss.v == Verdict::fails,
                  pr.ideal_ss.witness);
        pin_check("pin.b31.not-congruence-semisimple",
                  pr.cong_ss.v == Verdict::fails, pr.cong_ss.witness);
        // S/I and I are two-element, ideal-simple and additively the
        // boolean monoid, but the scalar 2 acts as 0 on S/I and as 1 on I.
        auto boolean_like = [&](ModulePtr const& X) {
          if (X->order() != 2) {
            return false;
          }
          elem_t const x = X->zero() == 0 ? 1 : 0;
          return X->add(x, x) == x
                 && simplicity_profile(X, lim, false).ideal_simple;
        };
        auto doubling = [](ModulePtr const& X, std::string const& name) {
          elem_t const x = X->zero() == 0 ? 1 : 0;
          return name + ": x + x = "
                 + (X->add(x, x) == x ? std::string("x") : std::string("0"))
                 + " for its nonzero element x";
        };
        rec.fact("example.b31.S/I-like-B", boolean_like(q.module),
                 doubling(q.module, "S/I"));
        rec.fact("example.b31.I-like-B", boolean_like(Imod),
                 doubling(Imod, "I"));
        auto const iso = find_isomorphism(q.module, Imod, lim);
        pin_check("pin.b31.S/I-not-iso-I", iso.absent(),
                  "2 [1] = [0] in S/I while 2 . 2 = 2 in I");
      } else if (pin == Pin::b_p1_p) {
        elem_t const p = n - 1;
        std::vector<Subset> all, expected{zero, Subset(n, {0, p}), full};
        for (auto const& I : ideals.items) {
          all.push_back(I.members);
        }
        rec.fact("example.bpp.ideals", all == expected,
                  "left ideals: " + subsets_string(all, ", "));
        pin_check("pin.bpp.subtractive-trivial", nontrivial_subtractive.empty(),
                  "subtractive: " + subsets_string(subtractive, ", "));
        pin_check("pin.bpp.all-e-projective", all_eproj.v == Verdict::holds,
                  all_eproj.witness);
        pin_check("pin.bpp.not-ideal-semisimple",
                  pr.ideal_ss.v == Verdict::fails, pr.ideal_ss.witness);
        pin_check("pin.bpp.not-congruence-semisimple",
                  pr.cong_ss.v == Verdict::fails, pr.cong_ss.witness);
      } else if (pin == Pin::b32) {
        pin_check("pin.b32.C1", pr.C1.v == Verdict::holds, pr.C1.witness);
        pin_check("pin.b32.not-C2", pr.C2.v == Verdict::fails, pr.C2.witness);
        pin_check("pin.b32.not-C2prime", pr.C2prime.v == Verdict::fails,
                  pr.C2prime.witness);
      }

      if (options.lemmas) {
        LemmaTallies lt;
        lemma_suite("S", R, lim, lt);
        for (auto const& I : ideals.items) {
          if (I.members != zero && I.members != full) {
            lemma_suite("S.L" + I.members.to_string(),
                        restrict_module(R, I.members), lim, lt);
          }
        }
        auto const congs = enumerate_congruences(*R, lim);
        for (auto const& rho : congs.items) {
          if (!rho.is_discrete() && !rho.is_universal()) {
            lemma_suite("S/" + rho.to_string(),
                        quotient_by_congruence(R, rho).module, lim, lt);
          }
        }
        record_lemmas(rec, lt);
      }
    }

    void profile_audit(SemiringTable const& S,
                       AuditOptions const&  options,
                       Pin                  pin,
                       Recorder&            rec) {
      auto const& lim = options.limits;
      auto const  R   = regular_module(share(S));
      auto const  ls  = simplicity_profile(R, lim, false);
      auto const  ts  = semiring_simplicity(S, lim);
      auto const  pr  = condition_items(R, lim);
      Item const  left_ideal = item(
          ls.ideal_simple,
          ls.ideal_witness ? "left ideal " + ls.ideal_witness->to_string()
                           : "only {0} and S",
          ls.exhaustive);
      Item const left_cong = item(
          ls.congruence_simple,
          ls.congruence_witness ? "left congruence "
                                      + ls.congruence_witness->to_string()
                                : "only the trivial left congruences",
          ls.exhaustive);
      Item const two_ideal = item(
          ts.ideal_simple,
          ts.ideal_witness ? "two-sided ideal " + ts.ideal_witness->to_string()
                           : "only {0} and S",
          ts.exhaustive);
      Item const two_cong = item(
          ts.congruence_simple,
          ts.congruence_witness ? "congruence "
                                      + ts.congruence_witness->to_string()
                                : "only the trivial congruences",
          ts.exhaustive);
      rec.item("item.left-ideal-simple", left_ideal);
      rec.item("item.left-congruence-simple", left_cong);
      rec.item("item.ideal-simple", two_ideal);
      rec.item("item.congruence-simple", two_cong);
      rec.item("item.C1", pr.C1);
      rec.item("item.C2", pr.C2);
      rec.item("item.C2prime", pr.C2prime);
      rec.item("item.ideal-semisimple", pr.ideal_ss);
      rec.item("item.congruence-semisimple", pr.cong_ss);
      if (pin == Pin::end_lattice) {
        rec.check("pin.end.congruence-simple", two_cong.v == Verdict::holds,
                  two_cong.witness);
        rec.check("pin.end.not-ideal-simple", two_ideal.v == Verdict::fails,
                  two_ideal.witness);
        rec.fact("example.end.C2prime", pr.C2prime.v == Verdict::holds,
                 pr.C2prime.witness);
        rec.fact("example.end.not-C2", pr.C2.v == Verdict::fails,
                 pr.C2.witness);
      }
    }

    AuditReport guarded(std::string const&   name,
                        SemiringTable const& S,
                        std::function<void(Recorder&)> const& body) {
      AuditReport rep;
      rep.instance  = name;
      rep.canonical = canonical_string(S);
      Recorder rec(rep);
      try {
        body(rec);
      } catch (LimitExceeded const& e) {
        rec.add("engine.limits", "unknown", e.what(), false, true);
      } catch (CrosscheckFailure const& e) {
        rec.add("engine.crosscheck", "fails", e.what(), true, true);
      } catch (std::exception const& e) {
        rec.add("engine.error", "fails", e.what(), true, true);
      }
      return rep;
    }

  }  // namespace

  AuditReport audit_instance(std::string const&   name,
                             SemiringTable const& S,
                             AuditOptions const&  options,
                             Pin                  pin) {
    return guarded(name, S, [&](Recorder& rec) {
      full_audit(S, options, pin, rec);
    });
  }

  AuditReport audit_profile(std::string const&   name,
                            SemiringTable const& S,
                            AuditOptions const&  options,
                            Pin                  pin) {
    return guarded(name, S, [&](Recorder& rec) {
      profile_audit(S, options, pin, rec);
    });
  }

  std::vector<CorpusEntry> fixtures(Limits const& limits) {
    auto const B  = make_B(2, 1);
    auto const Z2 = make_B(2, 0);
    std::vector<CorpusEntry> out{
        {"B", B, false, Pin::none},
        {"Z2", Z2, false, Pin::none},
        {"Z3", make_B(3, 0), false, Pin::none},
        {"B(3,1)", make_B(3, 1), false, Pin::b31},
        {"B(3,2)", make_B(3, 2), false, Pin::b32},
        {"B(4,3)", make_B(4, 3), false, Pin::b_p1_p},
        {"B(6,5)", make_B(6, 5), false, Pin::b_p1_p},
        {"BxB", make_product({B, B}), false, Pin::none},
        {"BxBxB", make_product({B, B, B}), false, Pin::none},
        {"BxZ2", make_product({B, Z2}), false, Pin::none},
        {"E(M3)", make_end_semiring(diamond_lattice(), false, limits).semiring,
         true, Pin::end_lattice},
        {"E(N5)", make_end_semiring(pentagon_lattice(), false, limits).semiring,
         true, Pin::end_lattice}};
    return out;
  }

  std::vector<CorpusEntry> enumerated_corpus(std::size_t   order_bound,
                                             bool          commutative_only,
                                             Limits const& limits,
                                             bool*         exhaustive) {
    std::vector<CorpusEntry> out;
    bool                     complete = true;
    for (std::size_t order = 2; order <= order_bound; ++order) {
      auto e   = enumerate_semirings(order, commutative_only, limits);
      complete = complete && e.exhaustive;
      for (std::size_t k = 0; k < e.items.size(); ++k) {
        out.push_back({"S" + std::to_string(order) + "." + std::to_string(k + 1),
                       std::move(e.items[k]), false, Pin::none});
      }
    }
    if (exhaustive != nullptr) {
      *exhaustive = complete;
    }
    return out;
  }

  std::size_t CorpusReport::count(std::string const& verdict) const {
    std::size_t n = 0;
    for (auto const& i : instances) {
      for (auto const& r : i.records) {
        n += r.verdict == verdict;
      }
    }
    return n;
  }

  std::size_t CorpusReport::hard_failures() const {
    std::size_t n = 0;
    for (auto const& i : instances) {
      n += i.hard_failures();
    }
    return n;
  }

  CorpusReport audit_corpus(std::vector<CorpusEntry> const& entries,
                            AuditOptions const&             options) {
    CorpusReport report;
    report.instances.resize(entries.size());
    AuditOptions inner = options;
    inner.limits.threads = 1;
    auto run = [&](std::size_t i) {
      auto const& e = entries[i];
      report.instances[i]
          = e.profile_only ? audit_profile(e.name, e.semiring, inner, e.pin)
                           : audit_instance(e.name, e.semiring, inner, e.pin);
    };
    if (options.limits.threads == 1) {
      for (std::size_t i = 0; i < entries.size(); ++i) {
        run(i);
      }
    } else {
      int const threads = options.limits.threads > 0 ? options.limits.threads
                                                     : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
      for (std::size_t i = 0; i < entries.size(); ++i) {
        run(i);
      }
    }
    for (auto const& i : report.instances) {
      for (auto const& r : i.records) {
        report.exhaustive = report.exhaustive && r.exhaustive;
      }
    }
    return report;
  }

  std::string format_jsonl(CorpusReport const& report) {
    std::string out;
    for (auto const& i : report.instances) {
      for (auto const& r : i.records) {
        nlohmann::ordered_json j;
        j["instance"]   = r.instance;
        j["claim_id"]   = r.claim_id;
        j["verdict"]    = r.verdict;
        j["witness"]    = r.witness;
        j["exhaustive"] = r.exhaustive;
        out += j.dump() + "\n";
      }
    }
    return out;
  }

  std::string format_text(CorpusReport const& report) {
    std::ostringstream os;
    for (auto const& i : report.instances) {
      std::size_t holds = 0, items = 0, unknown = 0;
      for (auto const& r : i.records) {
        holds += r.hard && r.verdict == "holds";
        items += !r.hard;
        unknown += r.verdict == "unknown";
      }
      os << "instance " << i.instance << "  " << i.canonical << "\n"
         << "  hard checks holding: " << holds
         << ", hard failures: " << i.hard_failures()
         << ", discrepancies: " << i.discrepancies()
         << ", unknown: " << unknown << ", other records: " << items << "\n";
      for (auto const& r : i.records) {
        if (r.hard_failure()) {
          os << "  HARD FAILURE " << r.claim_id << ": " << r.witness << "\n";
        } else if (r.verdict == "discrepancy") {
          os << "  discrepancy " << r.claim_id << ": " << r.witness << "\n";
        } else if (r.hard && r.verdict == "unknown") {
          os << "  unknown " << r.claim_id << ": " << r.witness << "\n";
        }
      }
    }
    os << "total: " << report.instances.size() << " instances, "
       << report.hard_failures() << " hard failures, "
       << report.count("discrepancy") << " discrepancies, "
       << report.count("unknown") << " unknown, "
       << (report.exhaustive ? "exhaustive" : "not exhaustive") << "\n"
       << (report.green() ? "audit green" : "audit RED") << "\n";
    return os.str();
  }

}  // namespace semilab
