//
// semilab - finite semirings, semimodules and their structure theory
//

// Claim identifiers:
//   item.<chain>.(k)         value of item k of a chain; "fails" only means
//                            the item is false on this instance
//   prop-proj-impl.k=>l,     one-directional implications; a "fails" verdict
//   prop-sum-einj.k=>l, ...  is a hard failure
//   thm-<name>.(i)<=>(j)     pairwise equivalences; disagreement is reported
//                            with verdict "discrepancy" and never fails
//   lemma-*, cor-*, rem-*,   lemma and remark checks; hard
//   pin.*                    regression pins of named examples; hard
//   example.*                further claims about named examples, recorded
//                            as computed; never fails the audit
//   engine.*                 errors raised by the engine itself; hard

#ifndef SEMILAB_AUDITOR_HPP_
#define SEMILAB_AUDITOR_HPP_

#include <string>  // for string
#include <vector>  // for vector

#include "limits.hpp"  // for Limits, Enumeration
#include "tables.hpp"  // for SemiringTable

namespace semilab {

  //! All semirings of the given order up to isomorphism, in canonical order.
  //! Uses the serial kernel when limits.threads == 1.
  Enumeration<SemiringTable> enumerate_semirings(std::size_t   order,
                                                 bool          commutative_only,
                                                 Limits const& limits);

  struct ClaimRecord {
    std::string instance;
    std::string claim_id;
    //! holds, fails, unknown, discrepancy or skipped.
    std::string verdict;
    std::string witness;
    bool        exhaustive = true;
    bool        hard       = false;

    bool hard_failure() const noexcept {
      return hard && verdict == "fails";
    }
  };

  struct AuditReport {
    std::string              instance;
    std::string              canonical;
    std::vector<ClaimRecord> records;

    std::size_t hard_failures() const;
    std::size_t discrepancies() const;
  };

  //! Regression pins attached to the named examples.
  enum class Pin { none, b31, b_p1_p, b32, end_lattice };

  struct AuditOptions {
    Limits limits;
    //! Run the lemma suite on S and on all its subobjects and quotients.
    bool lemmas = true;
  };

  //! Every chain, theorem and lemma check on one semiring.
  AuditReport audit_instance(std::string const&   name,
                             SemiringTable const& S,
                             AuditOptions const&  options,
                             Pin                  pin = Pin::none);

  //! Simplicity, C1/C2/C2' and semisimplicity only; used for semirings too
  //! large for the full audit.
  AuditReport audit_profile(std::string const&   name,
                            SemiringTable const& S,
                            AuditOptions const&  options,
                            Pin                  pin = Pin::none);

  struct CorpusEntry {
    std::string   name;
    SemiringTable semiring;
    bool          profile_only = false;
    Pin           pin          = Pin::none;
  };

  //! The named examples: B, Z2, Z3, B(3,1), B(3,2), B(4,3), B(6,5), BxB,
  //! BxBxB, BxZ2 and the endomorphism semirings of the diamond and the
  //! pentagon (profile only).
  std::vector<CorpusEntry> fixtures(Limits const& limits);

  //! Enumerated semirings of orders 2 .. order_bound, named "S<order>.<k>".
  std::vector<CorpusEntry> enumerated_corpus(std::size_t   order_bound,
                                             bool          commutative_only,
                                             Limits const& limits,
                                             bool*         exhaustive = nullptr);

  struct CorpusReport {
    std::vector<AuditReport> instances;
    bool                     exhaustive = true;

    std::size_t count(std::string const& verdict) const;
    std::size_t hard_failures() const;
    bool        green() const {
      return hard_failures() == 0;
    }
  };

  //! Audits the entries, in parallel over entries when
  //! options.limits.threads != 1; the report keeps the input order.
  CorpusReport audit_corpus(std::vector<CorpusEntry> const& entries,
                            AuditOptions const&             options);

  //! One JSON object per line: instance, claim_id, verdict, witness,
  //! exhaustive.
  std::string format_jsonl(CorpusReport const& report);

  //! Human-readable summary: per instance counts, every hard failure and
  //! discrepancy with its witness, and the totals.
  std::string format_text(CorpusReport const& report);

}  // namespace semilab

#endif  // SEMILAB_AUDITOR_HPP_
