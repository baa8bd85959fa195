#pragma once

#include <functional>

#include "su2free/congruence.hpp"
#include "su2free/freeness.hpp"

namespace su2free {

// Enumeration bounds for the verification sweeps.  theorem_bounds() returns
// the pinned bounds per theorem id.
struct Bounds {
  long long simple_p = 31;        // primes p <= this
  long long splittable_param = 12;
  long long typeI_n = 30;         // graph-family base parameter
  long long typeII_param = 10;    // type II k, l
  long long typeIII_klp = 6;      // type III k, l, p
  long long partner_cyclic = 30;  // third factor Z(m), m <= this
  long long partner_bd = 15;      // third factor BD(m), m <= this
  bool partner_exceptional = true;
};

Bounds theorem_bounds(const std::string& theorem);
const std::vector<std::string>& theorem_ids();

class Family;

struct FamilyInstance {
  const Family* fam = nullptr;
  std::vector<long long> values;  // aligned with Family::param_names()

  const std::string& family() const;
  long long get(const char* key) const;
  std::string str() const;
};

// The evaluated classification claim for one parameter tuple:
//  * table_condition is the literal condition printed in the corresponding
//    classification table row (false when the tuple falls outside the row's
//    domain);
//  * splittable_fallback is freeness of the enclosing splittable product
//    A x B x D; a subgroup of a freely acting group acts freely, and the
//    tables only list groups not already covered that way.
// The family predicate is the disjunction; it must match the oracle except
// on the shipped expected-discrepancy list.
struct Evaluation {
  bool table_condition = false;
  bool splittable_fallback = false;
  ProductGroup3 group;
  bool predicate() const { return table_condition || splittable_fallback; }
};

class Family {
 public:
  virtual ~Family() = default;
  virtual const std::string& id() const = 0;
  virtual const std::vector<std::string>& param_names() const = 0;
  virtual std::vector<FamilyInstance> enumerate(const Bounds& b) const = 0;
  virtual Evaluation evaluate(const FamilyInstance& inst) const = 0;
};

const std::vector<const Family*>& families_for(const std::string& theorem);
const Family* family_by_id(const std::string& id);
std::vector<const Family*> all_families();

// Known places where the printed classification tables disagree with the
// oracle.  Shipped as data; the verification suite requires the observed
// mismatch set to equal the set of enumerated instances matching these rules.
struct DiscrepancyRule {
  std::string id;
  std::string family;
  std::string note;
  std::function<bool(const FamilyInstance&)> matches;
};
const std::vector<DiscrepancyRule>& expected_discrepancies();
const DiscrepancyRule* matching_rule(const FamilyInstance& inst);

struct VerificationReport {
  FamilyInstance inst;
  bool predicate = false;
  bool oracle = false;
  std::optional<Witness> witness;  // oracle witness on non-free verdicts
  bool budget_exceeded = false;
  std::string rule;  // id of the matching expected-discrepancy rule
  bool mismatch() const { return !budget_exceeded && predicate != oracle; }
};

struct CrosscheckSummary {
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::size_t expected_mismatches = 0;
  std::size_t unexpected_mismatches = 0;
  std::size_t missing_expected = 0;  // rule-matching tuples that did NOT mismatch
  std::size_t budget_errors = 0;
  bool ok() const { return unexpected_mismatches == 0 && missing_expected == 0; }
};

// Evaluates every instance of every family, comparing predicate vs oracle.
// Reports stream to the sink in deterministic (family, tuple) order;
// evaluation fans out over threads (0 = hardware concurrency), the merge is
// deterministic.
using ReportSink = std::function<void(const VerificationReport&)>;
CrosscheckSummary crosscheck_stream(const std::vector<const Family*>& families,
                                    const Bounds& bounds, long long budget, unsigned threads,
                                    const ReportSink& sink);

// Convenience collector for small runs.
std::vector<VerificationReport> crosscheck(const std::vector<const Family*>& families,
                                           const Bounds& bounds,
                                           long long budget = kDefaultBudget,
                                           unsigned threads = 0);
CrosscheckSummary summarize(const std::vector<VerificationReport>& reports);

// Spec-level predicate entry points.
bool predicate_simple(long long p, long long r, long long s);
bool predicate_splittable(const std::string& row, const std::vector<long long>& params);
std::vector<std::string> splittable_row_ids();

}  // namespace su2free
