#include "su2free/classify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace su2free {

const std::string& FamilyInstance::family() const { return fam->id(); }

long long FamilyInstance::get(const char* key) const {
  const auto& names = fam->param_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == key) return values[i];
  throw DomainError(std::string("no parameter named ") + key);
}

std::string FamilyInstance::str() const {
  std::string out = fam->id() + "(";
  const auto& names = fam->param_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i] + "=" + std::to_string(values[i]);
  }
  return out + ")";
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {"simple", "main",   "typeB",
                                               "type3",  "qfinal", "qfinal2"};
  return ids;
}

Bounds theorem_bounds(const std::string& theorem) {
  Bounds b;
  if (theorem == "simple") {
    b.simple_p = 31;
  } else if (theorem == "main") {
    b.splittable_param = 12;
  } else if (theorem == "typeB") {
    b.typeI_n = 30;
    b.partner_cyclic = 30;
    b.partner_bd = 15;
  } else if (theorem == "type3") {
    b.typeII_param = 10;
    b.partner_cyclic = 10;
    b.partner_bd = 10;
  } else if (theorem == "qfinal" || theorem == "qfinal2") {
    b.typeIII_klp = 6;
    b.partner_cyclic = 30;
    b.partner_bd = 15;
  } else {
    throw DomainError("unknown theorem id: " + theorem);
  }
  return b;
}

namespace {

long long mpos(long long a, long long m) {
  a %= m;
  return a < 0 ? a + m : a;
}
bool no235(long long x) { return x % 2 != 0 && x % 3 != 0 && x % 5 != 0; }

}  // namespace

const std::vector<DiscrepancyRule>& expected_discrepancies() {
  static const std::vector<DiscrepancyRule> rules = [] {
    std::vector<DiscrepancyRule> r;

    // Gamma(psi, 2I) x Z_n is printed with the condition "3 does not divide
    // n" only; since -1 lies in the coincidence set of the outer
    // automorphism, even n never acts freely.
    r.push_back({"typeB-gamma2I-even-n", "typeB:gammaE",
                 "graph of the 2I outer automorphism needs n odd, the table only excludes 3 | n",
                 [](const FamilyInstance& i) {
                   return i.get("ek") == 4 && i.get("mode") == 0 && i.get("dk") == 0 &&
                          i.get("dm") % 2 == 0 && i.get("dm") % 3 != 0;
                 }});

    // The k1 > 1 / k2 > 1 tables print "2,3,5 does not divide k_1" in the
    // no/yes row for B = 2I; the correct quantity is k_2.
    r.push_back({"typeB-pow-2I-k1-typo", "typeB:pow",
                 "no/yes row, B = 2I: the printed condition tests k1 instead of k2",
                 [](const FamilyInstance& i) {
                   long long n = i.get("n"), rr = i.get("r");
                   if (rr == 1 || rr == n - 1) return false;
                   long long k1 = std::gcd(mpos(1 + rr, n), n);
                   long long k2 = std::gcd(mpos(1 - rr, n), n);
                   return i.get("dk") == 4 && k1 == 1 && k2 > 1 && !no235(k2);
                 }});
    r.push_back({"type3-Zkl-2I-k1-typo", "type3:Zkl-Zk",
                 "no/yes row, D = 2I: the printed condition tests k1 instead of k2",
                 [](const FamilyInstance& i) {
                   long long k = i.get("k"), l = i.get("l"), rr = i.get("r");
                   long long kl = k * l;
                   long long lr = mpos(l * rr, kl);
                   if (lr == 1 || lr == kl - 1) return false;
                   long long k1 = std::gcd(mpos(1 + l * rr, kl), kl);
                   long long k2 = std::gcd(mpos(1 - l * rr, kl), kl);
                   return i.get("dk") == 4 && k1 == 1 && k2 > 1 && !no235(k2);
                 }});

    // The splittable table groups Z_n x BD_{2m} x 2I with the 2T/2O rows
    // under "2,3 do not divide gcd(n, 2m)"; golden-ratio real parts force a
    // 5-divisibility condition as well (compare the Z_n x Z_m x 2I row).
    r.push_back({"main-BD-2I-missing-5", "main:Zn.BDm.2I",
                 "condition misses 5 | gcd(n, 2m); cos(2 pi/5) is common to both factors",
                 [](const FamilyInstance& i) {
                   long long g = std::gcd(i.get("n"), 2 * i.get("m"));
                   return g % 2 != 0 && g % 3 != 0 && g % 5 == 0;
                 }});

    // G(Z_{2(2k+1)}, Z_{2k+1}, 2D_{4p}, 2D_{2p}, id) x D: the claimed element
    // -1 of W(C) is not there (-1 sits over the nontrivial coset on one side
    // and inside the kernel on the other), so W(C) = {1} u Re(Z_g) with
    // g = gcd(2k+1, p), and groups beyond splittable containment act freely.
    r.push_back({"qfinal-g-missing-groups", "qfinal:g",
                 "freely acting groups exist although the theorem derives none",
                 [](const FamilyInstance& i) {
                   long long g = std::gcd(2 * i.get("k") + 1, i.get("p"));
                   int dk = static_cast<int>(i.get("dk"));
                   long long m = i.get("dm");
                   bool oracle_free;
                   switch (dk) {
                     case 0: oracle_free = std::gcd(g, m) == 1; break;
                     case 1: oracle_free = std::gcd(g, 2 * m) == 1; break;
                     case 2:
                     case 3: oracle_free = g % 3 != 0; break;
                     default: oracle_free = g % 3 != 0 && g % 5 != 0; break;
                   }
                   bool fallback = dk == 0 && m % 2 != 0 && std::gcd(g, m) == 1;
                   return oracle_free && !fallback;
                 }});
    return r;
  }();
  return rules;
}

const DiscrepancyRule* matching_rule(const FamilyInstance& inst) {
  for (const auto& rule : expected_discrepancies())
    if (rule.family == inst.family() && rule.matches(inst)) return &rule;
  return nullptr;
}

namespace {

VerificationReport evaluate_instance(const FamilyInstance& inst, long long budget) {
  VerificationReport rep;
  rep.inst = inst;
  Evaluation ev = inst.fam->evaluate(inst);
  rep.predicate = ev.predicate();
  try {
    FreeVerdict v = is_free(ev.group, budget);
    rep.oracle = v.free;
    rep.witness = std::move(v.witness);
  } catch (const BudgetError&) {
    rep.budget_exceeded = true;
  }
  if (const DiscrepancyRule* rule = matching_rule(inst)) rep.rule = rule->id;
  return rep;
}

void account(const VerificationReport& rep, CrosscheckSummary& sum) {
  ++sum.instances;
  if (rep.budget_exceeded) {
    ++sum.budget_errors;
    return;
  }
  bool expected = !rep.rule.empty();
  if (rep.mismatch()) {
    ++sum.mismatches;
    if (expected)
      ++sum.expected_mismatches;
    else
      ++sum.unexpected_mismatches;
  } else if (expected) {
    ++sum.missing_expected;
  }
}

}  // namespace

CrosscheckSummary crosscheck_stream(const std::vector<const Family*>& families,
                                    const Bounds& bounds, long long budget, unsigned threads,
                                    const ReportSink& sink) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  CrosscheckSummary sum;
  for (const Family* fam : families) {
    std::vector<FamilyInstance> instances = fam->enumerate(bounds);
    if (threads <= 1 || instances.size() < 2048) {
      for (const auto& inst : instances) {
        VerificationReport rep = evaluate_instance(inst, budget);
        account(rep, sum);
        if (sink) sink(rep);
      }
      continue;
    }
    std::vector<VerificationReport> reports(instances.size());
    std::atomic<std::size_t> next{0};
    const std::size_t chunk = 256;
    auto worker = [&] {
      for (;;) {
        std::size_t begin = next.fetch_add(chunk);
        if (begin >= instances.size()) return;
        std::size_t end = std::min(begin + chunk, instances.size());
        for (std::size_t i = begin; i < end; ++i)
          reports[i] = evaluate_instance(instances[i], budget);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& rep : reports) {
      account(rep, sum);
      if (sink) sink(rep);
    }
  }
  return sum;
}

std::vector<VerificationReport> crosscheck(const std::vector<const Family*>& families,
                                           const Bounds& bounds, long long budget,
                                           unsigned threads) {
  std::vector<VerificationReport> out;
  crosscheck_stream(families, bounds, budget, threads,
                    [&](const VerificationReport& rep) { out.push_back(rep); });
  return out;
}

CrosscheckSummary summarize(const std::vector<VerificationReport>& reports) {
  CrosscheckSummary sum;
  for (const auto& rep : reports) account(rep, sum);
  return sum;
}

}  // namespace su2free
