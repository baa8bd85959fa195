#include "su2free/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "su2free/textio.hpp"

namespace su2free {

namespace {

using nlohmann::json;

json witness_json(const Witness& w) {
  return json::array({w.els[0].str(), w.els[1].str(), w.els[2].str()});
}

json report_json(const VerificationReport& rep) {
  json j;
  j["family"] = rep.inst.family();
  json params = json::object();
  const auto& names = rep.inst.fam->param_names();
  for (std::size_t i = 0; i < names.size(); ++i) params[names[i]] = rep.inst.values[i];
  j["params"] = params;
  if (rep.budget_exceeded) {
    j["error"] = "budget";
    return j;
  }
  j["predicate"] = rep.predicate;
  j["oracle"] = rep.oracle;
  if (rep.witness) j["witness"] = witness_json(*rep.witness);
  if (rep.mismatch()) j["mismatch"] = true;
  if (!rep.rule.empty()) j["expected"] = rep.rule;
  return j;
}

std::string report_text(const VerificationReport& rep) {
  std::string out = rep.inst.str();
  if (rep.budget_exceeded) return out + "  ERROR budget";
  out += rep.predicate ? "  predicate=free" : "  predicate=non-free";
  out += rep.oracle ? " oracle=free" : " oracle=non-free";
  if (rep.mismatch()) out += rep.rule.empty() ? "  MISMATCH" : "  MISMATCH(expected:" + rep.rule + ")";
  if (rep.witness) out += "  witness=" + rep.witness->str();
  return out;
}

int run_check(const std::string& spec_text, long long budget, bool records, std::ostream& out) {
  ProductGroup3 g = parse_product_spec(spec_text);
  FreeVerdict v = is_free(g, budget);
  if (records) {
    json j;
    j["spec"] = g.str();
    j["free"] = v.free;
    j["order"] = g.order();
    if (v.witness) j["witness"] = witness_json(*v.witness);
    out << j.dump() << "\n";
  } else {
    out << g.str() << ": order " << g.order() << ", " << (v.free ? "acts freely" : "does not act freely")
        << "\n";
    if (v.witness) out << "witness: " << v.witness->str() << "\n";
  }
  return v.free ? 0 : 3;
}

void print_tables(std::ostream& out, long long sample_n) {
  out << "# Finite subgroups of SU(2)\n";
  out << "label\tname\torder\tverified\n";
  struct Row {
    const char* label;
    AdeKind kind;
  };
  std::vector<Row> rows = {
      {"A", AdeKind::cyclic(sample_n)},
      {"D", AdeKind::binary_dihedral(sample_n)},
      {"E6", AdeKind::tetrahedral()},
      {"E7", AdeKind::octahedral()},
      {"E8", AdeKind::icosahedral()},
  };
  for (const auto& row : rows) {
    auto g = build_group(row.kind);
    g->verify_closure();
    out << row.label << "\t" << row.kind.str() << "\t" << g->order() << "\tclosed\n";
  }
  out << "\n# Real parts of elements in ADE groups\n";
  for (const auto& row : rows) {
    auto g = build_group(row.kind);
    out << row.kind.str() << "\t" << format_realpart_set(g->real_part_set()) << "\n";
  }
  for (const char* name : {"2O", "2I"}) {
    auto g = build_group(parse_group_desc(name));
    out << "\n# Conjugacy classes in " << name << "\n";
    out << "representative\tsize\treal part\n";
    auto classes = conjugacy_classes(*g);
    std::sort(classes.begin(), classes.end(), [&](const ConjClass& a, const ConjClass& b) {
      if (a.size != b.size) return a.size < b.size;
      return g->quat(a.rep) < g->quat(b.rep);
    });
    int total = 0;
    for (const auto& c : classes) {
      out << g->label(c.rep) << "\t" << c.size << "\t" << g->re(c.rep).unified().str() << "\n";
      total += c.size;
    }
    out << "classes: " << classes.size() << ", sizes sum to " << total << "\n";
  }
}

int run_lemma(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  if (argv.empty()) {
    err << "lemma subcommands: solve a b c | neg n r | coslattice n m | res n residue sign |"
           " simple p r s\n";
    return 2;
  }
  auto arg = [&](std::size_t i) -> long long {
    if (i >= argv.size()) throw ParseError("missing integer argument", i);
    return std::stoll(argv[i]);
  };
  const std::string& sub = argv[0];
  if (sub == "solve") {
    auto s = solve_linear(arg(1), arg(2), arg(3));
    if (!s) {
      out << "unsolvable\n";
      return 0;
    }
    out << "(x,y) = (" << s->x0 << "," << s->y0 << ") + t*(" << s->step_x << "," << s->step_y
        << ")\n";
    return 0;
  }
  if (sub == "neg") {
    long long n1 = neg_congruence(arg(1), arg(2));
    out << "solution set of x = -r x (mod n): " << n1 << "*Z\n";
    return 0;
  }
  if (sub == "coslattice") {
    auto c = cos_equality_lattice(arg(1), arg(2));
    out << "k=" << c.k << " n1=" << c.n1 << " m1=" << c.m1
        << "; solutions {(n q + e*l*n1, l*m1) : q,l in Z, e = +-1}\n";
    return 0;
  }
  if (sub == "res") {
    bool ok = res_solvable(arg(1), static_cast<int>(arg(2)), static_cast<int>(arg(3)));
    out << (ok ? "solvable" : "not solvable") << "\n";
    return 0;
  }
  if (sub == "simple") {
    bool ok = simple_system_trivial_only(arg(1), arg(2), arg(3));
    out << (ok ? "only the trivial solution" : "has nontrivial solutions") << "\n";
    return 0;
  }
  err << "unknown lemma subcommand '" << sub << "'\n";
  return 2;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classification of finite subgroups of SU(2)^3 acting freely on S^3 x S^3"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "records"}));
  long long budget = kDefaultBudget;
  app.add_option("--budget", budget, "Element-triple budget for the freeness oracle");

  // check
  auto* check = app.add_subcommand("check", "Decide whether a group acts freely");
  std::vector<std::string> spec_words;
  std::string spec_file;
  check->add_option("spec", spec_words, "Inline specification, e.g. Z(7) x 2I x 2I");
  check->add_option("--file", spec_file, "Read the specification from a file");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate family instances with verdicts");
  std::string family_filter;
  long long max_param = 0;
  std::string kinds_csv;
  enumerate->add_option("--family", family_filter, "Family id or theorem id")->required();
  enumerate->add_option("--bounds", max_param, "Cap for all enumeration parameters");
  enumerate->add_option("--kinds", kinds_csv,
                        "Restrict splittable rows to factor kinds (comma separated: Z,BD,2T,2O,2I)");

  // verify
  auto* verify = app.add_subcommand("verify", "Cross-check a classification theorem");
  std::string theorem;
  std::string out_path;
  unsigned threads = 0;
  long long verify_max = 0;
  verify->add_option("--theorem", theorem, "simple|main|typeB|type3|qfinal|qfinal2")->required();
  verify->add_option("--out", out_path, "Write the report stream to this file");
  verify->add_option("--threads", threads, "Worker threads (0 = auto)");
  verify->add_option("--bounds", verify_max, "Override enumeration bounds");

  // tables
  auto* tables = app.add_subcommand("tables", "Regenerate the catalog tables");
  long long sample_n = 12;
  tables->add_option("--n", sample_n, "Parameter used for the cyclic/dihedral rows");

  // lemma
  auto* lemma = app.add_subcommand("lemma", "Integer lemma calculators");
  std::vector<std::string> lemma_args;
  lemma->add_option("args", lemma_args, "subcommand and integers");
  lemma->positionals_at_end();

  std::vector<std::string> argv_r(args.rbegin(), args.rend());
  try {
    app.parse(argv_r);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  bool records = format == "records";
  try {
    if (check->parsed()) {
      std::string text;
      if (!spec_file.empty()) {
        std::ifstream in(spec_file);
        if (!in) {
          err << "cannot open " << spec_file << "\n";
          return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      } else {
        for (const auto& w : spec_words) {
          if (!text.empty()) text += " ";
          text += w;
        }
      }
      return run_check(text, budget, records, out);
    }

    if (enumerate->parsed()) {
      std::vector<const Family*> fams;
      Bounds bounds;
      bool is_theorem =
          std::find(theorem_ids().begin(), theorem_ids().end(), family_filter) != theorem_ids().end();
      if (is_theorem) {
        fams = families_for(family_filter);
        bounds = theorem_bounds(family_filter);
      } else if (const Family* f = family_by_id(family_filter)) {
        fams = {f};
        for (const auto& t : theorem_ids())
          for (const Family* g : families_for(t))
            if (g == f) bounds = theorem_bounds(t);
      } else {
        err << "unknown family '" << family_filter << "'\n";
        return 2;
      }
      if (max_param > 0) {
        bounds.splittable_param = std::min(bounds.splittable_param, max_param);
        bounds.typeI_n = std::min(bounds.typeI_n, max_param);
        bounds.typeII_param = std::min(bounds.typeII_param, max_param);
        bounds.typeIII_klp = std::min(bounds.typeIII_klp, max_param);
        bounds.partner_cyclic = std::min(bounds.partner_cyclic, max_param);
        bounds.partner_bd = std::min(bounds.partner_bd, max_param);
        bounds.simple_p = std::min(bounds.simple_p, max_param);
      }
      if (!kinds_csv.empty()) {
        std::set<std::string> kinds;
        std::stringstream ss(kinds_csv);
        std::string item;
        while (std::getline(ss, item, ',')) kinds.insert(item);
        bounds.partner_exceptional = kinds.count("2T") || kinds.count("2O") || kinds.count("2I");
        std::vector<const Family*> filtered;
        for (const Family* f : fams) {
          const std::string& id = f->id();
          bool keep = true;
          if (id.rfind("main:", 0) == 0) {
            keep = (id.find("2T") == std::string::npos || kinds.count("2T")) &&
                   (id.find("2O") == std::string::npos || kinds.count("2O")) &&
                   (id.find("2I") == std::string::npos || kinds.count("2I")) &&
                   (id.find("BD") == std::string::npos || kinds.count("BD"));
          }
          if (keep) filtered.push_back(f);
        }
        fams = std::move(filtered);
      }
      for (const Family* f : fams) {
        for (const auto& inst : f->enumerate(bounds)) {
          VerificationReport rep;
          rep.inst = inst;
          Evaluation ev = f->evaluate(inst);
          rep.predicate = ev.predicate();
          try {
            FreeVerdict v = is_free(ev.group, budget);
            rep.oracle = v.free;
            rep.witness = std::move(v.witness);
          } catch (const BudgetError&) {
            rep.budget_exceeded = true;
          }
          if (const DiscrepancyRule* rule = matching_rule(inst)) rep.rule = rule->id;
          out << (records ? report_json(rep).dump() : report_text(rep)) << "\n";
        }
      }
      return 0;
    }

    if (verify->parsed()) {
      Bounds bounds = theorem_bounds(theorem);
      if (verify_max > 0) {
        bounds.splittable_param = std::min(bounds.splittable_param, verify_max);
        bounds.typeI_n = std::min(bounds.typeI_n, verify_max);
        bounds.typeII_param = std::min(bounds.typeII_param, verify_max);
        bounds.typeIII_klp = std::min(bounds.typeIII_klp, verify_max);
        bounds.partner_cyclic = std::min(bounds.partner_cyclic, verify_max);
        bounds.partner_bd = std::min(bounds.partner_bd, verify_max);
        bounds.simple_p = std::min(bounds.simple_p, verify_max);
      }
      std::ofstream file;
      std::ostream* sink_stream = &out;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
          err << "cannot open " << out_path << "\n";
          return 2;
        }
        sink_stream = &file;
      }
      ReportSink sink = [&](const VerificationReport& rep) {
        *sink_stream << (records ? report_json(rep).dump() : report_text(rep)) << "\n";
      };
      CrosscheckSummary sum =
          crosscheck_stream(families_for(theorem), bounds, budget, threads, sink);
      out << "instances=" << sum.instances << " mismatches=" << sum.mismatches
          << " expected=" << sum.expected_mismatches
          << " unexpected=" << sum.unexpected_mismatches
          << " missing-expected=" << sum.missing_expected
          << " budget-errors=" << sum.budget_errors << "\n";
      if (!sum.ok()) return 5;
      return 0;
    }

    if (tables->parsed()) {
      print_tables(out, sample_n);
      return 0;
    }

    if (lemma->parsed()) return run_lemma(lemma_args, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace su2free
