// adjquot: exact base loci, invariant section bases and 1-jet separation
// on free cyclic quotients of Fermat hypersurfaces.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adjquot/adjquot.hpp"

namespace aq = adjquot;
using json = nlohmann::ordered_json;

namespace {

int error_exit_code(aq::errc code) {
  switch (code) {
    case aq::errc::overflow_detected:
    case aq::errc::too_large:
    case aq::errc::too_many_variables:
    case aq::errc::inconclusive:
      return 1;
    default:
      return 2;  // bad input
  }
}

std::vector<int64_t> parse_weights(const std::string& s) {
  std::vector<int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  return out;
}

std::string weights_str(const std::vector<int64_t>& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

std::string pair_str(const std::array<int, 2>& p) {
  return "{" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "}";
}

json pairs_json(const std::vector<std::array<int, 2>>& pairs) {
  json a = json::array();
  for (const auto& p : pairs) a.push_back({p[0], p[1]});
  return a;
}

json supports_json(const std::vector<std::vector<int>>& supports) {
  json a = json::array();
  for (const auto& s : supports) a.push_back(s);
  return a;
}

json separation_json(const aq::SeparationReport& rep) {
  json s;
  s["pair"] = {rep.point.a, rep.point.b};
  s["rank"] = rep.rank;
  s["full_rank"] = rep.full_rank;
  s["deficiency"] = rep.deficiency;
  s["zero_columns"] = rep.zero_columns;
  s["value_column_zero"] = rep.value_column_zero;
  if (rep.predicted_direction)
    s["predicted_direction"] = *rep.predicted_direction;
  else
    s["predicted_direction"] = nullptr;
  s["predicted_degenerate"] = rep.predicted_degenerate;
  return s;
}

std::string separation_text(const aq::SeparationReport& r) {
  std::string line = "pair {" + std::to_string(r.point.a) + "," + std::to_string(r.point.b) +
                     "}: rank=" + std::to_string(r.rank) + "/" + std::to_string(r.full_rank) +
                     " deficiency=" + std::to_string(r.deficiency) + " zero_columns=[";
  for (size_t i = 0; i < r.zero_columns.size(); ++i)
    line += (i ? "," : "") + std::to_string(r.zero_columns[i]);
  line += "] value=";
  line += r.value_column_zero ? "zero" : "nonzero";
  line += " predicted=";
  if (r.predicted_degenerate)
    line += "degenerate";
  else if (r.predicted_direction)
    line += std::to_string(*r.predicted_direction);
  else
    line += "none";
  return line;
}

struct SignChoice {
  int sign = -1;
  std::string how;  // "fixed" / "auto ..." for the report header
};

SignChoice choose_sign(const std::string& opt, const aq::QuotientConfig& cfg) {
  if (opt == "+1" || opt == "1") return {+1, "fixed"};
  if (opt == "-1") return {-1, "fixed"};
  if (opt != "auto") throw CLI::ValidationError("--sign must be +1, -1 or auto");
  if (cfg.fundamental()) return {-1, "auto (fundamental case: sign invisible)"};
  aq::ConventionResolution res = aq::resolve_sign_convention(cfg.n, cfg.p);
  if (res.resolved_sign) return {*res.resolved_sign, "auto (resolved by dual oracle)"};
  return {-1, "auto (inconclusive, defaulting to -1)"};
}

void print_header(const std::string& command, const std::optional<SignChoice>& sign) {
  std::cout << "# adjquot " << aq::version << "\n";
  std::cout << "# command: " << command << "\n";
  if (sign)
    std::cout << "# sign_convention: " << (sign->sign > 0 ? "+1" : "-1") << " (" << sign->how
              << ")\n";
}

struct Options {
  int64_t p = 0;
  std::optional<int> n;
  std::optional<std::string> weights;
  std::optional<int64_t> d, c, j;
  bool as_json = false, as_tsv = false;
  int64_t cap = aq::default_enumeration_cap;
  std::string sign = "auto";
};

aq::QuotientConfig make_config(const Options& o) {
  if (o.n || o.weights) {
    if (!o.n || !o.weights)
      throw CLI::ValidationError("--n and --weights must be given together");
    return aq::validate_config(o.p, *o.n, parse_weights(*o.weights));
  }
  return aq::fundamental_config(o.p);
}

json input_echo(const std::string& command, const aq::QuotientConfig& cfg) {
  json in;
  in["command"] = command;
  in["p"] = cfg.p;
  in["n"] = cfg.n;
  in["weights"] = cfg.weights;
  return in;
}

int cmd_validate(const Options& o) {
  aq::QuotientConfig cfg = aq::validate_config(o.p, o.n.value_or(-1),
                                               parse_weights(o.weights.value_or("")));
  if (o.as_json) {
    json doc;
    doc["tool_version"] = aq::version;
    doc["input"] = input_echo("validate", cfg);
    doc["valid"] = true;
    doc["fundamental"] = cfg.fundamental();
    std::cout << doc.dump() << "\n";
  } else {
    print_header("validate p=" + std::to_string(cfg.p) + " n=" + std::to_string(cfg.n) +
                     " weights=" + weights_str(cfg.weights),
                 std::nullopt);
    std::cout << "valid config, " << (cfg.fundamental() ? "fundamental" : "general")
              << " case, " << cfg.variable_count() << " variables\n";
  }
  return 0;
}

aq::LinearizedSystem system_for(const aq::QuotientConfig& cfg, int64_t d, int64_t c) {
  aq::LinearizedSystem sys;
  sys.p = cfg.p;
  sys.degree = d;
  sys.character = aq::floormod(c, cfg.p);
  for (int i = 0; i < cfg.variable_count(); ++i)
    sys.variables.push_back({i, cfg.weights[size_t(i)]});
  return sys;
}

int cmd_basis(const Options& o, bool count_only) {
  aq::QuotientConfig cfg = make_config(o);
  aq::LinearizedSystem sys = system_for(cfg, o.d.value_or(0), o.c.value_or(0));
  int64_t count = aq::count_basis(sys);
  if (count_only) {
    if (o.as_json) {
      json doc;
      doc["tool_version"] = aq::version;
      doc["input"] = input_echo("count", cfg);
      doc["input"]["d"] = sys.degree;
      doc["input"]["c"] = sys.character;
      doc["count"] = count;
      std::cout << doc.dump() << "\n";
    } else {
      print_header("count p=" + std::to_string(cfg.p) + " d=" + std::to_string(sys.degree) +
                       " c=" + std::to_string(sys.character),
                   std::nullopt);
      std::cout << count << "\n";
    }
    return 0;
  }
  aq::SectionBasis basis = aq::enumerate_basis(sys, o.cap);
  if (o.as_json) {
    json doc;
    doc["tool_version"] = aq::version;
    doc["input"] = input_echo("basis", cfg);
    doc["input"]["d"] = sys.degree;
    doc["input"]["c"] = sys.character;
    doc["count"] = count;
    json ms = json::array();
    for (const auto& m : basis.monomials) ms.push_back(m.exponents);
    doc["monomials"] = ms;
    std::cout << doc.dump() << "\n";
  } else {
    print_header("basis p=" + std::to_string(cfg.p) + " d=" + std::to_string(sys.degree) +
                     " c=" + std::to_string(sys.character),
                 std::nullopt);
    std::cout << "count: " << count << "\n";
    for (const auto& m : basis.monomials) {
      std::string line;
      for (size_t t = 0; t < m.exponents.size(); ++t)
        if (m.exponents[t] > 0) {
          line += line.empty() ? "" : " ";
          line += "xi" + std::to_string(sys.variables[t].index);
          if (m.exponents[t] > 1) line += "^" + std::to_string(m.exponents[t]);
        }
      if (line.empty()) line = "1";
      std::cout << line << "\n";
    }
  }
  return 0;
}

int cmd_baselocus(const Options& o) {
  aq::QuotientConfig cfg = make_config(o);
  aq::LinearizedSystem sys = system_for(cfg, o.d.value_or(cfg.p - 2), o.c.value_or(0));
  auto supports = aq::base_supports(sys);
  std::vector<std::array<int, 2>> predicted;
  if (sys.degree == sys.p - 2) predicted = aq::predicted_pairs(sys);
  if (o.as_json) {
    json doc;
    doc["tool_version"] = aq::version;
    doc["input"] = input_echo("baselocus", cfg);
    doc["input"]["d"] = sys.degree;
    doc["input"]["c"] = sys.character;
    doc["base_supports"] = supports_json(supports);
    doc["predicted_pairs"] = pairs_json(predicted);
    if (sys.degree == sys.p - 2) {
      bool exact = supports.size() == predicted.size();
      for (size_t i = 0; exact && i < supports.size(); ++i)
        exact = supports[i].size() == 2 && supports[i][0] == predicted[i][0] &&
                supports[i][1] == predicted[i][1];
      doc["exact_match"] = exact;
    }
    std::cout << doc.dump() << "\n";
  } else {
    print_header("baselocus p=" + std::to_string(cfg.p) + " d=" + std::to_string(sys.degree) +
                     " c=" + std::to_string(sys.character),
                 std::nullopt);
    std::cout << "base_supports:";
    for (const auto& T : supports) {
      std::cout << " {";
      for (size_t i = 0; i < T.size(); ++i) std::cout << (i ? "," : "") << T[i];
      std::cout << "}";
    }
    std::cout << "\n";
    if (sys.degree == sys.p - 2) {
      std::cout << "predicted_pairs:";
      for (const auto& pr : predicted) std::cout << " " << pair_str(pr);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_jets(const Options& o) {
  aq::QuotientConfig cfg = make_config(o);
  aq::LinearizedSystem sys = system_for(cfg, o.d.value_or(cfg.p - 1), o.c.value_or(0));
  aq::SectionBasis basis = aq::enumerate_basis(sys, o.cap);
  json sep = json::array();
  if (!o.as_json)
    print_header("jets p=" + std::to_string(cfg.p) + " d=" + std::to_string(sys.degree) +
                     " c=" + std::to_string(sys.character),
                 std::nullopt);
  for (int a = 0; a < cfg.variable_count(); ++a)
    for (int b = a + 1; b < cfg.variable_count(); ++b) {
      aq::SeparationReport rep = aq::separation_report(basis, {a, b});
      if (o.as_json)
        sep.push_back(separation_json(rep));
      else
        std::cout << separation_text(rep) << "\n";
    }
  if (o.as_json) {
    json doc;
    doc["tool_version"] = aq::version;
    doc["input"] = input_echo("jets", cfg);
    doc["input"]["d"] = sys.degree;
    doc["input"]["c"] = sys.character;
    doc["separation"] = sep;
    std::cout << doc.dump() << "\n";
  }
  return 0;
}

int cmd_theorem1(const Options& o) {
  if (!aq::is_prime(o.p)) throw aq::error(aq::errc::not_prime, "p must be prime");
  aq::QuotientConfig cfg = aq::fundamental_config(o.p);
  std::vector<int64_t> js;
  if (o.j)
    js.push_back(aq::floormod(*o.j, o.p));
  else
    for (int64_t j = 0; j < o.p; ++j) js.push_back(j);

  SignChoice sign{-1, "auto (fundamental case: sign invisible)"};
  if (!o.as_json) print_header("theorem1 p=" + std::to_string(o.p), sign);
  bool all_match = true;
  for (int64_t j : js) {
    aq::BaseLocusReport rep = aq::theorem1_check(o.p, j);
    all_match = all_match && rep.exact_match;

    aq::DivisorClass cls;
    cls.coefficients[0] = o.p - 1;
    cls.twist = j;
    cls.canonical = 1;
    aq::SectionBasis basis = aq::enumerate_basis(aq::to_system(cfg, cls, sign.sign), o.cap);

    if (o.as_json) {
      json doc;
      doc["tool_version"] = aq::version;
      doc["input"] = input_echo("theorem1", cfg);
      doc["input"]["j"] = j;
      doc["sign_convention"] = sign.sign;
      doc["base_supports"] = supports_json(rep.base_supports);
      doc["predicted_pairs"] = pairs_json(rep.predicted_pairs);
      doc["exact_match"] = rep.exact_match;
      json sep = json::array();
      for (int a = 0; a < cfg.variable_count(); ++a)
        for (int b = a + 1; b < cfg.variable_count(); ++b)
          sep.push_back(separation_json(aq::separation_report(basis, {a, b})));
      doc["separation"] = sep;
      std::cout << doc.dump() << "\n";
    } else {
      std::cout << "j=" << j << " base_supports:";
      for (const auto& T : rep.base_supports) {
        std::cout << " {";
        for (size_t i = 0; i < T.size(); ++i) std::cout << (i ? "," : "") << T[i];
        std::cout << "}";
      }
      std::cout << " predicted:";
      for (const auto& pr : rep.predicted_pairs) std::cout << " " << pair_str(pr);
      std::cout << " exact_match=" << (rep.exact_match ? "true" : "false") << "\n";
      for (int a = 0; a < cfg.variable_count(); ++a)
        for (int b = a + 1; b < cfg.variable_count(); ++b)
          std::cout << "  j=" << j << " "
                    << separation_text(aq::separation_report(basis, {a, b})) << "\n";
    }
  }
  if (!all_match) std::cerr << "CLAIM FAILED: computed base locus differs from prediction\n";
  return all_match ? 0 : 1;
}

json theorem2_json(const aq::Theorem2BaseReport& base,
                   const std::vector<aq::Theorem2Separation>& separation, int sign) {
  json doc;
  doc["tool_version"] = aq::version;
  doc["input"] = input_echo("theorem2", base.config);
  doc["sign_convention"] = sign;
  doc["base_supports"] = supports_json(base.base.base_supports);
  doc["predicted_pairs"] = pairs_json(base.base.predicted_pairs);
  doc["exact_match"] = base.base.exact_match;
  doc["complement"] = base.complement;
  doc["k_mod_p"] = base.k_mod_p;
  doc["congruences_agree"] = base.congruences_agree;
  doc["abstract_pairs"] = pairs_json(base.abstract_pairs);
  doc["complement_pairs"] = pairs_json(base.complement_pairs);
  doc["abstract_match"] = base.abstract_match;
  doc["complement_match"] = base.complement_match;
  doc["condition_satisfied"] = base.condition_satisfied();
  json sep = json::array();
  for (const auto& s : separation) {
    json e = separation_json(s.report);
    e["k0_column_zero"] = s.k0_column_zero;
    sep.push_back(e);
  }
  doc["separation"] = sep;
  return doc;
}

int cmd_theorem2(const Options& o) {
  aq::QuotientConfig cfg = make_config(o);
  SignChoice sign = choose_sign(o.sign, cfg);
  aq::Theorem2BaseReport base = aq::theorem2_base_check(cfg, sign.sign);
  auto separation = aq::theorem2_separation_check(cfg, sign.sign);

  if (o.as_json) {
    std::cout << theorem2_json(base, separation, sign.sign).dump() << "\n";
  } else {
    print_header("theorem2 p=" + std::to_string(cfg.p) + " n=" + std::to_string(cfg.n) +
                     " weights=" + weights_str(cfg.weights),
                 sign);
    std::cout << "complement S: [";
    for (size_t i = 0; i < base.complement.size(); ++i)
      std::cout << (i ? "," : "") << base.complement[i];
    std::cout << "] k=" << base.k_mod_p << " congruences_agree="
              << (base.congruences_agree ? "true" : "false") << "\n";
    std::cout << "condition_satisfied: " << (base.condition_satisfied() ? "true" : "false")
              << "\n";
    std::cout << "base_supports:";
    for (const auto& T : base.base.base_supports) {
      std::cout << " {";
      for (size_t i = 0; i < T.size(); ++i) std::cout << (i ? "," : "") << T[i];
      std::cout << "}";
    }
    std::cout << "\npredicted_pairs:";
    for (const auto& pr : base.base.predicted_pairs) std::cout << " " << pair_str(pr);
    std::cout << " exact_match=" << (base.base.exact_match ? "true" : "false") << "\n";
    std::cout << "abstract_pairs:";
    for (const auto& pr : base.abstract_pairs) std::cout << " " << pair_str(pr);
    std::cout << " match=" << (base.abstract_match ? "true" : "false") << "\n";
    std::cout << "complement_pairs:";
    for (const auto& pr : base.complement_pairs) std::cout << " " << pair_str(pr);
    std::cout << " match=" << (base.complement_match ? "true" : "false") << "\n";
    for (const auto& s : separation)
      std::cout << "  " << separation_text(s.report)
                << " k0_column_zero=" << (s.k0_column_zero ? "true" : "false") << "\n";
  }

  if (!base.condition_satisfied()) {
    if (!o.as_json) std::cout << "note: congruence condition not satisfied by these weights\n";
    return 0;
  }
  bool deficiency_somewhere = false;
  for (const auto& s : separation) deficiency_somewhere |= s.report.deficiency >= 1;
  bool ok = !base.base.pair_base_points.empty() && deficiency_somewhere;
  if (!ok)
    std::cerr << "CLAIM FAILED: expected a base point with jet-rank deficiency; "
              << "computed facts disagree with the stated theorem\n";
  return ok ? 0 : 1;
}

int cmd_search(const Options& o) {
  if (!o.n) throw CLI::ValidationError("search requires --n");
  int64_t cap = o.cap == aq::default_enumeration_cap ? aq::default_tuple_cap : o.cap;
  if (!aq::is_prime(o.p)) throw aq::error(aq::errc::not_prime, "p must be prime");
  if (o.p > *o.n + 2 && aq::binomial_capped(o.p - 1, *o.n + 1, cap) > cap)
    throw aq::error(aq::errc::too_large, "tuple count exceeds search cap");
  // resolving the sign needs p > n+2; the fundamental boundary is reported as-is
  SignChoice sign{-1, "auto (fundamental case: sign invisible)"};
  if (o.sign != "auto" || o.p > *o.n + 2) {
    aq::QuotientConfig probe;  // only for choose_sign's fundamental test
    probe.p = o.p;
    probe.n = *o.n;
    if (o.sign == "auto") {
      aq::ConventionResolution res = aq::resolve_sign_convention(*o.n, o.p);
      sign = res.resolved_sign
                 ? SignChoice{*res.resolved_sign, "auto (resolved by dual oracle)"}
                 : SignChoice{-1, "auto (inconclusive, defaulting to -1)"};
    } else {
      sign = choose_sign(o.sign, probe);
    }
  }
  aq::SearchResult result = aq::run_search(*o.n, o.p, sign.sign, cap);

  if (o.as_json) {
    json doc;
    doc["tool_version"] = aq::version;
    doc["input"]["command"] = "search";
    doc["input"]["p"] = o.p;
    doc["input"]["n"] = *o.n;
    doc["sign_convention"] = sign.sign;
    doc["fundamental_trivial"] = result.fundamental_trivial;
    doc["tuples_scanned"] = result.tuples_scanned;
    json ts = json::array();
    for (const auto& tv : result.tuples) {
      json t;
      t["weights"] = tv.weights;
      t["abstract_congruence"] = tv.abstract_congruence;
      t["complement_congruence"] = tv.complement_congruence;
      t["base_supports"] = supports_json(tv.base.base.base_supports);
      t["predicted_pairs"] = pairs_json(tv.base.base.predicted_pairs);
      t["exact_match"] = tv.base.base.exact_match;
      json sep = json::array();
      for (const auto& s : tv.separation) {
        json e = separation_json(s.report);
        e["k0_column_zero"] = s.k0_column_zero;
        sep.push_back(e);
      }
      t["separation"] = sep;
      ts.push_back(t);
    }
    doc["tuples"] = ts;
    std::cout << doc.dump() << "\n";
    return 0;
  }

  if (o.as_tsv) {
    std::cout << "weights\tabstract\tcomplement\tbase_pairs\tzero_jet_column\n";
    for (const auto& tv : result.tuples) {
      std::cout << weights_str(tv.weights) << "\t" << tv.abstract_congruence << "\t"
                << tv.complement_congruence << "\t";
      for (size_t i = 0; i < tv.base.base.pair_base_points.size(); ++i)
        std::cout << (i ? " " : "") << pair_str(tv.base.base.pair_base_points[i]);
      std::cout << "\t" << (tv.has_zero_jet_column() ? "yes" : "no") << "\n";
    }
    return 0;
  }

  print_header("search p=" + std::to_string(o.p) + " n=" + std::to_string(*o.n), sign);
  if (result.fundamental_trivial) {
    std::cout << "p = n+2: fundamental case, trivially applicable; nothing to search\n";
    return 0;
  }
  std::cout << "tuples scanned: " << result.tuples_scanned << ", reported (shift-distinct): "
            << result.tuples.size() << "\n";
  for (const auto& tv : result.tuples) {
    std::cout << "weights=" << weights_str(tv.weights) << " base_pairs:";
    for (const auto& pr : tv.base.base.pair_base_points) std::cout << " " << pair_str(pr);
    std::cout << " zero_jet_column=" << (tv.has_zero_jet_column() ? "yes" : "no") << "\n";
    for (const auto& s : tv.separation)
      std::cout << "  " << separation_text(s.report)
                << " k0_column_zero=" << (s.k0_column_zero ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_lemmas(const Options& o) {
  bool delta_ok = aq::delta_identity_check(30);
  bool inv_ok = true;
  std::vector<int64_t> primes;
  for (int64_t q = 3; q <= 101; ++q)
    if (aq::is_prime(q)) {
      primes.push_back(q);
      inv_ok = inv_ok && aq::invariance_exponent_check(q);
    }
  std::optional<aq::ConventionResolution> res;
  if (o.p > 0 && o.n) res = aq::resolve_sign_convention(*o.n, o.p);

  if (o.as_json) {
    json doc;
    doc["tool_version"] = aq::version;
    doc["input"]["command"] = "lemmas";
    doc["delta_identity"] = delta_ok;
    doc["invariance_exponent"] = inv_ok;
    if (res) {
      doc["resolution"]["n"] = res->n;
      doc["resolution"]["p"] = res->p;
      doc["resolution"]["resolved_sign"] =
          res->resolved_sign ? json(*res->resolved_sign) : json(nullptr);
      json cands = json::array();
      for (size_t ci = 0; ci < aq::twist_candidate_names.size(); ++ci) {
        json c;
        c["twist"] = aq::twist_candidate_names[ci];
        c["survives_plus"] = res->surviving_plus[ci];
        c["survives_minus"] = res->surviving_minus[ci];
        cands.push_back(c);
      }
      doc["resolution"]["candidates"] = cands;
    }
    std::cout << doc.dump() << "\n";
  } else {
    print_header("lemmas", std::nullopt);
    std::cout << "delta_identity_check(30): " << (delta_ok ? "pass" : "FAIL") << "\n";
    std::cout << "invariance_exponent_check, primes <= 101: " << (inv_ok ? "pass" : "FAIL")
              << "\n";
    if (res) {
      std::cout << "sign resolution n=" << res->n << " p=" << res->p << ": ";
      if (res->resolved_sign)
        std::cout << (*res->resolved_sign > 0 ? "+1" : "-1") << "\n";
      else
        std::cout << "inconclusive\n";
      for (size_t ci = 0; ci < aq::twist_candidate_names.size(); ++ci)
        std::cout << "  twist " << aq::twist_candidate_names[ci]
                  << ": +1 " << (res->surviving_plus[ci] ? "survives" : "eliminated")
                  << ", -1 " << (res->surviving_minus[ci] ? "survives" : "eliminated") << "\n";
    }
  }
  return delta_ok && inv_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact adjoint-system base loci on cyclic Fermat quotients"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* sub, bool need_p) {
    auto* p = sub->add_option("--p", o.p, "prime modulus / group order");
    if (need_p) p->required();
    sub->add_flag("--json", o.as_json, "machine-readable JSON output");
    sub->add_option("--cap", o.cap, "enumeration / search cap");
  };
  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--n", [&](const std::vector<std::string>& v) {
      o.n = std::stoi(v[0]);
      return true;
    }, "quotient dimension (omit for the fundamental case)");
    sub->add_option("--weights", [&](const std::vector<std::string>& v) {
      o.weights = v[0];
      return true;
    }, "comma-separated weight tuple");
  };
  auto add_dc = [&](CLI::App* sub) {
    sub->add_option("--d", [&](const std::vector<std::string>& v) {
      o.d = std::stoll(v[0]);
      return true;
    }, "degree");
    sub->add_option("--c", [&](const std::vector<std::string>& v) {
      o.c = std::stoll(v[0]);
      return true;
    }, "character mod p");
  };
  auto add_sign = [&](CLI::App* sub) {
    sub->add_option("--sign", o.sign, "canonical character sign: +1, -1 or auto");
  };

  auto* validate = app.add_subcommand("validate", "validate a quotient configuration");
  add_common(validate, true);
  add_config(validate);

  auto* basis = app.add_subcommand("basis", "enumerate the invariant monomial basis");
  add_common(basis, true);
  add_config(basis);
  add_dc(basis);

  auto* count = app.add_subcommand("count", "count the invariant monomial basis");
  add_common(count, true);
  add_config(count);
  add_dc(count);

  auto* baselocus = app.add_subcommand("baselocus", "exact base locus by support scan");
  add_common(baselocus, true);
  add_config(baselocus);
  add_dc(baselocus);

  auto* jets = app.add_subcommand("jets", "1-jet separation reports at all x_{a,b}");
  add_common(jets, true);
  add_config(jets);
  add_dc(jets);

  auto* theorem1 = app.add_subcommand("theorem1", "verify base loci of |K+(p-2)D+jN|");
  add_common(theorem1, true);
  theorem1->add_option("--j", [&](const std::vector<std::string>& v) {
    o.j = std::stoll(v[0]);
    return true;
  }, "twist j (omit to sweep all residues)");

  auto* theorem2 = app.add_subcommand("theorem2", "verify the general-quotient claims");
  add_common(theorem2, true);
  add_config(theorem2);
  add_sign(theorem2);

  auto* search = app.add_subcommand("search", "sweep weight tuples for the congruence");
  add_common(search, true);
  add_config(search);
  add_sign(search);
  search->add_flag("--tsv", o.as_tsv, "tab-separated tuple catalog");

  auto* lemmas = app.add_subcommand("lemmas", "machine-check the proof kernels");
  add_common(lemmas, false);
  add_config(lemmas);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(o);
    if (basis->parsed()) return cmd_basis(o, false);
    if (count->parsed()) return cmd_basis(o, true);
    if (baselocus->parsed()) return cmd_baselocus(o);
    if (jets->parsed()) return cmd_jets(o);
    if (theorem1->parsed()) return cmd_theorem1(o);
    if (theorem2->parsed()) return cmd_theorem2(o);
    if (search->parsed()) return cmd_search(o);
    if (lemmas->parsed()) return cmd_lemmas(o);
  } catch (const aq::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return error_exit_code(e.code());
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
