#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "etalab/congruence.hpp"
#include "etalab/eta.hpp"
#include "etalab/identities.hpp"
#include "etalab/oracle.hpp"
#include "etalab/report_json.hpp"
#include "etalab/sequences.hpp"

namespace etalab::cli {

namespace {

enum class Format { Text, Json };

struct RunConfig {
  long order = 500;
  long kmax = 8;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accumulates reports in order and derives the exit code.
class ReportStream {
 public:
  explicit ReportStream(Format format) : format_(format) {}

  void add(const IdentityReport& r) {
    std::ostringstream line;
    line << to_string(r.status) << "  " << to_string(r.id) << "  order=" << r.order;
    if (r.witness) {
      line << "  witness: q^" << r.witness->exponent << " lhs=" << r.witness->lhs.get_str()
           << " rhs=" << r.witness->rhs.get_str();
    }
    push(r.status, line.str(), to_json(r));
  }

  void add(const VerificationReport& r) {
    std::ostringstream line;
    line << to_string(r.status) << "  " << r.claim << "  order=" << r.order;
    if (r.points() > 0) line << "  n=" << r.n_lo << ".." << r.n_hi << " (" << r.points() << (r.points() == 1 ? " value)" : " values)");
    if (r.counterexample) {
      line << "  counterexample: n=" << r.counterexample->n << " value=" << r.counterexample->value.get_str();
      if (r.counterexample->expected) line << " expected=" << r.counterexample->expected->get_str();
      line << " v2=" << valuation_string(r.counterexample->valuation);
    }
    if (!r.note.empty()) line << "  [" << r.note << "]";
    push(r.status, line.str(), to_json(r));
  }

  void add(const SequenceCheck& r) {
    std::ostringstream line;
    const auto status = r.passed ? Status::Pass : Status::Fail;
    line << to_string(status) << "  " << r.description;
    if (!r.detail.empty()) line << "  [" << r.detail << "]";
    push(status, line.str(), to_json(r));
  }

  int finish(std::ostream& out) const {
    if (format_ == Format::Json) {
      out << json_.dump(2) << '\n';
    } else {
      for (const auto& l : lines_) out << l << '\n';
    }
    if (failed_) return kFailed;
    if (insufficient_) return kInsufficientPrecision;
    return kOk;
  }

 private:
  void push(Status s, std::string line, nlohmann::json j) {
    failed_ = failed_ || s == Status::Fail;
    insufficient_ = insufficient_ || s == Status::InsufficientPrecision;
    lines_.push_back(std::move(line));
    json_.push_back(std::move(j));
  }

  Format format_;
  std::vector<std::string> lines_;
  nlohmann::json json_ = nlohmann::json::array();
  bool failed_ = false;
  bool insufficient_ = false;
};

const std::vector<GeneratingTarget> kDissectionTargets{GeneratingTarget::M, GeneratingTarget::TSTAR,
                                                       GeneratingTarget::PSTAR};

// Largest k in [first, kmax] such that every group first..k has all of its
// claims reachable below the order; nullopt if even `first` is out of reach.
std::optional<long> reachable_cap(long first, long kmax, long order,
                                  const std::function<std::vector<CongruenceClaim>(long)>& group) {
  std::optional<long> cap;
  for (long k = first; k <= kmax; ++k) {
    const auto claims = group(k);
    if (!std::all_of(claims.begin(), claims.end(), [&](const auto& c) { return reachable(c, order); })) break;
    cap = k;
  }
  return cap;
}

void note_cap(std::ostream& err, const char* theorem, long first, long kmax, std::optional<long> cap, long order) {
  const long last_checked = cap ? *cap : first - 1;
  if (last_checked < kmax) {
    err << "note: theorem " << theorem << " levels k=" << last_checked + 1 << ".." << kmax
        << " have no coefficient below order " << order << " and were not checked\n";
  }
}

// Dissection levels whose progression has at least one coefficient below N.
long dissection_cap(long kmax, long order) {
  long k = 0;
  while (k < kmax && k < 60 && (1L << (k + 1)) - 1 < order) ++k;
  return k;
}

void theorem_3_1(ReportStream& s, const RunConfig& cfg, TargetCache& cache) {
  for (auto t : kDissectionTargets) {
    for (long k = 1; k <= cfg.kmax; ++k) s.add(verify_dissection({t, k}, cfg.order, cache));
    for (long k = 1; k < cfg.kmax; ++k) s.add(verify_induction_step({t, k}, cfg.order));
  }
}

// `dissections` adds the supporting generating-function checks; `verify all`
// already runs them through theorem_3_1.
void theorem_1_1(ReportStream& s, const RunConfig& cfg, TargetCache& cache, std::ostream& err, bool dissections) {
  s.add(verify_valuations(std::max(2L, cfg.kmax)));
  if (dissections) {
    const long levels = dissection_cap(cfg.kmax, cfg.order);
    for (auto t : {GeneratingTarget::M, GeneratingTarget::TSTAR}) {
      for (long k = 1; k <= levels; ++k) s.add(verify_dissection({t, k}, cfg.order, cache));
    }
  }
  const auto cap = reachable_cap(1, cfg.kmax, cfg.order, mt_congruences);
  note_cap(err, "1.1", 1, cfg.kmax, cap, cfg.order);
  if (!cap) {
    for (const auto& c : mt_congruences(1)) s.add(verify_congruence(c, cfg.order, cache));
    return;
  }
  for (long k = 1; k <= *cap; ++k) {
    for (const auto& c : mt_congruences(k)) s.add(verify_congruence(c, cfg.order, cache));
  }
}

void theorem_1_2(ReportStream& s, const RunConfig& cfg, TargetCache& cache, std::ostream& err, bool dissections) {
  const auto cap = reachable_cap(0, cfg.kmax, cfg.order, pstar_congruences);
  note_cap(err, "1.2", 0, cfg.kmax, cap, cfg.order);
  const long groups = cap ? *cap : 0;
  s.add(verify_closed_forms(std::max(8L, 4 * groups + 4)));
  if (dissections) {
    const long levels = dissection_cap(4 * groups + 3, cfg.order);
    for (long k = 1; k <= levels; ++k) s.add(verify_dissection({GeneratingTarget::PSTAR, k}, cfg.order, cache));
  }
  for (long k = 0; k <= groups; ++k) {
    for (const auto& c : pstar_congruences(k)) s.add(verify_congruence(c, cfg.order, cache));
    s.add(verify_zero_family_structurally(k, cfg.order, cache));
  }
}

Format parse_format(const std::string& f) {
  if (f == "text") return Format::Text;
  if (f == "json") return Format::Json;
  throw UsageError("unknown format '" + f + "' (expected text or json)");
}

EtaQuotient parse_expr(const std::string& expr, std::ostream& err) {
  try {
    return EtaQuotient::parse(expr);
  } catch (const EtaParseError& e) {
    err << "parse error: " << e.what() << "\n  " << expr << "\n  " << std::string(e.position(), ' ') << "^\n";
    throw UsageError("invalid eta-quotient expression");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series laboratory for eta quotients and 2-power partition congruences", "etalab"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text";

  std::string expr;
  long step = 0;
  long residue = 0;
  long order = 500;

  auto* expand_cmd = app.add_subcommand("expand", "Print the series dump of an eta quotient");
  expand_cmd->add_option("expr", expr, "Eta quotient, e.g. f1^-1*f2^5*f5^5*f10^-1")->required();
  expand_cmd->add_option("--order", order, "Truncation order");

  auto* dissect_cmd = app.add_subcommand("dissect", "Print coefficients a(step*n + residue) of an eta quotient");
  dissect_cmd->add_option("expr", expr, "Eta quotient")->required();
  dissect_cmd->add_option("step", step, "Progression step")->required();
  dissect_cmd->add_option("residue", residue, "Progression residue")->required();
  dissect_cmd->add_option("--order", order, "Truncation order");

  std::string family = "C";
  long seq_kmax = 16;
  auto* seq_cmd = app.add_subcommand("sequences", "Print k, value, v2 for a recurrence family");
  seq_cmd->add_option("--family", family, "A, B or C");
  seq_cmd->add_option("--kmax", seq_kmax, "Largest index");
  seq_cmd->add_option("--format", format, "text or json");

  std::string id;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->require_subcommand(1);
  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--order", cfg.order, "Truncation order (>= 16)");
    cmd->add_option("--kmax", cfg.kmax, "Largest level k (>= 1)");
    cmd->add_option("--format", format, "text or json");
  };
  auto* verify_all = verify_cmd->add_subcommand("all", "Identities, dissections, congruences and sequences");
  add_run_flags(verify_all);
  auto* verify_identity_cmd = verify_cmd->add_subcommand("identity", "One catalog identity");
  verify_identity_cmd->add_option("--id", id, "Identity id, e.g. EQ27")->required();
  add_run_flags(verify_identity_cmd);
  auto* verify_theorem = verify_cmd->add_subcommand("theorem", "Congruence theorem 1.1 or 1.2, or dissections 3.1");
  verify_theorem->add_option("--id", id, "1.1, 1.2 or 3.1")->required();
  add_run_flags(verify_theorem);

  auto* oracle_cmd = app.add_subcommand("oracle", "Independent recomputation checks");
  oracle_cmd->require_subcommand(1);
  auto* cross = oracle_cmd->add_subcommand("cross-check", "Compare the pipeline against brute-force products");
  cross->add_option("--order", order, "Truncation order (>= 16)");
  cross->add_option("--format", format, "text or json");

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*expand_cmd) {
      if (order < 1) throw UsageError("--order must be >= 1");
      write_dump(out, expand_quotient(parse_expr(expr, err), order));
      return kOk;
    }
    if (*dissect_cmd) {
      if (step < 1) throw UsageError("step must be >= 1");
      if (order < 1) throw UsageError("--order must be >= 1");
      const auto q = parse_expr(expr, err);
      try {
        write_dump(out, extract(expand_quotient(q, order), step, residue));
      } catch (const SeriesError& e) {
        err << "error: " << e.what() << '\n';
        return kInsufficientPrecision;
      }
      return kOk;
    }
    if (*seq_cmd) {
      const auto fmt = parse_format(format);
      Family f;
      if (family == "A") f = Family::A;
      else if (family == "B") f = Family::B;
      else if (family == "C") f = Family::C;
      else throw UsageError("unknown family '" + family + "' (expected A, B or C)");
      if (seq_kmax < 0) throw UsageError("--kmax must be >= 0");
      auto rows = nlohmann::json::array();
      for (long k = 0; k <= seq_kmax; ++k) {
        const auto v = seq_value(f, k);
        const auto val = valuation_string(two_adic_valuation(v));
        if (fmt == Format::Json) {
          rows.push_back({{"k", k}, {"value", v.get_str()}, {"v2", val}});
        } else {
          out << k << ' ' << v.get_str() << ' ' << val << '\n';
        }
      }
      if (fmt == Format::Json) out << rows.dump(2) << '\n';
      return kOk;
    }
    if (*cross) {
      const auto fmt = parse_format(format);
      if (order < 16) throw UsageError("--order must be >= 16");
      const auto report = oracle::cross_check(order);
      if (fmt == Format::Json) {
        out << to_json(report).dump(2) << '\n';
      } else {
        for (const auto& c : report.checks) {
          out << (c.passed ? "pass" : "fail") << "  " << c.name;
          if (c.witness) {
            out << "  witness: q^" << c.witness->exponent << ' ' << c.witness->lhs.get_str() << " vs "
                << c.witness->rhs.get_str();
          }
          out << '\n';
        }
      }
      return report.passed() ? kOk : kFailed;
    }

    // verify
    const auto fmt = parse_format(format);
    if (cfg.order < 16) throw UsageError("--order must be >= 16");
    if (cfg.kmax < 1) throw UsageError("--kmax must be >= 1");
    ReportStream stream(fmt);
    TargetCache cache;
    if (*verify_identity_cmd) {
      const auto which = parse_identity_id(id);
      if (!which) throw UsageError("unknown identity id '" + id + "'");
      stream.add(verify_identity(*which, cfg.order));
    } else if (*verify_theorem) {
      if (id == "1.1") theorem_1_1(stream, cfg, cache, err, true);
      else if (id == "1.2") theorem_1_2(stream, cfg, cache, err, true);
      else if (id == "3.1") theorem_3_1(stream, cfg, cache);
      else throw UsageError("unknown theorem id '" + id + "' (expected 1.1, 1.2 or 3.1)");
    } else {
      for (const auto& r : verify_all_identities(cfg.order)) stream.add(r);
      theorem_3_1(stream, cfg, cache);
      theorem_1_1(stream, cfg, cache, err, false);
      theorem_1_2(stream, cfg, cache, err, false);
      stream.add(verify_valuations(64));
      stream.add(verify_closed_forms(64));
    }
    return stream.finish(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace etalab::cli
