#include "egc/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>

#include "egc/approximants.hpp"
#include "egc/parallel.hpp"
#include "egc/verify.hpp"

namespace egc::cli {

namespace {

using Json = nlohmann::ordered_json;

BigRat parse_u(const std::string& text) {
  BigRat u;
  try {
    u = parse_rat(text);
  } catch (const Error& e) {
    throw UsageError("--u: expected an exact rational \"p/q\" or decimal, got \"" +
                     text + "\"");
  }
  if (u < 0) throw UsageError("--u: must be >= 0, got " + text);
  return u;
}

std::string sign_string(int sign) { return sign > 0 ? "+" : "-"; }

std::string convention_name(BernoulliConvention c) {
  return c == BernoulliConvention::kB1MinusHalf ? "minus" : "plus";
}

std::string method_name(DeltaMethod m) {
  switch (m) {
    case DeltaMethod::kQuadrature:
      return "quadrature";
    case DeltaMethod::kETimesE1:
      return "e1";
    case DeltaMethod::kCrossValidated:
      return "cross";
  }
  return "?";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- delta ----

Report render_delta(const CommandConfig& cfg, const PrecisionContext& ctx) {
  const std::string value =
      delta_reference(ctx, cfg.method).to_string(cfg.digits);
  std::ostringstream os;
  switch (cfg.format) {
    case Format::kText:
      os << "delta = " << value << "\n"
         << "method: " << method_name(cfg.method) << ", digits: " << cfg.digits
         << "\n";
      break;
    case Format::kCsv:
      os << "method,digits,value\n"
         << method_name(cfg.method) << "," << cfg.digits << "," << value << "\n";
      break;
    case Format::kJson: {
      Json j;
      j["command"] = "delta";
      j["method"] = method_name(cfg.method);
      j["digits"] = cfg.digits;
      j["value"] = value;
      os << dump(j);
      break;
    }
  }
  return {0, os.str()};
}

// ---- approx ----

std::string approx_note(Corollary c) {
  if (c == Corollary::kFirst) {
    return "printed statement gives -delta; the sequence converges to +delta";
  }
  return "sequence converges to -delta";
}

std::vector<std::pair<long, long>> decade_pairs(long max_m) {
  std::vector<std::pair<long, long>> out;
  for (long m = 10; m + 10 <= max_m; m += 10) out.emplace_back(m, m + 10);
  if (max_m >= 40) out.emplace_back(10, 40);
  return out;
}

Report render_approx(const CommandConfig& cfg, const PrecisionContext& ctx) {
  const auto cor = cfg.corollary == 1 ? Corollary::kFirst : Corollary::kSecond;
  const long r = *cfg.r;
  const long max_m = *cfg.max_m;
  const auto rows = approx_table(cor, r, max_m, ctx);
  const std::string sign = sign_string(target_sign(cor));
  const bool confirmed = target_confirmed(rows);
  const auto decay = error_decay_report(rows, decade_pairs(max_m));
  auto opt = [&](const std::optional<BigFloat>& v) {
    return v ? v->to_string(cfg.digits) : std::string();
  };

  std::ostringstream os;
  switch (cfg.format) {
    case Format::kText: {
      os << "corollary " << cfg.corollary << ", r = " << r
         << ", digits = " << cfg.digits << ", target = " << sign << "delta\n"
         << "note: " << approx_note(cor) << "\n"
         << "target confirmed: " << (confirmed ? "yes" : "no") << "\n\n";
      for (const auto& row : rows) {
        os << "m = " << row.m << "\n  a = " << to_string(row.a)
           << "\n  b = " << to_string(row.b);
        if (row.ratio) {
          os << "\n  ratio = " << opt(row.ratio)
             << "\n  abs_error = " << opt(row.abs_error);
        } else {
          os << "\n  ratio undefined (b = 0)";
        }
        os << "\n";
      }
      for (const auto& g : decay.decade_gains) {
        os << "e_" << g.m_from << " / e_" << g.m_to << " = "
           << g.ratio.to_string(6) << "\n";
      }
      break;
    }
    case Format::kCsv:
      os << "m,a,b,ratio,abs_error,target_sign\n";
      for (const auto& row : rows) {
        os << row.m << "," << to_string(row.a) << "," << to_string(row.b) << ","
           << opt(row.ratio) << "," << opt(row.abs_error) << "," << sign
           << "\n";
      }
      break;
    case Format::kJson: {
      Json j;
      j["command"] = "approx";
      j["corollary"] = cfg.corollary;
      j["r"] = r;
      j["digits"] = cfg.digits;
      j["target_sign"] = sign;
      j["target_confirmed"] = confirmed;
      j["note"] = approx_note(cor);
      Json arr = Json::array();
      for (const auto& row : rows) {
        Json jr;
        jr["m"] = row.m;
        jr["a"] = to_string(row.a);
        jr["b"] = to_string(row.b);
        jr["ratio"] = row.ratio ? Json(opt(row.ratio)) : Json(nullptr);
        jr["abs_error"] = row.abs_error ? Json(opt(row.abs_error)) : Json(nullptr);
        arr.push_back(std::move(jr));
      }
      j["rows"] = std::move(arr);
      Json gains = Json::array();
      for (const auto& g : decay.decade_gains) {
        gains.push_back({{"m_from", g.m_from},
                         {"m_to", g.m_to},
                         {"ratio", g.ratio.to_string(cfg.digits)}});
      }
      j["decade_gains"] = std::move(gains);
      os << dump(j);
      break;
    }
  }
  return {0, os.str()};
}

// ---- theorem ----

Report render_theorem(const CommandConfig& cfg, const PrecisionContext& ctx) {
  const long r = *cfg.r;
  const long max_m = *cfg.max_m;
  const auto path = cfg.quadrature_only ? IntegralPath::kQuadratureOnly
                                        : IntegralPath::kExactWhereAvailable;
  const auto sums = theorem_partial_sums(cfg.u, r, max_m, ctx, path);
  const BigFloat target = ctx.from(cfg.u);
  const std::string path_name = cfg.quadrature_only ? "quadrature" : "exact";

  std::ostringstream os;
  Json arr = Json::array();
  if (cfg.format == Format::kText) {
    os << "partial sums S_M, u = " << to_string(cfg.u) << ", r = " << r
       << ", digits = " << cfg.digits << ", path = " << path_name << "\n";
  } else if (cfg.format == Format::kCsv) {
    os << "M,S,abs_error\n";
  }
  for (std::size_t i = 0; i < sums.size(); ++i) {
    const long M = r + static_cast<long>(i);
    const std::string s = sums[i].to_string(cfg.digits);
    const std::string err = abs(sums[i] - target).to_string(cfg.digits);
    switch (cfg.format) {
      case Format::kText:
        os << "M = " << M << "\n  S = " << s << "\n  |S - u| = " << err << "\n";
        break;
      case Format::kCsv:
        os << M << "," << s << "," << err << "\n";
        break;
      case Format::kJson:
        arr.push_back({{"M", M}, {"S", s}, {"abs_error", err}});
        break;
    }
  }
  if (cfg.format == Format::kJson) {
    Json j;
    j["command"] = "theorem";
    j["u"] = to_string(cfg.u);
    j["r"] = r;
    j["digits"] = cfg.digits;
    j["path"] = path_name;
    j["rows"] = std::move(arr);
    os << dump(j);
  }
  return {0, os.str()};
}

// ---- identities ----

// Replaces the first Gauss point by a check against a perturbed closed form.
void corrupt_gauss(std::vector<IdentityReport>& reports) {
  for (auto& rep : reports) {
    if (rep.identity != "gauss_terminating") continue;
    std::map<std::string, std::string> p(rep.parameters.begin(),
                                         rep.parameters.end());
    const HyperGeomParams hp{parse_rat(p["a"]), parse_rat(p["b"]),
                             parse_rat(p["c"]), parse_rat(p["x"])};
    const BigRat wrong = std::get<BigRat>(*rep.rhs) + make_rat(1, 1000);
    IdentityReport bad = check_gauss_terminating(hp, wrong);
    bad.parameters = rep.parameters;
    bad.note = "corrupted closed form";
    rep = std::move(bad);
    return;
  }
}

Report render_identities(const CommandConfig& cfg, const PrecisionContext& ctx) {
  std::vector<IdentityReport> reports;
  auto append = [&](std::vector<IdentityReport> part) {
    for (auto& rep : part) reports.push_back(std::move(rep));
  };
  append(bin_formula_grid(*cfg.max_m, cfg.max_r, default_epsilons()));
  append(binformula2_grid(cfg.max_m_binformula2));
  append(gauss_grid(cfg.max_m_gauss));
  if (!cfg.exact_only) append(recurrence_grid(ctx));
  if (cfg.corrupt) corrupt_gauss(reports);

  struct Tally {
    long total = 0, exact = 0, numeric = 0, failed = 0, skipped = 0;
  };
  std::vector<std::pair<std::string, Tally>> tallies;
  long failures = 0;
  for (const auto& rep : reports) {
    if (tallies.empty() || tallies.back().first != rep.identity) {
      tallies.emplace_back(rep.identity, Tally{});
    }
    Tally& t = tallies.back().second;
    ++t.total;
    switch (rep.verdict) {
      case IdentityReport::Verdict::kExactPass:
        ++t.exact;
        break;
      case IdentityReport::Verdict::kNumericPass:
        ++t.numeric;
        break;
      case IdentityReport::Verdict::kFail:
        ++t.failed;
        ++failures;
        break;
      case IdentityReport::Verdict::kSkipped:
        ++t.skipped;
        break;
    }
  }
  auto value = [&](const std::optional<ExactOrNumeric>& v) {
    return v ? format_value(*v, cfg.digits) : std::string();
  };

  std::ostringstream os;
  switch (cfg.format) {
    case Format::kText:
      for (const auto& [name, t] : tallies) {
        os << name << ": " << t.total << " points, " << t.exact
           << " exact pass, " << t.numeric << " numeric pass, " << t.failed
           << " fail, " << t.skipped << " skipped\n";
      }
      for (const auto& rep : reports) {
        if (!rep.failed()) continue;
        os << "FAIL " << rep.identity << " " << rep.parameter_string()
           << "\n  lhs = " << value(rep.lhs) << "\n  rhs = " << value(rep.rhs)
           << "\n  residual = " << value(rep.residual) << "\n";
        if (!rep.note.empty()) os << "  note: " << rep.note << "\n";
      }
      os << (failures == 0 ? "all checks passed"
                           : std::to_string(failures) + " failed")
         << "\n";
      break;
    case Format::kCsv:
      os << "identity,params,verdict,residual\n";
      for (const auto& rep : reports) {
        os << rep.identity << "," << rep.parameter_string() << ","
           << to_string(rep.verdict) << "," << value(rep.residual) << "\n";
      }
      break;
    case Format::kJson: {
      Json j;
      j["command"] = "identities";
      j["digits"] = cfg.digits;
      Json summary = Json::array();
      for (const auto& [name, t] : tallies) {
        summary.push_back({{"identity", name},
                           {"total", t.total},
                           {"exact_pass", t.exact},
                           {"numeric_pass", t.numeric},
                           {"fail", t.failed},
                           {"skipped", t.skipped}});
      }
      j["summary"] = std::move(summary);
      Json arr = Json::array();
      for (const auto& rep : reports) {
        Json jr;
        jr["identity"] = rep.identity;
        jr["params"] = rep.parameter_string();
        jr["verdict"] = to_string(rep.verdict);
        jr["lhs"] = rep.lhs ? Json(value(rep.lhs)) : Json(nullptr);
        jr["rhs"] = rep.rhs ? Json(value(rep.rhs)) : Json(nullptr);
        jr["residual"] = rep.residual ? Json(value(rep.residual)) : Json(nullptr);
        jr["tolerance"] = rep.tolerance ? Json(rep.tolerance->to_string(3))
                                        : Json(nullptr);
        if (!rep.note.empty()) jr["note"] = rep.note;
        arr.push_back(std::move(jr));
      }
      j["reports"] = std::move(arr);
      os << dump(j);
      break;
    }
  }
  return {failures == 0 ? 0 : 1, os.str()};
}

// ---- conjecture ----

const std::vector<std::string>& conjecture_notes() {
  static const std::vector<std::string> notes{
      "the printed integral has no differential; it is read as dx",
      "coefficients use A_{k,m+1} as printed",
      "the identity is unproven; residuals are reported, not asserted"};
  return notes;
}

Report render_conjecture(const CommandConfig& cfg, const PrecisionContext& ctx) {
  std::vector<BernoulliConvention> conventions;
  if (cfg.convention != ConventionChoice::kPlus) {
    conventions.push_back(BernoulliConvention::kB1MinusHalf);
  }
  if (cfg.convention != ConventionChoice::kMinus) {
    conventions.push_back(BernoulliConvention::kB1PlusHalf);
  }
  const long max_m = *cfg.max_m;
  std::vector<std::vector<ConjectureEvaluation>> series;
  for (const auto c : conventions) {
    series.push_back(conjecture_series(cfg.u, max_m, c, ctx));
  }
  // Smallest |residual| at the largest m; ties keep the earlier convention.
  std::size_t best = 0;
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (abs(series[i].back().residual) < abs(series[best].back().residual)) {
      best = i;
    }
  }
  const std::string calibrated = convention_name(conventions[best]);

  std::ostringstream os;
  Json arr = Json::array();
  if (cfg.format == Format::kText) {
    os << "conjecture harness, u = " << to_string(cfg.u)
       << ", digits = " << cfg.digits << "\n";
    for (const auto& n : conjecture_notes()) os << "note: " << n << "\n";
    os << "psi(u) = " << series[0][0].digamma.to_string(cfg.digits) << "\n";
  } else if (cfg.format == Format::kCsv) {
    os << "m,convention,rhs,digamma,residual\n";
  }
  for (std::size_t ci = 0; ci < conventions.size(); ++ci) {
    const std::string name = convention_name(conventions[ci]);
    if (cfg.format == Format::kText) os << "\nconvention B1 " << name << " 1/2\n";
    for (std::size_t i = 0; i < series[ci].size(); ++i) {
      const auto& ev = series[ci][i];
      const long m = static_cast<long>(i) + 1;
      const std::string rhs = ev.rhs.to_string(cfg.digits);
      const std::string res = ev.residual.to_string(cfg.digits);
      switch (cfg.format) {
        case Format::kText:
          os << "m = " << m << "  residual = " << res << "\n";
          break;
        case Format::kCsv:
          os << m << "," << name << "," << rhs << ","
             << ev.digamma.to_string(cfg.digits) << "," << res << "\n";
          break;
        case Format::kJson:
          arr.push_back({{"m", m},
                         {"convention", name},
                         {"rhs", rhs},
                         {"digamma", ev.digamma.to_string(cfg.digits)},
                         {"residual", res}});
          break;
      }
    }
  }
  if (cfg.format == Format::kText) {
    os << "\ncalibrated convention: B1 " << calibrated << " 1/2\n";
  } else if (cfg.format == Format::kJson) {
    Json j;
    j["command"] = "conjecture";
    j["u"] = to_string(cfg.u);
    j["digits"] = cfg.digits;
    j["notes"] = conjecture_notes();
    j["calibrated_convention"] = calibrated;
    j["rows"] = std::move(arr);
    os << dump(j);
  }
  return {0, os.str()};
}

}  // namespace

std::optional<CommandConfig> parse_args(const std::vector<std::string>& args,
                                        std::ostream& out) {
  CommandConfig cfg;
  CLI::App app{"Euler-Gompertz constant approximants and identity checks", "egc"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string method = "cross";
  std::string convention = "both";
  std::string u_text = "1";
  app.add_option("--digits", cfg.digits, "decimal digits")
      ->check(CLI::Range(kMinDigits, kMaxDigits));
  app.add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", cfg.out_path, "write the report to FILE");
  app.add_option("--threads", cfg.threads, "OpenMP threads, 0 for default")
      ->check(CLI::Range(0, 4096));

  auto* delta = app.add_subcommand("delta", "the Euler-Gompertz constant");
  delta->add_option("--method", method, "quadrature, e1 or cross")
      ->check(CLI::IsMember({"quadrature", "e1", "cross"}));

  auto* approx = app.add_subcommand("approx", "rational approximant table");
  approx->add_option("--corollary", cfg.corollary, "1 or 2")
      ->check(CLI::IsMember({1, 2}));
  approx->add_option("--r", cfg.r, "r >= 0")->check(CLI::NonNegativeNumber);
  approx->add_option("--max-m", cfg.max_m, "last m")
      ->check(CLI::Range(1L, kMaxRows));

  auto* theorem = app.add_subcommand("theorem", "partial sums of the series for u");
  theorem->add_option("--u", u_text, "exact rational p/q or decimal, u >= 0");
  theorem->add_option("--r", cfg.r, "r >= 0")->check(CLI::NonNegativeNumber);
  theorem->add_option("--max-m", cfg.max_m, "last M")
      ->check(CLI::Range(0L, kMaxRows));
  theorem->add_flag("--quadrature-only", cfg.quadrature_only,
                    "evaluate every integral by quadrature");

  auto* identities = app.add_subcommand("identities", "identity suite");
  identities->add_option("--max-m", cfg.max_m, "m range of the binomial formula")
      ->check(CLI::Range(0L, kMaxRows));
  identities->add_option("--max-r", cfg.max_r, "r range of the binomial formula")
      ->check(CLI::Range(0L, kMaxRows));
  identities->add_option("--max-m2", cfg.max_m_binformula2,
                         "m range of the second binomial formula")
      ->check(CLI::Range(0L, kMaxRows));
  identities->add_option("--max-m-gauss", cfg.max_m_gauss,
                         "m range of the Gauss family")
      ->check(CLI::Range(0L, kMaxRows));
  identities->add_flag("--exact-only", cfg.exact_only,
                       "skip the numeric recurrence checks");
  identities->add_flag("--corrupt", cfg.corrupt,
                       "perturb one closed form (negative control)");

  auto* conjecture = app.add_subcommand("conjecture", "digamma conjecture harness");
  conjecture->add_option("--u", u_text, "exact rational p/q or decimal, u > 0");
  conjecture->add_option("--max-m", cfg.max_m, "last m")
      ->check(CLI::Range(1L, kMaxRows));
  conjecture->add_option("--convention", convention, "minus, plus or both")
      ->check(CLI::IsMember({"minus", "plus", "both"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (*delta) cfg.command = Command::kDelta;
  if (*approx) cfg.command = Command::kApprox;
  if (*theorem) cfg.command = Command::kTheorem;
  if (*identities) cfg.command = Command::kIdentities;
  if (*conjecture) cfg.command = Command::kConjecture;

  cfg.format = format == "csv"    ? Format::kCsv
               : format == "json" ? Format::kJson
                                  : Format::kText;
  cfg.method = method == "quadrature" ? DeltaMethod::kQuadrature
               : method == "e1"       ? DeltaMethod::kETimesE1
                                      : DeltaMethod::kCrossValidated;
  cfg.convention = convention == "minus"  ? ConventionChoice::kMinus
                   : convention == "plus" ? ConventionChoice::kPlus
                                          : ConventionChoice::kBoth;
  cfg.u = parse_u(u_text);

  if (!cfg.r) {
    cfg.r = (cfg.command == Command::kApprox && cfg.corollary == 2) ? 1 : 0;
  }
  if (!cfg.max_m) {
    switch (cfg.command) {
      case Command::kApprox:
        cfg.max_m = 40;
        break;
      case Command::kTheorem:
        cfg.max_m = 30;
        break;
      case Command::kIdentities:
        cfg.max_m = 12;
        break;
      case Command::kConjecture:
        cfg.max_m = 20;
        break;
      case Command::kDelta:
        break;
    }
  }
  validate(cfg);
  return cfg;
}

void validate(const CommandConfig& cfg) {
  if (cfg.digits < kMinDigits || cfg.digits > kMaxDigits) {
    throw UsageError("--digits: " + std::to_string(cfg.digits) +
                     " not in range [" + std::to_string(kMinDigits) + ", " +
                     std::to_string(kMaxDigits) + "]");
  }
  if (cfg.threads < 0) throw UsageError("--threads: must be >= 0");
  if (cfg.u < 0) throw UsageError("--u: must be >= 0");
  const long r = cfg.r.value_or(0);
  if (r < 0) throw UsageError("--r: must be >= 0");
  switch (cfg.command) {
    case Command::kDelta:
      break;
    case Command::kApprox:
      if (cfg.corollary != 1 && cfg.corollary != 2) {
        throw UsageError("--corollary: must be 1 or 2");
      }
      if (cfg.corollary == 2 && r < 1) {
        throw UsageError("--r: corollary 2 requires r >= 1");
      }
      if (!cfg.max_m || *cfg.max_m < std::max(r, 1L) || *cfg.max_m > kMaxRows) {
        throw UsageError("--max-m: must lie in [max(r, 1), " +
                         std::to_string(kMaxRows) + "]");
      }
      break;
    case Command::kTheorem:
      if (!cfg.max_m || *cfg.max_m < r || *cfg.max_m > kMaxRows) {
        throw UsageError("--max-m: must lie in [r, " + std::to_string(kMaxRows) +
                         "]");
      }
      break;
    case Command::kIdentities:
      if (!cfg.max_m || *cfg.max_m < 0 || *cfg.max_m > kMaxRows) {
        throw UsageError("--max-m: must lie in [0, " + std::to_string(kMaxRows) +
                         "]");
      }
      break;
    case Command::kConjecture:
      if (cfg.u <= 0) throw UsageError("--u: conjecture requires u > 0");
      if (!cfg.max_m || *cfg.max_m < 1 || *cfg.max_m > kMaxRows) {
        throw UsageError("--max-m: must lie in [1, " + std::to_string(kMaxRows) +
                         "]");
      }
      break;
  }
}

Report render(const CommandConfig& cfg) {
  const PrecisionContext ctx(cfg.digits);
  switch (cfg.command) {
    case Command::kDelta:
      return render_delta(cfg, ctx);
    case Command::kApprox:
      return render_approx(cfg, ctx);
    case Command::kTheorem:
      return render_theorem(cfg, ctx);
    case Command::kIdentities:
      return render_identities(cfg, ctx);
    case Command::kConjecture:
      return render_conjecture(cfg, ctx);
  }
  throw UsageError("unknown command");
}

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + tmp.string() + " for writing");
    f << text;
    f.flush();
    if (!f) {
      f.close();
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Error("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw Error("cannot rename " + tmp.string() + " to " + path + ": " +
                ec.message());
  }
}

int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    if (cfg.threads > 0) set_threads(cfg.threads);
    const Report report = render(cfg);
    if (cfg.out_path) {
      write_atomically(*cfg.out_path, report.text);
    } else {
      out << report.text;
      out.flush();
    }
    return report.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  std::optional<CommandConfig> cfg;
  try {
    cfg = parse_args(args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n"
        << "run with --help for the list of flags\n";
    return 2;
  }
  if (!cfg) return 0;
  return run(*cfg, out, err);
}

}  // namespace egc::cli
