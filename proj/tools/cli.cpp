// Copyright 2026 The Erdos Clopen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "erdos/clopen.hpp"
#include "erdos/harness.hpp"
#include "erdos/json.hpp"
#include "erdos/witness.hpp"

namespace erdos::cli {
namespace {

namespace fs = std::filesystem;

bool PrettyOutput() {
  const char* v = std::getenv("ERDOS_REPORT_PRETTY");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot read file \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, "malformed JSON in \"" + path + "\": " + e.what());
  }
}

// Temp file in the destination directory, then rename, so readers never see
// a partial document.
void WriteAtomically(const std::string& path, const std::string& content) {
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::kInvalidInput, "cannot write \"" + tmp.string() + "\"");
    f << content << '\n';
    if (!f.flush()) throw Error(ErrorCode::kInvalidInput, "cannot write \"" + tmp.string() + "\"");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::kInvalidInput, "cannot move output into place at \"" + path + "\"");
  }
}

void Emit(const Json& doc, const std::string& path, std::ostream& out) {
  const std::string text = Dump(doc, PrettyOutput());
  if (path.empty()) {
    out << text << '\n';
  } else {
    WriteAtomically(path, text);
  }
}

std::uint64_t ParseCount(const std::string& flag, const std::string& text) {
  Rational v = Rational::Parse(text);
  if (!v.is_integer() || v.sign() < 0 || !v.num().fits_ulong_p()) {
    throw Error(ErrorCode::kInvalidInput, "invalid value for " + flag + ": expected a nonnegative integer, got " + text);
  }
  return v.num().get_ui();
}

Schedule ResolveSchedule(const std::string& text) {
  if (text.empty() || text == "default") return Schedule::Default();
  return ScheduleFromJson(ReadJsonFile(text));
}

PointSource ResolveSource(const std::string& text) {
  if (text == "ray") return RaySource(Point::Unit(1));
  const std::string prefix = "file:";
  if (text.rfind(prefix, 0) == 0) return ListSource(PointsFromJson(ReadJsonFile(text.substr(prefix.size()))));
  throw Error(ErrorCode::kInvalidInput, "unknown source \"" + text + "\"; expected ray or file:PATH");
}

struct ParamFlags {
  std::string alpha_base;
  std::string beta_base;
  std::string schedule;
  std::string n = "1";

  void Attach(CLI::App* cmd) {
    cmd->add_option("--alpha-base", alpha_base, "alpha = (R)^(1/4), R a non-square rational p/q");
    cmd->add_option("--beta-base", beta_base, "beta = (R)^(1/2), R a non-square rational p/q");
    cmd->add_option("--schedule", schedule, "\"default\" or a schedule JSON file");
    cmd->add_option("--n", n, "schedule index used for pair-based sets");
  }

  bool has_pair() const { return !alpha_base.empty() || !beta_base.empty(); }

  AlphaBetaPair Pair() const {
    if (has_pair() && !schedule.empty()) {
      throw Error(ErrorCode::kInvalidInput, "give either --alpha-base/--beta-base or --schedule, not both");
    }
    if (!schedule.empty()) return ResolveSchedule(schedule).pair_at(ParseCount("--n", n));
    return AlphaBetaPair::Make(RootValue::Make(Rational::Parse(alpha_base.empty() ? "2" : alpha_base), 4),
                               RootValue::Make(Rational::Parse(beta_base.empty() ? "1/2" : beta_base), 2));
  }

  Schedule ScheduleOnly() const {
    if (has_pair()) throw Error(ErrorCode::kInvalidInput, "O is defined by a schedule; --alpha-base/--beta-base do not apply");
    return ResolveSchedule(schedule);
  }
};

int RunCheck(const std::string& point_path, const std::string& set, const ParamFlags& params,
             const std::string& out_path, std::ostream& out) {
  const Point x = PointFromJson(ReadJsonFile(point_path));
  Trace trace;
  bool member = false;
  Json doc;
  if (set == "O") {
    const Schedule s = params.ScheduleOnly();
    member = InO(x, s, &trace);
    doc["schedule"] = ToJson(s);
  } else {
    const AlphaBetaPair pair = params.Pair();
    member = set == "A" ? InA(x, pair, &trace) : InEAlpha(x, pair.alpha(), &trace);
    doc["pair"] = ToJson(pair);
  }
  doc["member"] = member;
  doc["set"] = set;
  doc["point"] = ToJson(x);
  doc["trace"] = trace;
  Emit(doc, out_path, out);
  return kExitOk;
}

int RunRadius(const std::string& point_path, const std::string& kind, const ParamFlags& params,
              const std::string& max_den, const std::string& out_path, std::ostream& out) {
  const Point x = PointFromJson(ReadJsonFile(point_path));
  CertificateOptions options;
  options.max_denominator = mpz_class(std::to_string(ParseCount("--max-den", max_den)));
  if (options.max_denominator < 1) throw Error(ErrorCode::kInvalidInput, "--max-den must be at least 1");
  RadiusCertificate cert;
  if (kind == "o-open") {
    cert = OOpennessRadius(x, params.ScheduleOnly(), options);
  } else if (kind == "open") {
    cert = OpennessRadius(x, params.Pair(), options);
  } else {
    cert = ClosednessRadius(x, params.Pair(), options);
  }
  Emit(ToJson(cert), out_path, out);
  return kExitOk;
}

int RunVerify(const std::string& claims_text, const SampleConfig& config, const Schedule& s, unsigned threads,
              bool timings, const std::string& report_path, std::ostream& out) {
  std::vector<ClaimId> claims;
  std::stringstream ss(claims_text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) claims.push_back(ParseClaimId(item));
  }
  if (claims.empty()) throw Error(ErrorCode::kInvalidInput, "--claims lists no claims");
  RunOptions options;
  options.threads = threads;
  const auto reports = RunSuite(s, config, claims, options);
  const Json doc = ToJson(reports, timings);
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.passed();
  Emit(doc, report_path, out);
  if (!report_path.empty()) {
    for (const auto& r : reports) {
      out << ClaimName(r.claim) << ' ' << (r.passed() ? "pass" : "FAIL") << " samples=" << r.samples_run
          << " eligible=" << r.eligible << " violations=" << r.violations.size() << '\n';
    }
  }
  return pass ? kExitOk : kExitViolation;
}

}  // namespace

int Execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact membership checks, radius certificates and witnesses for clopen sets of Erdos space", "erdos"};
  app.require_subcommand(1);

  std::string point_path, set, kind, out_path, max_den = "1000000";
  std::string ball_radius, source, claims = "1,2,3,4,5,remark";
  std::string samples = "10000", seed = "42", inner = "16", max_support = "6", max_index = "12";
  std::string max_numerator = "8", max_denominator = "8", threads = "0", report_path;
  bool timings = false;
  ParamFlags params;

  auto* check = app.add_subcommand("check", "decide membership of a point in E_alpha, A or O");
  check->add_option("--point", point_path, "point JSON file")->required();
  check->add_option("--set", set, "Ealpha, A or O")->required()->check(CLI::IsMember({"Ealpha", "A", "O"}));
  check->add_option("--out", out_path, "output file");
  params.Attach(check);

  auto* radius = app.add_subcommand("radius", "certify a neighbourhood radius around a point");
  radius->add_option("--point", point_path, "point JSON file")->required();
  radius->add_option("--kind", kind, "closed, open or o-open")
      ->required()
      ->check(CLI::IsMember({"closed", "open", "o-open"}));
  radius->add_option("--max-den", max_den, "denominator cap for the rational bound");
  radius->add_option("--out", out_path, "output file");
  params.Attach(radius);

  auto* witness = app.add_subcommand("witness", "construct z = x + y in V + V outside O");
  auto* refute = app.add_subcommand("refute", "assemble the non-compatibility verdict");
  for (auto* cmd : {witness, refute}) {
    cmd->add_option("--ball-radius", ball_radius, "r* with B(0, r*) inside V, as p/q")->required();
    cmd->add_option("--source", source, "ray or file:PTS.json")->required();
    cmd->add_option("--schedule", params.schedule, "\"default\" or a schedule JSON file");
    cmd->add_option("--out", out_path, "output file");
  }

  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--claims", claims, "comma-separated subset of 1,2,3,4,5,remark");
  verify->add_option("--samples", samples, "draws per claim");
  verify->add_option("--seed", seed, "64-bit seed");
  verify->add_option("--inner", inner, "perturbations per base point");
  verify->add_option("--max-support", max_support, "support size cap");
  verify->add_option("--max-index", max_index, "largest coordinate index");
  verify->add_option("--max-numerator", max_numerator, "coordinate numerator cap");
  verify->add_option("--max-denominator", max_denominator, "coordinate denominator cap");
  verify->add_option("--schedule", params.schedule, "\"default\" or a schedule JSON file");
  verify->add_option("--threads", threads, "worker threads, 0 for all cores");
  verify->add_option("--report", report_path, "report JSON file");
  verify->add_flag("--timings", timings, "include elapsed_ms (reports are then no longer reproducible)");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("erdos");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*check) return RunCheck(point_path, set, params, out_path, out);
    if (*radius) return RunRadius(point_path, kind, params, max_den, out_path, out);
    if (*witness || *refute) {
      const VSpec v(Rational::Parse(ball_radius), ResolveSource(source));
      const Schedule s = ResolveSchedule(params.schedule);
      if (*witness) {
        Emit(ToJson(ConstructWitness(v, s)), out_path, out);
        return kExitOk;
      }
      const Verdict verdict = RefuteGroupCompatibility(v, s);
      Emit(ToJson(verdict), out_path, out);
      return verdict.verified ? kExitOk : kExitViolation;
    }
    SampleConfig config;
    config.count = ParseCount("--samples", samples);
    config.seed = ParseCount("--seed", seed);
    config.count_inner = ParseCount("--inner", inner);
    config.max_support = ParseCount("--max-support", max_support);
    config.max_index = ParseCount("--max-index", max_index);
    config.max_numerator = ParseCount("--max-numerator", max_numerator);
    config.max_denominator = ParseCount("--max-denominator", max_denominator);
    config.Validate();
    return RunVerify(claims, config, ResolveSchedule(params.schedule),
                     static_cast<unsigned>(ParseCount("--threads", threads)), timings, report_path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace erdos::cli
