#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "thue/corpus.hpp"
#include "thue/ct_membership.hpp"
#include "thue/enumerate.hpp"
#include "thue/experiment.hpp"
#include "thue/measure.hpp"
#include "thue/report_json.hpp"

namespace {

using namespace thue;

constexpr int kExitPass = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;

struct Globals {
  mpfr_prec_t precision_bits = kDefaultPrecisionBits;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "json";
};

struct RegionArgs {
  std::string m = "1";
  std::string box, fiber_cap;
  int cf_depth = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

mpz_class decimal_arg(const std::string& s, const std::string& name) {
  try {
    return parse_decimal(s, name);
  } catch (const FormParseError& e) {
    throw UsageError(e.what());
  }
}

RegionOption region_of(const RegionArgs& a) {
  RegionOption r;
  if (!a.box.empty()) r.box = decimal_arg(a.box, "--box");
  if (!a.fiber_cap.empty()) r.fiber_cap = decimal_arg(a.fiber_cap, "--fiber-cap");
  r.cf_depth = a.cf_depth;
  try {
    r.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return r;
}

void add_region_flags(CLI::App* sub, RegionArgs& a) {
  sub->add_option("-m", a.m, "Right-hand side m (decimal)")->required();
  auto* box = sub->add_option("--box", a.box, "Box bound B: |x|, |y| <= B");
  auto* fiber = sub->add_option("--fiber-cap", a.fiber_cap, "Fiber cap C: min(|x|, |y|) <= C");
  box->excludes(fiber);
  fiber->excludes(box);
  sub->add_option("--cf-depth", a.cf_depth, "Continued-fraction candidate depth")->check(CLI::NonNegativeNumber);
}

// Writes to --out DIR/<name> when given, else stdout.
void emit(const Globals& g, const std::string& name, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::create_directories(g.out);
  std::ofstream f(std::filesystem::path(g.out) / name);
  f << text;
}

std::string dump(const Json& j) { return with_version(j).dump(2) + "\n"; }

int cmd_invariants(const Globals& g, const std::string& path) {
  const BinaryForm f = load_form(path);
  const mpz_class d = discriminant(f);
  Json j;
  j["form"] = form_to_json(f);
  j["n"] = f.degree();
  j["s"] = f.sparsity();
  j["H"] = height(f).get_str();
  j["content"] = content(f).get_str();
  j["D"] = d.get_str();
  j["no_rational_linear_factor"] = !has_rational_linear_factor(f);
  Json flags = Json::array();
  // Root-based invariants need distinct roots; D = 0 reports them as null.
  std::optional<MeasureResult> meas;
  std::optional<MahlerChainCheck> chain;
  if (d != 0) {
    meas = mahler_measure(f, g.precision_bits);
    chain = mahler_chain_check(f, 0x1p-40, g.precision_bits);
    j["ln_M"] = real_to_json(meas->log_value());
    j["ln_M_error"] = real_to_json(meas->log_error());
    j["mahler_chain"] = {{"disc_lower", chain->disc_lower},
                         {"disc_margin", chain->disc_margin},
                         {"height_lower", chain->height_lower},
                         {"height_lower_margin", chain->height_lower_margin},
                         {"height_upper", chain->height_upper},
                         {"height_upper_margin", chain->height_upper_margin}};
  } else {
    j["ln_M"] = nullptr;
    j["ln_M_error"] = nullptr;
    j["mahler_chain"] = nullptr;
    flags.push_back("non_squarefree");
  }
  const int t = 4 * f.sparsity() - 2;
  if (t >= 0) {
    const CtReport ct = ct_membership_sample(f, t, 200, g.seed.value_or(0));
    j["ct_membership"] = {{"t", t},
                          {"max_real_zeros_seen", ct.max_real_zeros_seen},
                          {"directions_checked", ct.directions_checked},
                          {"witness", ct.witness ? Json::array({ct.witness->first.get_str(), ct.witness->second.get_str()})
                                                 : Json(nullptr)}};
    if (ct.witness) flags.push_back("ct_witness");
  }
  j["flags"] = flags;
  if (g.format == "csv") {
    std::ostringstream o;
    o << "n,s,H,content,D,ln_M,mahler_chain\n"
      << f.degree() << ',' << f.sparsity() << ',' << height(f).get_str() << ',' << content(f).get_str() << ','
      << d.get_str() << ',' << (meas ? meas->log_value().to_string(kReportDigits) : "") << ','
      << (chain ? (chain->holds() ? "1" : "0") : "") << '\n';
    emit(g, "invariants.csv", o.str());
  } else {
    emit(g, "invariants.json", dump(j));
  }
  return !chain || chain->holds() ? kExitPass : kExitInvariant;
}

int cmd_solve(const Globals& g, const std::string& path, const RegionArgs& ra) {
  const BinaryForm f = load_form(path);
  const mpz_class m = decimal_arg(ra.m, "-m");
  const RegionOption region = region_of(ra);
  Region cert;
  const auto sols = solve_region(f, m, region, &cert);
  const auto certified = region.box ? restrict_to_box(sols, *region.box) : restrict_to_fiber_range(sols, *region.fiber_cap);
  const CountsReport c = counts(f, m, certified, cert);
  if (g.format == "csv") {
    emit(g, "solutions.csv", solutions_to_csv(sols));
  } else {
    Json j;
    j["form"] = form_to_json(f);
    j["m"] = m.get_str();
    j["solutions"] = solutions_to_json(sols);
    j["counts"] = counts_to_json(c);
    emit(g, "solutions.json", dump(j));
  }
  return kExitPass;
}

ExperimentOptions experiment_options(const Globals& g, const RegionArgs& ra, const std::string& scheme,
                                     const std::string& diag) {
  ExperimentOptions opt;
  opt.m = decimal_arg(ra.m, "-m");
  if (opt.m < 1) throw UsageError("-m must be >= 1");
  opt.region = region_of(ra);
  opt.scheme = scheme == "two-tier" ? Scheme::TwoTier : Scheme::ThreeTier;
  if (!diag.empty()) {
    Real v(LogReal::kPrecision);
    try {
      v = Real::from_string(diag, LogReal::kPrecision);
    } catch (const std::exception&) {
      throw UsageError("--diagnostic-ys: not a number: " + diag);
    }
    if (!(v.sign() > 0)) throw UsageError("--diagnostic-ys must be positive");
    opt.diagnostic_ys = LogReal::from_real(v);
  }
  opt.bounds.precision_bits = g.precision_bits;
  return opt;
}

int cmd_verify(const Globals& g, const std::string& path, const RegionArgs& ra, const std::string& scheme,
               const std::string& diag) {
  const BinaryForm f = load_form(path);
  const ExperimentOptions opt = experiment_options(g, ra, scheme, diag);
  const ExperimentResult r = run_experiment(f, opt);
  if (g.format == "csv") {
    Json wrapped = {{"forms", Json::array({r.report})}};
    wrapped["forms"][0]["id"] = std::filesystem::path(path).stem().string();
    emit(g, "verify.csv", corpus_report_to_csv(wrapped));
  } else {
    emit(g, "verify.json", dump(r.report));
  }
  return r.invariants_pass ? kExitPass : kExitInvariant;
}

int cmd_corpus(const Globals& g, const std::string& spec_path) {
  std::ifstream in(spec_path);
  if (!in) throw FormParseError("cannot open " + spec_path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormParseError(spec_path + ": " + e.what());
  }
  CorpusSpec spec = corpus_spec_from_json(j);
  if (g.seed) spec.seed = *g.seed;
  if (g.out.empty()) throw UsageError("corpus: --out DIR is required");
  const Corpus c = generate_corpus(spec);
  write_corpus(c, g.out);
  std::cout << with_version(c.manifest()).dump(2) << '\n';
  return recheck_corpus(c) ? kExitPass : kExitInvariant;
}

std::vector<CorpusEntry> load_corpus_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path man = fs::path(dir) / "manifest.json";
  std::ifstream in(man);
  if (!in) throw FormParseError("cannot open " + man.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormParseError(man.string() + ": " + e.what());
  }
  std::vector<CorpusEntry> forms;
  for (const auto& e : j.at("forms")) {
    forms.push_back({e.at("id").get<std::string>(), load_form((fs::path(dir) / e.at("file").get<std::string>()).string())});
  }
  return forms;
}

int cmd_report(const Globals& g, const std::string& dir, const RegionArgs& ra, const std::string& scheme, int jobs) {
  const auto forms = load_corpus_dir(dir);
  const ExperimentOptions opt = experiment_options(g, ra, scheme, "");
  const CorpusReport r = run_corpus(forms, opt, jobs);
  if (g.format == "csv")
    emit(g, "report.csv", corpus_report_to_csv(r.report));
  else
    emit(g, "report.json", dump(r.report));
  return r.invariants_pass ? kExitPass : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thue inequality solver and verifier for integer binary forms"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  long precision = 256;
  std::uint64_t seed = 0;
  app.add_option("--precision-bits", precision, "Working precision in bits")->check(CLI::Range(64L, 65536L));
  auto* seed_opt = app.add_option("--seed", seed, "Seed for sampled directions and corpus generation");
  app.add_option("--out", g.out, "Output directory");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::string form_path, spec_path, corpus_dir, scheme = "three-tier", diag;
  RegionArgs ra;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  auto* inv = app.add_subcommand("invariants", "Invariants of a form");
  inv->add_option("form", form_path, "Form JSON file")->required();

  auto* solve = app.add_subcommand("solve", "Enumerate solutions of 1 <= |F(x, y)| <= m");
  solve->add_option("form", form_path, "Form JSON file")->required();
  add_region_flags(solve, ra);

  auto* verify = app.add_subcommand("verify", "Solve and run every checker");
  verify->add_option("form", form_path, "Form JSON file")->required();
  add_region_flags(verify, ra);
  verify->add_option("--scheme", scheme, "Size classification")->check(CLI::IsMember({"three-tier", "two-tier"}));
  verify->add_option("--diagnostic-ys", diag, "Replace Y_S by this value to exercise the ladder");

  auto* corpus = app.add_subcommand("corpus", "Generate a seeded corpus of forms");
  corpus->add_option("spec", spec_path, "Corpus spec JSON file")->required();

  auto* report = app.add_subcommand("report", "Run verify over a corpus directory");
  report->add_option("corpus", corpus_dir, "Directory written by the corpus command")->required();
  add_region_flags(report, ra);
  report->add_option("--scheme", scheme, "Size classification")->check(CLI::IsMember({"three-tier", "two-tier"}));
  report->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }
  g.precision_bits = static_cast<mpfr_prec_t>(precision);
  if (*seed_opt) g.seed = seed;

  try {
    if (*inv) return cmd_invariants(g, form_path);
    if (*solve) return cmd_solve(g, form_path, ra);
    if (*verify) return cmd_verify(g, form_path, ra, scheme, diag);
    if (*corpus) return cmd_corpus(g, spec_path);
    if (*report) return cmd_report(g, corpus_dir, ra, scheme, jobs);
  } catch (const FormParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CorpusError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitUsage;
}
