#include "thue/experiment.hpp"

#include <atomic>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "thue/constants.hpp"
#include "thue/enumerate.hpp"
#include "thue/measure.hpp"

namespace thue {

void RegionOption::validate() const {
  if (box.has_value() == fiber_cap.has_value())
    throw std::invalid_argument("exactly one of box and fiber cap must be given");
  if ((box && *box < 0) || (fiber_cap && *fiber_cap < 0)) throw std::invalid_argument("region bound must be >= 0");
  if (cf_depth < 0) throw std::invalid_argument("cf depth must be >= 0");
}

std::vector<Solution> solve_region(const BinaryForm& f, const mpz_class& m, const RegionOption& region,
                                   Region* certificate) {
  region.validate();
  std::vector<Solution> sols;
  Region cert;
  if (region.box) {
    sols = brute_force(f, m, *region.box);
    cert = {Completeness::BoxComplete, *region.box};
  } else {
    sols = fiber_enumerate_both(f, m, *region.fiber_cap);
    cert = {Completeness::FiberComplete, *region.fiber_cap};
  }
  if (region.cf_depth > 0) {
    auto extra = cf_candidates(f, m, region.cf_depth);
    sols.insert(sols.end(), extra.begin(), extra.end());
  }
  sort_and_dedup(sols);
  if (certificate) *certificate = cert;
  return sols;
}

namespace {

std::vector<Solution> in_region(const std::vector<Solution>& sols, const RegionOption& r) {
  return r.box ? restrict_to_box(sols, *r.box) : restrict_to_fiber_range(sols, *r.fiber_cap);
}

}  // namespace

ExperimentResult run_experiment(const BinaryForm& f, const ExperimentOptions& opt) {
  ExperimentResult out;
  const mpfr_prec_t prec = opt.bounds.precision_bits;
  Region cert;
  std::vector<Solution> sols = solve_region(f, opt.m, opt.region, &cert);
  const std::vector<Solution> certified = in_region(sols, opt.region);
  const CountsReport c = counts(f, opt.m, certified, cert);
  const BoundReport br = bound_report(f, opt.m, c, opt.bounds);
  const int n = f.degree(), s = f.sparsity();
  const bool d_nonzero = discriminant(f) != 0;

  if (opt.scheme == Scheme::ThreeTier && br.thresholds)
    classify(sols, *br.thresholds, Scheme::ThreeTier);
  else if (opt.scheme == Scheme::TwoTier)
    classify_two_tier(sols, br.Y_0);

  Json j = bound_report_to_json(f, opt.m, br);
  j["scheme"] = to_string(opt.scheme);
  j["solutions"] = solutions_to_json(sols);
  Json checks = Json::object();
  bool exact = true, empirical = br.empirical_ok();

  const MahlerChainCheck chain = mahler_chain_check(f, 0x1p-40, prec);
  checks["mahler_chain"] = {{"disc_lower", chain.disc_lower},
                            {"height_lower", chain.height_lower},
                            {"height_upper", chain.height_upper},
                            {"pass", chain.holds()}};
  exact = exact && chain.holds();

  if (d_nonzero) {
    const LewisMahlerReport lm = check_lewis_mahler(f, sols, prec);
    checks["lewis_mahler"] = to_json(lm);
    exact = exact && lm.pass;

    const RepSetReport rs = representative_set(f, s, 4096, prec);
    checks["representative_set"] = to_json(rs);
    exact = exact && rs.within_bound && rs.below_R;
    empirical = empirical && rs.stable;
  }

  const LogReal y_cap = opt.scheme == Scheme::ThreeTier && br.thresholds ? br.thresholds->Y_S : br.Y_0;
  const XiReport xi = anchor_and_xi(f, opt.m, certified, y_cap, prec);
  checks["anchor"] = to_json(xi);
  exact = exact && xi.pass();

  const SmallCountCheck sc = small_count_check(f, opt.m, certified, y_cap, prec);
  checks["small_count"] = {{"applicable", sc.applicable},
                           {"observed", sc.observed},
                           {"bound", sc.bound ? real_to_json(*sc.bound) : Json(nullptr)},
                           {"total", sc.total ? real_to_json(*sc.total) : Json(nullptr)},
                           {"pass", sc.holds}};
  exact = exact && sc.holds;

  if (opt.scheme == Scheme::TwoTier) {
    const GapReport g = gap_check(f, opt.m, certified, br.Y_0, prec);
    checks["gap"] = to_json(g);
    exact = exact && g.pass();
  } else if (br.thresholds && n >= 3 * s) {
    const MediumLadderReport ml = medium_ladder_check(f, opt.m, certified, *br.thresholds, opt.diagnostic_ys, prec);
    checks["medium_ladder"] = to_json(ml);
    exact = exact && ml.pass();
  }

  if (opt.region.box) {
    const TelescopingCheck t = telescoping_check(f, opt.m, certified, *opt.region.box);
    checks["telescoping"] = {{"primitives_used", t.primitives_used},
                             {"primitives_skipped", t.primitives_skipped},
                             {"n_closed", t.n_closed},
                             {"weighted_sum", t.weighted_sum},
                             {"pass", t.holds}};
    exact = exact && t.holds;
  }

  j["checks"] = checks;
  j["invariants_pass"] = exact;
  j["empirical_pass"] = empirical;
  out.report = std::move(j);
  out.invariants_pass = exact;
  out.empirical_pass = empirical;
  return out;
}

CorpusReport run_corpus(const std::vector<CorpusEntry>& forms, const ExperimentOptions& opt, int jobs) {
  std::vector<ExperimentResult> results(forms.size());
  std::vector<std::exception_ptr> errors(forms.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < forms.size(); i = next++) {
      try {
        results[i] = run_experiment(forms[i].form, opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int k = std::max(1, std::min<int>(jobs, static_cast<int>(forms.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t < k; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  CorpusReport rep;
  Json list = Json::array();
  for (std::size_t i = 0; i < forms.size(); ++i) {
    Json entry;
    entry["id"] = forms[i].id;
    for (const auto& [key, v] : results[i].report.items()) entry[key] = v;
    list.push_back(std::move(entry));
    rep.invariants_pass = rep.invariants_pass && results[i].invariants_pass;
    rep.empirical_pass = rep.empirical_pass && results[i].empirical_pass;
  }
  rep.report = {{"forms", list}, {"invariants_pass", rep.invariants_pass}, {"empirical_pass", rep.empirical_pass}};
  return rep;
}

std::string corpus_report_to_csv(const Json& report) {
  std::ostringstream out;
  out << "id,degree,m,N,P,Ptilde,invariants_pass,empirical_pass\n";
  for (const auto& e : report.at("forms")) {
    const Json& o = e.at("observed");
    out << e.at("id").get<std::string>() << ',' << e.at("form").at("degree").get<int>() << ','
        << e.at("m").get<std::string>() << ',' << o.at("N").get<long>() << ',' << o.at("P").get<long>() << ','
        << o.at("Ptilde").get<long>() << ',' << (e.at("invariants_pass").get<bool>() ? 1 : 0) << ','
        << (e.at("empirical_pass").get<bool>() ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace thue
