#ifndef THUE_EXPERIMENT_HPP
#define THUE_EXPERIMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "thue/corpus.hpp"
#include "thue/counting.hpp"
#include "thue/report_json.hpp"

namespace thue {

/// Exactly one of box / fiber_cap is set.
struct RegionOption {
  std::optional<mpz_class> box;
  std::optional<mpz_class> fiber_cap;
  /// Continued-fraction depth for extra candidates; 0 disables them.
  int cf_depth = 0;

  /// Throws std::invalid_argument unless exactly one region is chosen.
  void validate() const;
};

/// Solutions in the region, sorted and deduplicated, with the region's
/// completeness certificate. Continued-fraction extras outside the region
/// are kept but do not widen the certificate.
std::vector<Solution> solve_region(const BinaryForm& f, const mpz_class& m, const RegionOption& region,
                                   Region* certificate = nullptr);

struct ExperimentOptions {
  mpz_class m = 1;
  RegionOption region;
  Scheme scheme = Scheme::ThreeTier;
  std::optional<LogReal> diagnostic_ys;
  BoundOptions bounds;
};

struct ExperimentResult {
  Json report;
  /// Every exact invariant held; empirical caps do not count.
  bool invariants_pass = true;
  /// Empirical caps (bound-shape ratios, ratio stability) all held.
  bool empirical_pass = true;
};

/// Solve, classify, count and run every checker on one form.
ExperimentResult run_experiment(const BinaryForm& f, const ExperimentOptions& opt);

struct CorpusReport {
  Json report;
  bool invariants_pass = true;
  bool empirical_pass = true;
};

/// run_experiment over each form on `jobs` worker threads; the merged report
/// lists forms in corpus order regardless of completion order.
CorpusReport run_corpus(const std::vector<CorpusEntry>& forms, const ExperimentOptions& opt, int jobs);

/// {"forms": [...]} summary as CSV, one line per form.
std::string corpus_report_to_csv(const Json& report);

}  // namespace thue

#endif  // THUE_EXPERIMENT_HPP
