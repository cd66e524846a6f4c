#ifndef THUE_CORPUS_HPP
#define THUE_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "thue/form.hpp"
#include "thue/form_json.hpp"
#include "thue/logreal.hpp"

namespace thue {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CorpusSpec {
  int n = 3;
  int s = 1;
  mpz_class coefficient_bound = 1000000;
  int count = 1;
  std::uint64_t seed = 0;
  /// Keep only forms with |D| above this.
  std::optional<LogReal> require_disc_above;
  bool require_no_linear_factor = true;

  /// Throws CorpusError unless n >= 3, 1 <= s <= n, count >= 1, bound >= 1.
  void validate() const;
};

/// {"n", "s", "coefficient_bound": "decimal", "count", "seed",
///  "require_disc_above": {"sign", "ln"} or "large_disc_threshold" or null,
///  "require_no_linear_factor"}.
CorpusSpec corpus_spec_from_json(const Json& j);
Json corpus_spec_to_json(const CorpusSpec& spec);

struct CorpusEntry {
  std::string id;
  BinaryForm form;
};

struct Corpus {
  CorpusSpec spec;
  std::vector<CorpusEntry> forms;
  long attempts = 0;
  long rejected_zero_disc = 0;
  long rejected_linear_factor = 0;
  long rejected_disc_threshold = 0;

  long rejections() const { return rejected_zero_disc + rejected_linear_factor + rejected_disc_threshold; }
  Json manifest() const;
};

/// Exponents {0, n} plus s-1 interior exponents drawn without replacement;
/// coefficients uniform on [-B, B] minus {0}. Mersenne Twister seeded from
/// spec.seed, so equal specs give equal corpora. Throws CorpusError once more
/// than 99% of at least 100 draws have been rejected.
Corpus generate_corpus(const CorpusSpec& spec);

/// Re-checks every form against the corpus constraints.
bool recheck_corpus(const Corpus& c);

/// Writes <id>.json per form and manifest.json into `dir` (created).
void write_corpus(const Corpus& c, const std::string& dir);

}  // namespace thue

#endif  // THUE_CORPUS_HPP
