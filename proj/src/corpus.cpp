#include "thue/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "thue/constants.hpp"

namespace thue {

void CorpusSpec::validate() const {
  if (n < 3) throw CorpusError("corpus: n must be >= 3");
  if (s < 1 || s > n) throw CorpusError("corpus: s must satisfy 1 <= s <= n");
  if (count < 1) throw CorpusError("corpus: count must be >= 1");
  if (coefficient_bound < 1) throw CorpusError("corpus: coefficient_bound must be >= 1");
}

CorpusSpec corpus_spec_from_json(const Json& j) {
  CorpusSpec c;
  try {
    c.n = j.at("n").get<int>();
    c.s = j.at("s").get<int>();
    c.coefficient_bound = parse_decimal(j.at("coefficient_bound").get<std::string>(), "coefficient_bound");
    c.count = j.at("count").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("require_disc_above") && !j["require_disc_above"].is_null()) {
      const Json& r = j["require_disc_above"];
      if (r.is_string()) {
        if (r.get<std::string>() != "large_disc_threshold")
          throw CorpusError("require_disc_above: unknown name " + r.get<std::string>());
        c.require_disc_above = large_disc_threshold(c.n);
      } else {
        const int sign = r.at("sign").get<int>();
        const std::string ln = r.at("ln").get<std::string>();
        c.require_disc_above = LogReal::from_log(Real::from_string(ln, LogReal::kPrecision), sign);
      }
    }
    if (j.contains("require_no_linear_factor")) c.require_no_linear_factor = j["require_no_linear_factor"].get<bool>();
  } catch (const Json::exception& e) {
    throw FormParseError(std::string("corpus spec: ") + e.what());
  }
  c.validate();
  return c;
}

Json corpus_spec_to_json(const CorpusSpec& spec) {
  Json j;
  j["n"] = spec.n;
  j["s"] = spec.s;
  j["coefficient_bound"] = spec.coefficient_bound.get_str();
  j["count"] = spec.count;
  j["seed"] = spec.seed;
  if (spec.require_disc_above) {
    j["require_disc_above"] = {{"sign", spec.require_disc_above->sign()},
                               {"ln", spec.require_disc_above->log_magnitude().to_string(30)}};
  } else {
    j["require_disc_above"] = nullptr;
  }
  j["require_no_linear_factor"] = spec.require_no_linear_factor;
  return j;
}

namespace {

std::string form_id(int i) {
  std::ostringstream o;
  o << "form_" << std::setw(4) << std::setfill('0') << i;
  return o.str();
}

// Uniform on [0, k) for a small k.
int uniform_index(gmp_randclass& rng, int k) {
  const mpz_class v = rng.get_z_range(k);
  return static_cast<int>(v.get_si());
}

BinaryForm draw(gmp_randclass& rng, const CorpusSpec& spec) {
  std::vector<int> interior;
  for (int i = 1; i < spec.n; ++i) interior.push_back(i);
  // Partial Fisher-Yates: the first s-1 slots are a uniform sample.
  for (int i = 0; i < spec.s - 1; ++i) {
    const int j = i + uniform_index(rng, static_cast<int>(interior.size()) - i);
    std::swap(interior[static_cast<std::size_t>(i)], interior[static_cast<std::size_t>(j)]);
  }
  std::vector<int> exps{0, spec.n};
  exps.insert(exps.end(), interior.begin(), interior.begin() + (spec.s - 1));
  std::sort(exps.begin(), exps.end());

  std::vector<BinaryForm::Term> terms;
  const mpz_class width = 2 * spec.coefficient_bound;
  for (int e : exps) {
    mpz_class v = rng.get_z_range(width);
    v -= spec.coefficient_bound;  // [-B, B-1]
    if (v >= 0) v += 1;           // [-B, -1] or [1, B]
    terms.emplace_back(e, v);
  }
  return make_form(terms, spec.n);
}

enum class Verdict { Accept, ZeroDisc, LinearFactor, DiscThreshold };

Verdict judge(const BinaryForm& f, const CorpusSpec& spec) {
  const mpz_class d = discriminant(f);
  if (d == 0) return Verdict::ZeroDisc;
  if (spec.require_no_linear_factor && has_rational_linear_factor(f)) return Verdict::LinearFactor;
  if (spec.require_disc_above && !(LogReal::from_integer(abs(d)) > *spec.require_disc_above))
    return Verdict::DiscThreshold;
  return Verdict::Accept;
}

}  // namespace

Corpus generate_corpus(const CorpusSpec& spec) {
  spec.validate();
  Corpus c;
  c.spec = spec;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(mpz_class(std::to_string(spec.seed)));
  while (static_cast<int>(c.forms.size()) < spec.count) {
    ++c.attempts;
    BinaryForm f = draw(rng, spec);
    switch (judge(f, spec)) {
      case Verdict::Accept:
        c.forms.push_back({form_id(static_cast<int>(c.forms.size())), std::move(f)});
        break;
      case Verdict::ZeroDisc:
        ++c.rejected_zero_disc;
        break;
      case Verdict::LinearFactor:
        ++c.rejected_linear_factor;
        break;
      case Verdict::DiscThreshold:
        ++c.rejected_disc_threshold;
        break;
    }
    if (c.attempts >= 100 && c.rejections() * 100 > c.attempts * 99)
      throw CorpusError("corpus: rejection rate above 99% after " + std::to_string(c.attempts) + " draws");
  }
  return c;
}

bool recheck_corpus(const Corpus& c) {
  for (const auto& e : c.forms) {
    const BinaryForm& f = e.form;
    if (f.degree() != c.spec.n || f.sparsity() != c.spec.s) return false;
    if (f.coeff(0) == 0 || f.coeff(c.spec.n) == 0) return false;
    for (const auto& [i, a] : f.terms())
      if (abs(a) > c.spec.coefficient_bound) return false;
    if (judge(f, c.spec) != Verdict::Accept) return false;
  }
  return static_cast<int>(c.forms.size()) == c.spec.count;
}

Json Corpus::manifest() const {
  Json j;
  j["spec"] = corpus_spec_to_json(spec);
  j["seed"] = spec.seed;
  j["attempts"] = attempts;
  j["rejections"] = {{"total", rejections()},
                     {"zero_discriminant", rejected_zero_disc},
                     {"linear_factor", rejected_linear_factor},
                     {"discriminant_threshold", rejected_disc_threshold}};
  Json forms_j = Json::array();
  for (const auto& e : forms) forms_j.push_back({{"id", e.id}, {"file", e.id + ".json"}});
  j["forms"] = forms_j;
  return j;
}

void write_corpus(const Corpus& c, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  for (const auto& e : c.forms) {
    std::ofstream out(fs::path(dir) / (e.id + ".json"));
    out << form_to_json(e.form).dump(2) << '\n';
  }
  std::ofstream man(fs::path(dir) / "manifest.json");
  man << c.manifest().dump(2) << '\n';
}

}  // namespace thue
