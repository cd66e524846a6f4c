#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thue/corpus.hpp"
#include "thue/enumerate.hpp"
#include "thue/experiment.hpp"
#include "thue/report_json.hpp"

using namespace thue;

namespace {

BinaryForm cubic() { return make_form({{3, 1}, {0, -2}}, 3); }

}  // namespace

TEST_CASE("corpus generation is seeded and meets its constraints") {
  CorpusSpec spec;
  spec.n = 3;
  spec.s = 1;
  spec.coefficient_bound = 1000000;
  spec.count = 50;
  spec.seed = 7;
  const Corpus a = generate_corpus(spec), b = generate_corpus(spec);
  REQUIRE(a.forms.size() == 50);
  CHECK(a.manifest().dump() == b.manifest().dump());
  for (std::size_t i = 0; i < a.forms.size(); ++i) CHECK(a.forms[i].form == b.forms[i].form);
  CHECK(recheck_corpus(a));
  for (const auto& e : a.forms) {
    CHECK(e.form.sparsity() == 1);
    CHECK(e.form.coeff(0) != 0);
    CHECK(e.form.coeff(3) != 0);
  }
  spec.seed = 8;
  CHECK_FALSE(generate_corpus(spec).forms.front().form == a.forms.front().form);
}

TEST_CASE("corpus exponents and dense cubics") {
  CorpusSpec spec;
  spec.n = 9;
  spec.s = 3;
  spec.coefficient_bound = 50;
  spec.count = 20;
  spec.seed = 3;
  for (const auto& e : generate_corpus(spec).forms) {
    CHECK(e.form.terms().front().first == 0);
    CHECK(e.form.terms().back().first == 9);
    CHECK(e.form.sparsity() == 3);
  }
  spec.n = 3;
  spec.s = 3;
  CHECK(generate_corpus(spec).forms.front().form.sparsity() == 3);
}

TEST_CASE("corpus rejection limit and input validation") {
  CorpusSpec spec;
  spec.n = 3;
  spec.s = 1;
  spec.coefficient_bound = 1;  // +-x^3 +- y^3 always has the factor x +- y
  spec.count = 1;
  CHECK_THROWS_AS(generate_corpus(spec), CorpusError);
  spec.n = 2;
  CHECK_THROWS_AS(spec.validate(), CorpusError);

  const Json j = Json::parse(R"({"n": 3, "s": 1, "coefficient_bound": "10000000000", "count": 2, "seed": 1,
                                 "require_disc_above": "large_disc_threshold"})");
  const CorpusSpec parsed = corpus_spec_from_json(j);
  REQUIRE(parsed.require_disc_above.has_value());
  CHECK(parsed.coefficient_bound == mpz_class("10000000000"));
  const CorpusSpec round = corpus_spec_from_json(corpus_spec_to_json(parsed));
  CHECK(round.require_disc_above->ln_double() == doctest::Approx(parsed.require_disc_above->ln_double()));
  CHECK_THROWS_AS(corpus_spec_from_json(Json::parse(R"({"n": 3})")), FormParseError);
}

TEST_CASE("report serialization") {
  CHECK(logreal_to_json(LogReal()).at("ln").is_null());
  const Json one = logreal_to_json(LogReal::from_integer(-1));
  CHECK(one.at("sign") == -1);
  CHECK(one.at("ln") == "0");

  const auto sols = brute_force(cubic(), 10, 100);
  const std::string csv = solutions_to_csv(sols);
  CHECK(csv.rfind("x,y,value,primitive,class,source\n", 0) == 0);
  CHECK(csv.find("5,4,-3,1,unclassified,brute_force\n") != std::string::npos);

  const Json v = with_version(Json{{"a", 1}});
  CHECK(v.begin().key() == "version");
}

TEST_CASE("experiment report carries every section") {
  ExperimentOptions opt;
  opt.m = 10;
  opt.region.box = 100;
  const ExperimentResult r = run_experiment(cubic(), opt);
  CHECK(r.invariants_pass);
  for (const char* key : {"form", "m", "preconditions", "bounds", "observed", "ratios", "flags", "thresholds"})
    CHECK(r.report.contains(key));
  CHECK(r.report["observed"]["N"] == 10);
  CHECK(r.report["thresholds"]["Y_0"].contains("ln"));
  // The full-size ladder sees no medium solutions and says so.
  CHECK(r.report["checks"]["medium_ladder"]["flags"][0] == "vacuous");
  for (const auto& s : r.report["solutions"]) CHECK(s["class"] == "small");

  opt.region.fiber_cap = 5;
  CHECK_THROWS_AS(opt.region.validate(), std::invalid_argument);
}
