#ifndef THUE_REPORT_JSON_HPP
#define THUE_REPORT_JSON_HPP

#include <string>
#include <vector>

#include "thue/constants.hpp"
#include "thue/counting.hpp"
#include "thue/form_json.hpp"
#include "thue/solution.hpp"
#include "thue/verify.hpp"

namespace thue {

/// Reported in every top-level document under "version"; the only field
/// allowed to differ between two runs with the same seed.
inline constexpr const char* kReportVersion = "thue 1.0.0";

/// Significant digits for reals rendered as decimal strings.
inline constexpr int kReportDigits = 30;

/// {"sign": -1|0|1, "ln": "decimal"}; ln is null for zero.
Json logreal_to_json(const LogReal& v);
Json real_to_json(const Real& v);
Json thresholds_to_json(const Thresholds& th);

Json solution_to_json(const Solution& s);
Json solutions_to_json(const std::vector<Solution>& sols);
/// Header x,y,value,primitive,class,source; one line per solution.
std::string solutions_to_csv(const std::vector<Solution>& sols);

Json counts_to_json(const CountsReport& c);
Json prime_to_json(const PrimeSelection& p);

/// {form, m, preconditions, bounds, observed, ratios, flags, thresholds, ...}.
Json bound_report_to_json(const BinaryForm& f, const mpz_class& m, const BoundReport& r);

Json to_json(const LewisMahlerReport& r);
Json to_json(const XiReport& r);
Json to_json(const RepSetReport& r);
Json to_json(const GapReport& r);
Json to_json(const MediumLadderReport& r);

/// {"version": ..., then the members of `body` in order}.
Json with_version(const Json& body);

}  // namespace thue

#endif  // THUE_REPORT_JSON_HPP
