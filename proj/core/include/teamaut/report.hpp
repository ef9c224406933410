#ifndef TEAMAUT_REPORT_HPP
#define TEAMAUT_REPORT_HPP

#include "json.hpp"
#include "teamaut/compose.hpp"
#include "teamaut/featured.hpp"
#include "teamaut/pdl.hpp"
#include "teamaut/realise.hpp"

namespace teamaut {

// Structured report objects, schema version 1. The CLI emits one object
// per line.
inline constexpr int kReportVersion = 1;

nlohmann::json report_team(const TeamAutomaton& ta);
nlohmann::json report_requirement(const Requirement& r);
nlohmann::json report_verdict(const ComplianceVerdict& v);
nlohmann::json report_receptive(const ReceptiveReport& r, Mode mode);
nlohmann::json report_responsive(const ResponsiveReport& r, Mode mode);
nlohmann::json report_realise(const RealiseResult& r, const GlobalModel& m);
nlohmann::json report_preservation(const PreservationReport& r, Mode mode);
nlohmann::json report_pdl(const std::string& name, const pdl::CheckResult& r);
nlohmann::json report_products(const std::map<Product, bool>& verdicts);

}  // namespace teamaut

#endif
