#pragma once

#include <string>

#include "krein/angles.hpp"
#include "krein/bounds.hpp"
#include "krein/enclosures.hpp"
#include "krein/oscillator.hpp"
#include "krein/riccati.hpp"

namespace krein {

/// Round-trip safe float formatting at 17 significant digits; all CSV and
/// JSON emitted by the toolkit uses it ('.' decimal point, ',' separator).
std::string format_double(double value);

/// CSV with the fixed columns bound_id, applicable, lhs, rhs, slack.
std::string bound_report_csv(const BoundReport& report);
std::string bound_report_json(const BoundReport& report);

std::string enclosure_report_json(const EnclosureReport& report);

/// Point-cloud CSV with columns re, im, source in {qnr, nr, spectrum}.
std::string point_cloud_csv(const QnrSample& qnr, const Vector& nr_points,
                            const Vector& spectrum);

std::string solution_summary_json(const RiccatiSolution& sol, const AngleReport& angles);

std::string oscillator_report_json(const OscillatorModel& model, const OscillatorReport& report);

} // namespace krein
