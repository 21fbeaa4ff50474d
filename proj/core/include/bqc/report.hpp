#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bqc/analysis.hpp"
#include "bqc/coupler.hpp"
#include "bqc/gates.hpp"

namespace bqc {

/// Version of the JSON report layout emitted by the CLI.
inline constexpr int kReportSchema = 1;

/// Row-major list of [re, im] pairs.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QubitGate& gate);
nlohmann::json to_json(const TruthTable& table);
nlohmann::json to_json(const std::vector<ScanHit>& hits);
nlohmann::json to_json(const FactorizationReport& report);
nlohmann::json to_json(const AlgebraReport& report);
nlohmann::json to_json(const GateTimeSpec& spec);
nlohmann::json to_json(const CouplerParams& params);

/// Header "b0,...,b{M-1},phase_re,phase_im,fidelity" followed by one row per input.
std::string truth_table_csv(const TruthTable& table);
std::string scan_csv(const std::vector<ScanHit>& hits);
std::string factorization_csv(const FactorizationReport& report);
/// label,row,col,re,im for every entry.
std::string gates_csv(const std::vector<QubitGate>& gates);

/// Shortest decimal form that round-trips the double.
std::string format_double(double x);

}  // namespace bqc
