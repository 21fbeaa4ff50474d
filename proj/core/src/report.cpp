#include "bqc/report.hpp"

#include <charconv>
#include <sstream>

#include "bqc/error.hpp"

namespace bqc {

std::string format_double(double x) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, result.ptr);
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorCode::InvalidArgument, "matrix JSON must be a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j.at(static_cast<std::size_t>(r));
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix JSON");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& entry = row.at(static_cast<std::size_t>(c));
      m(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

nlohmann::json to_json(const QubitGate& gate) {
  return {{"label", gate.label()}, {"qubits", gate.qubit_count()}, {"matrix", matrix_to_json(gate.matrix())}};
}

nlohmann::json to_json(const TruthTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TruthRow& row : table.rows) {
    rows.push_back({{"input", row.input},
                    {"phase_re", row.phase.real()},
                    {"phase_im", row.phase.imag()},
                    {"fidelity", row.fidelity}});
  }
  return {{"rows", rows}, {"leakage", table.leakage}};
}

nlohmann::json to_json(const std::vector<ScanHit>& hits) {
  nlohmann::json out = nlohmann::json::array();
  for (const ScanHit& hit : hits) {
    out.push_back({{"t", hit.t}, {"gate", hit.label}, {"distance", hit.distance}});
  }
  return out;
}

nlohmann::json to_json(const FactorizationReport& report) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const BlockDistance& b : report.blocks) {
    blocks.push_back({{"K", b.total}, {"distance", b.distance}});
  }
  return {{"blocks", blocks},
          {"max_block_distance", report.max_block_distance},
          {"sqrt_gamma", report.sqrt_gamma},
          {"singularity_margin", report.singularity_margin},
          {"tolerance", report.tolerance},
          {"passed", report.passed}};
}

nlohmann::json to_json(const AlgebraReport& report) {
  return {{"ladder_residual", report.ladder_residual},
          {"weight_residual", report.weight_residual},
          {"residual", report.residual},
          {"relative_residual", report.relative_residual},
          {"rejected_residual", report.rejected_residual},
          {"sign_convention", report.convention == SignConvention::Plus ? "+" : "-"}};
}

nlohmann::json to_json(const GateTimeSpec& spec) {
  return {{"t", spec.t}, {"k", spec.k}, {"m", spec.m}, {"c_effective", spec.c_effective}};
}

nlohmann::json to_json(const CouplerParams& params) {
  return {{"n_outer", params.n_outer()}, {"g", params.couplings}, {"w", params.w}, {"n_max", params.n_max}};
}

std::string truth_table_csv(const TruthTable& table) {
  std::ostringstream out;
  const std::size_t width = table.rows.empty() ? 0 : table.rows.front().input.size();
  for (std::size_t k = 0; k < width; ++k) out << 'b' << k << ',';
  out << "phase_re,phase_im,fidelity\n";
  for (const TruthRow& row : table.rows) {
    for (int bit : row.input) out << bit << ',';
    out << format_double(row.phase.real()) << ',' << format_double(row.phase.imag()) << ','
        << format_double(row.fidelity) << '\n';
  }
  return out.str();
}

std::string scan_csv(const std::vector<ScanHit>& hits) {
  std::ostringstream out;
  out << "t,gate,distance\n";
  for (const ScanHit& hit : hits) {
    out << format_double(hit.t) << ',' << hit.label << ',' << format_double(hit.distance) << '\n';
  }
  return out.str();
}

std::string factorization_csv(const FactorizationReport& report) {
  std::ostringstream out;
  out << "K,distance\n";
  for (const BlockDistance& b : report.blocks) out << b.total << ',' << format_double(b.distance) << '\n';
  return out.str();
}

std::string gates_csv(const std::vector<QubitGate>& gates) {
  std::ostringstream out;
  out << "label,row,col,re,im\n";
  for (const QubitGate& gate : gates) {
    const Matrix& m = gate.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        out << gate.label() << ',' << r << ',' << c << ',' << format_double(m(r, c).real()) << ','
            << format_double(m(r, c).imag()) << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace bqc
