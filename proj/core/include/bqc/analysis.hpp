#pragma once

#include <string>
#include <vector>

#include "bqc/coupler.hpp"
#include "bqc/fock.hpp"
#include "bqc/gates.hpp"

namespace bqc {

struct TruthRow {
  std::vector<int> input;  // occupations in {0,1}, central mode first
  Complex phase;           // <in|U|in> / |<in|U|in>|, zero when the diagonal amplitude vanishes
  double fidelity = 0.0;   // |<in|U|in>|
};

struct TruthTable {
  std::vector<TruthRow> rows;  // inputs in binary counting order
  double leakage = 0.0;
};

/// Interaction time with sqrt(sum g^2) t = 2 pi k and w t = (2m + 1) pi.
/// c_effective back-computes c in t = 2 pi / (c g); it equals sqrt(N)/k.
struct GateTimeSpec {
  double t = 0.0;
  int k = 1;
  int m = 0;
  double c_effective = 0.0;
};

struct ExtractedGate {
  QubitGate gate;
  double leakage = 0.0;  // ||R^dag R - I||_F of the computational restriction R
};

struct ScanHit {
  double t = 0.0;
  std::string label;
  double distance = 0.0;
};

struct SchmidtResult {
  std::vector<double> singular_values;  // descending
  double entropy_bits = 0.0;
};

/// Tolerance on w t against the nearest odd multiple of pi.
inline constexpr double kFreePhaseTol = 1e-9;

GateTimeSpec gate_time(const CouplerParams& params, int k);

/// Flat indices of the occupation-{0,1} states, in binary counting order of
/// the qubit register (central mode = most significant bit).
std::vector<std::size_t> computational_indices(const ModeLayout& layout);

TruthTable truth_table(const CouplerParams& params, const ModeLayout& layout, double t);

/// Truth table of an arbitrary propagator on the layout (e.g. the factorized one).
TruthTable truth_table(const DenseOperator& propagator);

ExtractedGate extract_gate(const CouplerParams& params, const ModeLayout& layout, double t);
ExtractedGate extract_gate(const DenseOperator& propagator);

/// Gates a scan can recognise on an n-qubit register: the identity and the
/// phase-gate family members of matching size.
std::vector<QubitGate> reference_gates(int qubit_count);

/// Evaluates extract_gate on `steps` uniformly spaced times in [t_min, t_max]
/// and keeps those with leakage <= tol whose nearest reference gate (up to
/// global phase) lies within tol. Results are ordered by t.
std::vector<ScanHit> scan_times(const CouplerParams& params, const ModeLayout& layout, double t_min, double t_max,
                                int steps, double tol);

/// True when every row carries phase (-1)^(number of ones) with fidelity
/// >= 1 - tol and the table leakage is <= tol.
bool matches_relative_phase_pattern(const TruthTable& table, double tol);

/// Schmidt decomposition across the cut after the first `cut` modes.
SchmidtResult schmidt(const StateVector& state, int cut);

/// Qubit register of n modes with cutoff 2.
StateVector register_state(const Vector& amplitudes);

}  // namespace bqc
