// Copyright 2026 The mpsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpsim/circuit.hpp"
#include "mpsim/observables.hpp"

namespace mpsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCapacity = 3;

/// Bond dimension went past the user's --max-chi after gate `gate_index` (0-based).
class ChiLimitExceeded : public CapacityError {
  public:
    ChiLimitExceeded(std::size_t gate_index, std::size_t chi, std::size_t limit);
    std::size_t gate_index() const noexcept {
        return gate_index_;
    }

  private:
    std::size_t gate_index_;
};

struct RunOptions {
    bool report_chi = false;
    std::vector<std::string> amplitudes;
    std::vector<std::string> expectations;
    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 0;
    std::optional<std::size_t> chi_cap;
    std::optional<double> rank_tol;
    std::optional<std::size_t> max_chi;
    bool compare_dense = false;
    /// Include wall-clock fields in machine-readable output.
    bool timing = false;
};

struct GateRecord {
    std::size_t index = 0;
    std::string name;
    std::vector<std::size_t> targets;  // 0-based, as in the circuit file
    std::size_t max_chi = 1;
    double e_chi = 0.0;
    double wall_s = 0.0;               // cumulative
};

struct RunReport {
    std::size_t num_qubits = 0;
    std::vector<GateRecord> records;
    std::size_t final_chi = 1;
    double final_e_chi = 0.0;
    std::size_t storage_count = 0;
    std::size_t peak_storage_count = 0;
    double truncation_weight = 0.0;
    std::vector<std::vector<double>> schmidt;  // per bond, when report_chi
    std::vector<std::pair<std::string, cplx>> amplitudes;
    std::vector<std::pair<std::string, double>> expectations;
    std::optional<SampleResult> samples;
    std::optional<double> dense_deviation;
};

/// Simulates `circuit` from |0...0>. Throws ChiLimitExceeded, CapacityError
/// (compare_dense above the dense limit) and the library's domain errors.
RunReport run_circuit(const Circuit &circuit, const RunOptions &options);

/// One record per gate then a summary, one JSON object per line.
void write_json(std::ostream &out, const RunReport &report, const RunOptions &options);
void write_text(std::ostream &out, const RunReport &report, const RunOptions &options);

// -- bench --------------------------------------------------------------

Circuit ghz_circuit(std::size_t n);
Circuit product_circuit(std::size_t n);
/// Brickwork of Haar-ish random nearest-neighbour two-qubit unitaries.
Circuit random_local_circuit(std::size_t n, std::size_t depth, std::uint64_t seed);

struct BenchOptions {
    std::string family = "ghz";
    std::vector<std::size_t> sizes;
    std::optional<std::size_t> chi_cap;
    std::size_t depth = 8;
    std::uint64_t seed = 1;
    /// Each size is re-run until this much time has accumulated (minimum 3
    /// runs); the fastest run is reported.
    double min_time_s = 0.05;
};

struct BenchRow {
    std::size_t n = 0;
    std::size_t gates = 0;
    double wall_s = 0.0;
    std::size_t peak_storage = 0;
    std::size_t max_chi = 1;
    std::size_t final_chi = 1;
};

/// Throws DomainError for an unknown family.
std::vector<BenchRow> bench(const BenchOptions &options);

/// wall_s ratios between consecutive rows whose n doubles.
std::vector<double> doubling_ratios(const std::vector<BenchRow> &rows);

void write_bench_json(std::ostream &out, const std::vector<BenchRow> &rows, const BenchOptions &options);
void write_bench_text(std::ostream &out, const std::vector<BenchRow> &rows, const BenchOptions &options);

/// Entry point of the `mpsim` executable. Returns the process exit code.
int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace mpsim::cli
