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

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>

#include <json.hpp>

#include "mpsim/cli.hpp"

namespace mpsim::cli {

namespace {

CircuitOp named(std::string name, std::vector<std::size_t> qubits) {
    CircuitOp op;
    op.name = std::move(name);
    op.qubits = std::move(qubits);
    return op;
}

// Gaussian matrix orthonormalized column by column (two Gram-Schmidt passes).
ComplexMatrix random_unitary4(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    ComplexMatrix m(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            m(r, c) = cplx(gauss(rng), gauss(rng));
        }
    }
    for (std::size_t c = 0; c < 4; ++c) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t p = 0; p < c; ++p) {
                cplx d = 0.0;
                for (std::size_t r = 0; r < 4; ++r) {
                    d += std::conj(m(r, p)) * m(r, c);
                }
                for (std::size_t r = 0; r < 4; ++r) {
                    m(r, c) -= d * m(r, p);
                }
            }
        }
        double nrm = 0.0;
        for (std::size_t r = 0; r < 4; ++r) {
            nrm += std::norm(m(r, c));
        }
        nrm = std::sqrt(nrm);
        for (std::size_t r = 0; r < 4; ++r) {
            m(r, c) /= nrm;
        }
    }
    return m;
}

}  // namespace

Circuit ghz_circuit(std::size_t n) {
    if (n == 0) {
        throw DomainError("ghz circuit needs at least one qubit");
    }
    Circuit c{n, {}};
    c.ops.push_back(named("h", {1}));
    for (std::size_t q = 1; q < n; ++q) {
        c.ops.push_back(named("cx", {q, q + 1}));
    }
    return c;
}

Circuit product_circuit(std::size_t n) {
    if (n == 0) {
        throw DomainError("product circuit needs at least one qubit");
    }
    Circuit c{n, {}};
    for (std::size_t q = 1; q <= n; ++q) {
        c.ops.push_back(named("h", {q}));
    }
    return c;
}

Circuit random_local_circuit(std::size_t n, std::size_t depth, std::uint64_t seed) {
    if (n < 2) {
        throw DomainError("random-local circuit needs at least two qubits");
    }
    std::mt19937_64 rng(seed);
    Circuit c{n, {}};
    for (std::size_t layer = 0; layer < depth; ++layer) {
        for (std::size_t q = 1 + layer % 2; q + 1 <= n; q += 2) {
            CircuitOp op = named("u2", {q, q + 1});
            op.raw = random_unitary4(rng);
            c.ops.push_back(std::move(op));
        }
    }
    return c;
}

std::vector<BenchRow> bench(const BenchOptions &options) {
    if (options.family != "ghz" && options.family != "product" && options.family != "random-local") {
        throw DomainError("unknown bench family '" + options.family + "' (expected ghz, product or random-local)");
    }
    std::vector<BenchRow> rows;
    for (std::size_t n : options.sizes) {
        Circuit circuit = options.family == "ghz"       ? ghz_circuit(n)
                          : options.family == "product" ? product_circuit(n)
                                                        : random_local_circuit(n, options.depth, options.seed);
        BenchRow row;
        row.n = n;
        row.gates = circuit.ops.size();

        // Untimed pass for the resource counts; storage_count is O(n) per call.
        {
            MpsState state = init_zero(n);
            if (options.chi_cap) {
                state.set_chi_cap(options.chi_cap);
            }
            row.peak_storage = storage_count(state);
            for (const CircuitOp &op : circuit.ops) {
                apply_op(state, op);
                row.peak_storage = std::max(row.peak_storage, storage_count(state));
                row.max_chi = std::max(row.max_chi, chi(state));
            }
            row.final_chi = chi(state);
        }

        double best = 0.0;
        double total = 0.0;
        // run -1 is a warm-up and is not recorded.
        for (int run = -1; run < 3 || total < options.min_time_s; ++run) {
            const auto t0 = std::chrono::steady_clock::now();
            MpsState state = init_zero(n);
            if (options.chi_cap) {
                state.set_chi_cap(options.chi_cap);
            }
            for (const CircuitOp &op : circuit.ops) {
                apply_op(state, op);
            }
            const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (run < 0) {
                continue;
            }
            best = run == 0 ? dt : std::min(best, dt);
            total += dt;
        }
        row.wall_s = best;
        rows.push_back(row);
    }
    return rows;
}

std::vector<double> doubling_ratios(const std::vector<BenchRow> &rows) {
    std::vector<double> out;
    for (std::size_t k = 1; k < rows.size(); ++k) {
        if (rows[k].n == 2 * rows[k - 1].n && rows[k - 1].wall_s > 0.0) {
            out.push_back(rows[k].wall_s / rows[k - 1].wall_s);
        }
    }
    return out;
}

void write_bench_json(std::ostream &out, const std::vector<BenchRow> &rows, const BenchOptions &options) {
    using nlohmann::json;
    for (const BenchRow &r : rows) {
        json j{{"type", "bench"},
               {"family", options.family},
               {"n", r.n},
               {"gates", r.gates},
               {"wall_s", r.wall_s},
               {"peak_storage_count", r.peak_storage},
               {"max_chi", r.max_chi},
               {"final_chi", r.final_chi}};
        if (options.chi_cap) {
            j["chi_cap"] = *options.chi_cap;
        }
        out << j.dump() << '\n';
    }
    out << json{{"type", "bench_summary"}, {"family", options.family}, {"doubling_ratios", doubling_ratios(rows)}}.dump()
        << '\n';
}

void write_bench_text(std::ostream &out, const std::vector<BenchRow> &rows, const BenchOptions &options) {
    const auto flags = out.flags();
    out << "family: " << options.family;
    if (options.chi_cap) {
        out << " (chi cap " << *options.chi_cap << ")";
    }
    out << '\n';
    out << std::setw(8) << "n" << std::setw(10) << "gates" << std::setw(14) << "wall_s" << std::setw(14)
        << "peak_storage" << std::setw(9) << "max_chi" << '\n';
    for (const BenchRow &r : rows) {
        out << std::setw(8) << r.n << std::setw(10) << r.gates << std::setw(14) << std::scientific
            << std::setprecision(3) << r.wall_s << std::setw(14) << r.peak_storage << std::setw(9) << r.max_chi
            << '\n';
        out.flags(flags);
    }
    const auto ratios = doubling_ratios(rows);
    if (!ratios.empty()) {
        out << "time ratio per doubling:";
        for (double x : ratios) {
            out << ' ' << std::fixed << std::setprecision(2) << x;
        }
        out << '\n';
    }
    out.flags(flags);
}

}  // namespace mpsim::cli
