// SPDX-License-Identifier: Apache-2.0
#include "qtel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "qtel/report_io.hpp"
#include "qtel/sampling.hpp"

namespace qtel {

namespace {

constexpr QubitLabel kC = QubitLabel::C;
constexpr QubitLabel kA = QubitLabel::A;
constexpr QubitLabel kB = QubitLabel::B;

const Register kRegCAB{kC, kA, kB};

const QubitSet kAllSubsets[] = {
    QubitSet{kC},     QubitSet{kA},     QubitSet{kB},    QubitSet{kC, kA},
    QubitSet{kC, kB}, QubitSet{kA, kB}, QubitSet{kC, kA, kB}};

// Disjoint nonempty (x, y) pairs of a three-qubit register.
const std::pair<QubitSet, QubitSet> kDisjointPairs3[] = {
    {QubitSet{kC}, QubitSet{kA}},     {QubitSet{kC}, QubitSet{kB}},
    {QubitSet{kA}, QubitSet{kB}},     {QubitSet{kC}, QubitSet{kA, kB}},
    {QubitSet{kA}, QubitSet{kC, kB}}, {QubitSet{kB}, QubitSet{kC, kA}}};

struct Suite {
    const VerifyConfig& cfg;
    std::mt19937_64 master;
    std::vector<PropertyResult> results;

    explicit Suite(const VerifyConfig& c) : cfg(c), master(c.seed) {}

    std::mt19937_64 fork() { return std::mt19937_64(master()); }

    void record(std::string name, double tolerance, double worst) {
        results.push_back(PropertyResult{std::move(name), worst, tolerance,
                                         worst <= tolerance});
    }
};

// The oracle-equivalence grid: 21 x 21, shifted off the exact endpoints.
std::vector<InputAmplitudes> oracle_grid() {
    constexpr int kSteps = 21;
    constexpr double kMargin = 1e-3;
    std::vector<InputAmplitudes> grid;
    grid.reserve(kSteps * kSteps);
    for (int i = 0; i < kSteps; ++i) {
        const double r =
            kMargin + (1.0 - 2.0 * kMargin) * i / (kSteps - 1);
        for (int j = 0; j < kSteps; ++j) {
            const double theta =
                kMargin +
                (2.0 * std::numbers::pi - 2.0 * kMargin) * j / (kSteps - 1);
            grid.push_back(InputAmplitudes::from_polar(r, theta));
        }
    }
    return grid;
}

void run_linalg(Suite& s) {
    const int dims[] = {2, 4, 8};

    {
        auto rng = s.fork();
        double rec = 0.0, orth = 0.0, trace = 0.0;
        for (int t = 0; t < s.cfg.trials; ++t) {
            const int dim = dims[t % 3];
            const ComplexMatrix h = random_hermitian(dim, rng);
            const EigenDecomposition eig = hermitian_eig(h);
            rec = std::max(rec, frobenius_distance(eig.reconstruct(), h));
            const ComplexMatrix v = eig.eigenvectors;
            orth = std::max(orth, frobenius_distance(
                                      v.adjoint() * v,
                                      ComplexMatrix::identity(dim)));
            double sum = 0.0;
            for (double lambda : eig.eigenvalues) sum += lambda;
            trace = std::max(trace, std::abs(sum - h.trace().real()));
        }
        s.record("eig_reconstruction", 1e-9, rec);
        s.record("eig_orthonormality", 1e-9, orth);
        s.record("eig_trace_sum", 1e-9, trace);
    }

    {
        auto rng = s.fork();
        std::uniform_real_distribution<double> uni(-2.0, 2.0);
        double worst = 0.0;
        for (int t = 0; t < s.cfg.trials; ++t) {
            const int dim = dims[t % 3];
            ComplexMatrix d(dim);
            std::vector<double> vals(static_cast<std::size_t>(dim));
            for (int i = 0; i < dim; ++i) {
                vals[static_cast<std::size_t>(i)] = uni(rng);
                d(i, i) = vals[static_cast<std::size_t>(i)];
            }
            std::sort(vals.rbegin(), vals.rend());
            const EigenDecomposition eig = hermitian_eig(d);
            for (int i = 0; i < dim; ++i)
                worst = std::max(
                    worst, std::abs(eig.eigenvalues[static_cast<std::size_t>(i)] -
                                    vals[static_cast<std::size_t>(i)]));
        }
        s.record("eig_diagonal_exact", 0.0, worst);
    }

    {
        auto rng = s.fork();
        const int pair_dims[][2] = {{2, 2}, {2, 4}, {4, 2}, {4, 4}, {2, 8}, {8, 2}};
        double worst = 0.0;
        for (int t = 0; t < s.cfg.trials; ++t) {
            const auto& pd = pair_dims[t % 6];
            const ComplexMatrix a = random_hermitian(pd[0], rng);
            const ComplexMatrix b = random_hermitian(pd[1], rng);
            worst = std::max(worst, std::abs(kron(a, b).trace() -
                                             a.trace() * b.trace()));
        }
        s.record("kron_trace_product", 1e-12, worst);
    }

    {
        auto rng = s.fork();
        std::uniform_int_distribution<int> eighth(-8, 8);
        auto dyadic = [&rng, &eighth]() {
            return Complex(eighth(rng) / 8.0, eighth(rng) / 8.0);
        };
        double worst = 0.0;
        for (int t = 0; t < s.cfg.trials; ++t) {
            ComplexMatrix a(2), b(2), c(2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    a(i, j) = dyadic();
                    b(i, j) = dyadic();
                    c(i, j) = dyadic();
                }
            worst = std::max(
                worst, frobenius_distance(kron(kron(a, b), c), kron(a, kron(b, c))));
        }
        s.record("kron_associativity_dyadic", 0.0, worst);
    }
}

void run_quantum(Suite& s) {
    const Gate kGates[] = {gates::hadamard(), gates::pauli_x(), gates::pauli_y(),
                           gates::pauli_z(), gates::cnot()};

    {
        auto rng = s.fork();
        double worst = 0.0;
        for (int t = 0; t < s.cfg.trials; ++t) {
            const DensityOperator rho = random_density(kRegCAB, rng);
            for (const QubitSet& q : kAllSubsets) {
                worst = std::max(worst,
                                 std::abs(partial_trace(rho, q).matrix().trace() -
                                          Complex(1.0, 0.0)));
                const DensityOperator avg =
                    forget_outcomes(measure_computational(rho, q));
                worst = std::max(
                    worst, std::abs(avg.matrix().trace() - Complex(1.0, 0.0)));
            }
            const PureState psi = random_pure(3, rng);
            const PureState evolved =
                apply_gate(psi, kGates[t % 5],
                           kGates[t % 5].arity() == 1
                               ? std::vector<QubitLabel>{kA}
                               : std::vector<QubitLabel>{kC, kB});
            worst = std::max(
                worst, std::abs(density_from_pure(evolved, kRegCAB).matrix().trace() -
                                Complex(1.0, 0.0)));
        }
        s.record("trace_preservation", 1e-9, worst);
    }

    {
        auto rng = s.fork();
        double worst = 0.0;
        for (int t = 0; t < s.cfg.trials; ++t) {
            const DensityOperator rho = random_density(kRegCAB, rng);
            const double before = purity(rho);
            for (const QubitSet& q : kAllSubsets) {
                const double after =
                    purity(forget_outcomes(measure_computational(rho, q)));
                worst = std::max(worst, after - before);
            }
        }
        s.record("purity_monotone_under_forget", 1e-9, worst);
    }

    {
        auto rng = s.fork();
        double worst = 0.0;
        const std::pair<QubitSet, QubitSet> chains[] = {
            {QubitSet{kC, kA}, QubitSet{kA}},
            {QubitSet{kA, kB}, QubitSet{kB}},
            {QubitSet{kC, kB}, QubitSet{kC}}};
        for (int t = 0; t < s.cfg.trials; ++t) {
            const DensityOperator rho = random_density(kRegCAB, rng);
            for (const auto& [mid, last] : chains) {
                const DensityOperator direct = partial_trace(rho, last);
                const DensityOperator via =
                    partial_trace(partial_trace(rho, mid), last);
                worst = std::max(
                    worst, frobenius_distance(direct.matrix(), via.matrix()));
            }
        }
        s.record("partial_trace_composition", 1e-12, worst);
    }

    {
        auto rng = s.fork();
        double worst = 0.0;
        for (int t = 0; t < s.cfg.trials; ++t) {
            const PureState psi = random_pure(3, rng);
            const Gate& g = kGates[t % 5];
            const std::vector<QubitLabel> targets =
                g.arity() == 1 ? std::vector<QubitLabel>{static_cast<QubitLabel>(t % 3)}
                               : std::vector<QubitLabel>{static_cast<QubitLabel>(t % 3),
                                                         static_cast<QubitLabel>((t + 1) % 3)};
            const PureState back = apply_gate(apply_gate(psi, g, targets),
                                              g.adjoint(), targets);
            for (unsigned i = 0; i < 8; ++i)
                worst = std::max(worst,
                                 std::abs(back.amplitude(i) - psi.amplitude(i)));
        }
        s.record("gate_unitarity", 1e-12, worst);
    }

    {
        auto rng = s.fork();
        double worst = 0.0;
        for (int t = 0; t < s.cfg.trials; ++t) {
            const DensityOperator rho = random_density(kRegCAB, rng);
            for (const QubitSet& q : kAllSubsets) {
                double total = 0.0;
                for (const MeasurementOutcome& o : measure_computational(rho, q))
                    total += o.probability;
                worst = std::max(worst, std::abs(total - 1.0));
            }
        }
        s.record("measurement_completeness", 1e-9, worst);
    }
}

void run_entropy(Suite& s) {
    {
        auto rng = s.fork();
        double worst = 0.0;
        for (int t = 0; t < s.cfg.trials; ++t) {
            const Register reg =
                (t % 2 == 0) ? Register{kC} : Register{kC, kA};
            const DensityOperator rho = random_density(reg, rng);
            const DensityOperator sigma = random_density(reg, rng);
            const ExtendedReal d = relative_entropy(rho, sigma);
            if (!d.is_infinite()) worst = std::max(worst, -d.value());
        }
        s.record("klein_inequality", 1e-9, worst);
    }

    {
        auto rng = s.fork();
        double sub = 0.0, tri = 0.0;
        for (int t = 0; t < s.cfg.trials; ++t) {
            if (t % 2 == 0) {
                const DensityOperator rho = random_density({kC, kA}, rng);
                const QubitSet x{kC}, y{kA};
                sub = std::max(sub, -mutual_information(rho, x, y));
                const double sx = von_neumann(partial_trace(rho, x));
                const double sy = von_neumann(partial_trace(rho, y));
                tri = std::max(tri, std::abs(sx - sy) - von_neumann(rho));
            } else {
                const DensityOperator rho = random_density(kRegCAB, rng);
                for (const auto& [x, y] : kDisjointPairs3) {
                    sub = std::max(sub, -mutual_information(rho, x, y));
                    const double sx = von_neumann(partial_trace(rho, x));
                    const double sy = von_neumann(partial_trace(rho, y));
                    const double sxy =
                        von_neumann(partial_trace(rho, x.united(y)));
                    tri = std::max(tri, std::abs(sx - sy) - sxy);
                }
            }
        }
        s.record("subadditivity", 1e-9, sub);
        s.record("araki_lieb", 1e-9, tri);
    }

    {
        auto rng = s.fork();
        double worst = 0.0;
        const std::pair<QubitSet, QubitSet> bipartitions[] = {
            {QubitSet{kC}, QubitSet{kA, kB}},
            {QubitSet{kA}, QubitSet{kC, kB}},
            {QubitSet{kB}, QubitSet{kC, kA}}};
        for (int t = 0; t < s.cfg.trials; ++t) {
            const DensityOperator rho =
                density_from_pure(random_pure(3, rng), kRegCAB);
            for (const auto& [x, xbar] : bipartitions) {
                worst = std::max(worst,
                                 std::abs(von_neumann(partial_trace(rho, x)) -
                                          von_neumann(partial_trace(rho, xbar))));
            }
        }
        s.record("pure_state_symmetry", 1e-9, worst);
    }

    {
        auto rng = s.fork();
        double worst = 0.0;
        for (int t = 0; t < s.cfg.trials; ++t) {
            const DensityOperator rho = random_density(kRegCAB, rng);
            const double before = von_neumann(rho);
            for (const QubitSet& q : kAllSubsets) {
                const double after =
                    von_neumann(forget_outcomes(measure_computational(rho, q)));
                worst = std::max(worst, before - after);
            }
        }
        s.record("measurement_entropy_nondecrease", 1e-9, worst);
    }

    {
        auto rng = s.fork();
        double violations = 0.0;
        const std::pair<QubitSet, QubitSet> bipartitions[] = {
            {QubitSet{kC}, QubitSet{kA, kB}},
            {QubitSet{kA}, QubitSet{kC, kB}},
            {QubitSet{kB}, QubitSet{kC, kA}}};
        const StageId pure_stages[] = {StageId::S1, StageId::S2, StageId::S3,
                                       StageId::S4};
        for (int t = 0; t < s.cfg.trials; ++t) {
            const InputAmplitudes amps = random_amplitudes(rng);
            for (StageId stage : pure_stages) {
                const DensityOperator rho = stage_state(amps, stage);
                for (const auto& [x, xbar] : bipartitions) {
                    if (conditional_entropy(rho, x, xbar) < -1e-9 &&
                        classify(rho, {x, xbar}).factorization_class !=
                            FactorizationClass::entangled) {
                        violations += 1.0;
                    }
                }
            }
        }
        s.record("negative_cond_entropy_implies_entangled", 0.0, violations);
    }
}

void run_pipeline(Suite& s) {
    const std::vector<InputAmplitudes> grid = oracle_grid();
    const StageId table2_stages[] = {StageId::S1, StageId::S2, StageId::S3,
                                     StageId::S4, StageId::S5};
    const char* joint_keys[] = {"S_A",  "S_B",  "S_C", "S_AB",
                                "S_AC", "S_BC", "S_ABC"};

    {
        double worst = 0.0;
        for (const InputAmplitudes& amps : grid) {
            for (StageId stage : table2_stages) {
                const EntropyReport rep =
                    full_report(stage_state(amps, stage));
                for (const char* key : kEntropyReportKeys) {
                    const double expect =
                        oracle_value(amps, stage, key).value();
                    worst = std::max(worst,
                                     std::abs(entropy_field(rep, key) - expect));
                }
            }
            for (StageId stage : {StageId::S45_1, StageId::S45_2}) {
                const EntropyReport rep =
                    full_report(stage_state(amps, stage));
                for (const char* key : joint_keys) {
                    const double expect =
                        oracle_value(amps, stage, key).value();
                    worst = std::max(worst,
                                     std::abs(entropy_field(rep, key) - expect));
                }
            }
        }
        s.record("oracle_equivalence", 1e-9, worst);
    }

    {
        double worst = 0.0;
        for (const InputAmplitudes& amps : grid) {
            for (StageId stage : table2_stages) {
                const DensityOperator rho = stage_state(amps, stage);
                const DensityOperator mc = partial_trace(rho, QubitSet{kC});
                const DensityOperator ma = partial_trace(rho, QubitSet{kA});
                const DensityOperator mb = partial_trace(rho, QubitSet{kB});
                RelativeEntropySet pipe;
                pipe.c_vs_a = relative_entropy(mc, ma);
                pipe.a_vs_c = relative_entropy(ma, mc);
                pipe.c_vs_b = relative_entropy(mc, mb);
                pipe.b_vs_c = relative_entropy(mb, mc);
                pipe.a_vs_b = relative_entropy(ma, mb);
                pipe.b_vs_a = relative_entropy(mb, ma);
                for (const char* key : kRelativeEntropyKeys) {
                    const ExtendedReal expect = oracle_value(amps, stage, key);
                    const ExtendedReal got = relative_entropy_field(pipe, key);
                    if (expect.is_infinite() != got.is_infinite()) {
                        worst = std::max(worst, 1.0);
                    } else if (!expect.is_infinite()) {
                        worst = std::max(worst,
                                         std::abs(got.value() - expect.value()));
                    }
                }
            }
        }
        s.record("relative_entropy_oracle", 1e-9, worst);
    }

    {
        auto rng = s.fork();
        double inc = 0.0, dec = 0.0, stable = 0.0;
        const StageId later_stages[] = {StageId::S2,    StageId::S3,
                                        StageId::S4,    StageId::S45_1,
                                        StageId::S45_2, StageId::S5};
        for (int t = 0; t < s.cfg.trials; ++t) {
            const InputAmplitudes amps = random_amplitudes(rng);
            const EntropyReport e4 = full_report(stage_state(amps, StageId::S4));
            const EntropyReport e5 = full_report(stage_state(amps, StageId::S5));
            for (const char* key : {"S_ABC", "S_AB", "S_AC", "S_BC"})
                inc = std::max(inc, entropy_field(e4, key) - entropy_field(e5, key));
            for (const char* key : {"I_AB", "I_BC", "I_AC"})
                dec = std::max(dec, entropy_field(e5, key) - entropy_field(e4, key));
            for (StageId stage : later_stages) {
                const DensityOperator rho = stage_state(amps, stage);
                stable = std::max(
                    stable,
                    std::abs(von_neumann(partial_trace(rho, QubitSet{kA})) - 1.0));
                stable = std::max(
                    stable,
                    std::abs(von_neumann(partial_trace(rho, QubitSet{kB})) - 1.0));
            }
        }
        s.record("joint_entropy_increase_4_to_5", 1e-9, inc);
        s.record("mutual_information_decrease_4_to_5", 1e-9, dec);
        s.record("marginal_entropy_stable_after_stage_2", 1e-9, stable);
    }

    {
        double worst = 0.0;
        const std::vector<ScanRow> rows = fig3_scan(21, 5);
        auto row_at = [&rows, &worst](double r, double theta) {
            for (const ScanRow& row : rows)
                if (std::abs(row.r - r) < 1e-12 && std::abs(row.theta - theta) < 1e-12)
                    return row;
            worst = std::max(worst, 1.0); // grid point missing entirely
            return ScanRow{};
        };
        const ScanRow low = row_at(0.05, 0.0);
        const ScanRow high = row_at(0.95, 0.0);
        worst = std::max(worst, low.s_ac_452 - low.s_ac_451);
        worst = std::max(worst, high.s_ac_452 - high.s_ac_451);
        const InputAmplitudes mid =
            InputAmplitudes::from_polar(1.0 / std::sqrt(2.0), 0.0);
        const QubitSet ac{kC, kA};
        const double mid451 =
            von_neumann(partial_trace(stage_state(mid, StageId::S45_1), ac));
        const double mid452 =
            von_neumann(partial_trace(stage_state(mid, StageId::S45_2), ac));
        worst = std::max(worst, mid451 - mid452);
        for (const ScanRow& row : rows) {
            if (row.r == 0.0 || row.r == 1.0) {
                worst = std::max(worst, std::abs(row.s_ac_451 - 2.0));
                worst = std::max(worst, std::abs(row.s_ac_452 - 1.0));
            }
        }
        s.record("fig3_crossover", 1e-9, worst);
    }

    {
        auto rng = s.fork();
        double worst = 0.0;
        for (int t = 0; t < s.cfg.trials; ++t) {
            const InputAmplitudes amps = random_amplitudes(rng);
            for (int m1 = 0; m1 < 2; ++m1) {
                for (int m2 = 0; m2 < 2; ++m2) {
                    const PureState out = complete_teleportation(amps, m1, m2);
                    const Complex overlap =
                        std::conj(amps.a()) * out.amplitude(0) +
                        std::conj(amps.b()) * out.amplitude(1);
                    worst = std::max(worst, std::abs(1.0 - std::norm(overlap)));
                }
            }
        }
        s.record("teleport_fidelity", 1e-9, worst);
    }

    {
        auto rng = s.fork();
        double worst = 0.0;
        for (int t = 0; t < s.cfg.trials; ++t) {
            const InputAmplitudes amps = random_amplitudes(rng);
            const auto [stage4, stage5] = mutual_bc_compare(amps);
            worst = std::max(worst, stage5 - stage4);
        }
        s.record("mutual_bc_ordering", 1e-9, worst);
    }
}

void run_cli(Suite& s) {
    auto rng = s.fork();

    {
        double worst = 0.0;
        std::ostringstream os;
        write_scan_csv(os, fig3_scan(5, 5));
        const InputAmplitudes amps = random_amplitudes(rng);
        std::vector<StageReport> reports;
        for (StageId stage : kAllStages) reports.push_back(stage_report(amps, stage));
        std::ostringstream ros;
        write_reports_csv(ros, reports);

        // Parse both CSVs back and compare numeric fields.
        const std::vector<ScanRow> rows = fig3_scan(5, 5);
        std::istringstream is(os.str());
        std::string line;
        std::getline(is, line); // header
        std::size_t idx = 0;
        while (std::getline(is, line)) {
            double v[4];
            std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &v[0], &v[1], &v[2], &v[3]);
            worst = std::max(worst, std::abs(v[0] - rows[idx].r));
            worst = std::max(worst, std::abs(v[1] - rows[idx].theta));
            worst = std::max(worst, std::abs(v[2] - rows[idx].s_ac_451));
            worst = std::max(worst, std::abs(v[3] - rows[idx].s_ac_452));
            ++idx;
        }
        std::istringstream ris(ros.str());
        std::getline(ris, line); // header
        while (std::getline(ris, line)) {
            const std::size_t c1 = line.find(',');
            const std::size_t c2 = line.find(',', c1 + 1);
            const std::string stage = line.substr(0, c1);
            const std::string quantity = line.substr(c1 + 1, c2 - c1 - 1);
            const std::string value = line.substr(c2 + 1);
            const StageReport* rep = nullptr;
            for (const StageReport& r : reports)
                if (stage == stage_name(r.stage)) rep = &r;
            if (!rep) {
                worst = std::max(worst, 1.0);
                continue;
            }
            if (quantity.rfind("rel_", 0) == 0) {
                const ExtendedReal mem =
                    relative_entropy_field(rep->relative_entropies, quantity);
                if (mem.is_infinite()) {
                    if (value != "inf") worst = std::max(worst, 1.0);
                } else {
                    worst = std::max(worst, std::abs(std::stod(value) - mem.value()));
                }
            } else if (quantity.rfind("purity_", 0) != 0 &&
                       quantity.rfind("factorization_", 0) != 0) {
                worst = std::max(worst, std::abs(std::stod(value) -
                                                 entropy_field(rep->entropies,
                                                               quantity)));
            }
        }
        s.record("csv_roundtrip", 1e-11, worst);
    }

    {
        double violations = 0.0;
        const InputAmplitudes amps = random_amplitudes(rng);
        std::vector<StageReport> reports;
        for (StageId stage : kAllStages) reports.push_back(stage_report(amps, stage));
        std::ostringstream os;
        write_reports_json(os, reports);
        const nlohmann::json root = nlohmann::json::parse(os.str());
        if (root.size() != 7) violations += 1.0;
        for (StageId stage : kAllStages) {
            if (!root.contains(stage_name(stage))) {
                violations += 1.0;
                continue;
            }
            const nlohmann::json& obj = root[stage_name(stage)];
            std::size_t expected_keys = 2; // relative_entropies, classifications
            for (const char* key : kEntropyReportKeys) {
                if (!obj.contains(key)) violations += 1.0;
                ++expected_keys;
            }
            if (obj.size() != expected_keys) violations += 1.0;
            if (!obj.contains("relative_entropies") ||
                obj["relative_entropies"].size() != 6) {
                violations += 1.0;
            }
            if (!obj.contains("classifications") ||
                obj["classifications"].size() != 7) {
                violations += 1.0;
            }
        }
        s.record("json_report_keys", 0.0, violations);
    }
}

} // namespace

std::vector<PropertyResult> run_property_suite(const VerifyConfig& cfg) {
    Suite suite(cfg);
    run_linalg(suite);
    run_quantum(suite);
    run_entropy(suite);
    run_pipeline(suite);
    run_cli(suite);
    return suite.results;
}

std::string format_verify_summary(const std::vector<PropertyResult>& results) {
    std::string out;
    int failed = 0;
    for (const PropertyResult& r : results) {
        char line[160];
        std::snprintf(line, sizeof(line),
                      "%s: %s (worst residual %.3e, tolerance %.0e)\n",
                      r.name.c_str(), r.pass ? "pass" : "FAIL", r.worst_residual,
                      r.tolerance);
        out += line;
        if (!r.pass) ++failed;
    }
    char tail[96];
    if (failed == 0) {
        std::snprintf(tail, sizeof(tail), "all %zu properties passed\n",
                      results.size());
    } else {
        std::snprintf(tail, sizeof(tail), "%d of %zu properties FAILED\n", failed,
                      results.size());
    }
    out += tail;
    return out;
}

} // namespace qtel
