// SPDX-License-Identifier: Apache-2.0
#include "qtel/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qtel {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

/// -r^2 log2 r^2 - (1-r^2) log2 (1-r^2): the binary entropy of |a|^2.
double input_entropy(double r) {
    const double p = r * r;
    return -xlog2x(p) - xlog2x(1.0 - p);
}

/// (1+u)/2 log2(1+u) + (1-u)/2 log2(1-u); equals S(B:C) at stage 5.
/// Written in the product form so u = +/-1 evaluates exactly.
double coherence_term(double u) {
    return 0.5 * (xlog2x(1.0 + u) + xlog2x(1.0 - u));
}

} // namespace

InputAmplitudes::InputAmplitudes(Complex a, Complex b) : a_(a), b_(b) {
    const double norm = std::sqrt(std::norm(a_) + std::norm(b_));
    if (std::abs(norm - 1.0) > tol::kStateNorm) {
        throw NotNormalized("amplitude norm " + std::to_string(norm) +
                            " outside 1 +/- 1e-6");
    }
    a_ /= norm;
    b_ /= norm;
    r_ = std::abs(a_);
    theta_ = wrap_angle(std::arg(a_) - std::arg(b_));
    u_ = std::clamp(2.0 * (a_ * std::conj(b_)).real(), -1.0, 1.0);
}

InputAmplitudes InputAmplitudes::from_polar(double r, double theta) {
    if (r < 0.0 || r > 1.0) {
        throw NotNormalized("r = " + std::to_string(r) + " outside [0, 1]");
    }
    const double s = std::sqrt(std::max(0.0, 1.0 - r * r));
    return InputAmplitudes(Complex(r, 0.0),
                           Complex(s * std::cos(theta), -s * std::sin(theta)));
}

const char* stage_name(StageId stage) {
    switch (stage) {
        case StageId::S1: return "1";
        case StageId::S2: return "2";
        case StageId::S3: return "3";
        case StageId::S4: return "4";
        case StageId::S45_1: return "4.5-1";
        case StageId::S45_2: return "4.5-2";
        case StageId::S5: return "5";
    }
    return "?";
}

std::optional<StageId> parse_stage(std::string_view name) {
    for (StageId stage : kAllStages)
        if (name == stage_name(stage)) return stage;
    return std::nullopt;
}

PureState stage_pure_state(const InputAmplitudes& amps, StageId stage) {
    // |psi>_C |0>_A |0>_B, then the Fig-normalized gate sequence.
    std::vector<Complex> init(8, Complex(0.0, 0.0));
    init[0b000] = amps.a();
    init[0b100] = amps.b();
    PureState state(3, std::move(init));

    state = apply_gate(state, gates::hadamard(), {QubitLabel::A});
    if (stage == StageId::S1) return state;
    state = apply_gate(state, gates::cnot(), {QubitLabel::A, QubitLabel::B});
    if (stage == StageId::S2) return state;
    state = apply_gate(state, gates::cnot(), {QubitLabel::C, QubitLabel::A});
    if (stage == StageId::S3) return state;
    state = apply_gate(state, gates::hadamard(), {QubitLabel::C});
    if (stage == StageId::S4) return state;

    throw Error(std::string("stage_pure_state: stage ") + stage_name(stage) +
                " is not a pure-state stage");
}

DensityOperator stage_state(const InputAmplitudes& amps, StageId stage) {
    const Register cab{QubitLabel::C, QubitLabel::A, QubitLabel::B};
    switch (stage) {
        case StageId::S1:
        case StageId::S2:
        case StageId::S3:
        case StageId::S4:
            return density_from_pure(stage_pure_state(amps, stage), cab);
        case StageId::S45_1:
            return forget_outcomes(measure_computational(
                stage_state(amps, StageId::S4), QubitSet{QubitLabel::C}));
        case StageId::S45_2:
            return forget_outcomes(measure_computational(
                stage_state(amps, StageId::S4), QubitSet{QubitLabel::A}));
        case StageId::S5:
            return forget_outcomes(measure_computational(
                stage_state(amps, StageId::S4),
                QubitSet{QubitLabel::C, QubitLabel::A}));
    }
    throw Error("stage_state: unreachable");
}

StageReport stage_report(const InputAmplitudes& amps, StageId stage) {
    const DensityOperator rho = stage_state(amps, stage);
    const QubitSet c{QubitLabel::C}, a{QubitLabel::A}, b{QubitLabel::B};

    StageReport report;
    report.stage = stage;
    report.entropies = full_report(rho);

    const DensityOperator mc = partial_trace(rho, c);
    const DensityOperator ma = partial_trace(rho, a);
    const DensityOperator mb = partial_trace(rho, b);
    report.relative_entropies.c_vs_a = relative_entropy(mc, ma);
    report.relative_entropies.a_vs_c = relative_entropy(ma, mc);
    report.relative_entropies.c_vs_b = relative_entropy(mc, mb);
    report.relative_entropies.b_vs_c = relative_entropy(mb, mc);
    report.relative_entropies.a_vs_b = relative_entropy(ma, mb);
    report.relative_entropies.b_vs_a = relative_entropy(mb, ma);

    report.classifications.cab = classify(rho, {c, a, b});
    report.classifications.ca = classify(partial_trace(rho, c.united(a)), {c, a});
    report.classifications.cb = classify(partial_trace(rho, c.united(b)), {c, b});
    report.classifications.ab = classify(partial_trace(rho, a.united(b)), {a, b});
    report.classifications.c = classify(mc, {c});
    report.classifications.a = classify(ma, {a});
    report.classifications.b = classify(mb, {b});
    return report;
}

ExtendedReal relative_entropy_field(const RelativeEntropySet& set,
                                    std::string_view key) {
    if (key == "rel_C_A") return set.c_vs_a;
    if (key == "rel_A_C") return set.a_vs_c;
    if (key == "rel_C_B") return set.c_vs_b;
    if (key == "rel_B_C") return set.b_vs_c;
    if (key == "rel_A_B") return set.a_vs_b;
    if (key == "rel_B_A") return set.b_vs_a;
    throw UnknownQuantity("no relative-entropy field named " + std::string(key));
}

const Classification& classification_field(const SystemClassifications& set,
                                           std::string_view key) {
    if (key == "CAB") return set.cab;
    if (key == "CA") return set.ca;
    if (key == "CB") return set.cb;
    if (key == "AB") return set.ab;
    if (key == "C") return set.c;
    if (key == "A") return set.a;
    if (key == "B") return set.b;
    throw UnknownQuantity("no tracked system named " + std::string(key));
}

namespace {

enum class StageColumn { s1, s2, s34, s451, s452, s5 };

StageColumn column_of(StageId stage) {
    switch (stage) {
        case StageId::S1: return StageColumn::s1;
        case StageId::S2: return StageColumn::s2;
        case StageId::S3:
        case StageId::S4: return StageColumn::s34;
        case StageId::S45_1: return StageColumn::s451;
        case StageId::S45_2: return StageColumn::s452;
        case StageId::S5: return StageColumn::s5;
    }
    return StageColumn::s1;
}

} // namespace

ExtendedReal oracle_value(const InputAmplitudes& amps, StageId stage,
                          std::string_view quantity) {
    const double r = amps.r();
    const double u = amps.u();
    const double h = input_entropy(r);
    const double f = coherence_term(u);
    const StageColumn col = column_of(stage);

    auto unknown = [&]() -> ExtendedReal {
        throw UnknownQuantity("no tabulated closed form for " +
                              std::string(quantity) + " at stage " +
                              stage_name(stage));
    };

    // Joint and marginal entropies: tabulated at every stage.
    if (quantity == "S_ABC") {
        switch (col) {
            case StageColumn::s1:
            case StageColumn::s2:
            case StageColumn::s34: return 0.0;
            case StageColumn::s451:
            case StageColumn::s452: return 1.0;
            case StageColumn::s5: return 2.0;
        }
    }
    if (quantity == "S_A" || quantity == "S_B") {
        return col == StageColumn::s1 ? 0.0 : 1.0;
    }
    if (quantity == "S_C") {
        switch (col) {
            case StageColumn::s1:
            case StageColumn::s2: return 0.0;
            case StageColumn::s34:
            case StageColumn::s452: return h;
            case StageColumn::s451:
            case StageColumn::s5: return 1.0;
        }
    }
    if (quantity == "S_AB") {
        switch (col) {
            case StageColumn::s1:
            case StageColumn::s2: return 0.0;
            case StageColumn::s34:
            case StageColumn::s451: return h;
            case StageColumn::s452:
            case StageColumn::s5: return 1.0 + h;
        }
    }
    if (quantity == "S_AC") {
        switch (col) {
            case StageColumn::s1: return 0.0;
            case StageColumn::s2:
            case StageColumn::s34: return 1.0;
            case StageColumn::s451: return 2.0 - f;
            case StageColumn::s452: return 1.0 + h;
            case StageColumn::s5: return 2.0;
        }
    }
    if (quantity == "S_BC") {
        switch (col) {
            case StageColumn::s1: return 0.0;
            case StageColumn::s2:
            case StageColumn::s34: return 1.0;
            case StageColumn::s451: return 2.0 - f;
            case StageColumn::s452: return 1.0;
            case StageColumn::s5: return 2.0 - f;
        }
    }

    // Mutual information and conditional entropies: stages 1-4 and 5 only.
    const bool tabulated_mc = col == StageColumn::s1 || col == StageColumn::s2 ||
                              col == StageColumn::s34 || col == StageColumn::s5;
    if (quantity == "I_AB" || quantity == "I_BC" || quantity == "I_AC" ||
        quantity.substr(0, 2) == "S_") {
        if (quantity == "I_AB" && tabulated_mc) {
            switch (col) {
                case StageColumn::s1: return 0.0;
                case StageColumn::s2: return 2.0;
                case StageColumn::s34: return 2.0 - h;
                case StageColumn::s5: return 1.0 - h;
                default: break;
            }
        }
        if (quantity == "I_BC" && tabulated_mc) {
            switch (col) {
                case StageColumn::s1:
                case StageColumn::s2: return 0.0;
                case StageColumn::s34: return h;
                case StageColumn::s5: return f;
                default: break;
            }
        }
        if (quantity == "I_AC" && tabulated_mc) {
            switch (col) {
                case StageColumn::s1:
                case StageColumn::s2: return 0.0;
                case StageColumn::s34: return h;
                case StageColumn::s5: return 0.0;
                default: break;
            }
        }
        if ((quantity == "S_A_given_B" || quantity == "S_B_given_A") &&
            tabulated_mc) {
            switch (col) {
                case StageColumn::s1: return 0.0;
                case StageColumn::s2: return -1.0;
                case StageColumn::s34: return h - 1.0;
                case StageColumn::s5: return h;
                default: break;
            }
        }
        if ((quantity == "S_A_given_C" || quantity == "S_B_given_C") &&
            tabulated_mc) {
            switch (col) {
                case StageColumn::s1: return 0.0;
                case StageColumn::s2: return 1.0;
                case StageColumn::s34: return 1.0 - h;
                case StageColumn::s5:
                    return quantity == "S_A_given_C" ? 1.0 : 1.0 - f;
                default: break;
            }
        }
        if (quantity == "S_C_given_A" && tabulated_mc) {
            return col == StageColumn::s5 ? 1.0 : 0.0;
        }
        if (quantity == "S_C_given_B" && tabulated_mc) {
            return col == StageColumn::s5 ? ExtendedReal(1.0 - f)
                                          : ExtendedReal(0.0);
        }
    }

    // Relative entropies between single-qubit marginals, stages 1-4 and 5.
    if (quantity.substr(0, 4) == "rel_") {
        if (!tabulated_mc) return unknown();
        const double b2 = std::max(0.0, 1.0 - r * r); // |b|^2
        if (quantity == "rel_C_A" || quantity == "rel_A_C") {
            switch (col) {
                case StageColumn::s1:
                    // coefficient (1-u)/2 multiplies the log 0 divergence
                    return 0.5 * (1.0 - u) > tol::kSupport
                               ? ExtendedReal::infinity()
                               : ExtendedReal(0.0);
                case StageColumn::s2:
                    return quantity == "rel_C_A" ? ExtendedReal(1.0)
                                                 : ExtendedReal::infinity();
                case StageColumn::s34:
                    if (quantity == "rel_C_A") return 1.0 - h;
                    return std::min(r * r, b2) <= tol::kSupport
                               ? ExtendedReal::infinity()
                               : ExtendedReal(-std::log2(2.0 * r * std::sqrt(b2)));
                case StageColumn::s5: return 0.0;
                default: break;
            }
        }
        if (quantity == "rel_C_B" || quantity == "rel_B_C") {
            switch (col) {
                case StageColumn::s1:
                    return b2 > tol::kSupport ? ExtendedReal::infinity()
                                              : ExtendedReal(0.0);
                case StageColumn::s2:
                    return quantity == "rel_C_B" ? ExtendedReal(1.0)
                                                 : ExtendedReal::infinity();
                case StageColumn::s34:
                    if (quantity == "rel_C_B") return 1.0 - h;
                    return std::min(r * r, b2) <= tol::kSupport
                               ? ExtendedReal::infinity()
                               : ExtendedReal(-std::log2(2.0 * r * std::sqrt(b2)));
                case StageColumn::s5: return 0.0;
                default: break;
            }
        }
        if (quantity == "rel_A_B" || quantity == "rel_B_A") {
            return col == StageColumn::s1 ? ExtendedReal::infinity()
                                          : ExtendedReal(0.0);
        }
    }
    return unknown();
}

PureState complete_teleportation(const InputAmplitudes& amps, int m1, int m2) {
    if ((m1 & ~1) != 0 || (m2 & ~1) != 0) {
        throw Error("complete_teleportation: outcome bits must be 0 or 1");
    }
    const auto outcomes =
        measure_computational(stage_state(amps, StageId::S4),
                              QubitSet{QubitLabel::C, QubitLabel::A});
    const MeasurementOutcome& outcome =
        outcomes[static_cast<std::size_t>(2 * m1 + m2)];
    // All four outcomes occur with probability 1/4, so a state is present.
    DensityOperator bob = partial_trace(*outcome.post_state,
                                        QubitSet{QubitLabel::B});

    ComplexMatrix m = bob.matrix();
    if (m2) {
        const ComplexMatrix x = gates::pauli_x().unitary;
        m = x * m * x.adjoint();
    }
    if (m1) {
        const ComplexMatrix z = gates::pauli_z().unitary;
        m = z * m * z.adjoint();
    }

    // The corrected state is pure; read it off the dominant eigenvector.
    const EigenDecomposition eig = hermitian_eig(m);
    return PureState(1, {eig.eigenvectors(0, 0), eig.eigenvectors(1, 0)});
}

std::pair<double, double> mutual_bc_compare(const InputAmplitudes& amps) {
    return {input_entropy(amps.r()), coherence_term(amps.u())};
}

std::vector<ScanRow> fig3_scan(int r_steps, int theta_steps) {
    if (r_steps < 2 || theta_steps < 2) {
        throw Error("fig3_scan: step counts must be at least 2");
    }
    const QubitSet ac{QubitLabel::C, QubitLabel::A};
    std::vector<ScanRow> rows;
    rows.reserve(static_cast<std::size_t>(r_steps) * theta_steps);
    for (int i = 0; i < r_steps; ++i) {
        const double r = static_cast<double>(i) / (r_steps - 1);
        for (int j = 0; j < theta_steps; ++j) {
            const double theta = kTwoPi * j / (theta_steps - 1);
            const InputAmplitudes amps = InputAmplitudes::from_polar(r, theta);
            ScanRow row;
            row.r = r;
            row.theta = theta;
            row.s_ac_451 =
                von_neumann(partial_trace(stage_state(amps, StageId::S45_1), ac));
            row.s_ac_452 =
                von_neumann(partial_trace(stage_state(amps, StageId::S45_2), ac));
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace qtel
