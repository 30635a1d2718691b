// SPDX-License-Identifier: Apache-2.0
//
// The single-qubit teleportation protocol, stage by stage:
//
//   C: |psi> ----------------*----H----[meter]---------------
//   A: |0>   --H----*--------X---------[meter]---------------
//   B: |0>   -------X-----------------------------X^M2--Z^M1-
//            ^stage1    ^2       ^3,4    ^5
//
// Stage 1 is the product state after the Hadamard on A; CNOT(A->B) leads to
// stage 2, CNOT(C->A) to stage 3 and H on C to stage 4. Stage 5 averages
// Alice's {C,A} measurement; stages 4.5-1 / 4.5-2 average a measurement of C
// alone / A alone. Alongside the matrix pipeline, `oracle_value` evaluates
// the closed-form entropy expressions directly from (r, theta, u) as an
// independent cross-check route.
#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "qtel/entropy.hpp"

namespace qtel {

/// Input amplitudes a|0> + b|1> of the teleported qubit. Normalized on
/// construction (NotNormalized beyond 1e-6), with the derived quantities
///   r = |a|,  theta = Arg(a) - Arg(b) in [0, 2pi),  u = a b* + a* b.
class InputAmplitudes {
public:
    InputAmplitudes(Complex a, Complex b);
    /// a = r, b = sqrt(1-r^2) e^{-i theta}; requires r in [0, 1].
    static InputAmplitudes from_polar(double r, double theta);

    Complex a() const { return a_; }
    Complex b() const { return b_; }
    double r() const { return r_; }
    double theta() const { return theta_; }
    double u() const { return u_; }

private:
    Complex a_, b_;
    double r_, theta_, u_;
};

enum class StageId { S1, S2, S3, S4, S45_1, S45_2, S5 };

inline constexpr StageId kAllStages[] = {StageId::S1,    StageId::S2,
                                         StageId::S3,    StageId::S4,
                                         StageId::S45_1, StageId::S45_2,
                                         StageId::S5};

/// "1", "2", "3", "4", "4.5-1", "4.5-2", "5".
const char* stage_name(StageId stage);
std::optional<StageId> parse_stage(std::string_view name);

/// The six relative entropies between single-qubit marginals at one stage.
struct RelativeEntropySet {
    ExtendedReal c_vs_a; // S(rho^C || rho^A)
    ExtendedReal a_vs_c;
    ExtendedReal c_vs_b;
    ExtendedReal b_vs_c;
    ExtendedReal a_vs_b;
    ExtendedReal b_vs_a;
};

/// Canonical names of the six relative entropies, in serialization order;
/// rel_X_Y denotes S(rho^X || rho^Y).
inline constexpr const char* kRelativeEntropyKeys[] = {
    "rel_C_A", "rel_A_C", "rel_C_B", "rel_B_C", "rel_A_B", "rel_B_A"};

/// Field lookup by canonical name; throws UnknownQuantity.
ExtendedReal relative_entropy_field(const RelativeEntropySet& set,
                                    std::string_view key);

/// Purity/factorization classes of the seven systems tracked per stage.
struct SystemClassifications {
    Classification cab, ca, cb, ab, c, a, b;
};

/// Names of the tracked systems, joint systems first.
inline constexpr const char* kSystemKeys[] = {"CAB", "CA", "CB", "AB",
                                              "C",   "A",  "B"};

/// System lookup by name; throws UnknownQuantity.
const Classification& classification_field(const SystemClassifications& set,
                                           std::string_view key);

struct StageReport {
    StageId stage = StageId::S1;
    EntropyReport entropies;
    RelativeEntropySet relative_entropies;
    SystemClassifications classifications;
};

/// Pure state vector at stages 1-4 built by sequential gate application.
PureState stage_pure_state(const InputAmplitudes& amps, StageId stage);

/// Density operator over register C,A,B at any stage. Stages 1-4 are pure;
/// 4.5-1, 4.5-2 and 5 average a projective measurement of {C}, {A} and
/// {C,A} respectively.
DensityOperator stage_state(const InputAmplitudes& amps, StageId stage);

/// Entropies, relative entropies and classifications at one stage, all
/// computed through the matrix pipeline.
StageReport stage_report(const InputAmplitudes& amps, StageId stage);

/// Closed-form value of a tabulated quantity, evaluated directly from
/// (r, theta, u) with no matrix machinery; the cross-check oracle for the
/// pipeline. Quantity names follow the report keys: "S_A".."S_ABC", "I_AB",
/// "I_BC", "I_AC", "S_A_given_B" and friends, and "rel_C_A" style names for
/// the relative entropies (rel_X_Y = S(rho^X || rho^Y)). Entropies are
/// tabulated for every stage; mutual/conditional/relative quantities only
/// for stages 1-4 and 5. Throws UnknownQuantity otherwise.
ExtendedReal oracle_value(const InputAmplitudes& amps, StageId stage,
                          std::string_view quantity);

/// Bob's qubit after Alice measures (C=m1, A=m2) and he applies X^m2 then
/// Z^m1. Always returns the input state up to global phase.
PureState complete_teleportation(const InputAmplitudes& amps, int m1, int m2);

/// S(B:C) before and after the measurement: the stage-4 and stage-5 branch
/// values; the first is never below the second.
std::pair<double, double> mutual_bc_compare(const InputAmplitudes& amps);

struct ScanRow {
    double r = 0.0;
    double theta = 0.0;
    double s_ac_451 = 0.0;
    double s_ac_452 = 0.0;
};

/// Joint entropy S(A,C) at both intermediate stages over a uniform grid
/// r in [0,1] x theta in [0,2pi] (both endpoints included), row-major with
/// r outermost, computed through the matrix pipeline. Step counts must be
/// at least 2.
std::vector<ScanRow> fig3_scan(int r_steps, int theta_steps);

} // namespace qtel
