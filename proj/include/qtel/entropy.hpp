// SPDX-License-Identifier: Apache-2.0
//
// Entropy functionals over density operators: von Neumann entropy, joint /
// conditional entropy, mutual information and relative entropy. All values
// are in bits (base-2 logarithms) with the 0 log 0 = 0 convention.
#pragma once

#include <string>
#include <string_view>

#include "qtel/quantum.hpp"

namespace qtel {

/// A nonnegative real or positive infinity; the result type of relative
/// entropy, which diverges when the support of rho meets the kernel of
/// sigma.
class ExtendedReal {
public:
    ExtendedReal() = default;
    /* implicit */ ExtendedReal(double v) : value_(v) {}

    static ExtendedReal infinity();

    bool is_infinite() const { return infinite_; }
    /// Finite value; only meaningful when !is_infinite().
    double value() const { return value_; }
    /// Finite value, or the IEEE infinity for divergent entries.
    double as_double() const;

private:
    bool infinite_ = false;
    double value_ = 0.0;
};

/// "inf" for divergent values, otherwise a plain decimal rendering.
std::string to_string(const ExtendedReal& v);

/// Every Table-style entropy quantity of a three-qubit C,A,B state, in bits.
/// Mutual and conditional entries are derived from the stored joint and
/// marginal entropies, so the defining identities hold exactly.
struct EntropyReport {
    double s_a = 0.0, s_b = 0.0, s_c = 0.0;
    double s_ab = 0.0, s_ac = 0.0, s_bc = 0.0, s_abc = 0.0;
    double mutual_ab = 0.0, mutual_bc = 0.0, mutual_ac = 0.0;
    double cond_a_given_b = 0.0, cond_a_given_c = 0.0, cond_b_given_c = 0.0;
    double cond_b_given_a = 0.0, cond_c_given_a = 0.0, cond_c_given_b = 0.0;
};

/// Canonical field names of EntropyReport, in serialization order.
inline constexpr const char* kEntropyReportKeys[] = {
    "S_A",           "S_B",           "S_C",           "S_AB",
    "S_AC",          "S_BC",          "S_ABC",         "I_AB",
    "I_BC",          "I_AC",          "S_A_given_B",   "S_A_given_C",
    "S_B_given_C",   "S_B_given_A",   "S_C_given_A",   "S_C_given_B"};

/// Field lookup by canonical name; throws UnknownQuantity.
double entropy_field(const EntropyReport& report, std::string_view key);

/// S(rho) = -sum_i lambda_i log2 lambda_i over the eigenvalues; roundoff
/// negatives are clamped to zero. Result lies in [0, n] for n qubits.
double von_neumann(const DensityOperator& rho);

/// S(target | given) = S(target u given) - S(given), via partial traces of
/// the joint state. May be negative. Throws OverlappingSets.
double conditional_entropy(const DensityOperator& rho_joint,
                           const QubitSet& target, const QubitSet& given);

/// S(x : y) = S(x) + S(y) - S(x u y). Throws OverlappingSets.
double mutual_information(const DensityOperator& rho_joint, const QubitSet& x,
                          const QubitSet& y);

/// S(rho || sigma) = Tr(rho log rho) - Tr(rho log sigma). Divergence rule:
/// any sigma eigenvalue <= 1e-10 whose eigenvector carries rho weight
/// > 1e-10 makes the result positive infinity; otherwise the finite value
/// is clamped into [0, inf) when within -1e-9 of zero.
/// Throws DimensionMismatch when the registers differ.
ExtendedReal relative_entropy(const DensityOperator& rho,
                              const DensityOperator& sigma);

/// All sixteen EntropyReport quantities of a state over register {C, A, B}.
/// Throws WrongRegister for anything else.
EntropyReport full_report(const DensityOperator& rho_cab);

namespace tol {
/// Support/kernel threshold for the relative-entropy divergence rule.
inline constexpr double kSupport = 1e-10;
/// Klein clamp band: finite relative entropies in [-1e-9, 0) become 0.
inline constexpr double kKleinClamp = 1e-9;
} // namespace tol

} // namespace qtel
