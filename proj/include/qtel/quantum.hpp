// SPDX-License-Identifier: Apache-2.0
//
// Qubit-register states and the operations the teleportation analysis is
// built from: density operators, gate application, partial trace,
// computational-basis measurement, outcome averaging and state
// classification.
//
// Register convention: label C sits at register position 0 and is the most
// significant bit of a basis index, so a three-qubit basis index is
// 4*C + 2*A + 1*B.
#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "qtel/linalg.hpp"

namespace qtel {

enum class QubitLabel : int { C = 0, A = 1, B = 2 };

const char* label_name(QubitLabel l);

/// Register of a state: labels listed most-significant bit first.
using Register = std::vector<QubitLabel>;

/// Subset of {C, A, B}; iteration always yields labels in C, A, B order
/// regardless of construction order.
class QubitSet {
public:
    QubitSet() = default;
    QubitSet(std::initializer_list<QubitLabel> labels);

    bool contains(QubitLabel l) const { return (mask_ >> static_cast<int>(l)) & 1u; }
    bool empty() const { return mask_ == 0; }
    int size() const;
    bool disjoint_with(const QubitSet& other) const { return (mask_ & other.mask_) == 0; }
    QubitSet united(const QubitSet& other) const;
    bool operator==(const QubitSet& other) const = default;

    /// Labels in canonical C, A, B order.
    std::vector<QubitLabel> labels() const;
    std::string to_string() const;

private:
    unsigned mask_ = 0;
};

/// Complex amplitude vector over 1..4 qubits. Construction normalizes the
/// amplitudes when the 2-norm is within 1e-6 of 1 and rejects anything
/// further off as NotNormalized.
class PureState {
public:
    PureState(int qubit_count, std::vector<Complex> amplitudes);

    static PureState computational_basis(int qubit_count, unsigned basis_index);
    /// a|0> + b|1>, normalized under the same 1e-6 rule.
    static PureState single_qubit(Complex a, Complex b);

    int qubit_count() const { return qubit_count_; }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    Complex amplitude(unsigned basis_index) const { return amplitudes_[basis_index]; }

private:
    int qubit_count_;
    std::vector<Complex> amplitudes_;
};

/// Named unitary, 2x2 or 4x4. For CNOT the first target is the control.
struct Gate {
    std::string name;
    ComplexMatrix unitary;

    int arity() const { return unitary.dim() == 2 ? 1 : 2; }
    Gate adjoint() const;
};

namespace gates {
Gate hadamard();
Gate pauli_x();
Gate pauli_y();
Gate pauli_z();
Gate cnot();
} // namespace gates

/// Hermitian, unit-trace operator over a labeled register. Hermiticity and
/// trace are validated on construction (1e-9); positive semidefiniteness is
/// a consequence of how states are built and is checked by the property
/// suite rather than per construction.
class DensityOperator {
public:
    DensityOperator(Register reg, ComplexMatrix matrix);

    const Register& reg() const { return register_; }
    const ComplexMatrix& matrix() const { return matrix_; }
    int qubit_count() const { return static_cast<int>(register_.size()); }
    int dim() const { return matrix_.dim(); }

    bool has_label(QubitLabel l) const;
    /// Register position of a label; throws UnknownLabel.
    int position_of(QubitLabel l) const;
    QubitSet label_set() const;

private:
    Register register_;
    ComplexMatrix matrix_;
};

/// rho = |s><s| over the given register (length must match the state).
DensityOperator density_from_pure(const PureState& s, const Register& reg);

/// Apply a gate to the listed target labels; label L acts on register
/// position static_cast<int>(L), so states are implicitly over the prefix
/// of (C, A, B). Throws ArityMismatch or UnknownLabel.
PureState apply_gate(const PureState& s, const Gate& g,
                     const std::vector<QubitLabel>& targets);

/// Reduced operator over `keep`, which stays in original register order.
DensityOperator partial_trace(const DensityOperator& rho, const QubitSet& keep);

/// Tr(rho^2); 1 for pure states, 1/dim for the completely mixed state.
double purity(const DensityOperator& rho);

/// One entry per bit assignment of the measured labels (canonical order,
/// binary counting). Outcomes with probability below 1e-12 carry no
/// post-state; everything else carries Pi rho Pi / p.
struct MeasurementOutcome {
    QubitSet measured;
    std::vector<int> bits; // aligned with measured.labels()
    double probability = 0.0;
    std::optional<DensityOperator> post_state;
};

std::vector<MeasurementOutcome> measure_computational(const DensityOperator& rho,
                                                      const QubitSet& qubits);

/// Average over a full outcome set from one measure_computational call:
/// sum_i Pi_i rho Pi_i. Throws InconsistentOutcomes when the outcomes do not
/// belong together.
DensityOperator forget_outcomes(const std::vector<MeasurementOutcome>& outcomes);

enum class PurityClass { pure, mixed, completely_mixed };
enum class FactorizationClass { product, entangled };

const char* to_string(PurityClass c);
const char* to_string(FactorizationClass c);

struct Classification {
    PurityClass purity_class;
    FactorizationClass factorization_class;
};

/// Classify against a disjoint partition covering the register. The
/// factorization test compares rho with the product of its partition
/// marginals (embedded at the correct register positions); this is a
/// product-state criterion, not a separability test.
Classification classify(const DensityOperator& rho_joint,
                        const std::vector<QubitSet>& partition);

namespace tol {
inline constexpr double kStateNorm = 1e-6;       // accept-and-normalize band
inline constexpr double kDensityInvariant = 1e-9; // hermiticity/trace check
inline constexpr double kNegligibleOutcome = 1e-12;
inline constexpr double kClassify = 1e-8;
} // namespace tol

} // namespace qtel
