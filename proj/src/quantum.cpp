// SPDX-License-Identifier: Apache-2.0
#include "qtel/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qtel {

const char* label_name(QubitLabel l) {
    switch (l) {
        case QubitLabel::C: return "C";
        case QubitLabel::A: return "A";
        case QubitLabel::B: return "B";
    }
    return "?";
}

QubitSet::QubitSet(std::initializer_list<QubitLabel> labels) {
    for (QubitLabel l : labels) mask_ |= 1u << static_cast<int>(l);
}

int QubitSet::size() const {
    int n = 0;
    for (int b = 0; b < 3; ++b)
        if ((mask_ >> b) & 1u) ++n;
    return n;
}

QubitSet QubitSet::united(const QubitSet& other) const {
    QubitSet u;
    u.mask_ = mask_ | other.mask_;
    return u;
}

std::vector<QubitLabel> QubitSet::labels() const {
    std::vector<QubitLabel> out;
    for (int b = 0; b < 3; ++b)
        if ((mask_ >> b) & 1u) out.push_back(static_cast<QubitLabel>(b));
    return out;
}

std::string QubitSet::to_string() const {
    std::string s;
    for (QubitLabel l : labels()) s += label_name(l);
    return s;
}

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > 4) {
        throw DimensionOverflow("qubit count " + std::to_string(n) +
                                " outside [1, 4]");
    }
}

double amplitude_norm(const std::vector<Complex>& amps) {
    double s = 0.0;
    for (const Complex& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

} // namespace

PureState::PureState(int qubit_count, std::vector<Complex> amplitudes)
    : qubit_count_(qubit_count), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(qubit_count);
    if (amplitudes_.size() != (1u << qubit_count)) {
        throw DimensionMismatch("amplitude count " +
                                std::to_string(amplitudes_.size()) +
                                " != 2^" + std::to_string(qubit_count));
    }
    const double norm = amplitude_norm(amplitudes_);
    if (std::abs(norm - 1.0) > tol::kStateNorm) {
        throw NotNormalized("state norm " + std::to_string(norm) +
                            " outside 1 +/- 1e-6");
    }
    for (Complex& a : amplitudes_) a /= norm;
}

PureState PureState::computational_basis(int qubit_count, unsigned basis_index) {
    check_qubit_count(qubit_count);
    std::vector<Complex> amps(1u << qubit_count, Complex(0.0, 0.0));
    amps.at(basis_index) = 1.0;
    return PureState(qubit_count, std::move(amps));
}

PureState PureState::single_qubit(Complex a, Complex b) {
    return PureState(1, {a, b});
}

Gate Gate::adjoint() const { return Gate{name + "_adj", unitary.adjoint()}; }

namespace gates {

Gate hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return Gate{"H", ComplexMatrix::from_rows({{s, s}, {s, -s}})};
}

Gate pauli_x() {
    return Gate{"X", ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}})};
}

Gate pauli_y() {
    return Gate{"Y", ComplexMatrix::from_rows(
                         {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}})};
}

Gate pauli_z() {
    return Gate{"Z", ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}})};
}

Gate cnot() {
    return Gate{"CNOT", ComplexMatrix::from_rows({{1.0, 0.0, 0.0, 0.0},
                                                  {0.0, 1.0, 0.0, 0.0},
                                                  {0.0, 0.0, 0.0, 1.0},
                                                  {0.0, 0.0, 1.0, 0.0}})};
}

} // namespace gates

DensityOperator::DensityOperator(Register reg, ComplexMatrix matrix)
    : register_(std::move(reg)), matrix_(std::move(matrix)) {
    const int n = static_cast<int>(register_.size());
    check_qubit_count(n);
    for (std::size_t i = 0; i < register_.size(); ++i) {
        for (std::size_t j = i + 1; j < register_.size(); ++j) {
            if (register_[i] == register_[j]) {
                throw UnknownLabel("duplicate register label " +
                                   std::string(label_name(register_[i])));
            }
        }
    }
    if (matrix_.dim() != (1 << n)) {
        throw DimensionMismatch("matrix dim " + std::to_string(matrix_.dim()) +
                                " != 2^" + std::to_string(n));
    }
    const double dev = matrix_.hermiticity_deviation();
    if (dev > tol::kDensityInvariant) {
        throw NotHermitian("density operator hermiticity deviation " +
                           std::to_string(dev));
    }
    const Complex tr = matrix_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > tol::kDensityInvariant) {
        throw NotNormalized("density operator trace " + std::to_string(tr.real()) +
                            " not 1 within 1e-9");
    }
}

bool DensityOperator::has_label(QubitLabel l) const {
    return std::find(register_.begin(), register_.end(), l) != register_.end();
}

int DensityOperator::position_of(QubitLabel l) const {
    for (std::size_t p = 0; p < register_.size(); ++p)
        if (register_[p] == l) return static_cast<int>(p);
    throw UnknownLabel(std::string("label ") + label_name(l) +
                       " not in register");
}

QubitSet DensityOperator::label_set() const {
    QubitSet s;
    for (QubitLabel l : register_) s = s.united(QubitSet{l});
    return s;
}

DensityOperator density_from_pure(const PureState& s, const Register& reg) {
    if (static_cast<int>(reg.size()) != s.qubit_count()) {
        throw DimensionMismatch("register size " + std::to_string(reg.size()) +
                                " != qubit count " +
                                std::to_string(s.qubit_count()));
    }
    const int d = 1 << s.qubit_count();
    ComplexMatrix m(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            m(i, j) = s.amplitude(static_cast<unsigned>(i)) *
                      std::conj(s.amplitude(static_cast<unsigned>(j)));
    return DensityOperator(reg, std::move(m));
}

PureState apply_gate(const PureState& s, const Gate& g,
                     const std::vector<QubitLabel>& targets) {
    const int arity = g.arity();
    if (static_cast<int>(targets.size()) != arity) {
        throw ArityMismatch("gate " + g.name + " expects " +
                            std::to_string(arity) + " target(s), got " +
                            std::to_string(targets.size()));
    }
    if (arity == 2 && targets[0] == targets[1]) {
        throw ArityMismatch("gate " + g.name + " given duplicate targets");
    }
    const int n = s.qubit_count();
    std::vector<int> pos;
    pos.reserve(targets.size());
    for (QubitLabel l : targets) {
        const int p = static_cast<int>(l);
        if (p >= n) {
            throw UnknownLabel(std::string("label ") + label_name(l) +
                               " outside a " + std::to_string(n) +
                               "-qubit state");
        }
        pos.push_back(p);
    }

    const unsigned dim = 1u << n;
    // Bit of register position p inside a basis index (position 0 is MSB).
    auto bit_shift = [n](int p) { return n - 1 - p; };

    std::vector<Complex> out(dim, Complex(0.0, 0.0));
    for (unsigned i = 0; i < dim; ++i) {
        unsigned sub = 0;
        for (int k = 0; k < arity; ++k)
            sub |= ((i >> bit_shift(pos[k])) & 1u) << (arity - 1 - k);
        Complex acc = 0.0;
        for (unsigned subp = 0; subp < (1u << arity); ++subp) {
            const Complex u = g.unitary(static_cast<int>(sub),
                                        static_cast<int>(subp));
            if (u == Complex(0.0, 0.0)) continue;
            unsigned src = i;
            for (int k = 0; k < arity; ++k) {
                const unsigned b = (subp >> (arity - 1 - k)) & 1u;
                const unsigned m = 1u << bit_shift(pos[k]);
                src = (src & ~m) | (b ? m : 0u);
            }
            acc += u * s.amplitude(src);
        }
        out[i] = acc;
    }
    return PureState(n, std::move(out));
}

namespace {

// Positions (ascending) of the set's labels inside the register.
std::vector<int> positions_of(const DensityOperator& rho, const QubitSet& set) {
    std::vector<int> pos;
    for (QubitLabel l : set.labels()) pos.push_back(rho.position_of(l));
    std::sort(pos.begin(), pos.end());
    return pos;
}

// Scatter the bits of `packed` (MSB first over `positions`) into a full
// basis index of an n-qubit register.
unsigned scatter_bits(unsigned packed, const std::vector<int>& positions, int n) {
    unsigned out = 0;
    const int k = static_cast<int>(positions.size());
    for (int l = 0; l < k; ++l) {
        const unsigned b = (packed >> (k - 1 - l)) & 1u;
        out |= b << (n - 1 - positions[static_cast<std::size_t>(l)]);
    }
    return out;
}

unsigned gather_bits(unsigned full, const std::vector<int>& positions, int n) {
    unsigned out = 0;
    const int k = static_cast<int>(positions.size());
    for (int l = 0; l < k; ++l) {
        const unsigned b = (full >> (n - 1 - positions[static_cast<std::size_t>(l)])) & 1u;
        out |= b << (k - 1 - l);
    }
    return out;
}

} // namespace

DensityOperator partial_trace(const DensityOperator& rho, const QubitSet& keep) {
    if (keep.empty()) throw EmptyKeepSet("partial_trace: empty keep set");
    for (QubitLabel l : keep.labels()) {
        if (!rho.has_label(l)) {
            throw UnknownLabel(std::string("partial_trace: label ") +
                               label_name(l) + " not in register");
        }
    }
    const int n = rho.qubit_count();
    const std::vector<int> keep_pos = positions_of(rho, keep);
    std::vector<int> traced_pos;
    for (int p = 0; p < n; ++p)
        if (std::find(keep_pos.begin(), keep_pos.end(), p) == keep_pos.end())
            traced_pos.push_back(p);

    const int k = static_cast<int>(keep_pos.size());
    const int m = n - k;
    ComplexMatrix out(1 << k);
    for (unsigned i = 0; i < (1u << k); ++i) {
        const unsigned base_i = scatter_bits(i, keep_pos, n);
        for (unsigned j = 0; j < (1u << k); ++j) {
            const unsigned base_j = scatter_bits(j, keep_pos, n);
            Complex sum = 0.0;
            for (unsigned t = 0; t < (1u << m); ++t) {
                const unsigned env = scatter_bits(t, traced_pos, n);
                sum += rho.matrix()(static_cast<int>(base_i | env),
                                    static_cast<int>(base_j | env));
            }
            out(static_cast<int>(i), static_cast<int>(j)) = sum;
        }
    }

    Register sub_reg;
    for (int p : keep_pos) sub_reg.push_back(rho.reg()[static_cast<std::size_t>(p)]);
    return DensityOperator(std::move(sub_reg), std::move(out));
}

double purity(const DensityOperator& rho) {
    // Tr(rho^2) = sum_ij rho_ij * conj(rho_ij) for Hermitian rho.
    double s = 0.0;
    const ComplexMatrix& m = rho.matrix();
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) s += std::norm(m(i, j));
    return s;
}

std::vector<MeasurementOutcome> measure_computational(const DensityOperator& rho,
                                                      const QubitSet& qubits) {
    if (qubits.empty()) throw EmptyMeasureSet("measure_computational: empty set");
    for (QubitLabel l : qubits.labels()) {
        if (!rho.has_label(l)) {
            throw UnknownLabel(std::string("measure_computational: label ") +
                               label_name(l) + " not in register");
        }
    }
    const int n = rho.qubit_count();
    const unsigned dim = 1u << n;
    const std::vector<int> meas_pos = positions_of(rho, qubits);
    const int k = static_cast<int>(meas_pos.size());

    std::vector<MeasurementOutcome> outcomes;
    outcomes.reserve(1u << k);
    for (unsigned assignment = 0; assignment < (1u << k); ++assignment) {
        const unsigned want = scatter_bits(assignment, meas_pos, n);
        unsigned mask = 0;
        for (int p : meas_pos) mask |= 1u << (n - 1 - p);

        ComplexMatrix projected(static_cast<int>(dim));
        double prob = 0.0;
        for (unsigned i = 0; i < dim; ++i) {
            if ((i & mask) != want) continue;
            prob = prob + rho.matrix()(static_cast<int>(i), static_cast<int>(i)).real();
            for (unsigned j = 0; j < dim; ++j) {
                if ((j & mask) != want) continue;
                projected(static_cast<int>(i), static_cast<int>(j)) =
                    rho.matrix()(static_cast<int>(i), static_cast<int>(j));
            }
        }
        prob = std::max(prob, 0.0);

        MeasurementOutcome outcome;
        outcome.measured = qubits;
        outcome.bits.resize(static_cast<std::size_t>(k));
        for (int l = 0; l < k; ++l)
            outcome.bits[static_cast<std::size_t>(l)] =
                static_cast<int>((assignment >> (k - 1 - l)) & 1u);
        outcome.probability = prob;
        if (prob >= tol::kNegligibleOutcome) {
            projected *= Complex(1.0 / prob, 0.0);
            outcome.post_state = DensityOperator(rho.reg(), std::move(projected));
        }
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

DensityOperator forget_outcomes(const std::vector<MeasurementOutcome>& outcomes) {
    if (outcomes.empty()) {
        throw InconsistentOutcomes("forget_outcomes: empty outcome list");
    }
    const MeasurementOutcome* first_valid = nullptr;
    for (const MeasurementOutcome& o : outcomes) {
        if (!o.post_state) continue;
        if (!first_valid) {
            first_valid = &o;
        } else if (o.post_state->reg() != first_valid->post_state->reg() ||
                   !(o.measured == first_valid->measured)) {
            throw InconsistentOutcomes("forget_outcomes: outcomes disagree on "
                                       "register or measured set");
        }
    }
    if (!first_valid) {
        throw InconsistentOutcomes("forget_outcomes: no outcome carries a state");
    }

    ComplexMatrix acc(first_valid->post_state->dim());
    for (const MeasurementOutcome& o : outcomes) {
        if (!o.post_state) continue; // Pi rho Pi has trace < 1e-12 here
        ComplexMatrix term = o.post_state->matrix();
        term *= Complex(o.probability, 0.0);
        acc += term;
    }
    return DensityOperator(first_valid->post_state->reg(), std::move(acc));
}

const char* to_string(PurityClass c) {
    switch (c) {
        case PurityClass::pure: return "pure";
        case PurityClass::mixed: return "mixed";
        case PurityClass::completely_mixed: return "completely_mixed";
    }
    return "?";
}

const char* to_string(FactorizationClass c) {
    switch (c) {
        case FactorizationClass::product: return "product";
        case FactorizationClass::entangled: return "entangled";
    }
    return "?";
}

Classification classify(const DensityOperator& rho_joint,
                        const std::vector<QubitSet>& partition) {
    if (partition.empty()) throw BadPartition("classify: empty partition");
    QubitSet seen;
    for (const QubitSet& block : partition) {
        if (block.empty()) throw BadPartition("classify: empty partition block");
        if (!seen.disjoint_with(block)) {
            throw BadPartition("classify: overlapping partition blocks");
        }
        for (QubitLabel l : block.labels()) {
            if (!rho_joint.has_label(l)) {
                throw BadPartition(std::string("classify: label ") +
                                   label_name(l) + " not in register");
            }
        }
        seen = seen.united(block);
    }
    if (!(seen == rho_joint.label_set())) {
        throw BadPartition("classify: partition does not cover the register");
    }

    Classification out{};
    const int d = rho_joint.dim();
    const double p = purity(rho_joint);
    if (p >= 1.0 - tol::kClassify) {
        out.purity_class = PurityClass::pure;
    } else {
        ComplexMatrix mixed = ComplexMatrix::identity(d);
        mixed *= Complex(1.0 / d, 0.0);
        out.purity_class =
            frobenius_distance(rho_joint.matrix(), mixed) < tol::kClassify
                ? PurityClass::completely_mixed
                : PurityClass::mixed;
    }

    if (partition.size() == 1) {
        out.factorization_class = FactorizationClass::product;
        return out;
    }

    // Product of partition marginals, each embedded at its own register
    // positions so interleaved blocks compare correctly.
    const int n = rho_joint.qubit_count();
    struct BlockMarginal {
        std::vector<int> positions;
        ComplexMatrix matrix;
    };
    std::vector<BlockMarginal> blocks;
    for (const QubitSet& block : partition) {
        DensityOperator marg = partial_trace(rho_joint, block);
        std::vector<int> pos;
        for (QubitLabel l : block.labels()) pos.push_back(rho_joint.position_of(l));
        std::sort(pos.begin(), pos.end());
        blocks.push_back(BlockMarginal{std::move(pos), marg.matrix()});
    }

    ComplexMatrix product(d);
    for (unsigned i = 0; i < static_cast<unsigned>(d); ++i) {
        for (unsigned j = 0; j < static_cast<unsigned>(d); ++j) {
            Complex v = 1.0;
            for (const BlockMarginal& blk : blocks) {
                const unsigned bi = gather_bits(i, blk.positions, n);
                const unsigned bj = gather_bits(j, blk.positions, n);
                v *= blk.matrix(static_cast<int>(bi), static_cast<int>(bj));
            }
            product(static_cast<int>(i), static_cast<int>(j)) = v;
        }
    }
    out.factorization_class =
        frobenius_distance(rho_joint.matrix(), product) < tol::kClassify
            ? FactorizationClass::product
            : FactorizationClass::entangled;
    return out;
}

} // namespace qtel
