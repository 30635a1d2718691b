// SPDX-License-Identifier: Apache-2.0
#include "qtel/entropy.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace qtel {

ExtendedReal ExtendedReal::infinity() {
    ExtendedReal v;
    v.infinite_ = true;
    v.value_ = std::numeric_limits<double>::infinity();
    return v;
}

double ExtendedReal::as_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

std::string to_string(const ExtendedReal& v) {
    if (v.is_infinite()) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v.value());
    return buf;
}

double entropy_field(const EntropyReport& report, std::string_view key) {
    if (key == "S_A") return report.s_a;
    if (key == "S_B") return report.s_b;
    if (key == "S_C") return report.s_c;
    if (key == "S_AB") return report.s_ab;
    if (key == "S_AC") return report.s_ac;
    if (key == "S_BC") return report.s_bc;
    if (key == "S_ABC") return report.s_abc;
    if (key == "I_AB") return report.mutual_ab;
    if (key == "I_BC") return report.mutual_bc;
    if (key == "I_AC") return report.mutual_ac;
    if (key == "S_A_given_B") return report.cond_a_given_b;
    if (key == "S_A_given_C") return report.cond_a_given_c;
    if (key == "S_B_given_C") return report.cond_b_given_c;
    if (key == "S_B_given_A") return report.cond_b_given_a;
    if (key == "S_C_given_A") return report.cond_c_given_a;
    if (key == "S_C_given_B") return report.cond_c_given_b;
    throw UnknownQuantity("no entropy field named " + std::string(key));
}

double von_neumann(const DensityOperator& rho) {
    const EigenDecomposition eig = hermitian_eig(rho.matrix());
    double s = 0.0;
    for (double lambda : eig.eigenvalues) {
        if (lambda <= 0.0) continue; // clamped roundoff band, 0 log 0 = 0
        s -= lambda * std::log2(lambda);
    }
    return std::max(s, 0.0);
}

namespace {

void check_subset(const DensityOperator& rho, const QubitSet& set,
                  const char* what) {
    for (QubitLabel l : set.labels()) {
        if (!rho.has_label(l)) {
            throw UnknownLabel(std::string(what) + ": label " + label_name(l) +
                               " not in register");
        }
    }
}

} // namespace

double conditional_entropy(const DensityOperator& rho_joint,
                           const QubitSet& target, const QubitSet& given) {
    if (!target.disjoint_with(given)) {
        throw OverlappingSets("conditional_entropy: target and given overlap");
    }
    check_subset(rho_joint, target, "conditional_entropy");
    check_subset(rho_joint, given, "conditional_entropy");
    if (target.empty()) {
        throw EmptyKeepSet("conditional_entropy: empty target");
    }
    const double s_union =
        von_neumann(partial_trace(rho_joint, target.united(given)));
    if (given.empty()) return s_union;
    return s_union - von_neumann(partial_trace(rho_joint, given));
}

double mutual_information(const DensityOperator& rho_joint, const QubitSet& x,
                          const QubitSet& y) {
    if (!x.disjoint_with(y)) {
        throw OverlappingSets("mutual_information: sets overlap");
    }
    check_subset(rho_joint, x, "mutual_information");
    check_subset(rho_joint, y, "mutual_information");
    if (x.empty() || y.empty()) {
        throw EmptyKeepSet("mutual_information: empty set");
    }
    return von_neumann(partial_trace(rho_joint, x)) +
           von_neumann(partial_trace(rho_joint, y)) -
           von_neumann(partial_trace(rho_joint, x.united(y)));
}

ExtendedReal relative_entropy(const DensityOperator& rho,
                              const DensityOperator& sigma) {
    if (rho.reg() != sigma.reg()) {
        throw DimensionMismatch("relative_entropy: registers differ");
    }
    const EigenDecomposition sig = hermitian_eig(sigma.matrix());
    const int d = sigma.dim();

    // Weight of rho along each sigma eigenvector: <v_j| rho |v_j>.
    std::vector<double> weight(static_cast<std::size_t>(d), 0.0);
    for (int j = 0; j < d; ++j) {
        Complex w = 0.0;
        for (int i = 0; i < d; ++i) {
            Complex row = 0.0;
            for (int k = 0; k < d; ++k)
                row += rho.matrix()(i, k) * sig.eigenvectors(k, j);
            w += std::conj(sig.eigenvectors(i, j)) * row;
        }
        weight[static_cast<std::size_t>(j)] = std::max(w.real(), 0.0);
    }

    for (int j = 0; j < d; ++j) {
        if (sig.eigenvalues[static_cast<std::size_t>(j)] <= tol::kSupport &&
            weight[static_cast<std::size_t>(j)] > tol::kSupport) {
            return ExtendedReal::infinity(); // support of rho meets kernel of sigma
        }
    }

    double value = -von_neumann(rho);
    for (int j = 0; j < d; ++j) {
        const double s = sig.eigenvalues[static_cast<std::size_t>(j)];
        if (s <= tol::kSupport) continue;
        value -= std::log2(s) * weight[static_cast<std::size_t>(j)];
    }
    if (value < 0.0 && value >= -tol::kKleinClamp) value = 0.0;
    return ExtendedReal(value);
}

EntropyReport full_report(const DensityOperator& rho_cab) {
    if (rho_cab.reg() !=
        Register{QubitLabel::C, QubitLabel::A, QubitLabel::B}) {
        throw WrongRegister("full_report: register must be C,A,B");
    }
    const QubitSet c{QubitLabel::C}, a{QubitLabel::A}, b{QubitLabel::B};

    EntropyReport r;
    r.s_c = von_neumann(partial_trace(rho_cab, c));
    r.s_a = von_neumann(partial_trace(rho_cab, a));
    r.s_b = von_neumann(partial_trace(rho_cab, b));
    r.s_ab = von_neumann(partial_trace(rho_cab, a.united(b)));
    r.s_ac = von_neumann(partial_trace(rho_cab, a.united(c)));
    r.s_bc = von_neumann(partial_trace(rho_cab, b.united(c)));
    r.s_abc = von_neumann(rho_cab);

    r.mutual_ab = r.s_a + r.s_b - r.s_ab;
    r.mutual_bc = r.s_b + r.s_c - r.s_bc;
    r.mutual_ac = r.s_a + r.s_c - r.s_ac;

    r.cond_a_given_b = r.s_ab - r.s_b;
    r.cond_a_given_c = r.s_ac - r.s_c;
    r.cond_b_given_c = r.s_bc - r.s_c;
    r.cond_b_given_a = r.s_ab - r.s_a;
    r.cond_c_given_a = r.s_ac - r.s_a;
    r.cond_c_given_b = r.s_bc - r.s_b;
    return r;
}

} // namespace qtel
