// SPDX-License-Identifier: Apache-2.0
#include "qtel/sampling.hpp"

#include <cmath>

namespace qtel {

namespace {

Complex standard_complex(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double re = gauss(rng);
    const double im = gauss(rng);
    return Complex(re, im);
}

} // namespace

ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = standard_complex(rng);
    ComplexMatrix h(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return h;
}

PureState random_pure(int qubit_count, std::mt19937_64& rng) {
    const unsigned dim = 1u << qubit_count;
    std::vector<Complex> amps(dim);
    double norm2 = 0.0;
    for (Complex& a : amps) {
        a = standard_complex(rng);
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& a : amps) a *= inv;
    return PureState(qubit_count, std::move(amps));
}

DensityOperator random_density(const Register& reg, std::mt19937_64& rng) {
    const int dim = 1 << reg.size();
    ComplexMatrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = standard_complex(rng);

    ComplexMatrix rho = g * g.adjoint();
    rho *= Complex(1.0 / rho.trace().real(), 0.0);
    // Force an exactly Hermitian matrix; the product is only Hermitian up
    // to roundoff.
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            const Complex avg = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
            rho(i, j) = avg;
            rho(j, i) = std::conj(avg);
        }
        rho(i, i) = Complex(rho(i, i).real(), 0.0);
    }
    return DensityOperator(reg, std::move(rho));
}

InputAmplitudes random_amplitudes(std::mt19937_64& rng) {
    const PureState psi = random_pure(1, rng);
    return InputAmplitudes(psi.amplitude(0), psi.amplitude(1));
}

} // namespace qtel
