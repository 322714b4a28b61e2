#pragma once

#include <complex>
#include <vector>

namespace qvol {

using Complex = std::complex<double>;

// Dense Hermitian matrix. Input entries are checked against their conjugate
// transpose (tolerance 1e-12 relative to the largest magnitude) and then
// symmetrized, so stored entries satisfy a(j,k) == conj(a(k,j)) exactly.
class HermitianMatrix {
public:
    HermitianMatrix(std::size_t size, std::vector<Complex> row_major_entries);

    std::size_t size() const { return size_; }
    const Complex& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * size_ + col];
    }

    double trace() const;
    double frobenius_norm() const;

private:
    std::size_t size_;
    std::vector<Complex> entries_;
};

// All eigenvalues, ascending, by cyclic Jacobi rotations on the complex
// Hermitian matrix. Converges to near machine precision.
std::vector<double> eigenvalues_hermitian(const HermitianMatrix& a);

// Eigenvalues split into negatives / zeros / positives. An eigenvalue counts
// as zero when |lambda| <= zero_tolerance * max(1, max |lambda|).
struct FloatSpectrum {
    std::vector<double> eigenvalues;  // ascending
    unsigned positives = 0;
    unsigned negatives = 0;
    unsigned zeros = 0;
    double zero_tolerance = 0.0;

    unsigned dimension() const { return positives + negatives + zeros - 1; }
};

FloatSpectrum classify(std::vector<double> eigenvalues, double zero_tolerance);

// Volume ratio and volume of the quadric domain of the classified matrix,
// computed in double precision.
double volume_ratio(const FloatSpectrum& spectrum);
double volume_decimal(const FloatSpectrum& spectrum);

}  // namespace qvol
