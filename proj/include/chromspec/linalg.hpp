#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "chromspec/errors.hpp"

namespace chromspec::linalg {

// Dense storage keeps the O(n^3)-per-sweep Jacobi method tractable.
inline constexpr int kMaxDimension = 1024;

// Dense real symmetric matrix, full row-major storage, immutable after
// construction. Symmetry is exact: from_rows rejects any entries[i][j] that
// is not bit-equal to entries[j][i].
class SymmetricMatrix {
public:
    static SymmetricMatrix zero(int n);
    static SymmetricMatrix diagonal(std::vector<double> diag);
    static SymmetricMatrix from_rows(int n, std::vector<double> entries);

    int dim() const noexcept { return n_; }
    double operator()(int i, int j) const noexcept {
        return entries_[std::size_t(i) * n_ + std::size_t(j)];
    }
    const std::vector<double>& data() const noexcept { return entries_; }

    double trace() const noexcept;
    double frobenius_norm() const;
    bool is_diagonal() const noexcept;
    bool is_nonnegative() const noexcept;
    std::vector<double> row_sums() const;

    bool operator==(const SymmetricMatrix& other) const = default;

private:
    SymmetricMatrix(int n, std::vector<double> entries)
        : n_(n), entries_(std::move(entries)) {}

    int n_;
    std::vector<double> entries_;
};

// Dense complex Hermitian matrix: entries[i][j] == conj(entries[j][i]) and a
// real diagonal, both enforced exactly at construction.
class HermitianMatrix {
public:
    using complex = std::complex<double>;

    static HermitianMatrix zero(int n);
    static HermitianMatrix from_rows(int n, std::vector<complex> entries);
    static HermitianMatrix from_real(const SymmetricMatrix& m);

    int dim() const noexcept { return n_; }
    complex operator()(int i, int j) const noexcept {
        return entries_[std::size_t(i) * n_ + std::size_t(j)];
    }
    const std::vector<complex>& data() const noexcept { return entries_; }

    double trace() const noexcept;
    double frobenius_norm() const;
    // True iff every imaginary part is exactly zero.
    bool is_real() const noexcept;
    SymmetricMatrix real_part() const;

    bool operator==(const HermitianMatrix& other) const = default;

private:
    HermitianMatrix(int n, std::vector<complex> entries)
        : n_(n), entries_(std::move(entries)) {}

    int n_;
    std::vector<complex> entries_;
};

// Partition of the index set [0, n) into r >= 2 non-empty parts. Empty parts
// are rejected: the same statement with an empty block is the r-1 statement,
// and the 1/(r-1) scaling would silently weaken the inequality under test.
class BlockPartition {
public:
    BlockPartition(int n, int r, std::vector<int> part_of);

    int size() const noexcept { return n_; }
    int parts() const noexcept { return r_; }
    int part_of(int i) const noexcept { return part_of_[std::size_t(i)]; }
    const std::vector<int>& assignment() const noexcept { return part_of_; }
    std::vector<int> part_sizes() const;

    bool operator==(const BlockPartition& other) const = default;

private:
    int n_;
    int r_;
    std::vector<int> part_of_;
};

// Eigenvalues sorted descending plus the solver's convergence diagnostic
// (largest off-diagonal magnitude left when the sweeps stopped).
class Spectrum {
public:
    Spectrum(std::vector<double> values_descending, double residual);

    const std::vector<double>& values() const noexcept { return values_; }
    int size() const noexcept { return static_cast<int>(values_.size()); }
    double max() const noexcept { return values_.front(); }
    double min() const noexcept { return values_.back(); }
    double sum() const noexcept;
    double residual() const noexcept { return residual_; }

private:
    std::vector<double> values_;
    double residual_;
};

// Full spectrum by cyclic Jacobi sweeps. Converged when the off-diagonal
// Frobenius norm drops below 1e-12 * (1 + ||M||_F); throws ConvergenceError
// (carrying the residual) if 100 sweeps do not get there.
Spectrum eigen_symmetric(const SymmetricMatrix& m);

// Hermitian spectrum. Real-entry input takes the symmetric path directly;
// otherwise A = X + iY is embedded as the real symmetric 2n x 2n matrix
// [[X, -Y], [Y, X]], whose spectrum is that of A with every eigenvalue
// doubled, and one representative per pair is returned by averaging
// adjacent positions of the sorted 2n values.
Spectrum eigen_hermitian(const HermitianMatrix& m);

// True iff A[j][k] == 0 whenever j and k share a part (diagonal included).
bool validate_block_zero(const HermitianMatrix& a, const BlockPartition& p);

// B + c*A for diagonal real B; the B - A and B + A/(r-1) combinations.
HermitianMatrix scaled_combination(const SymmetricMatrix& b, const HermitianMatrix& a,
                                   double c);

namespace detail {
// Core solver on a raw row-major buffer; `max_sweeps` is exposed so tests
// can drive the non-convergence path.
Spectrum jacobi_eigenvalues(std::vector<double> a, int n, int max_sweeps);
} // namespace detail

} // namespace chromspec::linalg
