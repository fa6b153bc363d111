#include "chromspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chromspec/kernels.hpp"

namespace chromspec::linalg {

namespace {

void check_dimension(int n) {
    if (n < 1) throw ValidationError("matrix dimension must be >= 1");
    if (n > kMaxDimension)
        throw ValidationError("matrix dimension " + std::to_string(n) + " exceeds the limit of " +
                              std::to_string(kMaxDimension));
}

} // namespace

// ---------------------------------------------------------------------------
// SymmetricMatrix
// ---------------------------------------------------------------------------

SymmetricMatrix SymmetricMatrix::zero(int n) {
    check_dimension(n);
    return SymmetricMatrix(n, std::vector<double>(std::size_t(n) * n, 0.0));
}

SymmetricMatrix SymmetricMatrix::diagonal(std::vector<double> diag) {
    const int n = static_cast<int>(diag.size());
    check_dimension(n);
    std::vector<double> entries(std::size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i) entries[std::size_t(i) * n + i] = diag[std::size_t(i)];
    return SymmetricMatrix(n, std::move(entries));
}

SymmetricMatrix SymmetricMatrix::from_rows(int n, std::vector<double> entries) {
    check_dimension(n);
    if (entries.size() != std::size_t(n) * n)
        throw DimensionError("entry buffer size does not match dimension");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (entries[std::size_t(i) * n + j] != entries[std::size_t(j) * n + i])
                throw ValidationError("matrix is not symmetric at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
    return SymmetricMatrix(n, std::move(entries));
}

double SymmetricMatrix::trace() const noexcept {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymmetricMatrix::frobenius_norm() const {
    return std::sqrt(kernels::sum_squares(entries_.data(), entries_.size()));
}

bool SymmetricMatrix::is_diagonal() const noexcept {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && (*this)(i, j) != 0.0) return false;
    return true;
}

bool SymmetricMatrix::is_nonnegative() const noexcept {
    for (double v : entries_)
        if (v < 0.0) return false;
    return true;
}

std::vector<double> SymmetricMatrix::row_sums() const {
    std::vector<double> sums(std::size_t(n_), 0.0);
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < n_; ++j) s += (*this)(i, j);
        sums[std::size_t(i)] = s;
    }
    return sums;
}

// ---------------------------------------------------------------------------
// HermitianMatrix
// ---------------------------------------------------------------------------

HermitianMatrix HermitianMatrix::zero(int n) {
    check_dimension(n);
    return HermitianMatrix(n, std::vector<complex>(std::size_t(n) * n, complex(0.0, 0.0)));
}

HermitianMatrix HermitianMatrix::from_rows(int n, std::vector<complex> entries) {
    check_dimension(n);
    if (entries.size() != std::size_t(n) * n)
        throw DimensionError("entry buffer size does not match dimension");
    for (int i = 0; i < n; ++i) {
        if (entries[std::size_t(i) * n + i].imag() != 0.0)
            throw ValidationError("diagonal entry " + std::to_string(i) + " is not real");
        for (int j = i + 1; j < n; ++j) {
            const complex upper = entries[std::size_t(i) * n + j];
            const complex lower = entries[std::size_t(j) * n + i];
            if (upper.real() != lower.real() || upper.imag() != -lower.imag())
                throw ValidationError("matrix is not Hermitian at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
        }
    }
    return HermitianMatrix(n, std::move(entries));
}

HermitianMatrix HermitianMatrix::from_real(const SymmetricMatrix& m) {
    const int n = m.dim();
    std::vector<complex> entries(std::size_t(n) * n);
    for (std::size_t k = 0; k < entries.size(); ++k) entries[k] = complex(m.data()[k], 0.0);
    return HermitianMatrix(n, std::move(entries));
}

double HermitianMatrix::trace() const noexcept {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i).real();
    return t;
}

double HermitianMatrix::frobenius_norm() const {
    // complex<double> is layout-compatible with double[2]
    const auto* flat = reinterpret_cast<const double*>(entries_.data());
    return std::sqrt(kernels::sum_squares(flat, entries_.size() * 2));
}

bool HermitianMatrix::is_real() const noexcept {
    for (const complex& v : entries_)
        if (v.imag() != 0.0) return false;
    return true;
}

SymmetricMatrix HermitianMatrix::real_part() const {
    std::vector<double> entries(entries_.size());
    for (std::size_t k = 0; k < entries_.size(); ++k) entries[k] = entries_[k].real();
    return SymmetricMatrix::from_rows(n_, std::move(entries));
}

// ---------------------------------------------------------------------------
// BlockPartition
// ---------------------------------------------------------------------------

BlockPartition::BlockPartition(int n, int r, std::vector<int> part_of)
    : n_(n), r_(r), part_of_(std::move(part_of)) {
    if (n < 1) throw ValidationError("partition needs at least one index");
    if (r < 2) throw ValidationError("partition needs r >= 2 parts");
    if (r > n) throw ValidationError("more parts than indices");
    if (part_of_.size() != std::size_t(n))
        throw DimensionError("part assignment size does not match n");
    std::vector<int> counts(std::size_t(r), 0);
    for (int p : part_of_) {
        if (p < 0 || p >= r) throw ValidationError("part id out of range");
        ++counts[std::size_t(p)];
    }
    for (int c : counts)
        if (c == 0) throw ValidationError("empty part; reduce r instead");
}

std::vector<int> BlockPartition::part_sizes() const {
    std::vector<int> counts(std::size_t(r_), 0);
    for (int p : part_of_) ++counts[std::size_t(p)];
    return counts;
}

// ---------------------------------------------------------------------------
// Spectrum
// ---------------------------------------------------------------------------

Spectrum::Spectrum(std::vector<double> values_descending, double residual)
    : values_(std::move(values_descending)), residual_(residual) {
    if (values_.empty()) throw ValidationError("spectrum cannot be empty");
    for (std::size_t k = 0; k + 1 < values_.size(); ++k)
        if (values_[k] < values_[k + 1])
            throw ValidationError("spectrum values must be sorted descending");
}

double Spectrum::sum() const noexcept {
    double s = 0.0;
    for (double v : values_) s += v;
    return s;
}

// ---------------------------------------------------------------------------
// Jacobi eigensolver
// ---------------------------------------------------------------------------

namespace detail {

namespace {

double offdiag_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) s += a[std::size_t(p) * n + q] * a[std::size_t(p) * n + q];
    return std::sqrt(2.0 * s);
}

double offdiag_max(const std::vector<double>& a, int n) {
    double m = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) m = std::max(m, std::fabs(a[std::size_t(p) * n + q]));
    return m;
}

} // namespace

Spectrum jacobi_eigenvalues(std::vector<double> a, int n, int max_sweeps) {
    const double fro = std::sqrt(kernels::sum_squares(a.data(), a.size()));
    const double threshold = 1e-12 * (1.0 + fro);

    int sweeps = 0;
    while (offdiag_norm(a, n) >= threshold) {
        if (sweeps >= max_sweeps)
            throw ConvergenceError("Jacobi sweeps did not converge; residual " +
                                       std::to_string(offdiag_max(a, n)),
                                   offdiag_max(a, n), sweeps);
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const std::size_t pq = std::size_t(p) * n + q;
                const double apq = a[pq];
                if (apq == 0.0) continue;

                const std::size_t pp = std::size_t(p) * n + p;
                const std::size_t qq = std::size_t(q) * n + q;
                const double app = a[pp];
                const double aqq = a[qq];

                // Late sweeps: rotations too small to move the diagonal are flushed.
                const double g = 100.0 * std::fabs(apq);
                if (sweeps > 4 && std::fabs(app) + g == std::fabs(app) &&
                    std::fabs(aqq) + g == std::fabs(aqq)) {
                    a[pq] = 0.0;
                    a[std::size_t(q) * n + p] = 0.0;
                    continue;
                }

                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::fabs(theta) > 1e154) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Rotate rows p and q, then patch the pivot block (the kernel
                // wrote garbage there) and mirror the rows into the columns to
                // keep the buffer exactly symmetric.
                kernels::rotate_pair(&a[std::size_t(p) * n], &a[std::size_t(q) * n],
                                     std::size_t(n), c, s);
                a[pp] = app - t * apq;
                a[qq] = aqq + t * apq;
                a[pq] = 0.0;
                a[std::size_t(q) * n + p] = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    a[std::size_t(k) * n + p] = a[std::size_t(p) * n + k];
                    a[std::size_t(k) * n + q] = a[std::size_t(q) * n + k];
                }
            }
        }
        ++sweeps;
    }

    const double residual = offdiag_max(a, n);
    std::vector<double> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[std::size_t(i)] = a[std::size_t(i) * n + i];
    std::sort(values.begin(), values.end(), std::greater<double>());
    return Spectrum(std::move(values), residual);
}

} // namespace detail

Spectrum eigen_symmetric(const SymmetricMatrix& m) {
    return detail::jacobi_eigenvalues(m.data(), m.dim(), 100);
}

Spectrum eigen_hermitian(const HermitianMatrix& m) {
    if (m.is_real()) return eigen_symmetric(m.real_part());

    // [[X, -Y], [Y, X]] embedding; Y is antisymmetric so the result is symmetric.
    const int n = m.dim();
    const int nn = 2 * n;
    std::vector<double> embed(std::size_t(nn) * nn, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto v = m(i, j);
            embed[std::size_t(i) * nn + j] = v.real();
            embed[std::size_t(i) * nn + (j + n)] = -v.imag();
            embed[std::size_t(i + n) * nn + j] = v.imag();
            embed[std::size_t(i + n) * nn + (j + n)] = v.real();
        }
    }
    Spectrum doubled = detail::jacobi_eigenvalues(std::move(embed), nn, 100);

    // Every eigenvalue of A appears twice; averaging adjacent sorted values
    // absorbs the numerical splitting of each double eigenvalue.
    std::vector<double> values(static_cast<std::size_t>(n));
    const auto& dv = doubled.values();
    for (int k = 0; k < n; ++k)
        values[std::size_t(k)] = 0.5 * (dv[std::size_t(2 * k)] + dv[std::size_t(2 * k + 1)]);
    return Spectrum(std::move(values), doubled.residual());
}

bool validate_block_zero(const HermitianMatrix& a, const BlockPartition& p) {
    if (a.dim() != p.size()) throw DimensionError("matrix and partition sizes differ");
    const int n = a.dim();
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (p.part_of(j) == p.part_of(k) && a(j, k) != HermitianMatrix::complex(0.0, 0.0))
                return false;
    return true;
}

HermitianMatrix scaled_combination(const SymmetricMatrix& b, const HermitianMatrix& a,
                                   double c) {
    if (b.dim() != a.dim()) throw DimensionError("matrix dimensions differ");
    if (!b.is_diagonal()) throw ValidationError("B must be diagonal");

    const int n = a.dim();
    std::vector<HermitianMatrix::complex> out(std::size_t(n) * n);
    for (int i = 0; i < n; ++i) out[std::size_t(i) * n + i] = {b(i, i), 0.0};
    // out = diag(B) + c*A over the interleaved (re, im) planes
    kernels::scaled_add(reinterpret_cast<double*>(out.data()),
                        reinterpret_cast<const double*>(out.data()),
                        reinterpret_cast<const double*>(a.data().data()), out.size() * 2, c);
    return HermitianMatrix::from_rows(n, std::move(out));
}

} // namespace chromspec::linalg
