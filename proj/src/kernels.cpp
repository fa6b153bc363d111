#include "chromspec/kernels.hpp"

#include <cstdlib>
#include <string>

#include "chromspec/errors.hpp"

namespace chromspec::kernels {

namespace {

// ---------------------------------------------------------------------------
// Scalar reference kernels. The SIMD variants must reproduce these bitwise.
// ---------------------------------------------------------------------------

void rotate_pair_scalar(double* x, double* y, std::size_t n, double c, double s) {
    for (std::size_t k = 0; k < n; ++k) {
        const double xk = x[k];
        const double yk = y[k];
        x[k] = c * xk - s * yk;
        y[k] = s * xk + c * yk;
    }
}

void scaled_add_scalar(double* out, const double* a, const double* b, std::size_t n,
                       double scale) {
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] + scale * b[k];
}

// Four interleaved partial sums, combined ((l0+l1)+(l2+l3)), then the tail.
double sum_squares_scalar(const double* x, std::size_t n) {
    double l0 = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        l0 += x[k] * x[k];
        l1 += x[k + 1] * x[k + 1];
        l2 += x[k + 2] * x[k + 2];
        l3 += x[k + 3] * x[k + 3];
    }
    double acc = (l0 + l1) + (l2 + l3);
    for (; k < n; ++k) acc += x[k] * x[k];
    return acc;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double l0 = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        l0 += x[k] * y[k];
        l1 += x[k + 1] * y[k + 1];
        l2 += x[k + 2] * y[k + 2];
        l3 += x[k + 3] * y[k + 3];
    }
    double acc = (l0 + l1) + (l2 + l3);
    for (; k < n; ++k) acc += x[k] * y[k];
    return acc;
}

} // namespace

// SIMD variants live in per-ISA translation units built with the matching
// target flags; they are only dispatched to after a runtime capability check.
namespace detail {
#if defined(__x86_64__) || defined(__i386__)
void rotate_pair_avx2(double* x, double* y, std::size_t n, double c, double s);
void scaled_add_avx2(double* out, const double* a, const double* b, std::size_t n, double scale);
double sum_squares_avx2(const double* x, std::size_t n);
double dot_avx2(const double* x, const double* y, std::size_t n);
#endif
#if defined(__aarch64__)
void rotate_pair_neon(double* x, double* y, std::size_t n, double c, double s);
void scaled_add_neon(double* out, const double* a, const double* b, std::size_t n, double scale);
double sum_squares_neon(const double* x, std::size_t n);
double dot_neon(const double* x, const double* y, std::size_t n);
#endif
} // namespace detail

namespace {

struct Table {
    void (*rotate_pair)(double*, double*, std::size_t, double, double);
    void (*scaled_add)(double*, const double*, const double*, std::size_t, double);
    double (*sum_squares)(const double*, std::size_t);
    double (*dot)(const double*, const double*, std::size_t);
    Isa isa;
};

constexpr Table kScalarTable{rotate_pair_scalar, scaled_add_scalar, sum_squares_scalar,
                             dot_scalar, Isa::scalar};

bool isa_available(Isa isa) {
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
        return __builtin_cpu_supports("avx2") != 0;
#else
        return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
        return true;
#else
        return false;
#endif
    }
    return false;
}

Table table_for(Isa isa) {
#if defined(__x86_64__) || defined(__i386__)
    if (isa == Isa::avx2)
        return Table{detail::rotate_pair_avx2, detail::scaled_add_avx2,
                     detail::sum_squares_avx2, detail::dot_avx2, Isa::avx2};
#endif
#if defined(__aarch64__)
    if (isa == Isa::neon)
        return Table{detail::rotate_pair_neon, detail::scaled_add_neon,
                     detail::sum_squares_neon, detail::dot_neon, Isa::neon};
#endif
    return kScalarTable;
}

Isa default_isa() {
    if (const char* env = std::getenv("CHROMSPEC_ISA")) {
        const std::string_view want(env);
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
            if (want == isa_name(isa) && isa_available(isa)) return isa;
        }
        // unknown or unavailable value: fall through to auto-detection
    }
    if (isa_available(Isa::avx2)) return Isa::avx2;
    if (isa_available(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

Table& active_table() {
    static Table table = table_for(default_isa());
    return table;
}

} // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    case Isa::neon:
        return "neon";
    }
    return "unknown";
}

Isa active_isa() { return active_table().isa; }

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
        if (isa_available(isa)) out.push_back(isa);
    return out;
}

void force_isa(Isa isa) {
    if (!isa_available(isa))
        throw ValidationError("kernel ISA '" + std::string(isa_name(isa)) +
                              "' is not available on this machine");
    active_table() = table_for(isa);
}

void rotate_pair(double* x, double* y, std::size_t n, double c, double s) {
    active_table().rotate_pair(x, y, n, c, s);
}

void scaled_add(double* out, const double* a, const double* b, std::size_t n, double scale) {
    active_table().scaled_add(out, a, b, n, scale);
}

double sum_squares(const double* x, std::size_t n) { return active_table().sum_squares(x, n); }

double dot(const double* x, const double* y, std::size_t n) {
    return active_table().dot(x, y, n);
}

} // namespace chromspec::kernels
