#pragma once

#include <cstddef>
#include <string>

namespace asmg::kernels {

/// Stencil coefficients viewed as a dense box: value for offset (d1, d2)
/// sits at c[(d1 - lo1) * sn2 + (d2 - lo2)].
struct StencilView {
    const double* c;
    int lo1, lo2, sn1, sn2;
};

/// Data-parallel inner loops of the solver. Scalar and SIMD variants use
/// identical accumulation orders, so a given build produces the same
/// floating point results whichever implementation runs.
struct Impl {
    const char* name;
    /// y(i) = sum_d s(d) x(i - d), zero outside the n1 x n2 box.
    void (*stencil_apply)(const StencilView& s, const double* x, double* y, int n1, int n2);
    /// y += a * x
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    /// y = a - b
    void (*sub)(const double* a, const double* b, double* y, std::size_t n);
    /// Four-lane blocked reduction; both variants reduce in the same order.
    double (*dot)(const double* a, const double* b, std::size_t n);
};

const Impl& scalar_impl();
const Impl* avx2_impl();  // null when unavailable

/// Active implementation: AVX2 when the CPU supports it, unless the
/// ASMG_KERNELS environment variable ("scalar" or "avx2") says otherwise.
const Impl& active();

/// Force a specific implementation ("scalar", "avx2", "auto"); throws on
/// unknown or unavailable names.
void select(const std::string& name);

}  // namespace asmg::kernels
