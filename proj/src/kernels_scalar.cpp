#include "asmg/kernels.hpp"

namespace asmg::kernels {

namespace {

void stencil_apply_scalar(const StencilView& s, const double* x, double* y, int n1, int n2) {
    for (int i1 = 0; i1 < n1; ++i1) {
        for (int i2 = 0; i2 < n2; ++i2) {
            double acc = 0.0;
            for (int t1 = 0; t1 < s.sn1; ++t1) {
                const int j1 = i1 - (s.lo1 + t1);
                if (j1 < 0 || j1 >= n1) continue;
                const double* xr = x + static_cast<std::size_t>(j1) * n2;
                const double* cr = s.c + static_cast<std::size_t>(t1) * s.sn2;
                for (int t2 = 0; t2 < s.sn2; ++t2) {
                    const int j2 = i2 - (s.lo2 + t2);
                    if (j2 < 0 || j2 >= n2) continue;
                    acc += cr[t2] * xr[j2];
                }
            }
            y[static_cast<std::size_t>(i1) * n2 + i2] = acc;
        }
    }
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void sub_scalar(const double* a, const double* b, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = a[i] - b[i];
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc0 = 0, acc1 = 0, acc2 = 0, acc3 = 0;
    const std::size_t n4 = n & ~static_cast<std::size_t>(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        acc0 += a[i] * b[i];
        acc1 += a[i + 1] * b[i + 1];
        acc2 += a[i + 2] * b[i + 2];
        acc3 += a[i + 3] * b[i + 3];
    }
    double tail = 0;
    for (std::size_t i = n4; i < n; ++i) tail += a[i] * b[i];
    return ((acc0 + acc1) + (acc2 + acc3)) + tail;
}

}  // namespace

const Impl& scalar_impl() {
    static const Impl impl{"scalar", stencil_apply_scalar, axpy_scalar, sub_scalar, dot_scalar};
    return impl;
}

}  // namespace asmg::kernels
