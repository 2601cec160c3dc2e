#pragma once

#include "svoronoi/kernels.hpp"

// Internal glue between the dispatcher (kernels.cpp) and the per-ISA
// translation units. Not installed.

namespace svor::kernels::detail {

using CapFn = CountResult (*)(const double*, const double*, const double*, std::size_t,
                              double, double, double, double, double, std::span<const int>);
using DiskFn = CountResult (*)(const double*, const double*, std::size_t,
                               double, double, double, double, std::span<const int>);
using HalfplaneFn = CountResult (*)(const double*, const double*, std::size_t,
                                    double, double, double, double, double,
                                    std::span<const int>);

struct KernelTable {
    CapFn cap = nullptr;
    DiskFn disk = nullptr;
    HalfplaneFn halfplane = nullptr;
};

KernelTable& avx2_table();

} // namespace svor::kernels::detail
