#include <cstdio>

#include "veritop/f2/kernels.hpp"

int main() {
    std::printf("veritop (kernels: %s)\n", veritop::f2::active_kernel_name());
    return 0;
}
