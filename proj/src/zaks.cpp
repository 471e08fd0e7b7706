#include "atomlab/zaks.hpp"

namespace atomlab {

bool ZaksPresentation::relation_check(int n) const {
    if (n < 1 || n > depth()) throw std::out_of_range("relation_check: index out of range");
    MonoidValue lhs = u() + v();
    MonoidValue rhs = x(n) + y(n);
    for (int i = 0; i < n; ++i) rhs = rhs + w();
    return lhs == rhs;
}

bool ZaksPresentation::member(const MonoidValue& value, Budget* budget) const {
    MonoidKernel kernel(pres_);
    return kernel.member(value, budget);
}

MonoidValue ZaksPresentation::printed_y(int n) const {
    if (n < 1 || n > depth()) throw std::out_of_range("printed_y: index out of range");
    std::vector<Int> e(static_cast<std::size_t>(depth()) + 3, Int(0));
    e[0] = -n;
    e[1] = 1;
    e[2] = 1;
    e[static_cast<std::size_t>(n) + 2] = -1;
    return MonoidValue::int_vec(std::move(e));
}

} // namespace atomlab
