#pragma once

#include "atomlab/kernel.hpp"

namespace atomlab {

/// Thin wrapper presenting the Zaks exponent monoid through the kernel:
/// generator vectors for U, V, W, X_1..X_N, Y_1..Y_N in Z^{N+3}.
class ZaksPresentation {
public:
    explicit ZaksPresentation(int depth) : pres_(Presentation::zaks(depth)) {}

    const Presentation& pres() const { return pres_; }
    int depth() const { return pres_.depth(); }

    MonoidValue u() const { return pres_.zaks_u(); }
    MonoidValue v() const { return pres_.zaks_v(); }
    MonoidValue w() const { return pres_.zaks_w(); }
    MonoidValue x(int n) const { return pres_.zaks_x(n); }
    MonoidValue y(int n) const { return pres_.zaks_y(n); }

    /// Verifies u + v = n*w + x_n + y_n as exponent vectors.
    bool relation_check(int n) const;

    /// Bounded integer-cone feasibility, delegated to the kernel.
    bool member(const MonoidValue& value, Budget* budget = nullptr) const;

    /// The vector printed in the source text for y_n, with the -n in the
    /// first coordinate; fails relation_check (suspected typo there).
    MonoidValue printed_y(int n) const;

private:
    Presentation pres_;
};

} // namespace atomlab
