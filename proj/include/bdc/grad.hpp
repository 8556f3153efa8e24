#pragma once

#include "bdc/matrix.hpp"

#include <functional>

namespace bdc {

// A scalar function of matrix entries, evaluable over Dual2.
using MatFn = std::function<Dual2(const MatD&)>;

// Trace-pairing gradient: tr(grad f(X) A) = d/dt f(X + tA). Entry (b,a) is
// the partial derivative in x_ab. Uses the eb infinitesimal, so X may carry
// ea parts; the result then carries the ea-derivative of the gradient.
MatD grad(const MatFn& f, const MatD& x);
MatQ grad(const MatFn& f, const MatQ& x);
// The same along ea; x may carry eb parts, which the result then carries.
MatD grad_ea(const MatFn& f, const MatD& x);

// Coordinate function x_ab, 1-based.
MatFn coordinate(int a, int b);

}  // namespace bdc
