#include "bdc/grad.hpp"

namespace bdc {

MatD grad(const MatFn& f, const MatD& x) {
    const Eigen::Index n = x.rows();
    MatD g(x.cols(), n);
    MatD xd = x;
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < x.cols(); ++b) {
            xd(a, b).b = Rat(1);
            Dual2 r = f(xd);
            xd(a, b).b = Rat(0);
            g(b, a) = Dual2(r.b, r.ab);
        }
    return g;
}

MatD grad_ea(const MatFn& f, const MatD& x) {
    const Eigen::Index n = x.rows();
    MatD g(x.cols(), n);
    MatD xd = x;
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < x.cols(); ++b) {
            xd(a, b).a = Rat(1);
            Dual2 r = f(xd);
            xd(a, b).a = Rat(0);
            g(b, a) = Dual2(r.a, Rat(0), r.ab, Rat(0));
        }
    return g;
}

MatQ grad(const MatFn& f, const MatQ& x) { return value_part(grad(f, lift<Dual2>(x))); }

MatFn coordinate(int a, int b) {
    return [a, b](const MatD& x) { return x(a - 1, b - 1); };
}

}  // namespace bdc
