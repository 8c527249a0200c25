#include "kron/tensor.hpp"

namespace kron {

RationalTensor3 to_rational(const Tensor3& x) {
    RationalTensor3 out(x.p(), x.q(), x.r());
    for (std::size_t c = 0; c < x.cell_count(); ++c) out.data()[c] = Rational(x.data()[c]);
    return out;
}

} // namespace kron
