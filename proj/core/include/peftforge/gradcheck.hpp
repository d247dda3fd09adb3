// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <functional>

#include "peftforge/errors.hpp"
#include "peftforge/matrix.hpp"

namespace peftforge {

// Central-difference gradient oracle: (f(x + h*E_ij) - f(x - h*E_ij)) / (2h)
// per entry. Independent of any analytic backward path; test code uses it
// to pin adapter gradients.
inline Matrix finite_difference_grad(const std::function<double(const Matrix&)>& f,
                                     const Matrix& at, double h) {
    if (!(h > 0.0)) {
        throw ParameterError("finite_difference_grad: step h must be positive");
    }
    Matrix grad(at.rows(), at.cols(), 0.0);
    Matrix probe = at;
    for (std::size_t i = 0; i < at.size(); ++i) {
        const double orig = probe[i];
        probe[i] = orig + h;
        const double fp = f(probe);
        probe[i] = orig - h;
        const double fm = f(probe);
        probe[i] = orig;
        if (!std::isfinite(fp) || !std::isfinite(fm)) {
            throw NumericError("finite_difference_grad: non-finite function evaluation");
        }
        grad[i] = (fp - fm) / (2.0 * h);
    }
    return grad;
}

} // namespace peftforge
