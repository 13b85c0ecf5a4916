#include <Eigen/SVD>

#include "legreg/estimators.hpp"

namespace legreg {

double gram_condition(const Matrix<double>& a) {
    Eigen::MatrixXd m(a.rows(), a.cols());
    for (int c = 0; c < a.cols(); ++c) {
        for (int r = 0; r < a.rows(); ++r) {
            m(r, c) = a(r, c);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    const double ratio = s(0) / s(s.size() - 1);
    return ratio * ratio;
}

}  // namespace legreg
