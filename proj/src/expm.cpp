#include "ptband/expm.hpp"

#include <array>
#include <cmath>

namespace ptband {

namespace {

double one_norm(const Matrix& a) {
    return a.cwiseAbs().colwise().sum().maxCoeff();
}

Matrix pade_solve(const Matrix& u, const Matrix& v) {
    return (v - u).partialPivLu().solve(v + u);
}

// Diagonal Pade approximant of low degree m using explicit powers.
template <std::size_t n>
Matrix pade_low(const Matrix& a, const std::array<double, n>& b) {
    const auto dim = a.rows();
    const Matrix a2 = a * a;
    Matrix even = b[0] * Matrix::Identity(dim, dim);
    Matrix odd = b[1] * Matrix::Identity(dim, dim);
    Matrix power = Matrix::Identity(dim, dim);
    for (std::size_t j = 2; j < n; j += 2) {
        power = power * a2;
        even += b[j] * power;
        if (j + 1 < n)
            odd += b[j + 1] * power;
    }
    return pade_solve(a * odd, even);
}

} // namespace

Matrix matrix_exponential(const Matrix& a) {
    static const std::array<double, 4> b3{120.0, 60.0, 12.0, 1.0};
    static const std::array<double, 6> b5{30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
    static const std::array<double, 8> b7{17297280.0, 8648640.0, 1995840.0,
                                          277200.0,   25200.0,  1512.0,
                                          56.0,       1.0};
    static const std::array<double, 10> b9{17643225600.0, 8821612800.0, 2075673600.0,
                                           302702400.0,   30270240.0,  2162160.0,
                                           110880.0,      3960.0,      90.0,
                                           1.0};
    static const std::array<double, 14> b13{
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
        1187353796428800.0,  129060195264000.0,   10559470521600.0,
        670442572800.0,      33522128640.0,       1323241920.0,
        40840800.0,          960960.0,            16380.0,
        182.0,               1.0};

    const double eta = one_norm(a);
    if (eta <= 1.495585217958292e-2)
        return pade_low(a, b3);
    if (eta <= 2.539398330063230e-1)
        return pade_low(a, b5);
    if (eta <= 9.504178996162932e-1)
        return pade_low(a, b7);
    if (eta <= 2.097847961257068e0)
        return pade_low(a, b9);

    const double theta13 = 5.371920351148152e0;
    int squarings = 0;
    Matrix scaled = a;
    if (eta > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(eta / theta13)));
        scaled /= std::pow(2.0, squarings);
    }

    const auto dim = a.rows();
    const Matrix identity = Matrix::Identity(dim, dim);
    const Matrix a2 = scaled * scaled;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a2 * a4;
    const Matrix u = scaled * (a6 * (b13[13] * a6 + b13[11] * a4 + b13[9] * a2) +
                               b13[7] * a6 + b13[5] * a4 + b13[3] * a2 +
                               b13[1] * identity);
    const Matrix v = a6 * (b13[12] * a6 + b13[10] * a4 + b13[8] * a2) + b13[6] * a6 +
                     b13[4] * a4 + b13[2] * a2 + b13[0] * identity;
    Matrix result = pade_solve(u, v);
    for (int i = 0; i < squarings; ++i)
        result = result * result;
    return result;
}

} // namespace ptband
