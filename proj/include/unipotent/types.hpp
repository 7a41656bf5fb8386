#pragma once

#include <Eigen/Core>
#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace unipotent {

// Dense types are templated on the scalar; everything integral lives in
// `int`, everything that needs division lives in `Rational`.
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Rational = boost::rational<std::int64_t>;

using IntMatrix = MatrixX<int>;
using IntVector = VectorX<int>;

/// Pairings <lambda, alpha_i> of a cocharacter with the simple roots,
/// in the factor-ordered simple-root indexing of a RootSystem.
using Labels = IntVector;

/// lambda = sum_i coords_i * alpha_i^vee over the simple coroots.
using CoweightCoords = VectorX<Rational>;

using IndexSet = std::vector<int>;

/// Bad user input: malformed group text, unknown orbit selector, a prime
/// outside a formula's hypotheses. Maps to CLI exit code 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violated internal invariant (non-integral labels, runaway reflection
/// loop). Maps to CLI exit code 2.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

bool is_prime(std::int64_t n);

/// Exact solve of a square system over the rationals (Gauss-Jordan with
/// first-nonzero pivoting). Throws InternalError if `a` is singular.
template <typename Scalar>
VectorX<Scalar> solve_exact(MatrixX<Scalar> a, VectorX<Scalar> b)
{
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw InternalError("solve_exact: dimension mismatch");
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        while (pivot < n && a(pivot, col) == Scalar(0))
            ++pivot;
        if (pivot == n)
            throw InternalError("solve_exact: singular matrix");
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            std::swap(b(pivot), b(col));
        }
        const Scalar inv = Scalar(1) / a(col, col);
        a.row(col) *= inv;
        b(col) *= inv;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || a(r, col) == Scalar(0))
                continue;
            const Scalar f = a(r, col);
            a.row(r) -= f * a.row(col);
            b(r) -= f * b(col);
        }
    }
    return b;
}

template <typename To, typename From>
VectorX<To> vector_cast(const VectorX<From>& v)
{
    VectorX<To> out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out(i) = To(v(i));
    return out;
}

/// Converts a rational vector to integers, throwing InternalError if any
/// entry is not integral. `what` names the quantity for the message.
IntVector require_integral(const VectorX<Rational>& v, const std::string& what);

std::string to_string(const IntVector& v, char sep = ',');

} // namespace unipotent

namespace Eigen {

template <>
struct NumTraits<unipotent::Rational> : GenericNumTraits<unipotent::Rational> {
    using Real = unipotent::Rational;
    using NonInteger = unipotent::Rational;
    using Nested = unipotent::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen
