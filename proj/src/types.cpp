#include "unipotent/types.hpp"

#include <sstream>

namespace unipotent {

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

IntVector require_integral(const VectorX<Rational>& v, const std::string& what)
{
    IntVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i).denominator() != 1) {
            std::ostringstream msg;
            msg << what << ": entry " << i << " is " << v(i).numerator() << "/"
                << v(i).denominator() << ", expected an integer";
            throw InternalError(msg.str());
        }
        out(i) = static_cast<int>(v(i).numerator());
    }
    return out;
}

std::string to_string(const IntVector& v, char sep)
{
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(v(i));
    }
    return out;
}

} // namespace unipotent
