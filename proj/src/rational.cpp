#include "mipl/rational.hpp"
#include "mipl/setting.hpp"
#include "mipl/error.hpp"
#include "mipl/index.hpp"

namespace mipl {

std::string to_string(const Rational& q)
{
    return q.get_str();
}

mpz_class factorial(long n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

void Setting::validate() const
{
    if (dim < 1 || dim > kMaxDim)
        throw ConfigError("dim must be in 1.." + std::to_string(kMaxDim) + ", got " + std::to_string(dim));
    if (alpha <= 0 || alpha >= 1) throw ConfigError("alpha must lie in ]0,1[, got " + to_string(alpha));
}

const char* space_name(Space s)
{
    return s == Space::L ? "L" : "L0";
}

} // namespace mipl
