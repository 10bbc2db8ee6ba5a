#ifndef WEIER_ERRORS_HPP
#define WEIER_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace weier
{

/// Invalid argument for a mathematical operation (odd Bernoulli index, label in Z^2, ...).
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// The evaluation point lies on the lattice.
class pole_error : public std::domain_error
{
public:
    pole_error(const std::string &what, std::complex<double> nearest)
        : std::domain_error(what), m_nearest(nearest)
    {
    }
    /// Nearest lattice point to the rejected argument.
    std::complex<double> nearest() const noexcept { return m_nearest; }

private:
    std::complex<double> m_nearest;
};

/// The requested tolerance cannot be certified under the configured truncation cap.
class precision_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace weier

#endif
