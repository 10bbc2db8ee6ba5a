#ifndef WEIER_VERIFY_HPP
#define WEIER_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weier/arith.hpp"
#include "weier/forms.hpp"
#include "weier/lattice.hpp"

namespace weier
{

/// One checked instance. A row passes when residual <= bound; "info" rows record
/// an observation without asserting anything.
struct Assertion
{
    std::string id;
    std::vector<std::pair<std::string, std::string>> inputs;
    Complex value;
    double error = 0.0;
    double residual = 0.0;
    double bound = 0.0;
    std::string status;
    std::string note;
};

struct SuiteReport
{
    std::string suite;
    std::vector<Assertion> rows;

    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
};

struct VerifyConfig
{
    EvalOptions eval;
    std::uint64_t seed = 1;
    Convention convention = Convention::paper_b;
    unsigned jobs = 1;
};

/// lemma-fsta, lemma-gsta, defect-gstt, theorem-hrst, theorem-hU, cusp-f, cusp-h,
/// zeta2, eies-bound, identities, oracle-equivalence.
const std::vector<std::string> &suite_names();

/// Runs the named suite; throws domain_error for an unknown name.
SuiteReport run_suite(std::string_view name, const VerifyConfig &config);

/// Runs fn(0..count-1) on up to `jobs` threads, results kept in index order.
template <typename Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))>;

} // namespace weier

#include "weier/detail/parallel.hpp"

#endif
