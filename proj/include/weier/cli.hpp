#ifndef WEIER_CLI_HPP
#define WEIER_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "weier/forms.hpp"
#include "weier/lattice.hpp"
#include "weier/verify.hpp"

namespace weier::cli
{

enum class OutputFormat
{
    json,
    csv,
    text
};

struct RunConfig
{
    EvalOptions eval;
    OutputFormat format = OutputFormat::text;
    std::uint64_t seed = 1;
    Convention convention = Convention::paper_b;
    unsigned jobs = 1;
};

/// A command's full result: what gets printed and what decides the exit code.
struct Report
{
    std::string command;
    RunConfig config;
    std::vector<Assertion> rows;
};

/// Exit code 0 iff no row has status "fail" or "error".
int exit_code(const Report &report);

void write_json(std::ostream &out, const Report &report);
void write_csv(std::ostream &out, const Report &report);
void write_text(std::ostream &out, const Report &report);

/// Entry point behind the weier binary; args exclude the program name.
/// Returns 0 on success, 1 on failed assertions or rows, 2 on usage or evaluation errors.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace weier::cli

#endif
