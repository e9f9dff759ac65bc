#pragma once

#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace bettilab {

/// An unconditional identity failed during a run; exit code 1.
class InvariantViolation : public std::runtime_error {
public:
    InvariantViolation(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
    [[nodiscard]] const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// BETTILAB_RUN_STORE, or ./runs.
[[nodiscard]] std::filesystem::path default_run_store();

/// Writes the record as <fnv1a64 of its text>.json; an existing file with the
/// same name already holds the same bytes and is left alone. Returns the path.
std::filesystem::path store_run(const nlohmann::json& record, const std::filesystem::path& dir);

/// Full command-line entry point: 0 success, 1 invariant violation or
/// internal failure, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bettilab
