#pragma once

#include "cbc/runner.hpp"
#include "cbc/search.hpp"

#include <iosfwd>

namespace cbc {

/// Exit codes: 0 all checks pass / no hits, 1 any failure or hit, 2 usage
/// or configuration error.
struct RunConfig {
    enum class Command { Verify, Search, Table };
    enum class Format { Json, Csv, Text };

    Command command = Command::Verify;
    std::vector<std::string> checks = {"*"};
    std::vector<u64> p_set = {2, 3, 5, 7, 11, 13};
    u64 pa_cap = 400;
    u64 m_max = 4;
    u64 n_max = 6;
    u64 bound = 10'000;
    Predicate predicate = Predicate::Both;
    int jobs = 1;
    Format format = Format::Text;
    std::string output_path;     // empty: standard output
    std::string checkpoint_path; // search only
    u32 s_max = 6;               // table command
    bool perturb = false;        // test fixture: bump every rhs to force failures
};

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace cbc
