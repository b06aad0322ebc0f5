#pragma once

#include "cbc/congruences.hpp"

#include <span>

namespace cbc {

enum class CheckKind {
    Thm11Eq12,
    Thm11Eq13,
    Thm11Eq14,
    Cor11Eq15,
    Cor11Eq16,
    Cor11Eq17,
    Cor11Eq18,
    Cor11Eq19,
    Cor11Adamchuk,
    Thm12Eq110,
    Thm12Eq111,
    Cor12Eq112,
    Cor12Eq113,
    Sec2Lemma21,
    Sec2Lemma22,
    Sec2Lemma23,
    Sec2Lemma24,
    Sec2Wolstenholme,
    Sec2LehmerHalf,
    Sec2LehmerThird,
    Sec2LehmerSixth,
    Sec2Ternary,
    Lem31, // expands to both clause reports
};

const char* check_id_of(CheckKind kind);
std::vector<std::string> all_check_ids();

struct CheckRequest {
    CheckKind kind;
    u64 p = 0;
    u32 a = 0;
    i64 d = 0;
    i64 m = 0;
    i64 n = 0;
};

/// '*' and '?' wildcards, anchored over the whole id.
bool glob_match(const std::string& pattern, const std::string& id);

struct GridOptions {
    std::vector<u64> p_set = {2, 3, 5, 7, 11, 13};
    u64 pa_cap = 400;
    u64 m_max = 4;
    u64 n_max = 6; // caps Theorem 1.2 at min(m, n_max) and Corollary 1.2 at n_max
    std::vector<std::string> check_globs = {"*"};
};

/// Enumerates the full grid for every check id matching a glob. Throws
/// std::invalid_argument for a glob matching no known check id.
std::vector<CheckRequest> build_grid(const GridOptions& opt);

/// Runs every request (OpenMP across requests when jobs > 1) and returns
/// reports sorted by (check_id, p, a, d, m, n). The perturb switch bumps
/// every rhs by one to force failures for exit-code fixtures.
std::vector<CongruenceReport> run_requests(std::span<const CheckRequest> requests, int jobs,
                                           bool perturb = false);

} // namespace cbc
