#pragma once

#include "cbc/arith.hpp"

#include <string>

namespace cbc {

enum class Predicate { Central, Catalan, Both };

const char* predicate_name(Predicate p);
Predicate predicate_from_name(const std::string& name);

/// A hit is a modulus SATISFYING the congruence: for composite n that is a
/// counterexample candidate, the object the search exists to find.
struct SearchHit {
    u64 n;
    Predicate predicate; // Central or Catalan, never Both
    u64 lhs;             // sum residue mod n^2
    u64 rhs;             // symbol-based right side mod n^2
};

struct SearchConfig {
    u64 bound = 10'000;
    Predicate predicate = Predicate::Both;
    int jobs = 1;
    std::string checkpoint_path; // empty: no checkpointing
};

struct SearchSummary {
    u64 bound = 0;
    Predicate predicate = Predicate::Both;
    u64 tested_count = 0;
    std::vector<SearchHit> hits;
    double elapsed_seconds = 0.0; // wall time; excluded from the canonical form
    u64 checkpoint = 0;           // highest fully verified n
};

struct PredicateOutcome {
    u64 lhs;
    u64 rhs;
    bool holds;
};

/// Evaluates one congruence for any modulus n >= 4 (no compositeness
/// precondition; primes are used as a sanity cross-check where the
/// congruence must hold).
PredicateOutcome evaluate_predicate(u64 n, const Factorization& fac, Predicate single);

/// Composite n with 3 not dividing n only; returns the hits (0..2 entries).
std::vector<SearchHit> test_modulus(u64 n, const Factorization& fac, Predicate predicate);

SearchSummary search_serial(const SearchConfig& cfg, const SpfTable& spf);
SearchSummary search_parallel(const SearchConfig& cfg, const SpfTable& spf);

/// Builds the sieve and dispatches to the serial reference (jobs <= 1) or
/// the OpenMP sweep. Summaries are identical either way.
SearchSummary search_problem_1_1(const SearchConfig& cfg);

} // namespace cbc
