#include "cbc/search.hpp"

#include "cbc/binom_engine.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>

namespace cbc {

namespace {

constexpr u64 kBlockSize = 1024; // n-range per checkpointable block

struct SumPair {
    u64 central; // sum_{k<n} binom(2k,k) mod n^2
    u64 shifted; // sum_{k<n} binom(2k,k+1) mod n^2
};

SumPair accumulate_sums(u64 n, const Factorization& fac, bool need_shifted) {
    const u64 n2 = n * n;
    CompositeCursor c0(fac, 0);
    SumPair s{0, 0};
    if (need_shifted) {
        CompositeCursor c1(fac, 1);
        for (u64 k = 0; k < n; ++k) {
            s.central = (s.central + c0.reduce()) % n2;
            s.shifted = (s.shifted + c1.reduce()) % n2;
            c0.advance();
            c1.advance();
        }
    } else {
        for (u64 k = 0; k < n; ++k) {
            s.central = (s.central + c0.reduce()) % n2;
            c0.advance();
        }
    }
    return s;
}

u64 canon_mod(i64 v, u64 m) {
    i64 r = v % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    return static_cast<u64>(r);
}

bool is_candidate(u64 n, const SpfTable& spf) {
    return n >= 4 && n % 3 != 0 && spf[n] != n; // composite, not a multiple of 3
}

void write_checkpoint(const std::string& path, u64 verified, Predicate pred) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("checkpoint: cannot write " + tmp);
        out << "verified_up_to " << verified << " " << predicate_name(pred) << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("checkpoint: atomic rename failed for " + path);
}

u64 read_checkpoint(const std::string& path, Predicate pred) {
    std::ifstream in(path);
    if (!in) return 0;
    std::string tag, name;
    u64 n = 0;
    if (!(in >> tag >> n >> name) || tag != "verified_up_to") return 0;
    if (name != predicate_name(pred)) return 0; // different predicate: start over
    return n;
}

template <typename TestBlock>
SearchSummary run_blocks(const SearchConfig& cfg, const SpfTable& spf, TestBlock&& test_block) {
    auto t0 = std::chrono::steady_clock::now();
    SearchSummary sum;
    sum.bound = cfg.bound;
    sum.predicate = cfg.predicate;

    for (u64 n = 4; n <= cfg.bound; ++n)
        if (is_candidate(n, spf)) ++sum.tested_count;

    u64 resume_from = 4;
    if (!cfg.checkpoint_path.empty()) {
        u64 ck = read_checkpoint(cfg.checkpoint_path, cfg.predicate);
        if (ck >= 4 && ck <= cfg.bound) {
            // re-verify the block containing the checkpoint
            resume_from = 4 + (ck - 4) / kBlockSize * kBlockSize;
        }
    }

    for (u64 lo = resume_from; lo <= cfg.bound; lo += kBlockSize) {
        u64 hi = std::min(cfg.bound, lo + kBlockSize - 1);
        std::vector<u64> block;
        for (u64 n = lo; n <= hi; ++n)
            if (is_candidate(n, spf)) block.push_back(n);
        test_block(block, sum.hits);
        if (!cfg.checkpoint_path.empty()) write_checkpoint(cfg.checkpoint_path, hi, cfg.predicate);
    }

    std::sort(sum.hits.begin(), sum.hits.end(), [](const SearchHit& a, const SearchHit& b) {
        return a.n != b.n ? a.n < b.n : static_cast<int>(a.predicate) < static_cast<int>(b.predicate);
    });
    sum.checkpoint = cfg.bound;
    sum.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return sum;
}

} // namespace

const char* predicate_name(Predicate p) {
    switch (p) {
    case Predicate::Central: return "central";
    case Predicate::Catalan: return "catalan";
    case Predicate::Both: return "both";
    }
    return "?";
}

Predicate predicate_from_name(const std::string& name) {
    if (name == "central") return Predicate::Central;
    if (name == "catalan") return Predicate::Catalan;
    if (name == "both") return Predicate::Both;
    throw std::invalid_argument("unknown predicate: " + name);
}

PredicateOutcome evaluate_predicate(u64 n, const Factorization& fac, Predicate single) {
    if (single == Predicate::Both)
        throw std::invalid_argument("evaluate_predicate: needs a single predicate");
    if (n < 2) throw std::invalid_argument("evaluate_predicate: n too small");
    const u64 n2 = n * n;
    SumPair s = accumulate_sums(n, fac, single == Predicate::Catalan);
    PredicateOutcome out{};
    if (single == Predicate::Central) {
        out.lhs = s.central;
        out.rhs = canon_mod(symbol3(static_cast<i64>(n)), n2);
    } else {
        out.lhs = (s.central + n2 - s.shifted) % n2; // sum of C_k = central - shifted
        out.rhs = canon_mod(1 - 3 * symbol3(static_cast<i64>(n) - 1), n2);
    }
    out.holds = out.lhs == out.rhs;
    return out;
}

std::vector<SearchHit> test_modulus(u64 n, const Factorization& fac, Predicate predicate) {
    if (n % 3 == 0) throw std::invalid_argument("test_modulus: 3 divides n");
    if (fac.factors.size() == 1 && fac.factors.front().second == 1)
        throw std::invalid_argument("test_modulus: n is prime");

    std::vector<SearchHit> hits;
    const bool central = predicate != Predicate::Catalan;
    const bool catalan = predicate != Predicate::Central;
    const u64 n2 = n * n;
    SumPair s = accumulate_sums(n, fac, catalan);
    if (central) {
        u64 rhs = canon_mod(symbol3(static_cast<i64>(n)), n2);
        if (s.central == rhs) hits.push_back(SearchHit{n, Predicate::Central, s.central, rhs});
    }
    if (catalan) {
        u64 lhs = (s.central + n2 - s.shifted) % n2;
        u64 rhs = canon_mod(1 - 3 * symbol3(static_cast<i64>(n) - 1), n2);
        if (lhs == rhs) hits.push_back(SearchHit{n, Predicate::Catalan, lhs, rhs});
    }
    return hits;
}

SearchSummary search_serial(const SearchConfig& cfg, const SpfTable& spf) {
    if (cfg.bound >= spf.size()) throw std::out_of_range("search: bound exceeds sieve");
    return run_blocks(cfg, spf, [&](const std::vector<u64>& block, std::vector<SearchHit>& hits) {
        for (u64 n : block) {
            auto h = test_modulus(n, factorize(n, spf), cfg.predicate);
            hits.insert(hits.end(), h.begin(), h.end());
        }
    });
}

SearchSummary search_parallel(const SearchConfig& cfg, const SpfTable& spf) {
    if (cfg.bound >= spf.size()) throw std::out_of_range("search: bound exceeds sieve");
    const int jobs = std::max(1, cfg.jobs);
    return run_blocks(cfg, spf, [&](const std::vector<u64>& block, std::vector<SearchHit>& hits) {
        std::vector<std::vector<SearchHit>> local(block.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
        for (i64 i = 0; i < static_cast<i64>(block.size()); ++i) {
            u64 n = block[static_cast<std::size_t>(i)];
            local[static_cast<std::size_t>(i)] = test_modulus(n, factorize(n, spf), cfg.predicate);
        }
        for (const auto& h : local) hits.insert(hits.end(), h.begin(), h.end());
    });
}

SearchSummary search_problem_1_1(const SearchConfig& cfg) {
    SpfTable spf = sieve_spf(std::max<u64>(cfg.bound, 4));
    return cfg.jobs <= 1 ? search_serial(cfg, spf) : search_parallel(cfg, spf);
}

} // namespace cbc
