#include "cbc/runner.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace cbc {

namespace {

struct KindId {
    CheckKind kind;
    const char* id;
};

constexpr KindId kKinds[] = {
    {CheckKind::Thm11Eq12, "thm1.1/eq1.2"},
    {CheckKind::Thm11Eq13, "thm1.1/eq1.3"},
    {CheckKind::Thm11Eq14, "thm1.1/eq1.4"},
    {CheckKind::Cor11Eq15, "cor1.1/eq1.5"},
    {CheckKind::Cor11Eq16, "cor1.1/eq1.6"},
    {CheckKind::Cor11Eq17, "cor1.1/eq1.7"},
    {CheckKind::Cor11Eq18, "cor1.1/eq1.8"},
    {CheckKind::Cor11Eq19, "cor1.1/eq1.9"},
    {CheckKind::Cor11Adamchuk, "cor1.1/adamchuk"},
    {CheckKind::Thm12Eq110, "thm1.2/eq1.10"},
    {CheckKind::Thm12Eq111, "thm1.2/eq1.11"},
    {CheckKind::Cor12Eq112, "cor1.2/eq1.12"},
    {CheckKind::Cor12Eq113, "cor1.2/eq1.13"},
    {CheckKind::Sec2Lemma21, "sec2/lemma2.1"},
    {CheckKind::Sec2Lemma22, "sec2/lemma2.2"},
    {CheckKind::Sec2Lemma23, "sec2/lemma2.3"},
    {CheckKind::Sec2Lemma24, "sec2/lemma2.4"},
    {CheckKind::Sec2Wolstenholme, "sec2/wolstenholme"},
    {CheckKind::Sec2LehmerHalf, "sec2/lehmer_half"},
    {CheckKind::Sec2LehmerThird, "sec2/lehmer_third"},
    {CheckKind::Sec2LehmerSixth, "sec2/lehmer_sixth"},
    {CheckKind::Sec2Ternary, "sec2/ternary"},
    {CheckKind::Lem31, "lem3.1/eq3.1"},
};

bool glob_match_at(const char* pat, const char* str) {
    while (*pat) {
        if (*pat == '*') {
            while (*(pat + 1) == '*') ++pat;
            for (const char* s = str;; ++s) {
                if (glob_match_at(pat + 1, s)) return true;
                if (!*s) return false;
            }
        }
        if (!*str || (*pat != '?' && *pat != *str)) return false;
        ++pat;
        ++str;
    }
    return !*str;
}

bool needs_sum_table(CheckKind k) {
    switch (k) {
    case CheckKind::Thm11Eq12:
    case CheckKind::Thm11Eq13:
    case CheckKind::Thm11Eq14:
    case CheckKind::Cor11Eq15:
    case CheckKind::Cor11Eq18:
    case CheckKind::Cor11Eq19:
    case CheckKind::Lem31:
        return true;
    default:
        return false;
    }
}

void run_one(const CheckRequest& rq, const ShiftedSumTable* table,
             std::vector<CongruenceReport>& out) {
    auto pp = [&] { return prime_power(rq.p, rq.a); };
    switch (rq.kind) {
    case CheckKind::Thm11Eq12:
        out.push_back(check_theorem_1_1(pp(), static_cast<u64>(rq.d), Thm11Clause::Eq12, table));
        break;
    case CheckKind::Thm11Eq13:
        out.push_back(check_theorem_1_1(pp(), static_cast<u64>(rq.d), Thm11Clause::Eq13, table));
        break;
    case CheckKind::Thm11Eq14:
        out.push_back(check_theorem_1_1(pp(), static_cast<u64>(rq.d), Thm11Clause::Eq14, table));
        break;
    case CheckKind::Cor11Eq15:
        out.push_back(check_corollary_1_1(pp(), static_cast<u64>(rq.d), Cor11Clause::Eq15, table));
        break;
    case CheckKind::Cor11Eq16:
        out.push_back(check_corollary_1_1(pp(), 0, Cor11Clause::Eq16, table));
        break;
    case CheckKind::Cor11Eq17:
        out.push_back(check_corollary_1_1(pp(), 0, Cor11Clause::Eq17, table));
        break;
    case CheckKind::Cor11Eq18:
        out.push_back(check_corollary_1_1(pp(), 0, Cor11Clause::Eq18, table));
        break;
    case CheckKind::Cor11Eq19:
        out.push_back(check_corollary_1_1(pp(), 0, Cor11Clause::Eq19, table));
        break;
    case CheckKind::Cor11Adamchuk:
        out.push_back(check_corollary_1_1(pp(), 0, Cor11Clause::Adamchuk, table));
        break;
    case CheckKind::Thm12Eq110:
        out.push_back(check_theorem_1_2(pp(), static_cast<u64>(rq.d), static_cast<u64>(rq.m),
                                        static_cast<u64>(rq.n), Thm12Clause::Eq110));
        break;
    case CheckKind::Thm12Eq111:
        out.push_back(check_theorem_1_2(pp(), static_cast<u64>(rq.d), static_cast<u64>(rq.m),
                                        static_cast<u64>(rq.n), Thm12Clause::Eq111));
        break;
    case CheckKind::Cor12Eq112:
        out.push_back(check_corollary_1_2(pp(), static_cast<u64>(rq.n), Cor12Clause::Eq112));
        break;
    case CheckKind::Cor12Eq113:
        out.push_back(check_corollary_1_2(pp(), static_cast<u64>(rq.n), Cor12Clause::Eq113));
        break;
    case CheckKind::Sec2Lemma21:
        out.push_back(check_lemma_2_1(pp(), static_cast<u64>(rq.m), static_cast<u64>(rq.n)));
        break;
    case CheckKind::Sec2Lemma22:
        out.push_back(check_lemma_2_2(pp()));
        break;
    case CheckKind::Sec2Lemma23:
        out.push_back(check_lemma_2_3(rq.n, rq.d));
        break;
    case CheckKind::Sec2Lemma24:
        out.push_back(check_lemma_2_4(pp()));
        break;
    case CheckKind::Sec2Wolstenholme:
        out.push_back(check_wolstenholme(rq.p));
        break;
    case CheckKind::Sec2LehmerHalf:
        out.push_back(check_lehmer(rq.p, LehmerSum::Half));
        break;
    case CheckKind::Sec2LehmerThird:
        out.push_back(check_lehmer(rq.p, LehmerSum::Third));
        break;
    case CheckKind::Sec2LehmerSixth:
        out.push_back(check_lehmer(rq.p, LehmerSum::Sixth));
        break;
    case CheckKind::Sec2Ternary:
        out.push_back(check_ternary(static_cast<u64>(rq.n), static_cast<u64>(rq.d)));
        break;
    case CheckKind::Lem31: {
        auto both = check_lemma_3_1(pp(), static_cast<u64>(rq.d), table);
        out.insert(out.end(), both.begin(), both.end());
        break;
    }
    }
}

std::tuple<std::string, i64, i64, i64, i64, i64> sort_key(const CongruenceReport& r) {
    auto v = [](const std::optional<i64>& o) { return o.value_or(-1); };
    return {r.check_id, v(r.params.p), v(r.params.a), v(r.params.d), v(r.params.m),
            v(r.params.n)};
}

} // namespace

const char* check_id_of(CheckKind kind) {
    for (const auto& k : kKinds)
        if (k.kind == kind) return k.id;
    return "?";
}

std::vector<std::string> all_check_ids() {
    std::vector<std::string> ids;
    for (const auto& k : kKinds) {
        if (k.kind == CheckKind::Lem31) {
            ids.emplace_back("lem3.1/eq3.1-p3");
            ids.emplace_back("lem3.1/eq3.1-p2");
        } else {
            ids.emplace_back(k.id);
        }
    }
    return ids;
}

bool glob_match(const std::string& pattern, const std::string& id) {
    return glob_match_at(pattern.c_str(), id.c_str());
}

std::vector<CheckRequest> build_grid(const GridOptions& opt) {
    // A kind is selected when any glob matches any of its report ids.
    auto selected = [&](CheckKind kind) {
        std::vector<std::string> ids;
        if (kind == CheckKind::Lem31)
            ids = {"lem3.1/eq3.1-p3", "lem3.1/eq3.1-p2", "lem3.1/eq3.1"};
        else
            ids = {check_id_of(kind)};
        for (const auto& g : opt.check_globs)
            for (const auto& id : ids)
                if (glob_match(g, id)) return true;
        return false;
    };
    for (const auto& g : opt.check_globs) {
        bool known = false;
        for (const auto& id : all_check_ids())
            if (glob_match(g, id)) known = true;
        if (!known) throw std::invalid_argument("unknown check id glob: " + g);
    }

    std::vector<CheckRequest> rqs;
    auto add = [&](CheckKind k, u64 p, u32 a, i64 d, i64 m, i64 n) {
        rqs.push_back(CheckRequest{k, p, a, d, m, n});
    };

    for (u64 p : opt.p_set) {
        for (const PrimePower& pp : prime_powers_up_to(p, opt.pa_cap)) {
            const i64 pa = static_cast<i64>(pp.pa);
            if (selected(CheckKind::Thm11Eq12))
                for (i64 d = 0; d <= pa; ++d) add(CheckKind::Thm11Eq12, p, pp.a, d, 0, 0);
            if (selected(CheckKind::Thm11Eq13))
                for (i64 d = 0; d <= pa; ++d) add(CheckKind::Thm11Eq13, p, pp.a, d, 0, 0);
            if (selected(CheckKind::Thm11Eq14))
                for (i64 d = 0; d <= 1; ++d) add(CheckKind::Thm11Eq14, p, pp.a, d, 0, 0);
            if (selected(CheckKind::Cor11Eq15))
                for (i64 d = 0; d <= pa; ++d) add(CheckKind::Cor11Eq15, p, pp.a, d, 0, 0);
            if (selected(CheckKind::Cor11Eq16)) add(CheckKind::Cor11Eq16, p, pp.a, 0, 0, 0);
            if (selected(CheckKind::Cor11Eq17)) add(CheckKind::Cor11Eq17, p, pp.a, 0, 0, 0);
            if (selected(CheckKind::Cor11Eq18)) add(CheckKind::Cor11Eq18, p, pp.a, 0, 0, 0);
            if (selected(CheckKind::Cor11Eq19)) add(CheckKind::Cor11Eq19, p, pp.a, 0, 0, 0);
            if (selected(CheckKind::Cor11Adamchuk) && p > 3 && pp.a == 1)
                add(CheckKind::Cor11Adamchuk, p, 1, 0, 0, 0);
            if (selected(CheckKind::Thm12Eq110))
                for (i64 m = 0; m <= static_cast<i64>(opt.m_max); ++m)
                    for (i64 n = 0; n <= std::min<i64>(m, static_cast<i64>(opt.n_max)); ++n)
                        for (i64 d = 0; d <= pa; ++d) add(CheckKind::Thm12Eq110, p, pp.a, d, m, n);
            if (selected(CheckKind::Thm12Eq111))
                for (i64 n = 0; 2 * n <= static_cast<i64>(opt.m_max); ++n)
                    for (i64 d = 0; d <= pa; ++d)
                        add(CheckKind::Thm12Eq111, p, pp.a, d, 2 * n, n);
            if (selected(CheckKind::Cor12Eq112))
                for (i64 n = 0; n <= static_cast<i64>(opt.n_max); ++n)
                    add(CheckKind::Cor12Eq112, p, pp.a, 0, 0, n);
            if (selected(CheckKind::Cor12Eq113))
                for (i64 n = 0; n <= static_cast<i64>(opt.n_max); ++n)
                    add(CheckKind::Cor12Eq113, p, pp.a, 0, 0, n);
            if (selected(CheckKind::Sec2Lemma21))
                for (i64 m = 0; m <= static_cast<i64>(opt.m_max); ++m)
                    for (i64 n = 0; n <= m; ++n) add(CheckKind::Sec2Lemma21, p, pp.a, 0, m, n);
            if (selected(CheckKind::Sec2Lemma22)) add(CheckKind::Sec2Lemma22, p, pp.a, 0, 0, 0);
            if (selected(CheckKind::Sec2Lemma24)) add(CheckKind::Sec2Lemma24, p, pp.a, 0, 0, 0);
            if (selected(CheckKind::Lem31))
                for (i64 d = 1; d < pa; ++d) add(CheckKind::Lem31, p, pp.a, d, 0, 0);
        }
        if (p > 3) {
            if (selected(CheckKind::Sec2Wolstenholme)) add(CheckKind::Sec2Wolstenholme, p, 1, 0, 0, 0);
            if (selected(CheckKind::Sec2LehmerHalf)) add(CheckKind::Sec2LehmerHalf, p, 1, 0, 0, 0);
            if (selected(CheckKind::Sec2LehmerThird)) add(CheckKind::Sec2LehmerThird, p, 1, 0, 0, 0);
            if (selected(CheckKind::Sec2LehmerSixth)) add(CheckKind::Sec2LehmerSixth, p, 1, 0, 0, 0);
        }
    }
    // p-independent exact identities, once per grid
    if (selected(CheckKind::Sec2Lemma23))
        for (i64 n = 2; n <= 60; ++n)
            for (i64 d = -10; d <= 10; ++d) add(CheckKind::Sec2Lemma23, 0, 0, d, 0, n);
    if (selected(CheckKind::Sec2Ternary))
        for (i64 n = 0; n <= 30; ++n)
            for (i64 r = 0; r <= 2; ++r) add(CheckKind::Sec2Ternary, 0, 0, r, 0, n);
    return rqs;
}

std::vector<CongruenceReport> run_requests(std::span<const CheckRequest> requests, int jobs,
                                           bool perturb) {
    // Tables are built up-front, then shared read-only across workers.
    std::map<std::pair<u64, u32>, ShiftedSumTable> tables;
    for (const CheckRequest& rq : requests) {
        if (!needs_sum_table(rq.kind)) continue;
        auto key = std::make_pair(rq.p, rq.a);
        if (tables.count(key)) continue;
        PrimePower pp = prime_power(rq.p, rq.a);
        u32 v2 = pp.p == 2 ? 1 : 0;
        tables.emplace(key, build_shifted_sums(pp, working_prec(pp, 3 + v2)));
    }
    auto table_for = [&](const CheckRequest& rq) -> const ShiftedSumTable* {
        if (!needs_sum_table(rq.kind)) return nullptr;
        auto it = tables.find(std::make_pair(rq.p, rq.a));
        return it == tables.end() ? nullptr : &it->second;
    };

    std::vector<std::vector<CongruenceReport>> per_request(requests.size());
    const i64 count = static_cast<i64>(requests.size());
    if (jobs > 1) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
        for (i64 i = 0; i < count; ++i) {
            const CheckRequest& rq = requests[static_cast<std::size_t>(i)];
            try {
                run_one(rq, table_for(rq), per_request[static_cast<std::size_t>(i)]);
            } catch (const std::exception& e) {
                CongruenceReport r;
                r.check_id = check_id_of(rq.kind);
                r.pass = false;
                r.note = std::string("check aborted: ") + e.what();
                per_request[static_cast<std::size_t>(i)].push_back(r);
            }
        }
    } else {
        for (i64 i = 0; i < count; ++i) {
            const CheckRequest& rq = requests[static_cast<std::size_t>(i)];
            run_one(rq, table_for(rq), per_request[static_cast<std::size_t>(i)]);
        }
    }

    std::vector<CongruenceReport> reports;
    for (auto& v : per_request)
        for (auto& r : v) reports.push_back(std::move(r));
    if (perturb) {
        for (auto& r : reports) {
            r.rhs = r.modulus > 1 ? static_cast<i64>((static_cast<u64>(r.rhs) + 1) % r.modulus)
                                  : r.rhs + 1;
            r.pass = r.lhs == r.rhs;
        }
    }
    std::sort(reports.begin(), reports.end(),
              [](const CongruenceReport& x, const CongruenceReport& y) {
                  return sort_key(x) < sort_key(y);
              });
    return reports;
}

} // namespace cbc
