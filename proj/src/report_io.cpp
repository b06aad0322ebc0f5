#include "cbc/report_io.hpp"

#include <sstream>

namespace cbc {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string opt_str(const std::optional<i64>& v) {
    return v ? std::to_string(*v) : std::string();
}

} // namespace

ordered_json report_to_json(const CongruenceReport& r) {
    ordered_json params = ordered_json::object();
    if (r.params.p) params["p"] = *r.params.p;
    if (r.params.a) params["a"] = *r.params.a;
    if (r.params.d) params["d"] = *r.params.d;
    if (r.params.m) params["m"] = *r.params.m;
    if (r.params.n) params["n"] = *r.params.n;
    ordered_json j;
    j["check_id"] = r.check_id;
    j["params"] = params;
    j["modulus"] = std::to_string(r.modulus);
    j["lhs"] = std::to_string(r.lhs);
    j["rhs"] = std::to_string(r.rhs);
    j["pass"] = r.pass;
    j["note"] = r.note;
    return j;
}

ordered_json summary_to_json(const SearchSummary& s) {
    ordered_json j;
    j["bound"] = s.bound;
    j["predicate"] = predicate_name(s.predicate);
    j["tested_count"] = s.tested_count;
    j["hit_semantics"] = "a hit is a composite modulus SATISFYING the congruence";
    ordered_json hits = ordered_json::array();
    for (const SearchHit& h : s.hits) {
        ordered_json e;
        e["n"] = h.n;
        e["predicate"] = predicate_name(h.predicate);
        e["lhs"] = std::to_string(h.lhs);
        e["rhs"] = std::to_string(h.rhs);
        hits.push_back(e);
    }
    j["hits"] = hits;
    j["checkpoint"] = s.checkpoint;
    return j;
}

std::string reports_to_csv(const std::vector<CongruenceReport>& reports) {
    std::ostringstream out;
    out << "check_id,p,a,d,m,n,modulus,lhs,rhs,pass,note\n";
    for (const CongruenceReport& r : reports) {
        out << r.check_id << ',' << opt_str(r.params.p) << ',' << opt_str(r.params.a) << ','
            << opt_str(r.params.d) << ',' << opt_str(r.params.m) << ',' << opt_str(r.params.n)
            << ',' << r.modulus << ',' << r.lhs << ',' << r.rhs << ','
            << (r.pass ? "true" : "false") << ',' << csv_field(r.note) << '\n';
    }
    return out.str();
}

std::string reports_to_text(const std::vector<CongruenceReport>& reports) {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const CongruenceReport& r : reports) {
        if (r.pass) continue;
        ++failed;
        out << "FAIL " << r.check_id;
        if (r.params.p) out << " p=" << *r.params.p;
        if (r.params.a) out << " a=" << *r.params.a;
        if (r.params.d) out << " d=" << *r.params.d;
        if (r.params.m) out << " m=" << *r.params.m;
        if (r.params.n) out << " n=" << *r.params.n;
        out << " modulus=" << r.modulus << " lhs=" << r.lhs << " rhs=" << r.rhs;
        if (!r.note.empty()) out << " note=" << r.note;
        out << '\n';
    }
    out << "checks: " << reports.size() << "  passed: " << reports.size() - failed
        << "  failed: " << failed << '\n';
    return out.str();
}

std::string summary_to_csv(const SearchSummary& s) {
    std::ostringstream out;
    out << "bound,predicate,tested_count,hit_count,checkpoint\n";
    out << s.bound << ',' << predicate_name(s.predicate) << ',' << s.tested_count << ','
        << s.hits.size() << ',' << s.checkpoint << '\n';
    if (!s.hits.empty()) {
        out << "hit_n,hit_predicate,hit_lhs,hit_rhs\n";
        for (const SearchHit& h : s.hits)
            out << h.n << ',' << predicate_name(h.predicate) << ',' << h.lhs << ',' << h.rhs
                << '\n';
    }
    return out.str();
}

std::string summary_to_text(const SearchSummary& s) {
    std::ostringstream out;
    out << "searched composite n <= " << s.bound << " with 3 not dividing n, predicate "
        << predicate_name(s.predicate) << '\n';
    out << "tested: " << s.tested_count << "  hits: " << s.hits.size()
        << "  (a hit satisfies the congruence)\n";
    for (const SearchHit& h : s.hits)
        out << "HIT n=" << h.n << " predicate=" << predicate_name(h.predicate) << " lhs=" << h.lhs
            << " rhs=" << h.rhs << '\n';
    out << "verified_up_to " << s.checkpoint << '\n';
    return out.str();
}

} // namespace cbc
