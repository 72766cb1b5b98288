#ifndef DIHEDRAL_REPORT_HPP
#define DIHEDRAL_REPORT_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace dihedral {

struct CheckResult {
    std::string check_id;
    std::string status;  // pass | fail | skipped
    std::string details;
    long elapsed_ms = 0;
};

// Outcome of one verification run.  The canonical serialisation (and hence
// the hash printed with it) excludes elapsed times, so repeated runs with the
// same flags produce identical hashes.
struct VerificationReport {
    int m = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.status == "fail") return false;
        return true;
    }

    std::string overall() const { return all_pass() ? "pass" : "fail"; }
};

inline nlohmann::json report_json(const VerificationReport& r, bool canonical) {
    nlohmann::json j;
    j["m"] = r.m;
    j["overall"] = r.overall();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json e;
        e["check_id"] = c.check_id;
        e["status"] = c.status;
        e["details"] = c.details;
        if (!canonical) e["elapsed_ms"] = c.elapsed_ms;
        arr.push_back(e);
    }
    j["checks"] = arr;
    return j;
}

inline std::string canonical_hash(const VerificationReport& r) {
    std::string s = report_json(r, /*canonical=*/true).dump();
    uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

inline std::string emit_json(const VerificationReport& r) {
    nlohmann::json j = report_json(r, /*canonical=*/false);
    j["canonical_hash"] = canonical_hash(r);
    return j.dump(2) + "\n";
}

namespace detail {
inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}
}  // namespace detail

inline std::string emit_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << "m,check_id,status,details,elapsed_ms\n";
    for (const auto& c : r.checks)
        os << r.m << "," << detail::csv_escape(c.check_id) << "," << c.status << ","
           << detail::csv_escape(c.details) << "," << c.elapsed_ms << "\n";
    return os.str();
}

inline VerificationReport parse_csv(const std::string& text) {
    VerificationReport r;
    std::istringstream is(text);
    std::string line;
    std::getline(is, line);  // header
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string cur;
        bool quoted = false;
        for (size_t i = 0; i < line.size(); ++i) {
            char c = line[i];
            if (quoted) {
                if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else if (c == '"') {
                    quoted = false;
                } else {
                    cur += c;
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        fields.push_back(cur);
        if (fields.size() != 5) continue;
        r.m = std::stoi(fields[0]);
        r.checks.push_back({fields[1], fields[2], fields[3], std::stol(fields[4])});
    }
    return r;
}

inline std::string emit_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "verification m=" << r.m << "\n";
    for (const auto& c : r.checks) {
        os << "  [" << c.status << "] " << c.check_id;
        if (!c.details.empty()) os << "  (" << c.details << ")";
        os << "  " << c.elapsed_ms << "ms\n";
    }
    os << "overall: " << r.overall() << "\n";
    os << "canonical_hash: " << canonical_hash(r) << "\n";
    return os.str();
}

inline std::string emit(const VerificationReport& r, const std::string& format) {
    if (format == "json") return emit_json(r);
    if (format == "csv") return emit_csv(r);
    return emit_text(r);
}

// Minimal glob matching supporting '*' and '?', used by --filter.
inline bool glob_match(const std::string& pattern, const std::string& text) {
    size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

}  // namespace dihedral

#endif
