#include "hochkit/jobspec.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hochkit {

namespace {

struct Line {
    int number;
    std::string text;
};

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    fail(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

[[noreturn]] void validation_fail(const std::string& msg) { fail(Errc::ValidationError, msg); }

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

int64_t parse_int(const std::string& s, int line) {
    if (s.empty()) parse_fail(line, "expected an integer");
    size_t pos = 0;
    int64_t v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (...) {
        parse_fail(line, "bad integer '" + s + "'");
    }
    if (pos != s.size()) parse_fail(line, "bad integer '" + s + "'");
    return v;
}

std::vector<int64_t> parse_int_list(const std::string& s, int line) {
    std::string t = trim(s);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') parse_fail(line, "expected [a,b,...]");
    std::vector<int64_t> out;
    std::string inner = t.substr(1, t.size() - 2);
    if (trim(inner).empty()) return out;
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(trim(item), line));
    return out;
}

std::vector<std::vector<int64_t>> parse_list_of_lists(const std::string& s, int line) {
    std::string t = trim(s);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') parse_fail(line, "expected [[...],[...]]");
    std::vector<std::vector<int64_t>> out;
    std::string inner = t.substr(1, t.size() - 2);
    size_t i = 0;
    while (i < inner.size()) {
        while (i < inner.size() && (inner[i] == ' ' || inner[i] == ',' || inner[i] == '\t')) ++i;
        if (i >= inner.size()) break;
        if (inner[i] != '[') parse_fail(line, "expected inner list");
        size_t j = inner.find(']', i);
        if (j == std::string::npos) parse_fail(line, "unterminated inner list");
        out.push_back(parse_int_list(inner.substr(i, j - i + 1), line));
        i = j + 1;
    }
    return out;
}

// key patterns c[i][j][k] and unit[k]
bool match_indexed(const std::string& key, const std::string& name, std::vector<int>& idx) {
    if (key.rfind(name + "[", 0) != 0) return false;
    idx.clear();
    size_t i = name.size();
    while (i < key.size()) {
        if (key[i] != '[') return false;
        size_t j = key.find(']', i);
        if (j == std::string::npos) return false;
        std::string num = key.substr(i + 1, j - i - 1);
        for (char c : num)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        if (num.empty()) return false;
        idx.push_back(std::stoi(num));
        i = j + 1;
    }
    return i == key.size();
}

} // namespace

JobSpec parse_spec(const std::string& text) {
    JobSpec job;
    bool seen_ring = false, seen_algebra = false, seen_job = false;
    bool kind_set = false;

    std::vector<Line> lines;
    {
        std::stringstream ss(text);
        std::string l;
        int n = 0;
        while (std::getline(ss, l)) {
            ++n;
            size_t hash = l.find('#');
            if (hash != std::string::npos) l = l.substr(0, hash);
            l = trim(l);
            if (!l.empty()) lines.push_back({n, l});
        }
    }

    std::string section;
    std::vector<std::pair<std::string, int>> seen_keys;
    for (const Line& ln : lines) {
        if (ln.text.front() == '[' && ln.text.back() == ']') {
            section = trim(ln.text.substr(1, ln.text.size() - 2));
            if (section == "ring") seen_ring = true;
            else if (section == "algebra") seen_algebra = true;
            else if (section == "job") seen_job = true;
            else parse_fail(ln.number, "unknown section [" + section + "]");
            continue;
        }
        size_t eq = ln.text.find('=');
        if (eq == std::string::npos) parse_fail(ln.number, "expected key = value");
        std::string key = trim(ln.text.substr(0, eq));
        std::string val = trim(ln.text.substr(eq + 1));
        if (section.empty()) parse_fail(ln.number, "key outside any section");
        std::string qual = section + "." + key;
        for (auto& [k, l0] : seen_keys)
            if (k == qual) parse_fail(ln.number, "duplicate key '" + key + "' (first at line " + std::to_string(l0) + ")");
        seen_keys.emplace_back(qual, ln.number);

        if (section == "ring") {
            if (key == "kind") {
                if (val == "unramified") job.ring.kind = RingKind::Unramified;
                else if (val == "eisenstein") job.ring.kind = RingKind::Eisenstein;
                else parse_fail(ln.number, "kind must be unramified or eisenstein");
                kind_set = true;
            } else if (key == "p") {
                job.ring.p = parse_int(val, ln.number);
            } else if (key == "precision") {
                job.ring.precision = static_cast<int>(parse_int(val, ln.number));
            } else if (key == "eisenstein_coeffs") {
                job.ring.eis_coeffs = parse_int_list(val, ln.number);
            } else {
                parse_fail(ln.number, "unknown key '" + key + "' in [ring]");
            }
        } else if (section == "algebra") {
            std::vector<int> idx;
            if (key == "preset") {
                job.algebra.preset = val;
            } else if (key == "order") {
                job.algebra.order = static_cast<int>(parse_int(val, ln.number));
            } else if (key == "m") {
                job.algebra.m = static_cast<int>(parse_int(val, ln.number));
            } else if (key == "n") {
                job.algebra.n = static_cast<int>(parse_int(val, ln.number));
            } else if (key == "base") {
                job.algebra.base = val;
            } else if (key == "rank") {
                job.algebra.rank = static_cast<int>(parse_int(val, ln.number));
            } else if (key == "table") {
                auto rows = parse_list_of_lists(val, ln.number);
                for (auto& r : rows) {
                    std::vector<int> ir(r.begin(), r.end());
                    job.algebra.table.push_back(std::move(ir));
                }
            } else if (match_indexed(key, "c", idx)) {
                if (idx.size() != 3) parse_fail(ln.number, "structure constant key must be c[i][j][k]");
                job.algebra.sc_entries[{idx[0], idx[1], idx[2]}] = parse_int_list(val, ln.number);
            } else if (match_indexed(key, "unit", idx)) {
                if (idx.size() != 1) parse_fail(ln.number, "unit key must be unit[k]");
                job.algebra.unit_entries[idx[0]] = parse_int_list(val, ln.number);
            } else {
                parse_fail(ln.number, "unknown key '" + key + "' in [algebra]");
            }
        } else { // job
            if (key == "command") {
                job.command = val;
            } else if (key == "degree") {
                job.degree = static_cast<int>(parse_int(val, ln.number));
            } else if (key == "r") {
                job.r = static_cast<int>(parse_int(val, ln.number));
            } else if (key == "s_max") {
                job.s_max = static_cast<int>(parse_int(val, ln.number));
            } else if (key == "n") {
                job.n = static_cast<int>(parse_int(val, ln.number));
            } else if (key == "ideal") {
                job.ideal = parse_list_of_lists(val, ln.number);
            } else if (key == "format") {
                if (val != "text" && val != "csv" && val != "json")
                    parse_fail(ln.number, "format must be text, csv or json");
                job.format = val;
            } else {
                parse_fail(ln.number, "unknown key '" + key + "' in [job]");
            }
        }
    }

    if (!seen_ring) validation_fail("missing [ring] section");
    if (!seen_algebra) validation_fail("missing [algebra] section");
    if (!seen_job) validation_fail("missing [job] section");
    if (!kind_set) validation_fail("[ring] kind is required");
    if (job.command.empty()) validation_fail("[job] command is required");

    // Ring invariants (construction revalidates; this reports early with
    // the named invariant).
    ChainRing ring = ChainRing::make(job.ring);

    const std::vector<std::string> commands = {"hh", "chain", "bockstein", "les-check",
                                               "level-check", "pi-shift", "morita-check", "report"};
    if (std::find(commands.begin(), commands.end(), job.command) == commands.end())
        validation_fail("unknown command '" + job.command + "'");

    const int N = ring.precision();
    if (job.r > N) validation_fail("r exceeds ring precision");
    if (job.s_max > N) validation_fail("s_max exceeds ring precision");
    if (job.command == "hh") {
        if (job.degree < 0 || job.degree > 3) validation_fail("hh requires degree in [0,3]");
    } else if (job.command == "chain" || job.command == "morita-check") {
        if (job.r < 1) validation_fail(job.command + " requires r >= 1");
        if (job.s_max < 0) validation_fail(job.command + " requires s_max");
        if (2 * job.r > job.s_max) validation_fail("requires 2r <= s_max");
        if (job.command == "morita-check" && job.n < 1) validation_fail("morita-check requires n >= 1");
    } else if (job.command == "bockstein") {
        if (job.r < 1 || 2 * job.r > N) validation_fail("bockstein requires 1 <= r with 2r <= precision");
        if (job.degree < 0 || job.degree > 2) validation_fail("bockstein requires degree in [0,2]");
    } else if (job.command == "les-check") {
        if (job.r < 1 || 2 * job.r > N) validation_fail("les-check requires 1 <= r with 2r <= precision");
    } else if (job.command == "level-check") {
        if (job.r < 1) validation_fail("level-check requires r >= 1");
        if (job.s_max < job.r) validation_fail("level-check requires s_max >= r");
        if (job.degree < 0 || job.degree > 2) validation_fail("level-check requires degree in [0,2]");
    } else if (job.command == "pi-shift") {
        if (job.r < 1 || job.r + 1 > N) validation_fail("pi-shift requires 1 <= r < precision");
    } else if (job.command == "report") {
        if (job.format == "csv") validation_fail("report has no single table; use text or json");
    }
    if (!job.ideal.empty() && job.command != "report")
        validation_fail("ideal generators are only consumed by the report command");
    for (const auto& gen : job.ideal)
        if (gen.size() != job.ideal.front().size())
            validation_fail("ideal generators must have equal length");

    const std::string& p = job.algebra.preset;
    if (p == "cyclic_group") {
        if (job.algebra.order < 1) validation_fail("cyclic_group requires order >= 1");
    } else if (p == "truncated_polynomial") {
        if (job.algebra.m < 1) validation_fail("truncated_polynomial requires m >= 1");
    } else if (p == "group_table") {
        if (job.algebra.table.empty()) validation_fail("group_table requires table");
    } else if (p == "matrix") {
        if (job.algebra.n < 1) validation_fail("matrix preset requires n >= 1");
        if (job.algebra.base != "cyclic_group" && job.algebra.base != "truncated_polynomial")
            validation_fail("matrix preset base must be cyclic_group or truncated_polynomial");
        if (job.algebra.base == "cyclic_group" && job.algebra.order < 1)
            validation_fail("matrix base cyclic_group requires order");
        if (job.algebra.base == "truncated_polynomial" && job.algebra.m < 1)
            validation_fail("matrix base truncated_polynomial requires m");
    } else if (p == "custom") {
        if (job.algebra.rank < 1) validation_fail("custom algebra requires rank >= 1");
    } else {
        validation_fail("unknown preset '" + p + "'");
    }
    return job;
}

std::string serialize_spec(const JobSpec& job) {
    std::ostringstream os;
    os << "[ring]\n";
    os << "kind = " << (job.ring.kind == RingKind::Unramified ? "unramified" : "eisenstein") << "\n";
    os << "p = " << job.ring.p << "\n";
    os << "precision = " << job.ring.precision << "\n";
    if (job.ring.kind == RingKind::Eisenstein) {
        os << "eisenstein_coeffs = [";
        for (size_t i = 0; i < job.ring.eis_coeffs.size(); ++i)
            os << (i ? "," : "") << job.ring.eis_coeffs[i];
        os << "]\n";
    }
    os << "[algebra]\n";
    os << "preset = " << job.algebra.preset << "\n";
    if (job.algebra.preset == "cyclic_group") os << "order = " << job.algebra.order << "\n";
    if (job.algebra.preset == "truncated_polynomial") os << "m = " << job.algebra.m << "\n";
    if (job.algebra.preset == "matrix") {
        os << "n = " << job.algebra.n << "\n";
        os << "base = " << job.algebra.base << "\n";
        if (job.algebra.base == "cyclic_group") os << "order = " << job.algebra.order << "\n";
        if (job.algebra.base == "truncated_polynomial") os << "m = " << job.algebra.m << "\n";
    }
    if (job.algebra.preset == "group_table") {
        os << "table = [";
        for (size_t i = 0; i < job.algebra.table.size(); ++i) {
            os << (i ? "," : "") << "[";
            for (size_t j = 0; j < job.algebra.table[i].size(); ++j)
                os << (j ? "," : "") << job.algebra.table[i][j];
            os << "]";
        }
        os << "]\n";
    }
    if (job.algebra.preset == "custom") {
        os << "rank = " << job.algebra.rank << "\n";
        for (const auto& [k, v] : job.algebra.unit_entries) {
            os << "unit[" << k << "] = [";
            for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
            os << "]\n";
        }
        for (const auto& [key, v] : job.algebra.sc_entries) {
            os << "c[" << std::get<0>(key) << "][" << std::get<1>(key) << "][" << std::get<2>(key) << "] = [";
            for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
            os << "]\n";
        }
    }
    os << "[job]\n";
    os << "command = " << job.command << "\n";
    if (job.degree >= 0) os << "degree = " << job.degree << "\n";
    if (job.r >= 0) os << "r = " << job.r << "\n";
    if (job.s_max >= 0) os << "s_max = " << job.s_max << "\n";
    if (job.n >= 0) os << "n = " << job.n << "\n";
    if (!job.ideal.empty()) {
        os << "ideal = [";
        for (size_t i = 0; i < job.ideal.size(); ++i) {
            os << (i ? "," : "") << "[";
            for (size_t j = 0; j < job.ideal[i].size(); ++j)
                os << (j ? "," : "") << job.ideal[i][j];
            os << "]";
        }
        os << "]\n";
    }
    os << "format = " << job.format << "\n";
    return os.str();
}

ChainRing build_ring(const JobSpec& job) { return ChainRing::make(job.ring); }

Algebra build_algebra(const JobSpec& job, const ChainRing& ring) {
    const AlgebraSpec& a = job.algebra;
    if (a.preset == "cyclic_group") return Algebra::cyclic_group(ring, a.order);
    if (a.preset == "truncated_polynomial") return Algebra::truncated_polynomial(ring, a.m);
    if (a.preset == "group_table") return Algebra::group_algebra(ring, a.table);
    if (a.preset == "matrix") {
        Algebra base = a.base == "cyclic_group" ? Algebra::cyclic_group(ring, a.order)
                                                : Algebra::truncated_polynomial(ring, a.m);
        return Algebra::matrix_algebra(base, a.n);
    }
    // custom
    size_t rank = static_cast<size_t>(a.rank);
    std::vector<std::vector<std::vector<Elem>>> sc(rank,
        std::vector<std::vector<Elem>>(rank, std::vector<Elem>(rank)));
    for (const auto& [key, digits] : a.sc_entries) {
        auto [i, j, k] = key;
        if (i < 0 || j < 0 || k < 0 || static_cast<size_t>(i) >= rank ||
            static_cast<size_t>(j) >= rank || static_cast<size_t>(k) >= rank)
            fail(Errc::ValidationError, "structure constant index out of range");
        sc[i][j][k] = ring.from_digits(digits);
    }
    std::vector<Elem> unit(rank);
    for (const auto& [k, digits] : a.unit_entries) {
        if (k < 0 || static_cast<size_t>(k) >= rank)
            fail(Errc::ValidationError, "unit index out of range");
        unit[k] = ring.from_digits(digits);
    }
    return Algebra::from_struct_consts(ring, rank, std::move(sc), std::move(unit));
}

} // namespace hochkit
