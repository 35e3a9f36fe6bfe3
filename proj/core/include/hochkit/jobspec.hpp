#pragma once

#include "hochkit/algebra.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace hochkit {

/// [algebra] section: one of the presets or custom structure constants
/// (sparse c[i][j][k] = digit-vector entries).
struct AlgebraSpec {
    std::string preset; // cyclic_group | group_table | truncated_polynomial | matrix | custom
    int order = 0;                          // cyclic_group
    int m = 0;                              // truncated_polynomial
    int n = 0;                              // matrix
    std::string base;                       // matrix: wrapped preset
    std::vector<std::vector<int>> table;    // group_table
    int rank = 0;                           // custom
    std::map<std::tuple<int, int, int>, std::vector<int64_t>> sc_entries; // custom
    std::map<int, std::vector<int64_t>> unit_entries;                     // custom

    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

struct JobSpec {
    RingSpec ring;
    AlgebraSpec algebra;
    std::string command; // hh | chain | bockstein | les-check | level-check | pi-shift | morita-check | report
    int degree = -1;
    int r = -1;
    int s_max = -1;
    int n = -1;
    // Two-sided ideal generators (coordinate vectors, entries as plain
    // integers); consumed by the report command's radical section.
    std::vector<std::vector<int64_t>> ideal;
    std::string format = "text"; // text | csv | json

    friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

/// Parse the sectioned key-value spec format.  Diagnostics carry the line
/// number; unknown keys and violated invariants are rejected.
JobSpec parse_spec(const std::string& text);
std::string serialize_spec(const JobSpec& job);

ChainRing build_ring(const JobSpec& job);
Algebra build_algebra(const JobSpec& job, const ChainRing& ring);

} // namespace hochkit
