#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twistlab/involutions.hpp"

namespace twistlab {

// Known signature table for the theta^2 fibrations.
struct ReferenceRow {
    ThetaParams params;
    int g;
    int w;
    int sigma;
    bool split_listed;  // false for rows given only by (h, k); those use l = 1, r = h - 1
};

std::span<const ReferenceRow> reference_rows();

// Known per-handle output streams, '.' for 0 and '-' for -1.
struct ReferenceStream {
    ThetaParams params;
    std::string_view pattern;
    int sigma;

    std::vector<int> values() const;
};

std::span<const ReferenceStream> reference_streams();

struct StreamComparison {
    bool sum_matches = false;
    bool same_order = false;      // entry-by-entry in factorization order
    bool reversed_order = false;  // entry-by-entry against the reversed stream
    int reference_negatives = 0;
    int computed_negatives = 0;
    std::vector<std::size_t> mismatches;  // one-based positions, factorization order

    std::string summary() const;
};

StreamComparison compare_streams(const std::vector<int>& computed, const ReferenceStream& ref);

// "0 +0 -1 ..." the way the tables print streams.
std::string render_stream(const std::vector<int>& s);
// "0,0,-1,..."
std::string render_stream_csv(const std::vector<int>& s);

}  // namespace twistlab
