#include "twistlab/reference_tables.hpp"

#include <algorithm>
#include <sstream>

namespace twistlab {

namespace {

const ReferenceRow kRows[] = {
    {{1, 2, 1}, 4, 24, -12, true},
    {{1, 4, 1}, 6, 28, -12, true},
    {{1, 6, 1}, 8, 32, -12, true},
    {{1, 8, 1}, 10, 36, -12, true},
    {{1, 10, 1}, 12, 40, -12, true},
    {{2, 2, 1}, 5, 32, -16, true},
    {{1, 2, 2}, 5, 32, -16, true},
    {{2, 4, 1}, 7, 36, -16, true},
    {{1, 4, 2}, 7, 36, -16, true},
    {{2, 6, 1}, 9, 40, -16, true},
    {{1, 6, 2}, 9, 40, -16, true},
    {{2, 8, 1}, 11, 44, -16, true},
    {{1, 8, 2}, 11, 44, -16, true},
    {{3, 2, 1}, 6, 40, -20, true},
    {{2, 2, 2}, 6, 40, -20, true},
    {{1, 2, 3}, 6, 40, -20, true},
    {{3, 4, 1}, 8, 44, -20, true},
    {{2, 4, 2}, 8, 44, -20, true},
    {{1, 4, 3}, 8, 44, -20, true},
    {{3, 6, 1}, 10, 48, -20, true},
    {{2, 6, 2}, 10, 48, -20, true},
    {{1, 6, 3}, 10, 48, -20, true},
    {{3, 8, 1}, 12, 52, -20, true},
    {{2, 8, 2}, 12, 52, -20, true},
    {{1, 8, 3}, 12, 52, -20, true},
    {{1, 2, 4}, 7, 48, -24, false},
    {{1, 4, 4}, 9, 52, -24, false},
    {{1, 6, 4}, 11, 56, -24, false},
    {{1, 8, 4}, 13, 60, -24, false},
    {{1, 2, 5}, 8, 56, -28, false},
    {{1, 4, 5}, 10, 60, -28, false},
    {{1, 6, 5}, 12, 64, -28, false},
    {{1, 8, 5}, 14, 68, -28, false},
    {{1, 2, 6}, 9, 64, -32, false},
    {{1, 4, 6}, 11, 68, -32, false},
    {{1, 6, 6}, 13, 72, -32, false},
    {{1, 2, 7}, 10, 72, -36, false},
    {{1, 4, 7}, 12, 76, -36, false},
    {{1, 6, 7}, 14, 80, -36, false},
};

const ReferenceStream kStreams[] = {
    {{1, 2, 1}, "......--------.----.....", -12},
    {{1, 4, 1}, "........--------...----.....", -12},
    {{1, 6, 1}, "..........--------.....----.....", -12},
    {{2, 2, 1}, "........----------.------.......", -16},
    {{2, 2, 2}, "..........------------.--------.........", -20},
    {{2, 4, 2}, "............------------...--------.........", -20},
    {{3, 2, 2}, "............--------------.----------...........", -24},
    {{4, 2, 4}, "..................--------------------.----------------.................", -36},
};

}  // namespace

std::span<const ReferenceRow> reference_rows() { return kRows; }

std::span<const ReferenceStream> reference_streams() { return kStreams; }

std::vector<int> ReferenceStream::values() const {
    std::vector<int> out;
    for (char c : pattern) out.push_back(c == '-' ? -1 : 0);
    return out;
}

StreamComparison compare_streams(const std::vector<int>& computed, const ReferenceStream& ref) {
    StreamComparison cmp;
    const auto want = ref.values();
    int sum = 0;
    for (int v : computed) sum += v;
    cmp.sum_matches = sum == ref.sigma;
    cmp.reference_negatives = static_cast<int>(std::count(want.begin(), want.end(), -1));
    cmp.computed_negatives = static_cast<int>(std::count(computed.begin(), computed.end(), -1));
    if (computed.size() == want.size()) {
        cmp.same_order = computed == want;
        cmp.reversed_order = std::equal(computed.rbegin(), computed.rend(), want.begin());
        for (std::size_t i = 0; i < want.size(); ++i)
            if (computed[i] != want[i]) cmp.mismatches.push_back(i + 1);
    }
    return cmp;
}

std::string StreamComparison::summary() const {
    std::ostringstream out;
    out << "sum " << (sum_matches ? "matches" : "differs") << ", -1 count " << computed_negatives << " vs "
        << reference_negatives << ", entrywise " << (same_order ? "identical" : "different");
    if (!same_order) {
        out << " (" << mismatches.size() << " positions)";
        if (reversed_order) out << ", identical to the reversed stream";
    }
    return out.str();
}

std::string render_stream(const std::vector<int>& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ' ';
        if (i == 0) out << s[i];
        else out << (s[i] >= 0 ? "+" : "") << s[i];
    }
    return out.str();
}

std::string render_stream_csv(const std::vector<int>& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    return out.str();
}

}  // namespace twistlab
