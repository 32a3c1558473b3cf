#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twistlab::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2 };

struct TableRow {
    int h = 0;
    int k = 0;
    int g = 0;
    int w = 0;
    int sigma = 0;

    bool operator==(const TableRow&) const = default;
};

enum class Format { text, csv, kv };

std::string render_table(const std::vector<TableRow>& rows, Format fmt);
// Inverse of render_table(rows, Format::csv); throws std::runtime_error on bad input.
std::vector<TableRow> parse_table_csv(const std::string& text);

// Computes one row per (h, k) with the given split of h; jobs > 1 uses worker threads.
// l = 0 means l = 1, r = h - 1. With sweep, every split is computed and must agree.
std::vector<TableRow> compute_table(int h_min, int h_max, int k_min, int k_max, int l, bool sweep, unsigned jobs);

// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twistlab::cli
