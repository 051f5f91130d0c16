#pragma once

#include "prat/rationality.hpp"
#include "prat/record.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace prat {

enum class RecordFormat { Csv, Json };

/// A record that parsed but failed validation; it is left out of the result.
struct SkippedRecord {
    int line = 0;  // 1-based line in CSV, 1-based array position in JSON
    std::string label;
    std::string message;
};

struct LoadResult {
    std::vector<PreparedField> fields;
    std::vector<SkippedRecord> skipped;
};

/// Parse errors throw InputError("source:line: ..."); records that parse but
/// fail validation are reported in `skipped`.
LoadResult read_records(std::istream& in, RecordFormat format, const std::string& source = "<input>");
LoadResult load_records(const std::string& path, RecordFormat format);
/// Format from the file extension (.json, otherwise CSV).
RecordFormat format_for_path(const std::string& path);

void write_records_csv(std::ostream& out, const std::vector<FieldRecord>& records);
void write_records_json(std::ostream& out, const std::vector<FieldRecord>& records);

/// Splits one CSV line; fields may be double-quoted with "" as an escaped quote.
std::vector<std::string> split_csv_line(const std::string& line);

// ---------------------------------------------------------------- tables

struct TableCell {
    Integer p;
    VerdictStatus status = VerdictStatus::Undetermined;
    std::vector<Reason> reasons;
    std::string error;  // non-empty when the verdict threw

    bool has(Reason r) const;
    bool is_error() const { return !error.empty(); }
};

struct TableRow {
    std::string label;
    IntPoly poly;
    std::vector<TableCell> cells;  // one per prime, increasing

    std::vector<Integer> primes_with(Reason r) const;
    std::vector<Integer> primes_with(VerdictStatus s) const;
    /// Any cell other than PRational.
    bool exceptional() const;
};

std::vector<TableRow> reproduce_table(const std::vector<PreparedField>& fields, std::uint64_t pmin,
                                      std::uint64_t pmax);

/// Aligned text in the layout of a published exception table; rows with no
/// exceptional cell are counted in a closing summary line.
std::string render_table_text(const std::vector<TableRow>& rows);
/// One line per row, ASCII only; list columns are ';'-separated.
std::string render_table_csv(const std::vector<TableRow>& rows);

// ---------------------------------------------------------------- density

struct DensityResult {
    int count = 0;          // PRational
    int undetermined = 0;
    int not_applicable = 0;
    int errors = 0;
    double ratio_to_log_x = 0.0;
    std::vector<TableCell> per_prime;
};

/// Primes 5 <= p <= xmax.
DensityResult density_scan(const PreparedField& field, std::uint64_t xmax);

// ---------------------------------------------------------------- parallelism

/// Worker count: hardware concurrency, capped by PRAT_THREADS when set.
unsigned worker_count();
/// Runs fn(i) for i in [0, n) on worker_count() threads; results are
/// indexed, so output order never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace prat
