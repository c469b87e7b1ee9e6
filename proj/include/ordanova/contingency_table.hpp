#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ordanova {

// An M x K table of ordinal category counts from an interlaboratory study:
// one row per laboratory, one column per category, every row summing to the
// same number of repeated measurements n.  Column order is the ordinal order
// of the categories.  All indices in this library are 0-based.
class ContingencyTable {
 public:
  // Validates and takes ownership; `counts` is row-major M x K.
  // Throws InputError on any violation (labels/counts size mismatch,
  // fewer than 2 labs or categories, negative counts, unequal row sums,
  // duplicate labels, zero measurements per lab).
  static ContingencyTable from_counts(std::vector<std::string> labels,
                                      std::vector<std::int64_t> counts,
                                      std::size_t categories);

  // Convenience overload with one vector per lab row.
  static ContingencyTable from_counts(std::vector<std::string> labels,
                                      const std::vector<std::vector<std::int64_t>>& rows,
                                      std::size_t categories);

  std::size_t labs() const { return labels_.size(); }
  std::size_t categories() const { return categories_; }
  std::int64_t replicates() const { return replicates_; }

  const std::string& label(std::size_t lab) const;
  std::int64_t count(std::size_t lab, std::size_t category) const;
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }

  // Column totals over all labs (length K).
  std::vector<std::int64_t> column_totals() const;

  friend bool operator==(const ContingencyTable&, const ContingencyTable&) = default;

 private:
  ContingencyTable() = default;

  std::vector<std::string> labels_;
  std::vector<std::int64_t> counts_;  // row-major, labs x categories
  std::size_t categories_ = 0;
  std::int64_t replicates_ = 0;
};

// Parses CSV text with a header row `lab,cat1,...,catK` and one row per
// laboratory.  Lines starting with '#' and blank lines are skipped.
// Category order in the file is the ordinal order.  Error messages name the
// offending row and column.
ContingencyTable parse_table(const std::string& csv_text);

// Inverse of parse_table up to generic category header names:
// parse_table(serialize_table(t)) == t for every valid table.
std::string serialize_table(const ContingencyTable& table);

// Category probabilities p with their cumulative sums F.  F.back() == 1.
struct ProbabilityVector {
  std::vector<double> p;
  std::vector<double> F;

  std::size_t categories() const { return p.size(); }

  // Validates (K >= 2, entries >= 0, sum within `sum_tolerance` of 1),
  // rescales so the sum is exactly 1, and fills in F.
  static ProbabilityVector from_probabilities(std::vector<double> probs,
                                              double sum_tolerance = 1e-12);
};

// Pooled category frequencies over all labs: p_k = (column total k)/(nM).
// With equal per-lab n this equals the mean over labs of the per-lab
// frequencies.
ProbabilityVector pooled_probabilities(const ContingencyTable& table);

// Per-lab cumulative frequencies, row-major M x K; row m is the running sum
// of row m's counts divided by n, so each row ends at exactly 1.
std::vector<double> lab_cumulative(const ContingencyTable& table);

}  // namespace ordanova
