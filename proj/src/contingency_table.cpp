#include "ordanova/contingency_table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "ordanova/errors.hpp"

namespace ordanova {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

}  // namespace

ContingencyTable ContingencyTable::from_counts(std::vector<std::string> labels,
                                               std::vector<std::int64_t> counts,
                                               std::size_t categories) {
  if (categories < 2)
    throw InputError("need at least 2 category columns, got " + std::to_string(categories));
  if (labels.size() < 2)
    throw InputError("need at least 2 laboratory rows, got " + std::to_string(labels.size()));
  if (counts.size() != labels.size() * categories)
    throw InputError("count matrix size does not match labs x categories");

  std::set<std::string> seen;
  for (const auto& label : labels)
    if (!seen.insert(label).second)
      throw InputError("duplicate lab label '" + label + "'");

  std::int64_t replicates = -1;
  for (std::size_t m = 0; m < labels.size(); ++m) {
    std::int64_t row_sum = 0;
    for (std::size_t k = 0; k < categories; ++k) {
      const std::int64_t c = counts[m * categories + k];
      if (c < 0)
        throw InputError("row '" + labels[m] + "': count for category " +
                         std::to_string(k + 1) + " is negative (" + std::to_string(c) + ")");
      row_sum += c;
    }
    if (m == 0) {
      replicates = row_sum;
    } else if (row_sum != replicates) {
      throw InputError("unequal row sums: row '" + labels[m] + "' sums to " +
                       std::to_string(row_sum) + ", expected " + std::to_string(replicates) +
                       " (from row '" + labels[0] + "')");
    }
  }
  if (replicates < 1)
    throw InputError("row '" + labels[0] +
                     "' sums to 0; every lab needs at least one measurement");

  ContingencyTable t;
  t.labels_ = std::move(labels);
  t.counts_ = std::move(counts);
  t.categories_ = categories;
  t.replicates_ = replicates;
  return t;
}

ContingencyTable ContingencyTable::from_counts(
    std::vector<std::string> labels, const std::vector<std::vector<std::int64_t>>& rows,
    std::size_t categories) {
  std::vector<std::int64_t> flat;
  flat.reserve(rows.size() * categories);
  for (const auto& row : rows) {
    if (row.size() != categories)
      throw InputError("count matrix size does not match labs x categories");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_counts(std::move(labels), std::move(flat), categories);
}

const std::string& ContingencyTable::label(std::size_t lab) const {
  if (lab >= labels_.size())
    throw InputError("lab index " + std::to_string(lab) + " out of range (M=" +
                     std::to_string(labels_.size()) + ")");
  return labels_[lab];
}

std::int64_t ContingencyTable::count(std::size_t lab, std::size_t category) const {
  if (lab >= labels_.size() || category >= categories_)
    throw InputError("table index (" + std::to_string(lab) + ", " +
                     std::to_string(category) + ") out of range");
  return counts_[lab * categories_ + category];
}

std::vector<std::int64_t> ContingencyTable::column_totals() const {
  std::vector<std::int64_t> totals(categories_, 0);
  for (std::size_t m = 0; m < labels_.size(); ++m)
    for (std::size_t k = 0; k < categories_; ++k)
      totals[k] += counts_[m * categories_ + k];
  return totals;
}

ContingencyTable parse_table(const std::string& csv_text) {
  std::vector<std::string> labels;
  std::vector<std::int64_t> counts;
  std::size_t categories = 0;
  bool have_header = false;

  std::istringstream in(csv_text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;

    const auto fields = split_fields(stripped);
    if (!have_header) {
      if (fields.size() < 3)
        throw InputError("header (line " + std::to_string(line_no) + "): need at least 2 " +
                         "category columns after the lab column, got " +
                         std::to_string(fields.size() - 1));
      categories = fields.size() - 1;
      have_header = true;
      continue;
    }

    if (fields.size() != categories + 1)
      throw InputError("row '" + std::string(fields[0]) + "' (line " + std::to_string(line_no) +
                       "): expected " + std::to_string(categories + 1) + " fields, got " +
                       std::to_string(fields.size()));
    labels.emplace_back(fields[0]);
    for (std::size_t k = 1; k <= categories; ++k) {
      const std::string_view f = fields[k];
      std::int64_t value = 0;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
      if (ec != std::errc() || ptr != f.data() + f.size())
        throw InputError("row '" + std::string(fields[0]) + "' (line " + std::to_string(line_no) +
                         "): count in column " + std::to_string(k + 1) + " is not an integer: '" +
                         std::string(f) + "'");
      counts.push_back(value);
    }
  }

  if (!have_header) throw InputError("empty input: no header line found");
  if (labels.empty()) throw InputError("no laboratory rows after the header");
  return ContingencyTable::from_counts(std::move(labels), std::move(counts), categories);
}

std::string serialize_table(const ContingencyTable& table) {
  std::ostringstream out;
  out << "lab";
  for (std::size_t k = 0; k < table.categories(); ++k) out << ",cat" << (k + 1);
  out << '\n';
  for (std::size_t m = 0; m < table.labs(); ++m) {
    out << table.label(m);
    for (std::size_t k = 0; k < table.categories(); ++k) out << ',' << table.count(m, k);
    out << '\n';
  }
  return out.str();
}

ProbabilityVector ProbabilityVector::from_probabilities(std::vector<double> probs,
                                                        double sum_tolerance) {
  if (probs.size() < 2)
    throw InputError("probability vector needs at least 2 categories, got " +
                     std::to_string(probs.size()));
  double sum = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (!(probs[k] >= 0.0))
      throw InputError("probability for category " + std::to_string(k + 1) +
                       " is negative or not a number");
    sum += probs[k];
  }
  if (!(std::abs(sum - 1.0) <= sum_tolerance)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "probabilities sum to " << sum << ", not 1 (tolerance " << sum_tolerance << ")";
    throw InputError(msg.str());
  }
  for (auto& p : probs) p /= sum;

  ProbabilityVector pv;
  pv.p = std::move(probs);
  pv.F.resize(pv.p.size());
  double cum = 0.0;
  for (std::size_t k = 0; k < pv.p.size(); ++k) {
    cum += pv.p[k];
    pv.F[k] = cum;
  }
  return pv;
}

ProbabilityVector pooled_probabilities(const ContingencyTable& table) {
  const auto totals = table.column_totals();
  const double grand = static_cast<double>(table.replicates()) * static_cast<double>(table.labs());
  std::vector<double> p(totals.size());
  for (std::size_t k = 0; k < totals.size(); ++k)
    p[k] = static_cast<double>(totals[k]) / grand;
  return ProbabilityVector::from_probabilities(std::move(p));
}

std::vector<double> lab_cumulative(const ContingencyTable& table) {
  const double n = static_cast<double>(table.replicates());
  std::vector<double> F(table.labs() * table.categories());
  for (std::size_t m = 0; m < table.labs(); ++m) {
    std::int64_t cum = 0;
    for (std::size_t k = 0; k < table.categories(); ++k) {
      cum += table.count(m, k);
      F[m * table.categories() + k] = static_cast<double>(cum) / n;
    }
  }
  return F;
}

}  // namespace ordanova
