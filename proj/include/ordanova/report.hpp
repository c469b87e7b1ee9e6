#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "ordanova/contingency_table.hpp"
#include "ordanova/decide.hpp"
#include "ordanova/montecarlo.hpp"
#include "ordanova/statistics.hpp"

namespace ordanova {

struct AnalyzeOptions {
  double alpha = 0.05;
  DofConvention dof = DofConvention::anova;
  std::size_t mc_draws = 0;  // 0 disables bootstrap p-values
  std::uint64_t seed = 1;
  EngineOptions engine;
  // Set for the embedded worked examples: the I_N value the original
  // publication prints, shown side by side with the computed one.
  std::optional<double> published_in;
};

// Full analysis of one table: decomposition, both statistics (I_P under both
// dof conventions), the normal approximation with its critical value, the
// three test procedures, and optional bootstrap p-values.  Deterministic:
// equal inputs (including seed) give byte-identical renderings.
struct Report {
  nlohmann::ordered_json json;  // stable field order

  std::string to_json_text() const;  // pretty-printed, trailing newline
  std::string to_text() const;       // human-readable rendering of the same content
};

Report analyze_table(const ContingencyTable& table, const AnalyzeOptions& options);

}  // namespace ordanova
