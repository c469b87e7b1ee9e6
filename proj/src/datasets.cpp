#include "ordanova/datasets.hpp"

namespace ordanova::datasets {

// Five-level pathological findings (-, +-, +, ++, +++) from a collaborative
// intratracheal administration study; five labs, five rats each.
const char* illustrative_csv() {
  return "lab,minus,plusminus,plus,plusplus,plusplusplus\n"
         "A,0,0,0,5,0\n"
         "B,0,0,1,4,0\n"
         "C,0,3,2,0,0\n"
         "D,0,0,5,0,0\n"
         "E,0,2,2,1,0\n";
}

// The same finding with the lab distributions systematically shifted; used
// as the publication's example of a visible laboratory effect.
const char* rearranged_csv() {
  return "lab,minus,plusminus,plus,plusplus,plusplusplus\n"
         "A,0,0,1,4,0\n"
         "B,3,0,1,1,0\n"
         "C,3,2,0,0,0\n"
         "D,1,0,4,0,0\n"
         "E,3,1,1,0,0\n";
}

ContingencyTable illustrative_table() { return parse_table(illustrative_csv()); }
ContingencyTable rearranged_table() { return parse_table(rearranged_csv()); }

const ProbabilityVector& case_a() {
  static const ProbabilityVector p =
      ProbabilityVector::from_probabilities({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, 1e-9);
  return p;
}

const ProbabilityVector& case_b() {
  static const ProbabilityVector p =
      ProbabilityVector::from_probabilities({3.0 / 6.0, 1.0 / 6.0, 2.0 / 6.0}, 1e-9);
  return p;
}

const std::vector<IpReferenceRow>& ip_reference_case_a() {
  static const std::vector<IpReferenceRow> rows = {
      {5, 5, 1.97, 0.2},  {5, 10, 2.00, 0.3},  {5, 20, 2.07, 0.4},
      {10, 5, 1.60, 0.0}, {10, 10, 1.65, 0.0}, {10, 20, 1.68, 0.0},
      {20, 5, 1.41, 0.0}, {20, 10, 1.43, 0.0}, {20, 20, 1.46, 0.0},
  };
  return rows;
}

const std::vector<IpReferenceRow>& ip_reference_case_b() {
  static const std::vector<IpReferenceRow> rows = {
      {5, 5, 2.07, 0.3},  {5, 10, 2.13, 0.9},  {5, 20, 2.15, 0.8},
      {10, 5, 1.68, 0.0}, {10, 10, 1.71, 0.0}, {10, 20, 1.74, 0.1},
      {20, 5, 1.44, 0.0}, {20, 10, 1.46, 0.0}, {20, 20, 1.50, 0.0},
  };
  return rows;
}

const std::vector<InReferenceRow>& in_reference_case_a() {
  static const std::vector<InReferenceRow> rows = {
      {5, 5, 1.45, 1.43, false},  {5, 10, 1.25, 1.27, false},  {5, 20, 1.06, 1.06, true},
      {10, 5, 1.25, 1.27, false}, {10, 10, 1.15, 1.16, false}, {10, 20, 1.01, 1.01, true},
      {20, 5, 1.15, 1.16, false}, {20, 10, 1.07, 1.08, false}, {20, 20, 0.97, 0.97, true},
  };
  return rows;
}

const std::vector<InReferenceRow>& in_reference_case_b() {
  static const std::vector<InReferenceRow> rows = {
      {5, 5, 1.49, 1.54, false},  {5, 10, 1.33, 1.36, false},  {5, 20, 1.13, 1.13, true},
      {10, 5, 1.33, 1.36, false}, {10, 10, 1.25, 1.24, false}, {10, 20, 1.08, 1.08, true},
      {20, 5, 1.25, 1.24, false}, {20, 10, 1.15, 1.15, false}, {20, 20, 1.04, 1.04, true},
  };
  return rows;
}

}  // namespace ordanova::datasets
