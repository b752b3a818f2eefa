#ifndef STREBEL_IET_HPP
#define STREBEL_IET_HPP

#include <string>
#include <vector>

#include "strebel/numeric.hpp"

namespace strebel {

struct iet_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interval exchange on [0, sum lengths). Interval i (in source order) maps to
// the slot permutation[i] of the image order; flips[i] marks pieces whose
// return reverses orientation (half-turn returns).
struct IET {
  std::vector<Scalar> lengths;
  std::vector<int> permutation;
  std::vector<bool> flips;

  int size() const { return static_cast<int>(lengths.size()); }
  Scalar total() const;
  bool has_flips() const;
  void check() const;  // sizes, bijection, positive lengths

  // Image of a point under the exchange (flip-free only).
  Scalar apply(const Scalar& x) const;

  // Normalized invariant-measure masses of the intervals (Lebesgue).
  std::vector<Scalar> normalized_lengths() const;
};

enum class UEStatus { Certified, Asserted, Unknown };
const char* ue_status_name(UEStatus s);

struct UECertificate {
  UEStatus status = UEStatus::Unknown;
  std::string note;             // Keane violation, flips, budget, ...
  std::string rauzy_path;       // '0' = top move, '1' = bottom move
  int period_start = -1;
  int period_length = 0;
  std::vector<std::vector<mpz_class>> expansion_matrix;  // over one period
  std::vector<Scalar> pf_measure;                        // normalized, exact
};

// Rauzy-Veech induction with exact projective periodicity detection.
UECertificate rauzy_induct(const IET& iet, int max_steps = 10000);

enum class IETVerdict { Equivalent, Distinct, Undecided };
const char* iet_verdict_name(IETVerdict v);

IETVerdict iet_topologically_equal(const IET& a, const IET& b, int max_steps = 10000);

// Sup over a deterministic start grid of |(1/n) sum_k chi_cell(T^k x) - mu(cell)|.
struct BirkhoffRow {
  long n;
  std::vector<double> max_deviation;  // per cell
  double sup;                         // max over cells
};

// cells: the partition of [0, total) given by consecutive widths.
std::vector<BirkhoffRow> birkhoff_deviation(const IET& iet, const std::vector<Scalar>& measure,
                                            const std::vector<Scalar>& cell_widths,
                                            const std::vector<long>& n_list, int grid_points = 257);

}  // namespace strebel

#endif
