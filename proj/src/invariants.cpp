#include "hefib/invariants.hpp"

#include <stdexcept>

namespace hefib {

namespace {

// Sum limits shared by the formula family. "n-form" odd sums run one slot
// further than "s_2-form" odd sums when g is odd (they reach j = g+2).
int odd_kmax_nform(int g) { return (g + 1) / 2; }
int odd_kmax_s2form(int g) { return g / 2; }
int even_kmax(int g) { return (g + 1) / 2; }

}  // namespace

Int e_from_indices(const SingularityIndices& si) {
  si.require_valid();
  const int g = si.g;
  Int e = si.at(2) - 2 * si.at(g + 2);
  for (int k = 1; k <= odd_kmax_s2form(g); ++k) e += si.at(2 * k + 1);
  for (int k = 2; k <= even_kmax(g); ++k) e += 2 * si.at(2 * k);
  return e;
}

Rat n_from_indices(const SingularityIndices& si) {
  si.require_valid();
  const int g = si.g;
  Int acc = e_from_indices(si);
  acc += Int(g + 1) * (2 * g + 4) * si.at(g + 2);
  for (int k = 1; k <= odd_kmax_s2form(g); ++k) {
    acc += Int(8 * k * k + 4 * k - 1) * si.at(2 * k + 1);
  }
  for (int k = 2; k <= even_kmax(g); ++k) {
    acc += Int(4 * k * k - 2 * k - 2) * si.at(2 * k);
  }
  return Rat(acc, Int(2) * (2 * g + 1));
}

bool validate_n(int g, const Rat& n) {
  if (!is_integer(n) || n < 1) return false;
  if (g % 2 == 1 && numerator(n) % 2 != 0) return false;
  return true;
}

Rat chi_via_n(const SingularityIndices& si, const Rat& n) {
  si.require_valid();
  const int g = si.g;
  Rat chi = Rat(g) * n / 2;
  for (int k = 1; k <= odd_kmax_nform(g); ++k) {
    chi -= Rat(Int(k) * k * si.at(2 * k + 1));
  }
  for (int k = 2; k <= even_kmax(g); ++k) {
    chi -= Rat(Int(k) * (k - 1) * si.at(2 * k), 2);
  }
  return chi;
}

Rat chi_from_indices(const SingularityIndices& si) {
  si.require_valid();
  const int g = si.g;
  // Cleared form: 4(2g+1) chi = g s_2 + sum coeff(j) s_j.
  Int num = Int(g) * si.at(2);
  for (int j = 3; j <= g + 2; ++j) {
    Int sj = si.at(j);
    if (sj != 0) num += chi_equation_coeff(g, j) * sj;
  }
  return Rat(num, Int(4) * (2 * g + 1));
}

Rat ksq_via_n(const SingularityIndices& si, const Rat& n) {
  si.require_valid();
  const int g = si.g;
  Rat ksq = Rat(2 * g - 2) * n + Rat(si.at(g + 2));
  for (int k = 1; k <= odd_kmax_nform(g); ++k) {
    Int c = Int(2 * k - 1) * (2 * k - 1);
    ksq -= Rat(c * si.at(2 * k + 1));
  }
  for (int k = 2; k <= even_kmax(g); ++k) {
    ksq -= Rat(Int(2) * (k - 1) * (k - 1) * si.at(2 * k));
  }
  return ksq;
}

Rat ksq_from_indices(const SingularityIndices& si) {
  si.require_valid();
  const int g = si.g;
  Int num = Int(g - 1) * (si.at(2) + Int(3 * g + 1) * si.at(g + 2));
  for (int k = 1; k <= odd_kmax_s2form(g); ++k) {
    num += Int(12 * k * (g - k) - 2 * g - 1) * si.at(2 * k + 1);
  }
  for (int k = 2; k <= even_kmax(g); ++k) {
    num += Int(6 * k * (g - k + 1) - 4 * g - 2) * si.at(2 * k);
  }
  return Rat(num, Int(2 * g + 1));
}

Rat slope_excess(const SingularityIndices& si) {
  si.require_valid();
  const int g = si.g;
  Int num = 0;
  for (int j = 3; j <= g + 2; ++j) {
    Int sj = si.at(j);
    if (sj != 0) num += slope_excess_numer_coeff(g, j) * sj;
  }
  return Rat(num, g);
}

Int chi_equation_coeff(int g, int j) {
  if (j < 3 || j > g + 2) {
    throw std::out_of_range("chi_equation_coeff: index " + std::to_string(j));
  }
  if (j == g + 2) return Int(g) * g - 2 * g - 1;
  if (j % 2 == 1) {
    int k = (j - 1) / 2;  // 1 <= k <= [g/2]
    return Int(4) * k * (g - k);
  }
  int k = j / 2;  // 2 <= k <= [(g+1)/2]
  return Int(2) * k * (g - k + 1);
}

Int slope_excess_numer_coeff(int g, int j) {
  if (j < 3 || j > g + 2) {
    throw std::out_of_range("slope_excess_numer_coeff: index " +
                            std::to_string(j));
  }
  if (j == g + 2) return Int(g) * g - 1;
  if (j % 2 == 1) {
    int k = (j - 1) / 2;
    return Int(4) * k * (g - k) - g;
  }
  int k = j / 2;
  return Int(2) * k * (g - k + 1) - 2 * g;
}

FibrationNumerics compute_numerics(const SingularityIndices& si, int b,
                                   bool require_parity) {
  si.require_valid();
  if (b < 0) throw ValidationError("base genus must be >= 0");

  const Rat n = n_from_indices(si);
  if (!is_integer(n) || n < 1) {
    throw ValidationError("not a geometric index vector: n = " +
                          rat_to_string(n) + " is not a positive integer");
  }
  if (require_parity && !validate_n(si.g, n)) {
    throw ValidationError("not a geometric index vector: g = " +
                          std::to_string(si.g) + " is odd but n = " +
                          rat_to_string(n) + " is odd");
  }

  FibrationNumerics out;
  out.g = si.g;
  out.b = b;
  out.n = n;
  out.chi = chi_from_indices(si);
  out.ksq = ksq_from_indices(si);
  out.e = Rat(e_from_indices(si));

  if (chi_via_n(si, n) != out.chi || ksq_via_n(si, n) != out.ksq ||
      12 * out.chi != out.ksq + out.e) {
    throw std::logic_error("invariant formula cross-check failed");
  }
  if (out.chi > 0) out.lambda = out.ksq / out.chi;
  return out;
}

}  // namespace hefib
