#include "hefib/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "hefib/bounds.hpp"

namespace hefib {

std::string to_string(S2Mode m) {
  switch (m) {
    case S2Mode::NonNegative: return "nonnegative";
    case S2Mode::Negative: return "negative";
    case S2Mode::Any: return "any";
  }
  throw std::logic_error("unhandled S2Mode");
}

std::string to_string(SlopeCapKind k) {
  switch (k) {
    case SlopeCapKind::MiyaokaYau9: return "miyaoka-yau";
    case SlopeCapKind::Hyperelliptic: return "hyperelliptic";
    case SlopeCapKind::Custom: return "custom";
  }
  throw std::logic_error("unhandled SlopeCapKind");
}

void SearchSpec::validate() const {
  if (chi <= 0) throw ValidationError("search requires chi > 0");
  if (g_lo < 2) throw ValidationError("g_lo must be at least 2");
  if (g_hi < g_lo) throw ValidationError("empty genus range");
  if (b < 0) throw ValidationError("base genus must be nonnegative");
  if (cap_kind == SlopeCapKind::Custom && custom_cap <= 0)
    throw ValidationError("custom slope cap must be positive");
  if (ksq_lo && ksq_hi && *ksq_lo > *ksq_hi)
    throw ValidationError("empty ksq range");
}

Rat SearchSpec::slope_cap(int g) const {
  switch (cap_kind) {
    case SlopeCapKind::MiyaokaYau9: return 9;
    case SlopeCapKind::Hyperelliptic: return slope_upper(g, b);
    case SlopeCapKind::Custom: return custom_cap;
  }
  throw std::logic_error("unhandled SlopeCapKind");
}

namespace {

struct Slot {
  int j;
  Int chi_c;  // coefficient in the cleared chi equation
  Int se_c;   // coefficient in g * slope_excess; positive on every kept slot
};

struct GContext {
  const SearchSpec* spec = nullptr;
  int g = 0;
  Int t;        // 4(2g+1)chi, integral or the genus has no solutions
  Rat k_lo;     // admissible ksq window, already intersected with ksq_lo/hi
  Rat k_hi;
  Rat neg_cap;  // extra ksq cap once s_2 < 0
  Int se_cap;   // bound on sum of se_c * s_j over the slots
  bool chi_box = false;  // partial chi sums capped at t; sound only when
                         // every admissible s_2 is nonnegative
  std::vector<Slot> slots;
  std::vector<FeasibleCase>* out = nullptr;
};

void emit_candidate(GContext& ctx, const Int& chi_sum,
                    const SingularityIndices& partial) {
  const Int rem = ctx.t - chi_sum;  // equals g * s_2
  if (rem % ctx.g != 0) return;
  const Int s2 = rem / ctx.g;
  switch (ctx.spec->s2_mode) {
    case S2Mode::NonNegative:
      if (s2 < 0) return;
      break;
    case S2Mode::Negative:
      if (s2 >= 0) return;
      break;
    case S2Mode::Any:
      break;
  }

  SingularityIndices cand = partial;
  cand.set(2, s2);

  const Rat n = n_from_indices(cand);
  if (!is_integer(n) || n < 1) return;
  if (ctx.spec->require_n_parity && ctx.g % 2 == 1 && numerator(n) % 2 != 0)
    return;

  const Rat ksq = ksq_from_indices(cand);
  if (!is_integer(ksq)) return;
  if (ksq < ctx.k_lo || ksq > ctx.k_hi) return;
  if (s2 < 0 && ksq > ctx.neg_cap) return;

  if (e_from_indices(cand) < 0) return;

  FeasibleCase fc;
  fc.indices = std::move(cand);
  fc.numerics =
      compute_numerics(fc.indices, ctx.spec->b, ctx.spec->require_n_parity);
  if (fc.numerics.chi != ctx.spec->chi)
    throw std::logic_error("enumerator emitted a case with the wrong chi");
  ctx.out->push_back(std::move(fc));
}

void descend(GContext& ctx, size_t idx, const Int& chi_sum, const Int& se_sum,
             SingularityIndices& si) {
  if (idx == ctx.slots.size()) {
    emit_candidate(ctx, chi_sum, si);
    return;
  }
  const Slot& sl = ctx.slots[idx];
  // v = 0 never trips either cutoff, so the slot is always allowed to stay
  // empty and the recursion reaches every leaf the bounds permit.
  for (Int v = 0;; ++v) {
    const Int se_next = se_sum + sl.se_c * v;
    if (se_next > ctx.se_cap) break;
    const Int chi_next = chi_sum + sl.chi_c * v;
    if (ctx.chi_box && chi_next > ctx.t) break;
    si.set(sl.j, v);
    descend(ctx, idx + 1, chi_next, se_next, si);
  }
  si.set(sl.j, 0);
}

bool index_vector_less(const SingularityIndices& a,
                       const SingularityIndices& b) {
  for (int j = 2; j <= a.g + 2; ++j) {
    const Int& x = a.at(j);
    const Int& y = b.at(j);
    if (x != y) return x < y;
  }
  return false;
}

bool case_less(const FeasibleCase& x, const FeasibleCase& y) {
  if (x.g() != y.g()) return x.g() < y.g();
  if (x.ksq() != y.ksq()) return x.ksq() < y.ksq();
  return index_vector_less(x.indices, y.indices);
}

std::vector<FeasibleCase> enumerate_one_g(const SearchSpec& spec, int g) {
  std::vector<FeasibleCase> out;

  const Rat t_rat = Rat(4 * (2 * g + 1)) * spec.chi;
  if (!is_integer(t_rat)) return out;  // both sides of the chi equation are
                                       // integers, so no vector can match

  Rat k_lo = slope_lower(g) * spec.chi;
  Rat k_hi = spec.slope_cap(g) * spec.chi;
  if (spec.ksq_lo && Rat(*spec.ksq_lo) > k_lo) k_lo = Rat(*spec.ksq_lo);
  if (spec.ksq_hi && Rat(*spec.ksq_hi) < k_hi) k_hi = Rat(*spec.ksq_hi);
  if (k_hi < k_lo) return out;

  // Search box. In Negative mode every candidate also obeys the isolated
  // negative curve cap, so fold it into the box; in Any mode the wider
  // window stays so nonnegative-s_2 candidates are not lost, and the cap is
  // re-checked per candidate.
  Rat k_hi_box = k_hi;
  const Rat neg_cap = minus_curve_ksq_cap(2, spec.chi);
  if (spec.s2_mode == S2Mode::Negative && neg_cap < k_hi_box)
    k_hi_box = neg_cap;
  if (k_hi_box < k_lo) return out;

  GContext ctx;
  ctx.spec = &spec;
  ctx.g = g;
  ctx.t = to_int_checked(t_rat, "cleared chi target");
  ctx.k_lo = k_lo;
  ctx.k_hi = k_hi;
  ctx.neg_cap = neg_cap;
  ctx.se_cap = rat_floor(Rat(g) * k_hi_box - Rat(4 * (g - 1)) * spec.chi);
  if (ctx.se_cap < 0) return out;
  ctx.chi_box = spec.s2_mode == S2Mode::NonNegative;
  ctx.out = &out;

  // High slots first: their larger coefficients trip the cutoffs sooner.
  for (int j = g + 2; j >= 3; --j) {
    if (j == g + 2 && g % 2 == 0) continue;  // forced zero slot
    ctx.slots.push_back(
        {j, chi_equation_coeff(g, j), slope_excess_numer_coeff(g, j)});
  }

  SingularityIndices si;
  si.g = g;
  descend(ctx, 0, Int(0), Int(0), si);

  std::sort(out.begin(), out.end(), case_less);
  return out;
}

size_t worker_count(size_t jobs) {
  size_t workers = 1;
  if (const char* env = std::getenv("HEFIB_WORKERS")) {
    const long w = std::strtol(env, nullptr, 10);
    if (w > 1) workers = static_cast<size_t>(w);
  }
  return std::min(workers, jobs);
}

}  // namespace

std::vector<FeasibleCase> enumerate_cases(const SearchSpec& spec) {
  spec.validate();

  std::vector<int> gs;
  for (int g = spec.g_lo; g <= spec.g_hi; ++g) gs.push_back(g);

  std::vector<std::vector<FeasibleCase>> per_g(gs.size());
  const size_t workers = worker_count(gs.size());
  if (workers <= 1) {
    for (size_t i = 0; i < gs.size(); ++i)
      per_g[i] = enumerate_one_g(spec, gs[i]);
  } else {
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&] {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= gs.size()) return;
        try {
          per_g[i] = enumerate_one_g(spec, gs[i]);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
  }

  std::vector<FeasibleCase> all;
  for (auto& chunk : per_g)
    for (auto& fc : chunk) all.push_back(std::move(fc));
  return all;  // per-genus chunks are sorted and concatenated in genus order
}

std::optional<int> max_genus(const SearchSpec& spec) {
  const auto cases = enumerate_cases(spec);
  std::optional<int> best;
  for (const auto& fc : cases)
    if (!best || fc.g() > *best) best = fc.g();
  return best;
}

const std::map<Int, std::set<int>>& reference_classification() {
  static const std::map<Int, std::set<int>> table = {
      {Int(2), {2}},
      {Int(3), {2}},
      {Int(4), {2, 3, 4}},
      {Int(5), {2, 3, 4}},
      {Int(6), {2, 3, 4, 5, 6, 7, 8}},
      {Int(7), {3, 4, 5, 6}},
      {Int(8), {3, 4, 5, 6, 7, 8, 10, 11, 14}},
      {Int(9), {4, 6, 8, 10}},
  };
  return table;
}

ClassifyResult classify_pg_q_1() {
  SearchSpec spec;
  spec.chi = 1;
  spec.b = 1;
  spec.g_lo = 2;
  spec.g_hi = 60;
  spec.s2_mode = S2Mode::Any;
  spec.cap_kind = SlopeCapKind::MiyaokaYau9;
  spec.require_n_parity = false;

  ClassifyResult r;
  r.cases = enumerate_cases(spec);
  for (const auto& fc : r.cases) r.table[fc.ksq()].insert(fc.g());

  const auto& ref = reference_classification();

  auto witness_for = [&](const Int& ksq, int g) -> std::optional<FeasibleCase> {
    for (const auto& fc : r.cases)
      if (fc.ksq() == ksq && fc.g() == g) return fc;
    return std::nullopt;
  };

  for (const auto& [ksq, genera] : r.table) {
    const auto it = ref.find(ksq);
    for (const int g : genera)
      if (it == ref.end() || !it->second.count(g))
        r.discrepancies.push_back({ksq, g, true, witness_for(ksq, g)});
  }
  for (const auto& [ksq, genera] : ref) {
    const auto it = r.table.find(ksq);
    for (const int g : genera)
      if (it == r.table.end() || !it->second.count(g))
        r.discrepancies.push_back({ksq, g, false, std::nullopt});
  }
  std::sort(r.discrepancies.begin(), r.discrepancies.end(),
            [](const TableDiscrepancy& a, const TableDiscrepancy& b) {
              if (a.ksq != b.ksq) return a.ksq < b.ksq;
              if (a.g != b.g) return a.g < b.g;
              return a.extra < b.extra;
            });
  r.matches_reference = r.discrepancies.empty();

  auto high_rows = [](const std::map<Int, std::set<int>>& t) {
    std::set<std::pair<Int, int>> s;
    for (const auto& [ksq, genera] : t)
      for (const int g : genera)
        if (g >= 11) s.emplace(ksq, g);
    return s;
  };
  r.high_genus_rows_match = high_rows(r.table) == high_rows(ref);

  r.constraint_families = {
      "chi equation solved exactly; s_2 fixed by divisibility",
      "n integral and positive (parity relaxed for this census)",
      "K^2 integral",
      "slope within [4(g-1)/g, 9]",
      "nonnegative Euler number",
      "K^2 <= 9 chi - 9/8 whenever s_2 < 0 (isolated negative curve)",
  };
  return r;
}

}  // namespace hefib
