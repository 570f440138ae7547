#include "zonocalc/submodular.hpp"

#include <algorithm>

#include "zonocalc/json_io.hpp"

namespace zonocalc {

namespace {
constexpr int kMaxGround = 16;
constexpr int kMaxCompressionSteps = 10000;
}  // namespace

SetFunction::SetFunction(int ground_size, std::vector<Scalar> table)
    : m_(ground_size), table_(std::move(table)) {
  if (m_ < 1 || m_ > kMaxGround) throw CapError("set function ground size out of range");
  if (table_.size() != (1u << m_)) throw DimensionError("set function table must have 2^m entries");
  for (const Scalar& v : table_)
    if (v.mode() != table_[0].mode()) throw ModeError("set function with mixed-mode table");
}

namespace {

SubmodularityReport best_report(const SetFunction& f) {
  SubmodularityReport r;
  r.worst_margin = Scalar::one(f.mode());
  return r;
}

void consider(SubmodularityReport* r, bool* first, const Scalar& margin, std::uint32_t s,
              std::uint32_t t) {
  if (*first || margin < r->worst_margin) {
    r->worst_margin = margin;
    r->worst_s = s;
    r->worst_t = t;
    *first = false;
  }
}

}  // namespace

SubmodularityReport is_submodular(const SetFunction& f) {
  const int m = f.ground_size();
  SubmodularityReport r = best_report(f);
  bool first = true;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    for (int i = 0; i < m; ++i) {
      if (s & (1u << i)) continue;
      for (int j = i + 1; j < m; ++j) {
        if (s & (1u << j)) continue;
        std::uint32_t si = s | (1u << i), sj = s | (1u << j);
        Scalar margin = f.value(si) + f.value(sj) - f.value(si | sj) - f.value(s);
        consider(&r, &first, margin, si, sj);
      }
    }
  }
  if (first) r.worst_margin = Scalar::zero(f.mode());
  r.submodular = r.worst_margin.sgn() >= 0;
  return r;
}

SubmodularityReport is_submodular_pairwise(const SetFunction& f) {
  const int m = f.ground_size();
  SubmodularityReport r = best_report(f);
  bool first = true;
  for (std::uint32_t s = 0; s < (1u << m); ++s)
    for (std::uint32_t t = s + 1; t < (1u << m); ++t) {
      Scalar margin = f.value(s) + f.value(t) - f.value(s | t) - f.value(s & t);
      consider(&r, &first, margin, s, t);
    }
  if (first) r.worst_margin = Scalar::zero(f.mode());
  r.submodular = r.worst_margin.sgn() >= 0;
  return r;
}

MultiHypergraph::MultiHypergraph(int ground_size, std::vector<std::uint32_t> sets)
    : m_(ground_size), sets_(std::move(sets)) {
  if (m_ < 1 || m_ > kMaxGround) throw CapError("hypergraph ground size out of range");
  for (std::uint32_t s : sets_) {
    if (s == 0) throw DegenerateError("hypergraph members must be non-empty");
    if (s >= (1u << m_)) throw DimensionError("hypergraph member outside ground set");
  }
}

std::vector<std::uint32_t> MultiHypergraph::canonical() const {
  std::vector<std::uint32_t> c = sets_;
  std::sort(c.begin(), c.end());
  return c;
}

MultiHypergraph elementary_compression(const MultiHypergraph& h, int i, int j) {
  const auto& sets = h.sets();
  if (i < 0 || j < 0 || i == j || i >= static_cast<int>(sets.size()) ||
      j >= static_cast<int>(sets.size()))
    throw Error("elementary_compression: bad indices");
  std::uint32_t a = sets[static_cast<size_t>(i)], b = sets[static_cast<size_t>(j)];
  if ((a & b) == a || (a & b) == b)
    throw DegenerateError("elementary_compression: nested pair");
  std::vector<std::uint32_t> out;
  for (int k = 0; k < static_cast<int>(sets.size()); ++k)
    if (k != i && k != j) out.push_back(sets[static_cast<size_t>(k)]);
  if ((a & b) != 0) out.push_back(a & b);
  out.push_back(a | b);
  return MultiHypergraph(h.ground_size(), std::move(out));
}

MultiHypergraph minimal_hypergraph(const MultiHypergraph& h) {
  const int m = h.ground_size();
  std::vector<int> count(static_cast<size_t>(m), 0);
  for (std::uint32_t s : h.sets())
    for (int i = 0; i < m; ++i)
      if (s & (1u << i)) ++count[static_cast<size_t>(i)];
  int max_count = 0;
  for (int c : count) max_count = std::max(max_count, c);
  std::vector<std::uint32_t> out;
  for (int j = 1; j <= max_count; ++j) {
    std::uint32_t s = 0;
    for (int i = 0; i < m; ++i)
      if (count[static_cast<size_t>(i)] >= j) s |= (1u << i);
    if (s != 0) out.push_back(s);
  }
  return MultiHypergraph(m, std::move(out));
}

Scalar hypergraph_sum(const SetFunction& f, const MultiHypergraph& h) {
  Scalar total = Scalar::zero(f.mode());
  for (std::uint32_t s : h.sets()) total += f.value(s);
  return total;
}

CheckResult compression_sum_check(const SetFunction& f, const MultiHypergraph& h,
                                  const std::vector<std::pair<int, int>>& steps) {
  if (static_cast<int>(steps.size()) > kMaxCompressionSteps)
    throw CapError("compression step cap exceeded");
  if (f.ground_size() != h.ground_size())
    throw DimensionError("compression_sum_check: ground size mismatch");

  nlohmann::json jtable = nlohmann::json::array();
  for (std::uint32_t s = 0; s < (1u << f.ground_size()); ++s)
    jtable.push_back(scalar_to_json(f.value(s)));
  nlohmann::json jsteps = nlohmann::json::array();
  for (const auto& [i, j] : steps) jsteps.push_back(nlohmann::json::array({i, j}));
  nlohmann::json w{{"instance", {{"m", f.ground_size()},
                                 {"table", std::move(jtable)},
                                 {"sets", h.sets()},
                                 {"steps", std::move(jsteps)}}}};
  MultiHypergraph cur = h;
  Scalar prev_sum = hypergraph_sum(f, cur);
  Scalar first_sum = prev_sum;
  bool have_margin = false;
  Scalar worst_before = prev_sum, worst_after = prev_sum;
  for (const auto& [i, j] : steps) {
    cur = elementary_compression(cur, i, j);
    Scalar s = hypergraph_sum(f, cur);
    if (!have_margin || s - prev_sum > worst_after - worst_before) {
      // track the step with the smallest decrease (largest after-before)
      worst_before = prev_sum;
      worst_after = s;
      have_margin = true;
    }
    prev_sum = s;
  }
  if (!have_margin) {
    worst_before = first_sum;
    worst_after = first_sum;
  }
  double tol = f.mode() == Mode::Exact
                   ? 0.0
                   : relative_tolerance(1e-9, worst_before.to_double(), worst_after.to_double());
  // margin = worst per-step (sum before - sum after) >= 0 iff ordering holds.
  CheckResult r = make_check_result("submod.compression", worst_after, worst_before, tol, std::move(w));
  r.witness["details"] = {{"initial_sum", first_sum.str()}, {"final_sum", prev_sum.str()}};
  return r;
}

}  // namespace zonocalc
