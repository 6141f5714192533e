#include <algorithm>
#include <cmath>
#include <sstream>

#include "ugsolve/error.hpp"
#include "ugsolve/genlab.hpp"

namespace ugsolve {

namespace {

constexpr std::uint32_t kExhaustiveMaxEll = 8;
constexpr std::uint64_t kSampledLabelings = 100'000;

double band_center(Label q, std::uint32_t ell) {
  return static_cast<double>(ell) * ell / q;
}

double band_width(double beta, std::uint32_t ell) {
  return beta * std::pow(static_cast<double>(ell), 1.5);
}

/// Smallest beta whose band contains both extremes.
double beta_needed(const GadgetReport& r, Label q, std::uint32_t ell) {
  const double c = band_center(q, ell);
  const double spread = std::max(c - static_cast<double>(r.min_satisfied),
                                 static_cast<double>(r.max_satisfied) - c);
  return std::max(0.0, spread) / std::pow(static_cast<double>(ell), 1.5);
}

/// For a fixed left labeling, accumulates the best and worst right response.
class RightResponse {
 public:
  explicit RightResponse(const BipartiteGadget& g) : g_(g), counts_(g.q, 0) {}

  void evaluate(std::span<const Label> left, std::uint64_t& lo, std::uint64_t& hi) {
    lo = 0;
    hi = 0;
    for (std::uint32_t j = 0; j < g_.ell; ++j) {
      std::fill(counts_.begin(), counts_.end(), 0u);
      for (std::uint32_t i = 0; i < g_.ell; ++i) {
        // x_left - x_right = c  <=>  x_right = x_left - c
        ++counts_[(left[i] + g_.q - g_.offset(i, j)) % g_.q];
      }
      const auto [mn, mx] = std::minmax_element(counts_.begin(), counts_.end());
      lo += *mn;
      hi += *mx;
    }
  }

 private:
  const BipartiteGadget& g_;
  std::vector<std::uint32_t> counts_;
};

}  // namespace

void GadgetSpec::validate() const {
  if (q < 1) throw InvalidArgument("gadget alphabet must be positive");
  if (ell <= q) throw InvalidArgument("gadget side size must exceed q");
  if (ell % q != 0) throw InvalidArgument("gadget side size must be a multiple of q");
  if (!(beta > 0.0)) throw InvalidArgument("gadget band coefficient must be positive");
  if (max_attempts == 0) throw InvalidArgument("gadget needs at least one attempt");
}

std::uint64_t BipartiteGadget::satisfied(std::span<const Label> left,
                                         std::span<const Label> right) const {
  if (left.size() != ell || right.size() != ell) throw InvalidArgument("gadget labeling size");
  std::uint64_t sat = 0;
  for (std::uint32_t i = 0; i < ell; ++i) {
    for (std::uint32_t j = 0; j < ell; ++j) {
      sat += (left[i] + q - right[j]) % q == offset(i, j);
    }
  }
  return sat;
}

BipartiteGadget sample_gadget(Label q, std::uint32_t ell, Rng& rng) {
  BipartiteGadget g;
  g.q = q;
  g.ell = ell;
  g.offsets.resize(std::size_t{ell} * ell);
  for (auto& c : g.offsets) c = static_cast<Label>(rng.below(q));
  return g;
}

GadgetReport measure_gadget(const BipartiteGadget& gadget, double beta, Rng& rng) {
  const Label q = gadget.q;
  const std::uint32_t ell = gadget.ell;
  GadgetReport r;
  r.min_satisfied = UINT64_MAX;
  RightResponse response(gadget);
  std::vector<Label> left(ell, 0);
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  auto record = [&] {
    response.evaluate(left, lo, hi);
    r.min_satisfied = std::min(r.min_satisfied, lo);
    r.max_satisfied = std::max(r.max_satisfied, hi);
  };

  if (ell <= kExhaustiveMaxEll) {
    r.exhaustive = true;
    std::uint64_t right_labelings = 1;
    for (std::uint32_t j = 0; j < ell; ++j) right_labelings *= q;
    // Odometer over all left labelings.
    while (true) {
      record();
      // Summed over right labelings, each right vertex matches exactly one
      // of its q labels per arc.
      r.total_satisfied += std::uint64_t{ell} * ell * (right_labelings / q);
      r.labelings += right_labelings;
      std::uint32_t pos = 0;
      while (pos < ell && ++left[pos] == q) left[pos++] = 0;
      if (pos == ell) break;
    }
  } else {
    for (std::uint64_t s = 0; s < kSampledLabelings; ++s) {
      for (auto& x : left) x = static_cast<Label>(rng.below(q));
      record();
    }
  }

  const double c = band_center(q, ell);
  const double w = band_width(beta, ell);
  r.band_lo = c - w;
  r.band_hi = c + w;
  r.passed = static_cast<double>(r.min_satisfied) >= r.band_lo &&
             static_cast<double>(r.max_satisfied) <= r.band_hi;
  return r;
}

BipartiteGadget bipartite_gadget(const GadgetSpec& spec) {
  spec.validate();
  double closest = INFINITY;
  for (unsigned attempt = 0; attempt < spec.max_attempts; ++attempt) {
    Rng rng(derive_seed(spec.seed, attempt));
    BipartiteGadget g = sample_gadget(spec.q, spec.ell, rng);
    g.report = measure_gadget(g, spec.beta, rng);
    g.report.attempts = attempt + 1;
    if (g.report.passed) return g;
    closest = std::min(closest, beta_needed(g.report, spec.q, spec.ell));
  }
  std::ostringstream msg;
  msg << "no gadget with q=" << spec.q << " ell=" << spec.ell << " inside beta=" << spec.beta
      << " after " << spec.max_attempts << " attempts; closest needed beta=" << closest;
  throw GenerationFailure(msg.str());
}

void BlowupSpec::validate(Label q) const {
  if (k < 1) throw InvalidArgument("blow-up needs k >= 1");
  if (k % q != 0) throw InvalidArgument("blow-up k must be a multiple of q");
}

namespace {

const LinEqInstance& cyclic_base(const DenseInstance& g) {
  const auto* base = std::get_if<LinEqInstance>(&g.base());
  if (base == nullptr) throw InvalidArgument("blow-up needs a cyclic base instance");
  return *base;
}

}  // namespace

LinEqInstance blow_up(const DenseInstance& g, const BlowupSpec& spec) {
  const LinEqInstance& base = cyclic_base(g);
  const Label q = base.q();
  spec.validate(q);
  const std::uint32_t n = g.n();
  const std::uint32_t k = spec.k;

  std::vector<BipartiteGadget> gadgets(num_pairs(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      GadgetSpec gs{q, k, derive_seed(spec.seed, pair_index(n, u, v)), spec.gadget_beta};
      gadgets[pair_index(n, u, v)] = bipartite_gadget(gs);
    }
  }

  return LinEqInstance::from_function(n * k, q, [&](Vertex a, Vertex b) -> Label {
    const Vertex u = a / k;
    const Vertex v = b / k;
    if (u == v) return 0;
    if (g.has_edge(u, v)) return base.offset(u, v);
    return gadgets[pair_index(n, u, v)].offset(a % k, b % k);
  });
}

DenseInstance blow_up_star(const DenseInstance& g, const BlowupSpec& spec) {
  const LinEqInstance& base = cyclic_base(g);
  const Label q = base.q();
  spec.validate(q);
  const std::uint32_t n = g.n();
  const std::uint32_t k = spec.k;
  const std::uint32_t nk = n * k;
  if (nk < 2) throw InvalidArgument("blow-up needs at least two vertices");

  LinEqInstance full = LinEqInstance::from_function(nk, q, [&](Vertex a, Vertex b) -> Label {
    const Vertex u = a / k;
    const Vertex v = b / k;
    if (u == v || !g.has_edge(u, v)) return 0;
    return base.offset(u, v);
  });
  std::vector<std::uint8_t> present;
  present.reserve(num_pairs(nk));
  for (Vertex a = 0; a < nk; ++a) {
    for (Vertex b = a + 1; b < nk; ++b) {
      present.push_back(a / k == b / k || g.has_edge(a / k, b / k) ? 1 : 0);
    }
  }
  // Copies of v see k - 1 cloud neighbours plus k per base neighbour.
  const std::uint32_t min_deg = (k - 1) + k * g.min_degree();
  const double delta = 1.0 - static_cast<double>(min_deg) / (nk - 1);
  return DenseInstance(std::move(full), std::move(present), std::max(0.0, delta));
}

}  // namespace ugsolve
