#include "qcount/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcount/csv.hpp"
#include "qcount/errors.hpp"
#include "qcount/tolerances.hpp"

namespace qcount {

namespace {

constexpr double kPi = std::numbers::pi;
const double kEightOverPiSq = 8.0 / (kPi * kPi);

}  // namespace

WalkSpace::WalkSpace(ColoredGraph graph) : graph_(std::move(graph)) {
  if (!is_properly_colored(graph_))
    throw InvariantError("WalkSpace: graph is not properly edge-colored");
  const std::size_t n = graph_.graph.vertex_count();
  neighbor_.assign(n, std::vector<std::size_t>(graph_.degree, n));
  for (const auto& [edge, color] : graph_.color) {
    neighbor_[edge.first][color] = edge.second;
    neighbor_[edge.second][color] = edge.first;
  }
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t c = 0; c < graph_.degree; ++c)
      if (neighbor_[v][c] >= n)
        throw InvariantError("WalkSpace: missing color at a vertex despite proper coloring");
}

HilbertDims WalkSpace::dims() const {
  return HilbertDims::single(position_dim()).tensor(HilbertDims::single(coin_dim()));
}

std::size_t WalkSpace::neighbor(std::size_t v, std::size_t c) const {
  if (v >= position_dim() || c >= coin_dim())
    throw DomainError("WalkSpace::neighbor: index out of range");
  return neighbor_[v][c];
}

std::size_t WalkSpace::edge_color(std::size_t v, std::size_t u) const {
  const Edge e = v < u ? Edge{v, u} : Edge{u, v};
  const auto it = graph_.color.find(e);
  if (it == graph_.color.end()) throw DomainError("WalkSpace::edge_color: no such edge");
  return it->second;
}

BipartiteMarking::BipartiteMarking(std::size_t n1, std::size_t n2,
                                   std::vector<std::size_t> marked1,
                                   std::vector<std::size_t> marked2)
    : n1_(n1), n2_(n2), marked1_(std::move(marked1)), marked2_(std::move(marked2)) {
  if (n1_ < 1 || n2_ < 1) throw DomainError("BipartiteMarking: empty partition");
  auto prepare = [](std::vector<std::size_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  prepare(marked1_);
  prepare(marked2_);
  for (std::size_t v : marked1_)
    if (v >= n1_) throw DomainError("BipartiteMarking: K1 vertex outside V1");
  for (std::size_t v : marked2_)
    if (v < n1_ || v >= n1_ + n2_) throw DomainError("BipartiteMarking: K2 vertex outside V2");
}

BipartiteMarking BipartiteMarking::first_k(std::size_t n1, std::size_t n2, std::size_t k1,
                                           std::size_t k2) {
  if (k1 > n1 || k2 > n2) throw DomainError("BipartiteMarking: more marks than vertices");
  std::vector<std::size_t> m1(k1), m2(k2);
  for (std::size_t i = 0; i < k1; ++i) m1[i] = i;
  for (std::size_t i = 0; i < k2; ++i) m2[i] = n1 + i;
  return BipartiteMarking(n1, n2, std::move(m1), std::move(m2));
}

bool BipartiteMarking::is_marked(std::size_t vertex) const {
  return std::binary_search(marked1_.begin(), marked1_.end(), vertex) ||
         std::binary_search(marked2_.begin(), marked2_.end(), vertex);
}

WalkAngles WalkAngles::from_marking(const BipartiteMarking& bm) {
  auto angle = [](std::size_t k, std::size_t n) {
    return std::acos(1.0 - 2.0 * static_cast<double>(k) / static_cast<double>(n));
  };
  WalkAngles a;
  a.theta1 = angle(bm.k1(), bm.n1());
  a.theta2 = angle(bm.k2(), bm.n2());
  // consistency of the two defining identities
  auto sin_form = [](std::size_t k, std::size_t n) {
    const double kd = static_cast<double>(k), nd = static_cast<double>(n);
    return 2.0 / nd * std::sqrt(kd * (nd - kd));
  };
  if (std::abs(std::sin(a.theta1) - sin_form(bm.k1(), bm.n1())) > 1e-12 ||
      std::abs(std::sin(a.theta2) - sin_form(bm.k2(), bm.n2())) > 1e-12)
    throw InvariantError("WalkAngles: sine and cosine definitions disagree");
  return a;
}

WalkAngles WalkAngles::from_angles(double theta1, double theta2) {
  if (!(theta1 >= 0.0 && theta1 <= kPi) || !(theta2 >= 0.0 && theta2 <= kPi))
    throw DomainError("WalkAngles: angles must lie in [0, pi]");
  return WalkAngles{theta1, theta2};
}

DenseUnitary flip_flop_shift(const WalkSpace& ws) {
  const std::size_t n = ws.position_dim();
  const std::size_t d = ws.coin_dim();
  std::vector<std::size_t> image(n * d);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t c = 0; c < d; ++c) image[v * d + c] = ws.neighbor(v, c) * d + c;
  return DenseUnitary::permutation(ws.dims(), image);
}

DenseUnitary grover_coin(std::size_t coin_dim) {
  if (coin_dim < 1) throw DomainError("grover_coin: dimension must be >= 1");
  const double off = 2.0 / static_cast<double>(coin_dim);
  std::vector<Complex> entries(coin_dim * coin_dim, Complex{off, 0.0});
  for (std::size_t i = 0; i < coin_dim; ++i)
    entries[i * coin_dim + i] = Complex{off - 1.0, 0.0};
  return DenseUnitary::from_entries_unchecked(HilbertDims::single(coin_dim),
                                              std::move(entries));
}

DenseUnitary walk_operator(const WalkSpace& ws) {
  const DenseUnitary coin_lift =
      tensor(DenseUnitary::identity(HilbertDims::single(ws.position_dim())),
             grover_coin(ws.coin_dim()));
  return multiply(flip_flop_shift(ws), coin_lift).with_dims(ws.dims());
}

DenseUnitary search_operator(const WalkSpace& ws, const BipartiteMarking& bm) {
  if (bm.total_vertices() != ws.position_dim())
    throw DimensionError("search_operator: marking does not match the walk space");
  std::vector<Complex> phases(ws.position_dim(), Complex{1.0, 0.0});
  for (std::size_t v = 0; v < ws.position_dim(); ++v)
    if (bm.is_marked(v)) phases[v] = Complex{-1.0, 0.0};
  const DenseUnitary oracle =
      tensor(DenseUnitary::diagonal(HilbertDims::single(ws.position_dim()), phases),
             DenseUnitary::identity(HilbertDims::single(ws.coin_dim())));
  return multiply(walk_operator(ws), oracle).with_dims(ws.dims());
}

std::array<StateVector, 8> reduced_basis(const WalkSpace& ws, const BipartiteMarking& bm) {
  if (bm.total_vertices() != ws.position_dim())
    throw DimensionError("reduced_basis: marking does not match the walk space");
  if (bm.k1() == 0 || bm.k1() == bm.n1() || bm.k2() == 0 || bm.k2() == bm.n2())
    throw DomainError("reduced_basis: a class is empty (k in {0, n})");

  std::vector<std::size_t> k1c, k2c;
  for (std::size_t v = 0; v < bm.n1(); ++v)
    if (!bm.is_marked(v)) k1c.push_back(v);
  for (std::size_t v = bm.n1(); v < bm.total_vertices(); ++v)
    if (!bm.is_marked(v)) k2c.push_back(v);

  const std::size_t d = ws.coin_dim();
  auto superpose = [&](const std::vector<std::size_t>& si, const std::vector<std::size_t>& sj) {
    std::vector<Complex> amps(ws.position_dim() * d, Complex{0.0, 0.0});
    const double amp = 1.0 / std::sqrt(static_cast<double>(si.size() * sj.size()));
    for (std::size_t v : si)
      for (std::size_t u : sj) amps[v * d + ws.edge_color(v, u)] = Complex{amp, 0.0};
    return StateVector(ws.dims(), std::move(amps));
  };

  const std::vector<std::size_t>& k1 = bm.marked1();
  const std::vector<std::size_t>& k2 = bm.marked2();
  return {superpose(k1, k2),  superpose(k1, k2c),  superpose(k1c, k2), superpose(k1c, k2c),
          superpose(k2, k1),  superpose(k2, k1c),  superpose(k2c, k1), superpose(k2c, k1c)};
}

DenseUnitary reduced_block(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  std::vector<Complex> e(16, Complex{0.0, 0.0});
  e[0 * 4 + 0] = c;
  e[0 * 4 + 1] = -s;
  e[1 * 4 + 2] = -c;
  e[1 * 4 + 3] = s;
  e[2 * 4 + 0] = -s;
  e[2 * 4 + 1] = -c;
  e[3 * 4 + 2] = s;
  e[3 * 4 + 3] = c;
  return DenseUnitary::from_entries_unchecked(HilbertDims::single(4), std::move(e));
}

namespace {

std::array<Complex, 8> sigma_vector(int sign, double delta_angle) {
  const Complex ed = std::polar(1.0, delta_angle);
  const Complex i{0.0, 1.0};
  const double s = 1.0 / std::sqrt(8.0);
  const Complex f = static_cast<double>(sign) * ed * s;
  return {f, -i * f, i * f, f, Complex{s, 0.0}, -i * s, i * s, Complex{s, 0.0}};
}

std::array<Complex, 8> delta_vector(int sign, double sigma_angle) {
  const Complex es = std::polar(1.0, sigma_angle);
  const Complex i{0.0, 1.0};
  const double s = 1.0 / std::sqrt(8.0);
  const Complex f = static_cast<double>(sign) * es * s;
  return {f, i * f, i * f, -f, Complex{s, 0.0}, -i * s, -i * s, Complex{-s, 0.0}};
}

std::array<Complex, 8> conjugate(const std::array<Complex, 8>& v) {
  std::array<Complex, 8> out;
  for (std::size_t i = 0; i < 8; ++i) out[i] = std::conj(v[i]);
  return out;
}

}  // namespace

ReducedWalkSystem reduced_operator(const WalkAngles& angles) {
  ReducedWalkSystem sys{angles, DenseUnitary::identity(HilbertDims::single(8)), {}};

  std::vector<Complex> entries(64, Complex{0.0, 0.0});
  const DenseUnitary b1 = reduced_block(angles.theta1);
  const DenseUnitary b2 = reduced_block(angles.theta2);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      entries[r * 8 + (c + 4)] = b1.at(r, c);
      entries[(r + 4) * 8 + c] = b2.at(r, c);
    }
  sys.u_prime = DenseUnitary::from_entries_unchecked(HilbertDims::single(8), std::move(entries));

  const double sg = angles.sigma();
  const double dl = angles.delta();
  const std::array<double, 8> d_red = reduced_edge_coefficients(angles);

  struct Spec {
    const char* label;
    double angle;
    std::array<Complex, 8> vector;
  };
  const std::array<Spec, 8> specs = {{
      {"+Sigma", sg, sigma_vector(+1, dl)},
      {"+(Sigma+pi)", sg + kPi, sigma_vector(-1, dl)},
      {"-Sigma", -sg, conjugate(sigma_vector(+1, dl))},
      {"-(Sigma+pi)", -(sg + kPi), conjugate(sigma_vector(-1, dl))},
      {"+Delta", dl, delta_vector(+1, sg)},
      {"+(Delta+pi)", dl + kPi, delta_vector(-1, sg)},
      {"-Delta", -dl, conjugate(delta_vector(+1, sg))},
      {"-(Delta+pi)", -(dl + kPi), conjugate(delta_vector(-1, sg))},
  }};

  for (std::size_t i = 0; i < 8; ++i) {
    ReducedEigenpair& pair = sys.eigenpairs[i];
    pair.label = specs[i].label;
    pair.angle = specs[i].angle;
    pair.value = std::polar(1.0, specs[i].angle);
    pair.vector = specs[i].vector;
    Complex coeff{0.0, 0.0};
    for (std::size_t j = 0; j < 8; ++j) coeff += std::conj(pair.vector[j]) * d_red[j];
    pair.d_coeff = coeff;
  }
  return sys;
}

ReductionCheck verify_reduction(const WalkSpace& ws, const BipartiteMarking& bm) {
  const std::array<StateVector, 8> basis = reduced_basis(ws, bm);
  const DenseUnitary u = search_operator(ws, bm);
  const ReducedWalkSystem sys = reduced_operator(WalkAngles::from_marking(bm));

  ReductionCheck check{0.0, 0.0};
  for (std::size_t b = 0; b < 8; ++b) {
    const StateVector image = apply(u, basis[b]);
    std::vector<Complex> residual = image.amplitudes();
    for (std::size_t a = 0; a < 8; ++a) {
      const Complex coeff = inner(basis[a], image);
      check.max_abs_deviation =
          std::max(check.max_abs_deviation, std::abs(coeff - sys.u_prime.at(a, b)));
      for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= coeff * basis[a][i];
    }
    double leak_sq = 0.0;
    for (const Complex& r : residual) leak_sq += std::norm(r);
    check.max_leakage = std::max(check.max_leakage, std::sqrt(leak_sq));
  }
  return check;
}

StateVector edge_superposition(const WalkSpace& ws) { return StateVector::uniform(ws.dims()); }

std::array<double, 8> reduced_edge_coefficients(const WalkAngles& angles) {
  const double s1 = std::sin(angles.theta1 / 2.0), c1 = std::cos(angles.theta1 / 2.0);
  const double s2 = std::sin(angles.theta2 / 2.0), c2 = std::cos(angles.theta2 / 2.0);
  const double r = 1.0 / std::sqrt(2.0);
  return {s1 * s2 * r, s1 * c2 * r, c1 * s2 * r, c1 * c2 * r,
          s2 * s1 * r, s2 * c1 * r, c2 * s1 * r, c2 * c1 * r};
}

std::array<AngleProbability, 8> projection_probabilities(const WalkAngles& angles) {
  const double sg = angles.sigma();
  const double dl = angles.delta();
  auto cos_half_sq = [](double a) {
    const double c = std::cos(a / 2.0);
    return c * c;
  };
  auto sin_half_sq = [](double a) {
    const double s = std::sin(a / 2.0);
    return s * s;
  };
  return {{
      {"+Sigma", sg, cos_half_sq(dl) / 4.0},
      {"+(Sigma+pi)", sg + kPi, sin_half_sq(dl) / 4.0},
      {"-Sigma", -sg, cos_half_sq(dl) / 4.0},
      {"-(Sigma+pi)", -(sg + kPi), sin_half_sq(dl) / 4.0},
      {"+Delta", dl, cos_half_sq(sg) / 4.0},
      {"+(Delta+pi)", dl + kPi, sin_half_sq(sg) / 4.0},
      {"-Delta", -dl, cos_half_sq(sg) / 4.0},
      {"-(Delta+pi)", -(dl + kPi), sin_half_sq(sg) / 4.0},
  }};
}

BipartiteErrorBounds bipartite_error_bound(std::size_t total_vertices,
                                           std::size_t total_marked, std::size_t big_p) {
  if (total_marked == 0 || total_marked >= total_vertices)
    throw DomainError("bipartite_error_bound: requires 0 < k < N");
  const double n = static_cast<double>(total_vertices);
  const double k = static_cast<double>(total_marked);
  const double p = static_cast<double>(big_p);
  const double first = 2.0 * kPi * std::sqrt(k * (n - k)) / p;
  return {first + kPi * kPi * n / p, first + kPi * kPi * n / (p * p)};
}

double success_probability_bound(int t) {
  if (t < 1) throw DomainError("success_probability_bound: t must be >= 1");
  return (1.0 - std::pow(2.0, -t)) * kEightOverPiSq;
}

namespace {

// One full run of the counting loop against a prebuilt estimator.
BipartiteCountResult run_bipartite_count(const PhaseEstimator& estimator,
                                         std::size_t total_vertices, int t, Rng& rng,
                                         const OracleProbe& oracle_probe) {
  const std::size_t big_p = estimator.modulus();
  const double n = static_cast<double>(total_vertices);

  BipartiteCountResult result{};
  result.success_bound = success_probability_bound(t);

  int used = 0;
  bool in_zero_pi = true;
  double theta1_prime = 0.0;
  while (used < t && in_zero_pi) {
    const PhaseEstimate estimate = estimator.sample(rng);
    ++used;
    theta1_prime = 2.0 * kPi * estimate.vartheta;
    // Delta-type angles land exactly on omega' in {0, P/2} when k1 = k2.
    in_zero_pi = estimate.raw_outcome == 0 || 2 * estimate.raw_outcome == big_p;
  }
  result.iterations = used;
  result.queries = static_cast<long long>(used) * (static_cast<long long>(big_p) - 1);

  if (in_zero_pi) {
    // Only k = 0 and k = N are consistent with a correct estimate here; one
    // classical query separates them.
    const std::size_t vertex =
        std::min(total_vertices - 1, static_cast<std::size_t>(rng.next_double() * n));
    result.probe_used = true;
    result.queries += 1;
    result.k_est = oracle_probe(vertex) ? n : 0.0;
    result.theta_prime = theta1_prime;
    return result;
  }

  if (theta1_prime > kPi) theta1_prime = 2.0 * kPi - theta1_prime;  // -Sigma estimate
  const double s = std::sin(theta1_prime / 2.0);
  result.theta_prime = theta1_prime;
  result.k_est = s * s * n;
  return result;
}

}  // namespace

BipartiteCountResult bipartite_count(const WalkSpace& ws, const BipartiteMarking& bm, int p,
                                     int t, Rng& rng, const OracleProbe& oracle_probe) {
  if (!bm.restricted_scope())
    throw DomainError("bipartite_count: requires k1 = k2 and n1 = n2");
  if (t < 1) throw DomainError("bipartite_count: needs at least one iteration");

  const PhaseEstimator estimator(search_operator(ws, bm), edge_superposition(ws), p);
  return run_bipartite_count(estimator, bm.total_vertices(), t, rng, oracle_probe);
}

BipartiteCountResult bipartite_count(const WalkSpace& ws, const BipartiteMarking& bm, int p,
                                     int t, Rng& rng) {
  return bipartite_count(ws, bm, p, t, rng,
                         [&bm](std::size_t vertex) { return bm.is_marked(vertex); });
}

std::string WalkCountReport::to_csv() const {
  CsvWriter csv;
  csv.header({"trial", "iterations", "probe_used", "theta1_prime", "k_est", "queries", "bound",
              "pass"});
  for (const WalkCountTrial& t : trials) {
    csv.begin_row();
    csv.field(t.trial);
    csv.field(t.iterations);
    csv.field(t.probe_used);
    csv.field(t.theta_prime);
    csv.field(t.k_est);
    csv.field(static_cast<std::int64_t>(t.queries));
    csv.field(t.bound);
    csv.field(t.pass);
    csv.end_row();
  }
  return csv.str();
}

WalkCountReport monte_carlo_count(const WalkSpace& ws, const BipartiteMarking& bm, int p, int t,
                                  std::size_t trials, std::uint64_t seed) {
  if (!bm.restricted_scope())
    throw DomainError("monte_carlo_count: requires k1 = k2 and n1 = n2");

  WalkCountReport report;
  report.n1 = bm.n1();
  report.k1 = bm.k1();
  report.precision_bits = p;
  report.max_iterations = t;
  report.seed = seed;

  const std::size_t k = bm.total_marked();
  const std::size_t n = bm.total_vertices();
  const bool exact_case = k == 0 || k == n;
  const std::size_t big_p = std::size_t{1} << p;
  report.bound = exact_case ? 0.0 : bipartite_error_bound(n, k, big_p).loose;

  // One distribution serves every trial; each sample is a full run.
  const DenseUnitary u = search_operator(ws, bm);
  const StateVector d_state = edge_superposition(ws);
  const PhaseEstimator estimator(u, d_state, p);

  const OracleProbe probe = [&bm](std::size_t vertex) { return bm.is_marked(vertex); };
  const Rng base(seed);
  std::size_t successes = 0;
  double sum_k = 0.0, sum_k_sq = 0.0;
  report.trials.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng = base.substream(i);
    const BipartiteCountResult r = run_bipartite_count(estimator, n, t, rng, probe);
    const double err = std::abs(r.k_est - static_cast<double>(k));
    const bool pass = exact_case ? err == 0.0 : err <= report.bound;
    successes += pass ? 1 : 0;
    sum_k += r.k_est;
    sum_k_sq += r.k_est * r.k_est;
    report.total_queries += r.queries;
    report.trials.push_back(
        {i, r.iterations, r.probe_used, r.theta_prime, r.k_est, r.queries, report.bound, pass});
  }

  if (trials > 0) {
    const double nt = static_cast<double>(trials);
    report.success_frequency = static_cast<double>(successes) / nt;
    report.mean_k = sum_k / nt;
    const double var = std::max(0.0, sum_k_sq / nt - report.mean_k * report.mean_k);
    report.stddev_k = std::sqrt(var);
    const double q = exact_case ? 1.0 : success_probability_bound(t);
    const double sigma = std::sqrt(q * (1.0 - q) / nt);
    report.threshold = q - 3.0 * sigma;
    report.pass = report.success_frequency >= report.threshold;
  }
  return report;
}

}  // namespace qcount
