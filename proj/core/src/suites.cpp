#include "qs3/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "qs3/crossed.hpp"
#include "qs3/isomap.hpp"
#include "qs3/ktheory.hpp"
#include "qs3/rewrite.hpp"

namespace qs3 {

Suite suite_from_string(const std::string& s) {
  if (s == "relations") return Suite::Relations;
  if (s == "basis") return Suite::Basis;
  if (s == "identities") return Suite::Identities;
  if (s == "iso") return Suite::Iso;
  if (s == "fiber") return Suite::Fiber;
  if (s == "lemma-gen") return Suite::LemmaGen;
  if (s == "ktheory") return Suite::KTheory;
  if (s == "all") return Suite::All;
  throw std::invalid_argument("unknown suite '" + s + "'");
}

std::string suite_to_string(Suite s) {
  switch (s) {
    case Suite::Relations: return "relations";
    case Suite::Basis: return "basis";
    case Suite::Identities: return "identities";
    case Suite::Iso: return "iso";
    case Suite::Fiber: return "fiber";
    case Suite::LemmaGen: return "lemma-gen";
    case Suite::KTheory: return "ktheory";
    case Suite::All: return "all";
  }
  return "?";
}

static std::string fmt(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%g", v);
  return b;
}

static std::string join(const std::vector<double>& v) {
  std::string out;
  for (double x : v) {
    if (!out.empty()) out += ",";
    out += fmt(x);
  }
  return out;
}

std::string SuiteConfig::echo() const {
  std::ostringstream os;
  os << "suite=" << suite_to_string(suite) << ";p=" << join(p_grid) << ";q=" << join(q_grid)
     << ";theta=" << join(theta_grid) << ";cutoff=" << cutoff.n << "," << cutoff.m << ";K=";
  if (K > 0)
    os << K;
  else
    os << "auto";
  os << ";tol=" << (tol < 0 ? "default" : fmt(tol)) << ";seed=" << seed
     << ";preset=" << (preset.empty() ? "-" : preset);
  return os.str();
}

// ---------------------------------------------------------------------------
// relations

static void run_relations(const SuiteConfig& cfg, VerificationReport& rep) {
  const double tol = cfg.tol >= 0 ? cfg.tol : 1e-10;
  const std::string inputs =
      "cutoff N=" + std::to_string(cfg.cutoff.n) + ",M=" + std::to_string(cfg.cutoff.m);
  const Cutoff single{cfg.cutoff.n, 1};
  for (double p : cfg.p_grid)
    for (double q : cfg.q_grid)
      for (double theta : cfg.theta_grid) {
        const std::string base =
            "relations/p=" + fmt(p) + ",q=" + fmt(q) + ",theta=" + fmt(theta) + "/";
        for (const RepSpec& spec :
             {RepSpec::rho(p, q, theta), RepSpec::rho_prime(p, q, theta)}) {
          for (const auto& [name, v] : relation_residuals(spec, cfg.cutoff))
            rep.add_numeric(base + spec.to_string() + "/" + name, inputs, v, tol);
        }
        // lambda families: worst case over 8 unit-circle values
        for (bool primed : {false, true}) {
          std::map<std::string, double> agg;
          for (int j = 0; j < 8; ++j) {
            cplx lam = std::polar(1.0, kTwoPi * j / 8.0);
            RepSpec spec = primed ? RepSpec::rho_prime_lambda(p, q, theta, lam)
                                  : RepSpec::rho_lambda(p, q, theta, lam);
            for (const auto& [name, v] : relation_residuals(spec, single))
              agg[name] = std::max(agg[name], v);
          }
          std::string rn = primed ? "rho'_lambda" : "rho_lambda";
          for (const auto& [name, v] : agg)
            rep.add_numeric(base + rn + "/" + name, inputs + ", 8 lambdas", v, tol);
        }
      }
}

// ---------------------------------------------------------------------------
// basis

static void rank_check(VerificationReport& rep, const std::string& name,
                       const AlgebraPresentation& pres, const Bounds& bounds,
                       const Cutoff& cutoff) {
  std::vector<Monomial> mons = basis_monomials(pres, bounds);
  int rank = independence_rank(pres, mons, cutoff);
  std::ostringstream inputs;
  inputs << "count=" << mons.size() << ", rank=" << rank << ", cutoff N=" << cutoff.n
         << ",M=" << cutoff.m;
  rep.add_bool(name, inputs.str(), rank == static_cast<int>(mons.size()));
}

static void run_basis(const SuiteConfig& cfg, VerificationReport& rep) {
  // Cutoffs fixed where the faithfulness lemmas are sampled.
  const Cutoff cutoff{12, 8};
  const Bounds bounds{2, 2, 2};
  for (double theta : cfg.theta_grid) {
    rank_check(rep, "basis/sphere00/theta=" + fmt(theta),
               AlgebraPresentation::sphere_00(theta), bounds, cutoff);
    rank_check(rep, "basis/spherepq/p=0.3,q=0.7,theta=" + fmt(theta),
               AlgebraPresentation::sphere_pq(0.3, 0.7, theta), bounds, cutoff);
    rank_check(rep, "basis/hybrid/p=0,q=0.7,theta=" + fmt(theta),
               AlgebraPresentation::sphere_pq(0.0, 0.7, theta), bounds, cutoff);
  }
}

// ---------------------------------------------------------------------------
// identities

static void run_identities(const SuiteConfig& cfg, VerificationReport& rep) {
  for (double theta : cfg.theta_grid) {
    AlgebraPresentation pres = AlgebraPresentation::sphere_00(theta);
    for (const std::string& id : known_identities()) {
      int range = id == "AkBl_zero" ? 4 : 5;
      rep.add_bool("identities/theta=" + fmt(theta) + "/" + id,
                   "range=" + std::to_string(range), check_identity(pres, id, range));
    }
  }
}

// ---------------------------------------------------------------------------
// iso

// Series length for one grid point: an explicit K is used as given; K <= 0
// picks the smallest length whose tail clears the 1e-8 image-relation
// tolerance with margin (max(p,q)^K <= 1e-9), at least the acceptance
// default 40.
static int iso_series_length(double p, double q, int config_K) {
  if (config_K > 0) return config_K;
  int k = 40;
  double m = std::max(p, q);
  if (m > 0.0)
    k = std::max(k, static_cast<int>(std::ceil(std::log(1e-9) / std::log(m))));
  return std::min(k, 200);
}

// The f(b) series moves along the two-sided m axis, so its interior mask
// needs room for the series reach; widen M when the configured cutoff
// cannot hold the mask.
static Cutoff iso_cutoff(const Cutoff& base, double q, int K) {
  int radius = series_mask_radius(q, K);
  int m_needed = (radius + 7) / 2 + 1;
  Cutoff c = base;
  c.m = std::max(c.m, m_needed);
  return c;
}

static void run_iso(const SuiteConfig& cfg, VerificationReport& rep) {
  const double rt_tol = cfg.tol >= 0 ? cfg.tol : 1e-6;
  const double rel_tol = 1e-8;
  for (double p : cfg.p_grid)
    for (double q : cfg.q_grid)
      for (double theta : cfg.theta_grid) {
        const std::string base =
            "iso/p=" + fmt(p) + ",q=" + fmt(q) + ",theta=" + fmt(theta) + "/";
        const int K = iso_series_length(p, q, cfg.K);
        const Cutoff cutoff = iso_cutoff(cfg.cutoff, q, K);
        std::string inputs = "K=" + std::to_string(K) + ", cutoff N=" +
                             std::to_string(cutoff.n) + ",M=" + std::to_string(cutoff.m);
        SeriesCoeffs coeffs = SeriesCoeffs::make(p, q, K);
        double tp = std::abs(coeffs.partial_sum_p() - std::sqrt(1.0 - std::pow(p, K)));
        double tq = std::abs(coeffs.partial_sum_q() - std::sqrt(1.0 - std::pow(q, K)));
        rep.add_numeric(base + "telescoping_p", inputs, tp, 1e-12);
        rep.add_numeric(base + "telescoping_q", inputs, tq, 1e-12);
        try {
          for (const auto& [name, v] : roundtrip_residual(p, q, theta, K, cutoff))
            rep.add_numeric(base + "roundtrip/" + name, inputs, v, rt_tol);
          for (const auto& [name, v] : relation_check_images(p, q, theta, K, cutoff))
            rep.add_numeric(base + "images/" + name, inputs, v, rel_tol);
        } catch (const CutoffError& e) {
          rep.add_bool(base + "certifiable", inputs + ": " + e.what(), false);
        }
      }
}

// ---------------------------------------------------------------------------
// fiber / lemma-gen

static NCElement random_sphere00_element(const AlgebraPresentation& pres,
                                         std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 3), len(0, 6), letter(0, 3);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  NCElement e(pres);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Word w;
    int L = len(rng);
    for (int j = 0; j < L; ++j) {
      int l = letter(rng);
      w.push_back(gen_letter(l / 2, l % 2));
    }
    NCElement nf = normal_form(w, pres);
    nf *= cplx(coeff(rng), coeff(rng));
    e += nf;
  }
  return e;
}

static bool diagram_commutes(double theta) {
  AlgebraPresentation pres = AlgebraPresentation::sphere_00(theta);
  for (int slot : {0, 1})
    for (bool star : {false, true}) {
      NCElement g = NCElement::generator(pres, slot, star);
      FiberPair hp = h_image(g);
      if (!hp.fiber_check()) return false;
      CrossedElement expect_plus = slot == 0 ? CrossedElement::shift(Side::Plus, theta, star)
                                             : CrossedElement::rotation(Side::Plus, theta, star);
      CrossedElement expect_minus = slot == 0
                                        ? CrossedElement::rotation(Side::Minus, theta, star)
                                        : CrossedElement::shift(Side::Minus, theta, star);
      if (!approx_equal(hp.plus, expect_plus)) return false;
      if (!approx_equal(hp.minus, expect_minus)) return false;
      int dx = slot == 0 ? (star ? -1 : 1) : 0;
      int dy = slot == 1 ? (star ? -1 : 1) : 0;
      TorusElement expected = TorusElement::monomial(theta, dx, dy);
      if (!approx_equal(pi1(hp.plus), expected)) return false;
      if (!approx_equal(pi2(hp.minus), expected)) return false;
    }
  return true;
}

static void run_lemma_gen(const SuiteConfig& cfg, VerificationReport& rep) {
  for (double theta : cfg.theta_grid) {
    std::function<NCElement(int, int)> e_sphere = [theta](int i, int j) {
      return sphere_matrix_unit(theta, i, j);
    };
    std::function<NCElement(int, int)> w_sphere = [theta](int i, int j) {
      return sphere_matrix_unit_w(theta, i, j);
    };
    rep.add_bool("lemma-gen/sphere/theta=" + fmt(theta), "N=3",
                 lemma_gen_check<NCElement>(e_sphere, w_sphere, 3));
    std::function<CrossedElement(int, int)> e_crossed = [theta](int i, int j) {
      return crossed_matrix_unit(theta, i, j);
    };
    std::function<CrossedElement(int, int)> w_crossed = [theta](int i, int j) {
      return crossed_matrix_unit_w(theta, i, j);
    };
    rep.add_bool("lemma-gen/crossed/theta=" + fmt(theta), "N=3",
                 lemma_gen_check<CrossedElement>(e_crossed, w_crossed, 3));
  }
}

static void run_fiber(const SuiteConfig& cfg, VerificationReport& rep) {
  run_lemma_gen(cfg, rep);
  for (double theta : cfg.theta_grid) {
    const std::string base = "fiber/theta=" + fmt(theta) + "/";
    SesReport ses = ses_exactness_check(theta, SesBounds{});
    rep.add_bool(base + "phi_c_jc_zero", "i,j<=3, |n|<=2", ses.phi_c_jc_zero);
    rep.add_bool(base + "phi_d_jd_zero", "i,j<=3, |n|<=2", ses.phi_d_jd_zero);
    rep.add_bool(base + "quotient_torus_relations", "", ses.quotient_torus_relations);
    rep.add_bool(base + "jc_rank",
                 "rank=" + std::to_string(ses.jc_rank) + ", expected=" +
                     std::to_string(ses.jc_expected_rank),
                 ses.jc_rank == ses.jc_expected_rank);

    AlgebraPresentation pres = AlgebraPresentation::sphere_00(theta);
    std::mt19937_64 rng(cfg.seed ^ std::hash<double>{}(theta));
    int failures = 0;
    std::string first_failure;
    for (int i = 0; i < 100; ++i) {
      NCElement e = random_sphere00_element(pres, rng);
      if (!h_image(e).fiber_check()) {
        if (failures == 0) first_failure = e.to_string();
        ++failures;
      }
    }
    rep.add_numeric(base + "h_fiber_check_failures",
                    failures == 0 ? "100 random elements"
                                  : "first offender: " + first_failure,
                    failures, 0.0);
    rep.add_bool(base + "diagram_commutes", "generators s,t,s*,t*", diagram_commutes(theta));
  }
}

// ---------------------------------------------------------------------------
// ktheory

static void run_ktheory(const SuiteConfig& cfg, VerificationReport& rep) {
  const FGAbelianGroup Z = FGAbelianGroup::free_group(1);

  auto run_data = [&](const SixTermData& data) {
    SixTermSolution sol = solve_six_term(data);
    const std::string base = "ktheory/" + data.name + "/";
    rep.add_bool(base + "g0", "G0=" + sol.g0.to_string(), sol.g0 == Z);
    rep.add_bool(base + "g1", "G1=" + sol.g1.to_string(), sol.g1 == Z);
    rep.add_bool(base + "hexagon_exact", "", sol.exact);
  };

  if (!cfg.preset.empty()) {
    SixTermData data = [&]() {
      for (const std::string& n : six_term_preset_names())
        if (n == cfg.preset) return six_term_preset(cfg.preset);
      std::ifstream in(cfg.preset);
      if (!in) throw std::invalid_argument("preset '" + cfg.preset + "' is neither built in nor a readable file");
      std::stringstream ss;
      ss << in.rdbuf();
      return six_term_from_json(ss.str());
    }();
    run_data(data);
  } else {
    run_data(six_term_preset("s3-quantum"));
    run_data(six_term_preset("s3-classical"));
  }

  // Pimsner-Voiculescu reduced sequence
  {
    auto [k0, k1] = pv_sequence(1, 0, GroupHom::zero(Z, Z));
    rep.add_bool("ktheory/pv/toeplitz", "alpha*=0 -> (K0,K1)=(" + k0.to_string() + "," +
                 k1.to_string() + ")", k0 == Z && k1 == Z);
  }
  {
    auto [k0, k1] = pv_sequence(1, 0, GroupHom::from_rows(Z, Z, {{1}}));
    rep.add_bool("ktheory/pv/identity", "alpha*=id", k0.is_trivial() && k1.is_trivial());
  }
  {
    auto [k0, k1] = pv_sequence(1, 0, GroupHom::from_rows(Z, Z, {{2}}));
    rep.add_bool("ktheory/pv/times_two", "alpha*=2",
                 k0 == FGAbelianGroup::cyclic(2) && k1.is_trivial());
  }

  // Smith normal form property suite
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> dim(1, 8), entry(-20, 20);
  int failures = 0;
  for (int c = 0; c < 500; ++c) {
    int r = dim(rng), cl = dim(rng);
    IntMatrix m(r, cl);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < cl; ++j) m.at(i, j) = entry(rng);
    SmithResult s = smith_normal_form(m);
    bool ok = (s.u * m) * s.v == s.d;
    ok = ok && abs(determinant(s.u)) == 1 && abs(determinant(s.v)) == 1;
    ok = ok && s.u * s.u_inv == IntMatrix::identity(r);
    for (int i = 0; i + 1 < std::min(r, cl); ++i) {
      const Int &a = s.d.at(i, i), &b = s.d.at(i + 1, i + 1);
      if (a == 0 && b != 0) ok = false;
      if (a != 0 && b != 0 && b % a != 0) ok = false;
      if (a < 0) ok = false;
    }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < cl; ++j)
        if (i != j && s.d.at(i, j) != 0) ok = false;
    if (!ok) ++failures;
  }
  rep.add_numeric("ktheory/snf/property_failures", "500 random matrices up to 8x8", failures,
                  0.0);
}

// ---------------------------------------------------------------------------

VerificationReport run(const SuiteConfig& config) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.suite = suite_to_string(config.suite);
  rep.config_echo = config.echo();
  switch (config.suite) {
    case Suite::Relations: run_relations(config, rep); break;
    case Suite::Basis: run_basis(config, rep); break;
    case Suite::Identities: run_identities(config, rep); break;
    case Suite::Iso: run_iso(config, rep); break;
    case Suite::Fiber: run_fiber(config, rep); break;
    case Suite::LemmaGen: run_lemma_gen(config, rep); break;
    case Suite::KTheory: run_ktheory(config, rep); break;
    case Suite::All:
      run_relations(config, rep);
      run_basis(config, rep);
      run_identities(config, rep);
      run_iso(config, rep);
      run_fiber(config, rep);
      run_ktheory(config, rep);
      break;
  }
  rep.sort_records();
  rep.wall_clock_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return rep;
}

}  // namespace qs3
