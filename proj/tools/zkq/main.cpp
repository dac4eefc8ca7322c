// Command-line front end: parses expressions, drives the library, renders
// text tables or deterministic JSON envelopes.  Exit codes: 0 success,
// 1 usage (bad flags or malformed expressions), 2 domain errors.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "zkq/bundles.hpp"
#include "zkq/cohomology.hpp"
#include "zkq/errors.hpp"
#include "zkq/invariants.hpp"
#include "zkq/io.hpp"
#include "zkq/moduli.hpp"
#include "zkq/parse.hpp"
#include "zkq/poisson.hpp"
#include "zkq/star.hpp"
#include "zkq/star_matrix.hpp"

namespace {

using namespace zkq;

// Every command renders a text body and a JSON payload; --format picks one,
// --out redirects it to a file.  Text-mode warnings go to stderr so table
// bodies stay clean; JSON mode carries them in the envelope.
struct Emit {
  std::string format = "text";
  std::string out_file;
  std::string command;

  void operator()(ordered_json payload, const std::vector<std::string>& warnings,
                  std::string text) const {
    std::string rendered;
    if (format == "json") {
      rendered = render(make_envelope(command, std::move(payload), warnings));
    } else {
      rendered = std::move(text);
      if (!rendered.empty() && rendered.back() != '\n') rendered += '\n';
    }
    if (out_file.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream os(out_file);
      if (!os) fail(errc::invalid_argument, "cannot open output file " + out_file);
      os << rendered;
    }
    if (format != "json")
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  }
};

std::string mono_expr(Mono m) { return to_string(LaurentPoly::mono(m.l, m.i, Rational(1))); }

ordered_json json_of_mono(Mono m) {
  ordered_json j;
  j["z"] = m.l;
  j["u"] = m.i;
  return j;
}

ordered_json json_of_matrix(const StarMatrix2& t) {
  ordered_json j = ordered_json::array();
  for (int r = 0; r < 2; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < 2; ++c) row.push_back(json_of(t.e[r][c]));
    j.push_back(std::move(row));
  }
  return j;
}

std::string text_matrix(const std::string& name, const StarMatrix2& t) {
  std::string s;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      s += name + "[" + std::to_string(r) + "][" + std::to_string(c) +
           "] = " + to_string(t.e[r][c]) + "\n";
  return s;
}

std::optional<CechWindow> parse_window_spec(const std::string& s) {
  if (s.empty()) return std::nullopt;
  CechWindow w;
  char a = 0, b = 0, c = 0;
  std::istringstream is(s);
  if (!(is >> w.z_lo >> a >> w.z_hi >> b >> w.u_lo >> c >> w.u_hi) || a != ':' || b != ':' ||
      c != ':' || !(is >> std::ws).eof())
    throw CLI::ValidationError("--window", "expected z_lo:z_hi:u_lo:u_hi");
  return w;
}

// All sign patterns {0, 1, -1}^m except all-zero, slot 0 most significant,
// digit order 0 < 1 < -1.  Deterministic enumeration for sweeps.
std::vector<std::vector<Rational>> sign_patterns(int m) {
  std::vector<std::vector<Rational>> out;
  std::vector<int> digit(m, 0);
  for (;;) {
    int p = m - 1;
    for (; p >= 0; --p) {
      if (digit[p] < 2) {
        ++digit[p];
        break;
      }
      digit[p] = 0;
    }
    if (p < 0) break;
    std::vector<Rational> w(m);
    for (int t = 0; t < m; ++t)
      w[t] = digit[t] == 0 ? Rational(0) : digit[t] == 1 ? Rational(1) : Rational(-1);
    out.push_back(std::move(w));
  }
  return out;
}

std::string point_repr(const std::vector<Rational>& w) {
  std::string s;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) s += ",";
    s += w[t].str();
  }
  return s;
}

CLI::App* sub(CLI::App* parent, const std::string& name, const std::string& desc) {
  CLI::App* s = parent->add_subcommand(name, desc);
  s->fallthrough();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"exact star products, bundle moduli, and instanton charges on the local surfaces "
               "Z_k = Tot(O(-k) -> P^1)"};
  app.require_subcommand(1);

  Emit emit;
  emit.command = "zkq";
  for (int a = 1; a < argc; ++a) emit.command += std::string(" ") + argv[a];

  app.add_option("--format", emit.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", emit.out_file, "write the result to FILE instead of stdout");

  // ---- poisson --------------------------------------------------------------
  CLI::App* poisson = app.add_subcommand("poisson", "Poisson structures on Z_k");
  poisson->require_subcommand(1);
  poisson->fallthrough();

  int pg_k = 1;
  {
    CLI::App* c = sub(poisson, "gens", "generators of the Poisson structures on Z_k");
    c->add_option("--k", pg_k, "surface degree")->required();
    c->callback([&] {
      auto gens = poisson_generators(pg_k);
      ordered_json pay;
      pay["k"] = pg_k;
      ordered_json arr = ordered_json::array();
      std::string text;
      for (const auto& g : gens) {
        arr.push_back(json_of(g));
        text += to_string(g) + "\n";
      }
      pay["generators"] = std::move(arr);
      emit(std::move(pay), {}, text);
    });
  }

  int pc_k = 1;
  std::string pc_sigma;
  {
    CLI::App* c = sub(poisson, "classify", "degeneracy divisor classification of sigma");
    c->add_option("--k", pc_k, "surface degree")->required();
    c->add_option("--sigma", pc_sigma, "first-chart Poisson coefficient")->required();
    c->callback([&] {
      PoissonStructure s(pc_k, parse_poly(pc_sigma));
      DegeneracyClass dc = degeneracy_class(s);
      bool tangent = is_tangent_to_fiber(s);
      ordered_json pay;
      pay["k"] = pc_k;
      pay["sigma_u"] = json_of(s.sigma_u());
      ordered_json sv = json_of(s.sigma_v());
      sv["coordinates"] = "second chart";
      pay["sigma_v"] = std::move(sv);
      pay["tangent_to_fiber"] = tangent;
      pay["contains_zero_section"] = dc.contains_zero_section;
      pay["contains_fiber"] = dc.contains_fiber;
      std::string text = "sigma_U = " + to_string(s.sigma_u()) + "\n" +
                         "sigma_V = " + to_string(s.sigma_v()) +
                         "   (second-chart coordinates)\n" +
                         "tangent to the fiber at infinity: " + (tangent ? "yes" : "no") + "\n" +
                         "degeneracy contains the zero section: " +
                         (dc.contains_zero_section ? "yes" : "no") + "\n" +
                         "degeneracy contains the fiber: " + (dc.contains_fiber ? "yes" : "no") +
                         "\n";
      emit(std::move(pay), {}, text);
    });
  }

  int pd_k = 1, pd_n = 0;
  std::string pd_conv;
  {
    CLI::App* c = sub(poisson, "dim",
                      "dimension of Poisson structures on the n-th neighborhood of the "
                      "zero section: enumeration vs closed form");
    c->add_option("--k", pd_k, "surface degree")->required();
    c->add_option("--n", pd_n, "neighborhood order")->required();
    c->add_option("--convention", pd_conv, "u-degree cutoff convention")
        ->check(CLI::IsMember({"at-most-n", "at-most-n-1"}))
        ->required();
    c->callback([&] {
      UDegreeConvention conv = pd_conv == "at-most-n" ? UDegreeConvention::at_most_n
                                                      : UDegreeConvention::at_most_n_minus_1;
      PoissonDimResult r = poisson_dim_on_neighborhood(pd_k, pd_n, conv);
      ordered_json pay;
      pay["k"] = pd_k;
      pay["n"] = pd_n;
      pay["convention"] = pd_conv;
      pay["enumerated"] = r.enumerated;
      pay["closed_form"] = r.closed_form;
      pay["matches"] = r.matches;
      std::vector<std::string> warnings;
      if (!r.matches)
        warnings.push_back("closed form " + std::to_string(r.closed_form) +
                           " differs from direct enumeration " + std::to_string(r.enumerated) +
                           " for k=" + std::to_string(pd_k) + " under convention " + pd_conv +
                           "; the enumeration is the ground truth");
      std::string text = "enumerated  = " + std::to_string(r.enumerated) + "\n" +
                         "closed form = " + std::to_string(r.closed_form) + "\n" +
                         "matches: " + (r.matches ? "yes" : "no") + "\n";
      emit(std::move(pay), warnings, text);
    });
  }

  // ---- star -----------------------------------------------------------------
  CLI::App* star_cmd = app.add_subcommand("star", "truncated star products");
  star_cmd->require_subcommand(1);
  star_cmd->fallthrough();

  int sm_k = 1, sm_order = 1;
  std::string sm_sigma, sm_chart = "U", sm_f, sm_g;
  {
    CLI::App* c = sub(star_cmd, "mul", "star-multiply two h-series");
    c->add_option("--k", sm_k, "surface degree")->required();
    c->add_option("--sigma", sm_sigma, "first-chart Poisson coefficient")->required();
    c->add_option("--order", sm_order, "h-truncation order")->capture_default_str();
    c->add_option("--chart", sm_chart,
                  "chart whose expansion is used; V reads the operands in second-chart "
                  "coordinates")
        ->check(CLI::IsMember({"U", "V"}))
        ->capture_default_str();
    c->add_option("f", sm_f, "left factor")->required();
    c->add_option("g", sm_g, "right factor")->required();
    c->callback([&] {
      StarContext ctx = StarContext::make(PoissonStructure(sm_k, parse_poly(sm_sigma)), sm_order);
      HbarSeries f = parse_series(sm_f), g = parse_series(sm_g);
      Chart chart = sm_chart == "V" ? Chart::V : Chart::U;
      HbarSeries prod = star_on_chart(ctx, f, g, chart);
      ordered_json pay;
      pay["k"] = sm_k;
      pay["sigma"] = to_string(ctx.sigma.sigma_u());
      pay["order"] = sm_order;
      pay["chart"] = sm_chart;
      pay["f"] = to_string(f);
      pay["g"] = to_string(g);
      pay["product"] = json_of(prod);
      emit(std::move(pay), {}, to_string(prod) + "\n");
    });
  }

  int scc_k = 1, scc_order = 1, scc_maxki = 6;
  std::string scc_sigma;
  {
    CLI::App* c = sub(star_cmd, "check-closure",
                      "star-multiply every pair of global monomials and report whether the "
                      "products stay global");
    c->add_option("--k", scc_k, "surface degree")->required();
    c->add_option("--sigma", scc_sigma, "first-chart Poisson coefficient")->required();
    c->add_option("--order", scc_order, "h-truncation order")->capture_default_str();
    c->add_option("--exhaustive", scc_maxki, "largest k*i in the global-monomial sweep")
        ->capture_default_str();
    c->callback([&] {
      StarContext ctx =
          StarContext::make(PoissonStructure(scc_k, parse_poly(scc_sigma)), scc_order);
      std::vector<Mono> monos;
      for (int i = 0; scc_k * i <= scc_maxki; ++i)
        for (int l = 0; l <= scc_k * i; ++l) monos.push_back(Mono{i, l});
      long pairs = 0, bad = 0;
      struct Witness {
        Mono f, g;
        ClosureReport rep;
      };
      std::optional<Witness> first;
      ordered_json viols = ordered_json::array();
      for (const Mono& a : monos) {
        for (const Mono& b : monos) {
          ++pairs;
          ClosureReport rep = closure_check(ctx, HbarSeries(LaurentPoly::mono(a.l, a.i, 1)),
                                            HbarSeries(LaurentPoly::mono(b.l, b.i, 1)));
          if (rep.closed) continue;
          ++bad;
          if (!first) first = Witness{a, b, rep};
          if (viols.size() < 20) {
            ordered_json v;
            v["f"] = mono_expr(a);
            v["g"] = mono_expr(b);
            v["h_order"] = rep.order;
            v["monomial"] = json_of_mono(rep.witness);
            v["coefficient"] = rep.coeff.str();
            viols.push_back(std::move(v));
          }
        }
      }
      ordered_json pay;
      pay["k"] = scc_k;
      pay["sigma"] = to_string(ctx.sigma.sigma_u());
      pay["order"] = scc_order;
      pay["max_ki"] = scc_maxki;
      pay["side"] = chart_name(ctx.global_side);
      pay["pairs_checked"] = pairs;
      pay["closed"] = (bad == 0);
      pay["violations"] = bad;
      pay["first_witness"] = nullptr;
      std::string text;
      std::vector<std::string> warnings;
      if (bad == 0) {
        text = "closed: every product of global monomials with k*i <= " +
               std::to_string(scc_maxki) + " stays global (side " +
               chart_name(ctx.global_side) + ", " + std::to_string(pairs) + " pairs)\n";
      } else {
        ordered_json fw;
        fw["f"] = mono_expr(first->f);
        fw["g"] = mono_expr(first->g);
        fw["h_order"] = first->rep.order;
        fw["monomial"] = json_of_mono(first->rep.witness);
        fw["coefficient"] = first->rep.coeff.str();
        pay["first_witness"] = std::move(fw);
        text = "escape on side " + std::string(chart_name(ctx.global_side)) + ": " +
               mono_expr(first->f) + " * " + mono_expr(first->g) + " -> monomial " +
               mono_expr(first->rep.witness) + " at h^" + std::to_string(first->rep.order) +
               ", coefficient " + first->rep.coeff.str() + "\n" + "violating pairs: " +
               std::to_string(bad) + " of " + std::to_string(pairs) + "\n";
        if (scc_k == 2 && ctx.sigma.sigma_u().is_constant() && first->rep.order == 2 &&
            first->rep.witness == Mono{0, 1})
          warnings.push_back(
              "the order-2 escape coefficient " + first->rep.coeff.str() +
              " follows this engine's bracket orientation; the opposite orientation "
              "yields the same witness monomial with coefficient " +
              (-first->rep.coeff).str());
      }
      pay["sample_violations"] = std::move(viols);
      emit(std::move(pay), warnings, text);
    });
  }

  // ---- bundle ---------------------------------------------------------------
  CLI::App* bundle = app.add_subcommand("bundle", "gauge reductions of transition data");
  bundle->require_subcommand(1);
  bundle->fallthrough();

  int bn_k = 1, bn_order = 1;
  std::string bn_sigma, bn_f;
  {
    CLI::App* c = sub(bundle, "normalize",
                      "two-sided unit gauge bringing an invertible series to its classical "
                      "monomial");
    c->add_option("--k", bn_k, "surface degree")->required();
    c->add_option("--sigma", bn_sigma, "first-chart Poisson coefficient")->required();
    c->add_option("--order", bn_order, "h-truncation order")->capture_default_str();
    c->add_option("f", bn_f, "series with invertible monomial classical limit")->required();
    c->callback([&] {
      StarContext ctx = StarContext::make(PoissonStructure(bn_k, parse_poly(bn_sigma)), bn_order);
      HbarSeries f = parse_series(bn_f);
      LineBundleNormalization r = line_bundle_normalize(ctx, f);
      bool replay = star(ctx, star(ctx, r.gauge_v, f), r.gauge_u) == r.normal;
      ordered_json pay;
      pay["j"] = r.j;
      pay["normal"] = json_of(r.normal);
      pay["gauge_u"] = json_of(r.gauge_u);
      pay["gauge_v"] = json_of(r.gauge_v);
      pay["replay_ok"] = replay;
      std::string text = "normal  = " + to_string(r.normal) + "\n" +
                         "gauge_u = " + to_string(r.gauge_u) + "\n" +
                         "gauge_v = " + to_string(r.gauge_v) + "\n" +
                         "replay (gauge_v * f * gauge_u == normal): " + (replay ? "ok" : "FAILED") +
                         "\n";
      emit(std::move(pay), {}, text);
    });
  }

  int ber_k = 1, ber_j = 1, ber_order = 1;
  std::string ber_sigma, ber_p;
  {
    CLI::App* c = sub(bundle, "ext-reduce",
                      "reduce an extension-class series into the canonical window");
    c->add_option("--k", ber_k, "surface degree")->required();
    c->add_option("--j", ber_j, "splitting degree")->required();
    c->add_option("--sigma", ber_sigma, "first-chart Poisson coefficient")->required();
    c->add_option("--order", ber_order, "h-truncation order")->capture_default_str();
    c->add_option("p", ber_p, "extension-class series")->required();
    c->callback([&] {
      StarContext ctx =
          StarContext::make(PoissonStructure(ber_k, parse_poly(ber_sigma)), ber_order);
      HbarSeries p = parse_series(ber_p);
      ExtReduction r = ext_reduce(ctx, ber_j, p);
      StarMatrix2 left = StarMatrix2::identity();
      left.e[0][1] = r.beta_v;
      StarMatrix2 right = StarMatrix2::identity();
      right.e[0][1] = -r.b_u;
      bool replay = star_mul(ctx, star_mul(ctx, left, canonical_transition(ber_j, p)), right) ==
                    canonical_transition(ber_j, r.p_reduced);
      ordered_json pay;
      pay["k"] = ber_k;
      pay["j"] = ber_j;
      pay["p"] = to_string(p);
      pay["p_reduced"] = json_of(r.p_reduced);
      pay["b_u"] = json_of(r.b_u);
      pay["beta_v"] = json_of(r.beta_v);
      pay["replay_ok"] = replay;
      std::string text = "p_reduced = " + to_string(r.p_reduced) + "\n" +
                         "b_u       = " + to_string(r.b_u) + "\n" +
                         "beta_v    = " + to_string(r.beta_v) + "\n" +
                         "replay ((1,beta;0,1) T_p (1,-b;0,1) == T_p_reduced): " +
                         (replay ? "ok" : "FAILED") + "\n";
      emit(std::move(pay), {}, text);
    });
  }

  int bf_k = 1, bf_order = 1;
  std::string bf_sigma;
  std::vector<std::string> bf_entries;
  {
    CLI::App* c = sub(bundle, "filter",
                      "clear the lower-left entry of a classically upper-triangular 2x2 "
                      "transition matrix");
    c->add_option("--k", bf_k, "surface degree")->required();
    c->add_option("--sigma", bf_sigma, "first-chart Poisson coefficient")->required();
    c->add_option("--order", bf_order, "h-truncation order")->capture_default_str();
    c->add_option("entries", bf_entries, "matrix entries t00 t01 t10 t11")
        ->expected(4)
        ->required();
    c->callback([&] {
      StarContext ctx = StarContext::make(PoissonStructure(bf_k, parse_poly(bf_sigma)), bf_order);
      StarMatrix2 t;
      t.e[0][0] = parse_series(bf_entries[0]);
      t.e[0][1] = parse_series(bf_entries[1]);
      t.e[1][0] = parse_series(bf_entries[2]);
      t.e[1][1] = parse_series(bf_entries[3]);
      FiltrationReduction r = filtration_reduce(ctx, t);
      bool replay = star_mul(ctx, star_mul(ctx, r.gauge_v, t), r.gauge_u) == r.reduced;
      ordered_json pay;
      pay["reduced"] = json_of_matrix(r.reduced);
      pay["gauge_u"] = json_of_matrix(r.gauge_u);
      pay["gauge_v"] = json_of_matrix(r.gauge_v);
      pay["replay_ok"] = replay;
      std::string text = text_matrix("reduced", r.reduced) + text_matrix("gauge_u", r.gauge_u) +
                         text_matrix("gauge_v", r.gauge_v) +
                         "replay (gauge_v * T * gauge_u == reduced): " + (replay ? "ok" : "FAILED") +
                         "\n";
      emit(std::move(pay), {}, text);
    });
  }

  // ---- moduli ---------------------------------------------------------------
  CLI::App* moduli = app.add_subcommand("moduli", "first-order moduli of extension classes");
  moduli->require_subcommand(1);
  moduli->fallthrough();

  int ms_k = 1, ms_j = 2;
  {
    CLI::App* c = sub(moduli, "stratify", "leading-zero strata of the moduli window");
    c->add_option("--k", ms_k, "surface degree")->required();
    c->add_option("--j", ms_j, "splitting degree")->required();
    c->callback([&] {
      Stratification st = stratify(ms_k, ms_j);
      ordered_json pay;
      pay["k"] = ms_k;
      pay["j"] = ms_j;
      pay["m"] = st.m;
      ordered_json arr = ordered_json::array();
      std::string text = "m = " + std::to_string(st.m) + "\n";
      for (const Stratum& s : st.strata) {
        ordered_json row;
        row["index"] = s.index;
        row["fiber_dim"] = s.fiber_dim;
        row["pattern"] = s.pattern;
        arr.push_back(std::move(row));
        text += "S" + std::to_string(s.index) + ": fiber dim " + std::to_string(s.fiber_dim) +
                "  (" + s.pattern + ")\n";
      }
      pay["strata"] = std::move(arr);
      pay["endpoint_excluded"] = st.endpoint_excluded;
      if (st.m >= 2) {
        pay["endpoint_charge"] = st.endpoint_charge;
        text += "endpoint (0,...,0,1): charge " + std::to_string(st.endpoint_charge) +
                (st.endpoint_excluded ? " > j, excluded" : " <= j, kept") + "\n";
      }
      emit(std::move(pay), {}, text);
    });
  }

  int mr_k = 1, mr_j = 2;
  std::string mr_sigma, mr_point;
  {
    CLI::App* c = sub(moduli, "rebel", "fiber dimension of the quantized moduli at a point");
    c->add_option("--k", mr_k, "surface degree")->required();
    c->add_option("--j", mr_j, "splitting degree")->required();
    c->add_option("--sigma", mr_sigma, "first-chart Poisson coefficient")->required();
    c->add_option("--point", mr_point, "comma-separated rational coefficients w0,...,w(m-1)")
        ->required();
    c->callback([&] {
      PoissonStructure s(mr_k, parse_poly(mr_sigma));
      ModuliPoint p = make_moduli_point(mr_k, mr_j, parse_rational_list(mr_point));
      int lvl = rebel_level(p, s);
      ordered_json pay;
      pay["k"] = mr_k;
      pay["j"] = mr_j;
      pay["sigma"] = to_string(s.sigma_u());
      ordered_json pt = ordered_json::array();
      for (const Rational& wv : p.w) pt.push_back(wv.str());
      pay["point"] = std::move(pt);
      pay["degeneracy_contains_zero_section"] = degeneracy_class(s).contains_zero_section;
      pay["fiber_dimension"] = fiber_dimension(p);
      pay["rebel_level"] = lvl;
      std::string text = "rebel level = " + std::to_string(lvl) + "\n";
      emit(std::move(pay), {}, text);
    });
  }

  int mo_k = 1, mo_j = 2, mo_deg = -1;
  std::string mo_sigma, mo_point, mo_pprime, mo_qprime;
  {
    CLI::App* c = sub(moduli, "oracle",
                      "brute-force linear-system oracle: fiber dimension at a point, or gauge "
                      "equivalence of two first-order directions");
    c->add_option("--k", mo_k, "surface degree")->required();
    c->add_option("--j", mo_j, "splitting degree")->required();
    c->add_option("--sigma", mo_sigma, "first-chart Poisson coefficient")->required();
    c->add_option("--point", mo_point, "comma-separated rational coefficients w0,...,w(m-1)")
        ->required();
    c->add_option("--pprime", mo_pprime, "first-order direction at the source (length m)");
    c->add_option("--qprime", mo_qprime, "first-order direction at the target (length m)");
    c->add_option("--deg-bound", mo_deg, "gauge polynomial degree bound (-1 = default)")
        ->capture_default_str();
    c->callback([&] {
      PoissonStructure s(mo_k, parse_poly(mo_sigma));
      ModuliPoint p = make_moduli_point(mo_k, mo_j, parse_rational_list(mo_point));
      ordered_json pay;
      pay["k"] = mo_k;
      pay["j"] = mo_j;
      pay["sigma"] = to_string(s.sigma_u());
      ordered_json pt = ordered_json::array();
      for (const Rational& wv : p.w) pt.push_back(wv.str());
      pay["point"] = std::move(pt);
      pay["deg_bound"] = mo_deg;
      std::string text;
      if (!mo_pprime.empty() || !mo_qprime.empty()) {
        if (mo_pprime.empty() || mo_qprime.empty())
          fail(errc::invalid_argument, "--pprime and --qprime must be given together");
        EquivalenceResult r = equivalence_oracle(p, parse_rational_list(mo_pprime),
                                                 parse_rational_list(mo_qprime), s, mo_deg);
        pay["equivalent"] = r.equivalent;
        ordered_json wit = ordered_json::array();
        for (const auto& [name, value] : r.witness) {
          ordered_json e;
          e["name"] = name;
          e["value"] = value.str();
          wit.push_back(std::move(e));
        }
        pay["witness"] = std::move(wit);
        text = std::string("equivalent: ") + (r.equivalent ? "yes" : "no") + "\n";
        for (const auto& [name, value] : r.witness) text += name + " = " + value.str() + "\n";
      } else {
        int fd = fiber_dimension_oracle(p, s, mo_deg);
        pay["fiber_dimension_oracle"] = fd;
        text = "fiber dimension (oracle) = " + std::to_string(fd) + "\n";
      }
      emit(std::move(pay), {}, text);
    });
  }

  // ---- invariants -----------------------------------------------------------
  CLI::App* invariants = app.add_subcommand("invariants", "numerical invariants of bundles");
  invariants->require_subcommand(1);
  invariants->fallthrough();

  int ic_k = 1, ic_j = 0;
  std::string ic_p, ic_window;
  {
    CLI::App* c = sub(invariants, "charge",
                      "width, height, and charge of the bundle with transition "
                      "(z^j, p; 0, z^-j)");
    c->add_option("--k", ic_k, "surface degree")->required();
    c->add_option("--j", ic_j, "splitting degree")->required();
    c->add_option("--p", ic_p, "extension-class polynomial")->required();
    c->add_option("--window", ic_window,
                  "explicit cochain window z_lo:z_hi:u_lo:u_hi (disables auto-stabilization)");
    c->callback([&] {
      BundleData bd{ic_k, ic_j, parse_poly(ic_p)};
      std::optional<CechWindow> win = parse_window_spec(ic_window);
      ChargeBreakdown cb = charge(bd, win);
      ordered_json pay;
      pay["k"] = ic_k;
      pay["j"] = ic_j;
      pay["p"] = to_string(bd.p);
      if (win) {
        ordered_json w;
        w["z_lo"] = win->z_lo;
        w["z_hi"] = win->z_hi;
        w["u_lo"] = win->u_lo;
        w["u_hi"] = win->u_hi;
        pay["window"] = std::move(w);
      } else {
        pay["window"] = "auto";
      }
      pay["width"] = cb.width;
      pay["height"] = cb.height;
      pay["epsilon"] = cb.epsilon;
      pay["charge"] = cb.total;
      std::string text = "width   = " + std::to_string(cb.width) + "\n" +
                         "height  = " + std::to_string(cb.height) + "\n" +
                         "epsilon = " + std::to_string(cb.epsilon) + "\n" +
                         "charge  = " + std::to_string(cb.total) + "\n";
      emit(std::move(pay), {}, text);
    });
  }

  {
    CLI::App* c = sub(invariants, "table1",
                      "invariant table for the standard extension monomials at k=1, j=3");
    c->callback([&] {
      std::vector<ChargeTableRow> rows = reference_charge_table();
      ordered_json arr = ordered_json::array();
      std::vector<std::string> warnings;
      std::ostringstream text;
      text << std::left << std::setw(10) << "p" << std::right << std::setw(6) << "width"
           << std::setw(8) << "height" << std::setw(8) << "charge" << "\n";
      for (const ChargeTableRow& row : rows) {
        ChargeBreakdown cb = charge(BundleData{1, 3, row.p});
        ordered_json r;
        r["p"] = row.label;
        r["width"] = cb.width;
        r["height"] = cb.height;
        r["charge"] = cb.total;
        ordered_json ref;
        ref["width"] = row.width;
        ref["height"] = row.height;
        ref["charge"] = row.charge;
        r["reference"] = std::move(ref);
        bool additive = reference_row_is_additive(row);
        r["reference_additive"] = additive;
        r["matches_reference"] =
            cb.width == row.width && cb.height == row.height && cb.total == row.charge;
        arr.push_back(std::move(r));
        text << std::left << std::setw(10) << row.label << std::right << std::setw(6) << cb.width
             << std::setw(8) << cb.height << std::setw(8) << cb.total << "\n";
        if (!additive)
          warnings.push_back("row " + row.label + ": the reference width " +
                             std::to_string(row.width) +
                             " breaks width + height = charge there (" + std::to_string(row.width) +
                             "+" + std::to_string(row.height) + " != " +
                             std::to_string(row.charge) + "); the computed width " +
                             std::to_string(cb.width) + " restores the identity and the charge " +
                             "matches the reference");
      }
      ordered_json pay;
      pay["k"] = 1;
      pay["j"] = 3;
      pay["rows"] = std::move(arr);
      emit(std::move(pay), warnings, text.str());
    });
  }

  // ---- coh ------------------------------------------------------------------
  CLI::App* coh = app.add_subcommand("coh", "section modules of twists on Z_k");
  coh->require_subcommand(1);
  coh->fallthrough();

  int cg_k = 1, cg_twist = 0;
  {
    CLI::App* c = sub(coh, "gens", "module generators and relation count for a twist");
    c->add_option("--k", cg_k, "surface degree")->required();
    c->add_option("--twist", cg_twist, "twist degree")->required();
    c->callback([&] {
      H0Presentation pres = h0_generators(cg_k, cg_twist);
      bool ok = h0_relations_check(cg_k, cg_twist);
      ordered_json pay;
      pay["k"] = cg_k;
      pay["twist"] = pres.twist;
      pay["q"] = pres.q;
      pay["nu"] = pres.nu;
      ordered_json arr = ordered_json::array();
      std::string glist;
      for (const LaurentPoly& g : pres.generators) {
        arr.push_back(to_string(g));
        if (!glist.empty()) glist += ", ";
        glist += to_string(g);
      }
      pay["generators"] = std::move(arr);
      pay["relation_count"] = pres.relation_count;
      pay["relations_ok"] = ok;
      std::string text = "generators (" + std::to_string(pres.generators.size()) + "): " + glist +
                         "\n" + "relations: " + std::to_string(pres.relation_count) +
                         (ok ? " (all hold)" : " (CHECK FAILED)") + "\n";
      emit(std::move(pay), {}, text);
    });
  }

  int cb_k = 1, cb_twist = 0, cb_ucut = 0;
  {
    CLI::App* c = sub(coh, "basis", "monomial basis of the sections of a twist, truncated in u");
    c->add_option("--k", cb_k, "surface degree")->required();
    c->add_option("--twist", cb_twist, "twist degree")->required();
    c->add_option("--ucut", cb_ucut, "largest u-power kept")->required();
    c->callback([&] {
      std::vector<Mono> basis = h0_monomial_basis(cb_k, cb_twist, cb_ucut);
      ordered_json pay;
      pay["k"] = cb_k;
      pay["twist"] = cb_twist;
      pay["ucut"] = cb_ucut;
      pay["count"] = basis.size();
      ordered_json arr = ordered_json::array();
      std::string text;
      for (Mono m : basis) {
        arr.push_back(json_of_mono(m));
        text += mono_expr(m) + "\n";
      }
      pay["monomials"] = std::move(arr);
      emit(std::move(pay), {}, text);
    });
  }

  // ---- sweep ----------------------------------------------------------------
  std::vector<int> sw_ks, sw_js;
  std::vector<std::string> sw_sigmas, sw_points;
  int sw_deg = -1;
  {
    CLI::App* c = app.add_subcommand(
        "sweep", "run the Toeplitz rule and the linear-system oracle over a (k, j, sigma) grid "
                 "and aggregate agreement");
    c->fallthrough();
    c->add_option("--k", sw_ks, "surface degrees")->delimiter(',');
    c->add_option("--j", sw_js, "splitting degrees")->delimiter(',');
    c->add_option("--sigma", sw_sigmas, "first-chart Poisson coefficients")->delimiter(';');
    c->add_option("--point", sw_points,
                  "explicit points w0,...,w(m-1), ';'-separated (default: all sign patterns)")
        ->delimiter(';');
    c->add_option("--deg-bound", sw_deg, "oracle degree bound (-1 = default)")
        ->capture_default_str();
    c->callback([&] {
      struct CellKey {
        int k, j;
        std::string sigma;
        std::string str() const {
          return "k=" + std::to_string(k) + " j=" + std::to_string(j) + " sigma=" + sigma;
        }
      };
      std::vector<CellKey> cells;
      for (int k : sw_ks)
        for (int j : sw_js)
          for (const std::string& sg : sw_sigmas) cells.push_back({k, j, sg});
      std::sort(cells.begin(), cells.end(), [](const CellKey& a, const CellKey& b) {
        return a.str() < b.str();
      });

      ordered_json cell_arr = ordered_json::array();
      long tot_points = 0, tot_agree = 0, tot_disagree = 0, tot_excluded = 0, tot_errors = 0;
      std::string text;
      for (const CellKey& cell : cells) {
        ordered_json cj;
        cj["key"] = cell.str();
        cj["k"] = cell.k;
        cj["j"] = cell.j;
        cj["sigma"] = cell.sigma;
        long points = 0, agree = 0, disagree = 0, errors = 0, excluded = 0;
        ordered_json disagreements = ordered_json::array();
        // distinct error messages with a count each, keyed for determinism
        std::map<std::string, long> errmap;
        try {
          PoissonStructure s(cell.k, parse_poly(cell.sigma));
          int m = moduli_window_size(cell.k, cell.j);
          std::vector<std::vector<Rational>> pts;
          if (sw_points.empty()) {
            pts = sign_patterns(m);
          } else {
            for (const std::string& ps : sw_points) pts.push_back(parse_rational_list(ps));
          }
          for (const std::vector<Rational>& w : pts) {
            try {
              ModuliPoint p = make_moduli_point(cell.k, cell.j, w);
              if (is_excluded_endpoint(p)) {  // not a moduli point: stratum dropped by charge
                ++excluded;
                continue;
              }
              ++points;
              int lvl = rebel_level(p, s);
              int orc = fiber_dimension_oracle(p, s, sw_deg);
              if (lvl == orc) {
                ++agree;
              } else {
                ++disagree;
                if (disagreements.size() < 10) {
                  ordered_json d;
                  d["point"] = point_repr(w);
                  d["rebel_level"] = lvl;
                  d["oracle"] = orc;
                  disagreements.push_back(std::move(d));
                }
              }
            } catch (const DomainError& e) {
              ++errors;
              ++errmap[e.what()];
            }
          }
        } catch (const DomainError& e) {
          ++errors;
          ++errmap[e.what()];
        }
        cj["points"] = points;
        cj["agree"] = agree;
        cj["disagree"] = disagree;
        cj["excluded"] = excluded;
        cj["errors"] = errors;
        ordered_json errs = ordered_json::array();
        for (const auto& [msg, count] : errmap) {
          ordered_json e;
          e["message"] = msg;
          e["count"] = count;
          errs.push_back(std::move(e));
        }
        cj["error_detail"] = std::move(errs);
        cj["disagreements"] = std::move(disagreements);
        cell_arr.push_back(std::move(cj));
        tot_points += points;
        tot_agree += agree;
        tot_disagree += disagree;
        tot_excluded += excluded;
        tot_errors += errors;
        text += cell.str() + ": points " + std::to_string(points) + ", agree " +
                std::to_string(agree) + ", disagree " + std::to_string(disagree) + ", excluded " +
                std::to_string(excluded) + ", errors " + std::to_string(errors) + "\n";
      }
      ordered_json pay;
      pay["cells"] = std::move(cell_arr);
      ordered_json totals;
      totals["cells"] = cells.size();
      totals["points"] = tot_points;
      totals["agree"] = tot_agree;
      totals["disagree"] = tot_disagree;
      totals["excluded"] = tot_excluded;
      totals["errors"] = tot_errors;
      pay["totals"] = std::move(totals);
      std::string rate = "n/a";
      if (long decided = tot_agree + tot_disagree; decided > 0) {
        long tenths = (1000 * tot_agree + decided / 2) / decided;
        rate = std::to_string(tenths / 10);
        if (tenths % 10 != 0) rate += "." + std::to_string(tenths % 10);
        rate += "%";
      }
      pay["agreement"] = rate;
      text += "total: cells " + std::to_string(cells.size()) + ", points " +
              std::to_string(tot_points) + ", agree " + std::to_string(tot_agree) +
              ", disagree " + std::to_string(tot_disagree) + ", excluded " +
              std::to_string(tot_excluded) + ", errors " + std::to_string(tot_errors) + "\n" +
              "agreement: " + rate + "\n";
      emit(std::move(pay), {}, text);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);                                     // prints the usage message
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
